"""Catalog entry files: loading, validation and the checksum manifest."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from ..liealg import LieAlgebraError, Subspace, lie_load
from ..polycore import PolyError, poly_parse
from ..polycore.parse import ParseError

DATA_DIR = Path(__file__).with_name("data")
MANIFEST = "MANIFEST.sha256"

# expected fields that hold lists of polynomials
POLY_LISTS = ("Y", "qy", "M", "M1")
# expected fields that hold lists of linear forms spanning a subspace
BASES = ("F", "cpi")


class CatalogError(ValueError):
    """A catalog file that does not parse or validate."""

    def __init__(self, message, key=None, field_name=None):
        where = []
        if key is not None:
            where.append(f"entry {key}")
        if field_name is not None:
            where.append(f"field {field_name}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.key = key
        self.field = field_name


@dataclass
class CatalogEntry:
    id: int | None
    key: str
    name: str
    aliases: list
    group: str
    algebra: dict
    params: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    source: str | None = None

    def __repr__(self):
        return f"CatalogEntry({self.key}, {self.name})"

    # -- parameters
    def variants(self):
        """(label, env) pairs: one per sample value of the parameters."""
        if not self.params:
            return [("", {})]
        names = sorted(self.params)
        if len(names) != 1:
            raise CatalogError("only one-parameter families are supported", self.key, "params")
        nm = names[0]
        return [(f"{nm}={v}", {nm: _scalar(v)}) for v in self.params[nm]["samples"]]

    def build(self, env=None, check=True):
        """The Lie algebra, with parameter values from ``env``."""
        spec = dict(self.algebra)
        spec["params"] = env or {}
        spec["name"] = self.name
        spec["aliases"] = self.aliases
        return lie_load(spec, check=check)

    # -- expected data as polynomials
    def definitions(self, ring, exact=True):
        """Named polynomials from the "defs" table, in order.

        A def ``[name, expr, divisor]`` stands for expr / divisor, which must
        divide exactly; with ``exact=False`` a failed division keeps the
        numerator, so that everything downstream still parses.
        """
        env = {}
        for item in self.expected.get("defs", []):
            name, expr = item[0], item[1]
            num = poly_parse(expr, ring, env)
            if len(item) > 2:
                den = poly_parse(item[2], ring, env)
                try:
                    num = num.divexact(den)
                except ArithmeticError:
                    if exact:
                        raise PolyError(f"{name}: {expr} is not divisible by {item[2]}") from None
            env[name] = num
        return env

    def polys(self, name, ring, env=None):
        if env is None:
            env = self.definitions(ring)
        return [poly_parse(s, ring, env) for s in self.expected.get(name, [])]

    def subspace(self, name, L):
        return Subspace.span_of(L, [poly_parse(s, L.ring) for s in self.expected[name]])


def _scalar(text):
    v = Fraction(str(text))
    return v.numerator if v.denominator == 1 else v


def _entry_from_dict(d, source=None):
    key = str(d.get("key", d.get("id")))
    for req in ("key", "name", "brackets", "expected"):
        if req not in d:
            raise CatalogError("missing field", key, req)
    algebra = {k: d[k] for k in ("dim", "basis", "brackets") if k in d}
    e = CatalogEntry(
        id=d.get("id"),
        key=key,
        name=d["name"],
        aliases=list(d.get("aliases", [])),
        group=d.get("group", ""),
        algebra=algebra,
        params=d.get("params") or {},
        expected=d["expected"],
        source=source,
    )
    validate(e)
    return e


def validate(e):
    """Every expected polynomial parses and every expected basis is independent."""
    for label, env in e.variants():
        try:
            L = e.build(env, check=False)
        except (LieAlgebraError, ParseError, PolyError) as exc:
            raise CatalogError(str(exc), e.key, "brackets") from None
        ring = L.ring
        try:
            defs = e.definitions(ring, exact=False)
        except (ParseError, PolyError) as exc:
            raise CatalogError(str(exc), e.key, "defs") from None
        for name in POLY_LISTS:
            try:
                e.polys(name, ring, defs)
            except (ParseError, PolyError) as exc:
                raise CatalogError(str(exc), e.key, name) from None
        for name in BASES:
            if name not in e.expected:
                continue
            try:
                sub = e.subspace(name, L)
            except (ParseError, LieAlgebraError) as exc:
                raise CatalogError(str(exc), e.key, name) from None
            if sub.dim != len(e.expected[name]):
                raise CatalogError("basis is linearly dependent", e.key, name)
        for k, item in enumerate(e.expected.get("yxi", [])):
            try:
                [poly_parse(s, ring, defs) for s in item.get("gens", [])]
            except (ParseError, PolyError) as exc:
                raise CatalogError(str(exc), e.key, f"yxi[{k}]") from None
        for k, rel in enumerate(e.expected.get("relations", [])):
            try:
                poly_parse(rel, ring, defs)
            except (ParseError, PolyError) as exc:
                raise CatalogError(str(exc), e.key, f"relations[{k}]") from None
        if "p" in e.expected:
            try:
                poly_parse(e.expected["p"], ring)
            except ParseError as exc:
                raise CatalogError(str(exc), e.key, "p") from None


def _load_file(path):
    text = Path(path).read_text()
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON ({exc})") from None
    items = data if isinstance(data, list) else [data]
    return [_entry_from_dict(d, str(path)) for d in items]


def _sort_key(e):
    return (0, e.id, "") if e.id is not None else (1, 0, e.key)


def catalog_load(path):
    """Load entries from a JSON file (one entry or a list) or a directory of them."""
    path = Path(path)
    if path.is_dir():
        out = []
        for f in sorted(path.glob("*.json")):
            out.extend(_load_file(f))
    else:
        out = _load_file(path)
    keys = [e.key for e in out]
    dup = {k for k in keys if keys.count(k) > 1}
    if dup:
        raise CatalogError(f"duplicate entry keys {sorted(dup)}")
    return sorted(out, key=_sort_key)


def file_digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(directory=DATA_DIR):
    directory = Path(directory)
    lines = [f"{file_digest(f)}  {f.name}" for f in sorted(directory.glob("*.json"))]
    (directory / MANIFEST).write_text("\n".join(lines) + "\n")
    return len(lines)


def check_manifest(directory=DATA_DIR):
    """Names of files whose checksum differs from the manifest (or is missing)."""
    directory = Path(directory)
    listed = {}
    for line in (directory / MANIFEST).read_text().splitlines():
        if line.strip():
            digest, name = line.split(None, 1)
            listed[name.strip()] = digest
    bad = []
    present = {f.name for f in directory.glob("*.json")}
    for name in sorted(present | set(listed)):
        if name not in listed or name not in present or file_digest(directory / name) != listed[name]:
            bad.append(name)
    return bad


_BUNDLED = None


def catalog_bundled():
    """The entries shipped with the package, after a manifest check."""
    global _BUNDLED
    if _BUNDLED is None:
        bad = check_manifest(DATA_DIR)
        if bad:
            raise CatalogError(f"checksum mismatch for {', '.join(bad)}")
        _BUNDLED = catalog_load(DATA_DIR)
    return list(_BUNDLED)


def find_entries(entries, keys):
    """Select entries by key ("101", "diamond"); unknown keys raise KeyError."""
    by_key = {e.key: e for e in entries}
    out = []
    for k in keys:
        k = str(k).lstrip("#")
        if k.isdigit():
            k = str(int(k))
        if k not in by_key:
            raise KeyError(k)
        out.append(by_key[k])
    return out


__all__ = [
    "CatalogEntry",
    "CatalogError",
    "catalog_bundled",
    "catalog_load",
    "check_manifest",
    "find_entries",
    "validate",
    "write_manifest",
]

