"""Command line: ``liepoisson analyze | verify-catalog | shift``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import catalog_bundled, find_entries, verify_all
from .catalog.entry import CatalogError
from .catalog.verify import ClaimResult
from .commutative import (
    _prune,
    completeness_certificate,
    mf_algebra,
    vergne_generators,
)
from .invariants import (
    fundamental_semiinvariant,
    homogeneous_invariants,
    index_of,
    is_invariant,
    singular_locus_codim,
    trdeg,
)
from .liealg import (
    LieAlgebraError,
    ideal_flag,
    invariant_symmetric_form,
    lie_load,
    parse_dual_point,
)
from .polycore import Budget, GroebnerBudgetExceeded, ParseError, PolyError, poly_parse
from .regularity import frobenius_semiradical, is_square_integrable, stabilizer_at

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_SEED = 42


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    seed: int = DEFAULT_SEED
    degree_cap: int = 5
    budget: Budget = field(default_factory=Budget)
    output: str = "text"
    parallelism: int = 1
    timings: bool = False

    def __post_init__(self):
        if self.degree_cap < 1 or self.parallelism < 1 or self.seed < 0:
            raise ValueError("seed must be >= 0; degree cap and jobs must be positive")


def load_algebra(path):
    try:
        spec = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(spec, dict):
        raise InputError(f"{path}: expected a JSON object")
    return lie_load(spec)


def _fmt(polys):
    return ", ".join(str(f) for f in polys) if polys else "(none)"


def _basis(sub):
    return "<" + ", ".join(str(f) for f in sub.linear_forms()) + ">" if sub.dim else "0"


class _Rows:
    def __init__(self):
        self.rows = []
        self.budget_hit = False

    def add(self, claim, fn, status="ok"):
        t0 = time.perf_counter()
        try:
            detail = fn()
        except GroebnerBudgetExceeded as exc:
            self.budget_hit = True
            status, detail = "skipped", f"budget exceeded: {exc}"
        self.rows.append(ClaimResult(claim, status, str(detail), (time.perf_counter() - t0) * 1000))

    def skip(self, claim, why):
        self.rows.append(ClaimResult(claim, "skipped", why, 0.0))


# --------------------------------------------------------------- analyze


def cmd_analyze(L, cfg):
    out = _Rows()
    rep = index_of(L)
    out.add("dim", lambda: L.n)
    out.add("index", lambda: rep.index)
    out.add("c", lambda: rep.c)
    if L.is_abelian():
        out.add("poisson_structure", lambda: "trivial (abelian): every polynomial is invariant")
        out.add("p", lambda: "1")
        out.add("Y", lambda: "S(g), the whole symmetric algebra")
        return out
    p = fundamental_semiinvariant(L)
    out.add("p", lambda: p.normalized())
    out.add("singularity", lambda: "singular" if p.degree() > 0 else "nonsingular")
    out.add("cod", lambda: singular_locus_codim(L, cfg.budget))
    out.add("center", lambda: _basis(L.center()))
    fro = frobenius_semiradical(L, cfg.seed)
    out.add("F", lambda: f"{_basis(fro.F)} (dim {fro.F.dim}, "
            f"{'commutative' if fro.is_commutative else 'non-commutative'})")
    out.add("sq_i", lambda: is_square_integrable(L))
    out.add("quadratic", lambda: _form_text(invariant_symmetric_form(L, cfg.seed)))
    gens = []
    for d in range(1, cfg.degree_cap + 1):
        basis = [f.normalized() for f in homogeneous_invariants(L, d)]
        gens.extend(basis)
        out.add(f"Y_{d}", lambda basis=basis: _fmt(basis))
    out.add(f"Y generators (degree <= {cfg.degree_cap})", lambda: _fmt(_prune(gens, budget=cfg.budget)))
    if L.is_nilpotent():
        V = vergne_generators(L, ideal_flag(L), cfg.degree_cap, cfg.budget)
        out.add("vergne", lambda: _fmt(V.gens))
        out.add("vergne.certificate", lambda: _cert_text(completeness_certificate(L, V.gens, cfg.budget)))
    else:
        out.skip("vergne", "needs a nilpotent algebra")
    return out


def _form_text(B):
    if B is None:
        return "no nondegenerate invariant symmetric form"
    return "witness " + json.dumps([[str(v) for v in row] for row in B])


def _cert_text(cert):
    parts = [f"trdeg {cert.trdeg} of c = {cert.c_g}",
             "complete" if cert.is_complete else "not complete"]
    if cert.jacobian_locus_codim is not None:
        parts.append(f"Jacobian locus codim {cert.jacobian_locus_codim}")
    if cert.is_strongly_complete is not None:
        parts.append("strongly complete" if cert.is_strongly_complete else "strong completeness not certified")
    return "; ".join(parts + cert.notes)


# ----------------------------------------------------------------- shift


def read_gens(path, L):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    if text.lstrip().startswith("["):
        items = json.loads(text)
    else:
        items = [ln.strip() for ln in text.splitlines()]
        items = [s for s in items if s and not s.startswith("#")]
    return [poly_parse(s, L.ring) for s in items]


def cmd_shift(L, xi_text, gens, cfg):
    out = _Rows()
    xi = parse_dual_point(xi_text, L)
    if gens is None:
        inv = [f.normalized() for d in range(1, cfg.degree_cap + 1) for f in homogeneous_invariants(L, d)]
        gens = _prune(inv, budget=cfg.budget)
    bad = [f for f in gens if not is_invariant(L, f)]
    if bad:
        raise InputError(f"not invariant: {_fmt(bad)}")
    rep = index_of(L)
    out.add("xi", lambda: "(" + ", ".join(str(v) for v in xi) + ")")
    out.add("regular", lambda: stabilizer_at(L, xi).regular)
    out.add("generators", lambda: _fmt(gens))
    if not any(xi):
        out.add("degenerate", lambda: "xi = 0: the shifts are the generators themselves, Y_0 = Y")
    A = mf_algebra(L, gens, xi)
    out.add("shifts", lambda: _fmt(A.gens))
    out.add("commutative", lambda: A.flags["commutative"])
    td = trdeg(L, A.gens, upper_bound=rep.c).value
    bound = rep.c - fundamental_semiinvariant(L).degree()
    out.add("trdeg", lambda: td)
    out.add("complete", lambda: td == rep.c)
    rel = "equality" if td == bound else ("strict inequality" if td < bound else "exceeds bound")
    out.add("theorem21", lambda: f"trdeg {td} vs c - deg p = {bound}: {rel}")
    return out


# ------------------------------------------------------------ verify-catalog


def cmd_verify_catalog(ids, cfg):
    entries = catalog_bundled()
    if ids:
        try:
            entries = find_entries(entries, ids)
        except KeyError as exc:
            raise InputError(f"unknown catalog id {exc.args[0]}") from None
    return verify_all(entries, cfg.seed, cfg.parallelism, cfg.degree_cap, cfg.budget)


# ------------------------------------------------------------------ driver


def _emit_rows(cmd, rows, cfg, extra):
    if cfg.output == "machine":
        doc = {"command": cmd, **extra, "seed": cfg.seed,
               "claims": [r.to_dict(cfg.timings) for r in rows]}
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    width = max((len(r.claim) for r in rows), default=0)
    for r in rows:
        mark = "" if r.status == "ok" else f"[{r.status}] "
        print(f"{r.claim:<{width}}  {mark}{r.detail}")


def _emit_summary(summary, cfg):
    if cfg.output == "machine":
        doc = {"command": "verify-catalog", "seed": cfg.seed, **summary.to_dict(cfg.timings)}
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    for r in summary.reports:
        n = r.counts()
        verdict = "pass" if r.ok else "FAIL"
        line = f"{r.key:<17} {verdict}  {n['pass']} passed, {n['fail']} failed, {n['skipped']} skipped"
        if cfg.timings:
            line += f"  ({r.elapsed_ms / 1000:.1f}s)"
        print(line)
        for c in r.claims:
            if c.status == "fail":
                print(f"    {c.claim}: {c.detail}")
    for c in summary.cross:
        print(f"{c.claim:<28} {c.status}  {c.detail}")
    t = summary.counts()
    print(f"total: {t['pass']} passed, {t['fail']} failed, {t['skipped']} skipped")


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="liepoisson", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"random seed (default: $LPK_SEED, else {DEFAULT_SEED})")
    common.add_argument("--degree-cap", type=_positive, default=5)
    common.add_argument("--groebner-max-pairs", type=_positive, default=Budget().max_pairs)
    common.add_argument("--groebner-max-degree", type=_positive, default=Budget().max_degree)
    common.add_argument("--output", choices=("text", "machine"), default="text")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--timings", action="store_true", help="report elapsed times")
    sub = ap.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="invariants of an algebra file")
    a.add_argument("file")
    v = sub.add_parser("verify-catalog", parents=[common], help="replay the bundled catalog")
    v.add_argument("ids", nargs="*")
    s = sub.add_parser("shift", parents=[common], help="argument-shift subalgebra at xi")
    s.add_argument("file")
    s.add_argument("--xi", required=True, help='coordinates "a1,...,an" or a dual basis vector "x7*"')
    s.add_argument("--gens", help="file of invariants (one per line or a JSON list)")
    return ap


def config_from_args(args):
    seed = args.seed
    if seed is None:
        env = os.environ.get("LPK_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise InputError(f"LPK_SEED is not an integer: {env!r}") from None
        else:
            seed = DEFAULT_SEED
    try:
        return CliConfig(seed, args.degree_cap,
                         Budget(args.groebner_max_pairs, args.groebner_max_degree),
                         args.output, args.jobs, args.timings)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "verify-catalog":
            summary = cmd_verify_catalog(args.ids, cfg)
            _emit_summary(summary, cfg)
            if summary.failures:
                return EXIT_FAIL
            return EXIT_BUDGET if summary.budget_exceeded else EXIT_OK
        L = load_algebra(args.file)
        if args.command == "analyze":
            out = cmd_analyze(L, cfg)
            extra = {"file": args.file}
        else:
            gens = read_gens(args.gens, L) if args.gens else None
            out = cmd_shift(L, args.xi, gens, cfg)
            extra = {"file": args.file, "xi": args.xi}
        _emit_rows(args.command, out.rows, cfg, extra)
        return EXIT_BUDGET if out.budget_hit else EXIT_OK
    except (InputError, CatalogError, LieAlgebraError, ParseError, PolyError, json.JSONDecodeError) as exc:
        print(f"liepoisson: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GroebnerBudgetExceeded as exc:
        print(f"liepoisson: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
