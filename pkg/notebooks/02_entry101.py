"""Entry 101 of the catalog end to end: a singular, quadratic nilpotent algebra.

Run with ``python3 notebooks/02_entry101.py``.
"""

from liepoisson import ideal_flag, parse_dual_point, poly_parse
from liepoisson.catalog import catalog_bundled, find_entries, verify_entry
from liepoisson.commutative import (
    completeness_certificate,
    jacobian_locus_codim,
    theorem21_bound_check,
    vergne_generators,
)
from liepoisson.invariants import fundamental_semiinvariant, index_of, theorem14_certificate
from liepoisson.liealg import invariant_symmetric_form
from liepoisson.regularity import frobenius_semiradical

(e,) = find_entries(catalog_bundled(), ["101"])
L = e.build()
r = index_of(L)
print(f"{e.name}: dim {L.n}, index {r.index}, c {r.c}, p = {fundamental_semiinvariant(L)}")
print("F(g) = g:", frobenius_semiradical(L).F.dim == L.n)
print("invariant nondegenerate form exists:", invariant_symmetric_form(L) is not None)

Y = [poly_parse(s, L.ring) for s in ["x6", "x7", "x4^2 - 2*x3*x5 + 2*x2*x6 + 2*x1*x7"]]
cert = theorem14_certificate(L, Y)
print("Y generators certified free:", cert.granted, "-", "; ".join(cert.assumptions))

xi = parse_dual_point("x7*", L)
t21 = theorem21_bound_check(L, Y, xi)
print(f"shift at x7*: trdeg {t21.trdeg}, bound c - deg p = {t21.bound}, equality {t21.equality}")

V = vergne_generators(L, ideal_flag(L))
print("Vergne generators:", ", ".join(map(str, V)))
print("Jacobian locus codim:", jacobian_locus_codim(L, list(V)))
print("strongly complete:", completeness_certificate(L, V).is_strongly_complete)

rep = verify_entry(e)
print(f"\ncatalog claims: {rep.counts()}")
