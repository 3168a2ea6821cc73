"""The diamond algebra: Poisson center, argument shifts and g-stability.

Run with ``python3 notebooks/01_diamond.py``.
"""

from liepoisson import lie_load, poly_parse
from liepoisson.commutative import completeness_certificate, g_stability, mf_algebra
from liepoisson.invariants import index_of, invariant_basis_up_to_degree, singular_locus_codim
from liepoisson.regularity import stabilizer_at

L = lie_load({"basis": ["t", "x", "y", "z"], "brackets": [[1, 2, "-x"], [1, 3, "y"], [2, 3, "z"]]})


def P(s):
    return poly_parse(s, L.ring)


rep = index_of(L)
print(f"index {rep.index}, c = {rep.c}, codim of the singular locus {singular_locus_codim(L)}")

# the invariants of degree <= 2: z, z^2 and the Casimir xy - tz
for f in invariant_basis_up_to_degree(L, 2):
    print("  invariant:", f)

Y = [P("z"), P("x*y - t*z")]
for label, xi in [("z*", (0, 0, 0, 1)), ("x*", (0, 1, 0, 0))]:
    s = stabilizer_at(L, xi)
    A = mf_algebra(L, Y, xi)
    cert = completeness_certificate(L, A)
    print(f"\nxi = {label}: regular {s.regular}, stabilizer dim {s.stabilizer.dim}")
    print("  shift generators:", ", ".join(map(str, A)))
    print(f"  commutative {A.flags['commutative']}, trdeg {cert.trdeg} of c = {cert.c_g},"
          f" strongly complete {cert.is_strongly_complete}")
    ok, bad = g_stability(L, A, detail=True)
    note = "" if ok else f" (e.g. {{{bad[0][0]}, {bad[0][1]}}} is not in the algebra)"
    print(f"  g-stable: {ok}{note}")
