"""Entry 150: a nonsingular algebra whose Poisson center is not polynomial.

Run with ``python3 notebooks/03_entry150.py``.
"""

from liepoisson import ideal_flag
from liepoisson.catalog import catalog_bundled, find_entries
from liepoisson.commutative import completeness_certificate, in_subalgebra, verify_relation, vergne_generators
from liepoisson.invariants import invariant_basis_up_to_degree, theorem13_tests
from liepoisson.regularity import frobenius_semiradical

(e,) = find_entries(catalog_bundled(), ["150"])
L = e.build()
defs = e.definitions(L.ring)

fro = frobenius_semiradical(L)
print("F(g):", [str(L.linear_form(v)) for v in fro.F.basis], "commutative:", fro.is_commutative)
print("invariants of degree <= 2:", ", ".join(map(str, invariant_basis_up_to_degree(L, 2))))

t13 = theorem13_tests(L)
print(f"3i + 2 deg p = {t13.lhs1}, n + 2 dim Z = {t13.rhs1}; not coregular: {t13.not_coregular}")
for reason in t13.reasons:
    print("  ", reason)

for rel in e.expected["relations"]:
    print(f"relation {rel} = 0:", verify_relation(defs, rel, L.ring))

M = e.polys("M", L.ring, defs)
cert = completeness_certificate(L, M)
print(f"M: Jacobian locus codim {cert.jacobian_locus_codim}, strongly complete {cert.is_strongly_complete}")
V = vergne_generators(L, ideal_flag(L))
print("V(g) inside M:", all(in_subalgebra(f, M, "groebner") for f in V))
