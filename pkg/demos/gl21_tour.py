#!/usr/bin/env python3
"""A walk through gl(2|1): roots, bases, dominance, short basis, decomposition."""

from superchar import (
    build_root_datum,
    compute_b,
    decompose,
    default_base,
    dynkin_diagram,
    enumerate_Y,
    enumerate_bases,
    in_A,
    is_dominant_integrable,
)

d = build_root_datum("gl", 2, 1)
print(d.name, "roots:", ", ".join(sorted(str(r.weight) + f" ({r.parity})" for r in d.roots)))

print("\nbases reachable by odd reflections:")
for b in enumerate_bases(d):
    print(f"  {b.word:4}  {dynkin_diagram(d, b).ascii()}")

base = default_base(d)
print("\nworking base:", base.word)

lam = d.e(1)
print("dominant integrable:", lam, is_dominant_integrable(d, base, lam), "|", d.d(1), is_dominant_integrable(d, base, d.d(1)))
print("Y for", lam, "=", [str(y) for y in enumerate_Y(d, base, lam)])

b = compute_b(d, base, lam)
print("\nb_ε1 =", b.element, f"(solution_dim {b.solution_dim})")
print("in A:", in_A(d, b.element))

sq = b.element * b.element
print("\nb_ε1² =", sq)
dec = decompose(d, base, sq)
for mu, c in dec.coefficients.items():
    print(f"  {c} · b_{mu}")
print("remainder:", dec.remainder or 0)
