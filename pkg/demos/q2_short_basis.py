#!/usr/bin/env python3
"""Short-basis elements of q(2) and the Clifford factors on their coefficients."""

import itertools

from superchar import build_root_datum, ch_xi_C, compute_b, default_base, is_dominant_integrable, psi

d = build_root_datum("q", 2)
base = default_base(d)

for a, b in itertools.product(range(4), repeat=2):
    lam = d.weight((a, b))
    if not is_dominant_integrable(d, base, lam):
        continue
    s = compute_b(d, base, lam)
    print(f"b_{lam} = {s.element}")
    # away from 0 the odd Cartan acts by a nondegenerate Clifford algebra,
    # so ψ₋ kills every b_λ
    print(f"    ch_ξ C_λ = {ch_xi_C(d, lam)},  ψ₋(b_λ) = {psi(s.element, '-') or 0}")

print("\n(1,1) dominant integrable?", is_dominant_integrable(d, base, d.weight((1, 1))))
