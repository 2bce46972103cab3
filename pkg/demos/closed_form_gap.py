#!/usr/bin/env python3
"""Where the closed-form dominance test goes wrong: gl(2|2), word εδδε.

Every base of gl(2|2) is visited; for each we compare the general criterion
(tracking highest weights through odd reflections) with the closed form.
Only the bases failing the closed form's hypothesis disagree.
"""

import itertools

from superchar import (
    build_root_datum,
    enumerate_bases,
    is_dominant_integrable,
    is_dominant_integrable_closed,
    satisfies_coro_hypothesis,
    satisfies_pr2,
)

d = build_root_datum("gl", 2, 2)
box = [d.weight(c[:2], c[2:]) for c in itertools.product(range(-2, 3), repeat=4)]

for base in enumerate_bases(d):
    bad = [lam for lam in box
           if is_dominant_integrable(d, base, lam) != is_dominant_integrable_closed(d, base, lam, check=False)]
    pr2 = satisfies_pr2(d, base)
    print(f"{base.word}: pr2={pr2.holds!s:5} hypothesis={satisfies_coro_hypothesis(d, base)!s:5} mismatches={len(bad)}")
    if bad:
        lam = bad[0]
        print(f"    e.g. λ = {lam}: general={is_dominant_integrable(d, base, lam)}, "
              f"closed={is_dominant_integrable_closed(d, base, lam, check=False)}; (Pr2) witness {pr2.witness}")
