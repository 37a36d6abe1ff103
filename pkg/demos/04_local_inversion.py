"""
Local inversion of a map from its orbit
=======================================

Given y on a cycle of F, the recurrence of the orbit y, F(y), F(F(y)), ...
run one step backwards gives x with F(x) = y, without walking the cycle.
"""

import numpy as np

from wordlc import SplitMix64, local_invert, random_map
from wordlc.dynamics import apply_map, decode, detect_period
from wordlc.oracle import cycle_walk_inverse

f = random_map(2, 8, seed=11)            # a permutation of GF(2)^8
y = decode(SplitMix64(0).below(256), 2, 8)

info = detect_period(f, y, 256)
print("period", info.period)

res = local_invert(f, y)
print("x =", res.x, "route", res.route, "terms used", res.terms)
print("F(x) == y:", np.array_equal(apply_map(f, res.x), y))
print("cycle walk agrees:", np.array_equal(res.x, cycle_walk_inverse(f, y, 256)))

# terms used versus period over a few seeds
for s in range(8):
    g = random_map(3, 4, seed=s)
    z = decode(s, 3, 4)
    r = local_invert(g, z)
    print(s, detect_period(g, z, 81).period, r.report.lc, r.terms, r.route)
