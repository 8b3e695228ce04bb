"""Extremal Sidon sets: exhaustive maxima against the two classical
constructions.

Phi(n) is the largest Sidon subset of {1..n}, computed by exhaustive
branch and bound. The Singer construction gives q+1 elements inside
[q^2+q+1] for a prime power q; Erdos-Turan gives p elements inside
[2p^2] for a prime p. Both land within a whisker of sqrt(n).
"""

import math

from sidon import erdos_turan_set, greedy_sidon, is_sidon, max_sidon, singer_set

print("n   Phi(n)  greedy  Phi/sqrt(n)")
for n in range(8, 41, 4):
    res = max_sidon(n)
    g = len(greedy_sidon(n))
    print("%-3d %-7d %-7d %.3f" % (n, res.phi, g, res.phi / math.sqrt(n)))

print()
for q in (3, 4, 5, 7, 8):
    s = singer_set(q)
    n = q * q + q + 1
    assert is_sidon(s) and len(s) == q + 1
    print("singer(q=%d): %d elements in [%d]  %s" % (q, len(s), n, s))

print()
for p in (5, 7, 11):
    s = erdos_turan_set(p)
    n = 2 * p * p
    assert is_sidon(s) and len(s) == p
    print("erdos_turan(p=%d): %d elements in [%d], density %.3f sqrt(n)"
          % (p, len(s), n, len(s) / math.sqrt(n)))

# A maximum Sidon set found by search, with its witness.
res = max_sidon(30)
print()
print("one maximum Sidon set in [30]:", list(res.witness))
assert is_sidon(res.witness)
