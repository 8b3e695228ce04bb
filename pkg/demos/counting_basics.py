"""Tour of the exact tuple counting primitives.

A Sidon 4-tuple of A is an ordered (a, b, c, d) in A^4 with
a + b = c + d and {a, b} disjoint from {c, d}.  Repeats inside a
side (a = b) count.  Every count below is exact integer arithmetic.
"""

from sidon import (
    build_multigraph,
    check_supersaturation,
    count_sidon_tuples,
    essential_count,
    is_sidon,
    s_restricted,
    vertex_stats,
)

a = [1, 2, 3, 4]
print("A =", a)
print("ordered tuples:", count_sidon_tuples(a))
print("essential (unordered, halved):", essential_count(a))
print("is_sidon:", is_sidon(a))

# Ordered counts are always multiples of 4: swapping within a side
# and swapping the sides are free symmetries.
assert count_sidon_tuples(a) % 4 == 0

print()
print("per-vertex counts s_A(v):")
stats = vertex_stats(a)
for v in a:
    print("  s(%d) = %d" % (v, stats.get(v)))

# The halving identity: for degenerate-free sets (no tuple whose
# support has only three distinct values), s restricted to v in an
# outer slot is exactly half of s_A(v).
b = [1, 2, 6, 7, 9]  # 1 + 7 = 2 + 6, and no sum is twice a member
sb = vertex_stats(b)
print()
print("B =", b)
for v in b:
    half = 2 * s_restricted(b, b, v)
    assert half == sb.get(v)
    print("  2 * s(v,B,v) = %d = s_B(v)" % half)

# It genuinely needs that hypothesis. 11 + 33 = 22 + 22, so (22,22,11,33)
# is a tuple with three distinct values and the identity breaks at 22.
c = [1, 2, 5, 11, 22, 33]
print("degenerate example C =", c)
print("  at v=22: 2 * s(v,C,v) = %d but s_C(v) = %d"
      % (2 * s_restricted(c, c, 22), vertex_stats(c).get(22)))

# Supersaturation: once |A| * |U| is large the multigraph H^U(A) has
# many edges.  check_supersaturation evaluates the exact inequality.
ground_n = 36
big = list(range(1, 31))
u = list(range(1, 37))
report = check_supersaturation(big, u, ground_n)
print()
print("supersaturation on n=%d, |A|=%d, |U|=%d:" % (ground_n, len(big), len(u)))
print("  precondition |A||U| >= 6n:", report.precondition)
print("  holds:", report.holds)

graph = build_multigraph(big, u)
total = sum(graph.mult.values())
print("  multigraph edges (with multiplicity):", total)
