"""Exact Sidon 4-tuple counting, vertex statistics, and the
supersaturation multigraph.

A Sidon 4-tuple of a set A is an ordered quadruple (a, b, c, d) of
elements of A with a + b = c + d where {a, b} and {c, d} share no
element.  Quadruples with a == b (so 2a = c + d, a 3-term arithmetic
progression) are not excluded by that definition and are counted.
A is a Sidon set iff it admits no Sidon 4-tuple, equivalently iff all
sums x + y with x <= y in A are distinct.

Counting convention: ordered tuples.  An unordered solution
{a,b}/{c,d} with four distinct values accounts for 8 ordered tuples
(two orientations per side, two side orders); a degenerate solution
{a,a}/{c,d} accounts for 4.  The essential count collapses these
orbits.  The ordered convention is the one under which
s_{A,A}(v) = s_A(v)/2 holds exactly on degenerate-free sets, which the
container machinery relies on.

Sets are plain sorted tuples of ints ("intsets"); everything is exact
integer arithmetic and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


# ---------------------------------------------------------------------------
# ground types

def as_intset(elements, n=None):
    """Normalize an iterable of ints into a sorted duplicate-free tuple.

    Elements must be >= 1, and <= n when n is given.
    """
    out = tuple(sorted({int(e) for e in elements}))
    if out and out[0] < 1:
        raise ValueError("set elements must be >= 1, got %d" % out[0])
    if n is not None and out and out[-1] > n:
        raise ValueError("element %d outside the ground set [1, %d]" % (out[-1], n))
    return out


def sum_profile(a):
    """Pair-sum profile: sum s -> (p, q).

    p counts proper pairs {x, y}, x < y, with x + y == s; q is 1 when
    s == 2x for some member x, else 0.  Two distinct representations of
    the same sum are automatically disjoint, so all tuple counts below
    are closed functions of (p, q).
    """
    a = as_intset(a)
    prof = {}
    for i, x in enumerate(a):
        s = 2 * x
        p, _ = prof.get(s, (0, 0))
        prof[s] = (p, 1)
        for y in a[i + 1:]:
            s = x + y
            p, q = prof.get(s, (0, 0))
            prof[s] = (p + 1, q)
    return prof


def count_sidon_tuples(a, n=None):
    """Number of ordered Sidon 4-tuples with all entries in the set.

    Per sum: picking an ordered pair of distinct representations gives
    4p(p-1) + 4pq ordered tuples (proper reps carry 2 orientations, the
    double carries 1).
    """
    a = as_intset(a, n)
    return sum(4 * p * (p - 1) + 4 * p * q for p, q in sum_profile(a).values())


def essential_count(a, n=None):
    """Orbit count: unordered pairs of distinct same-sum representations.

    Each generic orbit covers 8 ordered tuples, each degenerate orbit 4.
    """
    a = as_intset(a, n)
    return sum(comb(p, 2) + p * q for p, q in sum_profile(a).values())


def is_sidon(a, n=None):
    """True iff the set has no Sidon 4-tuple.

    Equivalent to all sums x + y with x <= y being distinct; exits on
    the first collision.
    """
    a = as_intset(a, n)
    seen = set()
    for i, x in enumerate(a):
        for y in a[i:]:
            s = x + y
            if s in seen:
                return False
            seen.add(s)
    return True


def iter_sidon_tuples(a, n=None):
    """Yield every ordered Sidon 4-tuple of the set, grouped by sum."""
    a = as_intset(a, n)
    by_sum = {}
    for x in a:
        for y in a:
            by_sum.setdefault(x + y, []).append((x, y))
    for s in sorted(by_sum):
        pairs = by_sum[s]
        for x, y in pairs:
            for z, w in pairs:
                if x != z and x != w and y != z and y != w:
                    yield (x, y, z, w)


# ---------------------------------------------------------------------------
# per-vertex statistics

@dataclass(frozen=True)
class VertexStats:
    """Ordered tuple count s(v) per vertex, plus the total over the set."""

    owner: tuple
    s: dict
    total: int

    def get(self, v):
        return self.s.get(v, 0)


def vertex_stats(a, n=None):
    """s(v) = ordered count of Sidon 4-tuples containing v as an entry.

    With W(s) = ordered pairs summing to s, the proper representation
    {v, y} meets 4*(W(v+y) - 2) tuples and the double (v, v) meets
    2*(W(2v) - 1): the partner side ranges over every representation of
    the sum except the one holding v.
    """
    a = as_intset(a, n)
    prof = sum_profile(a)
    w = {s: 2 * p + q for s, (p, q) in prof.items()}
    total = sum(4 * p * (p - 1) + 4 * p * q for p, q in prof.values())
    s_map = {}
    for v in a:
        sv = 2 * (w[2 * v] - 1)
        for y in a:
            if y != v:
                sv += 4 * (w[v + y] - 2)
        s_map[v] = sv
    return VertexStats(owner=a, s=s_map, total=total)


def s_between(u, a, v, n=None, *, sidon_only=False):
    """s(u, A, v): |{(x, y) in A^2 : u + x = y + v}|, ordered pairs.

    The literal definition does not ask (u, x, y, v) to be a valid
    Sidon 4-tuple.  With sidon_only=True the lone possible offender,
    the pair (x, y) = (v, u), is excluded; any other shared entry would
    force u == v.
    """
    if u == v:
        raise ValueError("u and v must differ")
    if u < 1 or v < 1 or (n is not None and max(u, v) > n):
        raise ValueError("u and v must lie in the ground set")
    aset = set(as_intset(a, n))
    d = v - u
    count = sum(1 for x in aset if x - d in aset)
    if sidon_only and u in aset and v in aset:
        count -= 1
    return count


def s_restricted(a, b, v, n=None):
    """s_{A,B}(v): ordered Sidon 4-tuples (x, y, z, w) of A with v in
    {x, w} and both middle entries y, z in B.

    On degenerate-free A this is exactly s(v)/2: of the 8 ordered forms
    of an orbit containing v, four place v in an outer slot.
    """
    a = as_intset(a, n)
    b = as_intset(b, n)
    aset = set(a)
    if not set(b) <= aset:
        raise ValueError("B must be a subset of A")
    if v not in aset:
        raise ValueError("v must be a member of A")
    count = 0
    for y in b:
        s = v + y
        for z in b:
            w = s - z
            if w in aset and v != z and v != w and y != z and y != w:
                count += 1
    for y in b:
        for z in b:
            x = z + v - y
            if x in aset and x != z and x != v and y != z and y != v:
                count += 1
    return count


# ---------------------------------------------------------------------------
# the supersaturation multigraph H^U(A)

@dataclass(frozen=True)
class QuadMultigraph:
    """Multigraph on vertex set A with one edge {a1, a2} per ordered pair
    (u1, u2) in U^2 making (a1, u1, u2, a2) a valid Sidon 4-tuple.

    Only positive multiplicities are stored, keyed (a1, a2) with a1 < a2.
    """

    vertex_set: tuple
    u_set: tuple
    mult: dict

    def multiplicity(self, a1, a2):
        if a1 > a2:
            a1, a2 = a2, a1
        return self.mult.get((a1, a2), 0)

    def edge_count(self):
        return sum(self.mult.values())

    def degree(self, v):
        """Sum of multiplicities of edges at v."""
        return sum(m for pair, m in self.mult.items() if v in pair)


def positive_diff_counts(a):
    """d -> number of pairs of the set at difference d > 0."""
    a = as_intset(a)
    counts = {}
    for i, x in enumerate(a):
        for y in a[i + 1:]:
            d = y - x
            counts[d] = counts.get(d, 0) + 1
    return counts


def pair_multiplicity(a1, a2, u_diff_counts, uset):
    """Multiplicity of edge {a1, a2} against auxiliary set U.

    Candidate pairs are (u2 + d, u2) with d = |a2 - a1|; the single
    invalid candidate (u1, u2) = (a2, a1) exists iff both endpoints lie
    in U.  Depends on U only, never on the hosting vertex set.
    """
    if a1 == a2:
        return 0
    d = abs(a2 - a1)
    m = u_diff_counts.get(d, 0)
    if a1 in uset and a2 in uset:
        m -= 1
    return m


def build_multigraph(a, u, n=None):
    """Construct H^U(A) by difference-indexed grouping, O((|A|+|U|)^2)."""
    a = as_intset(a, n)
    u = as_intset(u, n)
    uset = set(u)
    cu = positive_diff_counts(u)
    mult = {}
    for i, a1 in enumerate(a):
        for a2 in a[i + 1:]:
            m = pair_multiplicity(a1, a2, cu, uset)
            if m > 0:
                mult[(a1, a2)] = m
    return QuadMultigraph(vertex_set=a, u_set=u, mult=mult)


@dataclass(frozen=True)
class SupersaturationReport:
    """Edge count of H^U(A) against the quadratic lower bound.

    Whenever |A|*|U| >= 6n (the precondition), e(H) > |A|^2|U|^2/(12n)
    is guaranteed; holds records the strict inequality as data either way.
    """

    n: int
    size_a: int
    size_u: int
    edges: int
    bound: float
    precondition: bool
    holds: bool


def check_supersaturation(a, u, n):
    """Evaluate e(H^U(A)) > |A|^2 |U|^2 / 12n and its precondition.

    The edge count is e(H) = sum_d cA(d) * cU(d) - C(|A cap U|, 2):
    every A-pair inside U has its self-pairing (a2, a1) discounted, and
    that candidate always exists, so no clamping is needed.
    """
    a = as_intset(a, n)
    u = as_intset(u, n)
    ca = positive_diff_counts(a)
    cu = positive_diff_counts(u)
    edges = sum(c * cu[d] for d, c in ca.items() if d in cu)
    edges -= comb(len(set(a) & set(u)), 2)
    bound = (len(a) ** 2) * (len(u) ** 2) / (12.0 * n)
    pre = len(a) * len(u) >= 6 * n
    return SupersaturationReport(
        n=n,
        size_a=len(a),
        size_u=len(u),
        edges=edges,
        bound=bound,
        precondition=pre,
        holds=edges > bound,
    )
