"""Random-subset machinery: W-sampling, the three W-conditions, heavy
vertices, a Janson-style deviation bound, and dependency-graph degrees.

Sampling draws each element of I independently with probability
2/sqrt(lg n); everything else here is an exact recount on given sets.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass

from sidon.core import as_intset, iter_sidon_tuples, s_restricted, vertex_stats


class WSampleError(RuntimeError):
    """Raised when repeated sampling never meets the W-conditions.

    failed lists the condition names ("size", "multiplicity", "heavy")
    of the last attempt; report holds its full WSampleReport.
    """

    def __init__(self, message, failed, report):
        super().__init__(message)
        self.failed = tuple(failed)
        self.report = report


def sample_w(i, params, seed):
    """One independent-inclusion sample W ⊆ I at probability
    2/sqrt(lg n), drawn in ascending element order.
    """
    i = as_intset(i, params.n)
    p = params.w_probability
    if p > 1:
        raise ValueError(
            "inclusion probability %.4f > 1 at n=%d; need n >= 16"
            % (p, params.n))
    rng = random.Random(seed)
    return tuple(u for u in i if rng.random() < p)


def heavy_vertices(i, g, n=None):
    """{v in I : s_I(v) >= g}, with the ordered tuple count."""
    if g < 0:
        raise ValueError("g must be nonnegative")
    i = as_intset(i, n)
    stats = vertex_stats(i)
    return tuple(v for v in i if stats.get(v) >= g)


@dataclass(frozen=True)
class WSampleReport:
    w: tuple
    size_ok: bool            # |W| >= sqrt(n)/lg n
    multiplicity_ok: bool    # max s(u,W,v) <= 8 sqrt(n)/lg^4 n
    heavy_ok: bool           # |S(W)| <= 16 sqrt(n)/lg n
    s_of_w: tuple            # {v in I : s_{I,W}(v) > sqrt(n)/lg^4 n}
    max_s_uv: int
    witness: tuple | None    # lexicographically first argmax pair (u, v)
    size_threshold: float
    multiplicity_threshold: float
    heavy_threshold: float

    @property
    def all_ok(self):
        return self.size_ok and self.multiplicity_ok and self.heavy_ok

    def failed_conditions(self):
        out = []
        if not self.size_ok:
            out.append("size")
        if not self.multiplicity_ok:
            out.append("multiplicity")
        if not self.heavy_ok:
            out.append("heavy")
        return tuple(out)

    def to_json_dict(self):
        return {
            "W": list(self.w),
            "sizeOk": self.size_ok,
            "multiplicityOk": self.multiplicity_ok,
            "heavyOk": self.heavy_ok,
            "SOfW": list(self.s_of_w),
            "maxSUV": self.max_s_uv,
            "witness": list(self.witness) if self.witness else None,
            "sizeThreshold": self.size_threshold,
            "multiplicityThreshold": self.multiplicity_threshold,
            "heavyThreshold": self.heavy_threshold,
        }


def check_w(i, w, params):
    """Exact evaluation of the three W-conditions for W ⊆ I.

    s(u, W, v) counts pairs (x, y) in W^2 with u + x = y + v, which is
    the number of x in W with x - (v - u) also in W; one signed
    difference table over W answers every (u, v) pair.
    """
    i = as_intset(i, params.n)
    w = as_intset(w, params.n)
    iset = set(i)
    if not set(w) <= iset:
        raise ValueError("W must be a subset of I")

    wset = set(w)
    cw = {}
    for x in w:
        for y in w:
            cw[x - y] = cw.get(x - y, 0) + 1

    max_s_uv = 0
    witness = None
    for u in i:
        for v in i:
            if u == v:
                continue
            s = cw.get(v - u, 0)
            if s > max_s_uv:
                max_s_uv, witness = s, (u, v)

    s_of_w = tuple(v for v in i
                   if s_restricted(i, w, v) > params.g_low)

    return WSampleReport(
        w=w,
        size_ok=len(w) >= params.size_small,
        multiplicity_ok=max_s_uv <= 8 * params.g_low,
        heavy_ok=len(s_of_w) <= 16 * params.size_small,
        s_of_w=s_of_w,
        max_s_uv=max_s_uv,
        witness=witness,
        size_threshold=params.size_small,
        multiplicity_threshold=8 * params.g_low,
        heavy_threshold=16 * params.size_small,
    )


@dataclass(frozen=True)
class SamplingHypothesis:
    """Whether I meets the standing assumption of the W-sampling step:
    |I| >= sqrt(n)/sqrt(lg n) and |I_h| > sqrt(n)/lg n."""
    size_ok: bool
    heavy_count_ok: bool

    @property
    def holds(self):
        return self.size_ok and self.heavy_count_ok


def sampling_hypothesis(i, params):
    i = as_intset(i, params.n)
    i_h = heavy_vertices(i, params.g_low)
    return SamplingHypothesis(
        size_ok=len(i) >= params.size_big,
        heavy_count_ok=len(i_h) > params.size_small,
    )


# ---------------------------------------------------------------------------
# Janson bound

@dataclass(frozen=True)
class JansonInput:
    expectation: float
    t: float
    delta1: float
    family_size: int

    def __post_init__(self):
        if self.expectation < 0 or self.t < 0 or self.family_size < 0:
            raise ValueError("expectation, t, family_size must be >= 0")
        if self.delta1 < 1:
            raise ValueError("delta1 = max degree + 1 is at least 1")


def janson_bound(inp):
    """exp(-2 t^2 / (delta1 * |family|)), the upper-tail probability
    bound for a sum of indicators with dependency degree delta1 - 1.
    """
    if inp.family_size == 0:
        warnings.warn("janson_bound over an empty family is vacuously 1",
                      stacklevel=2)
        return 1.0
    return math.exp(-2.0 * inp.t * inp.t / (inp.delta1 * inp.family_size))


# ---------------------------------------------------------------------------
# dependency graphs

def _tuple_overlap_degree(i, u, v):
    # vertices: pairs (x, y) in I^2 with u + x = y + v; two vertices are
    # adjacent when their middle sets intersect
    iset = set(i)
    d = v - u
    verts = [(x, x - d) for x in i if x - d in iset]
    best = 0
    for x1, y1 in verts:
        m1 = {x1, y1}
        deg = sum(1 for x2, y2 in verts
                  if (x2, y2) != (x1, y1) and (x2 in m1 or y2 in m1))
        best = max(best, deg)
    return best + 1


def _middle_overlap_degree(i):
    # vertices: every ordered Sidon 4-tuple (a, b, c, d) of I; adjacency
    # when the middle sets {b, c} intersect.  deg(r) counts tuples
    # sharing b or c, minus r itself; middles are always distinct.
    tuples = list(iter_sidon_tuples(i))
    if not tuples:
        return 1
    cnt = {}
    both = {}
    for _, b, c, _ in tuples:
        cnt[b] = cnt.get(b, 0) + 1
        cnt[c] = cnt.get(c, 0) + 1
        key = (b, c) if b < c else (c, b)
        both[key] = both.get(key, 0) + 1
    best = 0
    for _, b, c, _ in tuples:
        key = (b, c) if b < c else (c, b)
        deg = cnt[b] + cnt[c] - both[key] - 1
        best = max(best, deg)
    return best + 1


def dependency_degree(i, mode, u=None, v=None, n=None):
    """Delta1 = max degree + 1 of the named dependency graph over I.

    tuple_overlap fixes an ordered pair (u, v) and takes the tuples
    (u, x, y, v) as vertices; middle_overlap takes every ordered Sidon
    4-tuple of I.  An empty graph yields 1.
    """
    i = as_intset(i, n)
    if mode == "tuple_overlap":
        if u is None or v is None or u == v:
            raise ValueError("tuple_overlap needs distinct u and v")
        return _tuple_overlap_degree(i, u, v)
    if mode == "middle_overlap":
        return _middle_overlap_degree(i)
    raise ValueError("unknown mode %r" % (mode,))
