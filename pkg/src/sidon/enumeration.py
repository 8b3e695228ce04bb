"""Exhaustive and pruned enumeration of Sidon and budgeted-tuple sets.

Machinery: a DFS over subsets ordered by largest element, carrying the
pair-sum occupancy incrementally (a new element x adds the sums x + s
for existing s plus the double 2x, all distinct from one another, so
the ordered-tuple delta is a local O(|S|) computation); a
branch-and-bound search for the maximum Sidon subset of [n]; the
perfect-difference-set and quadratic-residue constructions; growth-rate
tables; and a seeded random-subset experiment for the typical tuple
count of m-element sets.

Counts are exact Python ints throughout (they outgrow 64 bits well
inside the supported range).
"""

from __future__ import annotations

import math
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from sidon.core import as_intset, count_sidon_tuples, is_sidon
from sidon.params import lg

ENUM_CAP = 40       # subset-census ceiling; the tree outgrows a desk run beyond it
PHI_CAP = 200       # exact branch-and-bound ceiling for max_sidon


@dataclass(frozen=True)
class CountResult:
    n: int
    alpha: int
    count: int
    exponent: float       # lg(count) / sqrt(n)
    elapsed: float


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    phi: int
    witness: tuple
    exact: bool = True


# ---------------------------------------------------------------------------
# Sidon-only census (bitmask DFS)

def _census_from(n, x, elem_mask, sum_mask, by_max):
    """Tally, by largest element, every Sidon superset extending the
    current set whose max is x.  sum_mask holds one bit per attained
    pair sum; an extension y is legal iff its new sums (elem_mask << y
    plus the double bit 2y) miss sum_mask entirely.
    """
    by_max[x] += 1
    for y in range(x + 1, n + 1):
        new = (elem_mask << y) | (1 << (2 * y))
        if not (sum_mask & new):
            _census_from(n, y, elem_mask | (1 << y), sum_mask | new, by_max)


def _census_task(args):
    n, x, y = args
    by_max = [0] * (n + 1)
    elem = (1 << x) | (1 << y)
    sums = (1 << (2 * x)) | (1 << (x + y)) | (1 << (2 * y))
    _census_from(n, y, elem, sums, by_max)
    return by_max


def census_sidon_sets(n, cap=ENUM_CAP, threads=1):
    """z[k] = number of Sidon subsets of [k] (empty set included), for
    every k <= n, from a single DFS at n.
    """
    if n > cap:
        raise ValueError(
            "census refused at n=%d (cap %d); raise cap only if you "
            "accept a very long run" % (n, cap))
    if n < 0:
        raise ValueError("n must be nonnegative")
    by_max = [0] * (n + 1)
    pair_tasks = []
    for x in range(1, n + 1):
        by_max[x] += 1  # the singleton {x}; every 2-set is Sidon
        for y in range(x + 1, n + 1):
            pair_tasks.append((n, x, y))
    if threads > 1 and pair_tasks:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            for part in ex.map(_census_task, pair_tasks, chunksize=8):
                for k in range(n + 1):
                    by_max[k] += part[k]
    else:
        for args in pair_tasks:
            part = _census_task(args)
            for k in range(n + 1):
                by_max[k] += part[k]
    z = [1] * (n + 1)  # the empty set
    for k in range(1, n + 1):
        z[k] = z[k - 1] + by_max[k]
    return tuple(z)


def count_sidon_sets(n, cap=ENUM_CAP, threads=1):
    """Exact |Z_n|: Sidon subsets of [n], counting the empty set."""
    return census_sidon_sets(n, cap=cap, threads=threads)[n]


# ---------------------------------------------------------------------------
# budgeted-tuple census

def _budget_count(n, alpha, prefix):
    """Number of sets S with prefix ⊆ S ⊆ prefix ∪ (max(prefix), n] whose
    ordered tuple count stays <= alpha.

    p[s] / q[s] hold the running pair-sum profile; inserting x adds
    8*p[x+s] + 4*q[x+s] tuples per existing element s plus 4*p[2x] for
    the double, each addend hitting a distinct sum.
    """
    p = [0] * (2 * n + 1)
    q = [0] * (2 * n + 1)
    elements = []
    running = 0
    for x in prefix:
        delta = 4 * p[2 * x]
        for s in elements:
            t = s + x
            delta += 8 * p[t] + 4 * q[t]
        running += delta
        for s in elements:
            p[s + x] += 1
        q[2 * x] = 1
        elements.append(x)
    if running > alpha:
        return 0
    total = 0

    def dfs(start, running):
        nonlocal total
        total += 1
        for x in range(start, n + 1):
            delta = 4 * p[2 * x]
            for s in elements:
                t = s + x
                delta += 8 * p[t] + 4 * q[t]
            r2 = running + delta
            if r2 > alpha:       # tuple count is monotone under insertion
                continue
            for s in elements:
                p[s + x] += 1
            q[2 * x] = 1
            elements.append(x)
            dfs(x + 1, r2)
            elements.pop()
            q[2 * x] = 0
            for s in elements:
                p[s + x] -= 1

    dfs((elements[-1] + 1) if elements else 1, running)
    return total


def _budget_task(args):
    n, alpha, x, y = args
    return _budget_count(n, alpha, (x, y))


def count_generalized(n, alpha, cap=ENUM_CAP, threads=1):
    """Exact number of subsets of [n] with at most alpha ordered Sidon
    4-tuples (alpha = 0 recovers the Sidon count).
    """
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    if n > cap:
        raise ValueError(
            "count refused at n=%d (cap %d); raise cap only if you "
            "accept a very long run" % (n, cap))
    t0 = time.perf_counter()
    if n < 1:
        count = 1
    elif threads > 1:
        count = 1 + n  # empty set and singletons
        tasks = [(n, alpha, x, y)
                 for x in range(1, n + 1) for y in range(x + 1, n + 1)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            count += sum(ex.map(_budget_task, tasks, chunksize=16))
    else:
        count = _budget_count(n, alpha, ())
    elapsed = time.perf_counter() - t0
    exponent = lg(count) / math.sqrt(n) if n >= 1 else 0.0
    return CountResult(n=n, alpha=alpha, count=count,
                       exponent=exponent, elapsed=elapsed)


# ---------------------------------------------------------------------------
# extremal function

def capacity_bound(r):
    """Max size of a Sidon set inside any integer window of length r:
    C(k, 2) distinct positive differences must fit below r, giving
    k <= (1 + sqrt(8r - 7)) / 2.
    """
    if r <= 0:
        return 0
    return int((1 + math.isqrt(8 * r - 7)) // 2)


def greedy_sidon(n):
    """First-fit Sidon subset of [n]; a lower-bound witness, not optimal."""
    taken = []
    diffs = set()
    for x in range(1, n + 1):
        new = {x - s for s in taken}
        if len(new) == len(taken) and not (new & diffs):
            diffs |= new
            taken.append(x)
    return tuple(taken)


# phi values already proven, n -> (phi, witness); grows monotonically and
# doubles as the branch-and-bound's window bound (a Sidon set inside any
# window of length r has at most phi(r) elements, by translation)
_PHI_CACHE = {0: (0, ()), 1: (1, (1,))}


def _extend_phi_table(n):
    for m in range(max(_PHI_CACHE) + 1, n + 1):
        best_size, best_set = _PHI_CACHE[m - 1]
        phi_of = [_PHI_CACHE[r][0] for r in range(m)]
        elements = [1]

        def dfs(last, diff_mask, rev_mask):
            nonlocal best_size, best_set
            size = len(elements)
            if size > best_size:
                best_size, best_set = size, tuple(elements)
            for x in range(last + 1, m + 1):
                if size + 1 + phi_of[m - x] <= best_size:
                    break  # the window bound only shrinks as x grows
                new = rev_mask >> (m - x)  # bits x - s for every taken s
                if not (diff_mask & new):
                    elements.append(x)
                    dfs(x, diff_mask | new, rev_mask | (1 << (m - x)))
                    elements.pop()

        # any improving set shifts down to one containing 1
        dfs(1, 0, 1 << (m - 1))
        _PHI_CACHE[m] = (best_size, best_set)


def max_sidon(n, cap=PHI_CAP, heuristic=False):
    """Maximum Sidon subset of [n]: exact via branch-and-bound up to the
    cap, else a greedy witness flagged exact=False when heuristic=True.

    The exact search proves phi for each window length up to n in turn,
    seeding each step with the previous witness and pruning a branch as
    soon as the proven value of the remaining window cannot beat the
    incumbent.  Results are cached across calls.  Runs stay quick up to
    n around 70; the cap is a guard against far longer searches, not a
    promise of speed right below it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        if heuristic:
            w = greedy_sidon(n)
            return ExtremalResult(n=n, phi=len(w), witness=w, exact=False)
        raise ValueError(
            "exact search refused at n=%d (cap %d); pass heuristic=True "
            "for a non-exact witness" % (n, cap))
    _extend_phi_table(n)
    phi, witness = _PHI_CACHE[n]
    return ExtremalResult(n=n, phi=phi, witness=witness, exact=True)


# ---------------------------------------------------------------------------
# classical constructions

def is_prime(m):
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m):
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _prime_power(q):
    """(p, k) with q = p^k, or None."""
    if q < 2:
        return None
    fac = _prime_factors(q)
    if len(fac) != 1:
        return None
    p = fac[0]
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


# polynomial arithmetic over GF(p); coefficient tuples, ascending degree

def _ptrim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _pmod(a, f, p):
    a = list(a)
    d = len(f) - 1
    inv = pow(f[-1], -1, p)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv % p
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * f[j]) % p
    return _ptrim(a[:d])


def _pmulmod(a, b, f, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _prem(a, b, p):
    """Remainder of a modulo b over GF(p)."""
    r = list(_ptrim(a))
    inv = pow(b[-1], -1, p)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        shift = len(r) - len(b)
        for j in range(len(b)):
            r[shift + j] = (r[shift + j] - c * b[j]) % p
        r = list(_ptrim(r))
    return tuple(r)


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _is_irreducible(f, p, d):
    x = (0, 1)
    if _ppowmod(x, p ** d, f, p) != x:
        return False
    for r in _prime_factors(d):
        g = _psub(_ppowmod(x, p ** (d // r), f, p), x, p)
        if len(_pgcd(g, f, p)) != 1:  # shares a nontrivial factor with f
            return False
    return True


def _find_irreducible(p, d):
    """Lexicographically first monic irreducible of degree d over GF(p)."""
    for code in range(p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p, d):
            return f
    raise AssertionError("no irreducible polynomial found (unreachable)")


def singer_set(q, n=None):
    """Sidon subset of [q^2 + q + 1] of size q + 1 from a perfect
    difference set: index the points of the projective plane over GF(q)
    by powers of a primitive element of GF(q^3) and keep the exponents
    whose trace down to GF(q) vanishes.  Every nonzero residue modulo
    q^2 + q + 1 then occurs exactly once as an ordered difference, so
    the integer set (shifted to start at 1) is Sidon.
    """
    pk = _prime_power(q)
    if pk is None:
        raise ValueError("q must be a prime power, got %r" % (q,))
    p, k = pk
    d = 3 * k
    m = q * q + q + 1
    f = _find_irreducible(p, d)

    order = p ** d - 1
    ofac = _prime_factors(order)
    gamma = None
    for code in range(2, p ** d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        cand = _ptrim(coeffs)
        if all(_ppowmod(cand, order // r, f, p) != (1,) for r in ofac):
            gamma = cand
            break
    assert gamma is not None

    out = []
    e = (1,)
    for i in range(m):
        # trace down to GF(q): e + e^q + e^(q^2)
        eq = _ppowmod(e, q, f, p)
        eq2 = _ppowmod(eq, q, f, p)
        total = [0] * d
        for poly in (e, eq, eq2):
            for j, c in enumerate(poly):
                total[j] = (total[j] + c) % p
        if not _ptrim(total):
            out.append(i + 1)
        e = _pmulmod(e, gamma, f, p)

    result = as_intset(out, m)
    assert len(result) == q + 1, "difference-set size %d != q+1" % len(result)
    assert is_sidon(result), "construction failed verification"
    return result


def erdos_turan_set(p, n=None):
    """{2pk + (k^2 mod p) : 0 <= k < p}, shifted by +1 into [1, 2p^2].

    Distinct pair sums follow from the uniqueness of (k + l, k^2 + l^2)
    over GF(p); verified directly before returning.
    """
    if not is_prime(p):
        raise ValueError("p must be prime, got %r" % (p,))
    out = tuple(sorted(2 * p * k + (k * k) % p + 1 for k in range(p)))
    assert out[-1] <= 2 * p * p
    assert is_sidon(out), "construction failed verification"
    return out


# ---------------------------------------------------------------------------
# growth table and the random lower-bound experiment

ALPHA_RULES = {
    "zero": lambda n: 0.0,
    "n_over_log5": lambda n: n / lg(n) ** 5,
    "n_over_log4": lambda n: n / lg(n) ** 4,
    "n_over_log3": lambda n: n / lg(n) ** 3,
    "n_over_log2": lambda n: n / lg(n) ** 2,
    "n_over_log": lambda n: n / lg(n),
    "n": lambda n: float(n),
}


@dataclass(frozen=True)
class GrowthRow:
    n: int
    alpha_rule: str
    alpha: int
    count: int
    exponent: float
    seconds: float


def growth_table(n_values, alpha_rules, cap=ENUM_CAP, threads=1):
    """One row per (n, rule): alpha = floor(rule(n)), exact count, and
    the exponent lg(count)/sqrt(n).
    """
    rows = []
    for n in n_values:
        for name in alpha_rules:
            rule = ALPHA_RULES.get(name)
            if rule is None:
                raise ValueError("unknown alpha rule %r" % (name,))
            if n < 2 and name != "n" and name != "zero":
                raise ValueError("log-based rules need n >= 2")
            alpha = int(math.floor(rule(n)))
            res = count_generalized(n, alpha, cap=cap, threads=threads)
            rows.append(GrowthRow(n=n, alpha_rule=name, alpha=alpha,
                                  count=res.count, exponent=res.exponent,
                                  seconds=res.elapsed))
    return rows


@dataclass(frozen=True)
class ExperimentResult:
    n: int
    alpha: int
    m: int
    trials: int
    seed: int
    mean_tuples: float
    median_tuples: float
    fraction_within_budget: float
    reference: float      # m^4 / n, the heuristic order of magnitude


def random_lower_bound_experiment(n, alpha, trials, seed):
    """Sample m-element subsets of [n] with m = floor((alpha*n)^(1/4))
    and report the empirical ordered-tuple count distribution.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m = int(math.floor((alpha * n) ** 0.25))
    if m > n:
        raise ValueError("m = %d exceeds n = %d" % (m, n))
    rng = random.Random(seed)
    counts = []
    for _ in range(trials):
        sample = rng.sample(range(1, n + 1), m)
        counts.append(count_sidon_tuples(sample))
    return ExperimentResult(
        n=n, alpha=alpha, m=m, trials=trials, seed=seed,
        mean_tuples=statistics.fmean(counts),
        median_tuples=float(statistics.median(counts)),
        fraction_within_budget=sum(1 for c in counts if c <= alpha) / trials,
        reference=m ** 4 / n,
    )
