"""Phased certificate construction for bounded-tuple sets.

A certificate for I is the pair of sequences (R_0..R_L, U_0..U_{L-1})
written down while peeling the ground set with the anchored multigraph:
each round discards the maximum-degree available vertex, or, when that
vertex belongs to I, selects it and prunes every vertex whose
accumulated state passed the phase threshold.  The R/U sequences alone
determine the container chain C_0 > C_1 > ... > C_L, so a reconstruction
that never sees I can replay the exact chain: the membership test
"u in I" is answered by "u in R_j" inside phase j.

Degrees, states, and the tie-broken argmax live in int64 numpy arrays
(score = degree * (n + 1) + tie rank, far below 2^63, first-max
semantics); every other structure is plain Python.  All arithmetic is
integer-exact, so builds replay bit-for-bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from sidon.core import as_intset, positive_diff_counts, vertex_stats
from sidon.params import ProblemParams, lg
from sidon.prob import WSampleError, check_w, heavy_vertices, sample_w

W_RETRY_LIMIT = 64

TIE_ORDERS = ("ascending", "descending")


class MalformedCertificateError(ValueError):
    """A certificate whose shape or replay is inconsistent."""


def clean_heavy(i, threshold, n=None):
    """Repeatedly remove the smallest member v with s_I(v) >= threshold.

    Returns (kept, removed), both sorted.  Removal recounts the stats
    each round, since one removal relieves its tuple partners.
    """
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    kept = list(as_intset(i, n))
    removed = []
    while kept:
        stats = vertex_stats(kept)
        for v in kept:
            if stats.get(v) >= threshold:
                kept.remove(v)
                removed.append(v)
                break
        else:
            break
    return tuple(kept), tuple(sorted(removed))


# ---------------------------------------------------------------------------
# the core peeling loop

@dataclass(frozen=True)
class CoreState:
    a: tuple             # available vertices at stop, sorted
    selected: tuple      # T in selection order
    t: dict              # nonzero state values over a and selected
    round: int


@dataclass(frozen=True)
class RoundRecord:
    round: int
    u: int
    selected: bool
    pruned: tuple


def _tie_rank(n, tie_order):
    # larger rank wins the tie among equal degrees
    if tie_order == "ascending":
        return np.arange(n + 1, 0, -1, dtype=np.int64)
    if tie_order == "descending":
        return np.arange(0, n + 1, dtype=np.int64)
    raise ValueError("unknown tie order %r" % (tie_order,))


def anchored_degrees(a, u_set):
    """Degrees of H^U(A) restricted to A, as a dict over A.

    deg(v) = sum over x in A of cU(|x - v|), minus (|A cap U| - 1) when
    v itself lies in U: the pair {v, x} with both ends in U loses the
    representation {v, x} itself.
    """
    a = as_intset(a)
    u_set = as_intset(u_set)
    if not a:
        return {}
    cu = positive_diff_counts(u_set)
    uset = set(u_set)
    aset = set(a)
    inter = len(aset & uset)
    out = {}
    for v in a:
        deg = sum(c * ((v - d in aset) + (v + d in aset))
                  for d, c in cu.items())
        if v in uset:
            deg -= inter - 1
        out[v] = deg
    return out


def core_algorithm(a0, members, u_set, t_threshold, stop,
                   tie_order="ascending", record_trace=False):
    """One phase of the peeling loop.  Returns (CoreState, trace).

    Each round takes the maximum-degree vertex u of H^U(A)[A] (ties go
    to the vertex earliest in tie_order).  u outside `members` is
    simply discarded; u inside is selected: every v in A gains
    d_H(v, u) state, the vertices with state above t_threshold are
    pruned, and u joins T.  Rounds repeat until stop(|A|) holds (an A0
    already satisfying stop returns untouched) or A empties.
    """
    a0 = as_intset(a0)
    u_set = as_intset(u_set)
    members = set(members)

    if stop(len(a0)) or not a0:
        return CoreState(a=a0, selected=(), t={}, round=0), ()

    m = a0[-1]
    cu = positive_diff_counts(u_set)
    dpos = np.array(sorted(cu), dtype=np.int64)
    dcnt = np.array([cu[d] for d in sorted(cu)], dtype=np.int64)

    active = np.zeros(m + 1, dtype=bool)
    active[list(a0)] = True
    in_u = np.zeros(m + 1, dtype=bool)
    in_u[[x for x in u_set if x <= m]] = True

    # deg[v] = sum_x cu(|x-v|) over active x, minus the in-U correction
    deg = np.zeros(m + 1, dtype=np.int64)
    ind = active.astype(np.int64)
    for d, c in zip(dpos, dcnt):
        if d > m:
            break
        deg[d:] += c * ind[:m + 1 - d]
        deg[:m + 1 - d] += c * ind[d:]
    inter = int(np.count_nonzero(active & in_u))
    deg[active & in_u] -= inter - 1

    rank = _tie_rank(m, tie_order)
    score = deg * np.int64(m + 1) + rank
    score[~active] = -1

    t = np.zeros(m + 1, dtype=np.int64)
    size = len(a0)
    rounds = 0
    selected = []
    trace = []

    def neighbors(x):
        # vertices at a U-difference from x, with multiplicities
        lo = x - dpos
        hi = x + dpos
        keep_lo = lo >= 1
        keep_hi = hi <= m
        cand = np.concatenate([lo[keep_lo], hi[keep_hi]])
        mult = np.concatenate([dcnt[keep_lo], dcnt[keep_hi]])
        return cand, mult

    def remove(x):
        nonlocal size, inter
        active[x] = False
        score[x] = -1
        size -= 1
        cand, mult = neighbors(x)
        deg[cand] -= mult
        live = cand[active[cand]]
        score[live] = deg[live] * np.int64(m + 1) + rank[live]
        if in_u[x]:
            # every remaining A-cap-U vertex sheds one unit of the
            # self-pair correction
            inter -= 1
            sel = active & in_u
            deg[sel] += 1
            score[sel] = deg[sel] * np.int64(m + 1) + rank[sel]

    while size and not stop(size):
        u = int(np.argmax(score))
        rounds += 1
        if u in members:
            cand, mult = neighbors(u)
            if in_u[u]:
                mult = mult - in_u[cand].astype(np.int64)
            t[cand] += mult
            hot = cand[(t[cand] > t_threshold) & active[cand]]
            selected.append(u)
            remove(u)
            pruned = sorted(int(v) for v in hot if v != u)
            for v in pruned:
                remove(v)
            if record_trace:
                trace.append(RoundRecord(rounds, u, True, tuple(pruned)))
        else:
            remove(u)
            if record_trace:
                trace.append(RoundRecord(rounds, u, False, ()))

    final = tuple(int(v) for v in np.flatnonzero(active))
    tmap = {int(v): int(t[v]) for v in np.flatnonzero(t)}
    return (CoreState(a=final, selected=tuple(selected), t=tmap,
                      round=rounds),
            tuple(trace))


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Certificate:
    n: int
    alpha: float
    case_tag: int        # 1: heavy set small, R0 = I_h; 2: sampled W
    tie_order: str
    removed: tuple       # cleaned-away vertices, for the containment audit
    phase_count: int     # the certificate's L
    r: tuple             # R_0 .. R_L
    u: tuple             # U_0 .. U_{L-1}
    seed: int

    def to_json_dict(self):
        return {
            "n": self.n,
            "alpha": self.alpha,
            "caseTag": self.case_tag,
            "tieOrder": self.tie_order,
            "removed": list(self.removed),
            "L": self.phase_count,
            "R": [list(r) for r in self.r],
            "U": [list(u) for u in self.u],
            "seed": self.seed,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json_dict(cls, data):
        try:
            return cls(
                n=int(data["n"]),
                alpha=data["alpha"],
                case_tag=int(data["caseTag"]),
                tie_order=str(data["tieOrder"]),
                removed=tuple(sorted(int(x) for x in data["removed"])),
                phase_count=int(data["L"]),
                r=tuple(tuple(sorted(int(x) for x in r)) for r in data["R"]),
                u=tuple(tuple(sorted(int(x) for x in u)) for u in data["U"]),
                seed=int(data["seed"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificateError(
                "bad certificate document: %s" % exc) from exc

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificateError(
                "certificate is not valid JSON: %s" % exc) from exc
        return cls.from_json_dict(data)


@dataclass(frozen=True)
class ContainerChain:
    c: tuple             # C_0 .. C_L

    @property
    def last(self):
        return self.c[-1]


def _ceil_div(a, b):
    return -(-a // b)


def _phase1_stop(params):
    bound = 6 * math.sqrt(params.n) * lg(params.n)
    return lambda size: size < bound


def _sample_case2_w(i, params, seed):
    """Resample W until the size/heavy/multiplicity conditions hold,
    truncating each draw to the prescribed size before checking."""
    want = math.ceil(params.size_small)
    last = None
    for attempt in range(W_RETRY_LIMIT):
        w = sample_w(i, params, seed * 1_000_003 + attempt)
        if len(w) < want:
            last = check_w(i, w, params)
            continue
        report = check_w(i, w[:want], params)
        last = report
        if report.size_ok and report.multiplicity_ok and report.heavy_ok:
            return report
    raise WSampleError(
        "no W sample met the conditions after %d attempts; last failed: %s"
        % (W_RETRY_LIMIT, ", ".join(last.failed_conditions())),
        failed=last.failed_conditions(), report=last)


def build_certificate(i, params, seed, tie_order="ascending", removed=()):
    """Run the phased peeling on a cleaned input and write down the
    certificate.  Returns (Certificate, ContainerChain).

    Preconditions: every s_I(v) < sqrt(n)/lg^3 n (run clean_heavy
    first).  The heavy subset I_h = {v : s_I(v) >= sqrt(n)/lg^4 n}
    decides the set-up: small I_h goes in whole as R_0 (case 1); a
    large I_h requires |I| >= sqrt(n)/sqrt(lg n) and W-sampling
    (case 2), which may raise WSampleError at small n.
    """
    n = params.n
    i = as_intset(i, n)
    removed = as_intset(removed, n)
    if tie_order not in TIE_ORDERS:
        raise ValueError("unknown tie order %r" % (tie_order,))

    stats = vertex_stats(i)
    offenders = [v for v in i if stats.get(v) >= params.g_mid]
    if offenders:
        raise ValueError(
            "input not cleaned: s_I(%d) = %d >= %.6g; run clean_heavy first"
            % (offenders[0], stats.get(offenders[0]), params.g_mid))

    i_h = heavy_vertices(i, params.g_low)
    iset = set(i)

    if len(i_h) <= params.size_small:
        case_tag = 1
        r0 = i_h
        w = None
    elif len(i) >= params.size_big:
        case_tag = 2
        report = _sample_case2_w(i, params, seed)
        r0 = report.s_of_w
        w = report.w
    else:
        raise ValueError(
            "no set-up applies: |I_h| = %d > %.6g needs sampling, but "
            "|I| = %d < %.6g" % (len(i_h), params.size_small,
                                 len(i), params.size_big))

    r0set = set(r0)
    c0 = tuple(v for v in range(1, n + 1) if v not in r0set)
    chain = [c0]
    r_seq = [r0]
    u_seq = []

    c0_cap_i = [v for v in c0 if v in iset]
    if len(c0_cap_i) >= params.size_small:
        # phase 1: threshold sqrt(n)/lg^4 n, run until |A| dips under
        # 6 sqrt(n) lg n
        if case_tag == 2:
            u0 = w
        else:
            u0 = tuple(c0_cap_i[:math.ceil(params.size_small)])
        u_seq.append(u0)
        state, _ = core_algorithm(
            c0, iset, u0, params.g_low, _phase1_stop(params),
            tie_order=tie_order)
        r_seq.append(tuple(sorted(state.selected)))
        chain.append(state.a)

        # phases 2, 3, ...: threshold sqrt(n)/lg^3 n, halving stop
        while True:
            prev = chain[-1]
            if len(prev) <= 12 * math.sqrt(n):
                break
            cap = [v for v in prev if v in iset]
            if len(cap) < 12 * n / len(prev):
                break
            uj = tuple(cap[:_ceil_div(12 * n, len(prev))])
            u_seq.append(uj)
            half = len(prev) / 2
            state, _ = core_algorithm(
                prev, iset, uj, params.g_mid, lambda size: size < half,
                tie_order=tie_order)
            r_seq.append(tuple(sorted(state.selected)))
            chain.append(state.a)

    phase_count = len(chain) - 1
    assert phase_count < lg(lg(n)) + 1, "phase count outgrew its bound"

    cert = Certificate(n=n, alpha=params.alpha, case_tag=case_tag,
                       tie_order=tie_order, removed=removed,
                       phase_count=phase_count, r=tuple(r_seq),
                       u=tuple(u_seq), seed=seed)
    return cert, ContainerChain(c=tuple(chain))


def reconstruct_containers(cert, params):
    """Replay the chain from the certificate alone.

    Membership of the selected vertices is read off R_j; the auxiliary
    sets come from cert.u.  Raises MalformedCertificateError when the
    shape is wrong or the replayed selections disagree with R_j.
    """
    n = params.n
    if cert.n != n:
        raise MalformedCertificateError(
            "certificate is for n=%d, params say n=%d" % (cert.n, n))
    if cert.tie_order not in TIE_ORDERS:
        raise MalformedCertificateError(
            "unknown tie order %r" % (cert.tie_order,))
    if cert.phase_count < 0 or len(cert.r) != cert.phase_count + 1:
        raise MalformedCertificateError(
            "expected %d R-sets, found %d" % (cert.phase_count + 1,
                                              len(cert.r)))
    want_u = cert.phase_count if cert.phase_count >= 1 else 0
    if len(cert.u) != want_u:
        raise MalformedCertificateError(
            "expected %d U-sets, found %d" % (want_u, len(cert.u)))
    for s in cert.r + cert.u:
        if s and (s[0] < 1 or s[-1] > n):
            raise MalformedCertificateError("set element outside [1, n]")

    r0set = set(cert.r[0])
    c0 = tuple(v for v in range(1, n + 1) if v not in r0set)
    chain = [c0]

    for j in range(1, cert.phase_count + 1):
        prev = chain[-1]
        uj = cert.u[j - 1]
        if j == 1:
            if len(uj) != math.ceil(params.size_small):
                raise MalformedCertificateError(
                    "U_0 must have exactly %d elements, found %d"
                    % (math.ceil(params.size_small), len(uj)))
            threshold = params.g_low
            stop = _phase1_stop(params)
        else:
            want = _ceil_div(12 * n, len(prev))
            if len(uj) != want:
                raise MalformedCertificateError(
                    "U_%d must have exactly %d elements, found %d"
                    % (j - 1, want, len(uj)))
            if not set(uj) <= set(prev):
                raise MalformedCertificateError(
                    "U_%d is not contained in C_%d" % (j - 1, j - 1))
            threshold = params.g_mid
            half = len(prev) / 2
            stop = lambda size: size < half
        state, _ = core_algorithm(
            prev, set(cert.r[j]), uj, threshold, stop,
            tie_order=cert.tie_order)
        if tuple(sorted(state.selected)) != cert.r[j]:
            raise MalformedCertificateError(
                "phase %d replay selected %d vertices, certificate says %d"
                % (j, len(state.selected), len(cert.r[j])))
        chain.append(state.a)

    return ContainerChain(c=tuple(chain))


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class ConditionCheck:
    name: str
    holds: bool
    witness: dict


@dataclass(frozen=True)
class VerifyReport:
    conditions: tuple
    containment_with_removed: bool

    @property
    def holds(self):
        return all(c.holds for c in self.conditions)

    def condition(self, name):
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_dict(self):
        return {
            "holds": self.holds,
            "containmentWithRemoved": self.containment_with_removed,
            "conditions": [
                {"name": c.name, "holds": c.holds, "witness": c.witness}
                for c in self.conditions
            ],
        }


def verify_certificate(cert, chain, i, params):
    """Evaluate the seven certificate conditions as data.

    Shape mismatches between cert and chain raise
    MalformedCertificateError; condition failures are reported, not
    raised.
    """
    n = params.n
    i = as_intset(i, n)
    sqrt_n = math.sqrt(n)
    log_n = lg(n)
    big_l = cert.phase_count
    if len(chain.c) != big_l + 1:
        raise MalformedCertificateError(
            "chain has %d sets, certificate says L=%d"
            % (len(chain.c), big_l))
    if len(cert.r) != big_l + 1 or len(cert.u) != (big_l if big_l else 0):
        raise MalformedCertificateError("R/U sequences disagree with L")

    iset = set(i)
    union_r = set()
    for r in cert.r:
        union_r |= set(r)
    last = set(chain.last)

    # containment: every R inside I, and I covered by C_L with the Rs
    r_outside = sorted(union_r - iset)
    i_outside = sorted(iset - (last | union_r))
    containment = ConditionCheck(
        "containment",
        not r_outside and not i_outside,
        {"rNotInI": r_outside[:8], "iNotCovered": i_outside[:8]},
    )

    # chain sizes: |C_0| <= n, and the middle sets sit in the
    # geometric corridor (12 sqrt n, 6 sqrt n lg n / 2^(i-1)]
    sizes = [len(c) for c in chain.c]
    mid_ok = all(
        12 * sqrt_n < sizes[k] <= 6 * sqrt_n * log_n / 2 ** (k - 1)
        for k in range(1, big_l))
    chain_sizes = ConditionCheck(
        "chain_sizes",
        sizes[0] <= n and mid_ok,
        {"sizes": sizes, "corridorLow": 12 * sqrt_n},
    )

    # R_0 domain and size
    r0 = cert.r[0]
    r_zero = ConditionCheck(
        "r_zero_size",
        (not r0 or (r0[0] >= 1 and r0[-1] <= n))
        and len(r0) <= 16 * sqrt_n / log_n,
        {"size": len(r0), "bound": 16 * sqrt_n / log_n},
    )

    # later R: nested in the previous container, geometric size decay
    r_rows = []
    r_ok = True
    for k in range(1, big_l + 1):
        bound = (108 * sqrt_n / log_n if k == 1
                 else 12 * sqrt_n / (log_n * 2 ** (2 * k - 4)))
        nested = set(cert.r[k]) <= set(chain.c[k - 1])
        ok = nested and len(cert.r[k]) <= bound
        r_ok = r_ok and ok
        r_rows.append({"index": k, "size": len(cert.r[k]),
                       "bound": bound, "nested": nested})
    r_sizes = ConditionCheck("r_sizes", r_ok, {"rows": r_rows})

    # U_0 domain and exact size (vacuous when L = 0)
    if big_l >= 1:
        u0 = cert.u[0]
        u0_ok = ((not u0 or (u0[0] >= 1 and u0[-1] <= n))
                 and len(u0) == math.ceil(params.size_small))
        u_zero = ConditionCheck(
            "u_zero_size", u0_ok,
            {"size": len(u0), "required": math.ceil(params.size_small)},
        )
    else:
        u_zero = ConditionCheck("u_zero_size", True, {"vacuous": True})

    # later U: inside the matching container, exact prescribed size
    u_rows = []
    u_ok = True
    for k in range(1, big_l):
        want = _ceil_div(12 * n, len(chain.c[k]))
        nested = set(cert.u[k]) <= set(chain.c[k])
        ok = nested and len(cert.u[k]) == want
        u_ok = u_ok and ok
        u_rows.append({"index": k, "size": len(cert.u[k]),
                       "required": want, "nested": nested})
    u_sizes = ConditionCheck("u_sizes", u_ok, {"rows": u_rows})

    # stopping disjunction
    cl = chain.last
    cl_cap_i = len(last & iset)
    branch_small_l0 = (big_l == 0
                       and len(set(chain.c[0]) & iset) < params.size_small)
    branch_sparse = (cl_cap_i < 12 * n / len(cl)) if cl else True
    branch_tiny = len(cl) <= 12 * sqrt_n
    stopping = ConditionCheck(
        "stopping",
        branch_small_l0 or branch_sparse or branch_tiny,
        {"lZeroSmall": branch_small_l0, "sparse": branch_sparse,
         "tiny": branch_tiny, "lastCapI": cl_cap_i, "lastSize": len(cl)},
    )

    covered_with_removed = sorted(
        iset - (last | union_r | set(cert.removed))) == []

    return VerifyReport(
        conditions=(containment, chain_sizes, r_zero, r_sizes,
                    u_zero, u_sizes, stopping),
        containment_with_removed=covered_with_removed,
    )
