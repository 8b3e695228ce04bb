"""Finite-n audits of the certificate-counting arithmetic.

Every check evaluates a counted quantity exactly (big-integer binomial
sums where the arguments are integers, log-gamma where they are real),
reports lg of that value as lhs, lg of the final budget as rhs, and
lists each intermediate inequality of the derivation as a named step.
Loose steps (Stirling-style estimates) therefore stay visible next to
the exact values they bound.

Logs are base 2 throughout.  Quantities reaching 2^(hundreds of
thousands) never leave log space: sums of such terms go through a
max-shifted accumulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sidon.params import lg

MIN_AUDIT_N = 4096


def log2_int(x):
    """lg of a positive integer, exact to float precision at any size."""
    if x <= 0:
        raise ValueError("positive integer required")
    shift = max(0, x.bit_length() - 53)
    return math.log2(x >> shift) + shift


def log2_binomial(m, k):
    """lg C(m, k) with real arguments, via log-gamma."""
    if m < 0 or k < 0 or k > m:
        raise ValueError("degenerate binomial arguments (%r, %r)" % (m, k))
    if k == 0 or k == m:
        return 0.0
    return (math.lgamma(m + 1) - math.lgamma(k + 1)
            - math.lgamma(m - k + 1)) / math.log(2)


def log2_binomial_sum(n, kmax):
    """lg of sum_{i=0}^{floor(kmax)} C(n, i), exact big-integer."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    top = min(n, math.floor(kmax))
    term = 1
    total = 1
    for i in range(1, top + 1):
        term = term * (n - i + 1) // i
        total += term
    return log2_int(total)


def log2_add(values):
    """lg of a sum given the lg of each addend."""
    finite = [v for v in values if v != -math.inf]
    if not finite:
        return -math.inf
    peak = max(finite)
    return peak + math.log2(sum(2 ** (v - peak) for v in finite))


@dataclass(frozen=True)
class Step:
    """One intermediate inequality of a derivation chain."""
    name: str
    lhs: float
    rhs: float

    @property
    def holds(self):
        return self.lhs <= self.rhs


def _jnum(x):
    if x == -math.inf:
        return "-inf"
    if x == math.inf:
        return "inf"
    return x


@dataclass(frozen=True)
class BoundReport:
    n: int
    lhs: float               # lg of the evaluated quantity
    rhs: float               # lg of the budget it must fit under
    components: dict         # additive parts of lhs (they sum to it)
    steps: tuple = ()
    degenerate: bool = False

    @property
    def holds(self):
        return (not self.degenerate and self.lhs <= self.rhs
                and all(s.holds for s in self.steps))

    def step(self, name):
        for s in self.steps:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_json_dict(self):
        return {
            "n": self.n,
            "lhs": _jnum(self.lhs),
            "rhs": _jnum(self.rhs),
            "holds": self.holds,
            "degenerate": self.degenerate,
            "components": {k: _jnum(v) for k, v in self.components.items()},
            "steps": [
                {"name": s.name, "lhs": _jnum(s.lhs), "rhs": _jnum(s.rhs),
                 "holds": s.holds}
                for s in self.steps
            ],
        }


def _require_audit_n(n):
    if n < MIN_AUDIT_N:
        raise ValueError(
            "audit needs n >= %d so every scale index and binomial "
            "argument is positive; got %d" % (MIN_AUDIT_N, n))


def u_choice_product_check(n):
    """Product of anchor-set choice counts over the halving scales.

    Evaluates lg of prod_{i} C(2^i x, 24n/(2^i x)) with x = 12 sqrt(n),
    one factor per integer scale with 2^i x <= 6 sqrt(n) lg n, against
    the 25 sqrt(n) budget.  Steps record the Stirling estimate
    (6e 4^i)^(2 sqrt(n)/2^i) per factor and its closed-form tail
    (4 lg 6e + 8) sqrt(n).
    """
    _require_audit_n(n)
    sqrt_n = math.sqrt(n)
    x = 12 * sqrt_n
    terms = math.floor(lg(lg(n)))

    components = {}
    stirling_total = 0.0
    lhs = 0.0
    for i in range(terms):
        m = 2 ** i * x
        k = 24 * n / m
        try:
            value = log2_binomial(m, k)
        except ValueError:
            return BoundReport(
                n=n, lhs=math.inf, rhs=25 * sqrt_n, components={},
                steps=(Step("degenerateArguments", math.inf, 25 * sqrt_n),),
                degenerate=True)
        components["factor%d" % i] = value
        lhs += value
        stirling_total += k * math.log2(6 * math.e * 4 ** i)

    tail = (4 * math.log2(6 * math.e) + 8) * sqrt_n
    steps = (
        Step("exactUnderStirling", lhs, stirling_total),
        Step("stirlingUnderClosedTail", stirling_total, tail),
        Step("tailUnderBudget", tail, 25 * sqrt_n),
    )
    return BoundReport(n=n, lhs=lhs, rhs=25 * sqrt_n,
                       components=components, steps=steps)


def certificate_count_check(n, ell):
    """Choice counts for every part of a phase-count-ell certificate.

    ell = 0: documents are a cleaned-away set and one initial R-set,
    budget 16 sqrt(n) + 1.  ell >= 1: the product of choice counts for
    the cleaned set, R_0, U_0, R_1, the later R-sets, the scale-index
    tuple, and the later anchor sets, budget 167 sqrt(n) + lg lg n.
    """
    _require_audit_n(n)
    if ell != int(ell) or ell < 0:
        raise ValueError("ell must be a nonnegative integer")
    ell = int(ell)
    loglog = lg(lg(n))
    if ell > loglog + 1:
        raise ValueError(
            "ell = %d exceeds the phase-count range (max %.3f)"
            % (ell, loglog + 1))
    sqrt_n = math.sqrt(n)
    log_n = lg(n)

    if ell == 0:
        cleaned = log2_binomial_sum(n, sqrt_n / log_n)
        r_zero = log2_binomial_sum(n, 16 * sqrt_n / log_n)
        lhs = log2_add([cleaned, r_zero])
        rhs = 16 * sqrt_n + 1
        steps = (
            Step("cleanedUnderRoot", cleaned, sqrt_n),
            Step("initialUnderSixteenRoot", r_zero, 16 * sqrt_n),
            Step("pairUnderDoubledMax", lhs, max(cleaned, r_zero) + 1),
            Step("totalUnderBudget", lhs, rhs),
        )
        return BoundReport(n=n, lhs=lhs,
                           rhs=rhs, components={"documentPairs": lhs},
                           steps=steps)

    cleaned = log2_binomial_sum(n, sqrt_n / log_n)
    r_zero = log2_binomial_sum(n, 16 * sqrt_n / log_n)
    u_zero = log2_int(math.comb(n, math.ceil(sqrt_n / log_n)))
    r_one = log2_binomial_sum(n, 108 * sqrt_n / log_n)
    later_r = 0.0
    for i in range(1, ell):
        later_r += log2_binomial_sum(n, 12 * sqrt_n / (log_n * 2 ** (2 * i - 2)))

    # increasing (ell-1)-tuples of integer scale indices in [1, lg lg n)
    indices = math.ceil(loglog) - 1
    tuple_count = math.comb(indices, ell - 1) if ell - 1 <= indices else 0
    scale_tuples = log2_int(tuple_count) if tuple_count else -math.inf

    anchor = u_choice_product_check(n)
    later_u = anchor.lhs if ell >= 2 else 0.0

    components = {
        "cleanedChoices": cleaned,
        "initialChoices": r_zero,
        "anchorZeroChoices": u_zero,
        "firstSelectionChoices": r_one,
        "laterSelectionChoices": later_r,
        "scaleTupleCount": scale_tuples,
        "laterAnchorChoices": later_u,
    }
    lhs = (cleaned + r_zero + u_zero + r_one + later_r
           + scale_tuples + later_u)
    rhs = 167 * sqrt_n + loglog

    geometric = sum(12 / 2 ** (2 * i - 2) for i in range(1, ell))
    steps = (
        Step("cleanedUnderRoot", cleaned, sqrt_n),
        Step("initialUnderSixteenRoot", r_zero, 16 * sqrt_n),
        Step("anchorZeroUnderRoot", u_zero, sqrt_n),
        Step("firstSelectionUnderBudget", r_one, 108 * sqrt_n),
        Step("laterSelectionUnderGeometric", later_r, geometric * sqrt_n),
        Step("geometricTailUnderSixteen", geometric, 16),
        Step("fixedExponents", 1 + 16 + 1 + 108 + 16, 142),
        Step("scaleTuplesUnderChoose", scale_tuples,
             log2_binomial(loglog, ell - 1) if ell - 1 <= loglog
             else math.inf),
        Step("chooseUnderLogCount", log2_binomial(loglog, ell - 1)
             if ell - 1 <= loglog else -math.inf, loglog),
        Step("laterAnchorsUnderBudget", later_u, 25 * sqrt_n),
        Step("totalUnderBudget", lhs, rhs),
    )
    return BoundReport(n=n, lhs=lhs, rhs=rhs, components=components,
                       steps=steps)


def containers_per_certificate_check(n, case, size_cl):
    """Members choosable inside one final container, per size regime.

    case 1: small container, every subset counts, budget 12 sqrt(n).
    case 2: large container with no phases, at most sqrt(n)/lg n
    members inside it, budget sqrt(n).  case 3: large container after
    phases, fewer than 12n/|C_L| members inside it, budget 6 sqrt(n).
    """
    _require_audit_n(n)
    sqrt_n = math.sqrt(n)
    if size_cl < 0 or size_cl > n:
        raise ValueError("container size %r outside [0, n]" % (size_cl,))

    if case == 1:
        if size_cl > 12 * sqrt_n:
            raise ValueError(
                "case 1 needs size <= 12 sqrt(n) = %.3f" % (12 * sqrt_n))
        lhs = float(size_cl)
        return BoundReport(n=n, lhs=lhs, rhs=12 * sqrt_n,
                           components={"subsetExponent": lhs})

    if size_cl <= 12 * sqrt_n:
        raise ValueError(
            "cases 2 and 3 need size > 12 sqrt(n) = %.3f" % (12 * sqrt_n))

    if case == 2:
        kmax = sqrt_n / lg(n)
        lhs = log2_binomial_sum(size_cl, kmax)
        ground = log2_binomial_sum(n, kmax)
        doubled = 1 + log2_int(math.comb(n, math.floor(kmax)))
        steps = (
            Step("groundSetMonotone", lhs, ground),
            Step("sumUnderDoubledMax", ground, doubled),
            Step("doubledMaxUnderRoot", doubled, sqrt_n),
        )
        return BoundReport(n=n, lhs=lhs, rhs=sqrt_n,
                           components={"memberChoices": lhs}, steps=steps)

    if case == 3:
        x = 12 * n / size_cl
        lhs = 1 + log2_binomial(size_cl, x)
        stirling = 1 + x * math.log2(12 * math.e * n / x ** 2)
        peak = math.sqrt(12 * math.e * n) + 1
        steps = (
            Step("exactUnderStirling", lhs, stirling),
            # valid because x < sqrt(n) here: the exponent is still
            # increasing in x on this side of its peak
            Step("stirlingUnderPeak", stirling, peak),
            Step("peakUnderBudget", peak, 6 * sqrt_n),
        )
        return BoundReport(n=n, lhs=lhs, rhs=6 * sqrt_n,
                           components={"memberChoices": lhs}, steps=steps)

    raise ValueError("case must be 1, 2, or 3, got %r" % (case,))


def family_count_check(n):
    """The full assembly: certificates times members per certificate.

    Sums the evaluated certificate counts over every phase count,
    multiplies by the worst-case member bound 2^(12 sqrt(n)), and
    audits the budget split 168 + 12 = 180 on the exponent.
    """
    _require_audit_n(n)
    sqrt_n = math.sqrt(n)
    loglog = lg(lg(n))
    ell_max = math.floor(loglog) + 1

    subs = [certificate_count_check(n, ell) for ell in range(ell_max + 1)]
    certificates = log2_add([s.lhs for s in subs])
    members = 12 * sqrt_n
    lhs = certificates + members
    rhs = 180 * sqrt_n

    # the budgeted version of the same sum
    budget_sum = log2_add([16 * sqrt_n + 1,
                           167 * sqrt_n + loglog + lg(loglog + 1)])
    steps = tuple(
        Step("certificateCountPhases%d" % s_ell, sub.lhs, sub.rhs)
        for s_ell, sub in enumerate(subs)
    ) + (
        Step("certificatesUnderBudgetSum", certificates, budget_sum),
        Step("budgetSumUnderAssembly", budget_sum, 168 * sqrt_n),
        Step("membersAreWorstCase", max(sqrt_n, 6 * sqrt_n), members),
        Step("fixedExponents", 168 + 12, 180),
        Step("totalUnderBudget", lhs, rhs),
    )
    components = {"certificates": certificates,
                  "membersPerCertificate": members}
    return BoundReport(n=n, lhs=lhs, rhs=rhs, components=components,
                       steps=steps)
