"""Seeded sampling machinery, end to end.

Everything here is reproducible from (n, seed): the RNG is stdlib
random.Random, elements are visited in ascending order, and samples are
truncated deterministically. Run it twice and diff the output.
"""

import random

from sidon import (
    JansonInput,
    ProblemParams,
    check_w,
    erdos_turan_set,
    janson_bound,
    random_lower_bound_experiment,
    sample_w,
)

n = 1 << 16
params = ProblemParams(n)
i = erdos_turan_set(181, n)
print("host set: %d elements of an Erdos-Turan Sidon set in [%d]" % (len(i), n))

w = sample_w(i, params, seed=1729)
print("sample_w(seed=1729): |W| = %d, first few: %s" % (len(w), list(w[:6])))

report = check_w(i, w, params)
print("size_ok=%s  multiplicity_ok=%s  heavy_ok=%s"
      % (report.size_ok, report.multiplicity_ok, report.heavy_ok))
print("max s(u,W,v) = %d, thresholds: size >= %.2f, mult <= %.3f, heavy <= %.2f"
      % (report.max_s_uv, report.size_threshold,
         report.multiplicity_threshold, report.heavy_threshold))
# The multiplicity threshold 8 sqrt(n)/lg^4 n is below 1 at desk scale,
# so multiplicity_ok honestly fails whenever any s(u,W,v) is positive.
# That is the asymptotic statement poking through at finite n.

# |W| concentrates at |I| * 2/sqrt(lg n) = 181/2 here.
sizes = [len(sample_w(i, params, seed=s)) for s in range(200)]
print("mean |W| over 200 seeds: %.2f (expected %.2f)"
      % (sum(sizes) / len(sizes), len(i) * params.w_probability))

# Janson-style tail bound: exp(-2 t^2 / (Delta_1 |A|)). At t = 0 the
# bound is exactly 1, no matter how degenerate the rest is.
jb = janson_bound(JansonInput(expectation=40.0, t=12.0, delta1=3.0, family_size=90))
print()
print("janson bound (t=12, Delta1=3, |A|=90): %.6f" % jb)
print("janson bound at t=0:", janson_bound(JansonInput(40.0, 0.0, 3.0, 90)))

# Random subsets of [n] with m ~ (alpha n)^(1/4) elements carry few
# tuples on average; the experiment estimates how few.
res = random_lower_bound_experiment(n=256, alpha=256, trials=400, seed=11)
print()
print("random m=%d subsets of [256], %d trials:" % (res.m, res.trials))
print("  mean tuples %.2f, median %.1f, within budget %.0f%%"
      % (res.mean_tuples, res.median_tuples, 100 * res.fraction_within_budget))
