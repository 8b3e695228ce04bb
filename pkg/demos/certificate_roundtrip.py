# Build a container certificate for a random subset of [1024], replay
# it without looking at the input, and verify the seven conditions.
#
# The point of the exercise: the certificate alone (anchor sets, W
# samples, removal lists) pins down the whole container chain, so a
# verifier can reconstruct C_0 .. C_L and check that the original set
# never escaped.

import random

from sidon import (
    ProblemParams,
    build_certificate,
    clean_heavy,
    reconstruct_containers,
    verify_certificate,
)

n = 1024
params = ProblemParams(n)
rng = random.Random(7)
raw = sorted(rng.sample(range(1, n + 1), 20))
print("raw input (%d elements): %s" % (len(raw), raw))

# build_certificate wants a cleaned input: no vertex with too many
# tuple appearances. clean_heavy peels the worst offenders first.
cleaned, removed = clean_heavy(raw, params.g_mid, n)
print("cleaned away %d heavy vertices: %s" % (len(removed), removed))

cert, chain = build_certificate(cleaned, params, seed=7, removed=removed)
print()
print("certificate: L = %d, case %d" % (cert.phase_count, cert.case_tag))
print("chain sizes |C_0| .. |C_L|:", [len(c) for c in chain.c])

# Replay. reconstruct_containers only sees the certificate.
replay = reconstruct_containers(cert, params)
assert replay.c == chain.c, "replay diverged from the build"
print("replay matches the build")

report = verify_certificate(cert, chain, cleaned, params)
print()
for cond in report.conditions:
    print("  %-26s %s" % (cond.name, "ok" if cond.holds else "FAIL %r" % cond.witness))
print("  containment_with_removed  ", "ok" if report.containment_with_removed else "FAIL")
print()
print("verified:", report.holds and report.containment_with_removed)

# The raw set is covered by the final container plus everything the
# certificate removed along the way.
covered = set(chain.last) | set(cert.removed)
for r in cert.r:
    covered |= set(r)
assert set(raw) <= covered
print("raw set is inside C_L + removals: True")
