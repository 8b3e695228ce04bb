# Numeric audit of the counting bounds at a concrete n.
#
# Each check evaluates one inequality chain from the certificate-count
# argument with exact arithmetic on the left (big-integer binomial sums,
# log-gamma only for real arguments) and the closed-form budget on the
# right. components always sum to lhs; the named steps are the chain
# links, printed here so the slack at each link is visible.

from sidon import (
    certificate_count_check,
    containers_per_certificate_check,
    family_count_check,
    u_choice_product_check,
)

n = 1 << 16


def show(report, label):
    print("%s  lhs=%.3f rhs=%.3f holds=%s" % (label, report.lhs, report.rhs, report.holds))
    for s in report.steps:
        print("    %-28s %12.3f <= %-12.3f %s"
              % (s.name, s.lhs, s.rhs, "ok" if s.holds else "FAIL"))


show(u_choice_product_check(n), "u_choice_product")
print()

for ell in (0, 1, 2):
    show(certificate_count_check(n, ell), "certificate_count ell=%d" % ell)
    print()

# Case 3 is the interesting one: the Stirling-style step is only valid
# because the case precondition pins x = 12n/|C_L| below sqrt(n).
size_cl = int(24 * n ** 0.5)
show(containers_per_certificate_check(n, 3, size_cl), "containers case=3")
print()

show(family_count_check(n), "family_count")

rep = family_count_check(n)
parts = sum(rep.components.values())
print()
print("components sum back to lhs: %.6f == %.6f" % (parts, rep.lhs))
