"""Problem parameters and the sqrt(n)/log^k n threshold family.

All logarithms in this package are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def lg(x):
    """Base-2 logarithm, the only log used anywhere in this package."""
    return math.log2(x)


@dataclass(frozen=True)
class ProblemParams:
    """Ground-set size n, tuple budget alpha, and derived thresholds.

    alpha counts ordered Sidon 4-tuples (see sidon.core for the
    convention).  The constructor rejects n <= 2: every threshold
    divides by a power of lg n, and lg n > 1 is needed for the ordering
    g_low < g_mid < size_small to hold.
    """

    n: int
    alpha: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n <= 2:
            raise ValueError("n must be an integer >= 3 (lg n must exceed 1)")
        if not isinstance(self.alpha, int) or self.alpha < 0:
            raise ValueError("alpha must be a nonnegative integer")

    @property
    def g_low(self):
        """sqrt(n)/lg^4 n: the heavy-vertex cut and Phase-1 state threshold."""
        return math.sqrt(self.n) / lg(self.n) ** 4

    @property
    def g_mid(self):
        """sqrt(n)/lg^3 n: the cleaning threshold and later-phase state threshold."""
        return math.sqrt(self.n) / lg(self.n) ** 3

    @property
    def size_small(self):
        """sqrt(n)/lg n: the W-size / U_0-size / Phase-1 entry threshold."""
        return math.sqrt(self.n) / lg(self.n)

    @property
    def size_big(self):
        """sqrt(n)/sqrt(lg n): the minimum |I| for the sampled set-up."""
        return math.sqrt(self.n) / math.sqrt(lg(self.n))

    @property
    def w_probability(self):
        """2/sqrt(lg n): per-element inclusion probability for W-sampling."""
        return 2.0 / math.sqrt(lg(self.n))
