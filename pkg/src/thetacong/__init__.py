"""Toolkit for finding and verifying high-rank theta-congruent number elliptic curves.

The curves are E_{n,theta}: y^2 = x^3 + 2sn*x^2 - (r^2-s^2)n^2*x with
cos(theta) = s/r.  The package provides exact integer/rational arithmetic,
point counting over F_p, Mestre-Nagao sieve sums, descent via 2-isogeny
(Selmer ranks and rank lower bounds), candidate generation from coprime
pairs, and a batch-search CLI with checkpointing.
"""

from .curves import ThetaParams, CurveQ, PointQ, build_curve, PI_3, TWO_PI_3

__all__ = [
    "ThetaParams",
    "CurveQ",
    "PointQ",
    "build_curve",
    "PI_3",
    "TWO_PI_3",
]
