#!/usr/bin/env python3
"""Convergence of the normalized cycle-count exponents log_q(n_k)/k^(l+1).

For the two closed-form families (0-cycles on the projective line, curves
on the projective plane) the sequence approaches 1/(deg^(dim-1) dim!);
the table prints terms, the distance to the limit, and the empirical 2/k
envelope used as a regression bound in the tests.
"""

import math

from cyclezeta import PrimePower, ProjSpace
from cyclezeta.zeta_series import abscissa_sequence, local_zeta_series


def table(space, q, l, kmax=24):
    rep = abscissa_sequence(space, q, l, kmax)
    print("=" * 64)
    print(f" {space.label()} over F_{q.q}, cycle dimension l={l}, "
          f"predicted limit {rep.predicted_limit}")
    print("=" * 64)
    print(f"{'k':>4} {'term':>12} {'|term-limit|':>14} {'2/k':>10}")
    for k in range(1, kmax + 1):
        gap = abs(rep.value(k) - rep.predicted_limit)
        flag = "" if gap <= 2.0 / k else "  <-- outside envelope"
        print(f"{k:>4} {rep.value(k):>12.6f} {gap:>14.6f} {2.0/k:>10.4f}{flag}")
    print()


def series_preview(space, q, l, kmax=6):
    s = local_zeta_series(space, q, l, kmax)
    print(f" zeta series of {space.label()} (l={l}), truncated:")
    terms = " + ".join(
        f"{c}*T^{s.exponent(k)}" for k, c in enumerate(s.coefficients) if c
    )
    print("   " + terms)
    print()


if __name__ == "__main__":
    q2 = PrimePower(2)
    series_preview(ProjSpace(1), q2, 0)
    table(ProjSpace(1), q2, 0)
    series_preview(ProjSpace(2), q2, 1)
    table(ProjSpace(2), q2, 1)
    # growth constants differ per q but the limit does not
    table(ProjSpace(1), PrimePower(5), 0, kmax=12)
