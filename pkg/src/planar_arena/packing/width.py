"""Gap widths that force long surrounding chains.

width(r1, r2, d) returns a clearance between circles of radii r1 and r2
below which any chain of circles surrounding the first one through the
gap (avoiding the second) must contain at least d circles.  The bound
comes from sandwiching the gap between the parabolas -x^2/r1 and
eps + x^2/r2 over a half-interval a = min(r1, r2)/2: every chain circle
in the corridor |x| <= x0 has diameter at most 2(eps + (1/r1 + 1/r2) x^2),
and the optimal corridor half-width is x0 = sqrt(eps / (1/r1 + 1/r2)).
Half of the solved eps is returned as safety margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..graphs import InvalidParameter
from .core import Circle, apollonius_external, gap


@dataclass(frozen=True)
class WidthParams:
    delta1: float
    delta2: float
    a: float
    x0: float
    eps: float


def width_params(r1: float, r2: float, d: int) -> WidthParams:
    if r1 <= 0 or r2 <= 0:
        raise InvalidParameter("radii must be positive")
    if d < 1:
        raise InvalidParameter("chain demand d must be >= 1")
    delta1, delta2 = 1.0 / r1, 1.0 / r2
    sum_delta = delta1 + delta2
    a = min(r1, r2) / 2
    eps = 1.0 / (16.0 * d * d * sum_delta)
    x0 = math.sqrt(eps / sum_delta)
    if x0 > a:
        # unreachable for d >= 1 (x0 <= min/4 < a); kept as a guard
        x0 = a
        eps = max(a / (2 * d) - sum_delta * a * a, eps / 4)
    return WidthParams(delta1, delta2, a, x0, eps)


def width(r1: float, r2: float, d: int) -> float:
    return width_params(r1, r2, d).eps / 2


def parabola_bounds_hold(params: WidthParams, r1: float, r2: float,
                         eps: float, samples: int = 257) -> bool:
    """Check the sandwich on a grid: -delta1 x^2 stays below the upper half
    of the first circle, and eps + delta2 x^2 stays above the lower half of
    the second (centers (0, -r1) and (0, r2 + eps))."""
    for i in range(samples):
        x = -params.a + (2 * params.a) * i / (samples - 1)
        if x * x > r1 * r1 or x * x > r2 * r2:
            return False
        upper1 = -r1 + math.sqrt(r1 * r1 - x * x)
        lower2 = (r2 + eps) - math.sqrt(r2 * r2 - x * x)
        if -params.delta1 * x * x > upper1 + 1e-12:
            return False
        if eps + params.delta2 * x * x < lower2 - 1e-12:
            return False
    return True


def greedy_chain_count(r1: float, r2: float, eps: float, x_limit: float) -> int:
    """Independent oracle: march maximal circles through the gap.

    Builds the two nearly-touching circles at clearance eps, seeds the
    chain with the radius-eps/2 circle pinched at x = 0, then repeatedly
    takes the tangent-to-all-three successor advancing in +x.  Returns how
    many chain circles have center x-coordinate within x_limit.
    """
    omega1 = Circle(0.0, -r1, r1)
    omega2 = Circle(0.0, r2 + eps, r2)
    chain = [Circle(0.0, eps / 2, eps / 2)]
    count = 1
    for _ in range(10000):
        prev = chain[-1]
        sols = [
            c for c in apollonius_external(omega1, omega2, prev)
            if c.x > prev.x + 1e-15
        ]
        if not sols:
            break
        nxt = min(sols, key=lambda c: c.x)
        if nxt.x > x_limit:
            break
        chain.append(nxt)
        count += 1
    return count


def chain_is_valid(r1: float, r2: float, eps: float, chain: list[Circle],
                   tol: float = 1e-7) -> bool:
    omega1 = Circle(0.0, -r1, r1)
    omega2 = Circle(0.0, r2 + eps, r2)
    for i, c in enumerate(chain):
        if gap(c, omega1) < -tol or gap(c, omega2) < -tol:
            return False
        if i and abs(gap(c, chain[i - 1])) > tol * max(c.r, chain[i - 1].r, 1e-9):
            return False
    return True
