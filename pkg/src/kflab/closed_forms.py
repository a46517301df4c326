"""Closed-form Kirchhoff indices and transmissions as exact rationals.

Each evaluator returns the printed polynomial verbatim; agreement with the
resistance engine is checked elsewhere, never assumed here.
"""

from dataclasses import dataclass
from fractions import Fraction as F


class FormulaDomainError(ValueError):
    pass


@dataclass(frozen=True)
class CactusClassSpec:
    """The class Cat(n; t): ``n`` vertices and ``t`` cycles."""

    n: int
    t: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.t, int):
            raise FormulaDomainError("n and t must be integers")
        if self.n < 1:
            raise FormulaDomainError(f"n must be positive, got {self.n}")
        if not 0 <= self.t <= (self.n - 1) // 2:
            raise FormulaDomainError(f"t must lie in 0..{(self.n - 1) // 2} for n = {self.n}, got {self.t}")

    @property
    def s(self) -> int:
        """Order of the internal path."""
        return self.n - 2 * self.t

    @property
    def k(self) -> int:
        return self.t // 2


def _need(cond, msg):
    if not cond:
        raise FormulaDomainError(msg)


def kf_path(m: int) -> F:
    _need(m >= 1, "path order must be at least 1")
    return F(m ** 3 - m, 6)


def kf_path_end_transmission(m: int) -> F:
    _need(m >= 1, "path order must be at least 1")
    return F((m - 1) * m, 2)


def kf_cycle(l: int) -> F:
    _need(l >= 3, "cycle length must be at least 3")
    return F(l ** 3 - l, 12)


def kf_cycle_transmission(l: int) -> F:
    _need(l >= 3, "cycle length must be at least 3")
    return F(l ** 2 - 1, 6)


def kf_triangle_chain(k: int) -> F:
    _need(k >= 0, "k must be non-negative")
    return F(2, 9) * (2 * k ** 3 + 6 * k ** 2 + k)


def kf_triangle_chain_transmission(k: int) -> F:
    _need(k >= 0, "k must be non-negative")
    return F(2, 3) * (k ** 2 + k)


def kf_gadget_g10(k: int) -> tuple[F, F, F]:
    """Kf of the triangle-with-tail gadget on ``k`` vertices, and the
    transmissions at the free tail end and at a degree-2 triangle vertex."""
    _need(k > 3, "gadget needs k > 3")
    kf = F(k ** 3 - 11 * k + 18, 6)
    tail_end = F(3 * k ** 2 - 3 * k - 10, 6)
    triangle = F(3 * k ** 2 - 11 * k + 14, 6)
    return kf, tail_end, triangle


def kf_F_and_transmission(k: int, s: int) -> tuple[F, F]:
    """Triangle chain Q_k with a path P_s hanging from its root: (Kf, transmission at the far path end)."""
    _need(k >= 0 and s >= 1, "need k >= 0 and s >= 1")
    kf = F(2, 9) * (2 * k ** 3 + 3 * k ** 2 - 2 * k) + F(s ** 3 - s, 6) + F(k * s * (2 * k + 3 * s - 1), 3)
    trans = F(s ** 2 - s, 2) + F(2, 3) * (k ** 2 + k) + 2 * k * (s - 1)
    return kf, trans


def kf_extremal_chain(spec: CactusClassSpec) -> F:
    n, t = spec.n, spec.t
    if t % 2 == 0:
        return F(3 * n ** 3 - 3 * n - 12 * n * t ** 2 - 6 * n * t + 8 * t ** 3 + 12 * t ** 2 - 2 * t, 18)
    return F(3 * n ** 3 - 15 * n - 12 * n * t ** 2 - 6 * n * t + 8 * t ** 3 + 12 * t ** 2 + 22 * t + 12, 18)


def op3_gain(k: int, g1_order: int) -> F:
    _need(k > 3 and g1_order >= 1, "need k > 3 and |G1| >= 1")
    return F((k - 3) * (k ** 2 + 3 * k - 12), 12) + F((g1_order - 1) * (2 * k + 3) * (k - 3), 6)


def op4_gain_lower_bound(k: int) -> F:
    _need(k > 3, "need k > 3")
    return F((2 * k - 5) * (k - 3), 6)


def op5_gain(k: int, g1_order: int, g2_order: int) -> F:
    _need(k > 3 and g1_order >= 1 and g2_order >= 1, "need k > 3 and positive orders")
    return (F(4, 3) * k - 4) * (g2_order - g1_order)


def op2_transmission_gap(s: int, x_order: int, r_u2_x, kf_x, kf_u2) -> F:
    """Transmission difference between the far end of the hung path and ``u2``."""
    return (s - 1) * (x_order - 1 - F(r_u2_x)) + F(kf_x) - F(kf_u2)
