"""Hyperfactorials and the closed-form tiling-count formulas.

Hyperfactorials H(n) = 0! 1! ... (n-1)! extend to half-integer n as the
product of Gamma(k + 1/2) for k = 0 .. n-1/2.  Since Gamma(k + 1/2) is an
exact rational times sqrt(pi), every value handled here lives in the domain
q * sqrt(pi)**k with q rational, represented exactly by SqrtPiScaled.  The
closed-form region counts are quotients of such values in which all sqrt(pi)
powers and denominators cancel; the evaluators assert that cancellation and
return plain integers.

Each formula is written once as a list of (argument, exponent) pairs of
hyperfactorials, shared by the exact evaluator and by a log-space float
evaluator used for asymptotic ratios at sizes where the exact products
would have thousands of digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

HalfInt = Fraction  # restricted to denominator 1 or 2 by _as_halfint

Terms = list[tuple["HalfInt | int", int]]  # (hyperfactorial argument, exponent)


def _as_halfint(n) -> Fraction:
    n = Fraction(n)
    if n.denominator not in (1, 2):
        raise ValueError(f"expected an integer or half-integer, got {n}")
    return n


def half(twice_value: int) -> Fraction:
    """The half-integer twice_value / 2."""
    return Fraction(twice_value, 2)


@dataclass(frozen=True)
class SqrtPiScaled:
    """An exact value q * sqrt(pi)**k with q rational and k an integer.

    Zero is canonicalized to k = 0 so that equality is structural.  Sums
    are only defined between values of equal sqrt(pi) exponent (or zero).
    """

    q: Fraction = field(default_factory=lambda: Fraction(0))
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 0 and self.k != 0:
            object.__setattr__(self, "k", 0)

    def __mul__(self, other: "SqrtPiScaled") -> "SqrtPiScaled":
        return SqrtPiScaled(self.q * other.q, self.k + other.k)

    def __truediv__(self, other: "SqrtPiScaled") -> "SqrtPiScaled":
        if other.q == 0:
            raise ZeroDivisionError("division by zero SqrtPiScaled")
        return SqrtPiScaled(self.q / other.q, self.k - other.k)

    def __add__(self, other: "SqrtPiScaled") -> "SqrtPiScaled":
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if self.k != other.k:
            raise ValueError(
                f"cannot add sqrt(pi) exponents {self.k} and {other.k} exactly"
            )
        return SqrtPiScaled(self.q + other.q, self.k)

    def __pow__(self, exponent: int) -> "SqrtPiScaled":
        if exponent >= 0:
            return SqrtPiScaled(self.q ** exponent, self.k * exponent)
        return SqrtPiScaled(Fraction(1), 0) / self ** (-exponent)

    def is_integer(self) -> bool:
        return self.k == 0 and self.q.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer():
            raise ValueError(f"value {self} is not an integer")
        return self.q.numerator

    def as_fraction(self) -> Fraction:
        if self.k != 0:
            raise ValueError(f"value {self} carries sqrt(pi)**{self.k}")
        return self.q

    def __float__(self) -> float:
        return float(self.q) * math.pi ** (self.k / 2)

    def __repr__(self) -> str:
        if self.k == 0:
            return f"SqrtPiScaled({self.q})"
        return f"SqrtPiScaled({self.q} * sqrt(pi)**{self.k})"


ONE = SqrtPiScaled(Fraction(1), 0)


# ---------------------------------------------------------------------------
# hyperfactorials, exact and in log-space
# ---------------------------------------------------------------------------

_H_INT = [Fraction(1), Fraction(1)]  # H(0), H(1)
_GAMMA_HALF_Q = [Fraction(1)]  # rational part of Gamma(k + 1/2)
_H_HALF_Q = [Fraction(1)]  # rational part of H(t + 1/2), index t


def _hyper_int(n: int) -> Fraction:
    while len(_H_INT) <= n:
        k = len(_H_INT) - 1
        _H_INT.append(_H_INT[-1] * math.factorial(k))
    return _H_INT[n]


def _gamma_half_q(k: int) -> Fraction:
    # Gamma(k + 1/2) = (2k)! / (4**k k!) * sqrt(pi)
    while len(_GAMMA_HALF_Q) <= k:
        t = len(_GAMMA_HALF_Q)
        _GAMMA_HALF_Q.append(_GAMMA_HALF_Q[-1] * Fraction(2 * t - 1, 2))
    return _GAMMA_HALF_Q[k]


def _hyper_half_q(t: int) -> Fraction:
    # rational part of H(t + 1/2) = prod_{k=0..t} Gamma(k + 1/2)
    while len(_H_HALF_Q) <= t:
        _H_HALF_Q.append(_H_HALF_Q[-1] * _gamma_half_q(len(_H_HALF_Q)))
    return _H_HALF_Q[t]


def hyperfactorial(n) -> SqrtPiScaled:
    """H(n) for n a nonnegative integer or half-integer.

    H(n) = prod of Gamma(k+1) for integer n, prod of Gamma(k+1/2) for
    half-integer n; H(0) = 1.
    """
    n = _as_halfint(n)
    if n < 0:
        raise ValueError(f"hyperfactorial argument must be nonnegative, got {n}")
    if n.denominator == 1:
        return SqrtPiScaled(_hyper_int(int(n)), 0)
    t = int(n - Fraction(1, 2))
    return SqrtPiScaled(_hyper_half_q(t), t + 1)


def gamma_halfint(n) -> SqrtPiScaled:
    """Gamma(n) for n a positive integer or half-integer, exactly."""
    n = _as_halfint(n)
    if n <= 0:
        raise ValueError(f"gamma argument must be positive, got {n}")
    if n.denominator == 1:
        return SqrtPiScaled(Fraction(math.factorial(int(n) - 1)), 0)
    return SqrtPiScaled(_gamma_half_q(int(n - Fraction(1, 2))), 1)


_LOG_H_INT = [0.0, 0.0]
_LOG_H_HALF = [math.lgamma(0.5)]


def log_hyperfactorial(n) -> float:
    """log H(n) as a float, for asymptotic ratio work."""
    n = _as_halfint(n)
    if n < 0:
        raise ValueError(f"hyperfactorial argument must be nonnegative, got {n}")
    if n.denominator == 1:
        m = int(n)
        while len(_LOG_H_INT) <= m:
            k = len(_LOG_H_INT) - 1
            _LOG_H_INT.append(_LOG_H_INT[-1] + math.lgamma(k + 1))
        return _LOG_H_INT[m]
    t = int(n - Fraction(1, 2))
    while len(_LOG_H_HALF) <= t:
        k = len(_LOG_H_HALF)
        _LOG_H_HALF.append(_LOG_H_HALF[-1] + math.lgamma(k + 0.5))
    return _LOG_H_HALF[t]


def _eval_exact(terms: Terms) -> SqrtPiScaled:
    value = ONE
    for arg, exp in terms:
        value = value * hyperfactorial(arg) ** exp
    return value


def _eval_log(terms: Terms) -> float:
    return sum(exp * log_hyperfactorial(arg) for arg, exp in terms)


# ---------------------------------------------------------------------------
# the product formulas as hyperfactorial term lists
# ---------------------------------------------------------------------------


def _macmahon_terms(a: int, b: int, c: int) -> Terms:
    return [
        (a, 1), (b, 1), (c, 1), (a + b + c, 1),
        (a + b, -1), (a + c, -1), (b + c, -1),
    ]


def _magnet_terms(x: int, y: int, a: int, b: int, c: int, m: int) -> Terms:
    return [
        (m, 2), (a, 1), (b, 1), (c, 1), (m + a + b + c, 1),
        (m + a, -1), (m + b, -1), (m + c, -1),
        (x + m + a + c, 1), (y + m + b + c, 1), (x + y + m + c, -1),
        (x + y + c, 1), (x + a + c, -1), (y + b + c, -1),
        (x + y + m + a + b + c, 1),
        (x + m + a + b + c, -1), (y + m + a + b + c, -1),
        (x, 1), (y, 1), (x + y, -1),
    ]


def _sc_same_parity_terms(x, y, z, a, b, c, m) -> Terms:
    """S-cored hexagon count when x, y, z share a parity."""
    Q = m + a + b + c
    q2 = Fraction(Q, 2)
    hxy, hxz, hyz = (x + y) // 2, (x + z) // 2, (y + z) // 2
    cs, fs = -((x + y + z) // -2), (x + y + z) // 2  # ceil and floor of the half-sum
    cx, fx = -(x // -2), x // 2
    cy, fy = -(y // -2), y // 2
    cz, fz = -(z // -2), z // 2
    return [
        (m, 3), (a, 1), (b, 1), (c, 1), (m + a, -1), (m + b, -1), (m + c, -1),
        (hxy + m + a + b, 1), (hxz + m + a + c, 1), (hyz + m + b + c, 1),
        (hxy + m + c, -1), (hxz + m + b, -1), (hyz + m + a, -1),
        (hxy + c, 1), (hxz + b, 1), (hyz + a, 1),
        (hxy + a + b, -1), (hxz + a + c, -1), (hyz + b + c, -1),
        (x + Q, 1), (y + Q, 1), (x + y + Q, -1), (x + z + Q, -1),
        (z + Q, 1), (x + y + z + Q, 1), (y + z + Q, -1),
        (cs + Q, 1), (fs + Q, 1), (hxy + Q, -1), (hxz + Q, -1), (hyz + Q, -1),
        (cx, 1), (fx, 1), (cy, 1),
        (cx + q2, -1), (fx + q2, -1), (cy + q2, -1),
        (fy, 1), (cz, 1), (fz, 1),
        (fy + q2, -1), (cz + q2, -1), (fz + q2, -1),
        (q2, 2), (hxy + q2, 2), (hxz + q2, 2), (hyz + q2, 2),
        (cs + q2, -1), (fs + q2, -1), (hxy, -1), (hxz, -1), (hyz, -1),
    ]


def _sc_mixed_parity_terms(x, y, z, a, b, c, m) -> Terms:
    """S-cored hexagon count when x has the parity opposite to y and z."""
    Q = m + a + b + c
    q2 = Fraction(Q, 2)
    cxy, fxy = -((x + y) // -2), (x + y) // 2
    cxz, fxz = -((x + z) // -2), (x + z) // 2
    hyz = (y + z) // 2
    cs, fs = -((x + y + z) // -2), (x + y + z) // 2
    cx, fx = -(x // -2), x // 2
    cy, fy = -(y // -2), y // 2
    cz, fz = -(z // -2), z // 2
    return [
        (m, 3), (a, 1), (b, 1), (c, 1), (m + a, -1), (m + b, -1), (m + c, -1),
        (fxy + m + a + b, 1), (cxz + m + a + c, 1), (hyz + m + b + c, 1),
        (cxy + m + c, -1), (fxz + m + b, -1), (hyz + m + a, -1),
        (cxy + c, 1), (fxz + b, 1), (hyz + a, 1),
        (fxy + a + b, -1), (cxz + a + c, -1), (hyz + b + c, -1),
        (x + Q, 1), (y + Q, 1), (x + y + Q, -1), (x + z + Q, -1),
        (z + Q, 1), (x + y + z + Q, 1), (y + z + Q, -1),
        (cs + Q, 1), (fs + Q, 1), (fxy + Q, -1), (cxz + Q, -1), (hyz + Q, -1),
        (cx, 1), (fx, 1), (cy, 1),
        (cx + q2, -1), (fx + q2, -1), (cy + q2, -1),
        (fy, 1), (cz, 1), (fz, 1),
        (fy + q2, -1), (cz + q2, -1), (fz + q2, -1),
        (q2, 2), (cxy + q2, 1), (fxy + q2, 1),
        (cs + q2, -1), (fs + q2, -1), (cxy, -1),
        (cxz + q2, 1), (fxz + q2, 1), (hyz + q2, 2),
        (fxz, -1), (hyz, -1),
    ]


def _parity_class(x: int, y: int, z: int) -> str:
    px, py, pz = x % 2, y % 2, z % 2
    if px == py == pz:
        return "same"
    if py == pz:
        return "x"
    if px == pz:
        return "y"
    return "z"


def _sc_terms(x, y, z, a, b, c, m) -> Terms:
    """Term list for M(SC_{x,y,z}(a,b,c,m)), any parity pattern.

    When y or z is the parity odd-one-out the parameters are first rotated
    cyclically, (x,y,z,a,b,c) -> (y,z,x,b,c,a), which matches the lattice
    rotation carrying one region onto the other.
    """
    cls = _parity_class(x, y, z)
    if cls == "same":
        return _sc_same_parity_terms(x, y, z, a, b, c, m)
    if cls == "x":
        return _sc_mixed_parity_terms(x, y, z, a, b, c, m)
    if cls == "y":
        return _sc_mixed_parity_terms(y, z, x, b, c, a, m)
    return _sc_mixed_parity_terms(z, x, y, c, a, b, m)


def _check_args(**params: int) -> None:
    for name, value in params.items():
        if value < 0 or int(value) != value:
            raise ValueError(f"parameter {name} must be a nonnegative integer")


# ---------------------------------------------------------------------------
# public evaluators
# ---------------------------------------------------------------------------


def macmahon_P(a: int, b: int, c: int) -> int:
    """Number of lozenge tilings of the hexagon with sides a, b, c, a, b, c."""
    _check_args(a=a, b=b, c=c)
    return _eval_exact(_macmahon_terms(a, b, c)).as_integer()


def sc_formula(x: int, y: int, z: int, a: int, b: int, c: int, m: int) -> int:
    """Closed-form number of lozenge tilings of SC_{x,y,z}(a,b,c,m)."""
    _check_args(x=x, y=y, z=z, a=a, b=b, c=c, m=m)
    return _eval_exact(_sc_terms(x, y, z, a, b, c, m)).as_integer()


def log_sc_formula(x: int, y: int, z: int, a: int, b: int, c: int, m: int) -> float:
    """log of sc_formula, evaluated without building the exact product."""
    _check_args(x=x, y=y, z=z, a=a, b=b, c=c, m=m)
    return _eval_log(_sc_terms(x, y, z, a, b, c, m))


def magnet_bar_formula(x: int, y: int, a: int, b: int, c: int, m: int) -> int:
    """Closed-form number of lozenge tilings of the magnet bar B_{x,y}(a,b,c,m)."""
    _check_args(x=x, y=y, a=a, b=b, c=c, m=m)
    return _eval_exact(_magnet_terms(x, y, a, b, c, m)).as_integer()


@lru_cache(maxsize=None)
def sc_rhs(x: int, y: int, z: int, a: int, b: int, c: int, m: int) -> SqrtPiScaled:
    """The right-hand-side value used in the recurrence identities.

    Dispatches on the parity pattern of (x, y, z): the same-parity product
    when all three agree, the mixed-parity product when the first parameter
    is the odd one out.  Other patterns never occur in the identities and
    are rejected.
    """
    cls = _parity_class(x, y, z)
    if cls == "same":
        return _eval_exact(_sc_same_parity_terms(x, y, z, a, b, c, m))
    if cls == "x":
        return _eval_exact(_sc_mixed_parity_terms(x, y, z, a, b, c, m))
    raise ValueError(
        f"parity pattern of ({x},{y},{z}) is outside the identity's domain"
    )


def shamrock_ratio(a: int, b: int, c: int, m: int) -> Fraction:
    """Tiling-count ratio of the exteriors of S(a,b,c,m) and S(a+b+c,0,0,m).

    Equals H(a)H(b)H(c)H(a+b+c+m)H(m)^2 / (H(a+m)H(b+m)H(c+m)H(a+b+c)),
    always a (positive integer) rational.
    """
    _check_args(a=a, b=b, c=c, m=m)
    terms: Terms = [
        (a, 1), (b, 1), (c, 1), (a + b + c + m, 1), (m, 2),
        (a + m, -1), (b + m, -1), (c + m, -1), (a + b + c, -1),
    ]
    return _eval_exact(terms).as_fraction()


def shamrock_ratio_factored(a: int, b: int, c: int, m: int) -> tuple[int, int]:
    """The same ratio as the pair of hexagon counts (P(a,b,m), P(a+b,c,m))."""
    return macmahon_P(a, b, m), macmahon_P(a + b, c, m)


def shamrock_ratio_symmetric_factored(a: int, b: int, c: int) -> tuple[int, int]:
    """For m = a+b+c the ratio factors as (P(a,b,c), P(a+b,b+c,c+a))."""
    return macmahon_P(a, b, c), macmahon_P(a + b, b + c, c + a)


def omega_single(m: int) -> float:
    """Correlation of the shamrock S(m,0,0,m): sqrt(3)**(m*m)/(2 pi)**m * H(m)**4/H(2m)."""
    _check_args(m=m)
    log_value = (
        m * m * 0.5 * math.log(3.0)
        - m * math.log(2.0 * math.pi)
        + 4.0 * log_hyperfactorial(m)
        - log_hyperfactorial(2 * m)
    )
    return math.exp(log_value)


def omega_finite(m: int, x: int) -> float:
    """Finite-size correlation M(SC_{x,x,x}(m,0,0,m)) / M(H(x+m,x+m,x+m)).

    Approaches omega_single(m) as x grows; evaluated in log-space.
    """
    _check_args(m=m, x=x)
    log_ratio = _eval_log(_sc_terms(x, x, x, m, 0, 0, m)) - _eval_log(
        _macmahon_terms(x + m, x + m, x + m)
    )
    return math.exp(log_ratio)


def finite_shamrock_ratio(a: int, b: int, c: int, m: int, n: int) -> float:
    """M(SC_{N,N,N}(a,b,c,m)) / M(SC_{N,N,N}(a+b+c,0,0,m)) at N = n, in log-space.

    Converges to shamrock_ratio(a, b, c, m) as n grows.
    """
    _check_args(a=a, b=b, c=c, m=m, n=n)
    log_ratio = _eval_log(_sc_terms(n, n, n, a, b, c, m)) - _eval_log(
        _sc_terms(n, n, n, a + b + c, 0, 0, m)
    )
    return math.exp(log_ratio)


def glaisher_ratio(n: int, a: int, b: int, c: int) -> float:
    """H(N)H(N+a+b)H(N+a+c)H(N+b+c) / (H(N+a)H(N+b)H(N+c)H(N+a+b+c)) at N = n.

    Tends to 1 as n grows, by the Glaisher-Kinkelin asymptotics of the
    hyperfactorial.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_args(a=a, b=b, c=c)
    terms: Terms = [
        (n, 1), (n + a + b, 1), (n + a + c, 1), (n + b + c, 1),
        (n + a, -1), (n + b, -1), (n + c, -1), (n + a + b + c, -1),
    ]
    return math.exp(_eval_log(terms))


def cancellation_lhs(x, y) -> SqrtPiScaled:
    """H(ceil(x+y)) H(floor(x+y)) / (H(ceil(x-1/2)+y) H(floor(x-1/2)+y)).

    The cancellation rule states this equals Gamma(ceil(x+y)) for x an
    integer or half-integer and y a nonnegative integer.  (For half-integer
    y the quotient picks up stray sqrt(pi) powers and the identity fails;
    see the verification module.)
    """
    x, y = _as_halfint(x), _as_halfint(y)
    s = x + y
    num = hyperfactorial(math.ceil(s)) * hyperfactorial(math.floor(s))
    den = hyperfactorial(math.ceil(x - Fraction(1, 2)) + y) * hyperfactorial(
        math.floor(x - Fraction(1, 2)) + y
    )
    return num / den
