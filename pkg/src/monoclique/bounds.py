"""Closed-form bounds, identities, estimates and profile functions.

Every function returns a :class:`BoundValue`: an exact ``Fraction`` when the
formula is rational at the given arguments, otherwise an mpmath real carried
at ``PRECISION_DPS`` decimal digits.  ``log`` is base 2 throughout and ``ln``
is the natural logarithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence, Union

import mpmath

PRECISION_DPS = 60
# digits printed for approximate values
OUTPUT_DIGITS = 50

Real = Union[int, float, str, Fraction]


@dataclass(frozen=True)
class BoundValue:
    value: Union[Fraction, mpmath.mpf]
    exact: bool

    @classmethod
    def of(cls, x) -> "BoundValue":
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x), True)
        return cls(x, False)

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "approx"

    def __float__(self) -> float:
        return float(self.value)

    def to_mpf(self) -> mpmath.mpf:
        if self.exact:
            with mpmath.workdps(PRECISION_DPS):
                return mpmath.mpf(self.value.numerator) / self.value.denominator
        return self.value

    def __str__(self) -> str:
        if self.exact:
            v = self.value
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if mpmath.isinf(self.value):
            return "-inf" if self.value < 0 else "inf"
        return mpmath.nstr(self.value, OUTPUT_DIGITS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


def _approx(x) -> BoundValue:
    with mpmath.workdps(PRECISION_DPS):
        return BoundValue(+x, False)


def to_fraction(x: Real) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float (floats convert exactly)."""
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x}")
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as a rational")


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


@dataclass(frozen=True)
class AsymptoticParams:
    """Balancing parameters d = 3e^(1/4), d1 = 5e^(1/4), d2 = 6e^(1/4) for 0 < e < 1e-4."""

    epsilon: Fraction

    def __post_init__(self):
        eps = to_fraction(self.epsilon)
        if not 0 < eps < Fraction(1, 10**4):
            raise ValueError("epsilon must lie in (0, 1e-4)")
        object.__setattr__(self, "epsilon", eps)

    def _scaled_root(self, k: int) -> mpmath.mpf:
        with mpmath.workdps(PRECISION_DPS):
            return k * mpmath.root(_mpf(self.epsilon), 4)

    @property
    def d(self) -> mpmath.mpf:
        return self._scaled_root(3)

    @property
    def d1(self) -> mpmath.mpf:
        return self._scaled_root(5)

    @property
    def d2(self) -> mpmath.mpf:
        return self._scaled_root(6)


def ramsey_binomial_bound(s: int, t: int) -> BoundValue:
    """C(s+t-2, s-1), an upper bound on R(s, t)."""
    if s < 1 or t < 1:
        raise ValueError("s and t must be at least 1")
    return BoundValue.of(math.comb(s + t - 2, s - 1))


def erdos_ct_bounds(t: int, R_t: int) -> tuple[BoundValue, BoundValue]:
    """(1/C(R_t, t), 2^(1-C(t,2))) bracketing the limiting density of monochromatic K_t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if R_t < t:
        raise ValueError(f"R_t={R_t} is smaller than t={t}")
    return (BoundValue.of(Fraction(1, math.comb(R_t, t))),
            BoundValue.of(Fraction(2) ** (1 - math.comb(t, 2))))


def thm_lower_size_t(t: int) -> BoundValue:
    """(1/t!) 2^(C(t,2)-2): monochromatic K_t guaranteed in any coloring of K_{2^(2t-3)}."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return BoundValue.of(Fraction(2) ** (math.comb(t, 2) - 2) / math.factorial(t))


def cor_lower_size_k(n: int, k: int) -> BoundValue:
    """2^((-3k^2+5k-4)/2) C(n, k).

    The formula is evaluated for any 2 <= k <= n, but it is a guaranteed
    count only when k <= (log n)/2; see :func:`cor_lower_applies`.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got n={n}, k={k}")
    # -3k^2 + 5k - 4 is even for every integer k
    return BoundValue.of(Fraction(2) ** ((-3 * k * k + 5 * k - 4) // 2) * math.comb(n, k))


def cor_lower_applies(n: int, k: int) -> bool:
    """Whether 2 <= k <= (log n)/2, i.e. 4^k <= n."""
    return k >= 2 and 4**k <= n


def szekely_upper_product(t: int, k: int) -> BoundValue:
    """(2/k!) prod_{r<k} C(2t-2-r, t-1): at most this many size-k sets without a K_t."""
    if not 2 <= k < t:
        raise ValueError(f"need 2 <= k < t, got t={t}, k={k}")
    prod = math.prod(math.comb(2 * t - 2 - r, t - 1) for r in range(k))
    return BoundValue.of(Fraction(2 * prod, math.factorial(k)))


def _g(c: Fraction) -> BoundValue:
    if not 0 <= c <= 1:
        raise ValueError(f"g is defined on [0, 1], got {c}")
    if c == 0:
        return BoundValue.of(0)
    with mpmath.workdps(PRECISION_DPS + 10):
        log2e = mpmath.log(mpmath.e, 2)
        if c == 1:
            val = (4 - log2e) / 2
        else:
            x = _mpf(c)
            val = (4 - x * log2e + (1 - x) ** 2 * mpmath.log(1 - x, 2)
                   - (2 - x) ** 2 * mpmath.log(2 - x, 2)) / 2
    return _approx(val)


def profile_function(kind: str, c: Real) -> BoundValue:
    """g on [0,1]; g1(c) = g(2c)/4 on [0,1/2] and 0 beyond; g2(c) = c - c^2/2 on [0,2)."""
    c = to_fraction(c)
    if kind == "g":
        return _g(c)
    if kind == "g1":
        if c < 0:
            raise ValueError(f"g1 is defined for c >= 0, got {c}")
        if c > Fraction(1, 2):
            return BoundValue.of(0)
        inner = _g(2 * c)
        if inner.exact:
            return BoundValue.of(inner.value / 4)
        with mpmath.workdps(PRECISION_DPS):
            return _approx(inner.value / 4)
    if kind == "g2":
        if not 0 <= c < 2:
            raise ValueError(f"g2 is defined on [0, 2), got {c}")
        return BoundValue.of(c - c * c / 2)
    raise ValueError(f"unknown profile function {kind!r}")


def binary_entropy(p: Real) -> BoundValue:
    p = to_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p in (0, 1):
        return BoundValue.of(0)
    if p == Fraction(1, 2):
        return BoundValue.of(1)
    with mpmath.workdps(PRECISION_DPS):
        x = _mpf(p)
        return _approx(-x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2))


def entropy_binomial_check(n: int, k: int) -> bool:
    """C(n, k) <= 2^(n H(k/n))."""
    if not 0 <= k <= n or n < 1:
        raise ValueError("need 0 <= k <= n and n >= 1")
    h = binary_entropy(Fraction(k, n))
    with mpmath.workdps(PRECISION_DPS):
        return mpmath.log(math.comb(n, k), 2) <= n * h.to_mpf()


def log_barnes_g(n: int, mode: str = "exact") -> BoundValue:
    """ln prod_{k=0}^{n} k! (``exact``) or its leading term n^2 (ln n / 2 - 3/4) (``asymptotic``)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    with mpmath.workdps(PRECISION_DPS):
        if mode == "exact":
            if n == 1:
                return BoundValue.of(0)
            return _approx(mpmath.fsum(mpmath.loggamma(k + 1) for k in range(2, n + 1)))
        if mode == "asymptotic":
            return _approx(mpmath.mpf(n) ** 2 * (mpmath.log(n) / 2 - mpmath.mpf(3) / 4))
    raise ValueError(f"unknown mode {mode!r}")


LN_SECOND_LIMIT = Fraction(69, 100)


def ln_estimates_check(x: Real) -> tuple[bool, bool | None]:
    """(ln(1+x) > x - x^2/2, ln(1-x) > -x - x^2); the second is None for x >= 0.69."""
    x = to_fraction(x)
    if x <= 0:
        raise ValueError(f"the estimates need x > 0, got {x}")
    with mpmath.workdps(PRECISION_DPS):
        v = _mpf(x)
        first = bool(mpmath.log1p(v) > v - v * v / 2)
        second = None
        if x < LN_SECOND_LIMIT:
            second = bool(mpmath.log1p(-v) > -v - v * v)
    return first, second


def binom_shift_check(n: int, k: int, t: int) -> bool:
    """C(n+t, k+t) <= C(n, k) ((n+t)/k)^t, in exact integers."""
    if not n >= k >= 1 or t < 0:
        raise ValueError("need n >= k >= 1 and t >= 0")
    return math.comb(n + t, k + t) * k**t <= math.comb(n, k) * (n + t) ** t


_LOG2_04 = None
_LOG2_06 = None


def _f_logs():
    global _LOG2_04, _LOG2_06
    if _LOG2_04 is None:
        with mpmath.workdps(PRECISION_DPS + 10):
            _LOG2_04 = mpmath.log(mpmath.mpf(2) / 5, 2)
            _LOG2_06 = mpmath.log(mpmath.mpf(3) / 5, 2)
    return _LOG2_04, _LOG2_06


def f_delta(delta: Real) -> BoundValue:
    """1 + d^2/2 + log(0.4) d(1-d) + log(0.6) (1-d)^2/2."""
    d = to_fraction(delta)
    a, b = _f_logs()
    with mpmath.workdps(PRECISION_DPS):
        x = _mpf(d)
        return _approx(1 + x * x / 2 + a * x * (1 - x) + b * (1 - x) ** 2 / 2)


def f_delta_grid_min(step: Real = Fraction(1, 10**4)) -> tuple[Fraction, BoundValue]:
    """(argmin, min) of f over the grid 0, step, 2 step, ..., 1."""
    step = to_fraction(step)
    count = int(1 / step)
    if count * step != 1:
        raise ValueError("step must divide 1")
    best = None
    for i in range(count + 1):
        d = i * step
        v = f_delta(d)
        if best is None or v.value < best[1].value:
            best = (d, v)
    return best


def subset_sum_identity(t: int, N: int) -> tuple[Fraction, Fraction]:
    """(2^t / prod_{i<=t}(2^i - 1), sum over t-subsets S of {0..N} of 2^(-sum S))."""
    if t < 1 or N < t:
        raise ValueError("need t >= 1 and N >= t")
    closed = Fraction(2**t, math.prod(2**i - 1 for i in range(1, t + 1)))
    # e[j]: elementary symmetric sum of degree j in 1, 1/2, ..., 2^-N
    e = [Fraction(1)] + [Fraction(0)] * t
    for i in range(N + 1):
        x = Fraction(1, 2**i)
        for j in range(t, 0, -1):
            e[j] += e[j - 1] * x
    return closed, e[t]


def pentagonal_partial_product(m: int) -> BoundValue:
    """prod_{i=1}^{m} (1 - 2^-i), exactly."""
    if m < 1:
        raise ValueError("m must be at least 1")
    num = math.prod(2**i - 1 for i in range(1, m + 1))
    return BoundValue.of(Fraction(num, 2 ** (m * (m + 1) // 2)))


def thm36_params(t: int) -> tuple[int, BoundValue]:
    """q = floor(t/sqrt 2) and m = 2^(C(q,2)-1) / (4t)^t."""
    if t < 2:
        raise ValueError("t must be at least 2")
    q = math.isqrt(t * t // 2)
    return q, BoundValue.of(Fraction(2) ** (math.comb(q, 2) - 1) / (4 * t) ** t)


def avg_chain_lower(A: Union[Mapping[int, Real], Sequence[Real]]) -> BoundValue:
    """exp(sum_{i>=2} A(i)/i).  A sequence is read as A(2), A(3), ...

    Values may be rationals or mpmath reals; the sum stays exact until the
    first real term.
    """
    items = A.items() if isinstance(A, Mapping) else enumerate(A, start=2)
    total = Fraction(0)
    extra = mpmath.mpf(0)
    with mpmath.workdps(PRECISION_DPS):
        for i, a in items:
            if i < 2:
                raise ValueError("indices start at 2")
            if a < 0:
                raise ValueError("A(i) must be non-negative")
            if isinstance(a, mpmath.mpf):
                extra += a / i
            else:
                total += to_fraction(a) / i
        if total == 0 and extra == 0:
            return BoundValue.of(1)
        return _approx(mpmath.exp(_mpf(total) + extra))
