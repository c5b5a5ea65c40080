"""Two-sample statistics: F-test plus Student and Welch t-tests.

Everything is computed from scratch on top of a regularized incomplete
beta function (continued-fraction expansion), so the library carries no
statistics dependency.  Two-tailed p-values throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

Sample = Sequence[float]

_BETA_EPS = 1e-12
_BETA_MAX_ITER = 300
_BETA_TINY = 1e-30


class TestVariant(Enum):
    STUDENT_EQUAL_VAR = "student_equal_var"
    WELCH_UNEQUAL_VAR = "welch_unequal_var"
    F_VARIANCE_RATIO = "f_variance_ratio"


@dataclass(frozen=True)
class TestResult:
    """degrees_of_freedom_denom is only set for the F-test, whose
    distribution needs a second parameter."""

    statistic: float
    degrees_of_freedom: float
    p_value: float
    variant: TestVariant
    degrees_of_freedom_denom: float | None = None


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETA_TINY:
        d = _BETA_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_TINY:
            d = _BETA_TINY
        c = 1.0 + aa / c
        if abs(c) < _BETA_TINY:
            c = _BETA_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_TINY:
            d = _BETA_TINY
        c = 1.0 + aa / c
        if abs(c) < _BETA_TINY:
            c = _BETA_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise ArithmeticError(f"incomplete beta failed to converge for a={a}, b={b}, x={x}")


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function I_x(a, b)."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log(1.0 - x)
    )
    front = math.exp(ln_front)
    # use the fast-converging side, mirror via I_x(a,b) = 1 - I_{1-x}(b,a)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def _describe(sample: Sample, name: str) -> tuple[int, float, float]:
    values = list(sample)
    n = len(values)
    if n < 2:
        raise ValueError(f"sample {name} needs at least 2 values, got {n}")
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / (n - 1)
    return n, mean, var


def _t_p_value(t: float, df: float) -> float:
    """Two-tailed Student p via the incomplete beta."""
    return betainc(df / 2.0, 0.5, df / (df + t * t))


def t_test(a: Sample, b: Sample, variant: TestVariant) -> TestResult:
    """Two-sample two-tailed t-test.

    STUDENT_EQUAL_VAR pools the variances with df = n_a + n_b - 2;
    WELCH_UNEQUAL_VAR uses the Welch-Satterthwaite approximation.
    Degenerate zero-variance pairs short-circuit: equal means give
    p = 1, unequal means p = 0.
    """
    if variant is TestVariant.F_VARIANCE_RATIO:
        raise ValueError("t_test variant must be student or welch")
    na, ma, va = _describe(a, "a")
    nb, mb, vb = _describe(b, "b")
    if va == 0.0 and vb == 0.0:
        equal = ma == mb
        return TestResult(
            statistic=0.0 if equal else math.copysign(math.inf, ma - mb),
            degrees_of_freedom=float(na + nb - 2),
            p_value=1.0 if equal else 0.0,
            variant=variant,
        )
    if variant is TestVariant.STUDENT_EQUAL_VAR:
        df = float(na + nb - 2)
        pooled = ((na - 1) * va + (nb - 1) * vb) / df
        se = math.sqrt(pooled * (1.0 / na + 1.0 / nb))
    else:
        ra, rb = va / na, vb / nb
        df = (ra + rb) ** 2 / (ra**2 / (na - 1) + rb**2 / (nb - 1))
        se = math.sqrt(ra + rb)
    t = (ma - mb) / se
    return TestResult(
        statistic=t,
        degrees_of_freedom=df,
        p_value=_t_p_value(t, df),
        variant=variant,
    )


def f_test(a: Sample, b: Sample) -> TestResult:
    """Variance-ratio F-test, two-tailed.

    The statistic is the larger sample variance over the smaller so it
    is always >= 1; numerator degrees of freedom follow the larger
    variance.
    """
    na, _, va = _describe(a, "a")
    nb, _, vb = _describe(b, "b")
    if va == 0.0:
        raise ValueError("sample a has zero variance, F-test undefined")
    if vb == 0.0:
        raise ValueError("sample b has zero variance, F-test undefined")
    if va >= vb:
        stat, d1, d2 = va / vb, na - 1, nb - 1
    else:
        stat, d1, d2 = vb / va, nb - 1, na - 1
    cdf = betainc(d1 / 2.0, d2 / 2.0, d1 * stat / (d1 * stat + d2))
    p = 2.0 * min(cdf, 1.0 - cdf)
    return TestResult(
        statistic=stat,
        degrees_of_freedom=float(d1),
        p_value=p,
        variant=TestVariant.F_VARIANCE_RATIO,
        degrees_of_freedom_denom=float(d2),
    )


def compare_samples(a: Sample, b: Sample) -> tuple[TestResult | None, TestResult]:
    """The report pipeline: F-test first, then the t-test it selects.

    An F p-value below 0.05 picks Welch, otherwise Student.  When
    either sample has zero variance the F-test is undefined; we fall
    back to Welch (whose degenerate cases are well defined) and return
    None for the F result.
    """
    try:
        f_result = f_test(a, b)
    except ValueError:
        return None, t_test(a, b, TestVariant.WELCH_UNEQUAL_VAR)
    variant = (
        TestVariant.WELCH_UNEQUAL_VAR
        if f_result.p_value < 0.05
        else TestVariant.STUDENT_EQUAL_VAR
    )
    return f_result, t_test(a, b, variant)
