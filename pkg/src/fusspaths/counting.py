"""Closed-form counts of paths of a given type, in exact integer arithmetic.

Every formula here divides a product by an integer; the division must be
exact, and a nonzero remainder raises ExactnessError since it would mean the
formula was transcribed wrongly.
"""

from __future__ import annotations

from math import comb, factorial

from .partitions import check_partition, multiplicity_factor


class ExactnessError(ArithmeticError):
    """A formula division left a remainder; the transcription is wrong."""


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention 0 for b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ExactnessError("%d is not divisible by %d" % (num, den))
    return q


def dyck_by_type(n: int, parts: tuple[int, ...]) -> int:
    """Dyck paths of length n with type lambda: n(n-1)...(n-l+2) / m_lambda."""
    parts = check_partition(parts)
    if sum(parts) != n:
        return 0
    length = len(parts)
    falling = 1
    for i in range(length - 1):
        falling *= n - i
    return exact_div(falling, multiplicity_factor(parts))


def large_schroder_by_type(n: int, parts: tuple[int, ...]) -> int:
    """Large Schroder paths of length n with type lambda."""
    parts = check_partition(parts)
    size, length = sum(parts), len(parts)
    num = binomial(n, size) * binomial(n + 1, length) * factorial(length)
    return exact_div(num, (size + 1) * multiplicity_factor(parts))


def small_schroder_by_type(n: int, parts: tuple[int, ...]) -> int:
    """Small Schroder paths of length n with type lambda."""
    parts = check_partition(parts)
    size, length = sum(parts), len(parts)
    num = binomial(n - 1, size - 1) * binomial(n + 1, length) * factorial(length)
    return exact_div(num, (n + 1) * multiplicity_factor(parts))


def fuss_catalan_by_type(n: int, k: int, parts: tuple[int, ...]) -> int:
    """k-Fuss-Catalan paths of type lambda: (kn)! / (m_lambda * (kn+1-l)!)."""
    parts = check_partition(parts)
    if sum(parts) != n:
        return 0
    length = len(parts)
    return exact_div(
        factorial(k * n), multiplicity_factor(parts) * factorial(k * n + 1 - length)
    )


def small_fuss_by_type(n: int, k: int, parts: tuple[int, ...]) -> int:
    """Small (k, r)-Fuss-Schroder paths of type lambda; independent of r.

    Both published forms of the product are evaluated and must agree.
    """
    parts = check_partition(parts)
    size, length = sum(parts), len(parts)
    m = multiplicity_factor(parts)
    if length == 0:
        # C(n-1, -1) = 0: a small path needs at least one east run.
        return 0
    direct = exact_div(
        binomial(n - 1, size - 1) * binomial(n * k, length - 1) * factorial(length - 1),
        m,
    )
    cycled = exact_div(
        binomial(n - 1, size - 1) * binomial(n * k + 1, length) * factorial(length),
        (n * k + 1) * m,
    )
    if direct != cycled:
        raise ExactnessError(
            "small Fuss-Schroder forms disagree: %d vs %d" % (direct, cycled)
        )
    return direct


def free_paths_by_type(n: int, k: int, parts: tuple[int, ...]) -> int:
    """Paths of type lambda with diagonal steps confined to the rows i*k,
    2 <= i <= n: C(n-1,|l|-1) * C(nk+1, l) * l!/m_lambda."""
    parts = check_partition(parts)
    size, length = sum(parts), len(parts)
    num = binomial(n - 1, size - 1) * binomial(n * k + 1, length) * factorial(length)
    return exact_div(num, multiplicity_factor(parts))


def catalan_number(n: int) -> int:
    """C(2n, n) / (n + 1)."""
    return exact_div(binomial(2 * n, n), n + 1)


def large_schroder_number(n: int) -> int:
    """(1/n) * sum_k C(n, k-1) C(n, k) 2^k; 1 for n = 0."""
    if n == 0:
        return 1
    total = sum(binomial(n, k - 1) * binomial(n, k) * 2**k for k in range(1, n + 1))
    return exact_div(total, n)


def small_schroder_number(n: int) -> int:
    """Half the large Schroder number; 1 for n = 0."""
    if n == 0:
        return 1
    return exact_div(large_schroder_number(n), 2)


def fuss_catalan_number(n: int, k: int) -> int:
    """C((k+1)n, n) / (kn + 1)."""
    return exact_div(binomial((k + 1) * n, n), k * n + 1)
