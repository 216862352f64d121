"""Construction and enumeration of palindromes in a given base.

Palindromes are generated from their half-values by mirroring, never by
scanning all integers, so enumeration over a range costs time proportional
to the number of palindromes produced.  The module also builds the
structured family N = a*g**n + rev(a): a base-g palindrome consisting of
the digits of ``a``, a run of zeros, and the reversed digits of ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .radix import DomainError, check_base, digit_count, reverse_in_base


class FamilyError(DomainError):
    """The requested family instance is not a well-formed palindrome."""


def _rev_value(n: int, g: int) -> int:
    # value of n's base-g digits reversed; 0 maps to 0 (empty high half)
    r = 0
    while n:
        n, d = divmod(n, g)
        r = r * g + d
    return r


def mirror_half(half: int, g: int, half_len: int, odd: bool) -> int:
    """Palindrome obtained by mirroring ``half`` (its ``half_len`` digits).

    For odd total length the last digit of ``half`` is the shared middle
    digit; for even total length the full half is mirrored.
    """
    if odd:
        return half * g ** (half_len - 1) + _rev_value(half // g, g)
    return half * g**half_len + _rev_value(half, g)


def make_even_palindrome(a: int, g: int) -> int:
    """The palindrome with an even digit count whose first half is ``a``.

    >>> make_even_palindrome(12, 10)
    1221
    >>> make_even_palindrome(585, 10)
    585585
    """
    check_base(g)
    if a < 1:
        raise DomainError("palindrome construction requires a positive half-value")
    return mirror_half(a, g, digit_count(a, g), odd=False)


def make_odd_palindrome(a: int, g: int) -> int:
    """The palindrome with an odd digit count sharing its middle digit with ``a``.

    >>> make_odd_palindrome(12, 10)
    121
    >>> make_odd_palindrome(123, 10)
    12321
    """
    check_base(g)
    if a < 1:
        raise DomainError("palindrome construction requires a positive half-value")
    return mirror_half(a, g, digit_count(a, g), odd=True)


def palindromes_with_length(g: int, d: int) -> int:
    """Exact count of base-``g`` palindromes with exactly ``d`` digits."""
    check_base(g)
    if d < 1:
        raise DomainError("digit length must be positive")
    return (g - 1) * g ** ((d + 1) // 2 - 1)


def _half_range(g: int, d: int) -> tuple[int, int, int, bool]:
    # half-value interval [lo, hi) producing the d-digit palindromes, ascending
    t = (d + 1) // 2
    return g ** (t - 1), g**t, t, d % 2 == 1


def _least_half_reaching(g: int, d: int, target: int) -> int:
    # smallest half whose mirrored palindrome is >= target (monotone bisection)
    lo, hi, t, odd = _half_range(g, d)
    if mirror_half(hi - 1, g, t, odd) < target:
        return hi
    while lo < hi:
        mid = (lo + hi) // 2
        if mirror_half(mid, g, t, odd) < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


def count_palindromes_upto(g: int, bound: int) -> int:
    """Exact count of base-``g`` palindromes in [1, bound]."""
    check_base(g)
    if bound < 1:
        return 0
    total = 0
    d = 1
    while True:
        lo, hi, t, odd = _half_range(g, d)
        if mirror_half(lo, g, t, odd) > bound:
            break
        total += _least_half_reaching(g, d, bound + 1) - lo
        d += 1
    return total


def iter_palindromes(g: int, lo: int, hi: int) -> Iterator[int]:
    """Yield the base-``g`` palindromes in [lo, hi], strictly ascending.

    Generated by digit length, then by half-value, so the stream is
    ascending without sorting and each palindrome appears exactly once.
    """
    check_base(g)
    if not 1 <= lo <= hi:
        raise DomainError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    d = 1
    while True:
        h0, h1, t, odd = _half_range(g, d)
        if mirror_half(h0, g, t, odd) > hi:
            return
        for half in range(_least_half_reaching(g, d, lo), h1):
            n = mirror_half(half, g, t, odd)
            if n > hi:
                break
            yield n
        d += 1


@dataclass(frozen=True)
class FamilyInstance:
    """The structured palindrome N = a*g**n + rev(a) with derived quantities.

    ``m`` is the length of the middle zero run, ``alpha`` the exact ratio
    a / rev(rev(a, g), h), ``k`` the base-h shift exponent of the known
    leading block, and ``m_tilde`` the number of base-h digits of N that
    are pinned down beyond that block.
    """

    a: int
    g: int
    h: int
    n: int
    N: int
    n_a: int
    m: int
    alpha: Fraction
    k: int
    m_tilde: int


def family_instance(a: int, g: int, h: int, n: int) -> FamilyInstance:
    """Build N = a*g**n + rev(a) and its derived quantities, all exactly.

    Requires ``n >= digit_count(a, g)`` so the digits of ``a`` and of its
    reversal do not overlap, and ``g`` not dividing ``a`` so that N really
    is a base-g palindrome.
    """
    check_base(g)
    check_base(h)
    if a < 1:
        raise DomainError("family prefix must be a positive integer")
    if n < 1:
        raise DomainError("shift exponent must be a positive integer")
    if a % g == 0:
        raise FamilyError(f"{g} divides {a}: the family value would not be a base-{g} palindrome")
    n_a = digit_count(a, g)
    if n < n_a:
        raise FamilyError(f"shift {n} overlaps the {n_a} digits of the prefix")
    rev_a = reverse_in_base(a, g)
    N = a * g**n + rev_a
    rr = reverse_in_base(rev_a, h)
    alpha = Fraction(a, rr)
    # k = floor(log_h(N / rr)), by exact integer comparison
    k = digit_count(N, h) - digit_count(rr, h)
    if rr * h**k > N:
        k -= 1
    elif rr * h ** (k + 1) <= N:
        k += 1
    m = n - n_a
    m_tilde = m + n_a - digit_count(rr, h)
    return FamilyInstance(a=a, g=g, h=h, n=n, N=N, n_a=n_a, m=m, alpha=alpha, k=k, m_tilde=m_tilde)


def zero_padded_palindrome(a: int, g: int, m: int, parity: str) -> int:
    """Palindrome whose base-g digits are digits(a), m zeros, then the mirror.

    For ``parity='even'`` the mirror is the full reversal of digits(a)
    followed by the zero run (so the middle run has 2*m zeros); for
    ``parity='odd'`` the zero run itself is the shared middle block.

    >>> zero_padded_palindrome(12, 10, 3, "even")
    1200000021
    >>> zero_padded_palindrome(1, 2, 2, "even")
    33
    """
    check_base(g)
    if a < 1:
        raise DomainError("prefix must be a positive integer")
    if m < 0:
        raise DomainError("zero-run length must be non-negative")
    if a % g == 0:
        raise FamilyError(f"{g} divides {a}: a trailing zero would break palindromicity")
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    n_a = digit_count(a, g)
    shift = n_a + (2 * m if parity == "even" else m)
    return a * g**shift + _rev_value(a, g)
