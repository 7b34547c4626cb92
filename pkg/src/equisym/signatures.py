"""Fuchsian signature arithmetic.

A cocompact Fuchsian group is determined up to isomorphism by its signature
``(h; m_1, ..., m_r)``: the genus ``h`` of the quotient orbifold together
with the branch periods ``m_j >= 2`` of its cone points.  Everything in this
module is exact integer / rational arithmetic on signatures:

* hyperbolicity (negative orbifold Euler characteristic),
* the Teichmueller dimension ``6h - 6 + 2r``,
* the Riemann-Hurwitz relation ``2g - 2 = n(2h - 2 + sum(1 - 1/m_j))``
  linking a degree-``n`` cover of genus ``g`` to its quotient signature,
* enumeration of the quotient data admissible for a prime-order or a
  general cyclic automorphism of a genus-``g`` surface,
* maximality of a signature against the classical finite list of
  dimension-preserving Fuchsian extensions (see :mod:`equisym.singerman`).

Floating point is never used: Riemann-Hurwitz integrality is a hard
criterion and must be decided exactly.  All functions are pure; the module
is safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import singerman


class NonIntegral(ValueError):
    """Riemann-Hurwitz has no integral solution: no such cover exists."""


class GenusTooSmall(ValueError):
    """Riemann-Hurwitz solves to a cover of genus < 2."""


@dataclass(frozen=True, order=True)
class Signature:
    """Quotient-orbifold datum ``(h; m_1, ..., m_r)``.

    Periods are stored sorted ascending so that equal signatures compare
    and hash equal.  Construction rejects non-hyperbolic data: the orbifold
    Euler characteristic ``2 - 2h - sum(1 - 1/m_j)`` must be negative,
    which rules out the spherical and Euclidean cases such as ``(0;)``,
    ``(0;m)``, ``(0;m,n)``, ``(1;)`` and ``(0;2,3,6)``.
    """

    quotient_genus: int
    periods: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.quotient_genus < 0:
            raise ValueError("quotient genus must be non-negative")
        periods = tuple(sorted(int(m) for m in self.periods))
        if any(m < 2 for m in periods):
            raise ValueError("every period must be an integer >= 2")
        object.__setattr__(self, "periods", periods)
        if self.orbifold_euler_characteristic >= 0:
            raise ValueError(
                "signature (%d; %s) is not hyperbolic"
                % (self.quotient_genus, ",".join(map(str, periods)))
            )

    @property
    def r(self) -> int:
        """Number of branch periods."""
        return len(self.periods)

    @property
    def orbifold_euler_characteristic(self) -> Fraction:
        chi = Fraction(2 - 2 * self.quotient_genus)
        for m in self.periods:
            chi -= Fraction(m - 1, m)
        return chi

    @property
    def area_factor(self) -> Fraction:
        """``-chi``: positive for hyperbolic signatures, scales covering degrees."""
        return -self.orbifold_euler_characteristic

    @property
    def is_triangle(self) -> bool:
        return self.quotient_genus == 0 and self.r == 3

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.quotient_genus, self.periods)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse the CLI syntax ``h;m1,m2,...`` (``h;`` for no periods)."""
        head, sep, tail = text.partition(";")
        if not sep:
            raise ValueError("signature must look like 'h;m1,m2,...': %r" % text)
        h = int(head.strip())
        tail = tail.strip()
        periods = tuple(int(p) for p in tail.split(",")) if tail else ()
        return cls(h, periods)

    def __str__(self) -> str:
        return "%d;%s" % (self.quotient_genus, ",".join(map(str, self.periods)))


def teich_dimension(sig: Signature) -> int:
    """Real dimension ``6h - 6 + 2r`` of the Teichmueller space of ``sig``.

    Hyperbolicity guarantees the value is non-negative; it is zero exactly
    for the triangle signatures.
    """
    dim = 6 * sig.quotient_genus - 6 + 2 * sig.r
    assert dim >= 0
    return dim


@dataclass(frozen=True)
class DimensionReport:
    """A stratum dimension against the ambient ``6g - 6`` moduli dimension."""

    teich_dim: int
    ambient_dim: int
    codim: int

    def __post_init__(self) -> None:
        if self.teich_dim % 2 != 0:
            raise ValueError("Teichmueller dimension must be even")
        if self.codim != self.ambient_dim - self.teich_dim:
            raise ValueError("codim must equal ambient_dim - teich_dim")


def dimension_report(sig: Signature, genus: int) -> DimensionReport:
    dim = teich_dimension(sig)
    ambient = 6 * genus - 6
    return DimensionReport(teich_dim=dim, ambient_dim=ambient, codim=ambient - dim)


def rh_kernel_genus(sig: Signature, degree: int) -> int:
    """Genus ``g`` of a degree-``n`` cover with quotient data ``sig``.

    Solves ``2g - 2 = n * (2h - 2 + sum(1 - 1/m_j))`` exactly.  Raises
    :class:`NonIntegral` when the right-hand side is not an even integer
    (no such cover exists) and :class:`GenusTooSmall` when it solves to
    ``g < 2``.  Every period must divide ``n``.
    """
    n = int(degree)
    if n < 2:
        raise ValueError("covering degree must be >= 2")
    for m in sig.periods:
        if n % m != 0:
            raise ValueError("period %d does not divide the degree %d" % (m, n))
    rhs = n * sig.area_factor
    if rhs.denominator != 1 or rhs.numerator % 2 != 0:
        raise NonIntegral("2g-2 = %s is not an even integer" % rhs)
    g = rhs.numerator // 2 + 1
    if g < 2:
        raise GenusTooSmall("cover has genus %d < 2" % g)
    return g


def prime_order_bound(genus: int) -> int:
    """Upper bound ``4g + 2`` for the order of a cyclic automorphism.

    Classical bound for cyclic groups acting on genus ``g >= 2``; it makes
    every order scan in this package finite.
    """
    return 4 * genus + 2


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime(n: int) -> bool:
    return _is_prime(n)


def primes_up_to(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if _is_prime(p)]


def enumerate_prime_quotient_data(genus: int, p: int) -> list[tuple[int, int]]:
    """All ``(h, r)`` with ``2g - 2 = p(2h - 2) + r(p - 1)`` and ``(h; p,...,p)`` hyperbolic.

    These are the candidate quotient data for an order-``p`` automorphism of
    a genus-``genus`` surface; degenerate ``(h, r)`` whose signature fails
    hyperbolicity (``r = 1`` or ``r = 2`` at ``h = 0``, etc.) drop out at
    signature construction.  Every returned pair satisfies the bound
    ``r <= 2g - 4h + 2``.  Returns an empty list when ``p`` admits no
    Riemann-Hurwitz solution at this genus.
    """
    if genus < 2:
        raise ValueError("genus must be >= 2")
    if not _is_prime(p):
        raise ValueError("%d is not prime" % p)
    out: list[tuple[int, int]] = []
    h = 0
    while p * (2 * h - 2) <= 2 * genus - 2:
        num = (2 * genus - 2) - p * (2 * h - 2)
        if num >= 0 and num % (p - 1) == 0:
            r = num // (p - 1)
            try:
                sig = Signature(h, (p,) * r)
            except ValueError:
                sig = None
            if sig is not None:
                assert r <= 2 * genus - 4 * h + 2
                assert rh_kernel_genus(sig, p) == genus
                out.append((h, r))
        h += 1
    return sorted(out)


def enumerate_cyclic_quotient_data(genus: int, n: int) -> list[tuple[int, tuple[int, ...]]]:
    """All ``(h, periods)`` solving Riemann-Hurwitz for a degree-``n`` cyclic cover.

    Periods range over the divisors of ``n`` that are >= 2; the returned
    signatures are hyperbolic and satisfy ``rh_kernel_genus == genus``.
    Existence of an actual surface-kernel epimorphism is a separate
    question answered by :mod:`equisym.actions`.
    """
    if genus < 2:
        raise ValueError("genus must be >= 2")
    if n < 2:
        raise ValueError("order must be >= 2")
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    contributions = [(d, Fraction(d - 1, d)) for d in divisors]
    results: list[tuple[int, tuple[int, ...]]] = []

    def extend(budget: Fraction, start: int, acc: list[int]) -> None:
        if budget == 0:
            results.append((h, tuple(acc)))
            return
        if budget < 0:
            return
        # smallest possible contribution per extra period is 1/2
        if budget < Fraction(1, 2):
            return
        for i in range(start, len(contributions)):
            d, c = contributions[i]
            if c > budget:
                continue
            acc.append(d)
            extend(budget - c, i, acc)
            acc.pop()

    h = 0
    while True:
        budget = Fraction(2 * genus - 2, n) - (2 * h - 2)
        if budget < 0:
            break
        extend(budget, 0, [])
        h += 1

    out = []
    for h0, periods in results:
        try:
            sig = Signature(h0, periods)
        except ValueError:
            continue
        if rh_kernel_genus(sig, n) == genus:
            out.append((h0, sig.periods))
    return sorted(set(out))


def hyperelliptic_signature(genus: int) -> Signature:
    """Quotient data ``(0; 2, ..., 2)`` (``2g + 2`` periods) of the hyperelliptic involution."""
    return Signature(0, (2,) * (2 * genus + 2))


def is_maximal_signature(sig: Signature, table: singerman.ExtensionTable | None = None) -> bool:
    """True iff ``sig`` admits no dimension-preserving Fuchsian extension.

    Looked up in the embedded extension table (overridable, see
    :mod:`equisym.singerman`).  A non-maximal signature is one whose groups
    are generically contained in a strictly larger Fuchsian group of the
    same Teichmueller dimension.
    """
    tab = table if table is not None else singerman.default_table()
    return not tab.extensions_of(sig.quotient_genus, sig.periods)
