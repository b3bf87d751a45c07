"""Average character degree restricted to a prime, and its thresholds.

For a prime p, the relevant degrees are those that are 1 or divisible by p.
Their average acd_p is an exact rational.  The comparison thresholds are
built from the least multiplier ell(p) making ell(p)*p + 1 a prime power:
b_p = 2*ell(p)*p / (ell(p)*p + 1), and a_p is 5/2, 7/3, or (p+1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dixon import DegreeSpectrum
from .numbers import is_prime_power

Rational = Fraction

ELL_SEARCH_CAP = 10**6


def irr_p_degrees(spectrum: DegreeSpectrum, p: int) -> tuple[int, ...]:
    """Degrees equal to 1 or divisible by p, sorted with multiplicity."""
    return tuple(d for d in spectrum.degrees if d == 1 or d % p == 0)


def n_d(spectrum: DegreeSpectrum, d: int) -> int:
    """Number of irreducible characters of degree d."""
    return spectrum.count(d)


def acd_p(spectrum: DegreeSpectrum, p: int) -> Rational:
    """Average of the degrees in irr_p_degrees; always at least 1."""
    degs = irr_p_degrees(spectrum, p)
    assert degs, "the trivial character always contributes"
    return Fraction(sum(degs), len(degs))


def ell(p: int, cap: int = ELL_SEARCH_CAP) -> int:
    """Least multiplier l >= 1 such that l*p + 1 is a prime power."""
    for m in range(1, cap + 1):
        if is_prime_power(m * p + 1):
            return m
    raise RuntimeError(f"no multiplier below {cap} for p = {p}")


def b_p(p: int) -> Rational:
    """Sylow-normality threshold 2*l*p / (l*p + 1) with l = ell(p)."""
    lp = ell(p) * p
    return Fraction(2 * lp, lp + 1)


def a_p(p: int) -> Rational:
    """Solvability threshold: 5/2 at p = 2, 7/3 at p = 3, else (p + 1)/2."""
    if p == 2:
        return Fraction(5, 2)
    if p == 3:
        return Fraction(7, 3)
    return Fraction(p + 1, 2)


@dataclass(frozen=True)
class AcdReport:
    """acd_p of one group against both thresholds."""

    p: int
    degrees: tuple[int, ...]
    acd: Rational
    b: Rational
    a: Rational
    below_b: bool
    below_a: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "degrees": list(self.degrees),
            "acd": format_rational(self.acd),
            "b_p": format_rational(self.b),
            "a_p": format_rational(self.a),
            "below_b": self.below_b,
            "below_a": self.below_a,
        }


def make_acd_report(spectrum: DegreeSpectrum, p: int) -> AcdReport:
    degs = irr_p_degrees(spectrum, p)
    acd = acd_p(spectrum, p)
    b, a = b_p(p), a_p(p)
    return AcdReport(
        p=p, degrees=degs, acd=acd, b=b, a=a, below_b=acd < b, below_a=acd < a
    )


def format_rational(x: Rational) -> str:
    """Canonical "num/den" form used in all JSON output."""
    return f"{x.numerator}/{x.denominator}"
