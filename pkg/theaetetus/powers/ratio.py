"""
Ratios of numbers as in Book VII of the Elements.

A ratio is a relation between two numbers, not a number. `Ratio` therefore exposes no
arithmetic with plain ints; conversion to and from `fractions.Fraction` is explicit.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import integers
from .errors import InvariantViolation, PreconditionError
from .integers import Natural, check_natural


@dataclass(frozen=True)
class Ratio:
    """A ratio of two natural numbers, always held in lowest terms.

    Use `reduce` to build one from an arbitrary pair. Building a `Ratio` directly from a
    pair which is not in lowest terms is an error.

    Attributes:
        num (int): The antecedent.
        den (int): The consequent.
    """
    num: Natural
    den: Natural

    def __post_init__(self):
        check_natural(self.num, "num")
        check_natural(self.den, "den")
        if integers.gcd(self.num, self.den) != 1:
            raise PreconditionError(
                f"{self.num}:{self.den} is not in lowest terms. Use reduce() to build it.")

    def __str__(self):
        return f"{self.num}/{self.den}"

    def compact(self) -> str:
        """Text form dropping a unit consequent, e.g. `3` instead of `3/1`."""
        if self.den == 1:
            return str(self.num)
        return str(self)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Ratio":
        """Build the ratio equal to a positive fraction.

        Args:
            value (Fraction): A positive rational.

        Returns:
            Ratio: The ratio `numerator : denominator`.
        """
        if value <= 0:
            raise PreconditionError(f"A ratio of numbers is positive, got {value}.")
        return cls(value.numerator, value.denominator)

    def invert(self) -> "Ratio":
        return Ratio(self.den, self.num)

    def compound(self, other: "Ratio") -> "Ratio":
        """The ratio compounded of this one and `other` (the product of the two fractions)."""
        return reduce(self.num * other.num, self.den * other.den)

    def is_unit(self) -> bool:
        return self.num == 1 and self.den == 1


def reduce(a: Natural, b: Natural) -> Ratio:
    """The least numbers having the ratio `a : b` (VII.22).

    Args:
        a (int): A natural number.
        b (int): A natural number.

    Returns:
        Ratio: `(m, n)` with `m / n == a / b` and `gcd(m, n) == 1`.
    """
    g = integers.gcd(a, b)
    return Ratio(a // g, b // g)


def same_ratio(a: Natural, b: Natural, c: Natural, d: Natural) -> bool:
    """Whether `a : b :: c : d`, decided by cross-multiplication.

    For numbers this is equivalent to the definition by multiples and parts, see
    `same_ratio_by_parts`.
    """
    for name, value in zip("abcd", (a, b, c, d)):
        check_natural(value, name)
    return a * d == b * c


def _measure(a: Natural, b: Natural):
    if a % b == 0:
        return "multiple", a // b
    if b % a == 0:
        return "part", b // a
    if a < b:
        g = integers.gcd(a, b)
        return "parts", a // g, b // g
    return ("inverse",) + _measure(b, a)


def same_ratio_by_parts(a: Natural, b: Natural, c: Natural, d: Natural) -> bool:
    """Whether `a : b :: c : d` in the literal sense of the definition of proportional numbers.

    The first must be the same multiple, the same part, or the same parts of the second
    that the third is of the fourth. When the first exceeds the second without measuring
    it, the ratios are compared inversely.

    Args:
        a (int): First term.
        b (int): Second term.
        c (int): Third term.
        d (int): Fourth term.

    Returns:
        bool: Whether the four numbers are proportional.
    """
    for name, value in zip("abcd", (a, b, c, d)):
        check_natural(value, name)
    return _measure(a, b) == _measure(c, d)


def alternate(a: Natural, b: Natural, c: Natural, d: Natural) -> bool:
    """Alternation of a proportion (VII.13): from `a : b :: c : d` follows `a : c :: b : d`.

    Args:
        a (int): First term.
        b (int): Second term.
        c (int): Third term.
        d (int): Fourth term.

    Returns:
        bool: `same_ratio(a, c, b, d)`, which is always true under the precondition.

    Raises:
        PreconditionError: If `a : b :: c : d` is not a proportion.
    """
    if not same_ratio(a, b, c, d):
        raise PreconditionError(f"{a}:{b} :: {c}:{d} is not a proportion, {a * d} ≠ {b * c}.")
    return same_ratio(a, c, b, d)


def vii20_divides(a: Natural, b: Natural) -> Natural:
    """The least numbers of a ratio measure any others in that ratio the same number of times.

    Args:
        a (int): A natural number.
        b (int): A natural number.

    Returns:
        int: `q` with `a == q * m` and `b == q * n` where `(m, n) = reduce(a, b)`.
    """
    least = reduce(a, b)
    q = a // least.num
    if a != q * least.num or b != q * least.den:
        raise InvariantViolation(f"{least} does not measure {a}:{b} the same number of times.")
    return q


def square_ratio(r: Ratio) -> Ratio:
    """The ratio of the squares of the terms of `r`.

    No reduction takes place: the squares of numbers prime to one another are prime to
    one another (VII.24), so the result must already be in lowest terms. This is checked.

    Args:
        r (Ratio): A ratio in lowest terms.

    Returns:
        Ratio: `num**2 : den**2`.

    Raises:
        InvariantViolation: If the squares are found to share a factor.
    """
    num, den = r.num * r.num, r.den * r.den
    common = integers.gcd(num, den)
    if common != 1:
        raise InvariantViolation(f"gcd({num}, {den}) = {common}: the squares of {r} are not prime to one another.")
    return Ratio(num, den)


def is_square_to_square(a: Natural, b: Natural) -> bool:
    """Whether `a : b` is the ratio of a square number to a square number.

    Decided on the least terms and cross-checked against the product `a * b` being a
    perfect square.

    Args:
        a (int): A natural number.
        b (int): A natural number.

    Returns:
        bool: Whether both least terms are perfect squares.
    """
    least = reduce(a, b)
    decided = integers.is_perfect_square(least.num) and integers.is_perfect_square(least.den)
    if decided != integers.is_perfect_square(a * b):
        raise InvariantViolation(f"{a}:{b}: least terms and product disagree on squareness.")
    return decided
