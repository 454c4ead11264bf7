"""
Quadratic surds `q·√k`, the "powers": lines whose squares are rational though they
themselves may not be.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Union

from . import integers, ratio
from .errors import InvariantViolation, NotNaturalError
from .integers import Natural
from .ratio import Ratio

logger = logging.getLogger(__name__)

UNIT = Ratio(1, 1)


@dataclass(frozen=True)
class Surd:
    """The positive magnitude `coeff·√kernel` in canonical form.

    Attributes:
        coeff (Ratio): The rational coefficient.
        kernel (int): A squarefree natural number. The surd is rational exactly when it is 1.
    """
    coeff: Ratio
    kernel: Natural

    def __post_init__(self):
        if not isinstance(self.coeff, Ratio):
            raise TypeError(f"The coefficient of a surd must be a Ratio, got {self.coeff!r}.")
        integers.check_natural(self.kernel, "kernel")
        if not integers.is_squarefree(self.kernel):
            raise NotNaturalError(f"The kernel of a canonical surd must be squarefree, got {self.kernel}.")

    def __str__(self):
        return f"({self.coeff})·√{self.kernel}"

    def compact(self) -> str:
        """The rational value when the kernel is 1, the canonical form otherwise."""
        if self.kernel == 1:
            return self.coeff.compact()
        return str(self)

    def pretty(self) -> str:
        """Short human form such as `√3`, `3√2` or `(3/2)√2`."""
        if self.kernel == 1:
            return self.coeff.compact()
        if self.coeff.is_unit():
            return f"√{self.kernel}"
        if self.coeff.den == 1:
            return f"{self.coeff.num}√{self.kernel}"
        return f"({self.coeff})√{self.kernel}"


@dataclass(frozen=True)
class Commensurable:
    """Two magnitudes with a common measure.

    Attributes:
        ratio (Ratio): The exact quotient of the first by the second.
    """
    ratio: Ratio

    def __str__(self):
        return f"commensurable {self.ratio}"


@dataclass(frozen=True)
class Incommensurable:
    """Two magnitudes commensurable in square only.

    Attributes:
        square_ratio (Ratio): The exact quotient of their squares.
    """
    square_ratio: Ratio

    def __str__(self):
        return f"incommensurable, square ratio {self.square_ratio}"


CommensurabilityResult = Union[Commensurable, Incommensurable]


def sqrt_of_integer(n: Natural) -> Surd:
    """The side of the square equal to `n`.

    Args:
        n (int): A natural number.

    Returns:
        Surd: `s·√k` where `n == s**2 * k` with `k` squarefree.
    """
    decomposition = integers.squarefree_decompose(n)
    return Surd(Ratio(decomposition.square_part, 1), decomposition.kernel)


def sqrt_of_ratio(r: Ratio) -> Surd:
    """The side of the square equal to the ratio `r`, using `√(p/q) = √(p·q)/q`.

    Args:
        r (Ratio): A ratio.

    Returns:
        Surd: The canonical surd whose square is `r`.
    """
    decomposition = integers.squarefree_decompose(r.num * r.den)
    return Surd(ratio.reduce(decomposition.square_part, r.den), decomposition.kernel)


def is_rational(s: Surd) -> Optional[Ratio]:
    """The rational value of `s`, or None when it is a power commensurable only in square."""
    if s.kernel == 1:
        return s.coeff
    return None


def commensurable_with_unit(s: Surd) -> bool:
    return is_rational(s) is not None


def square(s: Surd) -> Ratio:
    """The square on `s`, always rational.

    Args:
        s (Surd): A canonical surd.

    Returns:
        Ratio: `coeff**2 * kernel`.
    """
    return ratio.square_ratio(s.coeff).compound(Ratio(s.kernel, 1))


def scale(s: Surd, c: Ratio) -> Surd:
    """Multiply `s` by the rational `c`."""
    return Surd(s.coeff.compound(c), s.kernel)


def multiply(s1: Surd, s2: Surd) -> Surd:
    """The exact product of two surds.

    Args:
        s1 (Surd): First factor.
        s2 (Surd): Second factor.

    Returns:
        Surd: The canonical form of `s1·s2`.
    """
    decomposition = integers.squarefree_decompose(s1.kernel * s2.kernel)
    coeff = s1.coeff.compound(s2.coeff).compound(Ratio(decomposition.square_part, 1))
    return Surd(coeff, decomposition.kernel)


def divide(s1: Surd, s2: Surd) -> Surd:
    # s1 / s2 == s1·s2 / s2²
    return scale(multiply(s1, s2), square(s2).invert())


def commensurable(s1: Surd, s2: Surd) -> CommensurabilityResult:
    """Decide whether two powers are commensurable in length.

    The decision is by kernel equality. It is checked against the criterion that the
    squares on lines commensurable in length have to one another the ratio of a square
    number to a square number, and conversely.

    Args:
        s1 (Surd): First magnitude.
        s2 (Surd): Second magnitude.

    Returns:
        Commensurable | Incommensurable: `Commensurable(s1 / s2)` when the kernels agree,
            otherwise `Incommensurable(square(s1) / square(s2))`.

    Raises:
        InvariantViolation: If the kernel decision and the square-to-square criterion disagree.
    """
    squares = square(s1).compound(square(s2).invert())
    by_squares = ratio.is_square_to_square(squares.num, squares.den)
    if s1.kernel == s2.kernel:
        result = Commensurable(s1.coeff.compound(s2.coeff.invert()))
    else:
        result = Incommensurable(squares)
    if by_squares != isinstance(result, Commensurable):
        raise InvariantViolation(f"{s1} and {s2}: kernel decision contradicts the square ratio {squares}.")
    logger.debug("%s vs %s: %s", s1, s2, result)
    return result


def commensurability_classes(limit: Natural) -> Dict[Natural, List[Natural]]:
    """Group the sides of the squares equal to 1..limit by common measure.

    Two such sides are commensurable in length exactly when they share a kernel, so each
    class is keyed by that kernel. Kernel 1 holds the square integers.

    Args:
        limit (int): The largest integer considered.

    Returns:
        dict: Kernel -> ascending list of integers, with kernels in ascending order.
    """
    integers.check_natural(limit, "limit")
    classes = {}
    for n in range(1, limit + 1):
        classes.setdefault(sqrt_of_integer(n).kernel, []).append(n)
    return dict(sorted(classes.items()))
