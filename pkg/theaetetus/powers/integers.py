"""
Natural numbers as Greek arithmetic knows them: positive, with the unit counted as a number.

Everything here is trial division and Newton iteration on Python ints. Inputs are desk-scale,
so no advanced factoring is attempted.
"""
import collections
from dataclasses import dataclass
from typing import Dict, List, Union

from .errors import NotNaturalError

Natural = int

IsqrtResult = collections.namedtuple('IsqrtResult', 'root exact')
RectRep = collections.namedtuple('RectRep', 'a b')
SquarefreeDecomposition = collections.namedtuple('SquarefreeDecomposition', 'square_part kernel')


def check_natural(value, name: str = "n") -> Natural:
    """Validate that `value` is a natural number.

    Args:
        value (int): The candidate value.
        name (str, optional): Name used in the error message. Defaults to "n".

    Returns:
        int: The value itself.

    Raises:
        NotNaturalError: If the value is not an int or is smaller than 1.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise NotNaturalError(f"{name} must be a natural number, got {value!r}.")
    if value < 1:
        raise NotNaturalError(f"{name} must be at least 1, got {value}. There is no zero here.")
    return value


@dataclass(frozen=True)
class Square:
    """An integer which is the product of an equal integer by itself.

    Attributes:
        side (int): The side `p` such that `p * p == n`.
    """
    side: Natural

    @property
    def kind(self) -> str:
        return "square"

    @property
    def sides(self):
        return self.side, self.side

    def __str__(self):
        return f"square side {self.side}"


@dataclass(frozen=True)
class Oblong:
    """An integer encompassed by a longer and a less side.

    Attributes:
        small (int): The less side.
        large (int): The longer side.
    """
    small: Natural
    large: Natural

    @property
    def kind(self) -> str:
        return "oblong"

    @property
    def sides(self):
        return self.small, self.large

    def __str__(self):
        return f"oblong {self.small}×{self.large}"


IntegerClass = Union[Square, Oblong]


def isqrt(n: Natural) -> IsqrtResult:
    """Floor of the square root of `n`, by Newton iteration.

    Args:
        n (int): A natural number.

    Returns:
        IsqrtResult: `root` with `root**2 <= n < (root + 1)**2` and `exact` telling
            whether `root**2 == n`.
    """
    check_natural(n)
    # Start above the root, then Newton decreases monotonically to the floor.
    x = 1 << ((n.bit_length() + 1) // 2)
    y = (x + n // x) // 2
    while y < x:
        x = y
        y = (x + n // x) // 2
    return IsqrtResult(x, x * x == n)


def is_perfect_square(n: Natural) -> bool:
    """Whether `n` is precisely representable by a square."""
    return isqrt(n).exact


def gcd(a: Natural, b: Natural) -> Natural:
    """Greatest common divisor by the Euclidean algorithm.

    Args:
        a (int): A natural number.
        b (int): A natural number.

    Returns:
        int: The greatest common divisor of `a` and `b`.
    """
    check_natural(a, "a")
    check_natural(b, "b")
    while b:
        a, b = b, a % b
    return a


def factorize(n: Natural) -> Dict[int, int]:
    """Prime factorization of `n` by trial division.

    This is the fundamental theorem of arithmetic used as an oracle: `n` is a perfect
    square exactly when every exponent is even.

    Args:
        n (int): A natural number.

    Returns:
        dict: Mapping prime -> exponent, in ascending prime order. Empty for `n == 1`.
    """
    check_natural(n)
    factors = {}
    remaining = n
    divisor = 2
    while divisor * divisor <= remaining:
        while remaining % divisor == 0:
            factors[divisor] = factors.get(divisor, 0) + 1
            remaining //= divisor
        # 2 then the odd numbers only
        divisor += 1 if divisor == 2 else 2
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return factors


def divisor_count(n: Natural) -> int:
    count = 1
    for exponent in factorize(n).values():
        count *= exponent + 1
    return count


def divisors(n: Natural) -> List[Natural]:
    """All divisors of `n` in ascending order.

    Args:
        n (int): A natural number.

    Returns:
        list: The divisors, `1` first and `n` last.
    """
    found = [1]
    for prime, exponent in factorize(n).items():
        found = [d * prime ** power for d in found for power in range(exponent + 1)]
    return sorted(found)


def rectangle_representations(n: Natural) -> List[RectRep]:
    """Every rectangle with natural sides whose area is `n`.

    The representation is not unique; a prime only has the one with a unit side.

    Args:
        n (int): A natural number.

    Returns:
        list: `RectRep(a, b)` pairs with `a <= b` and `a * b == n`, sorted by `a`.
    """
    return [RectRep(d, n // d) for d in divisors(n) if d * d <= n]


def classify(n: Natural) -> IntegerClass:
    """Divide the integers in two: square or oblong.

    Oblong integers are witnessed by their most square rectangle, the divisor pair
    minimizing `large - small`. For a prime that is `(1, n)`.

    Args:
        n (int): A natural number.

    Returns:
        Square | Oblong: The class of `n`.
    """
    root, exact = isqrt(n)
    if exact:
        return Square(root)
    a, b = rectangle_representations(n)[-1]
    if a == b:
        return Square(a)
    return Oblong(a, b)


def squarefree_decompose(n: Natural) -> SquarefreeDecomposition:
    """Write `n` as `square_part**2 * kernel` with a squarefree kernel.

    Args:
        n (int): A natural number.

    Returns:
        SquarefreeDecomposition: The pair `(square_part, kernel)`. The kernel is 1
            exactly when `n` is a perfect square.
    """
    square_part, kernel = 1, 1
    for prime, exponent in factorize(n).items():
        square_part *= prime ** (exponent // 2)
        if exponent % 2:
            kernel *= prime
    return SquarefreeDecomposition(square_part, kernel)


def is_squarefree(n: Natural) -> bool:
    return all(exponent == 1 for exponent in factorize(n).values())
