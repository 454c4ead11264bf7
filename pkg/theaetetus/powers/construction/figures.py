"""
Exact constructions of the side of a square equal to a rectangle.

A semicircle is drawn on the diameter `OB` made of the two sides `OH` and `HB` of the
rectangle; the perpendicular raised at `H` meets it at `D`, and `HD` is the side of the
square equal to the rectangle: `|HD|² = |OH|·|HB|`.

Coordinates are exact: `O` is the origin, `OB` lies along the positive horizontal axis
and `D` is above `H`. All verification goes through squared lengths, which stay rational.
"""
import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .. import integers, surd
from ..errors import InvariantViolation, MalformedFigureError
from ..integers import Natural
from ..propositions import theodorus_lesson
from ..ratio import Ratio
from ..surd import Surd

logger = logging.getLogger(__name__)

Label = str
Segment = Tuple[Label, Label]


@dataclass(frozen=True)
class Coordinate:
    """The exact number `rational + irrational·√kernel`.

    Coordinates of the figures live in a single quadratic field: the rational points of
    the diameter, the surd height of `D`, and sums of the two for the erected square.

    Attributes:
        rational (Fraction): The rational part.
        irrational (Fraction): The coefficient of `√kernel`.
        kernel (int): Squarefree natural number, 1 when the coordinate is rational.
    """
    rational: Fraction = Fraction(0)
    irrational: Fraction = Fraction(0)
    kernel: Natural = 1

    def __post_init__(self):
        integers.check_natural(self.kernel, "kernel")
        if self.kernel == 1 and self.irrational:
            object.__setattr__(self, "rational", self.rational + self.irrational)
            object.__setattr__(self, "irrational", Fraction(0))
        elif not self.irrational and self.kernel != 1:
            object.__setattr__(self, "kernel", 1)

    @classmethod
    def of(cls, value: Union[int, Fraction, Ratio, Surd]) -> "Coordinate":
        if isinstance(value, Surd):
            return cls(Fraction(0), value.coeff.as_fraction(), value.kernel)
        if isinstance(value, Ratio):
            return cls(value.as_fraction())
        return cls(Fraction(value))

    def _common_kernel(self, other: "Coordinate") -> Natural:
        if self.kernel == 1 or other.kernel == 1 or self.kernel == other.kernel:
            return max(self.kernel, other.kernel)
        raise ValueError(f"√{self.kernel} and √{other.kernel} do not share a quadratic field.")

    def __add__(self, other: "Coordinate") -> "Coordinate":
        kernel = self._common_kernel(other)
        return Coordinate(self.rational + other.rational, self.irrational + other.irrational, kernel)

    def __neg__(self) -> "Coordinate":
        return Coordinate(-self.rational, -self.irrational, self.kernel)

    def __sub__(self, other: "Coordinate") -> "Coordinate":
        return self + (-other)

    def __mul__(self, other: "Coordinate") -> "Coordinate":
        kernel = self._common_kernel(other)
        return Coordinate(
            self.rational * other.rational + self.irrational * other.irrational * kernel,
            self.rational * other.irrational + self.irrational * other.rational,
            kernel,
        )

    def is_rational(self) -> bool:
        return self.irrational == 0

    def __float__(self):
        return float(self.rational) + float(self.irrational) * math.sqrt(self.kernel)

    def __str__(self):
        if self.is_rational():
            return str(self.rational)
        magnitude = abs(self.irrational)
        irrational = f"({magnitude.numerator}/{magnitude.denominator})·√{self.kernel}"
        sign = "-" if self.irrational < 0 else "+"
        if not self.rational:
            return irrational if sign == "+" else f"-{irrational}"
        return f"{self.rational} {sign} {irrational}"


ZERO = Coordinate()


@dataclass(frozen=True)
class Point:
    x: Coordinate
    y: Coordinate

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Circle:
    center: Label
    radius: Surd


@dataclass(frozen=True)
class SquareEqualsRectangle:
    """The square on `square_side` is equal in area to the rectangle on `rect_sides`."""
    square_side: Segment
    rect_sides: Tuple[Segment, Segment]


@dataclass(frozen=True)
class SegmentHasValue:
    """The segment `side` has the exact length `value`."""
    side: Segment
    value: Surd


@dataclass(frozen=True)
class RightAngle:
    """The angle at `vertex` between `p` and `q` is right: `|vp|² + |vq|² = |pq|²`."""
    vertex: Label
    p: Label
    q: Label


@dataclass(frozen=True)
class OnCircle:
    """`point` lies on the circle at index `circle` of the figure."""
    point: Label
    circle: int


LengthClaim = Union[SquareEqualsRectangle, SegmentHasValue, RightAngle, OnCircle]


@dataclass(frozen=True)
class Figure:
    """A construction with exact coordinates and the length relations it claims.

    Attributes:
        points (dict): Label -> `Point`.
        segments (tuple): Pairs of labels to draw.
        circles (tuple): `Circle` objects to draw.
        claims (tuple): The `LengthClaim` objects the figure asserts.
        mean (tuple, optional): The segment constructed as the mean proportional.
        name (str): A short description.
    """
    points: Dict[Label, Point]
    segments: Tuple[Segment, ...] = ()
    circles: Tuple[Circle, ...] = ()
    claims: Tuple[LengthClaim, ...] = ()
    mean: Optional[Segment] = None
    name: str = ""

    def with_claims(self, claims) -> "Figure":
        return replace(self, claims=tuple(claims))

    def mean_value(self) -> Surd:
        """The exact length claimed for the mean segment."""
        for claim in self.claims:
            if isinstance(claim, SegmentHasValue) and claim.side == self.mean:
                return claim.value
        raise KeyError(f'No length claimed for the mean segment of {self.name or "the figure"}.')


def squared_length(figure: Figure, segment: Segment) -> Coordinate:
    """The exact squared length of a segment of `figure`."""
    p, q = (figure.points[label] for label in segment)
    dx, dy = q.x - p.x, q.y - p.y
    return dx * dx + dy * dy


def _referenced_labels(figure: Figure) -> List[Label]:
    labels = [label for segment in figure.segments for label in segment]
    labels += [circle.center for circle in figure.circles]
    for claim in figure.claims:
        if isinstance(claim, SquareEqualsRectangle):
            labels += list(claim.square_side) + [label for side in claim.rect_sides for label in side]
        elif isinstance(claim, SegmentHasValue):
            labels += list(claim.side)
        elif isinstance(claim, RightAngle):
            labels += [claim.vertex, claim.p, claim.q]
        elif isinstance(claim, OnCircle):
            labels.append(claim.point)
    return labels


def _check_well_formed(figure: Figure):
    for label in _referenced_labels(figure):
        if label not in figure.points:
            raise MalformedFigureError(f"Point {label!r} is referenced but not defined.")
    for claim in figure.claims:
        if isinstance(claim, OnCircle) and not 0 <= claim.circle < len(figure.circles):
            raise MalformedFigureError(f"Circle index {claim.circle} is out of range.")


def _holds(figure: Figure, claim: LengthClaim) -> bool:
    if isinstance(claim, SegmentHasValue):
        return squared_length(figure, claim.side) == Coordinate.of(surd.square(claim.value))
    if isinstance(claim, SquareEqualsRectangle):
        side = squared_length(figure, claim.square_side)
        first, second = (squared_length(figure, s) for s in claim.rect_sides)
        # Compare the squares of both areas: every term is a squared length.
        return side * side == first * second
    if isinstance(claim, RightAngle):
        legs = squared_length(figure, (claim.vertex, claim.p)) + squared_length(figure, (claim.vertex, claim.q))
        return legs == squared_length(figure, (claim.p, claim.q))
    if isinstance(claim, OnCircle):
        circle = figure.circles[claim.circle]
        return squared_length(figure, (circle.center, claim.point)) == Coordinate.of(surd.square(circle.radius))
    raise TypeError(f"Unknown claim {claim!r}.")


def verify_figure(figure: Figure) -> bool:
    """Check every claim of a figure as an exact identity.

    Args:
        figure (Figure): The figure to check.

    Returns:
        bool: True when all claims hold. A figure without claims is vacuously verified.

    Raises:
        MalformedFigureError: If the figure references an undefined point or circle.
    """
    _check_well_formed(figure)
    verified = True
    for claim in figure.claims:
        if _holds(figure, claim):
            logger.debug("%s: %s holds", figure.name, claim)
        else:
            logger.warning("%s: %s does not hold", figure.name, claim)
            verified = False
    return verified


def geometric_mean_figure(a: Ratio, b: Ratio) -> Figure:
    """Construct the mean proportional of `a` and `b` in a semicircle.

    Args:
        a (Ratio): Length of `OH`.
        b (Ratio): Length of `HB`.

    Returns:
        Figure: Points `O`, `H`, `B` on the diameter, `M` its middle and `D` on the
            semicircle above `H`, with `|HD| = √(a·b)` among the claims.
    """
    oh, hb = a.as_fraction(), b.as_fraction()
    mean = surd.sqrt_of_ratio(a.compound(b))
    radius = Ratio.from_fraction((oh + hb) / 2)
    points = {
        "O": Point(ZERO, ZERO),
        "H": Point(Coordinate(oh), ZERO),
        "B": Point(Coordinate(oh + hb), ZERO),
        "M": Point(Coordinate(radius.as_fraction()), ZERO),
        "D": Point(Coordinate(oh), Coordinate.of(mean)),
    }
    claims = (
        SegmentHasValue(("H", "D"), mean),
        SegmentHasValue(("O", "H"), Surd(a, 1)),
        SegmentHasValue(("H", "B"), Surd(b, 1)),
        SegmentHasValue(("O", "D"), surd.sqrt_of_ratio(Ratio.from_fraction(oh * oh + oh * hb))),
        SegmentHasValue(("D", "B"), surd.sqrt_of_ratio(Ratio.from_fraction(hb * hb + oh * hb))),
        RightAngle("D", "O", "B"),
        SquareEqualsRectangle(("H", "D"), (("O", "H"), ("H", "B"))),
        OnCircle("D", 0),
    )
    return Figure(
        points=points,
        segments=(("O", "H"), ("H", "B"), ("H", "D"), ("O", "D"), ("D", "B")),
        circles=(Circle("M", Surd(radius, 1)),),
        claims=claims,
        mean=("H", "D"),
        name=f"mean proportional of {a.compact()} and {b.compact()}",
    )


def square_the_rectangle(n: Natural) -> Figure:
    """Construct the square equal to the rectangle with sides `n` and 1.

    The rectangle `OHKL` is drawn under the diameter and the square `HDEF` is erected on
    the mean segment towards `O`.

    Args:
        n (int): A natural number.

    Returns:
        Figure: The construction, whose mean segment is the side of the square.
    """
    integers.check_natural(n)
    figure = geometric_mean_figure(Ratio(n, 1), Ratio(1, 1))
    side = figure.mean_value()
    x = figure.points["H"].x - Coordinate.of(side)
    height = Coordinate.of(side)
    minus_one = Coordinate(Fraction(-1))
    points = dict(figure.points)
    points.update({
        "E": Point(x, height),
        "F": Point(x, ZERO),
        "K": Point(figure.points["H"].x, minus_one),
        "L": Point(ZERO, minus_one),
    })
    claims = figure.claims + (
        SegmentHasValue(("D", "E"), side),
        SegmentHasValue(("E", "F"), side),
        SegmentHasValue(("F", "H"), side),
        RightAngle("H", "D", "F"),
        RightAngle("E", "D", "F"),
        SegmentHasValue(("H", "K"), Surd(Ratio(1, 1), 1)),
        SquareEqualsRectangle(("H", "D"), (("O", "H"), ("H", "K"))),
    )
    return Figure(
        points=points,
        segments=figure.segments + (("D", "E"), ("E", "F"), ("F", "H"), ("H", "K"), ("K", "L"), ("L", "O")),
        circles=figure.circles,
        claims=claims,
        mean=figure.mean,
        name=f"square equal to the rectangle 1×{n}",
    )


def theodorus_sequence() -> List[Figure]:
    """One verified square construction per integer of the lesson, in lesson order.

    Returns:
        list: The figures.

    Raises:
        InvariantViolation: If a construction fails to verify.
    """
    figures = []
    for entry in theodorus_lesson():
        figure = square_the_rectangle(entry.n)
        if not verify_figure(figure):
            raise InvariantViolation(f"The construction for {entry.n} does not verify.")
        figures.append(figure)
    return figures
