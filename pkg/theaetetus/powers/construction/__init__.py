from .figures import (  # noqa: F401, F403
    Circle, Coordinate, Figure, LengthClaim, OnCircle, Point, RightAngle, SegmentHasValue,
    SquareEqualsRectangle, geometric_mean_figure, square_the_rectangle, squared_length, theodorus_sequence,
    verify_figure,
)
from .svg import exact_values_from_svg, figure_to_svg, surd_values_from_svg  # noqa: F401, F403
