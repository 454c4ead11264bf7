import collections
import re

from . import ratio, surd
from .errors import ExpressionError
from .ratio import Ratio
from .surd import Surd

SqrtExpression = collections.namedtuple('SqrtExpression', 'radicand integral')

_NUMBER = r"(\d+)(?:\s*/\s*(\d+))?"
_RATIO_RE = re.compile(rf"^\s*{_NUMBER}\s*$")
_SQRT_RE = re.compile(rf"^\s*(?:sqrt|√)\s*(?:\(\s*{_NUMBER}\s*\)|{_NUMBER})\s*$", re.IGNORECASE)
# (p/q)·√k, (p/q)*sqrt(k), 3*sqrt(2), 3√2
_SURD_RE = re.compile(
    r"^\s*(?:\(\s*(\d+)\s*(?:/\s*(\d+)\s*)?\)|(\d+))\s*[*·]?\s*(?:sqrt\s*\(\s*(\d+)\s*\)|√\s*(\d+))\s*$",
    re.IGNORECASE,
)


def _ratio(num: str, den: str = None) -> Ratio:
    try:
        return ratio.reduce(int(num), int(den) if den else 1)
    except ValueError as error:
        raise ExpressionError(str(error)) from error


def parse_ratio(text: str) -> Ratio:
    """Parse `P/Q` or `P` into a ratio in lowest terms.

    Args:
        text (str): The text to parse.

    Returns:
        Ratio: The reduced ratio.
    """
    match = _RATIO_RE.match(text)
    if not match:
        raise ExpressionError(f"Invalid ratio: {text!r}. Expected P or P/Q.")
    return _ratio(*match.groups())


def parse_sqrt_expression(text: str) -> SqrtExpression:
    """Parse `sqrt N` or `sqrt P/Q`.

    Args:
        text (str): The expression. `sqrt(N)` and `√N` are accepted too.

    Returns:
        SqrtExpression: The reduced radicand, and whether it was written as an integer.
    """
    match = _SQRT_RE.match(text)
    if not match:
        raise ExpressionError(f"Invalid expression: {text!r}. Expected 'sqrt N' or 'sqrt P/Q'.")
    num, den = match.group(1) or match.group(3), match.group(2) or match.group(4)
    return SqrtExpression(_ratio(num, den), den is None)


def parse_surd(text: str) -> Surd:
    """Parse the text forms of a surd.

    Accepted forms are the canonical `(p/q)·√k`, `(p/q)*sqrt(k)`, `3*sqrt(2)`, `sqrt N`,
    `sqrt P/Q` and a plain rational `P/Q`. A kernel which is not squarefree is
    canonicalized, so `(1/1)·√8` parses to `(2/1)·√2`.

    Args:
        text (str): The text to parse.

    Returns:
        Surd: The canonical surd.
    """
    if _SQRT_RE.match(text):
        return surd.sqrt_of_ratio(parse_sqrt_expression(text).radicand)
    if _RATIO_RE.match(text):
        return Surd(parse_ratio(text), 1)
    match = _SURD_RE.match(text)
    if not match:
        raise ExpressionError(f"Invalid surd: {text!r}. Expected '(P/Q)*sqrt(K)' or 'sqrt N'.")
    num, den, whole, kernel_a, kernel_b = match.groups()
    coeff = _ratio(num or whole, den)
    kernel = int(kernel_a or kernel_b)
    if kernel < 1:
        raise ExpressionError(f"Invalid surd: {text!r}. The kernel must be at least 1.")
    return surd.scale(surd.sqrt_of_integer(kernel), coeff)
