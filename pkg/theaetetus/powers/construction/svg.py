"""
SVG 1.1 rendering of figures.

Drawing coordinates are decimal approximations; the exact value of each element is kept
in its `data-exact` attribute in the text form of the library.
"""
import logging
from typing import Dict, Optional

import numpy
from bs4 import BeautifulSoup
from lxml import etree

from .. import config, surd
from ..errors import PreconditionError
from ..parsers import parse_surd
from ..ratio import Ratio
from ..surd import Surd
from .figures import Figure, squared_length, verify_figure

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


def svg_ns(tag: str) -> str:
    return f"{{{SVG_NS}}}{tag}"


def _fmt(value: float) -> str:
    # Fixed point without trailing zeros
    return (f"%.{config.SVG_PRECISION}f" % value).rstrip("0").rstrip(".")


def _radius(circle, scale: float) -> float:
    return float(surd.square(circle.radius).as_fraction()) ** 0.5 * scale


def segment_exact_text(figure: Figure, segment) -> str:
    """Exact text of a segment length, or of its squared length when that is not rational."""
    squared = squared_length(figure, segment)
    if squared.is_rational() and squared.rational > 0:
        return str(surd.sqrt_of_ratio(Ratio.from_fraction(squared.rational)))
    return f"√({squared})"


def figure_to_svg(figure: Figure, scale: float = config.DEFAULT_SVG_SCALE, title: Optional[str] = None) -> str:
    """Render a verified figure as an SVG document.

    Args:
        figure (Figure): The figure. It must verify.
        scale (float, optional): Drawing units per unit length. Defaults to `config.DEFAULT_SVG_SCALE`.
            Rendering only: exact values are never scaled.
        title (str, optional): Document title. Defaults to the figure name.

    Returns:
        str: The SVG document text.
    """
    if not (numpy.isfinite(scale) and scale > 0):
        raise ValueError(f"The scale must be a finite positive number, got {scale}.")
    if not verify_figure(figure):
        raise PreconditionError(f"{figure.name or 'The figure'} does not verify and will not be drawn.")

    labels = list(figure.points)
    exact = numpy.array([[float(figure.points[label].x), float(figure.points[label].y)] for label in labels])
    # Screen y grows downwards.
    screen = exact * numpy.array([scale, -scale])
    extents = [screen]
    for circle in figure.circles:
        center = screen[labels.index(circle.center)]
        r = _radius(circle, scale)
        extents.append(numpy.array([center - r, center + r]))
    bounds = numpy.vstack(extents)
    screen = screen - bounds.min(axis=0) + config.SVG_MARGIN
    width, height = bounds.max(axis=0) - bounds.min(axis=0) + 2 * config.SVG_MARGIN
    at = {label: screen[index] for index, label in enumerate(labels)}

    root = etree.Element(svg_ns("svg"), nsmap={None: SVG_NS})
    root.set("version", "1.1")
    root.set("width", _fmt(width))
    root.set("height", _fmt(height))
    root.set("viewBox", f"0 0 {_fmt(width)} {_fmt(height)}")
    etree.SubElement(root, svg_ns("title")).text = title or figure.name

    circles = etree.SubElement(root, svg_ns("g"), id="circles", fill="none", stroke="gray")
    for index, circle in enumerate(figure.circles):
        cx, cy = at[circle.center]
        r = _radius(circle, scale)
        element = etree.SubElement(circles, svg_ns("circle"), id=f"circle-{index}")
        element.set("cx", _fmt(cx))
        element.set("cy", _fmt(cy))
        element.set("r", _fmt(r))
        element.set("data-exact", str(circle.radius))

    segments = etree.SubElement(root, svg_ns("g"), id="segments", stroke="black")
    for segment in figure.segments:
        (x1, y1), (x2, y2) = at[segment[0]], at[segment[1]]
        element = etree.SubElement(segments, svg_ns("line"), id=f"segment-{segment[0]}-{segment[1]}")
        for name, value in (("x1", x1), ("y1", y1), ("x2", x2), ("y2", y2)):
            element.set(name, _fmt(value))
        if segment == figure.mean:
            element.set("stroke", "red")
        element.set("data-exact", segment_exact_text(figure, segment))

    points = etree.SubElement(root, svg_ns("g"), id="points", fill="black", **{"font-size": "12"})
    for label in labels:
        x, y = at[label]
        element = etree.SubElement(points, svg_ns("circle"), id=f"point-{label}")
        element.set("cx", _fmt(x))
        element.set("cy", _fmt(y))
        element.set("r", _fmt(config.POINT_RADIUS))
        element.set("data-exact", str(figure.points[label]))
        text = etree.SubElement(points, svg_ns("text"), id=f"label-{label}")
        text.set("x", _fmt(x + 2 * config.POINT_RADIUS))
        text.set("y", _fmt(y - 2 * config.POINT_RADIUS))
        text.text = label

    logger.debug("Rendered %s with %d points", figure.name, len(labels))
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="UTF-8").decode("utf-8")


def exact_values_from_svg(document) -> Dict[str, str]:
    """Read back every `data-exact` attribute of a rendered figure.

    Args:
        document (str | bytes): The SVG document.

    Returns:
        dict: Element id -> exact text.
    """
    if isinstance(document, str):
        document = document.encode("utf-8")
    soup = BeautifulSoup(document, "xml")
    return {element["id"]: element["data-exact"] for element in soup.find_all(attrs={"data-exact": True})}


def surd_values_from_svg(document: str) -> Dict[str, Surd]:
    """The exact lengths of the segments and radii of a rendered figure, parsed back to surds."""
    return {
        key: parse_surd(value)
        for key, value in exact_values_from_svg(document).items()
        if key.startswith(("segment-", "circle-")) and not value.startswith("√(")
    }
