import os
from fractions import Fraction

import pytest
from lxml import etree

from theaetetus.powers import integers, surd
from theaetetus.powers.construction import (Coordinate, Figure, Point, SegmentHasValue, exact_values_from_svg,
                                            figure_to_svg, geometric_mean_figure, square_the_rectangle,
                                            squared_length, surd_values_from_svg, theodorus_sequence,
                                            verify_figure)
from theaetetus.powers.construction.figures import ZERO
from theaetetus.powers.errors import MalformedFigureError, PreconditionError
from theaetetus.powers.ratio import Ratio
from theaetetus.powers.surd import Surd


def test_coordinates_are_exact():
    root3 = Coordinate.of(surd.sqrt_of_integer(3))
    assert root3 * root3 == Coordinate(Fraction(3))
    assert Coordinate(Fraction(1), Fraction(2), 1) == Coordinate(Fraction(3))
    assert Coordinate(Fraction(1), Fraction(0), 5).kernel == 1
    assert str(Coordinate(Fraction(3)) - root3) == "3 - (1/1)·√3"
    assert str(-root3) == "-(1/1)·√3"
    assert float(root3) == pytest.approx(3 ** 0.5)
    with pytest.raises(ValueError):
        root3 + Coordinate.of(surd.sqrt_of_integer(2))


@pytest.mark.parametrize("a, b, expected", [
    (Ratio(3, 1), Ratio(1, 1), Surd(Ratio(1, 1), 3)),
    (Ratio(4, 1), Ratio(1, 1), Surd(Ratio(2, 1), 1)),
    (Ratio(9, 2), Ratio(2, 1), Surd(Ratio(3, 1), 1)),
])
def test_geometric_mean_figure(a, b, expected):
    figure = geometric_mean_figure(a, b)
    assert figure.mean_value() == expected
    assert verify_figure(figure)


def test_geometric_mean_figure_relations():
    for a, b in [(Ratio(3, 1), Ratio(1, 1)), (Ratio(5, 7), Ratio(2, 3)), (Ratio(12, 1), Ratio(3, 1))]:
        figure = geometric_mean_figure(a, b)
        legs = squared_length(figure, ("O", "D")) + squared_length(figure, ("D", "B"))
        assert legs == squared_length(figure, ("O", "B"))
        product = a.as_fraction() * b.as_fraction()
        assert squared_length(figure, ("H", "D")) == Coordinate(product)


@pytest.mark.parametrize("n, side", [
    (3, Surd(Ratio(1, 1), 3)),
    (9, Surd(Ratio(3, 1), 1)),
    (17, Surd(Ratio(1, 1), 17)),
])
def test_square_the_rectangle(n, side):
    figure = square_the_rectangle(n)
    assert figure.mean_value() == side
    assert verify_figure(figure)


def test_square_the_rectangle_is_exact():
    for n in range(1, 201):
        figure = square_the_rectangle(n)
        assert verify_figure(figure)
        side = figure.mean_value()
        assert surd.square(side) == Ratio(n, 1)
        assert squared_length(figure, ("H", "D")) == Coordinate(Fraction(n))
        assert (surd.is_rational(side) is not None) == integers.is_perfect_square(n)


def test_tampered_claim_does_not_verify():
    figure = square_the_rectangle(3)
    tampered = [claim for claim in figure.claims if not (isinstance(claim, SegmentHasValue)
                                                         and claim.side == ("O", "D"))]
    tampered.append(SegmentHasValue(("O", "D"), Surd(Ratio(3, 1), 3)))
    assert not verify_figure(figure.with_claims(tampered))


def test_figure_without_claims_is_verified():
    assert verify_figure(Figure(points={"O": Point(ZERO, ZERO)}))


def test_dangling_label_is_malformed():
    figure = Figure(points={"O": Point(ZERO, ZERO)}, segments=(("O", "X"),))
    with pytest.raises(MalformedFigureError):
        verify_figure(figure)


def test_theodorus_sequence():
    figures = theodorus_sequence()
    assert len(figures) == 7
    assert figures[0] == square_the_rectangle(3)
    assert figures[3].mean_value() == Surd(Ratio(3, 1), 1)
    assert all(verify_figure(figure) for figure in figures)


def test_svg_carries_exact_values():
    document = figure_to_svg(square_the_rectangle(3), 100)
    values = exact_values_from_svg(document)
    assert values["segment-H-D"] == "(1/1)·√3"
    assert values["circle-0"] == "(2/1)·√1"
    assert values["point-D"] == "(3, (1/1)·√3)"


def test_svg_is_well_formed():
    document = figure_to_svg(geometric_mean_figure(Ratio(5, 2), Ratio(3, 1)), title="mean of 5/2 and 3")
    root = etree.fromstring(document.encode("utf-8"))
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    assert root.get("version") == "1.1"
    assert root.findtext("{http://www.w3.org/2000/svg}title") == "mean of 5/2 and 3"


def test_svg_values_read_back_for_the_lesson():
    figures = theodorus_sequence()
    documents = [figure_to_svg(figure) for figure in figures]
    assert len(documents) == 7
    for figure, document in zip(figures, documents):
        assert document
        values = surd_values_from_svg(document)
        for claim in figure.claims:
            if isinstance(claim, SegmentHasValue):
                assert values["segment-{}-{}".format(*claim.side)] == claim.value
        assert values["circle-0"] == figure.circles[0].radius


def test_scale_only_changes_the_drawing():
    figure = square_the_rectangle(5)
    small, large = figure_to_svg(figure, 10), figure_to_svg(figure, 200)
    assert small != large
    assert exact_values_from_svg(small) == exact_values_from_svg(large)


def test_svg_preconditions():
    figure = square_the_rectangle(3)
    for scale in (0, -1, float("nan"), float("inf")):
        with pytest.raises(ValueError, match="finite positive"):
            figure_to_svg(figure, scale)
    tampered = figure.with_claims(figure.claims + (SegmentHasValue(("O", "H"), Surd(Ratio(1, 1), 1)),))
    with pytest.raises(PreconditionError):
        figure_to_svg(tampered)


def test_svg_file_output(tmp_folder):
    path = os.path.join(tmp_folder, "square-3.svg")
    with open(path, "w", encoding="utf-8") as stream:
        stream.write(figure_to_svg(square_the_rectangle(3)))
    with open(path, "rb") as stream:
        assert exact_values_from_svg(stream.read())["segment-H-D"] == "(1/1)·√3"
