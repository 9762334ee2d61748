from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trigroup import jsonio
from trigroup.jsonio import (
    ParseError,
    matrix_from_json,
    matrix_to_json,
    scalar_from_json,
    scalar_to_json,
)
from trigroup.matrix import ProjMatrix, core
from trigroup.scalar import GaussianRational as G


def rationals():
    return st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**4))


class TestScalars:
    @pytest.mark.parametrize(
        "value,text",
        [
            (G(1), "1"),
            (G(Fraction(1, 2)), "1/2"),
            (G(-3, 0), "-3"),
            (G(0, 1), "i"),
            (G(0, -1), "-i"),
            (G(1, 1), "1+i"),
            (G(Fraction(1, 2), Fraction(-3, 4)), "1/2-3/4i"),
            (G(0, Fraction(2, 7)), "2/7i"),
        ],
    )
    def test_print_parse(self, value, text):
        assert scalar_to_json(value) == text
        assert scalar_from_json(text) == value

    def test_float_pair(self):
        out = scalar_to_json(complex(0.5, -2))
        assert out == [0.5, -2.0]
        assert scalar_from_json(out) == complex(0.5, -2)

    def test_bad_strings(self):
        for bad in ("abc", "1+j", "", "1//2"):
            with pytest.raises(ParseError):
                scalar_from_json(bad)

    @given(st.builds(G, rationals(), rationals()))
    def test_roundtrip_exact(self, z):
        assert scalar_from_json(scalar_to_json(z)) == z


class TestMatrices:
    def test_roundtrip_exact(self):
        g = ProjMatrix([[2, Fraction(1, 3), 0], [0, 1, G(0, 1)], [0, 0, 1]])
        doc = matrix_to_json(g)
        back = matrix_from_json(doc)
        assert back.rows == g.normalize().rows or matrix_to_json(back) == doc

    def test_print_parse_print_stable(self):
        doc = matrix_to_json(core(Fraction(1, 2), G(1, -1)))
        assert matrix_to_json(matrix_from_json(doc)) == doc

    def test_float_matrix(self):
        g = ProjMatrix([[complex(1), complex(0.5, 1), 0j], [0j, complex(1), 0j], [0j, 0j, complex(1)]])
        doc = matrix_to_json(g)
        back = matrix_from_json(doc)
        assert not back.exact
        assert matrix_to_json(back) == doc

    def test_shape_errors(self):
        with pytest.raises(ParseError):
            matrix_from_json({"rows": [[1, 2], [3, 4]]})
        with pytest.raises(ParseError):
            matrix_from_json([1, 2, 3])

    def test_mixed_mode_promotes_to_float(self):
        doc = {"rows": [["1", [0.5, 0.0], "0"], ["0", "1", "0"], ["0", "0", "1"]]}
        g = matrix_from_json(doc)
        assert not g.exact


class TestPresentations:
    def test_generators_list(self):
        doc = [matrix_to_json(core(1, 0)), matrix_to_json(core(0, 1))]
        gens, labels = jsonio.generators_from_json(doc)
        assert len(gens) == 2 and labels is None

    def test_labelled(self):
        doc = {
            "generators": [matrix_to_json(core(1, 0))],
            "labels": ["a"],
        }
        gens, labels = jsonio.generators_from_json(doc)
        assert labels == ["a"]

    def test_label_count_mismatch(self):
        doc = {"generators": [matrix_to_json(core(1, 0))], "labels": ["a", "b"]}
        with pytest.raises(ParseError):
            jsonio.generators_from_json(doc)
