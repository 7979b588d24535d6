from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rtmaps.words import (
    CHI_X,
    IDENTITY,
    PHI,
    TAU,
    DomainError,
    MzvIndex,
    NotAdmissible,
    Poly,
    admissible_words,
    chi_x,
    chi_x_inverse,
    hy_words,
    index_to_word,
    l_op,
    l_x_inverse,
    parse_word,
    phi_auto,
    r_op,
    r_y_inverse,
    tau_anti,
    word_order,
    word_to_index,
    words_of_weight,
)

from conftest import dense_rank, h1_polys, polys


def test_phi_examples():
    assert phi_auto("x") == Poly.parse("x + y")
    assert phi_auto("y") == Poly.parse("-y")
    assert phi_auto("xy") == Poly.parse("-xy - yy")
    assert phi_auto("") == Poly.word("")


def test_tau_examples():
    assert tau_anti("xy") == Poly.word("xy")
    assert tau_anti("xxy") == Poly.word("xyy")
    assert tau_anti("xyxy") == Poly.word("xyxy")


def test_chi_examples():
    assert chi_x("y") == Poly.parse("-xy")
    assert chi_x("") == Poly.word("y")
    assert chi_x_inverse("y") == Poly.word("")


@given(polys)
def test_phi_involution(p):
    assert phi_auto(phi_auto(p)) == p


@given(polys)
def test_tau_involution(p):
    assert tau_anti(tau_anti(p)) == p


@given(polys, polys)
def test_phi_multiplicative_tau_antimultiplicative(p, q):
    assert phi_auto(p * q) == phi_auto(p) * phi_auto(q)
    assert tau_anti(p * q) == tau_anti(q) * tau_anti(p)


@given(polys)
def test_chi_inverse_round_trip(p):
    assert chi_x_inverse(chi_x(p)) == p


@pytest.mark.parametrize("n", range(1, 8))
def test_chi_bijects_onto_words_ending_in_y(n):
    images = [chi_x(w) for w in words_of_weight(n - 1)]
    assert all(img.in_h1() and img.weights() == {n} for img in images)
    assert dense_rank(images) == 2 ** (n - 1) == len(hy_words(n))


@given(h1_polys)
def test_chi_image_round_trip(p):
    q = p - Poly.word("", p.terms.get("", 0))  # chi_x^-1 needs every word to end in y
    assert chi_x(chi_x_inverse(q)) == q


def test_operator_algebra():
    assert (PHI @ PHI).agrees_with(IDENTITY, words_of_weight(4))
    assert (TAU @ TAU)("xxy") == Poly.word("xxy")
    assert CHI_X("xy") == chi_x("xy")
    assert (r_op("y") - r_op("x"))("x") == Poly.parse("xy - xx")
    assert (2 * l_op("x"))("y") == Poly.parse("2 xy")
    assert (-r_op("x") + r_op("x"))("xy") == Poly.zero()


@pytest.mark.parametrize("fn,bad", [(r_y_inverse, "yx"), (r_y_inverse, ""), (l_x_inverse, "yx"), (l_x_inverse, ""),
                                    (chi_x_inverse, "xyx")])
def test_partial_inverses_raise_outside_domain(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


def test_partial_inverses():
    assert r_y_inverse(Poly.parse("xy - 2 yy")) == Poly.parse("x - 2 y")
    assert l_x_inverse(Poly.parse("xy + xx")) == Poly.parse("y + x")


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
def test_index_word_round_trip(parts):
    idx = MzvIndex(parts)
    w = index_to_word(idx)
    assert word_to_index(w) == idx
    assert len(w) == idx.weight and w.count("y") == idx.depth
    assert MzvIndex.parse(str(idx)) == idx


def test_index_examples():
    assert index_to_word((2,)) == "xy"
    assert index_to_word((3, 1)) == "xxyy"
    assert word_to_index("xyxy") == (2, 2)
    assert MzvIndex.parse("(2,1)") == (2, 1)
    assert not MzvIndex((1, 2)).admissible
    assert issubclass(NotAdmissible, DomainError)
    with pytest.raises(ValueError):
        MzvIndex((0, 2))
    with pytest.raises(DomainError):
        word_to_index("yx")


def test_word_enumerators():
    assert list(words_of_weight(2)) == ["xx", "xy", "yx", "yy"]
    assert hy_words(2) == ["xy", "yy"]
    assert admissible_words(3) == ["xxy", "xyy"]
    assert admissible_words(1) == []
    assert sorted(["y", "xx", "x", ""], key=word_order) == ["", "x", "y", "xx"]


@given(polys)
def test_text_round_trip(p):
    assert Poly.parse(str(p)) == p
    assert Poly.from_json(p.to_json()) == p


def test_text_forms():
    assert str(Poly.parse("xy - 2 xxy + 1/3 y")) == "1/3 y + xy - 2 xxy"
    assert str(Poly.zero()) == "0"
    assert parse_word("1") == ""
    assert Poly.parse("1").terms == {"": 1}
    assert Poly.word("xy", Fraction(4, 2)).terms["xy"] == 2
    with pytest.raises(DomainError):
        Poly.parse("xz")


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly({"x": 0.5})


def test_domain_predicates():
    assert Poly.parse("xy + 1").in_h0()
    assert not Poly.parse("yx").in_h1()
    assert Poly.parse("xy - xxy").in_xhy()
    assert not Poly.parse("xy + 1").in_xhy()
