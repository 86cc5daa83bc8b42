import pytest
from hypothesis import given
import hypothesis.strategies as st

from cmhilb import (
    LaurentPolynomial,
    NotACharacterError,
    Partition,
    SL2Character,
    decompose,
    dim_irrep,
    enumerate_partitions,
    exponent_string,
    exponents,
    hook_layer_character,
    irreducible_character,
    layered_fiber_character,
    regular_fiber_character,
    sl2_fixed_set,
    staircase,
    tangent_character,
    transpose,
    weights_all_odd,
)
from strategies import partitions

sl2_characters = st.dictionaries(
    st.integers(0, 8), st.integers(1, 4), max_size=5
).map(SL2Character)


def test_irreducible_character_examples():
    assert irreducible_character(0) == LaurentPolynomial.one()
    assert irreducible_character(1) == LaurentPolynomial({1: 1, -1: 1})
    assert irreducible_character(2) == LaurentPolynomial({2: 1, 0: 1, -2: 1})
    with pytest.raises(ValueError):
        irreducible_character(-1)


def test_decompose_examples():
    assert decompose(LaurentPolynomial({2: 1, 0: 1, -2: 1})) == SL2Character({2: 1})
    doubled = LaurentPolynomial({1: 2, 0: 2, -1: 2})
    assert decompose(doubled) == SL2Character({1: 2, 0: 2})
    with pytest.raises(NotACharacterError):
        decompose(LaurentPolynomial({1: 1, -1: 1, 0: -1}))
    with pytest.raises(NotACharacterError):
        decompose(LaurentPolynomial({2: 1}))
    assert decompose(LaurentPolynomial.zero()) == SL2Character({})


@given(sl2_characters)
def test_decompose_inverts_reconstruction(char):
    assert decompose(char.to_laurent()) == char
    assert char.to_laurent().evaluate(1) == char.dimension()


@given(partitions(max_size=10))
def test_tangent_decomposes(lam):
    # a tangent character is a genuine SL2 character exactly when the
    # partition is a staircase; otherwise some even weight shows up
    chi = tangent_character(lam)
    assert chi.is_palindromic()
    assert chi.evaluate(1) == 2 * lam.size


def test_exponents_table_rows():
    assert exponents(Partition((4, 1, 1))) == (0, 1, 2, 3)
    assert exponents(Partition((3, 2, 1))) == (0, 1, 1, 2, 2, 4)
    assert exponents(Partition((2, 2, 1, 1))) == (1, 2, 3)


def test_exponent_string():
    assert exponent_string((0, 1, 1, 2, 2, 4)) == "0,1²,2²,4"
    assert exponent_string((0,)) == "0"
    assert exponent_string(()) == ""


def test_exponent_duality_and_dimension():
    for m in range(4):
        n = m * (m + 1) // 2
        for lam in enumerate_partitions(n):
            e = exponents(lam)
            assert e == exponents(transpose(lam))
            assert sum(x + 1 for x in e) == dim_irrep(lam)


def test_tangent_character_examples():
    assert tangent_character(Partition((2, 1))) == LaurentPolynomial(
        {3: 1, 1: 2, -1: 2, -3: 1}
    )
    assert tangent_character(Partition((2, 1))) == irreducible_character(
        2
    ) * irreducible_character(1)
    assert tangent_character(Partition((1,))) == LaurentPolynomial({1: 1, -1: 1})


def test_staircase_tangent_factorization():
    for m in range(1, 9):
        assert tangent_character(staircase(m)) == irreducible_character(
            m
        ) * irreducible_character(m - 1)


def test_weights_all_odd():
    for m in range(7):
        assert weights_all_odd(tangent_character(staircase(m)))
    assert not weights_all_odd(tangent_character(Partition((2, 2))))
    assert weights_all_odd(LaurentPolynomial.zero())


def test_fixed_sets():
    assert sl2_fixed_set(6) == {staircase(3)}
    assert sl2_fixed_set(7) == set()
    assert sl2_fixed_set(1) == {Partition((1,))}


def test_hook_layer_character():
    assert hook_layer_character(1) == LaurentPolynomial.one()
    assert hook_layer_character(2) == LaurentPolynomial({1: 1, 0: 1, -1: 1})
    lead = irreducible_character(2) + irreducible_character(1)
    pair = irreducible_character(1) + irreducible_character(0)
    assert hook_layer_character(3) == lead * pair * pair
    with pytest.raises(ValueError):
        hook_layer_character(0)


def test_layered_fiber_character():
    assert layered_fiber_character(2) == LaurentPolynomial({-1: 2, 0: 2, 1: 2})
    expected = (hook_layer_character(3) * hook_layer_character(1)).scaled(16)
    assert layered_fiber_character(3) == expected


def test_layered_matches_regular_fiber():
    for m in range(1, 5):
        assert layered_fiber_character(m) == regular_fiber_character(m)


def test_sl2_character_validation():
    with pytest.raises(ValueError):
        SL2Character({-1: 2})
    with pytest.raises(NotACharacterError):
        SL2Character({2: -1})
    char = SL2Character({3: 2, 0: 1})
    assert char.dimension() == 9
    assert char.exponents() == (0, 3, 3)
    assert char.multiplicity(3) == 2
    assert char.multiplicity(5) == 0
