import pytest
from hypothesis import given, strategies as st

from reeskit.monomials import (
    IdealValidationError,
    Monomial,
    VariableTable,
    default_table,
    make_ideal,
    mono_coprime,
    mono_div_exact,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    mono_pow,
    mono_product,
    render_monomial,
    validate_ideal,
)


def m(**exps):
    """Monomial from keyword exponents over variable indices v0, v1, ..."""
    return Monomial.from_dict({int(k[1:]): e for k, e in exps.items()})


class TestMonomialBasics:
    def test_one(self):
        assert Monomial.one().is_one
        assert Monomial.one().degree == 0
        assert m().is_one

    def test_normalization_drops_zero_exponents(self):
        assert m(v0=1, v1=0) == m(v0=1)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Monomial(((0, -1),))

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            Monomial(((2, 1), (0, 1)))

    def test_degree_and_support(self):
        a = m(v0=2, v3=1)
        assert a.degree == 3
        assert a.support == frozenset({0, 3})
        assert a.exponent(0) == 2
        assert a.exponent(1) == 0

    def test_squarefree_flag(self):
        assert m(v0=1, v2=1).is_squarefree
        assert not m(v0=2).is_squarefree

    def test_from_support(self):
        assert Monomial.from_support([3, 1]) == m(v1=1, v3=1)


class TestArithmetic:
    def test_mul(self):
        assert mono_mul(m(v0=1), m(v0=1, v1=2)) == m(v0=2, v1=2)

    def test_pow(self):
        assert mono_pow(m(v0=1, v1=2), 3) == m(v0=3, v1=6)
        assert mono_pow(m(v0=1), 0).is_one

    def test_gcd_lcm(self):
        a, b = m(v0=2, v1=1), m(v0=1, v2=3)
        assert mono_gcd(a, b) == m(v0=1)
        assert mono_lcm(a, b) == m(v0=2, v1=1, v2=3)

    def test_divides(self):
        assert mono_divides(m(v0=1), m(v0=2, v1=1))
        assert not mono_divides(m(v0=3), m(v0=2))

    def test_div_exact(self):
        assert mono_div_exact(m(v0=2, v1=1), m(v0=1)) == m(v0=1, v1=1)
        with pytest.raises(ValueError):
            mono_div_exact(m(v0=1), m(v1=1))

    def test_coprime(self):
        assert mono_coprime(m(v0=1), m(v1=1))
        assert not mono_coprime(m(v0=1), m(v0=1, v1=1))

    def test_product(self):
        assert mono_product([m(v0=1), m(v0=1, v1=1), m(v2=2)]) == m(
            v0=2, v1=1, v2=2)
        assert mono_product([]).is_one


# small random monomials for algebraic identities
monomials = st.dictionaries(
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=1, max_value=4),
    max_size=4,
).map(Monomial.from_dict)


@given(monomials, monomials)
def test_gcd_divides_both(a, b):
    g = mono_gcd(a, b)
    assert mono_divides(g, a) and mono_divides(g, b)


@given(monomials, monomials)
def test_gcd_lcm_product_identity(a, b):
    assert mono_mul(mono_gcd(a, b), mono_lcm(a, b)) == mono_mul(a, b)


@given(monomials, monomials)
def test_cofactors_are_coprime(a, b):
    g = mono_gcd(a, b)
    assert mono_coprime(mono_div_exact(a, g), mono_div_exact(b, g))


@given(monomials, monomials, monomials)
def test_gcd_is_associative(a, b, c):
    assert mono_gcd(mono_gcd(a, b), c) == mono_gcd(a, mono_gcd(b, c))


@given(monomials, monomials, monomials)
def test_mul_distributes_over_gcd(a, b, c):
    assert mono_mul(a, mono_gcd(b, c)) == mono_gcd(mono_mul(a, b),
                                                   mono_mul(a, c))


class TestVariableTable:
    def test_names(self):
        t = VariableTable(("x", "y"))
        assert len(t) == 2
        assert t.index("y") == 1

    def test_duplicate_name_rejected(self):
        with pytest.raises(ValueError):
            VariableTable(("x", "x"))

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            VariableTable(("x",)).index("y")

    def test_default_table(self):
        t = default_table(3)
        assert t.names == ("x1", "x2", "x3")


class TestRender:
    def test_unit(self):
        assert render_monomial(Monomial.one(), default_table(2)) == "1"

    def test_powers_and_sep(self):
        t = default_table(3)
        assert render_monomial(m(v0=2, v2=1), t) == "x1^2*x3"


class TestIdealValidation:
    def test_make_ideal(self):
        ideal = make_ideal(["a", "b", "c"], [[0, 1], [1, 2]])
        assert ideal.n == 2
        assert ideal.generator(1) == m(v0=1, v1=1)
        assert ideal.gen_degrees() == (2, 2)

    def test_empty(self):
        with pytest.raises(IdealValidationError) as err:
            make_ideal(["a"], [])
        assert err.value.reason == "empty"

    def test_duplicate_generator(self):
        with pytest.raises(IdealValidationError) as err:
            make_ideal(["a", "b"], [[0, 1], [0, 1]])
        assert err.value.reason == "duplicate"

    def test_divisibility(self):
        with pytest.raises(IdealValidationError) as err:
            make_ideal(["a", "b"], [[0], [0, 1]])
        assert err.value.reason == "divisibility"

    def test_non_squarefree(self):
        table = default_table(2)
        with pytest.raises(IdealValidationError) as err:
            validate_ideal(table, (m(v0=2),))
        assert err.value.reason == "non-square-free"

    def test_bad_variable(self):
        table = default_table(2)
        with pytest.raises(IdealValidationError) as err:
            validate_ideal(table, (m(v5=1),))
        assert err.value.reason == "bad-variable"

    def test_generator_index_is_one_based(self):
        ideal = make_ideal(["a", "b", "c"], [[0, 1], [1, 2]])
        with pytest.raises(IndexError):
            ideal.generator(0)
