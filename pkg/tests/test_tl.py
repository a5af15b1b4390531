import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidket import (
    DELTA,
    LaurentPoly,
    TLDiagram,
    TLElement,
    closure_loop_count,
    enumerate_basis,
    generator_diagram,
    identity_diagram,
    markov_trace,
    multiply,
)
from braidket.errors import SizeLimitError

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def U(n, i):
    return TLElement.from_diagram(generator_diagram(n, i))


class TestDiagramValidation:
    def test_identity(self):
        assert identity_diagram(3).pairing == (3, 4, 5, 0, 1, 2)

    def test_generator_two_strands(self):
        assert generator_diagram(2, 1).pairing == (1, 0, 3, 2)

    def test_generator_three_strands(self):
        assert generator_diagram(3, 2).pairing == (3, 2, 1, 0, 5, 4)

    def test_index_zero_is_identity(self):
        assert generator_diagram(3, 0) == identity_diagram(3)

    def test_invalid_generator_index(self):
        with pytest.raises(ValueError):
            generator_diagram(3, 7)
        with pytest.raises(ValueError):
            generator_diagram(3, -1)
        with pytest.raises(ValueError):
            generator_diagram(3, 3)

    def test_rejects_crossing_pairing(self):
        with pytest.raises(ValueError):
            TLDiagram(2, (3, 2, 1, 0))

    def test_rejects_fixed_point(self):
        with pytest.raises(ValueError):
            TLDiagram(1, (0, 1))

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError):
            TLDiagram(2, (1, 2, 3, 0))


class TestMultiplication:
    def test_u_squared(self):
        u = U(2, 1)
        assert multiply(u, u) == u.scaled(DELTA)

    def test_jaw_relation(self):
        u1, u2 = U(3, 1), U(3, 2)
        assert multiply(multiply(u1, u2), u1) == u1
        assert multiply(multiply(u2, u1), u2) == u2

    def test_identity_acts_trivially(self):
        u = U(2, 1)
        assert multiply(TLElement.identity(2), u) == u
        assert multiply(u, TLElement.identity(2)) == u

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            multiply(U(2, 1), U(3, 1))

    def test_relations_all_n(self):
        for n in range(2, 7):
            for i in range(1, n):
                u_i = U(n, i)
                assert multiply(u_i, u_i) == u_i.scaled(DELTA)
                for j in range(1, n):
                    u_j = U(n, j)
                    if abs(i - j) == 1:
                        assert multiply(multiply(u_i, u_j), u_i) == u_i
                    elif abs(i - j) > 1:
                        assert multiply(u_i, u_j) == multiply(u_j, u_i)

    def test_cleared_jones_identity(self):
        # with e_i = U_i/delta the relation e_i e_j e_i = delta^-2 e_i clears to
        # delta^2 (U_i U_j U_i) = delta^2 U_i for |i-j| = 1
        delta_sq = DELTA * DELTA
        for n in (3, 4):
            for i in range(1, n - 1):
                lhs = multiply(multiply(U(n, i), U(n, i + 1)), U(n, i)).scaled(delta_sq)
                assert lhs == U(n, i).scaled(delta_sq)

    def test_associativity_on_random_basis_triples(self, rng):
        for n in (3, 4, 5):
            basis = enumerate_basis(n)
            for _ in range(15):
                x, y, z = (TLElement.from_diagram(rng.choice(basis)) for _ in range(3))
                assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


class TestClosureAndTrace:
    def test_identity_closure(self):
        assert closure_loop_count(identity_diagram(3)) == 3

    def test_generator_closure(self):
        assert closure_loop_count(generator_diagram(3, 1)) == 2

    def test_u1u2_closure(self):
        diagram = next(iter(multiply(U(3, 1), U(3, 2)).combo))
        assert closure_loop_count(diagram) == 1

    def test_trace_identity_element(self):
        assert markov_trace(TLElement.identity(2)) == DELTA * DELTA

    def test_trace_generator(self):
        assert markov_trace(U(2, 1)) == DELTA

    def test_trace_linearity(self):
        a_sq = LaurentPoly.monomial(2)
        coeff = LaurentPoly({0: 1, -4: -1})
        elem = TLElement.identity(2).scaled(a_sq) + U(2, 1).scaled(coeff)
        assert markov_trace(elem) == a_sq * DELTA * DELTA + coeff * DELTA

    def test_trace_property_random_pairs(self, rng):
        for n in (2, 3, 4, 5):
            basis = enumerate_basis(n)
            for _ in range(12):
                x = TLElement.from_diagram(rng.choice(basis))
                y = TLElement.from_diagram(rng.choice(basis))
                assert markov_trace(multiply(x, y)) == markov_trace(multiply(y, x))


class TestBasisEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_catalan_count(self, n):
        basis = enumerate_basis(n)
        assert len(basis) == CATALAN[n]
        assert len(set(basis)) == CATALAN[n]

    def test_small_cases(self):
        assert enumerate_basis(1) == [identity_diagram(1)]
        assert set(enumerate_basis(2)) == {identity_diagram(2), generator_diagram(2, 1)}

    def test_size_guard(self):
        with pytest.raises(SizeLimitError):
            enumerate_basis(9)
        with pytest.raises(SizeLimitError):
            enumerate_basis(0)

    @given(st.integers(2, 5), st.integers(0, 10**6))
    @settings(max_examples=25, deadline=None)
    def test_products_of_generators_stay_in_basis(self, n, seed):
        rng = random.Random(seed)
        basis = set(enumerate_basis(n))
        elem = TLElement.identity(n)
        for _ in range(6):
            elem = multiply(elem, U(n, rng.randint(1, n - 1)))
        assert set(elem.combo) <= basis
