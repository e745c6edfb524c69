"""Integer monodromy matrices and the index-3 subgroup."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import monodromy as m


def test_corrected_relations_hold():
    rep = m.relations_report()
    for name, ok in rep.items():
        if "(printed)" not in name:
            assert ok, name


def test_true_change_of_basis_pattern():
    assert all(m.true_pattern().values())


def test_reflections_from_stokes_matrix():
    for j, R in enumerate((m.R1, m.R2, m.R3)):
        assert m.reflection(m.S, j) == R


def test_inverse_exact():
    for M in (m.S, m.T, m.T0, m.R1):
        assert m.mul(M, m.inverse(M)) == m.identity(3)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_rho_homomorphism(seed):
    rng = random.Random(seed)
    A, B = m.random_sl2(rng), m.random_sl2(rng)
    assert m.rho(m.mul(A, B)) == m.mul(m.rho(A), m.rho(B))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_gamma3_closed_under_products(seed):
    rng = random.Random(seed)
    words = [m.random_sl2(rng) for _ in range(30)]
    members = [w for w in words if m.gamma3_membership(w)][:2]
    if len(members) == 2:
        assert m.gamma3_membership(m.mul(*members))
        assert m.gamma3_membership(m.inverse(members[0]))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_membership_matches_character(seed):
    rng = random.Random(seed)
    g = m.random_sl2(rng, length=4)
    (_, _), (c, d) = g
    tau = complex(0.05, 1.0) if c == 0 else -d / c + 1j / abs(c)
    chi = m.chi3(g, tau)
    assert abs(abs(chi) - 1) < 1e-8
    assert m.gamma3_membership(g) == (abs(chi - 1) < 0.5)


def test_generators_are_members():
    for g in (m.r1, m.r2, m.r3):
        assert m.gamma3_membership(g)
    assert not m.gamma3_membership(((1, 1), (0, 1)))


def test_gamma2_character():
    for g in (((1, 1), (0, 1)), m.r1, m.r2):
        assert m.gamma2_character_check(g, 0.1 + 1.3j) < 1e-8


def test_bad_inputs():
    with pytest.raises(ValueError):
        m.gamma3_membership(((2, 0), (0, 1)))
    with pytest.raises(ZeroDivisionError):
        m.inverse(((1, 2), (2, 4)))
