import pytest
from hypothesis import given

from helpers import artinian_ideals
from monolef import oracles
from monolef.monomials import (
    IdealError,
    MonomialIdeal,
    divides,
    format_monomial,
    hilbert_function,
    lcm,
    monomial_count,
    monomials_of_degree,
    socle,
    standard_monomials,
    support_profile,
    top_degree,
)


def test_monomials_of_degree_is_lex_descending():
    assert list(monomials_of_degree(3, 2)) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)
    ]
    assert list(monomials_of_degree(2, 0)) == [(0, 0)]


@pytest.mark.parametrize("n,k", [(1, 4), (2, 5), (3, 4), (4, 3), (5, 2)])
def test_monomial_count_matches_enumeration(n, k):
    assert monomial_count(n, k) == len(list(monomials_of_degree(n, k))) == len(oracles.all_monomials(n, k))


def test_divides_and_lcm():
    assert divides((1, 0, 2), (1, 1, 2))
    assert not divides((2, 0, 0), (1, 5, 5))
    assert lcm((2, 0, 1), (0, 3, 1)) == (2, 3, 1)


def test_format_monomial():
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0)) == "1"


def test_ideal_validation():
    with pytest.raises(IdealError):
        MonomialIdeal(2, 2, ((2, 0), (1, 0)))  # wrong degree
    with pytest.raises(IdealError):
        MonomialIdeal(2, 2, ((2, 0), (2, 0)))  # duplicate
    with pytest.raises(IdealError):
        MonomialIdeal(2, 2, ((2, 0, 0),))  # wrong length
    with pytest.raises(IdealError):
        MonomialIdeal(2, 2, ())


def test_non_artinian_is_rejected_by_hilbert():
    ideal = MonomialIdeal(2, 2, ((2, 0), (1, 1)))
    assert not ideal.is_artinian
    with pytest.raises(IdealError):
        hilbert_function(ideal)


def test_generators_are_sorted_and_membership(togliatti):
    assert togliatti.gens == ((3, 0, 0), (1, 1, 1), (0, 3, 0), (0, 0, 3))
    assert (2, 2, 1) in togliatti
    assert (2, 2, 0) not in togliatti


def test_togliatti_hilbert_and_socle(togliatti):
    assert hilbert_function(togliatti) == (1, 3, 6, 6, 3, 0)
    assert top_degree(togliatti) == 4
    assert socle(togliatti) == {4: [(2, 2, 0), (2, 0, 2), (0, 2, 2)]}
    assert standard_monomials(togliatti, 3) == [
        (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2)
    ]


def test_almost_linear_cubic_hilbert_and_socle(almost_linear_cubic):
    assert hilbert_function(almost_linear_cubic) == (1, 3, 6, 1, 0)
    # x^2, y^2, z^2 are killed by every variable already in degree 2
    assert socle(almost_linear_cubic) == {2: [(2, 0, 0), (0, 2, 0), (0, 0, 2)], 3: [(1, 1, 1)]}


def test_power_of_maximal_ideal():
    ideal = MonomialIdeal.power_of_maximal(3, 3)
    assert len(ideal.gens) == 10
    assert hilbert_function(ideal) == (1, 3, 6, 0)


def test_permuted_and_json(togliatti):
    assert togliatti.permuted((2, 0, 1)) == togliatti
    ideal = MonomialIdeal.from_gens([(2, 0), (1, 1), (0, 2)])
    assert ideal.to_json() == {"n": 2, "d": 2, "gens": [[2, 0], [1, 1], [0, 2]]}


@given(artinian_ideals())
def test_standard_monomials_match_box_oracle(ideal):
    hf = hilbert_function(ideal)
    for k in range(len(hf) + 1):
        ours = standard_monomials(ideal, k)
        assert sorted(ours) == sorted(oracles.quotient_basis(ideal.gens, ideal.n, k))
        assert ours == sorted(ours, reverse=True)
    assert hf[-1] == 0 and all(hf[:-1])


@given(artinian_ideals())
def test_socle_members_are_killed_by_every_variable(ideal):
    for k, members in socle(ideal).items():
        for m in members:
            for i in range(ideal.n):
                assert m[:i] + (m[i] + 1,) + m[i + 1:] in ideal


def test_support_profile_examples(togliatti, almost_linear_cubic):
    # Togliatti: r = 1, survivors in degree 3 use two variables
    prof = support_profile(togliatti, 1)
    assert prof.min_support == 2 and prof.support_ok and prof.hilbert_bound_ok
    # almost-linear cubic ideal: r = 2, only xyz survives
    prof = support_profile(almost_linear_cubic, 2)
    assert prof.min_support == 3 and prof.support_ok
    assert prof.hilbert_d == 1 and prof.hilbert_bound_ok


def test_support_profile_without_survivors():
    prof = support_profile(MonomialIdeal.power_of_maximal(3, 2), 3)
    assert prof.min_support is None and prof.support_ok and prof.hilbert_bound_ok
