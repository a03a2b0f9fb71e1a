import pytest
from hypothesis import given, settings, strategies as st

from weylorbits.maps import phi_rule
from weylorbits.partitions import dominates, partitions
from weylorbits.skeleta import (
    G2_TORSOR_SIZES, ReductionProfile, USpace, admissible_profiles, blocks_from_ranks, build_uspace,
    is_admissible, jblock_partition, jordan_from_profile, minimal_jordan_via_skeleton,
    minimal_profile, quadric_pair_counts, rank_sequence, torsor_size,
)


def test_build_uspace():
    u = build_uspace("B", (1, 1))
    assert (u.dims, u.extra_zero_line, u.total_dim) == ({1: 2}, False, 2)
    u = build_uspace("B", (2, 1, 1))
    assert (u.dims, u.extra_zero_line, u.total_dim) == ({2: 1, 1: 2, 0: 1}, True, 4)
    u = build_uspace("D", (1, 1, 1, 1))
    assert (u.dims, u.total_dim) == ({1: 4}, 4)
    with pytest.raises(ValueError):
        build_uspace("B", ())
    with pytest.raises(ValueError):
        build_uspace("D", (2, 1, 1))


@pytest.mark.parametrize("dims, ell, r", [
    ({1: 2}, {1: 1}, {1: 1}),
    ({2: 1, 1: 1}, {2: 1, 1: 0}, {2: 1, 1: 0}),
    ({1: 4}, {1: 2}, {1: 1}),
])
def test_minimal_profile(dims, ell, r):
    u = USpace(dims, False, sum(dims.values()))
    p = minimal_profile(u)
    assert (p.ell, p.r) == (ell, r)


def test_admissible_examples():
    two = admissible_profiles(USpace({1: 2}, False, 2))
    assert [(p.ell, p.r) for p in two] == [({1: 1}, {1: 1})]
    four = admissible_profiles(USpace({1: 4}, False, 4))
    assert any(p.ell == {1: 2} and p.r == {1: 1} for p in four)
    assert admissible_profiles(USpace({}, False, 0)) == [ReductionProfile({}, {})]
    assert not is_admissible(USpace({1: 2}, False, 2), ReductionProfile({1: 1}, {1: 0}))


def test_rank_formula_example():
    u = build_uspace("B", (1, 1))
    p = minimal_profile(u)
    assert rank_sequence(u, p) == [4, 2, 1, 0]
    assert blocks_from_ranks([4, 2, 1, 0]) == (3, 1)
    assert str(jordan_from_profile(u, p, "B")) == "311"


def test_other_profiles_give_larger_types():
    u = build_uspace("D", (2, 2, 1, 1))
    low = jordan_from_profile(u, minimal_profile(u), "D")
    for p in admissible_profiles(u):
        blocks = blocks_from_ranks(rank_sequence(u, p))
        if blocks is not None:
            assert dominates(blocks, low.parts)


@pytest.mark.parametrize("t, cycles, expected", [
    ("B", (1, 1), "311"),
    ("D", (1, 1, 1, 1), "3221"),
    ("B", (2, 1, 1), "522"),
    ("D", (3, 3, 1, 1), "7531"),
    ("C", (2, 1), "42"),
])
def test_minimal_jordan_examples(t, cycles, expected):
    assert str(minimal_jordan_via_skeleton(t, cycles)) == expected


def test_d3311_matches_epsilon_rule():
    assert minimal_jordan_via_skeleton("D", (3, 3, 1, 1)).parts == phi_rule("D", (3, 3, 1, 1)).blocks


def test_torsor_examples():
    assert torsor_size("D", (1, 1, 1, 1)) == 8
    assert jblock_partition(build_uspace("D", (1, 1, 1, 1))).count == 1
    assert torsor_size("B", (2, 1)) == 2
    assert torsor_size("C", (3, 2, 1)) == 1
    assert G2_TORSOR_SIZES == {"A2": 1, "A1+~A1": 4}


cycles_st = st.sampled_from("BD").flatmap(lambda t: st.tuples(
    st.just(t), st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.sampled_from([p for p in partitions(n) if t == "B" or len(p) % 2 == 0] or [(1, 1)]))))


@settings(max_examples=60, deadline=None)
@given(cycles_st)
def test_profile_invariants(tc):
    t, cycles = tc
    u = build_uspace(t, cycles)
    lattice_dim = 2 * sum(cycles) + (1 if u.extra_zero_line else 0)
    for p in admissible_profiles(u):
        ranks = rank_sequence(u, p)
        assert ranks[0] == lattice_dim
        assert all(a >= b for a, b in zip(ranks, ranks[1:])) and ranks[-1] == 0
        assert sum(p.ell.values()) * 2 == u.total_dim
    size = torsor_size(t, cycles)
    assert size & (size - 1) == 0 and (2 ** len(cycles)) % size == 0
    for block in jblock_partition(u).blocks:
        assert sum(u.dims[j] for j in block) % 2 == 0


@pytest.mark.parametrize("m", [1, 2, 3])
def test_quadric_counts(m):
    assert quadric_pair_counts(m) == (2 ** (2 * m - 1), 2 ** (2 * m))
    assert quadric_pair_counts(m, seed=11) == (2 ** (2 * m - 1), 2 ** (2 * m))


def test_quadric_bad_m():
    with pytest.raises(ValueError):
        quadric_pair_counts(0)
