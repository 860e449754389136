import pytest

from stablekron.orbits import (
    NotMaximalDepth,
    boundaries,
    enumerate_orbits,
    enumerate_sstd,
    frame_of,
    is_semistandard,
    orbit_of,
    to_classical,
)
from stablekron.partitions import parse_partition
from stablekron.tableaux import enumerate_std0, parse_tableau


def P(text):
    return parse_partition(text)


def T(start, text):
    return parse_tableau(P(start), text)


def test_boundaries():
    assert boundaries(P("2,2,1")) == frozenset({2, 4})
    assert boundaries(P("5")) == frozenset()
    assert boundaries(P("")) == frozenset()
    assert boundaries(P("1,1,1")) == frozenset({1, 2})


def test_frame_of():
    mu = P("2,2,1")
    assert [frame_of(k, mu) for k in range(1, 6)] == [1, 1, 2, 2, 3]
    with pytest.raises(IndexError):
        frame_of(0, mu)
    with pytest.raises(IndexError):
        frame_of(6, mu)


def test_orbit_of_pure_add():
    orbit = orbit_of(T("2,1", "a1·a2·a2·a3·a3"), P("2,2,1"))
    assert orbit.size == 4
    assert str(orbit.representative) == "a1·a2·a2·a3·a3"
    texts = {str(m) for m in orbit.members}
    assert texts == {
        "a1·a2·a2·a3·a3",
        "a1·a2·a3·a2·a3",
        "a2·a1·a2·a3·a3",
        "a2·a1·a3·a2·a3",
    }


def test_orbit_of_wrong_length():
    with pytest.raises(ValueError):
        orbit_of(T("2,1", "a1·a2"), P("2,2,1"))


def test_orbit_of_one_row():
    orbit = orbit_of(T("4", "r1·d1·a1"), P("2,1"))
    assert orbit.size == 2  # r1·d1 swaps to d1·r1; position 2 is a boundary
    assert {str(m) for m in orbit.members} == {"r1·d1·a1", "d1·r1·a1"}


def test_semistandard_failure():
    # with a single frame every position is interior, and a2·a1·a2 does
    # not admit the swap at position 2
    orbit = orbit_of(T("2,1", "a1·a2·a2"), P("3"))
    assert orbit.size == 2
    assert not is_semistandard(orbit)
    assert enumerate_sstd(P("2,1"), P("3,3"), 3, P("3")) == []


def test_orbits_partition_std0():
    cases = [
        (P("2,1"), P("3,3,2"), 5, P("2,2,1")),
        (P("4"), P("4"), 3, P("2,1")),
        (P("3"), P("2"), 3, P("1,1,1")),
    ]
    for lam, nu, s, mu in cases:
        orbits = enumerate_orbits(lam, nu, s, mu)
        members = [m for o in orbits for m in o.members]
        assert len(members) == len(set(members))
        assert set(members) == set(enumerate_std0(lam, nu, s))


def test_sstd_subset_of_orbits():
    lam, nu, s, mu = P("2,1"), P("3,3,2"), 5, P("2,2,1")
    sstd = enumerate_sstd(lam, nu, s, mu)
    assert len(sstd) == 4
    every = enumerate_orbits(lam, nu, s, mu)
    assert set(sstd) <= set(every)
    assert all(is_semistandard(o) for o in sstd)


def test_sstd_empty_case():
    assert enumerate_sstd(P(""), P("2,1"), 3, P("3")) == []


def test_sstd_weight_size_mismatch():
    with pytest.raises(ValueError):
        enumerate_sstd(P("2,1"), P("3,3,2"), 5, P("2,1"))


def test_to_classical():
    orbit = orbit_of(T("2,1", "a1·a2·a2·a3·a3"), P("2,2,1"))
    assert to_classical(orbit) == [
        [None, None, 1],
        [None, 1, 2],
        [2, 3],
    ]


def test_to_classical_rejects_one_row():
    orbit = orbit_of(T("4", "r1·d1·a1"), P("2,1"))
    with pytest.raises(NotMaximalDepth):
        to_classical(orbit)
