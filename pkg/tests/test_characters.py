import itertools
import math

import pytest
from hypothesis import given, strategies as st

from stablekron.characters import (
    SizeMismatch,
    centralizer_order,
    character,
    kostka,
    kronecker,
    load_character_cache,
    lr_coefficient,
    min_padding,
    padded_kronecker,
    partitions_of,
    partitions_up_to,
    save_character_cache,
    stable_kronecker_oracle,
    standard_count,
)
from stablekron.partitions import Partition, parse_partition


def P(text):
    return parse_partition(text)


def test_partitions_of():
    fives = list(partitions_of(5))
    assert len(fives) == 7
    assert fives[0] == (5,) and fives[-1] == (1, 1, 1, 1, 1)
    assert fives == sorted(fives, reverse=True)
    assert list(partitions_of(0)) == [()]


def test_partitions_up_to():
    shapes = partitions_up_to(4)
    assert len(shapes) == 1 + 1 + 2 + 3 + 5
    assert all(isinstance(p, Partition) for p in shapes)


def test_centralizer_order():
    assert centralizer_order((3, 1, 1)) == 6
    assert centralizer_order(()) == 1
    for n in range(1, 9):
        assert sum(
            math.factorial(n) // centralizer_order(rho) for rho in partitions_of(n)
        ) == math.factorial(n)


def test_character_trivial_and_sign():
    for rho in partitions_of(6):
        assert character(P("6"), rho) == 1
        sign = (-1) ** sum(k - 1 for k in rho)
        assert character(P("1,1,1,1,1,1"), rho) == sign


def test_character_small_table():
    assert character(P("2,1"), (1, 1, 1)) == 2
    assert character(P("2,1"), (2, 1)) == 0
    assert character(P("2,1"), (3,)) == -1
    assert character(P("3,2"), (1, 1, 1, 1, 1)) == 5


def test_character_size_mismatch():
    with pytest.raises(SizeMismatch):
        character(P("2,1"), (2, 2))


def test_character_row_orthogonality():
    for n in range(1, 7):
        shapes = [Partition(p) for p in partitions_of(n)]
        for a, b in itertools.combinations_with_replacement(shapes, 2):
            inner = sum(
                character(a, rho)
                * character(b, rho)
                * (math.factorial(n) // centralizer_order(rho))
                for rho in partitions_of(n)
            )
            assert inner == (math.factorial(n) if a == b else 0)


def test_character_degree_is_hook_count():
    for n in range(1, 8):
        for p in partitions_of(n):
            lam = Partition(p)
            assert character(lam, (1,) * n) == standard_count(lam)


def test_kronecker_known_values():
    assert kronecker(P("2,1"), P("2,1"), P("2,1")) == 1
    assert kronecker(P("1,1"), P("1,1"), P("2")) == 1
    assert kronecker(P("1,1"), P("1,1"), P("1,1")) == 0
    # one factor trivial: reduces to the inner product delta
    for p in partitions_of(4):
        for q in partitions_of(4):
            want = 1 if p == q else 0
            assert kronecker(P("4"), Partition(p), Partition(q)) == want


def test_kronecker_symmetric():
    shapes = [Partition(p) for p in partitions_of(4)]
    for a, b, c in itertools.combinations(shapes, 3):
        base = kronecker(a, b, c)
        for x, y, z in itertools.permutations((a, b, c)):
            assert kronecker(x, y, z) == base


def test_kronecker_size_mismatch():
    with pytest.raises(SizeMismatch):
        kronecker(P("2,1"), P("2,1"), P("2"))


def test_min_padding_and_padded():
    assert min_padding(P("2,1"), P("3"), P("1")) == 6
    assert padded_kronecker(P(""), P(""), P(""), 3) == 1
    assert padded_kronecker(P("1"), P("1"), P("1"), 4) == 1


def test_stable_oracle_small_values():
    assert stable_kronecker_oracle(P(""), P(""), P("")) == 1
    assert stable_kronecker_oracle(P("1"), P("1"), P("1")) == 1
    assert stable_kronecker_oracle(P("1"), P("1"), P("")) == 1
    assert stable_kronecker_oracle(P("2"), P("2"), P("2")) == 2
    assert stable_kronecker_oracle(P("2"), P("1"), P("1")) == 1


def test_stable_oracle_survives_early_plateau():
    # the padded sequence here is 0, 1, 1, 2, 2, ...: two equal values
    # appear before the true limit, so naive early stopping returns 1
    assert stable_kronecker_oracle(P("4"), P("4"), P("3")) == 2


def test_lr_known_values():
    assert lr_coefficient(P("2,1"), P("2,1"), P("3,2,1")) == 2
    assert lr_coefficient(P("2,1"), P(""), P("2,1")) == 1
    assert lr_coefficient(P("2,1"), P("2"), P("2,2")) == 0  # sizes differ
    assert lr_coefficient(P("2,2"), P("1"), P("3,1")) == 0  # not contained


def test_lr_pieri_rule():
    # multiplying by a one-row shape adds a horizontal strip
    from stablekron.partitions import SkewPair, contains, horizontal_strip

    for nu_parts in partitions_of(5):
        nu = Partition(nu_parts)
        for lam_parts in partitions_of(3):
            lam = Partition(lam_parts)
            want = int(
                contains(lam, nu) and horizontal_strip(SkewPair(nu, lam))
            )
            assert lr_coefficient(lam, P("2"), nu) == want


def test_kostka_values():
    assert kostka(P("2,1"), (1, 1, 1)) == 2
    assert kostka(P("2,1"), (2, 1)) == 1
    assert kostka(P("3"), (1, 1, 1)) == 1
    assert kostka(P("1,1"), (2,)) == 0
    assert kostka(P(""), ()) == 1
    with pytest.raises(SizeMismatch):
        kostka(P("2,1"), (2, 2))


@given(st.permutations([2, 1, 1]))
def test_kostka_content_permutation_invariant(content):
    assert kostka(P("2,1,1"), tuple(content)) == kostka(P("2,1,1"), (2, 1, 1))


def test_kostka_sum_is_standard_count():
    # content (1,...,1) gives standard tableaux
    for p in partitions_of(5):
        lam = Partition(p)
        assert kostka(lam, (1,) * 5) == standard_count(lam)


def test_standard_count():
    assert standard_count(P("")) == 1
    assert standard_count(P("2,1")) == 2
    assert standard_count(P("3,2")) == 5
    for n in range(1, 7):
        assert sum(
            standard_count(Partition(p)) ** 2 for p in partitions_of(n)
        ) == math.factorial(n)


def test_character_cache_roundtrip(tmp_path):
    character(P("3,2"), (2, 2, 1))  # populate some entries
    path = tmp_path / "characters.cache"
    save_character_cache(str(path))
    assert path.read_text().strip()
    loaded = load_character_cache(str(path))
    assert loaded > 0
    lines = path.read_text().splitlines()
    assert lines == sorted(lines)
    assert all(line.count("|") == 2 for line in lines)
