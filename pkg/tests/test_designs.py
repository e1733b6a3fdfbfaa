import random
from itertools import combinations
from math import comb

import pytest

from typeii.catalog import build
from typeii.designs import (
    DesignSet,
    default_cbar_sample,
    doublecount_check,
    is_t_design,
    is_t_half_design,
    predesign_count,
    sphere,
    zonal_design_residual,
)
from typeii.gf2 import Word


@pytest.fixture(scope="module")
def octads():
    return build("golay24").shell(8)


@pytest.fixture(scope="module")
def dodecads():
    return build("golay24").shell(12)


# ------------------------------------------------------------ predesign tally

def test_octads_steiner_counts(octads):
    # Steiner system S(5,8,24); each N_t is pinned by the pair-counting
    # identity N_t = C(8,t) * 759 / C(24,t), evaluated independently here
    assert len(octads) == 759
    expected = {t: comb(8, t) * 759 // comb(24, t) for t in range(1, 6)}
    assert expected == {1: 253, 2: 77, 3: 21, 4: 5, 5: 1}
    for t, n_t in expected.items():
        assert predesign_count(octads, t) == n_t
        assert doublecount_check(octads, t)


def test_octads_fail_at_six(octads):
    assert predesign_count(octads, 6) is None
    assert not is_t_design(octads, 6)
    assert not doublecount_check(octads, 6)


def test_octads_are_five_design(octads):
    assert is_t_design(octads, 5)


def test_full_sphere_counts():
    n, w = 8, 3
    b_w = sphere(n, w)
    for t in range(0, w + 1):
        assert predesign_count(b_w, t) == comb(n - t, w - t)
        assert doublecount_check(b_w, t)
    assert is_t_design(b_w, w)


def test_empty_design():
    empty = DesignSet(8, 3, ())
    assert predesign_count(empty, 2) == 0
    assert is_t_design(empty, 3)
    assert doublecount_check(empty, 2)


def test_proper_subset_fails_at_w():
    # for t >= w the only t-designs in B_w are the sphere and the empty set
    d = DesignSet(4, 2, (Word.from_string("1100"),))
    assert not is_t_design(d, 2)


def test_predesign_constant_implies_design_on_structured_sets(octads):
    # two code paths agree: constant tally at t (w >= t) forces all t' <= t
    for dset in (sphere(6, 3), DesignSet(6, 3, ()), octads):
        t = 3
        if predesign_count(dset, t) is not None:
            assert is_t_design(dset, t)


def test_equation_two_bruteforce_equivalence():
    # Span argument: functions of at most t coordinates are combinations of
    # subset indicators, so the averaging identity holds for all such f iff
    # it holds for every indicator of an I with |I| <= t.
    n, w, t = 6, 3, 2
    rng = random.Random(7)
    full = list(combinations(range(n), w))

    def indicator_identity(words: list[Word]) -> bool:
        d_size = len(words)
        for r in range(t + 1):
            for isub in combinations(range(n), r):
                mask = sum(1 << j for j in isub)
                lhs = comb(n, w) * sum(
                    1 for word in words if word.bits & mask == mask
                )
                rhs = d_size * comb(n - r, w - r)
                if lhs != rhs:
                    return False
        return True

    for _ in range(40):
        size = rng.randint(0, len(full))
        chosen = rng.sample(full, size)
        words = [Word.from_support(n, c) for c in chosen]
        dset = DesignSet(n, w, tuple(words))
        assert is_t_design(dset, t) == indicator_identity(words)


# ------------------------------------------------------------ zonal residuals

def test_octad_residuals_design_degrees(octads):
    cbars = [Word.from_support(24, range(8)), Word(24, 0b101010101010101)]
    for cbar in cbars:
        for deg in (1, 2, 3, 4, 5):
            assert zonal_design_residual(octads, deg, cbar) == 0


def test_octad_residual_degree_seven(octads):
    cbar = Word.from_support(24, range(9))
    assert zonal_design_residual(octads, 7, cbar) == 0


def test_octad_residual_degree_six_nonzero(octads):
    cbar = Word.from_support(24, range(8))
    assert zonal_design_residual(octads, 6, cbar) != 0


def test_full_sphere_residual_vanishes():
    b_w = sphere(8, 4)
    cbar = Word.from_support(8, range(3))
    for deg in (1, 2, 3):
        assert zonal_design_residual(b_w, deg, cbar) == 0


def test_residual_permutation_invariance(octads):
    rng = random.Random(11)
    perm = list(range(24))
    rng.shuffle(perm)

    def permute(word: Word) -> Word:
        return Word.from_support(24, [perm[j] for j in word.support()])

    cbar = Word.from_support(24, [0, 2, 4, 6, 8, 10, 12])
    moved = DesignSet(24, 8, tuple(sorted(permute(w) for w in octads)))
    assert zonal_design_residual(octads, 7, cbar) == \
        zonal_design_residual(moved, 7, permute(cbar))


# ------------------------------------------------------------ half designs

def test_octads_are_five_half_design(octads):
    sample = default_cbar_sample(24, 7, extra=8)
    assert is_t_half_design(octads, 5, sample)


def test_dodecads_are_five_half_design(dodecads):
    sample = [Word.from_support(24, range(7)), Word.from_support(24, range(1, 9))]
    assert is_t_half_design(dodecads, 5, sample)


def test_full_sphere_is_half_design():
    b_w = sphere(8, 4)
    assert is_t_half_design(b_w, 2, [Word.from_support(8, range(4))])


def test_default_sample_is_deterministic():
    a = default_cbar_sample(24, 7, extra=16)
    b = default_cbar_sample(24, 7, extra=16)
    assert a == b
    assert sum(1 for w in a if w.weight() == 1) == 24
    assert sum(1 for w in a if w.weight() == 7 and max(w.support()) < 12) \
        == comb(12, 7)
