import itertools

import numpy as np
import pytest
from hypothesis import given

import oracles
from conftest import posets, shuffled_posets
from posetcut.core import is_antichain, is_downward_closed, is_upward_closed, poset_from_relations
from posetcut.errors import NotAPartition, TooLargeForOracle
from posetcut.generators import antichain, chain, enumerate_small_posets
from posetcut.maxcut import (
    Category,
    Cut,
    all_cut_sizes,
    brute_force_max_cut,
    classify,
    cut_size,
    local_search,
    make_cut,
    max_dicut,
    random_cut,
    single_move_gains,
    verify_half_bound,
)

V_POSET = poset_from_relations(3, [(0, 1), (0, 2)])


def test_classify_examples(chain4):
    cls = classify(chain4)
    assert list(zip(cls.up.tolist(), cls.down.tolist())) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert (cls.delta, cls.sigma, cls.lambda_) == ({0, 1}, {2, 3}, set())
    cls = classify(chain(3))
    assert (cls.delta, cls.lambda_, cls.sigma) == ({0}, {1}, {2})
    assert cls.categories == (Category.DEFICIT, Category.BALANCED, Category.SURPLUS)
    cls = classify(antichain(4))
    assert cls.lambda_ == {0, 1, 2, 3} and not cls.delta and not cls.sigma


def test_max_dicut_examples(chain4):
    c = max_dicut(chain4)
    assert (c.b, c.u, c.size) == ({0, 1}, {2, 3}, 4)
    assert c.size == oracles.max_cut_size(4, oracles.relations(chain4))
    assert max_dicut(antichain(5)).size == 0
    c = max_dicut(V_POSET)
    assert (c.b, c.u, c.size) == ({0}, {1, 2}, 2)


@pytest.mark.parametrize("n", [1, 2, 5, 10, 37, 100, 201])
def test_chain_quarter_square(n):
    assert max_dicut(chain(n)).size == n * n // 4


def test_cut_size_examples(chain4):
    assert cut_size(chain4, make_cut(chain4, {0, 1})) == 4
    assert cut_size(chain4, make_cut(chain4, set())) == 0
    assert cut_size(chain4, Cut(frozenset({1, 3}), frozenset({0, 2}), -1)) == 1


def test_not_a_partition(chain4):
    for b, u in [({0, 1}, {1, 2, 3}), ({0}, {1, 2}), ({0, 1, 2, 3}, {4})]:
        with pytest.raises(NotAPartition):
            cut_size(chain4, Cut(frozenset(b), frozenset(u), 0))
    with pytest.raises(NotAPartition):
        verify_half_bound(chain4, Cut(frozenset({0}), frozenset(), 0))


def test_brute_force_examples(chain4):
    assert brute_force_max_cut(chain4).size == 4 == 16 // 4
    assert brute_force_max_cut(antichain(3)).size == 0
    sizes = all_cut_sizes(chain(3))
    best = [mask for mask in range(8) if sizes[mask] == sizes.max()]
    assert sizes.max() == 2
    assert all(mask & 1 and not mask & 4 for mask in best)


def test_brute_force_tie_break():
    # antichain: every cut has size 0, smallest mask is the empty bottom side
    assert brute_force_max_cut(antichain(3)).b == frozenset()
    # 3-chain optima are {0} (mask 1) and {0,1} (mask 3)
    assert brute_force_max_cut(chain(3)).b == {0}


def test_brute_force_guard():
    with pytest.raises(TooLargeForOracle):
        brute_force_max_cut(chain(25))


@given(shuffled_posets(max_n=8))
def test_all_cut_sizes_matches_enumeration(p):
    ref = oracles.cut_sizes(p.n, oracles.relations(p))
    sizes = all_cut_sizes(p)
    for b, s in ref.items():
        assert sizes[sum(1 << v for v in b)] == s


def test_random_cut_golden(chain4):
    c = random_cut(chain4, 42)
    assert (sorted(c.b), sorted(c.u), c.size) == ([1], [0, 2, 3], 2)
    assert random_cut(chain4, 42) == c
    for seed in range(20):
        assert random_cut(antichain(6), seed).size == 0


def test_random_cut_mean_chain20():
    p = chain(20)
    mean = np.mean([random_cut(p, s).size for s in range(10_000)])
    assert abs(mean - p.m / 4) <= 0.05 * p.m / 4


def test_local_search_examples(chain4):
    assert local_search(chain4, make_cut(chain4, {2, 3})).size == 4
    best = max_dicut(chain4)
    assert local_search(chain4, best) == best
    assert local_search(chain(3), make_cut(chain(3), set())).size == 2


def test_verify_half_bound_examples(chain4):
    assert verify_half_bound(chain4, max_dicut(chain4))
    assert verify_half_bound(antichain(3), make_cut(antichain(3), {1}))
    assert not verify_half_bound(chain4, make_cut(chain4, {3}))


@given(shuffled_posets(max_n=10))
def test_max_dicut_optimal(p):
    c = max_dicut(p)
    assert c.size == brute_force_max_cut(p).size == oracles.max_cut_size(p.n, oracles.relations(p))
    assert verify_half_bound(p, c)
    assert is_downward_closed(p, c.b) and is_upward_closed(p, c.u)


@given(shuffled_posets())
def test_classification_structure(p):
    cls = classify(p)
    assert cls.delta | cls.sigma | cls.lambda_ == set(range(p.n))
    assert len(cls.delta) + len(cls.sigma) + len(cls.lambda_) == p.n
    assert is_antichain(p, cls.lambda_)
    for x, y in p.relations():
        if x in cls.sigma | cls.lambda_:
            assert y in cls.sigma
        if y in cls.delta | cls.lambda_:
            assert x in cls.delta


@given(shuffled_posets())
def test_balanced_placement_invariance(p):
    cls = classify(p)
    lam = sorted(cls.lambda_)
    sizes = set()
    for bits in itertools.product((0, 1), repeat=min(len(lam), 10)):
        b = set(cls.delta) | {v for v, s in zip(lam, bits) if s}
        sizes.add(make_cut(p, b).size)
    assert len(sizes) == 1


@given(shuffled_posets(max_n=9))
def test_every_optimum_separates_deficit_and_surplus(p):
    cls = classify(p)
    sizes = all_cut_sizes(p)
    dmask = sum(1 << v for v in cls.delta)
    smask = sum(1 << v for v in cls.sigma)
    for mask in np.flatnonzero(sizes == sizes.max()).tolist():
        assert mask & dmask == dmask and mask & smask == 0


@given(shuffled_posets(max_n=10))
def test_local_search_postconditions(p):
    start = random_cut(p, p.m)
    c = local_search(p, start)
    assert c.size >= start.size
    assert 3 * c.size >= p.m
    assert is_downward_closed(p, c.b) and is_upward_closed(p, c.u)
    bmask = p.mask(c.b)
    assert (single_move_gains(p, bmask) <= 0).all()
