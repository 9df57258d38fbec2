import itertools
import random

import pytest

from hyperforge import congruence, factory
from hyperforge.axioms import check_mn_semihyperring
from hyperforge.congruence import (EquivRelation, bell, check_double_quotient_iso,
                                   check_mixed_congruence, check_translation_lemma,
                                   enumerate_congruences, is_congruence, is_strongly_regular,
                                   natural_map, quotient, relation_quotient, set_partitions,
                                   subsets_related)
from hyperforge.core import members
from hyperforge.errors import DomainError, EmptySubsetError, PreconditionError, ResourceError
from hyperforge.morphisms import find_isomorphism, is_homomorphism

import oracles
from helpers import pair_product, structure, subset, total

PARITY = EquivRelation((0, 1, 0, 1))


def parity_pure():
    """f outputs {x+y, x+y+2} mod 4, so every output set has one parity."""
    return structure(4, 2, 2, lambda x, y: ((x + y) % 4, (x + y + 2) % 4),
                     lambda x, y: x * y % 4)


def test_relation_normalization():
    assert EquivRelation((1, 0, 1)).class_of == (0, 1, 0)
    assert EquivRelation((2, 2, 0, 1)).to_json() == [0, 0, 1, 2]
    with pytest.raises(DomainError):
        EquivRelation((0, 2))
    with pytest.raises(DomainError):
        EquivRelation(())


def test_relation_helpers():
    assert PARITY.classes() == [subset(0, 2), subset(1, 3)]
    assert PARITY.related(1, 3) and not PARITY.related(0, 1)
    assert PARITY.image(subset(0, 2)) == 1
    assert EquivRelation.identity(4).refines(PARITY)
    assert PARITY.refines(EquivRelation.universal(4))
    assert not PARITY.refines(EquivRelation.identity(4))


def test_subsets_related_examples():
    ident = EquivRelation.identity(3)
    assert subsets_related(ident, subset(0, 2), subset(0, 2))
    assert subsets_related(EquivRelation.universal(3), subset(0), subset(1, 2))
    assert not subsets_related(ident, subset(0), subset(1))
    with pytest.raises(EmptySubsetError):
        subsets_related(ident, 0, subset(1))


def test_subsets_related_matches_quantifier_form():
    for cls in oracles.set_partitions(4):
        rel = EquivRelation(tuple(cls))
        for A in range(1, 16):
            for B in range(1, 16):
                want = oracles.related_sets(cls, members(A), members(B))
                assert subsets_related(rel, A, B) == want


def test_congruence_examples():
    Z4 = pair_product(4)
    assert is_congruence(Z4, EquivRelation.identity(4)).holds
    assert is_congruence(Z4, EquivRelation.universal(4)).holds
    assert is_congruence(Z4, PARITY).holds
    assert check_translation_lemma(Z4, PARITY).holds
    assert check_mixed_congruence(Z4, PARITY).holds


def test_non_congruence_witness():
    Z4 = pair_product(4)
    rel = EquivRelation((0, 0, 1, 1))
    verdict = is_congruence(Z4, rel)
    assert not verdict.holds and verdict.witness is not None
    assert not oracles.congruence(Z4, rel.class_of)


def small_structures():
    rng = random.Random(5)
    out = []
    for seed in range(90):
        k, m, n = rng.randint(1, 3), rng.randint(2, 3), rng.randint(2, 3)
        out.append(factory.random_structure(seed, k, m, n, density=rng.choice([1 / 4, 1 / 2])))
    # structured cases have many more congruences than random tables
    out += [S for _, S in factory.corpus(max_k=3, random_count=0)]
    return out


def test_per_slot_sweep_matches_full_tuple_oracle():
    congruent = 0
    for S in small_structures():
        for cls in oracles.set_partitions(S.k):
            got = is_congruence(S, EquivRelation(tuple(cls))).holds
            assert got == oracles.congruence(S, cls)
            congruent += got
    assert congruent > 100


def test_strongly_regular_matches_oracle():
    for S in small_structures():
        for cls in oracles.set_partitions(S.k):
            rel = EquivRelation(tuple(cls))
            assert is_strongly_regular(S, rel) == oracles.strongly_regular(S, cls)


def test_strongly_regular_examples():
    Z4 = pair_product(4)
    assert is_strongly_regular(Z4, EquivRelation.universal(4))
    assert not is_strongly_regular(Z4, EquivRelation.identity(4))
    assert not is_strongly_regular(Z4, PARITY)
    S = parity_pure()
    assert is_congruence(S, PARITY).holds and is_strongly_regular(S, PARITY)


def test_quotient_examples():
    Z4 = pair_product(4)
    one = quotient(Z4, EquivRelation.universal(4))
    assert one.k == 1
    copy = quotient(Z4, EquivRelation.identity(4))
    assert copy == Z4
    Q = quotient(Z4, PARITY)
    assert Q.k == 2 and Q.f.table == (1, 3, 3, 2) and Q.g.table == (0, 0, 0, 1)


def test_strongly_regular_quotient_is_semihyperring():
    crisp_or = structure(2, 2, 2, lambda x, y: (max(x, y),), lambda x, y: min(x, y))
    S = factory.fibered(crisp_or)
    halves = EquivRelation((0, 0, 1, 1))
    assert check_mn_semihyperring(S).holds and is_strongly_regular(S, halves)
    Q = quotient(S, halves)
    assert Q == crisp_or and check_mn_semihyperring(Q).holds
    # parity_pure is strongly regular but not distributive, so no claim there
    assert not check_mn_semihyperring(parity_pure()).holds


def test_quotient_requires_congruence():
    with pytest.raises(PreconditionError):
        quotient(pair_product(4), EquivRelation((0, 0, 1, 1)))
    with pytest.raises(DomainError):
        quotient(pair_product(4), EquivRelation((0, 1, 0)))


def test_natural_map_examples():
    Z4 = pair_product(4)
    ident = natural_map(Z4, EquivRelation.identity(4))
    assert ident.is_bijective()
    const = natural_map(Z4, EquivRelation.universal(4))
    assert const.image == (0, 0, 0, 0) and const.target.k == 1
    par = natural_map(Z4, PARITY)
    assert par.image == (0, 1, 0, 1) and is_homomorphism(par)


def test_relation_quotient_examples():
    Z4 = pair_product(4)
    assert relation_quotient(PARITY, PARITY, Z4) == EquivRelation.identity(2)
    universal = EquivRelation.universal(4)
    outer = relation_quotient(universal, PARITY, Z4)
    assert outer == EquivRelation.universal(2)
    assert is_congruence(quotient(Z4, PARITY), outer).holds
    with pytest.raises(DomainError):
        relation_quotient(EquivRelation.identity(4), PARITY, Z4)
    with pytest.raises(PreconditionError):
        relation_quotient(universal, EquivRelation((0, 0, 1, 1)), Z4)


def test_double_quotient_examples():
    Z4 = pair_product(4)
    universal = EquivRelation.universal(4)
    assert check_double_quotient_iso(Z4, PARITY, PARITY)
    assert check_double_quotient_iso(Z4, universal, PARITY)
    ident = EquivRelation.identity(4)
    assert check_double_quotient_iso(Z4, PARITY, ident)
    outer = quotient(quotient(Z4, ident), relation_quotient(PARITY, ident, Z4))
    assert find_isomorphism(outer, quotient(Z4, PARITY)) is not None


def test_bell_and_partitions():
    assert [bell(k) for k in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]
    for k in range(1, 7):
        parts = list(set_partitions(k))
        assert len(parts) == bell(k) == len(set(parts))
        assert sorted(parts) == sorted(tuple(p) for p in oracles.set_partitions(k))


def test_enumerate_examples():
    assert [r.class_of for r in enumerate_congruences(total(1))] == [(0,)]
    two = enumerate_congruences(pair_product(2))
    assert EquivRelation.identity(2) in two and EquivRelation.universal(2) in two
    assert PARITY in enumerate_congruences(pair_product(4))
    with pytest.raises(ResourceError):
        enumerate_congruences(pair_product(5), cap=10)


def test_enumerate_parallel_matches_serial():
    S = factory.b_construction(4, 2)
    assert enumerate_congruences(S, jobs=2) == enumerate_congruences(S)


def test_identity_and_universal_always_congruences(corpus):
    for name, S in corpus:
        assert is_congruence(S, EquivRelation.identity(S.k)).holds, name
        assert is_congruence(S, EquivRelation.universal(S.k)).holds, name


def test_congruence_theorems_on_corpus(small_corpus):
    for name, S in small_corpus:
        congs = enumerate_congruences(S)
        for rel in congs:
            assert check_translation_lemma(S, rel).holds, name
            assert check_mixed_congruence(S, rel).holds, name
            nat = natural_map(S, rel)
            assert is_homomorphism(nat) and set(nat.image) == set(range(rel.count))
            if is_strongly_regular(S, rel) and check_mn_semihyperring(S).holds:
                assert check_mn_semihyperring(quotient(S, rel)).holds, name


def test_quotient_is_independent_of_representatives():
    for S in small_structures():
        for rel in enumerate_congruences(S):
            Q = quotient(S, rel)
            for t in itertools.product(range(S.k), repeat=S.m):
                classes = {rel.class_of[z] for z in oracles.f_set(S, t)}
                assert oracles.f_set(Q, tuple(rel.class_of[x] for x in t)) == classes


def test_translation_lemma_rejects_non_congruence():
    S = pair_product(4)
    rel = EquivRelation((0, 0, 1, 1))
    assert not check_translation_lemma(S, rel).holds or not check_mixed_congruence(S, rel).holds
    assert congruence.bell(4) == 15
