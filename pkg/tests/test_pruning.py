import random

import pytest

from segmax import (
    EMPTY,
    CollectionKind,
    ShapeKind,
    SizeGuardError,
    cons,
    fork,
    is_pruning_of,
    leaf,
    list_term,
    nil,
    parse_pruned,
    parse_term,
    print_pruned,
    prune,
    prune_count,
    pruned_fold,
    segs_count,
    segs_generic,
)
from segmax.lawcheck import ALGEBRAS, gen_term, gen_term_capped
from segmax.oracles import prune_recursive, prune_via_fold
from segmax.pruning import segs_generic_literal
from segmax.shapes import Node

EX7 = parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind.HTREE)
EX7_PRUNINGS = [
    "E",
    "(fork 1 E E)",
    "(fork 1 E (fork 3 E E))",
    "(fork 1 E (fork 3 E (leaf 4)))",
    "(fork 1 E (fork 3 (leaf 1) E))",
    "(fork 1 E (fork 3 (leaf 1) (leaf 4)))",
    "(fork 1 (leaf 2) E)",
    "(fork 1 (leaf 2) (fork 3 E E))",
    "(fork 1 (leaf 2) (fork 3 E (leaf 4)))",
    "(fork 1 (leaf 2) (fork 3 (leaf 1) E))",
    "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))",
]

sum_alg = ALGEBRAS["sum"]


def test_leaf_prunes_to_two():
    c = prune(leaf(9))
    assert [print_pruned(p) for p in c.items] == ["E", "(leaf 9)"]


def test_ex7_pruning_fixture():
    c = prune(EX7)
    assert len(c.items) == 11
    assert [print_pruned(p) for p in c.items] == EX7_PRUNINGS
    sub = fork(3, leaf(1), leaf(4))
    assert len(prune(sub).items) == 5


def test_list_prunings_count_n_plus_two():
    for n in range(6):
        t = list_term(range(n))
        c = prune(t)
        assert len(c.items) == n + 2 == prune_count(t)


def test_count_recurrences_per_shape():
    rng = random.Random(13)
    for shape in ShapeKind:
        for _ in range(200):
            t = gen_term_capped(rng, shape, prune_count, 20_000)
            c = prune(t)
            assert len(c.items) == prune_count(t)
            # recurrence spelled out: childless nodes count 2, otherwise
            # 1 + product over children
            def by_hand(u):
                if not u.children:
                    return 2
                acc = 1
                for ch in u.children:
                    acc *= by_hand(ch)
                return 1 + acc

            assert prune_count(t) == by_hand(t)


def test_prune_matches_literal_fold_and_recurrence_oracles():
    rng = random.Random(14)
    for shape in ShapeKind:
        for _ in range(100):
            t = gen_term_capped(rng, shape, prune_count, 500, max_depth=4)
            for kind in CollectionKind:
                got = prune(t, kind)
                assert got == prune_via_fold(t, kind)
                assert got == prune_recursive(t, kind)


def test_bag_and_set_prune_counts_agree_even_with_duplicate_labels():
    # prunings of a single term are pairwise distinct (each empty marker
    # sits at a distinct position), so set never loses elements
    witness = fork(1, leaf(2), leaf(2))
    assert len(prune(witness, CollectionKind.SET).items) == len(
        prune(witness, CollectionKind.BAG).items
    )
    rng = random.Random(15)
    for _ in range(200):
        t = gen_term_capped(rng, ShapeKind.HTREE, prune_count, 2000,
                            max_depth=4, lo=0, hi=1)
        assert len(prune(t, CollectionKind.SET).items) == len(
            prune(t, CollectionKind.BAG).items
        )


def test_segs_multiplicity_depends_on_kind():
    # shared prunings of repeated subterms collapse in the set monad
    t = list_term([1, 1])
    bag_n = len(segs_generic(t, CollectionKind.BAG).items)
    set_n = len(segs_generic(t, CollectionKind.SET).items)
    assert bag_n == segs_count(t) == 9
    assert set_n < bag_n


def test_every_pruning_is_positional_subobject():
    rng = random.Random(16)
    for shape in ShapeKind:
        for _ in range(100):
            t = gen_term_capped(rng, shape, prune_count, 300, max_depth=4)
            for p in prune(t).items:
                assert is_pruning_of(p, t)
    assert not is_pruning_of(leaf(1), leaf(2))
    assert not is_pruning_of(
        parse_pruned("(fork 1 E E)", ShapeKind.HTREE), fork(2, leaf(1), leaf(1))
    )


def test_pruned_roundtrip():
    rng = random.Random(17)
    for shape in ShapeKind:
        for _ in range(100):
            t = gen_term_capped(rng, shape, prune_count, 300, max_depth=4)
            for p in prune(t).items:
                assert parse_pruned(print_pruned(p), shape) == p


def test_pruned_fold_fixtures():
    assert pruned_fold(0, sum_alg, EMPTY) == 0
    full = parse_pruned("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind.HTREE)
    assert pruned_fold(0, sum_alg, full) == 11
    part = parse_pruned("(fork 1 (leaf 2) E)", ShapeKind.HTREE)
    assert pruned_fold(0, sum_alg, part) == 3


def test_size_guard():
    t = gen_term(random.Random(18), ShapeKind.HTREE, max_depth=6, stop_p=0.0)
    with pytest.raises(SizeGuardError) as exc:
        prune(t, guard=5)
    assert exc.value.guard == 5 and exc.value.size > 5
    with pytest.raises(SizeGuardError):
        segs_generic(t, guard=5)


def test_segs_fixtures():
    c = segs_generic(leaf(4))
    assert [print_pruned(p) for p in c.items] == ["E", "(leaf 4)"]
    assert len(segs_generic(EX7).items) == 22 == segs_count(EX7)


def test_segs_literal_composition_agrees():
    rng = random.Random(19)
    for shape in ShapeKind:
        for _ in range(60):
            t = gen_term_capped(rng, shape, segs_count, 400, max_depth=4)
            for kind in CollectionKind:
                assert segs_generic(t, kind) == segs_generic_literal(t, kind)


def test_list_segs_values_cover_classical_segment_sums():
    from segmax.horner import segs_list

    rng = random.Random(20)
    for _ in range(100):
        xs = [rng.randint(-6, 6) for _ in range(rng.randint(0, 6))]
        t = list_term(xs)
        vals = {
            pruned_fold(0, sum_alg, p) for p in segs_generic(t).items
        }
        classic = {sum(seg) for seg in segs_list(xs)}
        assert classic <= vals
