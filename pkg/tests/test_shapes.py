import itertools
import random

import pytest
from hypothesis import given

from conftest import any_term, terms
from segmax import (
    EMPTY,
    Node,
    ShapeKind,
    ShapeMismatchError,
    TermSyntaxError,
    bimap_node,
    cons,
    fork,
    leaf,
    list_term,
    make_node,
    nil,
    parse_pruned,
    parse_term,
    print_pruned,
    print_term,
    term_depth,
    term_size,
    tip,
)
from segmax.lawcheck import gen_term
from segmax.shapes import SIGNATURES, struct_key

EX7 = "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))"


def test_builders_and_print_fixtures():
    assert print_term(nil()) == "nil"
    assert print_term(list_term([4, -5])) == "(cons 4 (cons -5 nil))"
    t = fork(1, leaf(2), fork(3, leaf(1), leaf(4)))
    assert print_term(t) == EX7


def test_parse_fixtures():
    t = parse_term(EX7, ShapeKind.HTREE)
    assert t == fork(1, leaf(2), fork(3, leaf(1), leaf(4)))
    assert parse_term("nil", ShapeKind.LIST) == nil()
    assert parse_term("(cons 4 (cons -5 nil))", ShapeKind.LIST) == list_term([4, -5])


@pytest.mark.parametrize(
    "text,shape",
    [
        ("(cons 4", ShapeKind.LIST),          # missing ')'
        ("(cons 4 nil) nil", ShapeKind.LIST),  # trailing input
        ("(snoc 4 nil)", ShapeKind.LIST),      # unknown constructor
        ("(cons nil nil)", ShapeKind.LIST),    # label must be an integer
        ("(cons 4 )", ShapeKind.LIST),         # missing child
        ("cons", ShapeKind.LIST),              # composite without parens
        ("(nil)", ShapeKind.LIST),             # atom with parens
        ("(leaf 2)", ShapeKind.LIST),          # wrong shape vocabulary
        ("E", ShapeKind.HTREE),                # empty marker in plain grammar
        ("(cons 99999999999999999999 nil)", ShapeKind.LIST),  # label too wide
        ("", ShapeKind.LIST),
        ("@", ShapeKind.LIST),
    ],
)
def test_parse_errors(text, shape):
    with pytest.raises(TermSyntaxError) as exc:
        parse_term(text, shape)
    assert exc.value.offset >= 0


def test_parse_error_offset_points_at_fault():
    with pytest.raises(TermSyntaxError) as exc:
        parse_term("(cons 1 @)", ShapeKind.LIST)
    assert exc.value.offset == 8


def test_pruned_grammar_accepts_empty_marker():
    p = parse_pruned("(fork 1 E (leaf 2))", ShapeKind.HTREE)
    assert p.children[0] is EMPTY
    assert print_pruned(p) == "(fork 1 E (leaf 2))"
    assert print_pruned(EMPTY) == "E"


def test_bimap_fixtures():
    ident = lambda v: v
    t = nil()
    c = cons(4, t)
    assert bimap_node(ident, ident, c) == c
    f = fork(3, leaf(1), leaf(2))
    bumped = bimap_node(lambda l: l + 1, ident, f)
    assert bumped.labels == (4,) and bumped.children == f.children
    assert bimap_node(ident, lambda _: None, nil()) == nil()


def _small_nodes():
    for shape, sigs in SIGNATURES.items():
        for tag, sig in sigs.items():
            slots = sig.n_labels + sig.n_children
            for vals in itertools.product(range(-2, 3), repeat=slots):
                yield Node(shape, tag, vals[: sig.n_labels], vals[sig.n_labels :])


def test_functor_laws_exhaustive_on_all_constructors():
    ident = lambda v: v
    f1, f2 = (lambda v: v + 1), (lambda v: 2 * v)
    g1, g2 = (lambda v: v - 3), (lambda v: -v)
    for n in _small_nodes():
        assert bimap_node(ident, ident, n) == n
        lhs = bimap_node(lambda v: f1(f2(v)), lambda v: g1(g2(v)), n)
        rhs = bimap_node(f1, g1, bimap_node(f2, g2, n))
        assert lhs == rhs


def test_make_node_validates():
    with pytest.raises(ShapeMismatchError):
        make_node(ShapeKind.LIST, "fork", (1,), ())
    with pytest.raises(ShapeMismatchError):
        make_node(ShapeKind.LIST, "cons", (), (nil(),))
    with pytest.raises(ShapeMismatchError):
        make_node(ShapeKind.HTREE, "leaf", (1,), (leaf(2),))


def test_builders_reject_foreign_children_and_bad_labels():
    with pytest.raises(ShapeMismatchError):
        cons(1, leaf(2))
    with pytest.raises(ShapeMismatchError):
        cons("x", nil())
    with pytest.raises(OverflowError):
        tip(1 << 63)


@given(any_term)
def test_roundtrip_hypothesis(t):
    assert parse_term(print_term(t), t.shape) == t


def test_roundtrip_seeded_thousand_per_shape():
    rng = random.Random(7)
    for shape in ShapeKind:
        for _ in range(1000):
            t = gen_term(rng, shape, max_depth=6)
            assert parse_term(print_term(t), shape) == t


def test_print_injective_on_random_terms():
    rng = random.Random(11)
    for shape in ShapeKind:
        seen: dict[str, object] = {}
        for _ in range(500):
            t = gen_term(rng, shape, max_depth=5)
            s = print_term(t)
            assert seen.setdefault(s, t) == t


def test_struct_key_orders_empty_first_and_totally():
    items = [EMPTY, leaf(2), fork(1, leaf(2), leaf(3)), leaf(-1)]
    ordered = sorted(items, key=struct_key)
    assert ordered[0] is EMPTY
    assert sorted(items, key=struct_key) == sorted(reversed(items), key=struct_key)


@given(terms(ShapeKind.LIST))
def test_size_and_depth_agree_on_lists(t):
    # a list-shaped term is a chain: size equals depth
    assert term_size(t) == term_depth(t)


def test_size_depth_fixtures():
    t = parse_term(EX7, ShapeKind.HTREE)
    assert term_size(t) == 5
    assert term_depth(t) == 3


def test_deep_chain_no_recursion_limit():
    t = list_term(range(50_000))
    assert term_size(t) == 50_001
    assert parse_term(print_term(t), ShapeKind.LIST) == t
