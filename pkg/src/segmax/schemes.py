"""Recursion schemes over terms.

An algebra is a total function from a Node whose child slots hold
carrier values to a carrier value; fold is the unique homomorphism it
induces:

    fold alg t  =  alg (node with every child replaced by its fold)

para is the variant whose step also sees the original child subterms,
and unfold_bounded is the dual construction with an explicit depth
guard (seeds may expand only down to the bound).  contents and the
distributors are the positional traversals the generic developments
build on: every constructor exposes a fixed left-to-right sequence of
element positions (labels first, then children).

All traversals here are iterative, so deeply right-nested terms (long
list-shaped chains) do not hit the interpreter recursion limit.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable

from .errors import DepthExceededError, KindMismatchError
from .monads import Collection, CollectionKind, collection
from .shapes import Node, Term, _label, iter_nodes

Algebra = Callable[[Node], Any]
Coalgebra = Callable[[Any], Node]


def fold(alg: Algebra, t: Term):
    """Catamorphism: bottom-up replacement of every node by alg's value."""
    stack: list[tuple[Node, bool]] = [(t, False)]
    vals: list = []
    while stack:
        node, ready = stack.pop()
        if ready:
            k = len(node.children)
            kids = tuple(vals[len(vals) - k :])
            del vals[len(vals) - k :]
            vals.append(alg(Node(node.shape, node.tag, node.labels, kids)))
        else:
            stack.append((node, True))
            for c in reversed(node.children):
                stack.append((c, False))
    return vals[0]


def para(palg: Callable[[Node], Any], t: Term):
    """Paramorphism: like fold, but each child slot holds the pair
    (recursive result, original child subterm)."""
    stack: list[tuple[Node, bool]] = [(t, False)]
    vals: list = []
    while stack:
        node, ready = stack.pop()
        if ready:
            k = len(node.children)
            rec = vals[len(vals) - k :]
            del vals[len(vals) - k :]
            kids = tuple(zip(rec, node.children))
            vals.append(palg(Node(node.shape, node.tag, node.labels, kids)))
        else:
            stack.append((node, True))
            for c in reversed(node.children):
                stack.append((c, False))
    return vals[0]


def unfold_bounded(coalg: Coalgebra, seed, max_depth: int) -> Term:
    """Anamorphism with a depth guard.

    Seeds are expanded layer by layer; a child seed that would have to be
    expanded below max_depth raises DepthExceededError instead.  A
    coalgebra that stops (emits a childless node) succeeds at any bound.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    shell = coalg(seed)
    stack: list[list] = [[shell, 0, [], 0]]  # node, next child, built, depth
    while True:
        frame = stack[-1]
        node, idx, built, depth = frame
        if idx == len(node.children):
            stack.pop()
            done = Node(node.shape, node.tag, node.labels, tuple(built))
            if not stack:
                return done
            stack[-1][2].append(done)
            stack[-1][1] += 1
        else:
            if depth + 1 > max_depth:
                raise DepthExceededError(max_depth)
            stack.append([coalg(node.children[idx]), 0, [], depth + 1])


def contents_node(n: Node) -> list:
    """Element positions of one constructor layer, left to right: label
    slots first, then child slots (the diagonal instance, so both must
    hold the same carrier)."""
    return list(n.labels) + list(n.children)


def contents_term(t: Term) -> list:
    """All labels of a term, in preorder."""
    return [l for nd in iter_nodes(t) for l in nd.labels]


def map_term(g: Callable[[int], int], t: Term) -> Term:
    """Relabel a term, as the fold of the relabelling algebra."""
    return fold(
        lambda n: Node(n.shape, n.tag, tuple(_label(g(l)) for l in n.labels), n.children),
        t,
    )


def _expect_collections(cols, kind: CollectionKind):
    for c in cols:
        if not isinstance(c, Collection) or c.kind is not kind:
            raise KindMismatchError(f"expected a {kind.value} collection, got {c!r}")


def distribute_node(n: Node, kind: CollectionKind) -> Collection:
    """Distribute the constructor over collections in its child slots:
    one node per choice of a single element from each child collection,
    enumerated in lexicographic positional order.  A node with no child
    positions yields the singleton of itself."""
    _expect_collections(n.children, kind)
    combos = itertools.product(*[c.items for c in n.children])
    return collection(
        kind, (Node(n.shape, n.tag, n.labels, picked) for picked in combos)
    )


def bidist_node(n: Node, kind: CollectionKind) -> Collection:
    """Distribute over every element position (labels and children)."""
    cols = contents_node(n)
    _expect_collections(cols, kind)
    k = len(n.labels)
    combos = itertools.product(*[c.items for c in cols])
    return collection(
        kind,
        (Node(n.shape, n.tag, vals[:k], vals[k:]) for vals in combos),
    )
