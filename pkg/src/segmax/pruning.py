"""Pruned terms and the nondeterministic pruning map.

A pruned term is a term in which any subterm may be replaced by the
empty marker; prune(t) is the collection of all such replacements (the
generic counterpart of `inits`).  For each node,

    prune (in n)  =  <EMPTY>  `union`  <in n' | n' one pruning per child>

so a childless node always has exactly two prunings and a node with
children has 1 + the product of its children's pruning counts.  The
total count grows multiplicatively with depth, so enumeration is fenced
by a configurable element guard.

The default collection kind for consumers is the bag: multiplicity is
meaningful for sum-like reductions, and bag union is not idempotent, so
no distributivity requirement is silently strengthened.

Enumeration order is deterministic, and independent subterm prunings
may safely be computed in parallel as long as results are recombined
through the kind's canonical union.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .errors import SizeGuardError
from .labelled import preorder_values, subterms
from .monads import Collection, CollectionKind, collection, join_c, map_c
from .schemes import Algebra, fold
from .shapes import EMPTY, Node, Term, parse_pruned, print_pruned  # noqa: F401

DEFAULT_GUARD = 10**6


def prune_count(t: Term) -> int:
    """Number of prunings, by the recurrence 1 + product over children
    (so 2 for every childless node).  Cheap: no enumeration."""
    def alg(n: Node) -> int:
        c = 1
        for v in n.children:
            c *= v
        return 1 + c

    return fold(alg, t)


def _check_guard(size: int, guard: int | None) -> None:
    if guard is not None and size > guard:
        raise SizeGuardError(size, guard)


def _prune_items(t: Term) -> list:
    """All prunings, empty marker first, children in lexicographic
    positional order.  Substructure is shared between prunings."""
    def alg(n: Node) -> list:
        out: list = [EMPTY]
        for picked in itertools.product(*n.children):
            out.append(Node(n.shape, n.tag, n.labels, picked))
        return out

    return fold(alg, t)


def prune(t: Term, kind: CollectionKind = CollectionKind.BAG,
          guard: int | None = DEFAULT_GUARD) -> Collection:
    """The collection of all prunings of t."""
    _check_guard(prune_count(t), guard)
    return collection(kind, _prune_items(t))


def pruned_fold(b, alg: Algebra, p) -> object:
    """Fold a pruned term: the empty marker is worth b, and every real
    node is evaluated by alg over its recursively evaluated children."""
    stack: list[tuple[object, bool]] = [(p, False)]
    vals: list = []
    while stack:
        node, ready = stack.pop()
        if not isinstance(node, Node):
            vals.append(b)
        elif ready:
            k = len(node.children)
            kids = tuple(vals[len(vals) - k :])
            del vals[len(vals) - k :]
            vals.append(alg(Node(node.shape, node.tag, node.labels, kids)))
        else:
            stack.append((node, True))
            for c in reversed(node.children):
                stack.append((c, False))
    return vals[0]


def _segs_counts(t: Term) -> list[int]:
    return [prune_count(s) for s in preorder_values(subterms(t))]


def segs_count(t: Term) -> int:
    """Number of generic segments: total prunings over all subterms."""
    return sum(_segs_counts(t))


def _segs_items(t: Term, guard: int | None) -> list:
    _check_guard(segs_count(t), guard)
    items: list = []
    for s in preorder_values(subterms(t)):
        items.extend(_prune_items(s))
    return items


def segs_generic(t: Term, kind: CollectionKind = CollectionKind.BAG,
                 guard: int | None = DEFAULT_GUARD) -> Collection:
    """All generic segments of t: prune every subterm and union the
    results,

        segs = join . map prune . contents . subterms
    """
    return collection(kind, _segs_items(t, guard))


def segs_generic_literal(t: Term, kind: CollectionKind = CollectionKind.BAG,
                         guard: int | None = DEFAULT_GUARD) -> Collection:
    """The same composition spelled with the collection combinators;
    kept as a cross-check for the fused enumeration above."""
    _check_guard(segs_count(t), guard)
    subs = collection(kind, preorder_values(subterms(t)))
    return join_c(map_c(lambda s: prune(s, kind, guard), subs))


def is_pruning_of(p, t: Term) -> bool:
    """Positional containment: p equals t except that some subterms are
    replaced by the empty marker."""
    stack = [(p, t)]
    while stack:
        x, y = stack.pop()
        if not isinstance(x, Node):
            continue
        if (x.tag, x.labels) != (y.tag, y.labels):
            return False
        stack.extend(zip(x.children, y.children))
    return True


def map_pruned(f: Callable, c: Collection) -> Collection:
    return map_c(f, c)
