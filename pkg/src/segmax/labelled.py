"""The labelled variant: every node carries exactly one value.

A Labelled pairs a value with a skeleton constructor whose label slots
have been erased -- only the tag and the (recursively labelled) children
remain.  The skeleton's tag sequence mirrors the source term, so a
labelled structure has exactly one value per source node.

subterms labels every node of a term with the subterm rooted there (the
generic counterpart of `tails`), and scan_generic labels every node with
the fold of that subterm, computed in a single pass:

    scan alg  =  map_labelled (fold alg) . subterms
"""

from __future__ import annotations

from typing import Any, Callable, Iterator, NamedTuple

from .schemes import Algebra, fold, para
from .shapes import Node, ShapeKind, Term


class Labelled(NamedTuple):
    value: Any
    shape: ShapeKind
    tag: str
    children: tuple


def root(l: Labelled):
    """The value at the root node."""
    return l.value


def iter_labelled(l: Labelled) -> Iterator[Labelled]:
    """Preorder iterator over all nodes of a labelled structure."""
    stack = [l]
    while stack:
        x = stack.pop()
        yield x
        for c in reversed(x.children):
            stack.append(c)


def preorder_values(l: Labelled) -> list:
    return [x.value for x in iter_labelled(l)]


def preorder_tags(l: Labelled) -> list[str]:
    return [x.tag for x in iter_labelled(l)]


def value_count(l: Labelled) -> int:
    return sum(1 for _ in iter_labelled(l))


def map_labelled(f: Callable, l: Labelled) -> Labelled:
    """Apply f to every value, keeping the skeleton."""
    stack: list[tuple[Labelled, bool]] = [(l, False)]
    vals: list[Labelled] = []
    while stack:
        x, ready = stack.pop()
        if ready:
            k = len(x.children)
            kids = tuple(vals[len(vals) - k :])
            del vals[len(vals) - k :]
            vals.append(Labelled(f(x.value), x.shape, x.tag, kids))
        else:
            stack.append((x, True))
            for c in reversed(x.children):
                stack.append((c, False))
    return vals[0]


def subterms(t: Term) -> Labelled:
    """Label every node with the subterm rooted there.

    Computed as a fold: the subterm at a node is reassembled from the
    root labels of the children's labelled structures.
    """

    def alg(n: Node) -> Labelled:
        here = Node(n.shape, n.tag, n.labels, tuple(c.value for c in n.children))
        return Labelled(here, n.shape, n.tag, n.children)

    return fold(alg, t)


def subterms_para(t: Term) -> Labelled:
    """subterms as a paramorphism: the original child subterms are handed
    to the step directly, so nothing has to be reassembled."""

    def palg(n: Node) -> Labelled:
        here = Node(n.shape, n.tag, n.labels, tuple(orig for _, orig in n.children))
        return Labelled(here, n.shape, n.tag, tuple(rec for rec, _ in n.children))

    return para(palg, t)


def scan_generic(alg: Algebra, t: Term) -> Labelled:
    """Label every node with the fold of the subterm rooted there,
    in one bottom-up pass."""

    def step(n: Node) -> Labelled:
        v = alg(Node(n.shape, n.tag, n.labels, tuple(c.value for c in n.children)))
        return Labelled(v, n.shape, n.tag, n.children)

    return fold(step, t)
