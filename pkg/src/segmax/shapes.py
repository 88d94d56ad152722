"""The closed family of term shapes and their s-expression syntax.

Four constructor vocabularies are supported, one per shape kind:

    list   term := "nil" | "(" "cons" int term ")"
    etree  term := "(" "tip" int ")" | "(" "bin" term term ")"
    itree  term := "nilt" | "(" "node" int term term ")"
    htree  term := "(" "leaf" int ")" | "(" "fork" int term term ")"

A Node is one constructor application: a tag, integer label slots, and
ordered child slots.  The child slots are deliberately untyped -- the
same Node class carries subterms (making a Term), intermediate fold
results, collections, or (carrier, subterm) pairs, depending on which
operation is walking the structure.  The left-to-right order of label
and child slots is significant: it defines the element positions used
by contents and by the distributors.

Terms are immutable values (NamedTuples all the way down), so they are
safe to share freely, including across threads.
"""

from __future__ import annotations

import re
from enum import Enum
from typing import Any, Callable, Iterator, NamedTuple

from .errors import ShapeMismatchError, TermSyntaxError
from .ints import check_i64


class ShapeKind(Enum):
    LIST = "list"
    ETREE = "etree"
    ITREE = "itree"
    HTREE = "htree"


class CtorSig(NamedTuple):
    n_labels: int
    n_children: int
    atom: bool  # printed bare, without parentheses


SIGNATURES: dict[ShapeKind, dict[str, CtorSig]] = {
    ShapeKind.LIST: {"nil": CtorSig(0, 0, True), "cons": CtorSig(1, 1, False)},
    ShapeKind.ETREE: {"tip": CtorSig(1, 0, False), "bin": CtorSig(0, 2, False)},
    ShapeKind.ITREE: {"nilt": CtorSig(0, 0, True), "node": CtorSig(1, 2, False)},
    ShapeKind.HTREE: {"leaf": CtorSig(1, 0, False), "fork": CtorSig(1, 2, False)},
}


class Node(NamedTuple):
    shape: ShapeKind
    tag: str
    labels: tuple
    children: tuple

    # structural equality, iteratively: list-shaped terms nest as deep
    # as they are long, which would blow the interpreter's recursion
    # limit under the default tuple comparison
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            a_node = isinstance(a, Node)
            if a_node != isinstance(b, Node):
                return False
            if not a_node:
                if a != b:  # non-term payloads in child slots
                    return False
                continue
            if (
                a.shape is not b.shape
                or a.tag != b.tag
                or a.labels != b.labels
                or len(a.children) != len(b.children)
            ):
                return False
            stack.extend(zip(a.children, b.children))
        return True

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = tuple.__hash__


# A Term is a Node whose child slots hold Terms of the same shape.
Term = Node


class _EmptyMark:
    """The extra 'empty structure' constructor of the pruned grammar."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _EmptyMark()


def make_node(shape: ShapeKind, tag: str, labels: tuple, children: tuple) -> Node:
    """Build a Node, checking the tag and both arities against the shape."""
    sig = SIGNATURES[shape].get(tag)
    if sig is None:
        raise ShapeMismatchError(f"shape {shape.value} has no constructor '{tag}'")
    if len(labels) != sig.n_labels:
        raise ShapeMismatchError(
            f"'{tag}' takes {sig.n_labels} label(s), got {len(labels)}"
        )
    if len(children) != sig.n_children:
        raise ShapeMismatchError(
            f"'{tag}' takes {sig.n_children} child(ren), got {len(children)}"
        )
    return Node(shape, tag, tuple(labels), tuple(children))


def _label(v: Any) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise ShapeMismatchError(f"label must be an integer, got {v!r}")
    return check_i64(v, "label")


def _child(c: Any, shape: ShapeKind) -> Node:
    if not isinstance(c, Node) or c.shape is not shape:
        raise ShapeMismatchError(f"child must be a {shape.value} term, got {c!r}")
    return c


def nil() -> Term:
    return Node(ShapeKind.LIST, "nil", (), ())


def cons(x: int, tail: Term) -> Term:
    return Node(ShapeKind.LIST, "cons", (_label(x),), (_child(tail, ShapeKind.LIST),))


def tip(x: int) -> Term:
    return Node(ShapeKind.ETREE, "tip", (_label(x),), ())


def bin_(left: Term, right: Term) -> Term:
    return Node(
        ShapeKind.ETREE,
        "bin",
        (),
        (_child(left, ShapeKind.ETREE), _child(right, ShapeKind.ETREE)),
    )


def nilt() -> Term:
    return Node(ShapeKind.ITREE, "nilt", (), ())


def inode(x: int, left: Term, right: Term) -> Term:
    return Node(
        ShapeKind.ITREE,
        "node",
        (_label(x),),
        (_child(left, ShapeKind.ITREE), _child(right, ShapeKind.ITREE)),
    )


def leaf(x: int) -> Term:
    return Node(ShapeKind.HTREE, "leaf", (_label(x),), ())


def fork(x: int, left: Term, right: Term) -> Term:
    return Node(
        ShapeKind.HTREE,
        "fork",
        (_label(x),),
        (_child(left, ShapeKind.HTREE), _child(right, ShapeKind.HTREE)),
    )


def list_term(xs) -> Term:
    """Build a list-shaped term from a Python iterable of labels."""
    t = nil()
    for x in reversed(list(xs)):
        t = cons(x, t)
    return t


def bimap_node(label_fn: Callable, child_fn: Callable, n: Node) -> Node:
    """Apply label_fn to every label slot and child_fn to every child slot.

    Tag and arities are preserved; this is the functorial action on one
    constructor layer.
    """
    return Node(
        n.shape,
        n.tag,
        tuple(label_fn(l) for l in n.labels),
        tuple(child_fn(c) for c in n.children),
    )


# ---------------------------------------------------------------------------
# serialization

_INT_RE = re.compile(r"-?\d+")
_SYM_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")


def _tokenize(text: str) -> list[tuple[str, Any, int]]:
    toks: list[tuple[str, Any, int]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()":
            toks.append((c, c, i))
            i += 1
            continue
        m = _INT_RE.match(text, i)
        if m:
            v = int(m.group())
            try:
                check_i64(v, "label")
            except OverflowError:
                raise TermSyntaxError("integer label outside 64-bit range", i) from None
            toks.append(("int", v, i))
            i = m.end()
            continue
        m = _SYM_RE.match(text, i)
        if m:
            toks.append(("sym", m.group(), i))
            i = m.end()
            continue
        raise TermSyntaxError(f"unexpected character {c!r}", i)
    return toks


def _parse(text: str, shape: ShapeKind, allow_empty: bool):
    sigs = SIGNATURES[shape]
    toks = _tokenize(text)
    n = len(toks)
    i = 0
    frames: list[list] = []  # [tag, labels, children, wanted]
    result = None

    while result is None:
        if i >= n:
            raise TermSyntaxError("unexpected end of input", len(text))
        kind, val, off = toks[i]
        i += 1
        node: Any = None
        if kind == "int":
            raise TermSyntaxError("integer found where a term was expected", off)
        elif kind == ")":
            raise TermSyntaxError("unexpected ')'", off)
        elif kind == "sym":
            if allow_empty and val == "E":
                node = EMPTY
            else:
                sig = sigs.get(val)
                if sig is None:
                    raise TermSyntaxError(
                        f"unknown constructor '{val}' for shape {shape.value}", off
                    )
                if not sig.atom:
                    raise TermSyntaxError(
                        f"constructor '{val}' takes arguments and needs parentheses",
                        off,
                    )
                node = Node(shape, val, (), ())
        else:  # "("
            if i >= n:
                raise TermSyntaxError("missing constructor after '('", len(text))
            kk, tag, o2 = toks[i]
            i += 1
            if kk != "sym" or tag not in sigs:
                raise TermSyntaxError("expected a constructor name after '('", o2)
            sig = sigs[tag]
            if sig.atom:
                raise TermSyntaxError(f"atom '{tag}' cannot take parentheses", o2)
            labels = []
            for _ in range(sig.n_labels):
                if i >= n:
                    raise TermSyntaxError("missing integer label", len(text))
                kk, lv, o3 = toks[i]
                i += 1
                if kk != "int":
                    raise TermSyntaxError("expected an integer label", o3)
                labels.append(lv)
            frames.append([tag, tuple(labels), [], sig.n_children])

        # Attach a completed node, then close every frame that is full
        # (each close consumes one ')').
        while True:
            if node is not None:
                if frames:
                    frames[-1][2].append(node)
                    node = None
                else:
                    result = node
                    break
            if frames and len(frames[-1][2]) == frames[-1][3]:
                if i >= n:
                    raise TermSyntaxError("missing ')'", len(text))
                kk, _, oo = toks[i]
                i += 1
                if kk != ")":
                    raise TermSyntaxError("expected ')'", oo)
                tag, labels, kids, _ = frames.pop()
                node = Node(shape, tag, labels, tuple(kids))
            elif node is None:
                break

    if i < n:
        raise TermSyntaxError("unexpected trailing input", toks[i][2])
    return result


def parse_term(text: str, shape: ShapeKind) -> Term:
    """Parse a term in the shape's s-expression grammar.

    Raises TermSyntaxError (with a byte offset) on malformed input, an
    unknown constructor, or an arity mismatch.
    """
    return _parse(text, shape, allow_empty=False)


def parse_pruned(text: str, shape: ShapeKind):
    """Parse the pruned grammar: the term grammar plus the atom 'E'."""
    return _parse(text, shape, allow_empty=True)


def _emit(t) -> str:
    out: list[str] = []
    stack: list[Any] = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            out.append(x)
            continue
        if isinstance(x, _EmptyMark):
            out.append("E")
            continue
        sig = SIGNATURES[x.shape][x.tag]
        if sig.atom:
            out.append(x.tag)
            continue
        out.append("(")
        out.append(x.tag)
        for l in x.labels:
            out.append(str(l))
        stack.append(")")
        for c in reversed(x.children):
            stack.append(c)
    buf: list[str] = []
    prev: str | None = None
    for tok in out:
        if tok == ")" or prev is None or prev == "(":
            buf.append(tok)
        else:
            buf.append(" " + tok)
        prev = tok
    return "".join(buf)


def print_term(t: Term) -> str:
    """Canonical s-expression for a term; injective per shape, and
    parse_term(print_term(t), t.shape) == t."""
    if isinstance(t, _EmptyMark):
        raise ShapeMismatchError("empty marker is not a plain term")
    return _emit(t)


def print_pruned(p) -> str:
    """Canonical s-expression in the pruned grammar ('E' for empty)."""
    return _emit(p)


# ---------------------------------------------------------------------------
# canonical order and measurements

def struct_key(x) -> tuple:
    """Total-order key for terms and pruned terms.

    Lexicographic over the preorder token sequence: the empty marker
    sorts before any node; nodes compare by tag, then labels
    (numerically), then children left to right.
    """
    if not isinstance(x, Node):
        return (0,)
    stack: list[tuple[Any, bool]] = [(x, False)]
    vals: list[tuple] = []
    while stack:
        y, done = stack.pop()
        if not isinstance(y, Node):
            vals.append((0,))
            continue
        if done:
            k = len(y.children)
            kids = tuple(vals[len(vals) - k :])
            del vals[len(vals) - k :]
            vals.append((1, y.tag, y.labels, kids))
        else:
            stack.append((y, True))
            for c in reversed(y.children):
                stack.append((c, False))
    return vals[0]


def iter_nodes(t: Term) -> Iterator[Node]:
    """Preorder iterator over all nodes (empty markers are skipped)."""
    stack = [t]
    while stack:
        x = stack.pop()
        if not isinstance(x, Node):
            continue
        yield x
        for c in reversed(x.children):
            stack.append(c)


def term_size(t: Term) -> int:
    """Number of nodes."""
    return sum(1 for _ in iter_nodes(t))


def term_depth(t: Term) -> int:
    """Length of the longest root-to-leaf node chain."""
    best = 0
    stack = [(t, 1)]
    while stack:
        x, d = stack.pop()
        if not isinstance(x, Node):
            continue
        if d > best:
            best = d
        for c in x.children:
            stack.append((c, d + 1))
    return best
