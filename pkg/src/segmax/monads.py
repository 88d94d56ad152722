"""Finite collection monads: lists, bags, and sets.

A Collection is a kind tag plus a canonical tuple of elements:

    list  order- and multiplicity-significant, kept as given
    bag   sorted by the canonical element order (multiplicity kept)
    set   sorted and duplicate-free

Equality of collections is equality of canonical forms, which makes bag
and set equality order-independent and decidable.  union is associative
with empty as unit for every kind, commutative for bags and sets, and
idempotent for sets only -- the asymmetry that ultimately decides which
reductions each kind admits.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Any, Callable, Iterable, NamedTuple

from .errors import KindMismatchError, ReduceLawError
from .ints import I64_MAX, I64_MIN
from .shapes import Node, _EmptyMark, struct_key


class CollectionKind(Enum):
    LIST = "list"
    BAG = "bag"
    SET = "set"


class Collection(NamedTuple):
    kind: CollectionKind
    items: tuple


def canonical_key(x) -> tuple:
    """Total-order key over every element type collections may hold."""
    if isinstance(x, (Node, _EmptyMark)):
        return (2, struct_key(x))
    if isinstance(x, Collection):
        return (3, x.kind.value, tuple(canonical_key(e) for e in x.items))
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, tuple):
        return (1, tuple(canonical_key(e) for e in x))
    if isinstance(x, str):
        return (4, x)
    raise TypeError(f"no canonical order for {type(x).__name__}")


def collection(kind: CollectionKind, items: Iterable) -> Collection:
    """Build a collection in canonical form."""
    tup = tuple(items)
    if kind is CollectionKind.LIST:
        return Collection(kind, tup)
    ordered = sorted(tup, key=canonical_key)
    if kind is CollectionKind.BAG:
        return Collection(kind, tuple(ordered))
    out: list = []
    for e in ordered:
        if not out or e != out[-1]:
            out.append(e)
    return Collection(kind, tuple(out))


def empty(kind: CollectionKind) -> Collection:
    return Collection(kind, ())


def singleton(kind: CollectionKind, a) -> Collection:
    return Collection(kind, (a,))


def _same_kind(x: Collection, y: Collection) -> CollectionKind:
    if x.kind is not y.kind:
        raise KindMismatchError(f"cannot combine {x.kind.value} with {y.kind.value}")
    return x.kind


def union(x: Collection, y: Collection) -> Collection:
    kind = _same_kind(x, y)
    return collection(kind, x.items + y.items)


def map_c(f: Callable, x: Collection) -> Collection:
    return collection(x.kind, (f(e) for e in x.items))


def join_c(xx: Collection) -> Collection:
    """Flatten a collection of collections (all of the outer kind)."""
    items: list = []
    for inner in xx.items:
        if not isinstance(inner, Collection) or inner.kind is not xx.kind:
            raise KindMismatchError("join needs inner collections of the same kind")
        items.extend(inner.items)
    return collection(xx.kind, items)


def opt(a, x: Collection) -> Collection:
    """Add one more alternative:  opt a x = singleton a `union` x."""
    return union(singleton(x.kind, a), x)


def cp(x: Collection, y: Collection) -> Collection:
    """All pairs, by the monadic definition
    cp (x, y) = join (map (\\a -> map (\\b -> (a, b)) y) x)."""
    _same_kind(x, y)
    return join_c(map_c(lambda a: map_c(lambda b: (a, b), y), x))


def dist_list(mbs, kind: CollectionKind) -> Collection:
    """Distribute a sequence of collections into a collection of tuples,
    one element drawn per position:

        dist []       = singleton ()
        dist (mb:mbs) = map cons (cp (mb, dist mbs))
    """
    acc = singleton(kind, ())
    for mb in reversed(list(mbs)):
        if not isinstance(mb, Collection) or mb.kind is not kind:
            raise KindMismatchError(f"dist_list needs {kind.value} collections")
        acc = map_c(lambda ab: (ab[0],) + ab[1], cp(mb, acc))
    return acc


def zero_axiom_holds(x: Collection) -> bool:
    """Optional extra axiom: mapping everything to empty then joining
    yields empty.  Checked on demand, never assumed."""
    return join_c(map_c(lambda _a: empty(x.kind), x)) == empty(x.kind)


# ---------------------------------------------------------------------------
# reductions

class ReduceOp(NamedTuple):
    """A binary operator with unit, used as a collection reduction.

    For a reduction to be well-defined the operator must be associative
    (all kinds), commutative (bags and sets), and idempotent (sets).
    These are semantic preconditions; reduce() checks them by sampling
    and refuses to compute when a sample fails.  element_ok guards the
    operator's data domain (e.g. max over 64-bit words requires elements
    strictly above the bottom sentinel).
    """

    name: str
    fn: Callable[[Any, Any], Any]
    unit: Any
    element_ok: Callable | None = None


_LAWS_OK: set = set()
_SAMPLE_DOMAIN = (-3, -1, 0, 1, 2, 5)


def _check_reduce_laws(op: ReduceOp, kind: CollectionKind, elements: tuple, trials: int) -> None:
    key = (op, kind)
    if key in _LAWS_OK:
        return
    pool = [v for v in _SAMPLE_DOMAIN if op.element_ok is None or op.element_ok(v)]
    pool.extend(e for e in elements[:4] if isinstance(e, int) and e not in pool)
    seen = 0
    for a, b, c in itertools.product(pool, repeat=3):
        if seen >= trials:
            break
        seen += 1
        if op.fn(op.fn(a, b), c) != op.fn(a, op.fn(b, c)):
            raise ReduceLawError(f"'{op.name}' is not associative at ({a},{b},{c})")
    if kind in (CollectionKind.BAG, CollectionKind.SET):
        for a, b in itertools.islice(itertools.product(pool, repeat=2), trials):
            if op.fn(a, b) != op.fn(b, a):
                raise ReduceLawError(
                    f"'{op.name}' is not commutative at ({a},{b}); "
                    f"required for {kind.value} reductions"
                )
    if kind is CollectionKind.SET:
        for a in pool:
            if op.fn(a, a) != a:
                raise ReduceLawError(
                    f"'{op.name}' is not idempotent at {a}; "
                    "required for set reductions"
                )
    _LAWS_OK.add(key)


def reduce(op: ReduceOp, x: Collection, *, check: bool = True, trials: int = 64) -> Any:
    """Fold the collection with op, starting from its unit.

    reduce(empty) = unit, reduce(singleton a) = a, and
    reduce(x `union` y) = reduce(x) `op` reduce(y) whenever the sampled
    preconditions for x's kind hold.  check=False skips the precondition
    sampling (used deliberately to demonstrate what goes wrong).
    """
    if check:
        if op.element_ok is not None:
            for e in x.items:
                if not op.element_ok(e):
                    raise ReduceLawError(
                        f"element {e!r} outside the domain of '{op.name}'"
                    )
        _check_reduce_laws(op, x.kind, x.items, trials)
    acc = op.unit
    for e in x.items:
        acc = op.fn(acc, e)
    return acc


def _above_bottom(e) -> bool:
    return isinstance(e, int) and e > I64_MIN


def _below_top(e) -> bool:
    return isinstance(e, int) and e < I64_MAX


def _is_bit(e) -> bool:
    return e in (0, 1)


MAX_REDUCE = ReduceOp("max", max, I64_MIN, _above_bottom)
MIN_REDUCE = ReduceOp("min", min, I64_MAX, _below_top)


def _checked_plus(a: int, b: int) -> int:
    from .ints import checked_add

    return checked_add(a, b)


SUM_REDUCE = ReduceOp("sum", _checked_plus, 0)
OR_REDUCE = ReduceOp("or", lambda a, b: a | b, 0, _is_bit)


# ---------------------------------------------------------------------------
# textual form

_BRACKETS = {
    CollectionKind.LIST: ("[", "]"),
    CollectionKind.BAG: ("<", ">"),
    CollectionKind.SET: ("{", "}"),
}


def to_text(x: Collection, fmt: Callable[[Any], str] = str) -> str:
    open_b, close_b = _BRACKETS[x.kind]
    return open_b + ", ".join(fmt(e) for e in x.items) + close_b
