"""Semirings and segment-sum algorithms, from the list originals to the
shape-generic pipeline.

The classical chain on integer lists:

    mss_spec       maximum . map sum . segs            (cubic)
    mss_quadratic  maximum . map (maximum . map sum . inits) . tails
    mss_linear     maximum . scanr step 0              (linear)
                   where  step u z = 0 `max` (u + z)

The step in mss_linear is one instance of Horner's rule: over any
semiring (add, mul),

    add_reduce . map (mul_fold) . inits  =  foldr step mul_unit
        where  step u z = mul_unit `add` (u `mul` z)

Generically, the "product" of one constructor layer folds its contents
with mul from a seed b, and the Horner fold adds b at every node:

    horner_alg n   =  b `add` foldr mul b (contents n)
    horner_generic =  fold horner_alg

which equals reducing the products of all prunings, and summing it over
every subterm (one scan) equals reducing over all generic segments.
"""

from __future__ import annotations

from itertools import accumulate, islice
from typing import Callable, NamedTuple

from .errors import CarrierError, DistributivityError
from .ints import I64_MAX, I64_MIN, check_i64, checked_add, checked_mul
from .labelled import preorder_values, scan_generic
from .monads import (
    MAX_REDUCE,
    MIN_REDUCE,
    OR_REDUCE,
    SUM_REDUCE,
    CollectionKind,
    ReduceOp,
    collection,
    reduce,
)
from .pruning import DEFAULT_GUARD, _segs_items, prune, pruned_fold
from .schemes import Algebra, contents_node, contents_term, fold
from .shapes import Term


class Semiring(NamedTuple):
    """Carrier descriptor: add with unit add_unit, mul with unit
    mul_unit, mul distributing over add.  add_idempotent records whether
    a `add` a == a, which decides set-monad compatibility.  carrier_ok
    guards the usable data range (sentinels and the boolean carrier)."""

    name: str
    add: Callable[[int, int], int]
    add_unit: int
    mul: Callable[[int, int], int]
    mul_unit: int
    add_idempotent: bool
    reduce_op: ReduceOp
    carrier_ok: Callable[[int], bool]


MAX_PLUS = Semiring(
    "max-plus", max, I64_MIN, checked_add, 0, True, MAX_REDUCE,
    lambda v: v > I64_MIN,
)
MIN_PLUS = Semiring(
    "min-plus", min, I64_MAX, checked_add, 0, True, MIN_REDUCE,
    lambda v: v < I64_MAX,
)
PLUS_TIMES = Semiring(
    "plus-times", checked_add, 0, checked_mul, 1, False, SUM_REDUCE,
    lambda v: True,
)
BOOL_OR_AND = Semiring(
    "bool-or-and", lambda a, b: a | b, 0, lambda a, b: a & b, 1, True, OR_REDUCE,
    lambda v: v in (0, 1),
)

SEMIRINGS = {s.name: s for s in (MAX_PLUS, MIN_PLUS, PLUS_TIMES, BOOL_OR_AND)}


def check_semiring(s: Semiring, samples) -> None:
    """Sampled semiring laws: associativity of both operators, units,
    and two-sided distributivity of mul over add."""
    xs = [v for v in samples if s.carrier_ok(v)]
    for a in xs:
        if s.add(s.add_unit, a) != a or s.add(a, s.add_unit) != a:
            raise CarrierError(f"{s.name}: add unit fails at {a}")
        if s.mul(s.mul_unit, a) != a or s.mul(a, s.mul_unit) != a:
            raise CarrierError(f"{s.name}: mul unit fails at {a}")
    for a in xs:
        for b in xs:
            for c in xs:
                if s.add(s.add(a, b), c) != s.add(a, s.add(b, c)):
                    raise CarrierError(f"{s.name}: add not associative")
                if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)):
                    raise CarrierError(f"{s.name}: mul not associative")
                if s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)):
                    raise CarrierError(f"{s.name}: left distributivity fails")
                if s.mul(s.add(b, c), a) != s.add(s.mul(b, a), s.mul(c, a)):
                    raise CarrierError(f"{s.name}: right distributivity fails")


def ensure_distributive(s: Semiring, kind: CollectionKind, force: bool = False) -> None:
    """Gate: set-valued reduction distributes over idempotent set union,
    so it requires an idempotent add.  force runs anyway (used to
    demonstrate the failure)."""
    if force:
        return
    if kind is CollectionKind.SET and not s.add_idempotent:
        raise DistributivityError(
            f"semiring '{s.name}' has a non-idempotent add; "
            "its reduction is not well-defined on sets (use --force to run anyway)"
        )


# ---------------------------------------------------------------------------
# list folds and the classical chain

def foldr_list(step: Callable, e, xs: list):
    """foldr: h [] = e, h (x:rest) = step x (h rest)."""
    acc = e
    for x in reversed(xs):
        acc = step(x, acc)
    return acc


def scanr_list(step: Callable, e, xs: list) -> list:
    """Folds of every tail; length is len(xs) + 1 and the head is the
    fold of the whole list."""
    out = [e]
    acc = e
    for x in reversed(xs):
        acc = step(x, acc)
        out.append(acc)
    out.reverse()
    return out


def tails_list(xs: list) -> list[list]:
    out = [[]]
    for x in reversed(xs):
        out.append([x] + out[-1])
    out.reverse()
    return out


def inits_list(xs: list) -> list[list]:
    out: list[list] = [[]]
    for x in reversed(xs):
        out = [[]] + [[x] + ys for ys in out]
    return out


def segs_list(xs: list) -> list[list]:
    """All contiguous segments: concat . map inits . tails."""
    return [seg for tail in tails_list(xs) for seg in inits_list(tail)]


def mss_spec(xs: list) -> int:
    """Maximum segment sum, straight from the definition
    maximum . map sum . segs.  Cubic time; segments are streamed rather
    than materialised so memory stays linear."""
    best = 0  # the empty segment
    n = len(xs)
    # when no segment sum can leave the 64-bit range, skip per-segment checks;
    # islice keeps the inner loop allocation-free
    safe = n == 0 or max(abs(x) for x in xs) * n <= I64_MAX
    for i in range(n):
        if safe:
            for j in range(i + 1, n + 1):
                s = sum(islice(xs, i, j))
                if s > best:
                    best = s
        else:
            for j in range(i + 1, n + 1):
                s = check_i64(sum(islice(xs, i, j)), "segment sum")
                if s > best:
                    best = s
    return best


def mss_quadratic(xs: list) -> int:
    """maximum . map (maximum . map sum . inits) . tails: the inner
    composition is the maximum running prefix sum of each tail."""
    best = 0
    n = len(xs)
    for i in range(n + 1):
        m = max(accumulate(xs[i:], initial=0))
        check_i64(m, "prefix sum")
        if m > best:
            best = m
    return best


def _mss_step(u: int, z: int) -> int:
    s = checked_add(u, z)
    return s if s > 0 else 0


def max_prefix_sum(xs: list) -> int:
    """maximum . map sum . inits, as the single fold
    foldr step 0 where step u z = 0 `max` (u + z)."""
    return foldr_list(_mss_step, 0, xs)


def mss_linear(xs: list) -> int:
    """Maximum segment sum in linear time: the fold above, scanned over
    every tail, then maximised."""
    return max(scanr_list(_mss_step, 0, xs))


def horner_list(s: Semiring, xs: list):
    """add-reduction of the mul-products of all prefixes, as one fold:
    foldr step mul_unit where step u z = mul_unit `add` (u `mul` z)."""
    return foldr_list(lambda u, z: s.add(s.mul_unit, s.mul(u, z)), s.mul_unit, xs)


def poly_horner(coeffs: list, x: int) -> int:
    """Evaluate sum(coeffs[i] * x**i) by nested multiplication."""
    acc = 0
    for a in reversed(coeffs):
        acc = checked_add(a, checked_mul(x, acc))
    return acc


# ---------------------------------------------------------------------------
# the generic pipeline

def generic_product_alg(s: Semiring, b) -> Algebra:
    """The layer 'product': fold the constructor's contents with mul
    from seed b (so a contentless layer is worth b)."""
    def alg(n):
        return foldr_list(s.mul, b, contents_node(n))

    return alg


def horner_alg(s: Semiring, b) -> Algebra:
    """One Horner step: b `add` product-of-contents."""
    f = generic_product_alg(s, b)

    def alg(n):
        return s.add(b, f(n))

    return alg


def _check_carrier(s: Semiring, t: Term) -> None:
    for v in contents_term(t):
        if not s.carrier_ok(v):
            raise CarrierError(f"label {v} outside the carrier of '{s.name}'")


def horner_generic(s: Semiring, b, t: Term):
    """Fold the Horner step over the whole term.  Equals reducing the
    layer-products of every pruning of t (checked in the law suite)."""
    _check_carrier(s, t)
    return fold(horner_alg(s, b), t)


def horner_generic_brute(s: Semiring, b, t: Term,
                         kind: CollectionKind = CollectionKind.BAG,
                         guard: int | None = DEFAULT_GUARD):
    """The composition horner_generic fuses: reduce the pruned-term
    products over all prunings."""
    f = generic_product_alg(s, b)
    vals = collection(kind, (pruned_fold(b, f, p) for p in prune(t, kind, guard).items))
    return reduce(s.reduce_op, vals)


SCAN = "scan"
BRUTE = "brute"


def mss_generic(s: Semiring, b, t: Term, via: str = SCAN,
                kind: CollectionKind = CollectionKind.BAG,
                force: bool = False,
                guard: int | None = DEFAULT_GUARD):
    """Best segment value over all generic segments of t.

    The scan route reduces the contents of one Horner scan; the brute
    route reduces the pruned-term products over every generic segment.
    Both agree whenever the (semiring, kind) gate passes; the gate
    rejects set collections with a non-idempotent add unless forced.
    b defaults to the semiring's mul unit.
    """
    ensure_distributive(s, kind, force)
    _check_carrier(s, t)
    if b is None:
        b = s.mul_unit
    if via == SCAN:
        vals = preorder_values(scan_generic(horner_alg(s, b), t))
    elif via == BRUTE:
        f = generic_product_alg(s, b)
        vals = [pruned_fold(b, f, p) for p in _segs_items(t, guard)]
    else:
        raise ValueError(f"unknown route {via!r}")
    return reduce(s.reduce_op, collection(kind, vals), check=not force)
