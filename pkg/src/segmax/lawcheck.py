"""Executable law registry with seeded generators and shrinking.

Every equational claim the library rests on is registered here as a law
case: a deterministic input generator plus a violation check.  Laws are
expected either to HOLD (no violation in any trial) or to FAIL with a
witness (the checker must find a concrete counterexample).  Runs are
reproducible: each law draws from its own RNG stream derived from
(seed, law id), so reports are byte-stable and cases can run in any
order or in parallel without changing results.

Found counterexamples are shrunk structurally (terms to their children,
then label magnitudes toward zero; collections by dropping and shrinking
elements) and serialized so they can be replayed standalone.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Any, Callable

from . import oracles
from .errors import UnknownLawError
from .horner import (
    MAX_PLUS,
    PLUS_TIMES,
    SEMIRINGS,
    Semiring,
    generic_product_alg,
    horner_alg,
    horner_generic,
    horner_generic_brute,
    horner_list,
    inits_list,
    foldr_list,
    mss_generic,
    mss_linear,
    mss_quadratic,
    mss_spec,
)
from .labelled import map_labelled, scan_generic, subterms, subterms_para
from .monads import (
    MAX_REDUCE,
    MIN_REDUCE,
    SUM_REDUCE,
    Collection,
    CollectionKind,
    collection,
    cp,
    dist_list,
    empty,
    join_c,
    map_c,
    reduce,
    singleton,
    union,
)
from .pruning import prune, prune_count, segs_count
from .schemes import (
    bidist_node,
    contents_node,
    contents_term,
    distribute_node,
    fold,
    map_term,
)
from .shapes import (
    EMPTY,
    SIGNATURES,
    Node,
    ShapeKind,
    Term,
    _EmptyMark,
    bimap_node,
    parse_pruned,
    print_pruned,
)

HOLDS = "HOLDS"
FAILS = "FAILS_WITH_WITNESS"

ALL_SHAPES = tuple(ShapeKind)
ALL_KINDS = tuple(CollectionKind)

# (collection kind, semiring) pairs that pass the distributivity gate
# and are exercised by every distributivity-flavoured law.
GATED_PAIRS = (
    (CollectionKind.BAG, "max-plus"),
    (CollectionKind.BAG, "plus-times"),
    (CollectionKind.LIST, "max-plus"),
)


# ---------------------------------------------------------------------------
# named function families (so witnesses stay serializable)

def _sum_alg(n: Node) -> int:
    return sum(contents_node(n))


def _size_alg(n: Node) -> int:
    return 1 + sum(n.children)


def _depth_alg(n: Node) -> int:
    return 1 + max(n.children, default=0)


ALGEBRAS: dict[str, Callable[[Node], int]] = {
    "sum": _sum_alg,
    "size": _size_alg,
    "depth": _depth_alg,
    "maxplus-horner": horner_alg(MAX_PLUS, 0),
    "plustimes-horner": horner_alg(PLUS_TIMES, 1),
}

RELABELS: dict[str, Callable[[int], int]] = {
    "negate": lambda l: -l,
    "inc": lambda l: l + 1,
    "double": lambda l: 2 * l,
    "clamp0": lambda l: max(l, 0),
}

REDUCERS = {"max": MAX_REDUCE, "min": MIN_REDUCE, "sum": SUM_REDUCE}
# sum is not idempotent, so it is not a lawful set reduction
REDUCERS_FOR_KIND = {
    CollectionKind.LIST: ("max", "min", "sum"),
    CollectionKind.BAG: ("max", "min", "sum"),
    CollectionKind.SET: ("max", "min"),
}


class _FusionTriple:
    """A concrete (h, f, g) with h . f = g . F h, checked exhaustively."""

    def __init__(self, h, f, g):
        self.h, self.f, self.g = h, f, g


FUSION_TRIPLES: dict[str, _FusionTriple] = {
    "double-sum": _FusionTriple(
        lambda x: 2 * x,
        _sum_alg,
        lambda n: 2 * sum(n.labels) + sum(n.children),
    ),
    "shift3-sum": _FusionTriple(
        lambda x: x + 3,
        _sum_alg,
        lambda n: sum(n.labels) + sum(n.children) + 3 * (1 - len(n.children)),
    ),
    "double-size": _FusionTriple(
        lambda x: 2 * x,
        _size_alg,
        lambda n: 2 + sum(n.children),
    ),
}


def _fusion_side_condition() -> str | None:
    """Exhaustively verify h . f = g . F h over all constructors with
    labels and carrier values in a small domain."""
    dom = range(-2, 3)
    for name, tr in FUSION_TRIPLES.items():
        for shape, sigs in SIGNATURES.items():
            for tag, sig in sigs.items():
                slots = sig.n_labels + sig.n_children
                for vals in itertools.product(dom, repeat=slots):
                    n = Node(shape, tag, vals[: sig.n_labels], vals[sig.n_labels :])
                    if tr.h(tr.f(n)) != tr.g(bimap_node(lambda l: l, tr.h, n)):
                        return f"side condition broken for {name} at {n}"
    return None


# ---------------------------------------------------------------------------
# generators

def gen_term(rng: random.Random, shape: ShapeKind, max_depth: int = 6,
             lo: int = -8, hi: int = 8, stop_p: float = 0.3) -> Term:
    sigs = SIGNATURES[shape]
    stop = next(t for t, s in sigs.items() if s.n_children == 0)
    go_on = next(t for t, s in sigs.items() if s.n_children > 0)

    def build(depth: int) -> Term:
        tag = stop if depth >= max_depth or rng.random() < stop_p else go_on
        sig = sigs[tag]
        labels = tuple(rng.randint(lo, hi) for _ in range(sig.n_labels))
        children = tuple(build(depth + 1) for _ in range(sig.n_children))
        return Node(shape, tag, labels, children)

    return build(0)


def gen_term_capped(rng: random.Random, shape: ShapeKind, count_fn,
                    cap: int, max_depth: int = 5, lo: int = -8,
                    hi: int = 8) -> Term:
    """Random term whose count_fn (pruning or segment count) stays under
    cap; retries shallower until it fits."""
    depth = max_depth
    for _ in range(40):
        t = gen_term(rng, shape, depth, lo, hi)
        if count_fn(t) <= cap:
            return t
        depth = max(1, depth - 1)
    return gen_term(rng, shape, 1, lo, hi)


def gen_ints(rng: random.Random, max_len: int, lo: int, hi: int,
             min_len: int = 0) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(rng.randint(min_len, max_len))]


def gen_coll(rng: random.Random, kind: CollectionKind, max_size: int = 5,
             lo: int = -8, hi: int = 8, min_size: int = 0) -> Collection:
    return collection(kind, gen_ints(rng, max_size, lo, hi, min_size))


def gen_nested(rng: random.Random, kind: CollectionKind, depth: int,
               max_size: int = 3, min_inner: int = 0) -> Collection:
    if depth == 0:
        return gen_coll(rng, kind, max_size, min_size=min_inner)
    return collection(
        kind,
        (gen_nested(rng, kind, depth - 1, max_size, min_inner)
         for _ in range(rng.randint(0, max_size))),
    )


def _pick_kind(rng: random.Random) -> CollectionKind:
    return rng.choice(ALL_KINDS)


def _pick_shape(rng: random.Random) -> ShapeKind:
    return rng.choice(ALL_SHAPES)


def _pick_gated(rng: random.Random) -> tuple[CollectionKind, Semiring]:
    kind, sname = rng.choice(GATED_PAIRS)
    return kind, SEMIRINGS[sname]


def _semiring_label_bounds(s: Semiring) -> tuple[int, int]:
    # keep plus-times products comfortably inside 64 bits
    return (-3, 3) if s.name == "plus-times" else (-8, 8)


# ---------------------------------------------------------------------------
# witness codec

def encode_value(v) -> Any:
    if isinstance(v, bool):
        raise TypeError("boolean inputs are not used")
    if isinstance(v, int) or isinstance(v, str):
        return v
    if isinstance(v, _EmptyMark):
        return {"t": "empty"}
    if isinstance(v, Node):
        return {"t": "node", "shape": v.shape.value, "sx": print_pruned(v)}
    if isinstance(v, Collection):
        return {"t": "coll", "kind": v.kind.value,
                "items": [encode_value(e) for e in v.items]}
    if isinstance(v, tuple):
        return {"t": "tuple", "items": [encode_value(e) for e in v]}
    if isinstance(v, list):
        return {"t": "seq", "items": [encode_value(e) for e in v]}
    raise TypeError(f"cannot serialize {type(v).__name__}")


def decode_value(v) -> Any:
    if isinstance(v, (int, str)):
        return v
    tag = v["t"]
    if tag == "empty":
        return EMPTY
    if tag == "node":
        return parse_pruned(v["sx"], ShapeKind(v["shape"]))
    if tag == "coll":
        return collection(CollectionKind(v["kind"]),
                          [decode_value(e) for e in v["items"]])
    if tag == "tuple":
        return tuple(decode_value(e) for e in v["items"])
    if tag == "seq":
        return [decode_value(e) for e in v["items"]]
    raise TypeError(f"cannot deserialize {v!r}")


def encode_inputs(inputs: dict) -> str:
    return json.dumps({k: encode_value(v) for k, v in inputs.items()},
                      sort_keys=True, separators=(",", ":"))


def decode_inputs(text: str) -> dict:
    return {k: decode_value(v) for k, v in json.loads(text).items()}


# ---------------------------------------------------------------------------
# shrinking: structure first (term depth, collection size), labels second

def _int_candidates(v: int):
    for c in (0, 1, -1, int(v / 2)):
        if c != v:
            yield c


def _candidates(v):
    if isinstance(v, Node):
        for c in v.children:
            if isinstance(c, Node):
                yield c
        if not _has_empty(v):
            halved = map_term(lambda l: int(l / 2), v)
            if halved != v:
                yield halved
            zeroed = map_term(lambda l: 0, v)
            if zeroed not in (v, halved):
                yield zeroed
    elif isinstance(v, Collection):
        items = v.items
        for i in range(len(items)):
            yield collection(v.kind, items[:i] + items[i + 1 :])
        for i, e in enumerate(items):
            for cand in itertools.islice(_candidates(e), 4):
                yield collection(v.kind, items[:i] + (cand,) + items[i + 1 :])
    elif isinstance(v, int) and not isinstance(v, bool):
        yield from _int_candidates(v)
    elif isinstance(v, tuple):
        for i, e in enumerate(v):
            for cand in itertools.islice(_candidates(e), 4):
                yield v[:i] + (cand,) + v[i + 1 :]
    elif isinstance(v, list):
        for i in range(len(v)):
            yield v[:i] + v[i + 1 :]
        for i, e in enumerate(v):
            for cand in itertools.islice(_candidates(e), 4):
                yield v[:i] + [cand] + v[i + 1 :]


def _has_empty(t) -> bool:
    if not isinstance(t, Node):
        return True
    return any(_has_empty(c) for c in t.children)


def _rewrite_ints(v, k: int):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return k
    if isinstance(v, Node):
        return v if _has_empty(v) else map_term(lambda _l: k, v)
    if isinstance(v, Collection):
        return collection(v.kind, (_rewrite_ints(e, k) for e in v.items))
    if isinstance(v, tuple):
        return tuple(_rewrite_ints(e, k) for e in v)
    if isinstance(v, list):
        return [_rewrite_ints(e, k) for e in v]
    return v


def shrink_inputs(inputs: dict, violated: Callable[[dict], bool],
                  budget: int = 500) -> dict:
    def still_bad(cand: dict) -> bool:
        try:
            return violated(cand)
        except Exception:
            return False

    def structural(current: dict) -> dict:
        nonlocal budget
        improved = True
        while improved and budget > 0:
            improved = False
            for key in current:
                for cand in _candidates(current[key]):
                    budget -= 1
                    trial = dict(current)
                    trial[key] = cand
                    if still_bad(trial):
                        current = trial
                        improved = True
                        break
                    if budget <= 0:
                        break
                if improved or budget <= 0:
                    break
        return current

    current = structural(inputs)
    # coupled values (e.g. equal elements on both sides) cannot shrink
    # one key at a time; try flattening every integer to 0 or 1 at once
    for k in (0, 1):
        uniform = {key: _rewrite_ints(val, k) for key, val in current.items()}
        if uniform != current and still_bad(uniform):
            current = structural(uniform)
            break
    return current


# ---------------------------------------------------------------------------
# the registry

@dataclass(frozen=True)
class Law:
    id: str
    expectation: str
    description: str
    gen: Callable[[random.Random], dict]
    violated: Callable[[dict], bool]
    precheck: Callable[[], str | None] | None = None


@dataclass(frozen=True)
class LawReport:
    id: str
    trials: int
    outcome: str
    expectation: str
    ok: bool
    witness: str | None

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "trials": self.trials,
            "outcome": self.outcome,
            "expectation": self.expectation,
            "ok": self.ok,
            "witness": self.witness,
        }


_REGISTRY: dict[str, Law] = {}


def _law(id: str, expectation: str, description: str, gen, violated,
         precheck=None) -> None:
    _REGISTRY[id] = Law(id, expectation, description, gen, violated, precheck)


# -- folds -------------------------------------------------------------------

def _gen_alg_term(rng: random.Random) -> dict:
    name = rng.choice(list(ALGEBRAS))
    if name == "plustimes-horner":
        # iterated products grow doubly exponentially with depth; keep
        # the carrier inside 64 bits
        term = gen_term(rng, _pick_shape(rng), max_depth=5, lo=-3, hi=3)
    else:
        term = gen_term(rng, _pick_shape(rng))
    return {"alg": name, "term": term}


def _fold_universal_violated(inp: dict) -> bool:
    alg, t = ALGEBRAS[inp["alg"]], inp["term"]
    one_step = alg(Node(t.shape, t.tag, t.labels,
                        tuple(fold(alg, c) for c in t.children)))
    return fold(alg, t) != one_step


_law("fold-universal", HOLDS,
     "fold alg equals alg applied over recursively folded children",
     _gen_alg_term, _fold_universal_violated)


def _gen_alg_base(rng: random.Random) -> dict:
    shape = _pick_shape(rng)
    sigs = SIGNATURES[shape]
    stop = next(t for t, s in sigs.items() if s.n_children == 0)
    labels = tuple(rng.randint(-8, 8) for _ in range(sigs[stop].n_labels))
    return {"alg": rng.choice(list(ALGEBRAS)),
            "term": Node(shape, stop, labels, ())}


_law("fold-universal-base", HOLDS,
     "the universal property at childless constructors",
     _gen_alg_base, _fold_universal_violated)


def _gen_fusion(rng: random.Random) -> dict:
    return {"triple": rng.choice(list(FUSION_TRIPLES)),
            "term": gen_term(rng, _pick_shape(rng))}


def _fusion_violated(inp: dict) -> bool:
    tr = FUSION_TRIPLES[inp["triple"]]
    t = inp["term"]
    return tr.h(fold(tr.f, t)) != fold(tr.g, t)


_law("fold-fusion", HOLDS,
     "h . fold f = fold g when h . f = g . F h (side condition checked "
     "exhaustively on small constructor layers first)",
     _gen_fusion, _fusion_violated, precheck=_fusion_side_condition)


def _gen_map_fusion(rng: random.Random) -> dict:
    return {"relabel": rng.choice(list(RELABELS)),
            "alg": rng.choice(["sum", "size", "depth"]),
            "term": gen_term(rng, _pick_shape(rng))}


def _map_fusion_violated(inp: dict) -> bool:
    g, alg, t = RELABELS[inp["relabel"]], ALGEBRAS[inp["alg"]], inp["term"]
    fused = fold(lambda n: alg(bimap_node(g, lambda c: c, n)), t)
    return fold(alg, map_term(g, t)) != fused


_law("fold-map-fusion", HOLDS,
     "fold f . map g = fold (f . F g id)",
     _gen_map_fusion, _map_fusion_violated)


# -- labelled ----------------------------------------------------------------

def _scan_lemma_violated(inp: dict) -> bool:
    alg, t = ALGEBRAS[inp["alg"]], inp["term"]
    two_pass = map_labelled(lambda s: fold(alg, s), subterms(t))
    return scan_generic(alg, t) != two_pass


_law("scan-lemma", HOLDS,
     "one-pass scan equals map-of-fold over subterms",
     _gen_alg_term, _scan_lemma_violated)


def _gen_term_only(rng: random.Random) -> dict:
    return {"term": gen_term(rng, _pick_shape(rng))}


_law("subterms-para-equiv", HOLDS,
     "subterms as a fold equals subterms as a paramorphism",
     _gen_term_only,
     lambda inp: subterms(inp["term"]) != subterms_para(inp["term"]))

_law("subterms-unfold-equiv", HOLDS,
     "subterms as a fold equals the top-down rebuilding",
     _gen_term_only,
     lambda inp: subterms(inp["term"]) != oracles.subterms_unfold(inp["term"]))


# -- collection monads -------------------------------------------------------

def _gen_monad_laws(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    return {"kind": kind.value,
            "x": gen_coll(rng, kind),
            "xxx": gen_nested(rng, kind, 2)}


def _monad_laws_violated(inp: dict) -> bool:
    kind = CollectionKind(inp["kind"])
    x, xxx = inp["x"], inp["xxx"]
    if join_c(singleton(kind, x)) != x:
        return True
    if join_c(map_c(lambda a: singleton(kind, a), x)) != x:
        return True
    return join_c(map_c(join_c, xxx)) != join_c(join_c(xxx))


_law("monad-laws", HOLDS,
     "join . singleton = id, join . map singleton = id, "
     "join . map join = join . join",
     _gen_monad_laws, _monad_laws_violated)


def _gen_join_dist(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    return {"kind": kind.value,
            "xx": gen_nested(rng, kind, 1),
            "yy": gen_nested(rng, kind, 1)}


def _join_dist_violated(inp: dict) -> bool:
    kind = CollectionKind(inp["kind"])
    xx, yy = inp["xx"], inp["yy"]
    if join_c(empty(kind)) != empty(kind):
        return True
    return join_c(union(xx, yy)) != union(join_c(xx), join_c(yy))


_law("join-distributes", HOLDS,
     "join of empty is empty; join distributes over union",
     _gen_join_dist, _join_dist_violated)


def _gen_monad_algebra(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    op = rng.choice(REDUCERS_FOR_KIND[kind])
    # max/min have no honest value on the empty collection of a 64-bit
    # carrier, so inner collections stay nonempty for them
    min_inner = 0 if op == "sum" else 1
    return {"kind": kind.value, "op": op,
            "a": rng.randint(-8, 8),
            "cc": gen_nested(rng, kind, 1, min_inner=min_inner)}


def _monad_algebra_violated(inp: dict) -> bool:
    kind, op = CollectionKind(inp["kind"]), REDUCERS[inp["op"]]
    a, cc = inp["a"], inp["cc"]
    if reduce(op, singleton(kind, a)) != a:
        return True
    lhs = reduce(op, join_c(cc))
    rhs = reduce(op, map_c(lambda c: reduce(op, c), cc))
    return lhs != rhs


_law("monad-algebra", HOLDS,
     "a reduction splits through return and join",
     _gen_monad_algebra, _monad_algebra_violated)


def _gen_reduce_dist(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    op = rng.choice(REDUCERS_FOR_KIND[kind])
    return {"kind": kind.value, "op": op,
            "a": rng.randint(-8, 8), "b": rng.randint(-8, 8),
            "x": gen_coll(rng, kind), "y": gen_coll(rng, kind)}


def _reduce_dist_violated(inp: dict) -> bool:
    kind, op = CollectionKind(inp["kind"]), REDUCERS[inp["op"]]
    a, b, x, y = inp["a"], inp["b"], inp["x"], inp["y"]
    if op.fn(a, b) != reduce(op, union(singleton(kind, a), singleton(kind, b))):
        return True
    return reduce(op, union(x, y)) != op.fn(reduce(op, x), reduce(op, y))


_law("reduce-distributes", HOLDS,
     "the operator is recovered from singletons, and reduce splits "
     "across union",
     _gen_reduce_dist, _reduce_dist_violated)


def _gen_reduce_unit(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    return {"kind": kind.value,
            "op": rng.choice(REDUCERS_FOR_KIND[kind]),
            "x": gen_coll(rng, kind)}


def _reduce_unit_violated(inp: dict) -> bool:
    kind, op = CollectionKind(inp["kind"]), REDUCERS[inp["op"]]
    x = inp["x"]
    if reduce(op, empty(kind)) != op.unit:
        return True
    return reduce(op, union(x, empty(kind))) != reduce(op, x)


_law("reduce-unit-forced", HOLDS,
     "reduce of the empty collection is the operator's unit",
     _gen_reduce_unit, _reduce_unit_violated)


# -- list Horner and the classical chain --------------------------------------

def _gen_horner_list(rng: random.Random) -> dict:
    sname = rng.choice(["plus-times", "max-plus"])
    if sname == "plus-times":
        xs = gen_ints(rng, 8, 0, 8)
    else:
        xs = gen_ints(rng, 8, -8, 8)
    return {"semiring": sname, "xs": xs}


def _horner_list_violated(inp: dict) -> bool:
    s = SEMIRINGS[inp["semiring"]]
    xs = inp["xs"]
    prods = [foldr_list(s.mul, s.mul_unit, seg) for seg in inits_list(xs)]
    expected = prods[0]
    for p in prods[1:]:
        expected = s.add(expected, p)
    return horner_list(s, xs) != expected


_law("horner-list", HOLDS,
     "the prefix-products reduction equals the single Horner fold",
     _gen_horner_list, _horner_list_violated)


def _gen_mss_chain(rng: random.Random) -> dict:
    return {"xs": gen_ints(rng, 24, -32, 32)}


def _mss_chain_violated(inp: dict) -> bool:
    xs = inp["xs"]
    a = mss_spec(xs)
    return a != mss_quadratic(xs) or a != mss_linear(xs)


_law("mss-chain", HOLDS,
     "cubic, quadratic and linear maximum-segment-sum agree",
     _gen_mss_chain, _mss_chain_violated)


# -- distributivity ------------------------------------------------------------

def _gen_rectangle(rng: random.Random) -> dict:
    kind, s = _pick_gated(rng)
    shape = _pick_shape(rng)
    tag = rng.choice(list(SIGNATURES[shape]))
    sig = SIGNATURES[shape][tag]
    lo, hi = _semiring_label_bounds(s)
    labels = tuple(rng.randint(lo, hi) for _ in range(sig.n_labels))
    cols = tuple(gen_coll(rng, kind, 3, lo, hi, min_size=1)
                 for _ in range(sig.n_children))
    return {"kind": kind.value, "semiring": s.name, "shape": shape.value,
            "tag": tag, "labels": tuple(labels), "cols": cols}


def _rectangle_violated(inp: dict) -> bool:
    kind, s = CollectionKind(inp["kind"]), SEMIRINGS[inp["semiring"]]
    shape = ShapeKind(inp["shape"])
    n = Node(shape, inp["tag"], tuple(inp["labels"]), tuple(inp["cols"]))
    f = generic_product_alg(s, s.mul_unit)
    via_distribute = reduce(s.reduce_op, map_c(f, distribute_node(n, kind)))
    summed = Node(n.shape, n.tag, n.labels,
                  tuple(reduce(s.reduce_op, c) for c in n.children))
    return via_distribute != f(summed)


_law("rectangle-distributivity", HOLDS,
     "reduce . map product . distribute equals product after reducing "
     "each child collection",
     _gen_rectangle, _rectangle_violated)


def _gen_mbs(rng: random.Random) -> dict:
    kind, s = _pick_gated(rng)
    lo, hi = _semiring_label_bounds(s)
    mbs = [gen_coll(rng, kind, 3, lo, hi, min_size=1)
           for _ in range(rng.randint(0, 3))]
    return {"kind": kind.value, "semiring": s.name, "mbs": mbs}


def _face7_violated(inp: dict) -> bool:
    kind, s = CollectionKind(inp["kind"]), SEMIRINGS[inp["semiring"]]
    mbs = inp["mbs"]
    b = s.mul_unit
    lhs = foldr_list(s.mul, b, [reduce(s.reduce_op, mb) for mb in mbs])
    rhs = reduce(
        s.reduce_op,
        map_c(lambda tup: foldr_list(s.mul, b, list(tup)), dist_list(mbs, kind)),
    )
    return lhs != rhs


_law("face7-lists", HOLDS,
     "folding reduced collections equals reducing folds of the "
     "distributed list",
     _gen_mbs, _face7_violated)


def _gen_distlist_defs(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    mbs = [gen_coll(rng, kind, 3) for _ in range(rng.randint(0, 3))]
    return {"kind": kind.value, "mbs": mbs}


_law("distlist-defs-equiv", HOLDS,
     "the fold-of-cp distributor equals the lifted-pairing distributor",
     _gen_distlist_defs,
     lambda inp: dist_list(inp["mbs"], CollectionKind(inp["kind"]))
     != oracles.dist_list_lifted(inp["mbs"], CollectionKind(inp["kind"])))


def _gen_cp_dist(rng: random.Random) -> dict:
    kind, s = _pick_gated(rng)
    lo, hi = _semiring_label_bounds(s)
    return {"kind": kind.value, "semiring": s.name,
            "x": gen_coll(rng, kind, 4, lo, hi, min_size=1),
            "y": gen_coll(rng, kind, 4, lo, hi, min_size=1)}


def _cp_dist_violated(inp: dict) -> bool:
    kind, s = CollectionKind(inp["kind"]), SEMIRINGS[inp["semiring"]]
    x, y = inp["x"], inp["y"]
    lhs = reduce(s.reduce_op, map_c(lambda ab: s.mul(ab[0], ab[1]), cp(x, y)))
    return lhs != s.mul(reduce(s.reduce_op, x), reduce(s.reduce_op, y))


_law("cp-distributivity", HOLDS,
     "reduce . map mul . cp equals mul of the two reductions",
     _gen_cp_dist, _cp_dist_violated)


def _gen_coll_dist(rng: random.Random) -> dict:
    kind, s = _pick_gated(rng)
    lo, hi = _semiring_label_bounds(s)
    return {"kind": kind.value, "semiring": s.name,
            "a": rng.randint(lo, hi),
            "x": gen_coll(rng, kind, 4, lo, hi, min_size=1)}


def _coll_dist_violated(inp: dict) -> bool:
    s = SEMIRINGS[inp["semiring"]]
    a, x = inp["a"], inp["x"]
    op = s.reduce_op
    if reduce(op, map_c(lambda b: s.mul(a, b), x)) != s.mul(a, reduce(op, x)):
        return True
    return reduce(op, map_c(lambda b: s.mul(b, a), x)) != s.mul(reduce(op, x), a)


_law("collection-distributivity", HOLDS,
     "mapping a one-sided mul commutes with reduction",
     _gen_coll_dist, _coll_dist_violated)


def _gen_contents_nat(rng: random.Random) -> dict:
    return {"relabel": rng.choice(list(RELABELS)),
            "term": gen_term(rng, _pick_shape(rng))}


def _contents_nat_violated(inp: dict) -> bool:
    g, t = RELABELS[inp["relabel"]], inp["term"]
    return contents_term(map_term(g, t)) != [g(l) for l in contents_term(t)]


_law("contents-naturality", HOLDS,
     "contents of a relabelled term is the relabelled contents",
     _gen_contents_nat, _contents_nat_violated)


def _gen_delta_contents(rng: random.Random) -> dict:
    kind = _pick_kind(rng)
    shape = _pick_shape(rng)
    tag = rng.choice(list(SIGNATURES[shape]))
    sig = SIGNATURES[shape][tag]
    cols = tuple(gen_coll(rng, kind, 3)
                 for _ in range(sig.n_labels + sig.n_children))
    return {"kind": kind.value, "shape": shape.value, "tag": tag, "cols": cols}


def _delta_contents_violated(inp: dict) -> bool:
    kind = CollectionKind(inp["kind"])
    shape = ShapeKind(inp["shape"])
    sig = SIGNATURES[shape][inp["tag"]]
    cols = tuple(inp["cols"])
    n = Node(shape, inp["tag"], cols[: sig.n_labels], cols[sig.n_labels :])
    via_contents = dist_list(cols, kind)
    via_node = map_c(lambda nd: tuple(contents_node(nd)), bidist_node(n, kind))
    return via_contents != via_node


_law("delta-respects-contents", HOLDS,
     "distributing the contents list equals contents of the distributed "
     "constructor",
     _gen_delta_contents, _delta_contents_violated)


# -- generic Horner and MSS ----------------------------------------------------

def _horner_b_samples(rng: random.Random, s: Semiring) -> int:
    if s.name == "max-plus":
        return rng.choice([0, 0, -1, -3])
    return rng.choice([s.mul_unit, s.add(s.mul_unit, s.mul_unit)])


def _gen_horner_generic(rng: random.Random) -> dict:
    s = SEMIRINGS[rng.choice(["max-plus", "plus-times"])]
    lo, hi = _semiring_label_bounds(s)
    t = gen_term_capped(rng, _pick_shape(rng), prune_count, 3000, 4, lo, hi)
    return {"semiring": s.name, "b": _horner_b_samples(rng, s), "term": t}


def _horner_generic_violated(inp: dict) -> bool:
    s, b, t = SEMIRINGS[inp["semiring"]], inp["b"], inp["term"]
    return horner_generic(s, b, t) != horner_generic_brute(s, b, t)


_law("horner-generic-vs-prune", HOLDS,
     "the Horner fold equals reducing layer-products over all prunings",
     _gen_horner_generic, _horner_generic_violated)


def _gen_mss_generic(rng: random.Random) -> dict:
    s = SEMIRINGS[rng.choice(["max-plus", "plus-times"])]
    lo, hi = _semiring_label_bounds(s)
    t = gen_term_capped(rng, _pick_shape(rng), segs_count, 2000, 4, lo, hi)
    return {"semiring": s.name, "term": t}


def _mss_generic_violated(inp: dict) -> bool:
    s, t = SEMIRINGS[inp["semiring"]], inp["term"]
    scan_v = mss_generic(s, None, t, via="scan", kind=CollectionKind.BAG)
    brute_v = mss_generic(s, None, t, via="brute", kind=CollectionKind.BAG)
    return scan_v != brute_v


_law("mss-generic-scan-vs-brute", HOLDS,
     "scanning the Horner fold equals reducing over all generic segments",
     _gen_mss_generic, _mss_generic_violated)


def _gen_set_plus(rng: random.Random) -> dict:
    return {"x": gen_coll(rng, CollectionKind.SET, 4, -3, 5),
            "y": gen_coll(rng, CollectionKind.SET, 4, -3, 5)}


def _set_plus_violated(inp: dict) -> bool:
    x, y = inp["x"], inp["y"]
    lhs = reduce(SUM_REDUCE, union(x, y), check=False)
    rhs = SUM_REDUCE.fn(reduce(SUM_REDUCE, x, check=False),
                        reduce(SUM_REDUCE, y, check=False))
    return lhs != rhs


_law("set-plus-nonidempotent", FAILS,
     "summing over sets does not distribute across union, because set "
     "union is idempotent and addition is not",
     _gen_set_plus, _set_plus_violated)


def _gen_prune_counts(rng: random.Random) -> dict:
    return {"term": gen_term_capped(rng, _pick_shape(rng), prune_count, 20000, 5)}


_law("prune-counts", HOLDS,
     "enumerated prunings match the 1 + product-over-children recurrence",
     _gen_prune_counts,
     lambda inp: len(prune(inp["term"]).items) != prune_count(inp["term"]))


# ---------------------------------------------------------------------------
# runner

LAW_IDS = tuple(_REGISTRY)


def get_law(law_id: str) -> Law:
    law = _REGISTRY.get(law_id)
    if law is None:
        raise UnknownLawError(f"unknown law id '{law_id}'")
    return law


def run_law(law_id: str, seed: int = 42, trials: int = 200) -> LawReport:
    """Run one law case deterministically."""
    law = get_law(law_id)
    rng = random.Random(f"{seed}:{law_id}")
    if law.precheck is not None:
        msg = law.precheck()
        if msg is not None:
            return LawReport(law.id, 0, FAILS, law.expectation,
                             law.expectation == FAILS, json.dumps({"precheck": msg}))
    ran = 0
    witness: dict | None = None
    for _ in range(trials):
        ran += 1
        inputs = law.gen(rng)
        if law.violated(inputs):
            witness = inputs
            break
    if witness is None:
        return LawReport(law.id, ran, HOLDS, law.expectation,
                         law.expectation == HOLDS, None)
    shrunk = shrink_inputs(witness, law.violated)
    return LawReport(law.id, ran, FAILS, law.expectation,
                     law.expectation == FAILS, encode_inputs(shrunk))


def run_all(seed: int = 42, trials: int = 200,
            ids: list[str] | None = None) -> list[LawReport]:
    selected = list(LAW_IDS) if not ids else list(ids)
    return [run_law(i, seed, trials) for i in selected]


def replay(law_id: str, witness: str) -> bool:
    """Re-evaluate a serialized counterexample; True if it still violates."""
    return get_law(law_id).violated(decode_inputs(witness))


def reports_to_json(reports: list[LawReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
