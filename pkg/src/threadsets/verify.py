"""Exhaustive and randomized verification of the theorem shadows.

Each suite checks one family of identities over a poset and a generated
tuple corpus: operator laws of the reduction calculus, the thread-set
monoid decomposition, the bucket form of the isomorphism conjecture, and
classifier soundness.  Corpora are enumerated exhaustively when the tuple
space fits the budget and sampled with a reported seed otherwise, so every
report is reproducible from its inputs and seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from . import catalog as _catalog
from .classify import (DIM0, DIM1_IRREDUCIBLE, DIM2_UNIQUE_EXTREMES, ZERO,
                       NormalForm, classify_dim0, classify_dim1, classify_dim2,
                       form_instances, shape_of)
from .errors import BudgetExceeded
from .families import EMPTY_FAMILY, ChainFamily, chains_meeting, compose, thread_sets
from .poset import Poset, bits
from .serialize import poset_to_dict, tuple_to_lists
from .tuples import (ZERO_TUPLE, SubsetTuple, canonical, collapse,
                     collapse_results_all_orders, is_collapsed, is_concatenated,
                     is_downward_concatenated, is_upward_concatenated,
                     prune_downward, prune_to_threads_direct, prune_upward)

FAILURE_CAP = 50  # recorded per report; the failure count is always exact


@dataclass(frozen=True)
class Bounds:
    """Corpus bounds: tuple length, enumeration budget, sampling controls."""

    max_k: int = 2
    budget: int = 1 << 20
    exhaustive: bool | None = None  # None: auto by budget; True: forced
    seed: int = 0
    samples: int = 2048
    dedup: bool = False


@dataclass
class Failure:
    prop: str
    inputs: dict
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {"property": self.prop, "inputs": self.inputs,
                "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    suite: str
    poset_name: str
    poset: dict
    mode: str
    cases: int
    failure_count: int
    failures: list[Failure]
    elapsed: float
    seed: int | None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        # elapsed is deliberately omitted: reports must be byte-identical
        # for identical inputs and seed
        return {
            "suite": self.suite,
            "poset_name": self.poset_name,
            "poset": self.poset,
            "mode": self.mode,
            "cases": self.cases,
            "seed": self.seed,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
            "details": self.details,
        }

    def to_text(self) -> str:
        status = "pass" if self.passed else f"FAIL ({self.failure_count})"
        head = (f"[{status}] {self.suite} on {self.poset_name}: "
                f"{self.cases} cases, {self.mode}, {self.elapsed:.2f}s")
        lines = [head]
        for f in self.failures:
            lines.append(f"  {f.prop}: expected {f.expected}, got {f.actual}"
                         f" on {f.inputs}")
        if self.failure_count > len(self.failures):
            lines.append(f"  ... {self.failure_count - len(self.failures)}"
                         " further failures not shown")
        return "\n".join(lines)


class _Session:
    """Shared failure collection and corpus iteration for one suite run."""

    def __init__(self, suite: str, P: Poset, bounds: Bounds, name: str = ""):
        self.suite = suite
        self.P = P
        self.bounds = bounds
        self.name = name or f"poset:{','.join(P.elements) or '<empty>'}"
        self.cases = 0
        self.failure_count = 0
        self.failures: list[Failure] = []
        self.details: dict = {}
        self.mode = "exhaustive"
        self.seed_used: int | None = None
        self.start = time.perf_counter()

    def fail(self, prop: str, inputs: dict, expected, actual) -> None:
        self.failure_count += 1
        if len(self.failures) < FAILURE_CAP:
            self.failures.append(
                Failure(prop, inputs, repr(expected), repr(actual)))

    def check(self, prop: str, inputs: dict, expected, actual) -> bool:
        if expected != actual:
            self.fail(prop, inputs, expected, actual)
            return False
        return True

    def tuple_inputs(self, *parts_seq: SubsetTuple) -> dict:
        if len(parts_seq) == 1:
            return {"tuple": tuple_to_lists(self.P, parts_seq[0])}
        return {"tuples": [tuple_to_lists(self.P, t) for t in parts_seq]}

    def corpus(self) -> Iterator[SubsetTuple]:
        P, b = self.P, self.bounds
        space = _tuple_space(P.n, b.max_k)
        exhaustive = space <= b.budget if b.exhaustive is None else b.exhaustive
        if exhaustive and space > b.budget:
            raise BudgetExceeded(
                f"exhaustive mode forced on {space} tuples with budget {b.budget}")
        seen_canonical: set[SubsetTuple] = set()
        raw = 0
        if exhaustive:
            self.mode = "exhaustive"
            source: Iterable[SubsetTuple] = _all_tuples(P.n, b.max_k)
        else:
            self.mode = "sampled"
            self.seed_used = b.seed
            rng = random.Random(b.seed)
            source = (_decode_tuple(rng.randrange(space), P.n)
                      for _ in range(b.samples))
        for t in source:
            raw += 1
            if b.dedup:
                key = canonical(P, t)
                if key in seen_canonical:
                    continue
                seen_canonical.add(key)
            self.cases += 1
            yield t
        if b.dedup:
            self.details["raw_cases"] = raw
            self.details["deduplicated"] = raw - self.cases

    def report(self) -> VerificationReport:
        return VerificationReport(
            suite=self.suite, poset_name=self.name, poset=poset_to_dict(self.P),
            mode=self.mode, cases=self.cases, failure_count=self.failure_count,
            failures=self.failures, elapsed=time.perf_counter() - self.start,
            seed=self.seed_used, details=self.details)


def _tuple_space(n: int, max_k: int) -> int:
    block = 1 << n
    return sum(block ** k for k in range(1, max_k + 1))


def _all_tuples(n: int, max_k: int) -> Iterator[SubsetTuple]:
    block = range(1 << n)
    for k in range(1, max_k + 1):
        yield from product(block, repeat=k)


def _decode_tuple(index: int, n: int) -> SubsetTuple:
    block = 1 << n
    size = block
    while index >= size:
        index -= size
        size *= block
    parts = []
    while True:
        index, low = divmod(index, block)
        parts.append(low)
        if size == block:
            break
        size //= block
    return tuple(parts)


def verify_operator_laws(P: Poset, bounds: Bounds = Bounds(),
                         name: str = "") -> VerificationReport:
    """Idempotence, commutation and confluence of the reduction operators."""
    s = _Session("operator-laws", P, bounds, name)
    for t in s.corpus():
        inputs = s.tuple_inputs(t)
        upward = prune_upward(P, t)
        downward = prune_downward(P, t)
        s.check("prune_upward_idempotent", inputs, upward,
                prune_upward(P, upward))
        s.check("prune_upward_concatenates", inputs, True,
                is_upward_concatenated(P, upward))
        s.check("prune_downward_idempotent", inputs, downward,
                prune_downward(P, downward))
        s.check("prune_downward_concatenates", inputs, True,
                is_downward_concatenated(P, downward))
        both = prune_downward(P, upward)
        s.check("prune_order_commutes", inputs, both, prune_upward(P, downward))
        s.check("thread_prune_matches_direct", inputs, both,
                prune_to_threads_direct(P, t))
        s.check("thread_prune_idempotent", inputs, both,
                prune_downward(P, prune_upward(P, both)))
        collapsed = collapse(t)
        s.check("collapse_idempotent", inputs, collapsed, collapse(collapsed))
        s.check("collapse_collapses", inputs, True, is_collapsed(collapsed))
        s.check("collapse_confluent", inputs, frozenset((collapsed,)),
                collapse_results_all_orders(t))
        if is_upward_concatenated(P, t):
            s.check("collapse_preserves_upward", inputs, True,
                    is_upward_concatenated(P, collapsed))
        if is_downward_concatenated(P, t):
            s.check("collapse_preserves_downward", inputs, True,
                    is_downward_concatenated(P, collapsed))
        reduced = collapse(both)
        s.check("canonical_idempotent", inputs, reduced, canonical(P, reduced))
        s.check("canonical_shape", inputs, True,
                reduced == ZERO_TUPLE
                or (is_collapsed(reduced) and is_concatenated(P, reduced)))
    return s.report()


def verify_thread_monoid(P: Poset, bounds: Bounds = Bounds(),
                         name: str = "") -> VerificationReport:
    """Thread-set decomposition, composition laws and reduction shadows."""
    s = _Session("monoid", P, bounds, name)
    memo: dict[int, ChainFamily] = {}

    def meeting(a: int) -> ChainFamily:
        got = memo.get(a)
        if got is None:
            got = memo[a] = chains_meeting(P, a)
        return got

    for t in s.corpus():
        inputs = s.tuple_inputs(t)
        F = thread_sets(P, t)
        fold = meeting(t[0])
        for part in t[1:]:
            fold = compose(P, fold, meeting(part))
        s.check("thread_sets_decompose", inputs, F, fold)
        for j in range(1, len(t)):
            s.check("thread_sets_of_concatenation", inputs, F,
                    compose(P, thread_sets(P, t[:j]), thread_sets(P, t[j:])))
        reduced = canonical(P, t)
        s.check("canonical_preserves_thread_sets", inputs, F,
                thread_sets(P, reduced))
        s.check("no_thread_iff_zero", inputs, F.is_empty(),
                reduced == ZERO_TUPLE)
        if len(t) == 2:
            a, b = t
            s.check("head_restricts_to_upset", inputs, F,
                    thread_sets(P, (a & P.up_set(b), b)))
            s.check("tail_restricts_to_downset", inputs, F,
                    thread_sets(P, (a, b & P.down_set(a))))
    _associativity(s, meeting)
    return s.report()


def _associativity(s: _Session, meeting: Callable[[int], ChainFamily]) -> None:
    P, b = s.P, s.bounds
    space = (1 << P.n) ** 3
    cache: dict[tuple[ChainFamily, ChainFamily], ChainFamily] = {}

    def cached(U: ChainFamily, V: ChainFamily) -> ChainFamily:
        key = (U, V)
        got = cache.get(key)
        if got is None:
            got = cache[key] = compose(P, U, V)
        return got

    if space <= b.budget:
        triples: Iterable[tuple[int, int, int]] = product(range(1 << P.n),
                                                          repeat=3)
        total = space
    else:
        rng = random.Random(b.seed)
        s.seed_used = b.seed
        triples = ((rng.randrange(1 << P.n), rng.randrange(1 << P.n),
                    rng.randrange(1 << P.n)) for _ in range(b.samples))
        total = b.samples
    checked = 0
    for a, bb, c in triples:
        checked += 1
        left = cached(cached(meeting(a), meeting(bb)), meeting(c))
        right = cached(meeting(a), cached(meeting(bb), meeting(c)))
        if left != right:
            s.fail("compose_associative",
                   {"subsets": [list(P.labels(a)), list(P.labels(bb)),
                                list(P.labels(c))]}, left, right)
    s.cases += checked
    s.details["associativity_triples"] = total


def _classify_family(P: Poset, F: ChainFamily, reduced: SubsetTuple,
                     shape: str) -> NormalForm:
    if F.is_empty():
        return ZERO
    if shape == DIM0:
        return classify_dim0(P, F)
    if shape == DIM1_IRREDUCIBLE:
        return classify_dim1(P, F)
    if shape == DIM2_UNIQUE_EXTREMES:
        return classify_dim2(P, F)
    return NormalForm("Unresolved", reduced)


def verify_conjecture(P: Poset, bounds: Bounds = Bounds(),
                      name: str = "") -> VerificationReport:
    """Bucket tuples by thread sets; equal thread sets must mean equal form.

    On shape-supported posets every bucket must classify to a single normal
    form; on other finite posets the bucket partition is still computed and
    the invariance of thread sets under canonical reduction is checked.
    """
    s = _Session("conjecture", P, bounds, name)
    shape = shape_of(P)
    supported = shape in (DIM0, DIM1_IRREDUCIBLE, DIM2_UNIQUE_EXTREMES)
    buckets: dict[ChainFamily, tuple[NormalForm, SubsetTuple]] = {}
    sizes: dict[ChainFamily, int] = {}
    for t in s.corpus():
        inputs = s.tuple_inputs(t)
        F = thread_sets(P, t)
        reduced = canonical(P, t)
        s.check("canonical_preserves_thread_sets", inputs, F,
                thread_sets(P, reduced))
        sizes[F] = sizes.get(F, 0) + 1
        if not supported:
            continue
        nf = _classify_family(P, F, reduced, shape)
        held = buckets.get(F)
        if held is None:
            buckets[F] = (nf, t)
        elif held[0] != nf:
            s.fail("same_thread_sets_same_form",
                   s.tuple_inputs(held[1], t), held[0], nf)
    s.details["shape"] = shape
    s.details["buckets"] = len(sizes)
    histogram: dict[int, int] = {}
    for count in sizes.values():
        histogram[count] = histogram.get(count, 0) + 1
    s.details["bucket_size_histogram"] = dict(sorted(histogram.items()))
    return s.report()


def verify_classifier(P: Poset, bounds: Bounds = Bounds(),
                      name: str = "") -> VerificationReport:
    """Round-trip every syntactic form instance through its thread sets.

    Each instance must classify back to itself with equal payloads, and
    all instances must have pairwise distinct thread-set families.
    """
    s = _Session("classifier", P, bounds, name)
    s.mode = "exhaustive"
    shape = shape_of(P)
    seen: dict[ChainFamily, NormalForm] = {}
    for inst in form_instances(P):
        s.cases += 1
        defining = inst.as_tuple(P)
        inputs = {"form": inst.describe(P),
                  "tuple": tuple_to_lists(P, defining)}
        F = thread_sets(P, defining)
        got = _classify_family(P, F, canonical(P, defining), shape)
        s.check("classifier_round_trip", inputs, inst, got)
        other = seen.get(F)
        if other is not None:
            s.fail("forms_have_distinct_thread_sets", inputs, other, inst)
        else:
            seen[F] = inst
    s.cases += 1
    s.check("zero_from_empty_family", {"form": "Zero"}, ZERO,
            _classify_family(P, EMPTY_FAMILY, ZERO_TUPLE, shape))
    return s.report()


_SUITES: dict[str, Callable[..., VerificationReport]] = {
    "operator-laws": verify_operator_laws,
    "monoid": verify_thread_monoid,
    "conjecture": verify_conjecture,
    "classifier": verify_classifier,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def all_posets(n: int, prefix: str = "p") -> list[Poset]:
    """All labeled posets on exactly ``n`` elements."""
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for mask in range(1 << len(pairs)):
        above = [0] * n  # above[i]: strict upper bounds of i, irreflexive
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                above[i] |= 1 << j
        # transitivity as downward closure of the above-sets; together with
        # irreflexivity this rules out cycles, hence forces antisymmetry
        ok = all(not above[j] & ~above[i]
                 for i in range(n) for j in bits(above[i]))
        if ok:
            down = tuple((1 << j) | sum(1 << i for i in range(n)
                                        if above[i] >> j & 1)
                         for j in range(n))
            out.append(Poset(tuple(names), down))
    return out


def labeled_corpus(max_n: int = 4) -> list[tuple[str, Poset]]:
    """All labeled posets on 0..max_n elements, with stable names."""
    out = []
    for n in range(max_n + 1):
        for i, P in enumerate(all_posets(n)):
            out.append((f"labeled-{n}-{i}", P))
    return out


def catalog_corpus() -> list[tuple[str, Poset]]:
    picks = [("chain", (3,)), ("diamond", (2,)), ("diamond", (3,)),
             ("star", (3,)), ("star", (4,)), ("chromatic", (4,)),
             ("circle", (4,)), ("zariski_xy", (2, 2)), ("torus2", (2,))]
    out = []
    for name, params in picks:
        entry = _catalog.catalog(name, *params)
        label = f"{name}({', '.join(map(str, params))})"
        out.append((label, entry.poset))
    return out


def default_corpus() -> list[tuple[str, Poset]]:
    return labeled_corpus(4) + catalog_corpus()


def deepened(bounds: Bounds, P: Poset) -> Bounds:
    """Bounds used on the default corpus: small posets get deeper tuples."""
    if P.n <= 3 and bounds.max_k < 3:
        return Bounds(max_k=3, budget=bounds.budget, exhaustive=bounds.exhaustive,
                      seed=bounds.seed, samples=bounds.samples, dedup=bounds.dedup)
    return bounds


def run_suite(suite: str, posets: list[tuple[str, Poset]] | None = None,
              bounds: Bounds = Bounds()) -> list[VerificationReport]:
    """Run one suite (or ``all``) over the given or default corpus.

    Explicit posets are checked at exactly the given bounds; on the
    default corpus, posets with at most 3 elements are deepened to k <= 3.
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; known: {SUITE_NAMES}")
    adapt = posets is None
    if posets is None:
        posets = default_corpus()
    suites = list(_SUITES) if suite == "all" else [suite]
    reports = []
    for which in suites:
        for name, P in posets:
            effective = deepened(bounds, P) if adapt else bounds
            if which == "classifier":
                if shape_of(P) not in (DIM0, DIM1_IRREDUCIBLE,
                                       DIM2_UNIQUE_EXTREMES):
                    continue
                reports.append(verify_classifier(P, effective, name=name))
            else:
                reports.append(_SUITES[which](P, effective, name=name))
    return reports
