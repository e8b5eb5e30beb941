"""Threads and upward closed chain families with minimal generators.

A thread of a tuple is a descending sequence picking one element from each
part; a thread set is any chain containing the support of a thread.  The
collection of thread sets of a tuple is upward closed under chain
inclusion, so it is stored by its inclusion-minimal generators.  These
families form a monoid under ``compose``, mirroring composition of the
underlying localizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyChain, NotAChain
from .poset import Poset, bits
from .tuples import SubsetTuple, _check


@dataclass(frozen=True)
class Thread:
    """A descending element-index sequence with one entry per tuple part."""

    sequence: tuple[int, ...]
    support: int

    def labels(self, P: Poset) -> tuple[str, ...]:
        return tuple(P.elements[i] for i in self.sequence)


@dataclass(frozen=True)
class ChainFamily:
    """Upward closed family of non-empty chains, stored by minimal generators.

    Generators are pairwise inclusion-incomparable non-empty chains; two
    families are equal exactly when their generator sets are equal.  The
    family is the set of all chains containing some generator, so the empty
    chain is never a member.
    """

    generators: frozenset[int]

    def member(self, chain: int) -> bool:
        return any(g & chain == g for g in self.generators)

    def is_empty(self) -> bool:
        return not self.generators

    def is_subfamily(self, other: "ChainFamily") -> bool:
        """Every member of self is a member of other."""
        return all(other.member(g) for g in self.generators)

    def sorted_generators(self) -> list[int]:
        """Generators ordered by their sorted index sequences."""
        return sorted(self.generators, key=_chain_key)

    def __repr__(self):
        gens = ",".join(format(g, "x") for g in self.sorted_generators())
        return f"ChainFamily<{gens}>"


EMPTY_FAMILY = ChainFamily(frozenset())


def _chain_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def minimize(chains: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal members of a collection of chains."""
    ordered = sorted(set(chains), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for c in ordered:
        if not any(g & c == g for g in kept):
            kept.append(c)
    return frozenset(kept)


def family(P: Poset, chains: Iterable[int]) -> ChainFamily:
    """Family generated by the given chains (validated, then minimized)."""
    collected = []
    for c in chains:
        require_chain(P, c)
        collected.append(c)
    return ChainFamily(minimize(collected))


def require_chain(P: Poset, mask: int) -> int:
    if not mask:
        raise EmptyChain("the empty chain is not allowed here")
    if not P.is_chain(mask):
        raise NotAChain(
            f"{{{', '.join(P.labels(mask))}}} is not a chain")
    return mask


def threads(P: Poset, parts: SubsetTuple) -> Iterator[Thread]:
    """All threads of a tuple, depth first, ascending element index.

    Repeated elements are allowed along a thread; the support chain
    deduplicates them.  The stream is empty exactly when pruning the tuple
    to its threads empties every part.
    """
    _check(parts)
    down = P.down
    last = len(parts) - 1
    prefix = [0] * len(parts)

    def walk(pos: int, allowed: int, support: int) -> Iterator[Thread]:
        for a in bits(allowed):
            prefix[pos] = a
            grown = support | (1 << a)
            if pos == last:
                yield Thread(tuple(prefix), grown)
            else:
                yield from walk(pos + 1, parts[pos + 1] & down[a], grown)

    yield from walk(0, parts[0], 0)


def thread_sets(P: Poset, parts: SubsetTuple) -> ChainFamily:
    """Family of thread sets of a tuple: minimal supports of its threads."""
    supports = {t.support for t in threads(P, parts)}
    return ChainFamily(minimize(supports))


def chains_meeting(P: Poset, subset: int) -> ChainFamily:
    """Family of chains with non-empty intersection with ``subset``.

    Equals the thread sets of the 1-uple ``(subset,)``; the generators are
    the singletons of ``subset``.
    """
    P.check_subset(subset)
    return ChainFamily(frozenset(1 << i for i in bits(subset)))


def principal(P: Poset, chain: int) -> ChainFamily:
    """Family of all chains containing the given non-empty chain."""
    require_chain(P, chain)
    return ChainFamily(frozenset((chain,)))


def above(P: Poset, upper: int, lower: int) -> bool:
    """Every member of chain ``upper`` lies above every member of ``lower``.

    This is the compatibility relation of ``compose``; it is inherited by
    subchains, which is what makes composing generator pairs sufficient.
    """
    floor = P.full
    for i in bits(upper):
        floor &= P.down[i]
    return lower & ~floor == 0


def compose(P: Poset, U: ChainFamily, V: ChainFamily) -> ChainFamily:
    """Monoid product of chain families.

    The product collects the unions ``C | D`` over members ``C`` of ``U``
    and ``D`` of ``V`` with ``C`` entirely above ``D``.  Because the
    compatibility relation passes to subchains, the unions of compatible
    *generator* pairs generate the same family; the definitional form is
    kept as a brute-force oracle in the tests.
    """
    out = set()
    for C in U.generators:
        floor = P.full
        for i in bits(C):
            floor &= P.down[i]
        for D in V.generators:
            if D & ~floor == 0:
                out.add(C | D)
    return ChainFamily(minimize(out))


def compose_tuple(P: Poset, parts: SubsetTuple) -> ChainFamily:
    """Fold of ``compose`` over the per-part families ``chains_meeting``."""
    _check(parts)
    acc = chains_meeting(P, parts[0])
    for part in parts[1:]:
        acc = compose(P, acc, chains_meeting(P, part))
    return acc


def singleton_tuple(P: Poset, chain: int) -> SubsetTuple:
    """The descending tuple of singletons of a non-empty chain.

    Sends a chain ``p_1 > ... > p_k`` to ``({p_1}, ..., {p_k})``; its thread
    sets form exactly the principal family of the chain.
    """
    require_chain(P, chain)
    members = sorted(bits(chain), key=lambda i: P.down[i].bit_count(),
                     reverse=True)
    return tuple(1 << i for i in members)
