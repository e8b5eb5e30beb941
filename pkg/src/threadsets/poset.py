"""Finite posets of primes: order closure, chains, dimension, set operators.

The poset models the specialization order of a finite prime spectrum.  The
order symbol ``<=`` is prime inclusion; a subset of the poset is a bitmask
over the element indices (bit ``i`` set means element ``i`` belongs to the
subset).  All operations are pure and the poset is immutable after
construction, so instances can be shared freely across workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CycleDetected, DuplicateElement, UnknownElement


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite partial order over opaque string identifiers.

    Elements are indexed 0..n-1 in declaration order.  ``down[i]`` and
    ``up[i]`` are the reflexive principal down-set and up-set of element
    ``i`` as bitmasks; ``covers`` is the transitive reduction as (lower,
    upper) index pairs.
    """

    __slots__ = ("elements", "down", "up", "covers", "n", "full", "_index",
                 "_comp", "_lengths")

    def __init__(self, elements: tuple[str, ...], down: tuple[int, ...]):
        self.elements = elements
        self.n = len(elements)
        self.full = (1 << self.n) - 1
        self.down = down
        self._index = {e: i for i, e in enumerate(elements)}
        up = [0] * self.n
        for j in range(self.n):
            for i in bits(down[j]):
                up[i] |= 1 << j
        self.up = tuple(up)
        self._comp = tuple(down[i] | up[i] for i in range(self.n))
        covers = []
        for j in range(self.n):
            below = down[j] & ~(1 << j)
            for i in bits(below):
                between = below & self.up[i] & ~(1 << i)
                if not between:
                    covers.append((i, j))
        self.covers = tuple(sorted(covers))
        lengths = [0] * self.n
        for j in sorted(range(self.n), key=lambda j: down[j].bit_count()):
            strict = down[j] & ~(1 << j)
            lengths[j] = max((lengths[i] + 1 for i in bits(strict)), default=0)
        self._lengths = tuple(lengths)

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.down == other.down)

    def __hash__(self):
        return hash((self.elements, self.down))

    def __repr__(self):
        rels = ", ".join(f"{self.elements[i]}<{self.elements[j]}"
                         for i, j in self.covers)
        return f"Poset({list(self.elements)!r}, [{rels}])"

    # -- element and subset handling

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElement(f"unknown element {element!r}") from None

    def subset(self, elements: Iterable[str]) -> int:
        """Bitmask of the given element identifiers."""
        mask = 0
        for e in elements:
            mask |= 1 << self.index(e)
        return mask

    def labels(self, mask: int) -> tuple[str, ...]:
        """Identifiers of the subset ``mask``, in element-index order."""
        self.check_subset(mask)
        return tuple(self.elements[i] for i in bits(mask))

    def check_subset(self, mask: int) -> int:
        if mask & ~self.full:
            raise UnknownElement(f"mask {mask:#x} has bits outside the poset")
        return mask

    def le(self, i: int, j: int) -> bool:
        """Order test on element indices: i <= j."""
        return bool(self.down[j] >> i & 1)

    def comparable(self, i: int, j: int) -> bool:
        return bool(self._comp[i] >> j & 1)

    # -- family and cofamily operators

    def down_set(self, mask: int) -> int:
        """Elements below some member of ``mask`` (the generated family)."""
        self.check_subset(mask)
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def up_set(self, mask: int) -> int:
        """Elements above some member of ``mask`` (the generated cofamily)."""
        self.check_subset(mask)
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def not_below(self, mask: int) -> int:
        """Elements below no member of ``mask``; complement of down_set."""
        return self.full & ~self.down_set(mask)

    def not_above(self, mask: int) -> int:
        """Elements above no member of ``mask``; complement of up_set."""
        return self.full & ~self.up_set(mask)

    def is_downward_closed(self, mask: int) -> bool:
        """Thomason test in the finite noetherian model."""
        return self.down_set(mask) == mask

    def is_upward_closed(self, mask: int) -> bool:
        return self.up_set(mask) == mask

    def maximal_elements(self) -> int:
        return self.subset_of_indices(i for i in range(self.n)
                                      if self.up[i] == 1 << i)

    def minimal_elements(self) -> int:
        return self.subset_of_indices(i for i in range(self.n)
                                      if self.down[i] == 1 << i)

    @staticmethod
    def subset_of_indices(indices: Iterable[int]) -> int:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return mask

    # -- chains

    def is_chain(self, mask: int) -> bool:
        """True when the members of ``mask`` are pairwise comparable."""
        self.check_subset(mask)
        rest = mask
        for i in bits(mask):
            rest &= ~(1 << i)
            if rest & ~self._comp[i]:
                return False
        return True

    def chains(self, max_size: int | None = None,
               include_empty: bool = False) -> Iterator[int]:
        """Enumerate every chain exactly once, as bitmasks.

        Chains grow by ascending element index, so the order is the
        lexicographic order of the sorted index sequences.  The empty chain
        is emitted first only on request.
        """
        if include_empty:
            yield 0
        if max_size is not None and max_size <= 0:
            return
        n, comp = self.n, self._comp

        def extend(mask: int, allowed: int, size: int) -> Iterator[int]:
            for j in bits(allowed):
                grown = mask | (1 << j)
                yield grown
                if max_size is None or size + 1 < max_size:
                    higher = allowed & comp[j] & ~((1 << (j + 1)) - 1)
                    yield from extend(grown, higher, size + 1)

        yield from extend(0, self.full, 0)

    def dimension(self) -> int:
        """Largest chain cardinality minus one; -1 for the empty poset."""
        return max(self._lengths, default=-1) if self.n else -1

    def length(self, i: int) -> int:
        """Largest dimension of a chain whose maximum is element ``i``."""
        if not 0 <= i < self.n:
            raise UnknownElement(f"no element with index {i}")
        return self._lengths[i]


def build_poset(elements: Iterable[str],
                relations: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from identifiers and strict relations ``a < b``.

    The stored order is the reflexive-transitive closure of the relations;
    a closure violating antisymmetry raises CycleDetected.
    """
    elements = tuple(elements)
    index: dict[str, int] = {}
    for i, e in enumerate(elements):
        if e in index:
            raise DuplicateElement(f"duplicate element {e!r}")
        index[e] = i
    n = len(elements)
    below = [0] * n
    for a, b in relations:
        for e in (a, b):
            if e not in index:
                raise UnknownElement(f"unknown element {e!r} in relation")
        below[index[b]] |= 1 << index[a]
    changed = True
    while changed:
        changed = False
        for j in range(n):
            acc = below[j]
            for i in bits(below[j]):
                acc |= below[i]
            if acc != below[j]:
                below[j] = acc
                changed = True
    for j in range(n):
        if below[j] >> j & 1:
            raise CycleDetected(
                f"element {elements[j]!r} lies on an order cycle")
    down = tuple(below[j] | (1 << j) for j in range(n))
    return Poset(elements, down)
