"""Reduction calculus on tuples of prime subsets.

A tuple ``(A_1, ..., A_k)`` of subsets names the iterated localization
``L_{A_1} ... L_{A_k}``.  Tuples are plain Python tuples of bitmasks over a
fixed poset, with k >= 1.  The reduction operators prune parts down to the
elements that sit on descending chains through the other parts and drop
redundant adjacent parts; their composite ``canonical`` retracts every
tuple onto a collapsed concatenated representative with the same threads.
"""

from __future__ import annotations

from .errors import NotUpwardClosed
from .poset import Poset, bits

SubsetTuple = tuple  # tuple[int, ...] over a fixed Poset, k >= 1

#: Canonical representative of the trivial (zero) localization.
ZERO_TUPLE: SubsetTuple = (0,)


def _check(parts: SubsetTuple) -> SubsetTuple:
    if not parts:
        raise ValueError("subset tuples have at least one part")
    return parts


def prune_upward(P: Poset, parts: SubsetTuple) -> SubsetTuple:
    """Retract onto upward concatenated tuples.

    Working left to right, each part keeps only the elements lying below a
    survivor of the previous part, i.e. the elements reachable by a
    descending chain through all earlier parts.  Fixed points are exactly
    the upward concatenated tuples.
    """
    _check(parts)
    out = [parts[0]]
    for part in parts[1:]:
        out.append(part & P.down_set(out[-1]))
    return tuple(out)


def prune_downward(P: Poset, parts: SubsetTuple) -> SubsetTuple:
    """Retract onto downward concatenated tuples; dual to prune_upward."""
    _check(parts)
    out = [parts[-1]]
    for part in reversed(parts[:-1]):
        out.append(part & P.up_set(out[-1]))
    out.reverse()
    return tuple(out)


def prune_to_threads(P: Poset, parts: SubsetTuple) -> SubsetTuple:
    """Keep in each part exactly the elements lying on a full thread.

    Computed as prune_downward(prune_upward(t)); the two operators commute
    and agree with the direct per-element search, which is cross-checked
    here when assertions are enabled.
    """
    result = prune_downward(P, prune_upward(P, parts))
    if __debug__:
        assert result == prune_upward(P, prune_downward(P, parts))
        assert result == prune_to_threads_direct(P, parts)
    return result


def prune_to_threads_direct(P: Poset, parts: SubsetTuple) -> SubsetTuple:
    """Direct form of prune_to_threads: per-element search for a full thread.

    Quadratic in the tuple; kept as an independent cross-check of the
    recursive computation.
    """
    _check(parts)
    out = []
    for i, part in enumerate(parts):
        kept = 0
        for a in bits(part):
            pinned = parts[:i] + (1 << a,) + parts[i + 1:]
            if _has_thread(P, pinned):
                kept |= 1 << a
        out.append(kept)
    return tuple(out)


def _has_thread(P: Poset, parts: SubsetTuple) -> bool:
    reachable = parts[0]
    for part in parts[1:]:
        reachable = part & P.down_set(reachable)
        if not reachable:
            return False
    return bool(reachable)


def collapse(parts: SubsetTuple) -> SubsetTuple:
    """Drop adjacent parts that contain a neighbour until collapsed.

    Scans left to right and applies the first applicable removal (always of
    the containing part); the result is independent of the removal order,
    so the fixed scan only pins down the intermediate states.
    """
    out = list(_check(parts))
    i = 0
    while i < len(out) - 1:
        a, b = out[i], out[i + 1]
        if a | b == b:        # a subset of b: drop the superset b
            del out[i + 1]
        elif b | a == a:      # b subset of a: drop a
            del out[i]
        else:
            i += 1
            continue
        # earlier pairs were not applicable; only the new adjacency at i-1
        # can have become applicable
        if i:
            i -= 1
    return tuple(out)


def collapse_results_all_orders(parts: SubsetTuple) -> frozenset[SubsetTuple]:
    """Collapsed tuples reachable by every removal order (confluence probe)."""
    seen: set[SubsetTuple] = set()
    results: set[SubsetTuple] = set()
    stack = [tuple(_check(parts))]
    while stack:
        t = stack.pop()
        if t in seen:
            continue
        seen.add(t)
        moves = []
        for i in range(len(t) - 1):
            a, b = t[i], t[i + 1]
            if a | b == b:
                moves.append(t[:i + 1] + t[i + 2:])
            if b | a == a:
                moves.append(t[:i] + t[i + 1:])
        if moves:
            stack.extend(moves)
        else:
            results.add(t)
    return frozenset(results)


def canonical(P: Poset, parts: SubsetTuple) -> SubsetTuple:
    """Collapsed concatenated canonical form of a tuple.

    Idempotent; a tuple admitting no thread normalizes to the unique zero
    representative ``(0,)``.
    """
    return collapse(prune_to_threads(P, parts))


def is_zero(parts: SubsetTuple) -> bool:
    return parts == ZERO_TUPLE


def is_upward_concatenated(P: Poset, parts: SubsetTuple) -> bool:
    _check(parts)
    return all(parts[i + 1] & ~P.down_set(parts[i]) == 0
               for i in range(len(parts) - 1))


def is_downward_concatenated(P: Poset, parts: SubsetTuple) -> bool:
    _check(parts)
    return all(parts[i] & ~P.up_set(parts[i + 1]) == 0
               for i in range(len(parts) - 1))


def is_concatenated(P: Poset, parts: SubsetTuple) -> bool:
    return is_upward_concatenated(P, parts) and is_downward_concatenated(P, parts)


def is_collapsed(parts: SubsetTuple) -> bool:
    """No adjacent containments in either direction."""
    _check(parts)
    for i in range(len(parts) - 1):
        a, b = parts[i], parts[i + 1]
        if a | b == b or b | a == a:
            return False
    return True


def restrict(P: Poset, parts: SubsetTuple, zone: int) -> SubsetTuple:
    """Intersect every part with an upward closed subset ``zone``."""
    _check(parts)
    P.check_subset(zone)
    if not P.is_upward_closed(zone):
        raise NotUpwardClosed(
            f"restriction zone {{{', '.join(P.labels(zone))}}} is not upward closed")
    return tuple(part & zone for part in parts)
