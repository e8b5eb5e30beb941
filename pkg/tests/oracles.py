"""Independent brute-force oracles used to pin expected values.

Everything here works extensionally from the order relation alone:
subsets are enumerated, chains are filtered by pairwise comparability,
thread existence is decided by searching raw product sequences.  None of
it reuses the generator-based or recursive code paths under test.
"""

from __future__ import annotations

from itertools import combinations, product

from threadsets.poset import Poset, bits


def brute_chains(P: Poset, include_empty: bool = False) -> set[int]:
    out = set()
    for size in range(0 if include_empty else 1, P.n + 1):
        for members in combinations(range(P.n), size):
            if all(P.comparable(i, j) for i, j in combinations(members, 2)):
                out.add(sum(1 << i for i in members))
    return out


def brute_has_thread(P: Poset, parts) -> bool:
    pools = [list(bits(part)) for part in parts]
    for seq in product(*pools):
        if all(P.le(seq[i + 1], seq[i]) for i in range(len(seq) - 1)):
            return True
    return False


def brute_thread_set_members(P: Poset, parts) -> set[int]:
    """All chains T such that (T & A_1, ..., T & A_k) admits a thread."""
    out = set()
    for chain in brute_chains(P):
        if brute_has_thread(P, tuple(chain & part for part in parts)):
            out.add(chain)
    return out


def minimal_members(members: set[int]) -> set[int]:
    return {c for c in members
            if not any(o != c and o & c == o for o in members)}


def brute_family_members(P: Poset, generators) -> set[int]:
    return {chain for chain in brute_chains(P)
            if any(g & chain == g for g in generators)}


def brute_compose_members(P: Poset, U_members: set[int],
                          V_members: set[int]) -> set[int]:
    """Definitional product: unions of compatible member pairs."""
    out = set()
    for c in U_members:
        for d in V_members:
            if all(P.le(j, i) for i in bits(c) for j in bits(d)):
                out.add(c | d)
    return out


def brute_dimension(P: Poset) -> int:
    return max((c.bit_count() for c in brute_chains(P)), default=0) - 1


def brute_length(P: Poset, p: int) -> int:
    best = 0
    for chain in brute_chains(P):
        if chain >> p & 1 and all(P.le(i, p) for i in bits(chain)):
            best = max(best, chain.bit_count() - 1)
    return best


def brute_thread_prune(P: Poset, parts) -> tuple:
    """Per-element full-thread membership, straight from the definition."""
    out = []
    for i, part in enumerate(parts):
        kept = 0
        for a in bits(part):
            pinned = parts[:i] + ((1 << a),) + parts[i + 1:]
            if brute_has_thread(P, pinned):
                kept |= 1 << a
        out.append(kept)
    return tuple(out)
