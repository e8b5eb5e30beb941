from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (brute_chains, brute_compose_members,
                     brute_family_members, brute_thread_set_members,
                     minimal_members)
from test_poset import random_posets
from test_tuples import poset_and_tuple
from threadsets.errors import EmptyChain, NotAChain
from threadsets.families import (EMPTY_FAMILY, ChainFamily, chains_meeting,
                                 compose, compose_tuple, family, principal,
                                 singleton_tuple, thread_sets, threads)
from threadsets.tuples import ZERO_TUPLE, canonical
from threadsets.verify import all_posets


# -- threads

def test_threads_forced_chain(chain1):
    t = (chain1.subset(["1"]), chain1.subset(["0"]))
    found = list(threads(chain1, t))
    assert [th.labels(chain1) for th in found] == [("1", "0")]
    assert found[0].support == chain1.subset(["0", "1"])


def test_threads_none_when_increasing(chain1):
    t = (chain1.subset(["0"]), chain1.subset(["1"]))
    assert list(threads(chain1, t)) == []


def test_threads_allow_repeats(chain1):
    t = (chain1.subset(["1"]), chain1.subset(["1"]), chain1.subset(["0"]))
    seqs = [th.labels(chain1) for th in threads(chain1, t)]
    assert ("1", "1", "0") in seqs
    th = next(th for th in threads(chain1, t)
              if th.labels(chain1) == ("1", "1", "0"))
    assert th.support == chain1.subset(["0", "1"])


def test_threads_deterministic(diamond):
    t = (diamond.full, diamond.full)
    assert list(threads(diamond, t)) == list(threads(diamond, t))


# -- thread_sets

def test_thread_sets_remark_pair(two_chains):
    triple = (two_chains.subset(["p1", "q1"]), two_chains.subset(["p1", "q2"]),
              two_chains.subset(["p2", "q2"]))
    pair = (two_chains.subset(["p1", "q1"]), two_chains.subset(["p2", "q2"]))
    expected = frozenset({two_chains.subset(["p1", "p2"]),
                          two_chains.subset(["q1", "q2"])})
    assert thread_sets(two_chains, triple).generators == expected
    assert thread_sets(two_chains, pair).generators == expected
    assert thread_sets(two_chains, triple) == thread_sets(two_chains, pair)


def test_thread_sets_antichain_disjoint(antichain3):
    t = (antichain3.subset(["p"]), antichain3.subset(["q"]))
    assert thread_sets(antichain3, t) == EMPTY_FAMILY


def test_thread_sets_one_uple(antichain3):
    F = thread_sets(antichain3, (antichain3.subset(["p", "q"]),))
    assert F.generators == frozenset({antichain3.subset(["p"]),
                                      antichain3.subset(["q"])})


def test_thread_sets_match_brute_force_small():
    for P in all_posets(3):
        space = 1 << P.n
        for a in range(space):
            for b in range(space):
                F = thread_sets(P, (a, b))
                members = brute_thread_set_members(P, (a, b))
                assert F.generators == frozenset(minimal_members(members))


@settings(max_examples=100, deadline=None)
@given(poset_and_tuple(max_n=5, max_k=3))
def test_thread_sets_match_brute_force_random(pt):
    P, t = pt
    members = brute_thread_set_members(P, t)
    F = thread_sets(P, t)
    assert F.generators == frozenset(minimal_members(members))
    assert brute_family_members(P, F.generators) == members


# -- ChainFamily representation

def test_family_minimizes_and_validates(diamond):
    F = family(diamond, [diamond.subset(["t", "a"]), diamond.subset(["a"])])
    assert F.generators == frozenset({diamond.subset(["a"])})
    with pytest.raises(NotAChain):
        family(diamond, [diamond.subset(["a", "b"])])
    with pytest.raises(EmptyChain):
        family(diamond, [0])


def test_membership_upward_closed(diamond):
    F = principal(diamond, diamond.subset(["t", "m"]))
    assert F.member(diamond.subset(["t", "a", "m"]))
    assert not F.member(diamond.subset(["t", "a"]))
    assert not EMPTY_FAMILY.member(diamond.subset(["t"]))


def test_family_equality(diamond):
    A = diamond.subset(["a", "b"])
    assert chains_meeting(diamond, A) == chains_meeting(diamond, A)
    assert chains_meeting(diamond, A) != EMPTY_FAMILY


def test_is_subfamily(diamond):
    small = principal(diamond, diamond.subset(["t", "m"]))
    big = chains_meeting(diamond, diamond.subset(["t"]))
    assert small.is_subfamily(big)
    assert not big.is_subfamily(small)
    assert EMPTY_FAMILY.is_subfamily(small)


def test_generators_recoverable_from_membership():
    # stored generators equal the minimal members of the extension
    for P in all_posets(3):
        for a in range(1 << P.n):
            for b in range(1 << P.n):
                F = thread_sets(P, (a, b))
                ext = {c for c in brute_chains(P) if F.member(c)}
                assert frozenset(minimal_members(ext)) == F.generators


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_is_subfamily_matches_extension_random(data):
    P = data.draw(random_posets(max_n=4))
    a = data.draw(st.integers(0, P.full))
    b = data.draw(st.integers(0, P.full))
    F = thread_sets(P, (a, b))
    G = thread_sets(P, (a | b,))
    members_f = {c for c in P.chains() if F.member(c)}
    members_g = {c for c in P.chains() if G.member(c)}
    assert F.is_subfamily(G) == (members_f <= members_g)
    assert G.is_subfamily(F) == (members_g <= members_f)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_membership_upward_closure_random(data):
    P = data.draw(random_posets(max_n=5))
    k = data.draw(st.integers(min_value=1, max_value=3))
    t = tuple(data.draw(st.integers(min_value=0, max_value=P.full))
              for _ in range(k))
    F = thread_sets(P, t)
    for chain in P.chains():
        if F.member(chain):
            for bigger in P.chains():
                if chain | bigger == bigger:
                    assert F.member(bigger)


# -- chains_meeting / principal / singleton_tuple

def test_chains_meeting_trivial(diamond):
    assert chains_meeting(diamond, 0) == EMPTY_FAMILY
    p = diamond.subset(["a"])
    assert chains_meeting(diamond, p).generators == frozenset({p})


def test_chains_meeting_equals_one_uple_thread_sets():
    for n in range(5):
        for P in all_posets(n):
            for a in range(1 << P.n):
                assert chains_meeting(P, a) == thread_sets(P, (a,))


def test_principal_matches_meeting_on_singletons(diamond):
    p = diamond.subset(["a"])
    assert principal(diamond, p) == chains_meeting(diamond, p)


def test_principal_membership(diamond):
    F = principal(diamond, diamond.subset(["t", "m"]))
    assert F.member(diamond.subset(["t", "a", "m"]))


def test_principal_rejects_bad_chains(diamond):
    with pytest.raises(EmptyChain):
        principal(diamond, 0)
    with pytest.raises(NotAChain):
        principal(diamond, diamond.subset(["a", "b"]))


def test_singleton_tuple_chain(chain1):
    C = chain1.subset(["0", "1"])
    assert singleton_tuple(chain1, C) == (chain1.subset(["1"]),
                                          chain1.subset(["0"]))
    assert singleton_tuple(chain1, chain1.subset(["0"])) == (
        chain1.subset(["0"]),)
    with pytest.raises(EmptyChain):
        singleton_tuple(chain1, 0)


def test_singleton_tuple_thread_sets_are_principal():
    for n in range(5):
        for P in all_posets(n):
            for chain in P.chains():
                assert thread_sets(P, singleton_tuple(P, chain)) == principal(
                    P, chain)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_singleton_tuple_principal_random(data):
    P = data.draw(random_posets(max_n=6))
    chains = list(P.chains())
    if not chains:
        return
    chain = data.draw(st.sampled_from(chains))
    assert thread_sets(P, singleton_tuple(P, chain)) == principal(P, chain)


# -- compose

def test_compose_chain_example(chain1):
    U = chains_meeting(chain1, chain1.subset(["1"]))
    V = chains_meeting(chain1, chain1.subset(["0"]))
    assert compose(chain1, U, V).generators == frozenset(
        {chain1.subset(["0", "1"])})


def test_compose_with_empty(diamond):
    U = chains_meeting(diamond, diamond.subset(["t"]))
    assert compose(diamond, U, EMPTY_FAMILY) == EMPTY_FAMILY
    assert compose(diamond, EMPTY_FAMILY, U) == EMPTY_FAMILY


def test_compose_decomposes_thread_sets_small():
    for P in all_posets(3):
        for a in range(1 << P.n):
            for b in range(1 << P.n):
                assert compose_tuple(P, (a, b)) == thread_sets(P, (a, b))


@settings(max_examples=100, deadline=None)
@given(poset_and_tuple(max_n=5, max_k=3))
def test_compose_matches_definitional_product_random(pt):
    # generator composition equals the definitional member-pair product
    P, t = pt
    U = thread_sets(P, t[:1])
    V = thread_sets(P, t[1:]) if len(t) > 1 else chains_meeting(P, t[0])
    got = compose(P, U, V)
    expected = brute_compose_members(P, brute_family_members(P, U.generators),
                                     brute_family_members(P, V.generators))
    assert brute_family_members(P, got.generators) == expected
    assert got.generators == frozenset(minimal_members(expected))


def _small_generator_families(P):
    """Every family with at most two generators over P."""
    chains = list(P.chains())
    fams = [EMPTY_FAMILY]
    fams += [ChainFamily(frozenset((c,))) for c in chains]
    for i, c in enumerate(chains):
        for d in chains[i + 1:]:
            if c & d != c and c & d != d:  # inclusion-incomparable
                fams.append(ChainFamily(frozenset((c, d))))
    return fams


def test_compose_associative_two_generator_families_exhaustive(
        antichain3, star2, chain2, two_chains):
    for P in (antichain3, star2, chain2, two_chains):
        fams = _small_generator_families(P)
        cache = {}

        def prod(U, V):
            key = (U, V)
            if key not in cache:
                cache[key] = compose(P, U, V)
            return cache[key]

        for U in fams:
            for V in fams:
                for W in fams:
                    assert prod(prod(U, V), W) == prod(U, prod(V, W))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_compose_associative_random(data):
    P = data.draw(random_posets(max_n=5))
    fams = [thread_sets(P, (data.draw(st.integers(0, P.full)),
                            data.draw(st.integers(0, P.full))))
            for _ in range(3)]
    U, V, W = fams
    assert compose(P, compose(P, U, V), W) == compose(P, U, compose(P, V, W))


@settings(max_examples=100, deadline=None)
@given(poset_and_tuple(max_n=5, max_k=3))
def test_concatenation_law_random(pt):
    P, t = pt
    F = thread_sets(P, t)
    assert F == compose_tuple(P, t)
    for j in range(1, len(t)):
        assert F == compose(P, thread_sets(P, t[:j]), thread_sets(P, t[j:]))


@settings(max_examples=100, deadline=None)
@given(poset_and_tuple(max_n=5, max_k=3))
def test_canonical_preserves_thread_sets_random(pt):
    P, t = pt
    F = thread_sets(P, t)
    reduced = canonical(P, t)
    assert thread_sets(P, reduced) == F
    assert F.is_empty() == (reduced == ZERO_TUPLE)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_two_part_reduction_shadows_random(data):
    P = data.draw(random_posets(max_n=5))
    a = data.draw(st.integers(0, P.full))
    b = data.draw(st.integers(0, P.full))
    F = thread_sets(P, (a, b))
    assert thread_sets(P, (a & P.up_set(b), b)) == F
    assert thread_sets(P, (a, b & P.down_set(a))) == F
