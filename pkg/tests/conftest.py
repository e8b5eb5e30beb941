from __future__ import annotations

import pytest
from hypothesis import settings

from threadsets.poset import Poset, build_poset

settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")


@pytest.fixture
def diamond() -> Poset:
    return build_poset(["t", "a", "b", "m"],
                       [("a", "t"), ("b", "t"), ("m", "a"), ("m", "b")])


@pytest.fixture
def star2() -> Poset:
    return build_poset(["t", "a", "b"], [("a", "t"), ("b", "t")])


@pytest.fixture
def chain2() -> Poset:
    return build_poset(["0", "1", "2"], [("0", "1"), ("1", "2")])


@pytest.fixture
def chain1() -> Poset:
    return build_poset(["0", "1"], [("0", "1")])


@pytest.fixture
def antichain3() -> Poset:
    return build_poset(["p", "q", "r"], [])


@pytest.fixture
def two_chains() -> Poset:
    """p1 > p2 and q1 > q2 with no other comparabilities."""
    return build_poset(["p1", "p2", "q1", "q2"], [("p2", "p1"), ("q2", "q1")])
