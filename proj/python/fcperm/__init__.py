"""Fully commutative permutations: RSK, heaps, boolean cores, crowding."""

import json

from ._core import *  # noqa: F401,F403
from ._core import (
    InvariantViolation,
    LimitExceeded,
    Permutation,
    analyze_json,
    poset_json,
    transition_json,
)


def analyze(w):
    """Full report on one permutation, as a dict (same schema as `fcperm --json analyze`)."""
    if not isinstance(w, Permutation):
        w = Permutation.parse(str(w))
    return json.loads(analyze_json(w))


def analyze_transition(v, i):
    if not isinstance(v, Permutation):
        v = Permutation.parse(str(v))
    return json.loads(transition_json(v, i))


def poset(n):
    """FC poset of S_n as {"n", "nodes", "edges": [[lower, upper, i], ...]}."""
    return json.loads(poset_json(n))
