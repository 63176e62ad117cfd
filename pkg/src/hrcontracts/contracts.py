"""Assume/guarantee contracts and their algebra.

Dominance, meet, join and complement act on raw ``(A, G)`` pairs: that is
where they form a Boolean algebra (on canonical forms alone the complement
laws fail, e.g. for ``(R, R)``).  On canonical inputs their results are
canonical.  Composition, elimination and fusion canonicalize their inputs.
Cross-alphabet arguments are lifted to the union alphabet.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import reduce

from . import config
from .assertion import (
    Assertion,
    complement,
    equalize,
    exists_eliminate_all,
    forall_eliminate_all,
    is_subset,
    lift,
)
from .errors import AlphabetError, FusionError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contract:
    assumption: Assertion
    promise: Assertion

    def __post_init__(self):
        if self.assumption.alphabet != self.promise.alphabet:
            raise AlphabetError("assumption and promise are over different alphabets")

    @property
    def alphabet(self):
        return self.assumption.alphabet

    @property
    def canonical(self):
        return self.assumption.mask | self.promise.mask == self.assumption.universe_mask

    def __repr__(self):
        return (f"Contract({list(self.alphabet.names)}, A={len(self.assumption)}, "
                f"G={len(self.promise)}{'' if self.canonical else ', non-canonical'})")


def make_contract(assumption, promise):
    a, g = equalize(assumption, promise)
    return Contract(a, g)


def top(alphabet):
    return Contract(Assertion.empty(alphabet), Assertion.full(alphabet))


def bottom(alphabet):
    return Contract(Assertion.full(alphabet), Assertion.empty(alphabet))


def canonicalize(c):
    if c.canonical:
        return c
    a = c.assumption
    return Contract(a, Assertion(a.alphabet, c.promise.mask | (a.mask ^ a.universe_mask)))


def max_implementation(c):
    return canonicalize(c).promise


def lift_contract(c, alphabet):
    return Contract(lift(c.assumption, alphabet), lift(c.promise, alphabet))


def _equalize(*contracts):
    alpha = contracts[0].alphabet
    for c in contracts[1:]:
        alpha = alpha.union(c.alphabet)
    return [lift_contract(c, alpha) for c in contracts]


def satisfies(m, c):
    """``M |= C`` iff ``M & A <= G``."""
    m, a, g = equalize(m, c.assumption, c.promise)
    return m.mask & a.mask & ~g.mask == 0


def satisfaction_witness(m, c):
    """A run of ``M & A`` outside ``G``, or None when ``M |= C``."""
    m, a, g = equalize(m, c.assumption, c.promise)
    bad = Assertion(m.alphabet, m.mask & a.mask & ~g.mask)
    return next(bad.runs(), None)


def refines(m, m2):
    if set(m.alphabet.names) != set(m2.alphabet.names):
        raise AlphabetError("refinement needs implementations over the same ports")
    return is_subset(m, m2)


def dominates(c, c2):
    """``C <= C'``: weaker assumption and stronger promise."""
    c, c2 = _equalize(c, c2)
    a, g = c.assumption.mask, c.promise.mask
    a2, g2 = c2.assumption.mask, c2.promise.mask
    return a2 & ~a == 0 and g & ~g2 == 0


def equivalent(c, c2):
    """Same canonical denotation once lifted to a common alphabet."""
    c, c2 = _equalize(canonicalize(c), canonicalize(c2))
    return c == c2


def meet(c1, c2):
    c1, c2 = _equalize(c1, c2)
    a = c1.assumption
    return Contract(Assertion(a.alphabet, a.mask | c2.assumption.mask),
                    Assertion(a.alphabet, c1.promise.mask & c2.promise.mask))


def join(c1, c2):
    c1, c2 = _equalize(c1, c2)
    a = c1.assumption
    return Contract(Assertion(a.alphabet, a.mask & c2.assumption.mask),
                    Assertion(a.alphabet, c1.promise.mask | c2.promise.mask))


def complement_contract(c):
    return Contract(complement(c.assumption), complement(c.promise))


def compose(c1, c2):
    """Parallel composition: ``((A1&A2) | ~(G1&G2), G1&G2)``."""
    c1, c2 = _equalize(canonicalize(c1), canonicalize(c2))
    full = c1.assumption.universe_mask
    g = c1.promise.mask & c2.promise.mask
    a = (c1.assumption.mask & c2.assumption.mask) | (g ^ full)
    alpha = c1.alphabet
    return Contract(Assertion(alpha, a), Assertion(alpha, g))


def eliminate(c, ports):
    """Hide ``ports``: universal on the assumption, existential on the promise."""
    c = canonicalize(c)
    ports = set(ports) & set(c.alphabet.names)
    if not ports:
        return c
    return Contract(forall_eliminate_all(c.assumption, ports),
                    exists_eliminate_all(c.promise, ports))


def _nonempty_subsets(n):
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def fusion_terms(contracts, ports):
    """``(J, [compose over J]_Q)`` for every non-empty index subset ``J``."""
    contracts = [canonicalize(c) for c in contracts]
    for subset in _nonempty_subsets(len(contracts)):
        composed = reduce(compose, (contracts[j] for j in subset))
        yield subset, eliminate(composed, ports)


def fuse(contracts, ports=(), cap=None):
    """Meet, over all non-empty sub-families, of their eliminated composition."""
    contracts = list(contracts)
    if not contracts:
        raise FusionError("fusion of an empty family is undefined")
    cap = config.max_fusion() if cap is None else cap
    if len(contracts) > cap:
        raise FusionError(f"fusion of {len(contracts)} contracts exceeds cap of {cap}")
    terms = [t for _, t in fusion_terms(contracts, ports)]
    log.debug("fusing %d contracts over %s: %d terms", len(contracts), sorted(ports), len(terms))
    return reduce(meet, terms)
