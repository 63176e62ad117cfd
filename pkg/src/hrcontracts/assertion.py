"""Assertions: sets of runs over an alphabet.

Members are stored as an int bitmask keyed by universe index, so equality is
canonical and the boolean operations are native int operations.  Binary
operations first lift both sides to the union of their alphabets.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernels
from .alphabet import Alphabet, Universe
from .errors import AlphabetError, AlphabetMismatch


@dataclass(frozen=True)
class Assertion:
    alphabet: Alphabet
    mask: int = 0

    def __post_init__(self):
        self.alphabet.check_size()
        if self.mask < 0 or self.mask >> self.alphabet.size:
            raise ValueError("mask has bits outside the universe")

    # -- construction --------------------------------------------------------

    @classmethod
    def empty(cls, alphabet):
        return cls(alphabet, 0)

    @classmethod
    def full(cls, alphabet):
        alphabet.check_size()
        return cls(alphabet, (1 << alphabet.size) - 1)

    @classmethod
    def from_runs(cls, alphabet, runs):
        mask = 0
        for r in runs:
            if not hasattr(r, "keys"):
                raise TypeError(f"not a run: {r!r}")
            mask |= 1 << alphabet.index_of(alphabet.make_run(r))
        return cls(alphabet, mask)

    @classmethod
    def from_predicate(cls, alphabet, pred):
        mask = 0
        for i, run in enumerate(Universe(alphabet)):
            if pred(run):
                mask |= 1 << i
        return cls(alphabet, mask)

    # -- queries ---------------------------------------------------------------

    @property
    def universe_mask(self):
        return (1 << self.alphabet.size) - 1

    def is_empty(self):
        return self.mask == 0

    def is_full(self):
        return self.mask == self.universe_mask

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, run):
        return bool(self.mask >> self.alphabet.index_of(self.alphabet.make_run(run)) & 1)

    def indices(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def runs(self):
        """Member runs in universe order."""
        for i in self.indices():
            yield self.alphabet.run_at(i)

    def __iter__(self):
        return self.runs()

    def __repr__(self):
        return f"Assertion({list(self.alphabet.names)}, {len(self)} runs)"

    # -- operators -------------------------------------------------------------

    def __invert__(self):
        return complement(self)

    def __and__(self, other):
        return intersect(self, other)

    def __or__(self, other):
        return union(self, other)

    def __le__(self, other):
        return is_subset(self, other)

    def __ge__(self, other):
        return is_subset(other, self)


def lift(assertion, target):
    """Cylindrical extension of ``assertion`` to the ``target`` alphabet."""
    src = assertion.alphabet
    if src == target:
        return assertion
    for p in src.ports:
        if p.name not in target:
            raise AlphabetError(f"target alphabet is missing port {p.name!r}")
        if target.port(p.name).domain != p.domain:
            raise AlphabetMismatch(f"port {p.name}: domain mismatch")
    if src.ports and src.trace_length != target.trace_length:
        raise AlphabetMismatch(
            f"trace lengths differ: {src.trace_length} vs {target.trace_length}")
    target.check_size()
    placement = tuple(target.axis(n) for n in src.names)
    mask = kernels.extend(assertion.mask, src.radices, target.radices, placement)
    return Assertion(target, mask)


def equalize(*assertions):
    """Lift all assertions to the union of their alphabets."""
    alpha = assertions[0].alphabet
    for b in assertions[1:]:
        alpha = alpha.union(b.alphabet)
    return [lift(b, alpha) for b in assertions]


def complement(b):
    return Assertion(b.alphabet, b.mask ^ b.universe_mask)


def intersect(b1, b2):
    x, y = equalize(b1, b2)
    return Assertion(x.alphabet, x.mask & y.mask)


def union(b1, b2):
    x, y = equalize(b1, b2)
    return Assertion(x.alphabet, x.mask | y.mask)


def _eliminate(b, p, universal):
    if p not in b.alphabet:
        return b
    a = b.alphabet
    axis = a.axis(p)
    mask = kernels.quantify(b.mask, a.radices, axis, universal)
    return Assertion(a.without([p]), mask)


def forall_eliminate(b, p):
    """Runs (over the alphabet minus ``p``) all of whose ``p``-extensions lie in ``b``."""
    return _eliminate(b, p, True)


def exists_eliminate(b, p):
    """Runs (over the alphabet minus ``p``) some ``p``-extension of which lies in ``b``."""
    return _eliminate(b, p, False)


def forall_eliminate_all(b, ports):
    for p in sorted(ports):
        b = forall_eliminate(b, p)
    return b


def exists_eliminate_all(b, ports):
    for p in sorted(ports):
        b = exists_eliminate(b, p)
    return b


def is_subset(b1, b2):
    x, y = equalize(b1, b2)
    return x.mask & ~y.mask == 0


def projection(b, ports):
    """Existential projection of ``b`` onto ``ports`` (an assertion over them)."""
    a = b.alphabet
    ports = set(ports)
    for n in ports:
        a.axis(n)
    keep = tuple(k for k, n in enumerate(a.names) if n in ports)
    mask = kernels.project(b.mask, a.radices, keep)
    return Assertion(a.restrict(ports), mask)


def is_receptive(b, ports):
    """True iff every history on ``ports`` is offered by some run of ``b``."""
    return projection(b, ports).is_full()


def receptiveness_witness(b, ports):
    """A run over ``ports`` that ``b`` refuses, or None when receptive."""
    proj = projection(b, ports)
    missing = complement(proj)
    for run in missing.runs():
        return run
    return None
