"""Ports, alphabets, runs and run universes.

A run assigns to every port of an alphabet a history of ``trace_length``
values.  Universes are enumerated lexicographically by port declaration
order, then by step, then by domain order; the position of a run in that
enumeration is its *index*, which is what the bitset representation of
assertions is keyed on.
"""
from __future__ import annotations

import itertools
import re
from collections.abc import Mapping
from dataclasses import dataclass
from math import prod

from . import config
from .errors import AlphabetError, AlphabetMismatch, UniverseTooLarge

BOOL = (False, True)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class PortDecl:
    name: str
    domain: tuple = BOOL

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME.match(self.name):
            raise AlphabetError(f"invalid port name {self.name!r}")
        dom = tuple(self.domain)
        object.__setattr__(self, "domain", dom)
        if not dom:
            raise AlphabetError(f"port {self.name}: empty domain")
        if len(set(dom)) != len(dom):
            raise AlphabetError(f"port {self.name}: duplicate values in domain")

    @property
    def is_bool(self):
        return self.domain == BOOL


@dataclass(frozen=True)
class Alphabet:
    ports: tuple
    trace_length: int = 1

    def __post_init__(self):
        ports = tuple(self.ports)
        object.__setattr__(self, "ports", ports)
        if not isinstance(self.trace_length, int) or self.trace_length < 1:
            raise AlphabetError(f"trace length must be >= 1, got {self.trace_length!r}")
        seen = set()
        for p in ports:
            if not isinstance(p, PortDecl):
                raise AlphabetError(f"not a port declaration: {p!r}")
            if p.name in seen:
                raise AlphabetError(f"duplicate port name {p.name!r}")
            seen.add(p.name)
        object.__setattr__(self, "_index", {p.name: k for k, p in enumerate(ports)})

    # -- basic queries -----------------------------------------------------

    @property
    def names(self):
        return tuple(p.name for p in self.ports)

    @property
    def radices(self):
        """Per-port number of distinct histories, ``|domain| ** L``."""
        return tuple(len(p.domain) ** self.trace_length for p in self.ports)

    @property
    def size(self):
        return prod(self.radices)

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.ports)

    def axis(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"unknown port {name!r}") from None

    def port(self, name):
        return self.ports[self.axis(name)]

    def check_size(self, cap=None):
        cap = config.max_universe() if cap is None else cap
        if self.size > cap:
            raise UniverseTooLarge(self.size, cap)

    # -- derived alphabets ---------------------------------------------------

    def restrict(self, names):
        names = set(names)
        for n in names:
            self.axis(n)
        return Alphabet(tuple(p for p in self.ports if p.name in names), self.trace_length)

    def without(self, names):
        names = set(names)
        return Alphabet(tuple(p for p in self.ports if p.name not in names), self.trace_length)

    def union(self, other):
        """This alphabet's ports followed by the new ports of ``other``."""
        length = _joint_length(self, other)
        ports = list(self.ports)
        for p in other.ports:
            if p.name in self._index:
                mine = self.ports[self._index[p.name]]
                if mine.domain != p.domain:
                    raise AlphabetMismatch(
                        f"port {p.name}: domain {list(mine.domain)} vs {list(p.domain)}")
            else:
                ports.append(p)
        return Alphabet(tuple(ports), length)

    def is_subalphabet(self, other):
        """True when every port here appears in ``other`` with the same domain."""
        if self.ports and other.ports and self.trace_length != other.trace_length:
            return False
        return all(p.name in other and other.port(p.name).domain == p.domain
                   for p in self.ports)

    # -- run encoding --------------------------------------------------------

    def history_index(self, name, history):
        port = self.port(name)
        history = tuple(history)
        if len(history) != self.trace_length:
            raise AlphabetError(
                f"port {name}: history of length {len(history)}, expected {self.trace_length}")
        idx = 0
        n = len(port.domain)
        for v in history:
            try:
                idx = idx * n + port.domain.index(v)
            except ValueError:
                raise AlphabetError(f"port {name}: value {v!r} not in domain") from None
        return idx

    def history_at(self, name, idx):
        port = self.port(name)
        n = len(port.domain)
        vals = []
        for _ in range(self.trace_length):
            idx, d = divmod(idx, n)
            vals.append(port.domain[d])
        return tuple(reversed(vals))

    def index_of(self, run):
        """Position of ``run`` in the universe enumeration."""
        if set(run.keys()) != set(self.names):
            raise AlphabetError(
                f"run over {sorted(run.keys())} does not match alphabet {list(self.names)}")
        idx = 0
        for p, r in zip(self.ports, self.radices):
            idx = idx * r + self.history_index(p.name, run[p.name])
        return idx

    def run_at(self, idx):
        digits = []
        for r in reversed(self.radices):
            idx, d = divmod(idx, r)
            digits.append(d)
        digits.reverse()
        return Run({p.name: self.history_at(p.name, d) for p, d in zip(self.ports, digits)})

    def make_run(self, mapping):
        """Validate a ``{port: history}`` mapping, accepting scalars when L = 1."""
        hist = {}
        for name, h in mapping.items():
            if not isinstance(h, (tuple, list)):
                h = (h,)
            hist[name] = tuple(h)
        run = Run(hist)
        self.index_of(run)
        return run


def _joint_length(a, b):
    if not a.ports:
        return b.trace_length
    if not b.ports:
        return a.trace_length
    if a.trace_length != b.trace_length:
        raise AlphabetMismatch(f"trace lengths differ: {a.trace_length} vs {b.trace_length}")
    return a.trace_length


class Run(Mapping):
    """Immutable ``port name -> history tuple`` mapping."""

    __slots__ = ("_items", "_map")

    def __init__(self, histories=()):
        items = tuple(sorted((k, tuple(v)) for k, v in dict(histories).items()))
        object.__setattr__(self, "_items", items)
        object.__setattr__(self, "_map", dict(items))

    def __setattr__(self, key, value):
        raise AttributeError("Run is immutable")

    def __getitem__(self, key):
        return self._map[key]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return hash(self._items)

    def __eq__(self, other):
        if isinstance(other, Run):
            return self._items == other._items
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{k}={list(v)}" for k, v in self._items)
        return f"Run({body})"

    def to_json(self):
        return {k: list(v) for k, v in self._items}


@dataclass(frozen=True)
class Universe:
    """All runs of an alphabet, enumerated lazily in index order."""

    alphabet: Alphabet

    def __len__(self):
        return self.alphabet.size

    def __iter__(self):
        a = self.alphabet
        per_port = [[a.history_at(p.name, d) for d in range(r)]
                    for p, r in zip(a.ports, a.radices)]
        for combo in itertools.product(*per_port):
            yield Run(dict(zip(a.names, combo)))

    @property
    def runs(self):
        return iter(self)


def build_alphabet(decls, trace_length=1):
    if not decls:
        raise AlphabetError("an alphabet needs at least one port")
    return Alphabet(tuple(decls), trace_length)


def enumerate_universe(alphabet, cap=None):
    alphabet.check_size(cap)
    return Universe(alphabet)


def project_run(run, ports):
    ports = set(ports)
    missing = ports - set(run.keys())
    if missing:
        raise AlphabetError(f"unknown port(s) {sorted(missing)}")
    return Run({k: v for k, v in run.items() if k in ports})
