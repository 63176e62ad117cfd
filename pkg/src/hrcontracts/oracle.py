"""Brute-force reference semantics.

Everything here works on explicit ``frozenset``s of :class:`Run` objects and
enumerates universes itself with :mod:`itertools`; nothing goes through the
bitset engine.  It is slow on purpose and only meant for desk-scale
alphabets, as an independent check of the engine.

A *denotation* is a pair ``(alphabet, frozenset_of_runs)``.
"""
from __future__ import annotations

import itertools

from .alphabet import Alphabet, Run


def universe(alphabet):
    hist = [list(itertools.product(p.domain, repeat=alphabet.trace_length))
            for p in alphabet.ports]
    names = [p.name for p in alphabet.ports]
    return [Run(dict(zip(names, combo))) for combo in itertools.product(*hist)]


def restrict(run, names):
    return Run({k: v for k, v in run.items() if k in names})


def union_alphabet(*alphabets):
    ports = []
    seen = {}
    length = None
    for a in alphabets:
        if a.ports:
            if length is not None and length != a.trace_length:
                raise ValueError("trace length mismatch")
            length = a.trace_length
        for p in a.ports:
            if p.name in seen:
                if seen[p.name] != p.domain:
                    raise ValueError(f"domain mismatch on {p.name}")
                continue
            seen[p.name] = p.domain
            ports.append(p)
    return Alphabet(tuple(ports), length or alphabets[0].trace_length)


def lift(den, target):
    alpha, runs = den
    names = set(alpha.names)
    return target, frozenset(r for r in universe(target) if restrict(r, names) in runs)


def equalize(*dens):
    target = union_alphabet(*(d[0] for d in dens))
    return [lift(d, target) for d in dens]


def same(d1, d2):
    x, y = equalize(d1, d2)
    return x[1] == y[1]


def complement(den):
    alpha, runs = den
    return alpha, frozenset(universe(alpha)) - runs


def intersect(d1, d2):
    (a, x), (_, y) = equalize(d1, d2)
    return a, x & y


def union(d1, d2):
    (a, x), (_, y) = equalize(d1, d2)
    return a, x | y


def _extensions(run, port, alphabet):
    decl = alphabet.port(port)
    for h in itertools.product(decl.domain, repeat=alphabet.trace_length):
        yield Run({**dict(run), port: h})


def forall(den, port):
    alpha, runs = den
    if port not in alpha:
        return den
    small = alpha.without([port])
    return small, frozenset(r for r in universe(small)
                            if all(e in runs for e in _extensions(r, port, alpha)))


def exists(den, port):
    alpha, runs = den
    if port not in alpha:
        return den
    small = alpha.without([port])
    return small, frozenset(r for r in universe(small)
                            if any(e in runs for e in _extensions(r, port, alpha)))


def subset(d1, d2):
    (_, x), (_, y) = equalize(d1, d2)
    return x <= y


def receptive(den, ports):
    alpha, runs = den
    ports = set(ports)
    offered = {restrict(r, ports) for r in runs}
    return all(r in offered for r in universe(alpha.restrict(ports)))


# -- contracts: (assumption_den, promise_den) over a shared alphabet ---------

def contract(a_den, g_den):
    a, g = equalize(a_den, g_den)
    return a, g


def canonical(c):
    a, g = c
    return a, union(g, complement(a))


def satisfies(m, c):
    a, g = c
    (_, mm), (_, aa), (_, gg) = equalize(m, a, g)
    return (mm & aa) <= gg


def dominates(c1, c2):
    a1, g1 = c1
    a2, g2 = c2
    return subset(a2, a1) and subset(g1, g2)


def same_contract(c1, c2):
    (a1, g1), (a2, g2) = c1, c2
    return same(a1, a2) and same(g1, g2)


def meet(c1, c2):
    return union(c1[0], c2[0]), intersect(c1[1], c2[1])


def join(c1, c2):
    return intersect(c1[0], c2[0]), union(c1[1], c2[1])


def compose(c1, c2):
    c1, c2 = canonical(c1), canonical(c2)
    g = intersect(c1[1], c2[1])
    a = union(intersect(c1[0], c2[0]), complement(g))
    a, g = equalize(a, g)
    return a, g


def eliminate(c, ports):
    a, g = canonical(c)
    for p in sorted(ports):
        a = forall(a, p)
        g = exists(g, p)
    return a, g


def fuse(contracts, ports):
    terms = []
    n = len(contracts)
    for size in range(1, n + 1):
        for subset_ in itertools.combinations(range(n), size):
            acc = canonical(contracts[subset_[0]])
            for j in subset_[1:]:
                acc = compose(acc, contracts[j])
            terms.append(eliminate(acc, ports))
    result = terms[0]
    for t in terms[1:]:
        result = meet(result, t)
    return result
