"""Denotations of documents: expressions to assertions, definitions to
contracts, profiled contracts and rich components.

An expression denotes the set of runs on which it holds at every step.
"""
from __future__ import annotations

from functools import cached_property

from .._backend import kernels
from ..alphabet import Alphabet
from ..assertion import Assertion
from ..components import RichComponent
from ..contracts import make_contract
from ..errors import SpecError
from ..profiled import Profile, ProfiledContract
from . import ast as A


class _Evaluator:
    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.full = (1 << alphabet.size) - 1
        self._atoms = {}

    def atom(self, port, step, value):
        """Mask of runs whose ``port`` has ``value`` at ``step``."""
        key = (port, step, value)
        if key not in self._atoms:
            a = self.alphabet
            decl = a.port(port)
            n = len(decl.domain)
            L = a.trace_length
            weight = n ** (L - 1 - step)
            vi = decl.domain.index(value)
            single = 0
            for h in range(n ** L):
                if (h // weight) % n == vi:
                    single |= 1 << h
            self._atoms[key] = kernels.extend(single, (n ** L,), a.radices, (a.axis(port),))
        return self._atoms[key]

    def operand_eq(self, left, right, step):
        if isinstance(left, A.Lit):
            left, right = right, left
        if isinstance(left, A.PortRef):
            if isinstance(right, A.Lit):
                return self.atom(left.name, step, right.value)
            dom = self.alphabet.port(left.name).domain
            acc = 0
            for v in dom:
                acc |= self.atom(left.name, step, v) & self.atom(right.name, step, v)
            return acc
        x = self.step(left, step)
        y = self.step(right, step)
        return ~(x ^ y) & self.full

    def step(self, e, t):
        if isinstance(e, A.Const):
            return self.full if e.value else 0
        if isinstance(e, A.Var):
            return self.atom(e.name, t, True)
        if isinstance(e, A.Ref):
            return self.step(e.body, t)
        if isinstance(e, A.Not):
            return self.step(e.arg, t) ^ self.full
        if isinstance(e, A.And):
            return self.step(e.left, t) & self.step(e.right, t)
        if isinstance(e, A.Or):
            return self.step(e.left, t) | self.step(e.right, t)
        if isinstance(e, A.Implies):
            return (self.step(e.left, t) ^ self.full) | self.step(e.right, t)
        if isinstance(e, A.Cmp):
            m = self.operand_eq(e.left, e.right, t)
            return m ^ self.full if e.negated else m
        raise TypeError(f"not an expression node: {e!r}")

    def invariant(self, e):
        acc = self.full
        for t in range(self.alphabet.trace_length):
            acc &= self.step(e, t)
        return acc


def eval_expr(expr, alphabet):
    for name in A.ports_of(expr):
        alphabet.axis(name)
    alphabet.check_size()
    return Assertion(alphabet, _Evaluator(alphabet).invariant(expr))


class Model:
    """Semantic view of a parsed :class:`SpecDocument`."""

    def __init__(self, doc):
        self.doc = doc

    @cached_property
    def alphabet(self):
        return Alphabet(tuple(self.doc.ports), self.doc.trace_length)

    def sub_alphabet(self, names):
        return self.alphabet.restrict(names)

    def assertion(self, name):
        body = self.doc.assertions[name]
        return eval_expr(body, self.sub_alphabet(A.ports_of(body)))

    def expression(self, expr):
        return eval_expr(expr, self.sub_alphabet(A.ports_of(expr)))

    def _cdef(self, name):
        try:
            return self.doc.contracts[name]
        except KeyError:
            raise SpecError(f"no contract named {name!r}") from None

    def _cdef_ports(self, cdef):
        names = A.ports_of(cdef.assume) | A.ports_of(cdef.promise)
        names |= set(cdef.controlled or ()) | set(cdef.local or ())
        return names

    def contract(self, name):
        """The contract as written (not canonicalized)."""
        cdef = self._cdef(name)
        alpha = self.sub_alphabet(self._cdef_ports(cdef))
        return make_contract(eval_expr(cdef.assume, alpha), eval_expr(cdef.promise, alpha))

    def profile_for(self, cdef, extra_local=()):
        ports = self._cdef_ports(cdef)
        marks = self.doc.markers
        if cdef.controlled is not None:
            controlled = set(cdef.controlled)
        else:
            controlled = {p for p in ports if marks[p].control == "controlled"}
        if cdef.local is not None:
            local = set(cdef.local)
        else:
            local = {p for p in ports if marks[p].local}
        local |= set(extra_local) & ports
        return Profile(ports - local, local, ports - controlled, controlled)

    def profiled(self, name, extra_local=()):
        cdef = self._cdef(name)
        c = self.contract(name)
        return ProfiledContract.of(self.profile_for(cdef, extra_local), c)

    def component(self, name):
        try:
            comp = self.doc.components[name]
        except KeyError:
            raise SpecError(f"no component named {name!r}") from None
        extra = comp.local or ()
        contracts = tuple(self.profiled(c, extra) for c in comp.contracts)
        impl = None if comp.implementation is None else self.expression(comp.implementation)
        return RichComponent(name, contracts, impl, labels=comp.contracts)
