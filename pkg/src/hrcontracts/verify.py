"""Cross-check a document's engine results against brute-force enumeration.

The reference side evaluates expressions run by run and computes every
operator with :mod:`hrcontracts.oracle`; only the ``Run``/``Alphabet`` types
are shared with the engine.
"""
from __future__ import annotations

import itertools
import random

from . import components as comp
from . import contracts as ca
from . import oracle as O
from . import profiled as pf
from .config import max_universe
from .dsl import ast as A
from .dsl.evaluate import Model
from .errors import ContractError, UniverseTooLarge
from .report import Report

ORACLE_MAX_UNIVERSE = 1 << 14


# -- per-run evaluation ------------------------------------------------------------

def _value(e, run, t):
    if isinstance(e, A.Lit):
        return e.value
    if isinstance(e, A.PortRef):
        return run[e.name][t]
    return holds_at(e, run, t)


def holds_at(e, run, t):
    if isinstance(e, A.Const):
        return e.value
    if isinstance(e, A.Var):
        return run[e.name][t] is True
    if isinstance(e, A.Ref):
        return holds_at(e.body, run, t)
    if isinstance(e, A.Not):
        return not holds_at(e.arg, run, t)
    if isinstance(e, A.And):
        return holds_at(e.left, run, t) and holds_at(e.right, run, t)
    if isinstance(e, A.Or):
        return holds_at(e.left, run, t) or holds_at(e.right, run, t)
    if isinstance(e, A.Implies):
        return (not holds_at(e.left, run, t)) or holds_at(e.right, run, t)
    if isinstance(e, A.Cmp):
        same = _value(e.left, run, t) == _value(e.right, run, t)
        return not same if e.negated else same
    raise TypeError(f"not an expression node: {e!r}")


def denote(expr, alphabet):
    L = alphabet.trace_length
    return alphabet, frozenset(r for r in O.universe(alphabet)
                               if all(holds_at(expr, r, t) for t in range(L)))


# -- comparison helpers --------------------------------------------------------------

def as_den(assertion):
    return assertion.alphabet, frozenset(assertion.runs())


def difference_witness(engine_assertion, den):
    """First run (in universe order) on which the two sets disagree, or None."""
    (alpha, x), (_, y) = O.equalize(as_den(engine_assertion), den)
    diff = x ^ y
    for r in O.universe(alpha):
        if r in diff:
            return r
    return None


class _Checker:
    def __init__(self, report):
        self.report = report
        self.checked = 0
        self.mismatches = 0

    def assertion(self, what, engine, den):
        self.checked += 1
        if set(engine.alphabet.names) != set(den[0].names):
            self.mismatches += 1
            self.report.add("mismatch", f"{what}: ports {sorted(engine.alphabet.names)} "
                            f"vs {sorted(den[0].names)}")
            return
        w = difference_witness(engine, den)
        if w is not None:
            self.mismatches += 1
            side = "engine only" if w in set(engine.runs()) else "oracle only"
            self.report.add("mismatch", f"{what}: run sets differ ({side})", w)

    def contract(self, what, engine, den):
        self.assertion(f"{what} assumption", engine.assumption, den[0])
        self.assertion(f"{what} promise", engine.promise, den[1])

    def verdict(self, what, engine, expected):
        self.checked += 1
        if bool(engine) != bool(expected):
            self.mismatches += 1
            self.report.add("mismatch", f"{what}: engine says {bool(engine)}, "
                            f"enumeration says {bool(expected)}")


def _check_cap(alphabet):
    cap = min(max_universe(), ORACLE_MAX_UNIVERSE)
    if alphabet.size > cap:
        raise UniverseTooLarge(alphabet.size, cap)


def _oracle_implementation(den, fused_profile, fused_alphabet):
    alpha, runs = den
    for p in sorted(set(alpha.names) - fused_profile.ports):
        alpha, runs = O.exists((alpha, runs), p)
    return O.lift((alpha, runs), O.union_alphabet(alpha, fused_alphabet))


def verify_document(doc):
    """Compare engine and enumeration on every named entity of ``doc``."""
    report = Report(command="oracle verify")
    model = Model(doc)
    names = list(doc.contracts)
    if doc.ports:
        # pairwise operators work over unions of two contract alphabets
        for n1, n2 in itertools.combinations_with_replacement(names or [None], 2):
            if n1 is None:
                break
            ports = model._cdef_ports(doc.contracts[n1]) | model._cdef_ports(doc.contracts[n2])
            _check_cap(model.sub_alphabet(ports))
        for cname in doc.components:
            ports = set()
            cdef = doc.components[cname]
            for c in cdef.contracts:
                ports |= model._cdef_ports(doc.contracts[c])
            if cdef.implementation is not None:
                ports |= A.ports_of(cdef.implementation)
            _check_cap(model.sub_alphabet(ports))
        for aname in doc.assertions:
            _check_cap(model.sub_alphabet(A.ports_of(doc.assertions[aname])))
    chk = _Checker(report)

    for aname, body in doc.assertions.items():
        engine = model.assertion(aname)
        chk.assertion(f"assertion {aname}", engine, denote(body, engine.alphabet))

    raw, dens = {}, {}
    for n in names:
        cdef = doc.contracts[n]
        raw[n] = model.contract(n)
        alpha = raw[n].alphabet
        dens[n] = O.contract(denote(cdef.assume, alpha), denote(cdef.promise, alpha))
        chk.contract(f"contract {n}", raw[n], dens[n])
        chk.contract(f"canonicalize({n})", ca.canonicalize(raw[n]), O.canonical(dens[n]))
        pc = model.profiled(n)
        g = O.canonical(dens[n])[1]
        a = dens[n][0]
        chk.verdict(f"consistent({n})", pf.is_consistent(pc),
                    O.receptive(g, pc.profile.uncontrolled))
        chk.verdict(f"compatible({n})", pf.is_compatible_single(pc),
                    O.receptive(a, pc.profile.controlled))
        for p in sorted(raw[n].alphabet.names):
            chk.contract(f"eliminate({n}, {p})", ca.eliminate(raw[n], [p]),
                         O.eliminate(dens[n], [p]))

    canon = {n: ca.canonicalize(raw[n]) for n in names}
    ocanon = {n: O.canonical(dens[n]) for n in names}
    for n1, n2 in itertools.product(names, repeat=2):
        c1, c2 = canon[n1], canon[n2]
        d1, d2 = ocanon[n1], ocanon[n2]
        chk.verdict(f"dominates({n1}, {n2})", ca.dominates(c1, c2), O.dominates(d1, d2))
        chk.contract(f"meet({n1}, {n2})", ca.meet(c1, c2), O.meet(d1, d2))
        chk.contract(f"join({n1}, {n2})", ca.join(c1, c2), O.join(d1, d2))
        chk.contract(f"compose({n1}, {n2})", ca.compose(c1, c2), O.compose(d1, d2))
        impl = ca.max_implementation(c1)
        chk.verdict(f"satisfies(max({n1}), {n2})", ca.satisfies(impl, c2),
                    O.satisfies(O.union(d1[1], O.complement(d1[0])), d2))

    for cname, cdef in doc.components.items():
        if not cdef.contracts:
            continue
        component = model.component(cname)
        local = sorted(component.local_ports)
        members = list(cdef.contracts)
        what = f"fuse({','.join(members)}; {','.join(local)})"
        oracle_fused = O.fuse([dens[c] for c in members], local)
        chk.contract(what, ca.fuse([raw[c] for c in members], local), oracle_fused)
        try:
            fused = component.fused()
        except ContractError as e:
            report.add("info", f"component {cname}: profiled fusion undefined ({e})")
            continue
        chk.contract(f"component {cname} fused", fused, oracle_fused)
        if cdef.implementation is None:
            continue
        impl_den = _oracle_implementation(
            denote(cdef.implementation, model.sub_alphabet(A.ports_of(cdef.implementation))),
            fused.profile, fused.alphabet)
        ok = (O.receptive(impl_den, fused.profile.uncontrolled)
              and O.satisfies(impl_den, oracle_fused))
        chk.verdict(f"check component {cname}", comp.check_component(component).verdict, ok)

    report.verdict = chk.mismatches == 0
    if chk.checked:
        report.add("summary", f"{chk.checked} results checked, {chk.mismatches} mismatches")
    return report


# -- random documents ----------------------------------------------------------------

def _random_expr(rng, ports, depth):
    if depth == 0 or rng.random() < 0.3:
        k = rng.random()
        if k < 0.1:
            return rng.choice(["true", "false"])
        name, dom = rng.choice(ports)
        if dom is None:
            return name
        return f"{name} {rng.choice(['==', '!='])} {rng.choice(dom)}"
    op = rng.choice(["!", "&&", "||", "=>", "=="])
    if op == "!":
        return f"!({_random_expr(rng, ports, depth - 1)})"
    left = _random_expr(rng, ports, depth - 1)
    right = _random_expr(rng, ports, depth - 1)
    return f"({left}) {op} ({right})"


def random_spec_text(seed, max_ports=4, max_contracts=3, max_length=1):
    """A small random document: bool and enumerated ports, a few contracts,
    and one component carrying all of them."""
    rng = random.Random(seed)
    n = rng.randint(1, max_ports)
    length = rng.randint(1, max_length)
    ports, decls = [], []
    for i in range(n):
        name = f"p{i}"
        if rng.random() < 0.25:
            dom = [f"v{k}" for k in range(rng.randint(2, 3))]
            decls.append(f"  {name}: {{{', '.join(dom)}}}")
        else:
            dom = None
            decls.append(f"  {name}: bool")
        ports.append((name, dom))
    for k, d in enumerate(decls):
        decls[k] = d + rng.choice(["", " controlled", " uncontrolled"])
    lines = [f"length {length};", "ports {", ";\n".join(decls), "}"]
    m = rng.randint(1, max_contracts)
    for j in range(m):
        lines.append(f"contract K{j} {{")
        lines.append(f"  assume {_random_expr(rng, ports, 2)};")
        lines.append(f"  promise {_random_expr(rng, ports, 2)};")
        lines.append("}")
    local = [p for p, _ in ports if rng.random() < 0.3]
    lines.append("component all {")
    lines.append(f"  contracts: {', '.join(f'K{j}' for j in range(m))};")
    if local:
        lines.append(f"  local: {', '.join(local)};")
    lines.append(f"  implementation: {_random_expr(rng, ports, 2)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
