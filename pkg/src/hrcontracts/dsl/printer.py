"""Printing documents, expressions and assertions."""
from __future__ import annotations

from .._backend import kernels
from ..alphabet import BOOL
from . import ast as A

# precedence levels, loosest first
_IMPLIES, _OR, _AND, _CMP, _NOT, _ATOM = range(1, 7)


def _prec(e):
    if isinstance(e, A.Implies):
        return _IMPLIES
    if isinstance(e, A.Or):
        return _OR
    if isinstance(e, A.And):
        return _AND
    if isinstance(e, A.Cmp):
        return _CMP
    if isinstance(e, A.Not):
        return _NOT
    return _ATOM


def print_expr(e, need=0):
    p = _prec(e)
    if isinstance(e, A.Const):
        s = "true" if e.value else "false"
    elif isinstance(e, (A.Var, A.Ref, A.PortRef)):
        s = e.name
    elif isinstance(e, A.Lit):
        s = e.value
    elif isinstance(e, A.Not):
        s = "!" + print_expr(e.arg, _NOT)
    elif isinstance(e, A.And):
        s = f"{print_expr(e.left, _AND)} && {print_expr(e.right, _AND + 1)}"
    elif isinstance(e, A.Or):
        s = f"{print_expr(e.left, _OR)} || {print_expr(e.right, _OR + 1)}"
    elif isinstance(e, A.Implies):
        s = f"{print_expr(e.left, _IMPLIES + 1)} => {print_expr(e.right, _IMPLIES)}"
    elif isinstance(e, A.Cmp):
        op = "!=" if e.negated else "=="
        s = f"{print_expr(e.left, _CMP + 1)} {op} {print_expr(e.right, _CMP + 1)}"
    else:
        raise TypeError(f"not an expression node: {e!r}")
    return f"({s})" if p < need else s


def print_document(doc):
    out = []
    if doc.length_declared or doc.trace_length != 1:
        out.append(f"length {doc.trace_length};")
    if doc.ports:
        out.append("ports {")
        for p in doc.ports:
            dom = "bool" if p.domain == BOOL else "{" + ", ".join(map(str, p.domain)) + "}"
            m = doc.markers[p.name]
            marks = (" local" if m.local else "") + (f" {m.control}" if m.control else "")
            out.append(f"  {p.name}: {dom}{marks};")
        out.append("}")
    for kind, name in doc.order:
        if out:
            out.append("")
        if kind == "assertion":
            out.append(f"assertion {name} := {print_expr(doc.assertions[name])};")
        elif kind == "contract":
            c = doc.contracts[name]
            out.append(f"contract {name} {{")
            out.append(f"  assume {print_expr(c.assume)};")
            out.append(f"  promise {print_expr(c.promise)};")
            if c.controlled is not None:
                out.append(f"  controlled: {', '.join(c.controlled)};")
            if c.local is not None:
                out.append(f"  local: {', '.join(c.local)};")
            out.append("}")
        else:
            c = doc.components[name]
            out.append(f"component {name} {{")
            out.append(f"  contracts: {', '.join(c.contracts)};")
            if c.local is not None:
                out.append(f"  local: {', '.join(c.local)};")
            if c.implementation is not None:
                out.append(f"  implementation: {print_expr(c.implementation)};")
            out.append("}")
    return "\n".join(out) + "\n"


# -- assertions ------------------------------------------------------------------

MAX_LISTED_RUNS = 32
MAX_CUBES = 256


def _variables(alphabet):
    return [(p, t) for p in alphabet.ports for t in range(alphabet.trace_length)]


def _atom_masks(alphabet):
    """``{(port, step): [mask for each domain value]}``."""
    L = alphabet.trace_length
    atoms = {}
    for p in alphabet.ports:
        n = len(p.domain)
        axis = alphabet.axis(p.name)
        for t in range(L):
            weight = n ** (L - 1 - t)
            row = []
            for vi in range(n):
                single = 0
                for h in range(n ** L):
                    if (h // weight) % n == vi:
                        single |= 1 << h
                row.append(kernels.extend(single, (n ** L,), alphabet.radices, (axis,)))
            atoms[(p.name, t)] = row
    return atoms


def minimize(assertion):
    """Greedy sum-of-products cover of ``assertion``.

    Returns a list of cubes; a cube maps ``(port, step)`` to the frozenset of
    allowed value indices, omitting unconstrained variables.  ``None`` means
    the cover grew past ``MAX_CUBES``.
    """
    alpha = assertion.alphabet
    target = assertion.mask
    full = assertion.universe_mask
    if target == 0:
        return []
    if target == full:
        return [{}]
    atoms = _atom_masks(alpha)
    vars_ = [(p.name, t) for p, t in _variables(alpha)]
    sizes = {(p.name, t): len(p.domain) for p, t in _variables(alpha)}

    def cube_mask(cube):
        m = full
        for v, vals in cube.items():
            acc = 0
            for vi in vals:
                acc |= atoms[v][vi]
            m &= acc
        return m

    cubes = []
    uncovered = target
    while uncovered:
        if len(cubes) >= MAX_CUBES:
            return None
        low = uncovered & -uncovered
        run = alpha.run_at(low.bit_length() - 1)
        cube = {}
        for (p, t) in vars_:
            cube[(p, t)] = frozenset([alpha.port(p).domain.index(run[p][t])])
        for v in vars_:
            trial = dict(cube)
            del trial[v]
            if cube_mask(trial) & ~target == 0:
                cube = trial
                continue
            for vi in range(sizes[v]):
                if vi in cube[v]:
                    continue
                trial = dict(cube)
                trial[v] = cube[v] | {vi}
                if cube_mask(trial) & ~target == 0:
                    cube = trial
        cubes.append(cube)
        uncovered &= ~cube_mask(cube)
    # drop cubes covered by the others
    k = len(cubes) - 1
    while k >= 0 and len(cubes) > 1:
        rest = 0
        for j, c in enumerate(cubes):
            if j != k:
                rest |= cube_mask(c)
        if rest == target:
            del cubes[k]
        k -= 1
    return cubes


def _var_text(alpha, port, step):
    return port if alpha.trace_length == 1 else f"{port}@{step}"


def _literal(alpha, var, vals):
    port, step = var
    dom = alpha.port(port).domain
    name = _var_text(alpha, port, step)
    if dom == BOOL:
        return name if vals == {1} else f"!{name}"
    chosen = [dom[i] for i in sorted(vals)]
    if len(chosen) == 1:
        return f"{name} == {chosen[0]}"
    rest = [v for i, v in enumerate(dom) if i not in vals]
    if len(rest) == 1:
        return f"{name} != {rest[0]}"
    return "(" + " || ".join(f"{name} == {v}" for v in chosen) + ")"


def formula(assertion):
    cubes = minimize(assertion)
    if cubes is None:
        return None
    if not cubes:
        return "false"
    alpha = assertion.alphabet
    order = {(p.name, t): k for k, (p, t) in enumerate(_variables(alpha))}
    texts = []
    for cube in cubes:
        lits = [_literal(alpha, v, cube[v]) for v in sorted(cube, key=order.get)]
        if not lits:
            return "true"
        texts.append(" && ".join(lits))
    if len(texts) == 1:
        return texts[0]
    return " || ".join(f"({t})" if " && " in t else t for t in texts)


def _count(n):
    return f"{n} run" if n == 1 else f"{n} runs"


def print_assertion(assertion, list_runs=False):
    text = formula(assertion)
    n = len(assertion)
    head = f"{text} ({_count(n)})" if text is not None else f"<{_count(n)}, no compact formula>"
    if list_runs and n <= MAX_LISTED_RUNS and n:
        rows = [head]
        for r in assertion.runs():
            rows.append("  " + " ".join(f"{k}={_fmt_hist(v)}" for k, v in
                                        ((p, r[p]) for p in assertion.alphabet.names)))
        return "\n".join(rows)
    return head


def _fmt_hist(h):
    vals = ["T" if v is True else "F" if v is False else str(v) for v in h]
    return vals[0] if len(vals) == 1 else "[" + ",".join(vals) + "]"
