"""Syntax trees for ``.hrc`` documents."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Var:
    """A boolean port."""
    name: str


@dataclass(frozen=True)
class Ref:
    """Use of a named assertion; ``body`` is its (already checked) definition."""
    name: str
    body: object = field(compare=False, repr=False)


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Implies:
    left: object
    right: object


@dataclass(frozen=True)
class PortRef:
    """An enumerated port used as a comparison operand."""
    name: str


@dataclass(frozen=True)
class Lit:
    """A domain value of an enumerated port."""
    value: str


@dataclass(frozen=True)
class Cmp:
    left: object
    right: object
    negated: bool = False


def ports_of(expr):
    """Names of the ports an expression reads, named assertions expanded."""
    out = set()
    stack = [expr]
    while stack:
        e = stack.pop()
        if isinstance(e, (Var, PortRef)):
            out.add(e.name)
        elif isinstance(e, Ref):
            stack.append(e.body)
        elif isinstance(e, Not):
            stack.append(e.arg)
        elif isinstance(e, (And, Or, Implies, Cmp)):
            stack.extend((e.left, e.right))
    return out


@dataclass(frozen=True)
class PortMarkers:
    local: bool = False
    control: str | None = None  # "controlled", "uncontrolled" or None


@dataclass(frozen=True)
class ContractDef:
    name: str
    assume: object
    promise: object
    controlled: tuple | None = None
    local: tuple | None = None


@dataclass(frozen=True)
class ComponentDef:
    name: str
    contracts: tuple = ()
    local: tuple | None = None
    implementation: object = None


@dataclass
class SpecDocument:
    trace_length: int = 1
    length_declared: bool = False
    ports: list = field(default_factory=list)          # PortDecl
    markers: dict = field(default_factory=dict)        # name -> PortMarkers
    assertions: dict = field(default_factory=dict)     # name -> expr
    contracts: dict = field(default_factory=dict)      # name -> ContractDef
    components: dict = field(default_factory=dict)     # name -> ComponentDef
    order: list = field(default_factory=list)          # (kind, name) in source order

    def port(self, name):
        for p in self.ports:
            if p.name == name:
                return p
        return None
