"""Lexer and recursive-descent parser for ``.hrc`` documents.

Expression precedence, tightest first: ``!``, ``== !=``, ``&&``, ``||``,
``=>`` (right associative).  Names are resolved while parsing, so every error
(lexical, syntax, undefined name, type, duplicate) carries a line and column.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..alphabet import BOOL, PortDecl
from ..errors import AlphabetError, SpecError
from . import ast as A

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>(?:\#|//)[^\n]*)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>:=|==|!=|&&|\|\||=>|[{}();:,!])
""", re.VERBOSE)

RESERVED = {"true", "false"}
MARKERS = {"local", "controlled", "uncontrolled"}


@dataclass(frozen=True)
class Token:
    kind: str   # "name", "int", "op", "eof"
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.doc = A.SpecDocument()

    # -- token helpers ---------------------------------------------------------

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return SpecError(msg, tok.line, tok.col)

    def at(self, text):
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def accept(self, text):
        if self.at(text):
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def name(self, what="name"):
        tok = self.tok
        if tok.kind != "name":
            raise self.error(f"expected {what}, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def names(self, what):
        out = [self.name(what)]
        while self.accept(","):
            out.append(self.name(what))
        return out

    # -- document --------------------------------------------------------------

    def parse(self):
        while self.tok.kind != "eof":
            if self.at("length"):
                self.length()
            elif self.at("ports"):
                self.ports_block()
            elif self.at("assertion"):
                self.assertion()
            elif self.at("contract"):
                self.contract()
            elif self.at("component"):
                self.component()
            else:
                raise self.error(f"expected a definition, found {self.tok.text!r}")
        return self.doc

    def length(self):
        kw = self.expect("length")
        if self.doc.length_declared:
            raise self.error("trace length declared twice", kw)
        if self.doc.ports:
            raise self.error("length must precede port declarations", kw)
        tok = self.tok
        if tok.kind != "int":
            raise self.error("expected a positive integer trace length")
        self.i += 1
        value = int(tok.text)
        if value < 1:
            raise self.error("trace length must be >= 1", tok)
        self.expect(";")
        self.doc.trace_length = value
        self.doc.length_declared = True

    def _value(self):
        tok = self.tok
        if tok.kind not in ("name", "int"):
            raise self.error("expected a domain value")
        self.i += 1
        return tok

    def ports_block(self):
        self.expect("ports")
        self.expect("{")
        while not self.at("}"):
            self.port_decl()
            if not self.accept(";"):
                break
        self.expect("}")

    def port_decl(self):
        tok = self.name("port name")
        if tok.text in RESERVED:
            raise self.error(f"{tok.text!r} is reserved", tok)
        self._fresh(tok, "port")
        self.expect(":")
        if self.accept("bool"):
            domain = BOOL
        else:
            self.expect("{")
            vals = [self._value()]
            while self.accept(","):
                vals.append(self._value())
            self.expect("}")
            domain = tuple(v.text for v in vals)
        local, control = False, None
        while self.tok.kind == "name" and self.tok.text in MARKERS:
            m = self.name()
            if m.text == "local":
                local = True
            elif control is not None:
                raise self.error("port marked both controlled and uncontrolled", m)
            else:
                control = m.text
        try:
            decl = PortDecl(tok.text, domain)
        except AlphabetError as e:
            raise self.error(str(e), tok) from None
        self.doc.ports.append(decl)
        self.doc.markers[tok.text] = A.PortMarkers(local, control)

    def _fresh(self, tok, kind):
        name = tok.text
        taken = {
            "port": name in self.doc.markers or name in self.doc.assertions,
            "assertion": name in self.doc.markers or name in self.doc.assertions,
            "contract": name in self.doc.contracts,
            "component": name in self.doc.components,
        }[kind]
        if taken:
            raise self.error(f"duplicate definition of {name!r}", tok)

    def assertion(self):
        self.expect("assertion")
        tok = self.name("assertion name")
        if tok.text in RESERVED:
            raise self.error(f"{tok.text!r} is reserved", tok)
        self._fresh(tok, "assertion")
        self.expect(":=")
        body = self.expr()
        self.accept(";")
        self.doc.assertions[tok.text] = body
        self.doc.order.append(("assertion", tok.text))

    def _port_list(self):
        out = []
        for tok in self.names("port name"):
            if tok.text not in self.doc.markers:
                raise self.error(f"undefined port {tok.text!r}", tok)
            out.append(tok.text)
        return tuple(out)

    def contract(self):
        self.expect("contract")
        tok = self.name("contract name")
        self._fresh(tok, "contract")
        self.expect("{")
        self.expect("assume")
        assume = self.expr()
        self.expect(";")
        self.expect("promise")
        promise = self.expr()
        self.expect(";")
        controlled = local = None
        while not self.at("}"):
            kw = self.name("clause")
            if kw.text == "controlled" and controlled is None:
                self.expect(":")
                controlled = self._port_list()
            elif kw.text == "local" and local is None:
                self.expect(":")
                local = self._port_list()
            else:
                raise self.error(f"unexpected clause {kw.text!r} in contract", kw)
            self.expect(";")
        self.expect("}")
        self.doc.contracts[tok.text] = A.ContractDef(tok.text, assume, promise, controlled, local)
        self.doc.order.append(("contract", tok.text))

    def component(self):
        self.expect("component")
        tok = self.name("component name")
        self._fresh(tok, "component")
        self.expect("{")
        contracts, local, impl = (), None, None
        seen = set()
        while not self.at("}"):
            kw = self.name("clause")
            if kw.text in seen or kw.text not in ("contracts", "local", "implementation"):
                raise self.error(f"unexpected clause {kw.text!r} in component", kw)
            seen.add(kw.text)
            self.expect(":")
            if kw.text == "contracts":
                refs = []
                if not self.at(";"):
                    for c in self.names("contract name"):
                        if c.text not in self.doc.contracts:
                            raise self.error(f"undefined contract {c.text!r}", c)
                        refs.append(c.text)
                contracts = tuple(refs)
            elif kw.text == "local":
                local = self._port_list()
            else:
                impl = self.expr()
            self.expect(";")
        self.expect("}")
        self.doc.components[tok.text] = A.ComponentDef(tok.text, contracts, local, impl)
        self.doc.order.append(("component", tok.text))

    # -- expressions -----------------------------------------------------------
    # Operands are tagged ("bool", node) or ("enum", PortRef, domain) or ("lit", tok)

    def expr(self):
        return self._as_bool(self._implies())

    def _as_bool(self, operand):
        kind = operand[0]
        if kind == "bool":
            return operand[1]
        if kind == "enum":
            raise self.error(f"enumerated port {operand[1].name!r} used as a boolean",
                             operand[3])
        raise self.error(f"undefined name {operand[1].text!r}", operand[1])

    def _implies(self):
        left = self._or()
        if self.at("=>"):
            self.i += 1
            right = self._implies()
            return ("bool", A.Implies(self._as_bool(left), self._as_bool(right)))
        return left

    def _or(self):
        left = self._and()
        while self.at("||"):
            self.i += 1
            right = self._and()
            left = ("bool", A.Or(self._as_bool(left), self._as_bool(right)))
        return left

    def _and(self):
        left = self._cmp()
        while self.at("&&"):
            self.i += 1
            right = self._cmp()
            left = ("bool", A.And(self._as_bool(left), self._as_bool(right)))
        return left

    def _cmp(self):
        left = self._unary()
        if self.at("==") or self.at("!="):
            op = self.tok
            self.i += 1
            right = self._unary()
            node = self._comparison(left, right, op)
            if self.at("==") or self.at("!="):
                raise self.error("comparisons do not chain; add parentheses")
            return ("bool", node)
        return left

    def _comparison(self, left, right, op):
        neg = op.text == "!="
        kinds = (left[0], right[0])
        if kinds == ("bool", "bool"):
            return A.Cmp(left[1], right[1], neg)
        if kinds == ("enum", "enum"):
            if left[2] != right[2]:
                raise self.error(
                    f"cannot compare {left[1].name!r} and {right[1].name!r}: different domains", op)
            return A.Cmp(left[1], right[1], neg)
        if kinds in (("enum", "lit"), ("lit", "enum")):
            port, lit = (left, right) if kinds[0] == "enum" else (right, left)
            value = lit[1].text
            if value not in port[2]:
                raise self.error(
                    f"value {value!r} is not in the domain of {port[1].name!r}", lit[1])
            node = (A.Cmp(port[1], A.Lit(value), neg) if kinds[0] == "enum"
                    else A.Cmp(A.Lit(value), port[1], neg))
            return node
        for side in (left, right):
            if side[0] == "lit":
                raise self.error(f"undefined name {side[1].text!r}", side[1])
        raise self.error("type mismatch: boolean compared with enumerated port", op)

    def _unary(self):
        if self.at("!"):
            self.i += 1
            return ("bool", A.Not(self._as_bool(self._unary())))
        return self._primary()

    def _primary(self):
        tok = self.tok
        if self.accept("("):
            inner = self._implies()
            self.expect(")")
            return inner
        if tok.kind == "int":
            self.i += 1
            return ("lit", tok)
        if tok.kind != "name":
            raise self.error(f"expected an expression, found {tok.text or 'end of input'!r}")
        self.i += 1
        if tok.text == "true":
            return ("bool", A.Const(True))
        if tok.text == "false":
            return ("bool", A.Const(False))
        if tok.text in self.doc.markers:
            decl = self.doc.port(tok.text)
            if decl.domain == BOOL:
                return ("bool", A.Var(tok.text))
            return ("enum", A.PortRef(tok.text), decl.domain, tok)
        if tok.text in self.doc.assertions:
            return ("bool", A.Ref(tok.text, self.doc.assertions[tok.text]))
        return ("lit", tok)


def parse(text):
    return Parser(text).parse()


def parse_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
