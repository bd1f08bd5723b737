"""A small line-oriented language for obscure-qubit programs.

Example::

    model born
    qubit q0 pm 1/2 1/2          # probability, membership
    qubit q1 amps (1,0) (0,0) memb 1 0
    gate H/X on q0               # quantum gate / membership gate
    pair q0 q1
    gate CNOT/I on q0 q1
    report concurrence

Statements::

    model NAME
    qubit ID amps COMPLEX COMPLEX memb REAL REAL
    qubit ID bloch THETA PHI THETA_MU
    qubit ID pm P MU
    register ID amps COMPLEX x4 memb REAL x4     # order 00' 01' 10' 11'
    gate NAME[/NAME] on ID [ID]
    project NAME on ID
    pair ID ID
    report probs|memb|density|expect|concurrence

``COMPLEX`` is ``(re, im)``.  Reals are decimals or simple fractions
(``1/2``).  A gate without a membership part leaves the membership
amplitudes unchanged.  Single-qubit gates on a paired qubit act on its slot
in the register.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Union

import numpy as np

from . import entangle, gates, kron_state, projections
from .errors import DomainError, ObscureError, RangeError
from .membership import DEFAULT_TOL, MembershipModel
from .obscure_state import BlochParams
from .report import Report

REPORT_KINDS = ("probs", "memb", "density", "expect", "concurrence")
STATEMENT_KEYWORDS = ("model", "qubit", "register", "gate", "project", "pair", "report")


class ScriptError(ObscureError):
    """Base class of parse-time script errors."""

    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        self.message = message
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{where}: {message}")


class ScriptSyntaxError(ScriptError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.expected = tuple(expected)
        if self.expected:
            message = f"{message}; expected {' or '.join(self.expected)}"
        super().__init__(message, line, column)


class SemanticError(ScriptError):
    pass


class ScriptDomainError(DomainError):
    """A numeric domain error raised while executing a script line."""

    def __init__(self, cause: Exception, line: int):
        self.line = line
        self.cause = cause
        super().__init__(f"line {line}: {cause}")


# --- statements -----------------------------------------------------------


@dataclass(frozen=True)
class DeclareAmps:
    id: str
    amps: tuple[complex, complex]
    memb: tuple[float, float]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DeclareBloch:
    id: str
    theta: float
    phi: float
    theta_mu: float
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DeclarePM:
    id: str
    p: float
    mu: float
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DeclareRegister:
    id: str
    amps: tuple[complex, ...]
    memb: tuple[float, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Gate:
    quantum: str
    membership: str | None
    targets: tuple[str, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Project:
    name: str
    target: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pair:
    first: str
    second: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ReportStmt:
    kind: str
    line: int = field(default=0, compare=False)


Statement = Union[DeclareAmps, DeclareBloch, DeclarePM, DeclareRegister, Gate, Project, Pair, ReportStmt]


@dataclass(frozen=True)
class Program:
    model: MembershipModel = MembershipModel.BORN
    statements: tuple[Statement, ...] = ()


# --- lexer ----------------------------------------------------------------

_UNUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN_RE = re.compile(
    rf"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<number>[+-]?{_UNUM}(?:/{_UNUM})?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_'\-]*)
  | (?P<punct>[(),/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # name, number, punct, newline, eof
    text: str
    line: int
    column: int
    value: float | None = None


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ScriptSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        pos = m.end()
        if kind in ("ws", "comment"):
            continue
        if kind == "newline":
            yield Token("newline", tok, line, col)
            line += 1
            line_start = pos
            continue
        if kind == "number":
            yield Token("number", tok, line, col, _number_value(tok, line, col))
            continue
        yield Token(kind, tok, line, col)
    yield Token("eof", "", line, pos - line_start + 1)


def _number_value(tok: str, line: int, col: int) -> float:
    num, _, den = tok.partition("/")
    value = float(num)
    if den:
        d = float(den)
        if d == 0:
            raise ScriptSyntaxError(f"zero denominator in {tok!r}", line, col)
        value /= d
    if not math.isfinite(value):
        raise ScriptSyntaxError(f"non-finite number {tok!r}", line, col)
    return value


# --- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, expected) -> None:
        t = self.tok
        found = "end of line" if t.kind in ("newline", "eof") else repr(t.text)
        raise ScriptSyntaxError(f"unexpected {found}", t.line, t.column, expected)

    def keyword(self, word: str) -> Token:
        if self.tok.kind == "name" and self.tok.text == word:
            return self.advance()
        self.fail([repr(word)])

    def name(self, what: str = "name") -> str:
        if self.tok.kind != "name":
            self.fail([what])
        return self.advance().text

    def punct(self, ch: str) -> None:
        if self.tok.kind == "punct" and self.tok.text == ch:
            self.advance()
            return
        self.fail([repr(ch)])

    def real(self) -> float:
        if self.tok.kind != "number":
            self.fail(["number"])
        return self.advance().value

    def complex_(self) -> complex:
        self.punct("(")
        re_ = self.real()
        self.punct(",")
        im = self.real()
        self.punct(")")
        return complex(re_, im)

    def end_of_line(self) -> None:
        if self.tok.kind not in ("newline", "eof"):
            self.fail(["end of line"])

    def program(self):
        out = []
        while self.tok.kind != "eof":
            if self.tok.kind == "newline":
                self.advance()
                continue
            out.append(self.statement())
            self.end_of_line()
        return out

    def statement(self):
        t = self.tok
        if t.kind != "name" or t.text not in STATEMENT_KEYWORDS:
            self.fail([repr(k) for k in STATEMENT_KEYWORDS])
        self.advance()
        line = t.line
        kw = t.text
        if kw == "model":
            return ("model", self.name("model name"), line, t.column)
        if kw == "qubit":
            ident = self.name("identifier")
            form = self.tok
            if form.kind == "name" and form.text == "amps":
                self.advance()
                amps = (self.complex_(), self.complex_())
                self.keyword("memb")
                memb = (self.real(), self.real())
                return DeclareAmps(ident, amps, memb, line)
            if form.kind == "name" and form.text == "bloch":
                self.advance()
                return DeclareBloch(ident, self.real(), self.real(), self.real(), line)
            if form.kind == "name" and form.text == "pm":
                self.advance()
                return DeclarePM(ident, self.real(), self.real(), line)
            self.fail(["'amps'", "'bloch'", "'pm'"])
        if kw == "register":
            ident = self.name("identifier")
            self.keyword("amps")
            amps = tuple(self.complex_() for _ in range(4))
            self.keyword("memb")
            memb = tuple(self.real() for _ in range(4))
            return DeclareRegister(ident, amps, memb, line)
        if kw == "gate":
            qname = self.name("gate name")
            mname = None
            if self.tok.kind == "punct" and self.tok.text == "/":
                self.advance()
                mname = self.name("gate name")
            self.keyword("on")
            targets = [self.name("identifier")]
            if self.tok.kind == "name":
                targets.append(self.advance().text)
            return Gate(qname, mname, tuple(targets), line)
        if kw == "project":
            pname = self.name("projection name")
            self.keyword("on")
            return Project(pname, self.name("identifier"), line)
        if kw == "pair":
            return Pair(self.name("identifier"), self.name("identifier"), line)
        # report
        if self.tok.kind == "name" and self.tok.text in REPORT_KINDS:
            return ReportStmt(self.advance().text, line)
        self.fail([repr(k) for k in REPORT_KINDS])


class _Scope:
    """Declaration bookkeeping shared by the semantic checker."""

    def __init__(self):
        self.qubits: set[str] = set()
        self.registers: dict[str, tuple[str, ...]] = {}  # name -> paired qubit ids
        self.paired: dict[str, tuple[str, int]] = {}  # qubit id -> (register, slot)

    def qubit_count(self) -> int:
        return len(self.qubits) + sum(2 for r in self.registers.values() if not r)

    def known(self, ident: str) -> bool:
        return ident in self.qubits or ident in self.registers


def pair_name(first: str, second: str) -> str:
    return f"{first}:{second}"


def _check(stmt, scope: _Scope) -> None:
    line = stmt.line

    def need_declared(ident):
        if not scope.known(ident):
            raise SemanticError(f"undeclared identifier {ident!r}", line)

    if isinstance(stmt, (DeclareAmps, DeclareBloch, DeclarePM, DeclareRegister)):
        if scope.known(stmt.id) or stmt.id in STATEMENT_KEYWORDS:
            raise SemanticError(f"duplicate declaration of {stmt.id!r}", line)
        if isinstance(stmt, DeclareRegister):
            if scope.registers or scope.qubit_count() > 0:
                raise SemanticError("at most two qubits per program", line)
            scope.registers[stmt.id] = ()
        else:
            if scope.qubit_count() >= 2:
                raise SemanticError("at most two qubits per program", line)
            scope.qubits.add(stmt.id)
        return
    if isinstance(stmt, Gate):
        try:
            g = gates.make_gate(stmt.quantum, stmt.membership or "I")
        except ObscureError as exc:
            raise SemanticError(str(exc), line) from None
        for t in stmt.targets:
            need_declared(t)
        if g.arity == 1:
            if len(stmt.targets) != 1 or stmt.targets[0] not in scope.qubits:
                raise SemanticError(f"single-qubit gate {g.name} needs one qubit target", line)
            return
        if len(stmt.targets) == 1:
            if stmt.targets[0] not in scope.registers:
                raise SemanticError(f"two-qubit gate {g.name} needs a register or a paired qubit pair", line)
            return
        a, b = stmt.targets
        if scope.paired.get(a) != (pair_name(a, b), 0):
            raise SemanticError(f"two-qubit gate {g.name} needs 'pair {a} {b}' first", line)
        return
    if isinstance(stmt, Project):
        if stmt.name not in projections.NAMES:
            raise SemanticError(
                f"unknown projection {stmt.name!r}; expected one of {', '.join(projections.NAMES)}", line
            )
        need_declared(stmt.target)
        if stmt.target not in scope.qubits or stmt.target in scope.paired:
            raise SemanticError(f"projections act on unpaired qubits, not {stmt.target!r}", line)
        return
    if isinstance(stmt, Pair):
        need_declared(stmt.first)
        need_declared(stmt.second)
        if stmt.first == stmt.second:
            raise SemanticError("cannot pair a qubit with itself", line)
        for ident in (stmt.first, stmt.second):
            if ident not in scope.qubits or ident in scope.paired:
                raise SemanticError(f"{ident!r} is not an unpaired qubit", line)
        name = pair_name(stmt.first, stmt.second)
        scope.registers[name] = (stmt.first, stmt.second)
        scope.paired[stmt.first] = (name, 0)
        scope.paired[stmt.second] = (name, 1)
        return
    if isinstance(stmt, ReportStmt):
        if stmt.kind == "concurrence" and not scope.registers:
            raise SemanticError("'report concurrence' needs a register", line)
        return
    raise TypeError(f"unknown statement {stmt!r}")


def parse(text: str) -> Program:
    """Parse a script into a :class:`Program`.

    Raises :class:`ScriptSyntaxError` or :class:`SemanticError` carrying the
    offending line number.
    """
    raw = _Parser(text).program()
    model = None
    stmts = []
    scope = _Scope()
    for item in raw:
        if isinstance(item, tuple):
            _, name, line, _col = item
            if model is not None:
                raise SemanticError("duplicate 'model' statement", line)
            try:
                model = MembershipModel.from_name(name)
            except ObscureError as exc:
                raise SemanticError(str(exc), line) from None
            continue
        _check(item, scope)
        stmts.append(item)
    return Program(model or MembershipModel.BORN, tuple(stmts))


# --- pretty printer -------------------------------------------------------


def _r(x: float) -> str:
    return repr(float(x))


def _c(z: complex) -> str:
    return f"({_r(z.real)}, {_r(z.imag)})"


def render_statement(s: Statement) -> str:
    if isinstance(s, DeclareAmps):
        return f"qubit {s.id} amps {' '.join(map(_c, s.amps))} memb {' '.join(map(_r, s.memb))}"
    if isinstance(s, DeclareBloch):
        return f"qubit {s.id} bloch {_r(s.theta)} {_r(s.phi)} {_r(s.theta_mu)}"
    if isinstance(s, DeclarePM):
        return f"qubit {s.id} pm {_r(s.p)} {_r(s.mu)}"
    if isinstance(s, DeclareRegister):
        return f"register {s.id} amps {' '.join(map(_c, s.amps))} memb {' '.join(map(_r, s.memb))}"
    if isinstance(s, Gate):
        name = s.quantum if s.membership is None else f"{s.quantum}/{s.membership}"
        return f"gate {name} on {' '.join(s.targets)}"
    if isinstance(s, Project):
        return f"project {s.name} on {s.target}"
    if isinstance(s, Pair):
        return f"pair {s.first} {s.second}"
    if isinstance(s, ReportStmt):
        return f"report {s.kind}"
    raise TypeError(f"unknown statement {s!r}")


def render(program: Program) -> str:
    lines = [f"model {program.model.value}"]
    lines.extend(render_statement(s) for s in program.statements)
    return "\n".join(lines) + "\n"


# --- evaluator ------------------------------------------------------------


class _Machine:
    def __init__(self, model: MembershipModel, tol: float):
        self.model = model
        self.tol = tol
        self.qubits: dict[str, kron_state.KroneckerQubit] = {}
        self.projected: dict[str, str] = {}  # qubit id -> projection name
        self.registers: dict[str, entangle.TwoQubitRegister] = {}
        self.paired: dict[str, tuple[str, int]] = {}
        self.report = Report(model.value)

    def declare(self, s) -> None:
        if isinstance(s, DeclareAmps):
            if any(not -self.tol <= m <= 1 + self.tol for m in s.memb):
                raise RangeError(f"membership amplitudes {list(s.memb)} outside [0, 1]")
            q = kron_state.KroneckerQubit(list(s.amps), list(s.memb), tol=self.tol)
        elif isinstance(s, DeclareBloch):
            th, ph, tm = s.theta, s.phi, s.theta_mu
            BlochParams(th, ph, tm)
            q = kron_state.KroneckerQubit(
                [math.cos(th / 2), np.exp(1j * ph) * math.sin(th / 2)],
                [math.cos(tm / 2), math.sin(tm / 2)],
                tol=self.tol,
            )
        elif isinstance(s, DeclarePM):
            q = kron_state.from_prob_membership(s.p, s.mu)
        else:
            if any(not -self.tol <= m <= 1 + self.tol for m in s.memb):
                raise RangeError(f"membership amplitudes {list(s.memb)} outside [0, 1]")
            self.registers[s.id] = entangle.TwoQubitRegister.from_columns(
                list(s.amps), list(s.memb), tol=self.tol
            )
            return
        self.qubits[s.id] = q

    def gate(self, s: Gate) -> None:
        g = gates.make_gate(s.quantum, s.membership or "I")
        if g.arity == 1:
            ident = s.targets[0]
            if ident in self.paired:
                reg_name, slot = self.paired[ident]
                self.registers[reg_name] = gates.apply2(gates.lift(g, slot), self.registers[reg_name])
                return
            if ident in self.projected:
                pname = self.projected.pop(ident)
                self.qubits[ident] = kron_state.renormalize(self.qubits[ident], self.tol)
                self.report.add(
                    "note", f"{ident} renormalized after projection {pname} before gate {g.name}"
                )
            self.qubits[ident] = gates.apply(g, self.qubits[ident])
            return
        reg_name = s.targets[0] if len(s.targets) == 1 else pair_name(*s.targets)
        self.registers[reg_name] = gates.apply2(g, self.registers[reg_name])

    def project(self, s: Project) -> None:
        P = projections.projection(s.name)
        v = projections.apply(P, self.qubits[s.target])
        self.qubits[s.target] = kron_state.from_vector(v, self.tol)
        self.projected[s.target] = s.name

    def pair(self, s: Pair) -> None:
        name = pair_name(s.first, s.second)
        x = self.qubits.pop(s.first)
        y = self.qubits.pop(s.second)
        self.projected.pop(s.first, None)
        self.projected.pop(s.second, None)
        self.registers[name] = entangle.tensor_two(x, y)
        self.paired[s.first] = (name, 0)
        self.paired[s.second] = (name, 1)

    def emit(self, kind: str) -> None:
        payload: dict = {}
        if kind == "probs":
            for ident, q in self.qubits.items():
                payload[ident] = q.probabilities()
            for name, reg in self.registers.items():
                payload[name] = entangle.register_report(reg)["probabilities"]
        elif kind == "memb":
            for ident, q in self.qubits.items():
                payload[ident] = q.memberships(self.model)
            for name, reg in self.registers.items():
                payload[name] = entangle.register_report(reg, self.model)["memberships"]
        elif kind == "density":
            for ident, q in self.qubits.items():
                payload[ident] = kron_state.density4(q)
        elif kind == "expect":
            for ident, q in self.qubits.items():
                payload[ident] = projections.expectations(q)
        else:
            for name, reg in self.registers.items():
                c = entangle.concurrence(reg)
                payload = {"target": name, "c_q": c.c_q, "c_mu": c.c_mu, "c_scal": c.c_scal}
        self.report.add(kind, payload)


def execute(program: Program, model=None, tol: float = DEFAULT_TOL) -> Report:
    """Run ``program`` and collect one report section per ``report`` statement.

    ``model`` overrides the program's own model.  Numeric domain errors are
    re-raised as :class:`ScriptDomainError` with the source line.
    """
    model = MembershipModel.from_name(model) if model is not None else program.model
    m = _Machine(model, tol)
    for s in program.statements:
        try:
            if isinstance(s, (DeclareAmps, DeclareBloch, DeclarePM, DeclareRegister)):
                m.declare(s)
            elif isinstance(s, Gate):
                m.gate(s)
            elif isinstance(s, Project):
                m.project(s)
            elif isinstance(s, Pair):
                m.pair(s)
            else:
                m.emit(s.kind)
        except DomainError as exc:
            raise ScriptDomainError(exc, s.line) from exc
    return m.report


def run_script(text: str, model=None, tol: float = DEFAULT_TOL) -> Report:
    return execute(parse(text), model=model, tol=tol)
