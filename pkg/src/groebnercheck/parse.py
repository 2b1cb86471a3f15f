"""Text format for polynomials and named systems.

A system file is a header of line directives followed by entries::

    vars x1 xc1 x2 xc2          # variable table, in order
    conj x1 xc1                 # conjugation pairs (unlisted variables self-pair)
    weight a 1 0                # optional (pi, pi-bar) bidegree per variable
    closure conj                # the system's ideal also contains all conjugates
    kind leading-terms          # entries are declared leading terms, not generators

    name "citation": poly;
    name "citation" suspect[x1*xc1]: poly;     # flagged best-reading terms
    name "citation": [poly, poly, ...];         # a list-valued entry

Polynomials are fully expanded: ``poly := [sign] term (sign term)*`` with
``term := coeff | coeff*factors | factors`` and ``factor := var[^nat]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import (
    DuplicateName,
    IoError,
    ParseError,
    PolySyntaxError,
    UnknownVariable,
    ZeroDenominator,
)
from .poly import Polynomial, VariableTable, conjugate


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<nat>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<str>\"[^\"\n]*\")"
    r"|(?P<op>[-+*^/:;\[\],])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text, source=None, line0=1):
    toks = []
    pos, line, line_start = 0, line0, 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", line,
                                  pos - line_start + 1, source)
        kind = m.lastgroup
        s = m.group()
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, s, line, pos - line_start + 1))
        nl = s.count("\n")
        if nl:
            line += nl
            line_start = pos + s.rindex("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, toks, table, modulus=0, source=None):
        self.toks = toks
        self.i = 0
        self.table = table
        self.index = {nm: k for k, nm in enumerate(table.names)}
        self.modulus = modulus
        self.source = source

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok, expected=()):
        return PolySyntaxError(msg, tok.line, tok.col, self.source, expected)

    def expect(self, text):
        t = self.next()
        if t.text != text or t.kind not in ("op",):
            shown = t.text or "end of input"
            raise self.error(f"unexpected {shown!r}", t, [repr(text)])
        return t

    def at(self, text):
        t = self.peek()
        return t.kind == "op" and t.text == text

    # grammar ---------------------------------------------------------------

    def poly(self):
        terms = {}
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.next().text == "-" else 1
        self._term(sign, terms)
        while self.at("+") or self.at("-"):
            sign = -1 if self.next().text == "-" else 1
            self._term(sign, terms)
        return Polynomial(self.table, terms, self.modulus)

    def _term(self, sign, terms):
        t = self.peek()
        coeff = Fraction(1)
        mono = [0] * len(self.table)
        if t.kind == "nat":
            self.next()
            num = int(t.text)
            if self.at("/"):
                self.next()
                d = self.next()
                if d.kind != "nat":
                    raise self.error(f"unexpected {d.text or 'end of input'!r}", d, ["natural number"])
                if int(d.text) == 0:
                    raise ZeroDenominator("zero denominator", d.line, d.col, self.source)
                coeff = Fraction(num, int(d.text))
            else:
                coeff = Fraction(num)
            if not self.at("*"):
                self._add(terms, mono, sign * coeff)
                return
            self.next()
            t = self.peek()
            if t.kind != "ident":
                raise self.error(f"unexpected {t.text or 'end of input'!r}", t, ["variable"])
        elif t.kind != "ident":
            raise self.error(f"unexpected {t.text or 'end of input'!r}", t,
                             ["number", "variable"])
        self._factor(mono)
        while self.at("*"):
            self.next()
            self._factor(mono)
        self._add(terms, mono, sign * coeff)

    def _factor(self, mono):
        t = self.next()
        if t.kind != "ident":
            raise self.error(f"unexpected {t.text or 'end of input'!r}", t, ["variable"])
        k = self.index.get(t.text)
        if k is None:
            raise UnknownVariable(f"unknown variable {t.text!r}", t.line, t.col, self.source)
        e = 1
        if self.at("^"):
            self.next()
            n = self.next()
            if n.kind != "nat":
                raise self.error(f"unexpected {n.text or 'end of input'!r}", n, ["natural number"])
            e = int(n.text)
        mono[k] += e

    @staticmethod
    def _add(terms, mono, c):
        m = tuple(mono)
        terms[m] = terms.get(m, 0) + c

    def monomial(self):
        """A bare monomial (used by suspect annotations): factors or ``1``."""
        t = self.peek()
        mono = [0] * len(self.table)
        if t.kind == "nat" and t.text == "1":
            self.next()
            return tuple(mono)
        self._factor(mono)
        while self.at("*"):
            self.next()
            self._factor(mono)
        return tuple(mono)


def parse_poly(text: str, table: VariableTable, modulus: int = 0) -> Polynomial:
    """Parse one polynomial; the whole text must be consumed."""
    p = _Parser(_tokenize(text), table, modulus)
    f = p.poly()
    t = p.peek()
    if t.kind != "eof":
        raise p.error(f"unexpected {t.text!r}", t, ["'+'", "'-'", "'*'", "end of input"])
    return f


def _format_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_monomial(mono, table: VariableTable) -> str:
    parts = []
    for name, e in zip(table.names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def print_poly(f: Polynomial) -> str:
    """Canonical text: grevlex-descending terms, explicit ``*``, sign leading each term."""
    if f.is_zero():
        return "0"
    out = []
    for k, (c, m) in enumerate(f.terms):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.table)
        if mono == "1":
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# system files


@dataclass
class Entry:
    name: str
    citation: str
    polys: list
    is_list: bool = False
    suspect: bool = False
    suspect_terms: list = field(default_factory=list)
    line: int = 0

    @property
    def poly(self) -> Polynomial:
        if self.is_list:
            raise TypeError(f"entry {self.name!r} is a list of polynomials")
        return self.polys[0]


@dataclass
class SystemFile:
    table: VariableTable
    entries: list
    closure_conj: bool = False
    kind: str = "generators"
    source: str | None = None

    def names(self) -> list:
        return [e.name for e in self.entries]

    def __contains__(self, name):
        return any(e.name == name for e in self.entries)

    def __getitem__(self, name) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def poly(self, name) -> Polynomial:
        return self[name].poly

    def generators(self, with_closure: bool = True) -> list:
        """All entry polynomials in file order; conjugates appended under ``closure conj``."""
        gens = [f for e in self.entries for f in e.polys]
        if with_closure and self.closure_conj:
            seen = set(gens)
            for f in list(gens):
                g = conjugate(f)
                if g not in seen:
                    seen.add(g)
                    gens.append(g)
        return gens


_DIRECTIVES = ("vars", "conj", "weight", "closure", "kind")


def _header_line(line):
    words = line.split("#", 1)[0].split()
    if not words:
        return None
    if words[0] in _DIRECTIVES and ":" not in line.split("#", 1)[0]:
        return words
    return False


def parse_system(text: str, source: str | None = None) -> SystemFile:
    lines = text.split("\n")
    names = None
    pairs, weights = [], {}
    closure, kind = False, "generators"
    body_start = len(lines)
    for k, raw in enumerate(lines):
        words = _header_line(raw)
        if words is None:
            continue
        if words is False:
            body_start = k
            break
        ln = k + 1
        d = words[0]
        if d == "vars":
            if names is not None:
                raise ParseError("duplicate vars directive", ln, 1, source)
            names = words[1:]
            if not names or len(set(names)) != len(names):
                raise ParseError("vars needs distinct variable names", ln, 1, source)
            continue
        if names is None:
            raise ParseError(f"{d} directive before vars", ln, 1, source)
        if d == "conj":
            if len(words) != 3:
                raise ParseError("conj takes two variable names", ln, 1, source)
            for w in words[1:]:
                if w not in names:
                    raise UnknownVariable(f"unknown variable {w!r}", ln, raw.index(w) + 1, source)
            pairs.append((words[1], words[2]))
        elif d == "weight":
            if len(words) != 4 or not words[2].isdigit() or not words[3].isdigit():
                raise ParseError("weight takes a variable and two naturals", ln, 1, source)
            if words[1] not in names:
                raise UnknownVariable(f"unknown variable {words[1]!r}", ln, 1, source)
            weights[words[1]] = (int(words[2]), int(words[3]))
        elif d == "closure":
            if words[1:] != ["conj"]:
                raise ParseError("only 'closure conj' is supported", ln, 1, source)
            closure = True
        elif d == "kind":
            if len(words) != 2 or words[1] not in ("generators", "leading-terms"):
                raise ParseError("kind is 'generators' or 'leading-terms'", ln, 1, source)
            kind = words[1]
    if names is None:
        raise PolySyntaxError("missing header", 1, 1, source, ["'vars'"])
    if weights and set(weights) != set(names):
        missing = [n for n in names if n not in weights]
        raise ParseError(f"weights missing for {missing}", None, None, source)
    try:
        table = VariableTable.from_pairs(names, pairs if pairs else None,
                                         weights if weights else None)
    except ValueError as exc:
        raise ParseError(str(exc), None, None, source) from None
    if closure and table.conj is None:
        raise ParseError("closure conj needs conjugation pairs", None, None, source)

    body = "\n".join(lines[body_start:])
    toks = _tokenize(body, source, line0=body_start + 1)
    p = _Parser(toks, table, 0, source)
    entries = []
    seen = {}
    while p.peek().kind != "eof":
        t = p.next()
        if t.kind != "ident":
            raise p.error(f"unexpected {t.text!r}", t, ["entry name"])
        if t.text in seen:
            raise DuplicateName(f"entry {t.text!r} already defined on line {seen[t.text]}",
                                t.line, t.col, source)
        seen[t.text] = t.line
        c = p.next()
        if c.kind != "str":
            raise p.error(f"unexpected {c.text or 'end of input'!r}", c, ["citation string"])
        entry = Entry(t.text, c.text[1:-1], [], line=t.line)
        s = p.peek()
        if s.kind == "ident" and s.text == "suspect":
            p.next()
            entry.suspect = True
            if p.at("["):
                p.next()
                entry.suspect_terms.append(p.monomial())
                while p.at(","):
                    p.next()
                    entry.suspect_terms.append(p.monomial())
                p.expect("]")
        p.expect(":")
        if p.at("["):
            p.next()
            entry.is_list = True
            entry.polys.append(p.poly())
            while p.at(","):
                p.next()
                entry.polys.append(p.poly())
            p.expect("]")
        else:
            entry.polys.append(p.poly())
        p.expect(";")
        entries.append(entry)
    return SystemFile(table, entries, closure, kind, source)


def load_system(path) -> SystemFile:
    """Read and validate a system file (UTF-8)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise IoError(f"{path}: {exc.strerror if isinstance(exc, OSError) else exc}") from exc
    return parse_system(text, str(path))


def format_system(sf: SystemFile) -> str:
    """Canonical text of a system file; ``parse_system`` of it reproduces ``sf``."""
    t = sf.table
    lines = ["vars " + " ".join(t.names)]
    if t.conj is not None:
        for i, j in enumerate(t.conj):
            if i <= j:
                lines.append(f"conj {t.names[i]} {t.names[j]}")
    if t.weights is not None:
        for n, (wa, wb) in zip(t.names, t.weights):
            lines.append(f"weight {n} {wa} {wb}")
    if sf.closure_conj:
        lines.append("closure conj")
    if sf.kind != "generators":
        lines.append(f"kind {sf.kind}")
    lines.append("")
    for e in sf.entries:
        head = f'{e.name} "{e.citation}"'
        if e.suspect:
            head += " suspect"
            if e.suspect_terms:
                head += "[" + ", ".join(format_monomial(m, t) for m in e.suspect_terms) + "]"
        if e.is_list:
            body = "[" + ", ".join(print_poly(f) for f in e.polys) + "]"
        else:
            body = print_poly(e.poly)
        lines.append(f"{head}: {body};")
    return "\n".join(lines) + "\n"
