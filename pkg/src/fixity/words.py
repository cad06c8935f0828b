"""
Group words and relations, evaluated on concrete matrices.

Syntax: generator symbols are identifiers, ``1`` is the identity, juxtaposition
or ``*`` multiplies, ``x^k`` is a power (k may be negative), ``x^y`` is the
conjugate y^-1 x y, ``[u, v, w]`` is a left-normed commutator, and parentheses
group.  A relation is a chain ``w1 = w2 = ... ``; a bare word means ``w = 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .cyclo import CycloMatrix

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class MalformedWord(ValueError):
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Conjugate:
    base: object
    by: object


@dataclass(frozen=True)
class Commutator:
    parts: tuple


Word = Union[Gen, One, Product, Power, Conjugate, Commutator]


@dataclass(frozen=True)
class PresentationWord:
    """A relation lhs = rhs between two words."""

    lhs: Word
    rhs: Word
    text: str = ""


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            break
        num, name, sym = mt.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("sym", sym))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, sym=None):
        tok = self.peek()
        if tok[0] is None or (sym is not None and tok[1] != sym):
            raise MalformedWord(f"expected {sym or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def word(self) -> Word:
        factors = [self.factor()]
        while True:
            kind, val = self.peek()
            if val == "*":
                self.take("*")
                factors.append(self.factor())
            elif kind in ("name", "num") or val in ("[", "("):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Word:
        base = self.atom()
        while self.peek()[1] == "^":
            self.take("^")
            kind, val = self.peek()
            if val == "-":
                self.take("-")
                kind, val = self.take()
                if kind != "num":
                    raise MalformedWord(f"bad exponent in {self.text!r}")
                base = Power(base, -int(val))
            elif kind == "num":
                self.take()
                base = Power(base, int(val))
            elif kind == "name" or val in ("(", "["):
                base = Conjugate(base, self.atom())
            else:
                raise MalformedWord(f"bad exponent in {self.text!r}")
        return base

    def atom(self) -> Word:
        kind, val = self.peek()
        if kind == "name":
            self.take()
            return Gen(val)
        if kind == "num":
            self.take()
            if val != "1":
                raise MalformedWord(f"only 1 may appear as a literal in {self.text!r}")
            return One()
        if val == "(":
            self.take("(")
            w = self.word()
            self.take(")")
            return w
        if val == "[":
            self.take("[")
            parts = [self.word()]
            while self.peek()[1] == ",":
                self.take(",")
                parts.append(self.word())
            self.take("]")
            if len(parts) < 2:
                raise MalformedWord(f"commutator needs two entries in {self.text!r}")
            return Commutator(tuple(parts))
        raise MalformedWord(f"unexpected token {val!r} in {self.text!r}")


def parse_word(text: str) -> Word:
    p = _Parser(text)
    w = p.word()
    if p.peek()[0] is not None:
        raise MalformedWord(f"trailing input in {text!r}")
    return w


def parse_relations(text: str) -> list[PresentationWord]:
    """Split a relation chain ``a = b = c`` into consecutive equalities."""
    sides = [s for s in text.split("=")]
    if any(not s.strip() for s in sides):
        raise MalformedWord(f"empty side in {text!r}")
    words = [parse_word(s) for s in sides]
    if len(words) == 1:
        return [PresentationWord(words[0], One(), text)]
    return [PresentationWord(a, b, text) for a, b in zip(words, words[1:])]


def evaluate(word: Word, gens: Mapping[str, CycloMatrix], convention: str = "left",
             _inv: dict | None = None) -> CycloMatrix:
    """Matrix value of a word.

    convention "left": [u, v] = u^-1 v^-1 u v; "right": [u, v] = u v u^-1 v^-1.
    """
    if _inv is None:
        _inv = {}
    some = next(iter(gens.values()))

    def inverse(mat: CycloMatrix) -> CycloMatrix:
        k = mat.key()
        if k not in _inv:
            _inv[k] = mat.inverse()
        return _inv[k]

    def ev(w) -> CycloMatrix:
        if isinstance(w, Gen):
            if w.name not in gens:
                raise MalformedWord(f"unknown generator {w.name!r}")
            return gens[w.name]
        if isinstance(w, One):
            return CycloMatrix.identity(some.rows, some.m)
        if isinstance(w, Product):
            out = ev(w.factors[0])
            for f in w.factors[1:]:
                out = out @ ev(f)
            return out
        if isinstance(w, Power):
            base = ev(w.base)
            return _power(inverse(base) if w.exponent < 0 else base, abs(w.exponent))
        if isinstance(w, Conjugate):
            by = ev(w.by)
            return inverse(by) @ ev(w.base) @ by
        if isinstance(w, Commutator):
            out = ev(w.parts[0])
            for part in w.parts[1:]:
                v = ev(part)
                if convention == "left":
                    out = inverse(out) @ inverse(v) @ out @ v
                elif convention == "right":
                    out = out @ v @ inverse(out) @ inverse(v)
                else:
                    raise ValueError(f"unknown commutator convention {convention!r}")
            return out
        raise MalformedWord(f"not a word: {w!r}")

    return ev(word)


def _power(mat: CycloMatrix, k: int) -> CycloMatrix:
    result = CycloMatrix.identity(mat.rows, mat.m)
    base = mat
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def failed_relations(gens: Mapping[str, CycloMatrix], relations, convention: str = "left") -> list[str]:
    rels: list[PresentationWord] = []
    for r in relations:
        rels.extend(parse_relations(r) if isinstance(r, str) else [r])
    cache: dict = {}
    bad = []
    for rel in rels:
        lhs = evaluate(rel.lhs, gens, convention, cache)
        rhs = evaluate(rel.rhs, gens, convention, cache)
        if lhs != rhs:
            bad.append(rel.text or repr(rel))
    return bad


def verify_presentation(gens: Mapping[str, CycloMatrix], relations, convention: str = "left") -> bool:
    """True iff every relation holds exactly for the given generator matrices."""
    return not failed_relations(gens, relations, convention)
