"""Recursive-descent parser for objects and arrow terms.

Objects:  ``I``, letters, ``A * B`` (left-associative), ``T(A)``, ``E1(A)``.
Arrows:   constants such as ``psiL{A,B}`` or ``psi0``, an explicit functor
          as ``mu_E1{A}``, composition ``g . f``, tensor ``f * g`` and
          functor application ``T[f]``.  Application binds tightest, then
          tensor, then composition; both infix operators associate left.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..terms.syntax import CONSTANT_ARITY, I, App, Comp, Const, FApp, FunctorSymbol, Letter, Tens, Tensor

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z][A-Za-z0-9]*'?)
  | (?P<punct>[().*{},\[\]_])
    """,
    re.VERBOSE,
)

_FUNCTOR = re.compile(r"([A-Z][A-Za-z]*?)(\d*)$")


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text!r}@{self.line}:{self.col}"


def _tokenize(text):
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = pos + chunk.rindex("\n") + 1
        else:
            out.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(_Tok("end", "", line, pos - line_start + 1))
    return out


def _is_functor_name(name):
    return name[0].isupper() and name != "I"


def functor_symbol(name):
    m = _FUNCTOR.match(name)
    base, digits = m.group(1), m.group(2)
    return FunctorSymbol(base, int(digits)) if digits else FunctorSymbol(name)


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col)

    def take(self, text=None):
        tok = self.tok
        if text is not None and tok.text != text:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            self.fail(f"expected {text!r}, found {found}")
        self.i += 1
        return tok

    def at(self, text):
        return self.tok.text == text and self.tok.kind == "punct"

    def finish(self, value):
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return value

    # objects

    def obj(self):
        left = self.obj_atom()
        while self.at("*"):
            self.take()
            left = Tensor(left, self.obj_atom())
        return left

    def obj_atom(self):
        tok = self.tok
        if self.at("("):
            self.take()
            inner = self.obj()
            self.take(")")
            return inner
        if tok.kind != "ident" or tok.text.endswith("'"):
            self.fail("expected an object" if tok.kind != "end" else "unexpected end of input")
        self.take()
        if tok.text == "I":
            return I
        if _is_functor_name(tok.text):
            self.take("(")
            inner = self.obj()
            self.take(")")
            return App(functor_symbol(tok.text), inner)
        return Letter(tok.text)

    # arrows

    def arrow(self):
        left = self.tens()
        while self.at("."):
            self.take()
            left = Comp(left, self.tens())
        return left

    def tens(self):
        left = self.arrow_atom()
        while self.at("*"):
            self.take()
            left = Tens(left, self.arrow_atom())
        return left

    def arrow_atom(self):
        tok = self.tok
        if self.at("("):
            self.take()
            inner = self.arrow()
            self.take(")")
            return inner
        if tok.kind != "ident":
            self.fail("expected an arrow term" if tok.kind != "end" else "unexpected end of input")
        if _is_functor_name(tok.text):
            self.take()
            self.take("[")
            inner = self.arrow()
            self.take("]")
            return FApp(functor_symbol(tok.text), inner)
        return self.constant()

    def constant(self):
        tok = self.take()
        kind = tok.text
        if kind not in CONSTANT_ARITY:
            self.fail(f"unknown constant {kind!r}", tok)
        functor = None
        if self.at("_"):
            self.take()
            ftok = self.take()
            if ftok.kind != "ident" or not _is_functor_name(ftok.text):
                self.fail("expected a functor name after '_'", ftok)
            functor = functor_symbol(ftok.text)
        objs = []
        if self.at("{"):
            self.take()
            objs.append(self.obj())
            while self.at(","):
                self.take()
                objs.append(self.obj())
            self.take("}")
        if len(objs) != CONSTANT_ARITY[kind]:
            self.fail(f"{kind} takes {CONSTANT_ARITY[kind]} object(s), got {len(objs)}", tok)
        return Const(kind, tuple(objs), functor)


def parse_object(text):
    p = _Parser(text)
    return p.finish(p.obj())


def parse_arrow(text):
    p = _Parser(text)
    return p.finish(p.arrow())
