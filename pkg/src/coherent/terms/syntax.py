"""Syntax trees for object formulas and arrow terms.

Nodes are immutable and cache their hash, since the rewrite search keeps
hundreds of thousands of them in sets.
"""

from __future__ import annotations

from dataclasses import dataclass


class _Node:
    __slots__ = ("_h",)

    def __post_init__(self):
        object.__setattr__(self, "_h", hash((type(self).__name__, *self._values())))

    def _values(self):
        return tuple(getattr(self, name) for name in self.__dataclass_fields__)

    def __hash__(self):
        return self._h

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self) or other._h != self._h:
            return False
        return self._values() == other._values()

    def __ne__(self, other):
        return not self == other


@dataclass(frozen=True, eq=False)
class FunctorSymbol(_Node):
    """An endofunctor name such as ``T``, ``L`` or the indexed ``E1``."""

    name: str
    index: int | None = None

    def __str__(self):
        return self.name if self.index is None else f"{self.name}{self.index}"


# ---------------------------------------------------------------- objects


class Obj(_Node):
    __slots__ = ()


@dataclass(frozen=True, eq=False)
class Unit(Obj):
    def __str__(self):
        return "I"


@dataclass(frozen=True, eq=False)
class Letter(Obj):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class Tensor(Obj):
    left: Obj
    right: Obj

    def __str__(self):
        right = str(self.right)
        if isinstance(self.right, Tensor):
            right = f"({right})"
        return f"{self.left} * {right}"


@dataclass(frozen=True, eq=False)
class App(Obj):
    functor: FunctorSymbol
    arg: Obj

    def __str__(self):
        return f"{self.functor}({self.arg})"


I = Unit()


# ----------------------------------------------------------------- arrows


class Arrow(_Node):
    __slots__ = ()


# kind -> number of object parameters
CONSTANT_ARITY = {
    "id": 1,
    "a": 3,
    "a'": 3,
    "l": 1,
    "l'": 1,
    "r": 1,
    "r'": 1,
    "c": 2,
    "psiL": 2,
    "psiR": 2,
    "psi": 2,
    "psi0": 0,
    "eta": 1,
    "mu": 1,
    "eps": 1,
    "delta": 1,
    "diag": 1,
    "bang": 1,
    "codiag": 1,
    "cobang": 1,
}

# constants whose type mentions the endofunctor
FUNCTORIAL_KINDS = frozenset({"psiL", "psiR", "psi", "psi0", "eta", "mu", "eps", "delta"})


@dataclass(frozen=True, eq=False)
class Const(Arrow):
    """A primitive or derived arrow constant with its object subscripts.

    ``functor`` is ``None`` when the theory's distinguished endofunctor is
    meant; theories with a family of endofunctors need it explicit.
    """

    kind: str
    objs: tuple = ()
    functor: FunctorSymbol | None = None

    def __str__(self):
        name = self.kind
        if self.functor is not None:
            name = f"{name}_{self.functor}"
        if not self.objs:
            return name
        return name + "{" + ",".join(str(o) for o in self.objs) + "}"


@dataclass(frozen=True, eq=False)
class Comp(Arrow):
    """``g . f``: first ``f``, then ``g``."""

    g: Arrow
    f: Arrow

    def children(self):
        return (self.g, self.f)

    def __str__(self):
        right = str(self.f)
        if isinstance(self.f, Comp):
            right = f"({right})"
        return f"{self.g} . {right}"


@dataclass(frozen=True, eq=False)
class Tens(Arrow):
    f: Arrow
    g: Arrow

    def children(self):
        return (self.f, self.g)

    def __str__(self):
        left, right = str(self.f), str(self.g)
        if isinstance(self.f, Comp):
            left = f"({left})"
        if isinstance(self.g, (Comp, Tens)):
            right = f"({right})"
        return f"{left} * {right}"


@dataclass(frozen=True, eq=False)
class FApp(Arrow):
    functor: FunctorSymbol
    f: Arrow

    def __str__(self):
        return f"{self.functor}[{self.f}]"


def Id(a):
    return Const("id", (a,))


def A_(a, b, c):
    return Const("a", (a, b, c))


def AInv(a, b, c):
    return Const("a'", (a, b, c))


def L_(a):
    return Const("l", (a,))


def LInv(a):
    return Const("l'", (a,))


def R_(a):
    return Const("r", (a,))


def RInv(a):
    return Const("r'", (a,))


def C_(a, b):
    return Const("c", (a, b))


def PsiL(a, b, functor=None):
    return Const("psiL", (a, b), functor)


def PsiR(a, b, functor=None):
    return Const("psiR", (a, b), functor)


def Psi(a, b, functor=None):
    return Const("psi", (a, b), functor)


def Psi0(functor=None):
    return Const("psi0", (), functor)


def Eta(a, functor=None):
    return Const("eta", (a,), functor)


def Mu(a, functor=None):
    return Const("mu", (a,), functor)


def Eps(a, functor=None):
    return Const("eps", (a,), functor)


def Delta_(a, functor=None):
    return Const("delta", (a,), functor)


def Diag(a):
    return Const("diag", (a,))


def Bang(a):
    return Const("bang", (a,))


def Codiag(a):
    return Const("codiag", (a,))


def Cobang(a):
    return Const("cobang", (a,))


def compose(*arrows):
    """Right-to-left composite ``arrows[0] . arrows[1] . ...``."""
    result = arrows[-1]
    for g in reversed(arrows[:-1]):
        result = Comp(g, result)
    return result


def tensor_all(*objs):
    """Left-nested tensor of the given objects."""
    result = objs[0]
    for o in objs[1:]:
        result = Tensor(result, o)
    return result


# ------------------------------------------------------------- traversal


def term_size(f):
    """Number of arrow constructor nodes (object subscripts not counted)."""
    try:
        return f.__dict__["_size"]
    except KeyError:
        pass
    if isinstance(f, (Comp, Tens)):
        left, right = f.children()
        n = 1 + term_size(left) + term_size(right)
    elif isinstance(f, FApp):
        n = 1 + term_size(f.f)
    else:
        n = 1
    object.__setattr__(f, "_size", n)
    return n


def subformula(obj, path):
    """Follow ``path`` (0 = left, 1 = right, 2 = functor argument)."""
    for step in path:
        if step == 2:
            obj = obj.arg
        elif step == 0:
            obj = obj.left
        else:
            obj = obj.right
    return obj


def replace_at(obj, path, new):
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step == 2:
        return App(obj.functor, replace_at(obj.arg, rest, new))
    if step == 0:
        return Tensor(replace_at(obj.left, rest, new), obj.right)
    return Tensor(obj.left, replace_at(obj.right, rest, new))


def object_nodes(obj, path=()):
    """Yield ``(path, node)`` in left-to-right textual order."""
    yield path, obj
    if isinstance(obj, Tensor):
        yield from object_nodes(obj.left, path + (0,))
        yield from object_nodes(obj.right, path + (1,))
    elif isinstance(obj, App):
        yield from object_nodes(obj.arg, path + (2,))


def letters_of(obj):
    return [n.name for _, n in object_nodes(obj) if isinstance(n, Letter)]


def functors_of(obj):
    return [n.functor for _, n in object_nodes(obj) if isinstance(n, App)]


def arrow_positions(f, path=()):
    """Yield ``(path, subterm)`` for every arrow node, pre-order, left first."""
    yield path, f
    if isinstance(f, (Comp, Tens)):
        left, right = f.children()
        yield from arrow_positions(left, path + (0,))
        yield from arrow_positions(right, path + (1,))
    elif isinstance(f, FApp):
        yield from arrow_positions(f.f, path + (0,))


def arrow_at(f, path):
    for step in path:
        if isinstance(f, FApp):
            f = f.f
        else:
            f = f.children()[step]
    return f


def replace_arrow_at(f, path, new):
    if not path:
        return new
    step, rest = path[0], path[1:]
    if isinstance(f, FApp):
        return FApp(f.functor, replace_arrow_at(f.f, rest, new))
    if isinstance(f, Comp):
        if step == 0:
            return Comp(replace_arrow_at(f.g, rest, new), f.f)
        return Comp(f.g, replace_arrow_at(f.f, rest, new))
    if step == 0:
        return Tens(replace_arrow_at(f.f, rest, new), f.g)
    return Tens(f.f, replace_arrow_at(f.g, rest, new))


def constants_of(f):
    return [t for _, t in arrow_positions(f) if isinstance(t, Const)]
