"""The thirteen freely generated categories and their signatures."""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import FunctorSymbol

T = FunctorSymbol("T")
L = FunctorSymbol("L")

MONOIDAL = frozenset({"id", "a", "a'", "l", "l'", "r", "r'"})

DELTA = "Delta"
DELTA_OP = "DeltaOp"
FUN = "Fun"
REL = "Rel"


# identity equality: the table below holds the only instances
@dataclass(frozen=True, eq=False)
class Theory:
    name: str
    primitives: frozenset
    derived: frozenset
    count_letters: bool
    target: str
    # None marks the theories with an indexed family E1, E2, ...
    functor: FunctorSymbol | None
    comonad: bool = False

    @property
    def multi_functor(self):
        return self.functor is None

    @property
    def measure_mode(self):
        return "functors-and-letters" if self.count_letters else "functors-only"

    @property
    def equation_set(self):
        return f"eq:{self.name}"

    def legal(self, kind):
        return kind in self.primitives or kind in self.derived

    def __str__(self):
        return self.name


def _theory(name, extra, derived, letters, target, functor, comonad=False):
    return Theory(name, MONOIDAL | frozenset(extra), frozenset(derived), letters, target, functor, comonad)


_MONAD = {"eta", "mu"}
_COMONAD = {"eps", "delta"}

THEORIES = {
    t.name: t
    for t in [
        _theory("LLS", {"psiL"} | _MONAD, {"psi0"}, False, DELTA, T),
        _theory("LRS", {"psiR"} | _MONAD, {"psi0"}, False, FUN, T),
        _theory("LS", {"psiL", "psiR"} | _MONAD, {"psi", "psi0"}, False, FUN, T),
        _theory("LcS", {"c", "psiL", "psiR"} | _MONAD, {"psi", "psi0"}, True, FUN, T),
        _theory("CS", {"c", "psiL", "psiR", "diag", "bang"} | _MONAD, {"psi", "psi0"}, True, REL, T),
        _theory("DS", {"c", "psiL", "psiR", "codiag", "cobang"} | _MONAD, {"psi", "psi0"}, True, FUN, T),
        _theory("LLSco", {"psiL"} | _COMONAD, (), False, DELTA_OP, L, True),
        _theory("MSco", {"psi", "psi0"} | _COMONAD, (), False, REL, L, True),
        _theory("McSco", {"c", "psi", "psi0"} | _COMONAD, (), True, REL, L, True),
        _theory("CSco", {"c", "psi", "psi0", "diag", "bang"} | _COMONAD, (), True, REL, L, True),
        _theory("DSco", {"c", "psi", "psi0", "codiag", "cobang"} | _COMONAD, (), True, REL, L, True),
        _theory("Lc", {"c", "psiL", "psiR"}, (), True, FUN, None),
        _theory("Lcmu", {"c", "psiL", "psiR", "mu"}, {"psi"}, True, FUN, None),
    ]
}

THEORY_NAMES = tuple(THEORIES)


def get_theory(th):
    if isinstance(th, Theory):
        return th
    try:
        return THEORIES[th]
    except KeyError:
        raise ValueError(f"unknown theory {th!r}; expected one of {', '.join(THEORY_NAMES)}") from None


def indexed(i):
    """The i-th member of the indexed functor family."""
    return FunctorSymbol("E", i)
