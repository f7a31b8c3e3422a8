"""Relations between finite ordinals.

A ``Relation`` is a subset of ``n x m`` where ``n`` and ``m`` are the
ordinals ``{0..n-1}`` and ``{0..m-1}``.  ``compose(R, S)`` is diagrammatic:
first ``R``, then ``S``.

The set algebra runs in a small kernel module.  The compiled one is used
when it was built; ``use_backend("python")`` forces the fallback.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from . import _relcore_py
from .errors import ArityMismatch, MalformedTriple

try:
    from . import _relcore as _compiled
except ImportError:  # extension not built
    _compiled = None

_kernel = _compiled or _relcore_py


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous name."""
    global _kernel
    previous = backend()
    if name == "python":
        _kernel = _relcore_py
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled relation kernel is not available")
        _kernel = _compiled
    else:
        raise ValueError(name)
    return previous


def backend():
    return "compiled" if _kernel is _compiled and _compiled is not None else "python"


def compiled_available():
    return _compiled is not None


CATEGORIES = ("Delta", "DeltaOp", "Fun", "Rel")


@dataclass(frozen=True)
class Relation:
    src: int
    tgt: int
    pairs: tuple  # sorted left-lexicographically, no duplicates

    def __post_init__(self):
        for i, j in self.pairs:
            if not (0 <= i < self.src and 0 <= j < self.tgt):
                raise ValueError(f"pair {(i, j)} out of range for {self.src}x{self.tgt}")

    @classmethod
    def of(cls, src, tgt, pairs):
        return cls(src, tgt, tuple(sorted({(int(i), int(j)) for i, j in pairs})))

    @property
    def pair_set(self):
        return frozenset(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pair_set

    def record(self):
        return {"src": self.src, "tgt": self.tgt, "pairs": [list(p) for p in self.pairs]}

    def to_json(self):
        return json.dumps(self.record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, rec):
        return cls.of(rec["src"], rec["tgt"], [tuple(p) for p in rec["pairs"]])

    def __str__(self):
        body = ",".join(f"({i},{j})" for i, j in self.pairs)
        return "{" + body + "}" + f" <= {self.src}x{self.tgt}"


def identity(n):
    return Relation(n, n, tuple((i, i) for i in range(n)))


def empty(n, m):
    return Relation(n, m, ())


def compose(R, S):
    """``S . R``: pairs (i, k) with (i, j) in R and (j, k) in S."""
    if R.tgt != S.src:
        raise ArityMismatch(f"cannot compose {R.src}x{R.tgt} with {S.src}x{S.tgt}")
    return Relation(R.src, S.tgt, _kernel.compose_pairs(R.pairs, S.pairs, R.tgt))


def tensor(R, S):
    return Relation(R.src + S.src, R.tgt + S.tgt, _kernel.tensor_pairs(R.pairs, S.pairs, R.src, R.tgt))


def converse(R):
    return Relation(R.tgt, R.src, _kernel.converse_pairs(R.pairs))


def shift(R, by=1):
    """Prepend ``by`` fresh points to both sides, related to each other."""
    return tensor(identity(by), R)


# --------------------------------------------------------- classification


class Flags(NamedTuple):
    is_function: bool
    is_order_preserving_function: bool
    is_bijection: bool
    is_converse_of_order_preserving_function: bool


def _as_function(R):
    """Image list when R is a total function, else None."""
    image = [None] * R.src
    for i, j in R.pairs:
        if image[i] is not None:
            return None
        image[i] = j
    if any(v is None for v in image):
        return None
    return image


def _monotone(image):
    return all(image[k] <= image[k + 1] for k in range(len(image) - 1))


def classify(R):
    image = _as_function(R)
    fn = image is not None
    op = fn and _monotone(image)
    bij = fn and R.src == R.tgt and len(set(image)) == R.src
    back = _as_function(converse(R))
    return Flags(fn, op, bij, back is not None and _monotone(back))


def member_of(R, cat):
    if cat == "Rel":
        return True
    flags = classify(R)
    if cat == "Fun":
        return flags.is_function
    if cat == "Delta":
        return flags.is_order_preserving_function
    if cat == "DeltaOp":
        return flags.is_converse_of_order_preserving_function
    raise ValueError(f"unknown category {cat!r}")


# -------------------------------------------------------- decomposition


def left_lex_enum(R):
    return list(R.pairs)


def right_lex_enum(R):
    return list(_kernel.right_lex(R.pairs))


@dataclass(frozen=True)
class CoordinatedTriple:
    k: int
    n: int
    m: int
    nu: tuple
    mu: tuple
    beta: tuple

    def beta_inverse(self):
        inv = [0] * self.k
        for z, b in enumerate(self.beta):
            inv[b] = z
        return tuple(inv)

    def l_sequence(self):
        return [(self.nu[z], self.mu[self.beta[z]]) for z in range(self.k)]

    def r_sequence(self):
        inv = self.beta_inverse()
        return [(self.nu[inv[z]], self.mu[z]) for z in range(self.k)]

    def record(self):
        return {"k": self.k, "n": self.n, "m": self.m, "nu": list(self.nu), "mu": list(self.mu), "beta": list(self.beta)}


def _check_triple(t):
    if not (len(t.nu) == len(t.mu) == len(t.beta) == t.k):
        raise MalformedTriple("component lengths differ from k")
    if sorted(t.beta) != list(range(t.k)):
        raise MalformedTriple(f"beta {list(t.beta)} is not a permutation")
    if any(not 0 <= v < t.n for v in t.nu):
        raise MalformedTriple("nu leaves the source ordinal")
    if any(not 0 <= v < t.m for v in t.mu):
        raise MalformedTriple("mu leaves the target ordinal")


def decompose(R):
    nu, mu, beta = _kernel.decompose_pairs(R.pairs)
    return CoordinatedTriple(len(R.pairs), R.src, R.tgt, nu, mu, beta)


def recompose(t):
    _check_triple(t)
    return Relation(t.n, t.m, _kernel.recompose_pairs(tuple(t.nu), tuple(t.mu), tuple(t.beta)))


def is_coordinated(t):
    _check_triple(t)
    return bool(_kernel.coordinated(tuple(t.nu), tuple(t.mu), tuple(t.beta)))


def is_order_preserving(seq):
    return all(seq[z] <= seq[z + 1] for z in range(len(seq) - 1))
