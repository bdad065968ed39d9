"""Exact arithmetic in the group of fractions G = S ⟨x1^l⟩^{-1} for regular abelian H.

Every element of G is written uniquely as ``x1^k · t`` where ``t`` lies in the
finite torsion subgroup T(G) ≅ H^{l-1}.  The tuple ``(h_1, ..., h_{l-1})``
stands for ``x1^{-l+1} x_{j_1} ... x_{j_{l-1}}`` with ``h_p = σ_{j_p}``, the
unique element of H sending ``j_p`` to 1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import PreconditionError
from .permgroup import Permutation, sigma_map
from .rewriting import MonoidInstance, Word

TorsionTuple = tuple[Permutation, ...]


@dataclass(frozen=True, order=True)
class FractionElement:
    k: int
    t: TorsionTuple

    def __repr__(self) -> str:
        comps = ", ".join(h.cycle_string() for h in self.t)
        return f"FractionElement(k={self.k}, t=({comps}))"

    def as_dict(self) -> dict:
        return {"k": self.k, "t": [list(h.images) for h in self.t]}


class Centrality(NamedTuple):
    central: bool
    index: int
    expected_index: int

    @property
    def ok(self) -> bool:
        return self.central and self.index == self.expected_index


class _Context:
    """Per-instance tables, built once and cached on the instance."""

    def __init__(self, inst: MonoidInstance):
        self.inst = inst
        H = inst.H
        self.H = H
        self.sigma = sigma_map(H)
        self.ident = H.identity
        self.inv = {g: g.inverse() for g in H.elements}
        self.mul = {(g, h): g * h for g in H.elements for h in H.elements}
        self.one = (self.ident,) * (inst.l - 1)


def require_regular_abelian(inst: MonoidInstance) -> None:
    c = inst.classification
    if not (c.is_regular and c.is_abelian):
        raise PreconditionError(
            "requires transitive abelian H; got "
            f"transitive={str(c.is_transitive).lower()}, "
            f"semiregular={str(c.is_semiregular).lower()}, "
            f"abelian={str(c.is_abelian).lower()}"
        )


def _ctx(inst: MonoidInstance) -> _Context:
    ctx = inst._cache.get("fractions")
    if ctx is None:
        require_regular_abelian(inst)
        ctx = inst._cache["fractions"] = _Context(inst)
    return ctx


def identity(inst: MonoidInstance) -> FractionElement:
    return FractionElement(0, _ctx(inst).one)


def torsion_tuples(inst: MonoidInstance) -> list[TorsionTuple]:
    """All of T(G) as tuples, in lexicographic order of H's sorted elements."""
    ctx = _ctx(inst)
    return list(itertools.product(ctx.H.elements, repeat=inst.l - 1))


def tuple_of_word(inst: MonoidInstance, j: Sequence[int]) -> TorsionTuple:
    """Tuple encoding x1^{-l+1} x_{j_1}...x_{j_{l-1}}."""
    ctx = _ctx(inst)
    if len(j) != inst.l - 1:
        raise ValueError(f"expected {inst.l - 1} letters, got {len(j)}")
    return tuple(ctx.sigma[x] for x in j)


def word_of_tuple(inst: MonoidInstance, t: TorsionTuple) -> Word:
    """Inverse of :func:`tuple_of_word`: the letter for ``h`` is ``h^{-1}(1)``."""
    ctx = _ctx(inst)
    return tuple(ctx.inv[h](1) for h in t)


def torsion_multiply(inst: MonoidInstance, s: TorsionTuple, t: TorsionTuple) -> TorsionTuple:
    ctx = _ctx(inst)
    return tuple(ctx.mul[a, b] for a, b in zip(s, t))


def torsion_inverse(inst: MonoidInstance, t: TorsionTuple) -> TorsionTuple:
    ctx = _ctx(inst)
    return tuple(ctx.inv[h] for h in t)


def _conj_once(ctx: _Context, t: TorsionTuple) -> TorsionTuple:
    last_inv = ctx.inv[t[-1]]
    return (last_inv,) + tuple(ctx.mul[last_inv, h] for h in t[:-1])


def _conj_once_inverse(ctx: _Context, t: TorsionTuple) -> TorsionTuple:
    first_inv = ctx.inv[t[0]]
    return tuple(ctx.mul[first_inv, h] for h in t[1:]) + (first_inv,)


def conj_by_x1(inst: MonoidInstance, t: TorsionTuple, e: int) -> TorsionTuple:
    """``x1^e · t · x1^{-e}``.

    One step uses ``(h_1..h_{l-1}) -> (h_{l-1}^{-1}, h_{l-1}^{-1}h_1, ..., h_{l-1}^{-1}h_{l-2})``,
    which comes from rewriting ``x1 x_{j_1}...x_{j_{l-1}}`` with ``σ_{j_{l-1}}``.
    """
    ctx = _ctx(inst)
    step = _conj_once if e >= 0 else _conj_once_inverse
    for _ in range(abs(e)):
        t = step(ctx, t)
    return t


def multiply(inst: MonoidInstance, g: FractionElement, h: FractionElement) -> FractionElement:
    # x1^a s x1^b t = x1^{a+b} (x1^{-b} s x1^b) t
    return FractionElement(
        g.k + h.k, torsion_multiply(inst, conj_by_x1(inst, g.t, -h.k), h.t)
    )


def inverse(inst: MonoidInstance, g: FractionElement) -> FractionElement:
    # (x1^k t)^{-1} = t^{-1} x1^{-k} = x1^{-k} (x1^k t^{-1} x1^{-k})
    return FractionElement(-g.k, conj_by_x1(inst, torsion_inverse(inst, g.t), g.k))


def power(inst: MonoidInstance, g: FractionElement, e: int) -> FractionElement:
    if e < 0:
        g, e = inverse(inst, g), -e
    out = identity(inst)
    while e:
        if e & 1:
            out = multiply(inst, out, g)
        g = multiply(inst, g, g)
        e >>= 1
    return out


def generator(inst: MonoidInstance, j: int) -> FractionElement:
    """Image of x_j: ``x1 · (x1^{-1} x_j)``."""
    ctx = _ctx(inst)
    return FractionElement(1, ctx.one[:-1] + (ctx.sigma[j],))


def x1_power(inst: MonoidInstance, k: int) -> FractionElement:
    return FractionElement(k, _ctx(inst).one)


def from_word(inst: MonoidInstance, w: Sequence[int]) -> FractionElement:
    w = inst.check_word(w)
    out = identity(inst)
    for j in w:
        out = multiply(inst, out, generator(inst, j))
    return out


def torsion_order(inst: MonoidInstance, g: FractionElement) -> float | int:
    """Order of ``g``; ``math.inf`` when the degree is non-zero."""
    _ctx(inst)
    if g.k != 0:
        return math.inf
    return math.lcm(*(h.order() for h in g.t))


def centrality_check(inst: MonoidInstance) -> Centrality:
    """Is x1^l central, and how many cosets does ⟨x1^l⟩ have in G?

    Coset labels are obtained by multiplying ``(k, t)`` for ``-l <= k < 2l``
    by the appropriate power of x1^l until the degree lies in ``[0, l)``.
    """
    l = inst.l
    z = x1_power(inst, l)
    central = all(
        multiply(inst, z, generator(inst, j)) == multiply(inst, generator(inst, j), z)
        for j in range(1, inst.n + 1)
    )
    labels = set()
    for k in range(-l, 2 * l):
        for t in torsion_tuples(inst):
            g = FractionElement(k, t)
            label = multiply(inst, g, power(inst, z, -(k // l)))
            if not 0 <= label.k < l:
                central = False
            labels.add(label)
    expected = l * inst.H.order ** (l - 1)
    return Centrality(central, len(labels), expected)


__all__ = [
    "Centrality",
    "FractionElement",
    "TorsionTuple",
    "centrality_check",
    "conj_by_x1",
    "from_word",
    "generator",
    "identity",
    "inverse",
    "multiply",
    "power",
    "require_regular_abelian",
    "torsion_inverse",
    "torsion_multiply",
    "torsion_order",
    "torsion_tuples",
    "tuple_of_word",
    "word_of_tuple",
    "x1_power",
]
