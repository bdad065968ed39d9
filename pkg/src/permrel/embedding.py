"""A faithful action of S_{n,l}(H) on configurations, for semiregular abelian H.

A configuration is a pair ``(w, tail)``: ``w`` a reduced word in the free group
on the orbit representatives ``x_{i_1}, ..., x_{i_r}`` and ``tail`` a tuple of
``l - 1`` elements of H (standing for ``x_{σ_1(i_1)} ... x_{σ_{l-1}(i_1)}``).
Generator ``x_{ν(i_j)}`` acts by ``f_{ν,j}``; faithfulness of this action on a
single probe configuration certifies that the monoid embeds in a group.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, PreconditionError
from .permgroup import Permutation
from .rewriting import MonoidInstance, all_words, class_labels

FreeGroupWord = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Configuration:
    w: FreeGroupWord
    tail: tuple[Permutation, ...]


@dataclass(frozen=True)
class GeneratorAction:
    tau: Permutation
    j: int


def reduce_word(factors: Iterable[tuple[int, int]]) -> FreeGroupWord:
    out: list[tuple[int, int]] = []
    for j, e in factors:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        if out and out[-1] == (j, -e):
            out.pop()
        else:
            out.append((j, e))
    return tuple(out)


def prepend(j: int, e: int, w: FreeGroupWord) -> FreeGroupWord:
    if w and w[0] == (j, -e):
        return w[1:]
    return ((j, e),) + w


def degree(w: FreeGroupWord) -> int:
    return sum(e for _, e in w)


class _Context:
    def __init__(self, inst: MonoidInstance):
        H = inst.H
        self.l = inst.l
        self.reps = inst.classification.orbit_representatives
        self.r = len(self.reps)
        self.inv = {g: g.inverse() for g in H.elements}
        self.mul = {(g, h): g * h for g in H.elements for h in H.elements}
        self.decomp: dict[int, GeneratorAction] = {}
        for j, i in enumerate(self.reps, start=1):
            for g in H.elements:
                self.decomp[g(i)] = GeneratorAction(g, j)
        self.identity_tail = (H.identity,) * (inst.l - 1)


def _ctx(inst: MonoidInstance) -> _Context:
    ctx = inst._cache.get("embedding")
    if ctx is None:
        c = inst.classification
        if not (c.is_semiregular and c.is_abelian):
            raise PreconditionError(
                "requires semiregular abelian H; got "
                f"semiregular={str(c.is_semiregular).lower()}, abelian={str(c.is_abelian).lower()}"
            )
        ctx = inst._cache["embedding"] = _Context(inst)
    return ctx


def decompose_letter(inst: MonoidInstance, k: int) -> GeneratorAction:
    """The unique ``(ν, j)`` with ``k = ν(i_j)``."""
    return _ctx(inst).decomp[k]


def probe(inst: MonoidInstance) -> Configuration:
    """``(x_{i_1}, x_{i_1}^{l-1})``: single-letter word and identity tail."""
    return Configuration(((1, 1),), _ctx(inst).identity_tail)


def f_apply(inst: MonoidInstance, a: GeneratorAction, c: Configuration) -> Configuration:
    ctx = _ctx(inst)
    k = degree(c.w) % ctx.l
    tail = list(c.tail)
    if k == 0:
        tau_inv = ctx.inv[a.tau]
        tail = [ctx.mul[tau_inv, s] for s in tail]
    else:
        tail[k - 1] = ctx.mul[a.tau, tail[k - 1]]
    return Configuration(prepend(a.j, 1, c.w), tuple(tail))


def f_inverse(inst: MonoidInstance, a: GeneratorAction, c: Configuration) -> Configuration:
    ctx = _ctx(inst)
    k = (degree(c.w) - 1) % ctx.l
    tail = list(c.tail)
    if k == 0:
        tail = [ctx.mul[a.tau, s] for s in tail]
    else:
        tail[k - 1] = ctx.mul[ctx.inv[a.tau], tail[k - 1]]
    return Configuration(prepend(a.j, -1, c.w), tuple(tail))


def compose_actions(inst: MonoidInstance, actions: Sequence[GeneratorAction], c: Configuration) -> Configuration:
    """``(f_{a_1} ∘ ... ∘ f_{a_m})(c)``: the last action is applied first."""
    for a in reversed(actions):
        c = f_apply(inst, a, c)
    return c


def phi_apply(inst: MonoidInstance, w: Sequence[int], c: Configuration) -> Configuration:
    w = inst.check_word(w)
    return compose_actions(inst, [decompose_letter(inst, k) for k in w], c)


def probe_configurations(inst: MonoidInstance, max_len: int = 2) -> list[Configuration]:
    """Every configuration whose free-group word has length ``<= max_len``."""
    ctx = _ctx(inst)
    words: list[FreeGroupWord] = [()]
    frontier: list[FreeGroupWord] = [()]
    letters = [(j, e) for j in range(1, ctx.r + 1) for e in (1, -1)]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for j, e in letters:
                if w and w[-1] == (j, -e):
                    continue
                nxt.append(w + ((j, e),))
        words.extend(nxt)
        frontier = nxt
    tails = itertools.product(inst.H.elements, repeat=inst.l - 1)
    return [Configuration(w, t) for t in tails for w in words]


def relation_check(inst: MonoidInstance, sample_budget: int = 200_000, seed: int = 0) -> bool:
    """Check ``f_{ν_1,j_1}∘...∘f_{ν_l,j_l} = f_{τν_1,j_1}∘...∘f_{τν_l,j_l}`` on the probe set.

    Exhaustive over ``(ν, τ, j)`` when there are at most ``sample_budget``
    tuples, otherwise a seeded pseudorandom sample of that size.
    """
    ctx = _ctx(inst)
    H = inst.H.elements
    l = inst.l
    probes = probe_configurations(inst)
    total = len(H) ** (l + 1) * ctx.r**l
    if total <= sample_budget:
        tuples = (
            (nus, tau, js)
            for nus in itertools.product(H, repeat=l)
            for tau in H
            for js in itertools.product(range(1, ctx.r + 1), repeat=l)
        )
    else:
        rng = random.Random(seed)
        tuples = (
            (
                tuple(rng.choice(H) for _ in range(l)),
                rng.choice(H),
                tuple(rng.randint(1, ctx.r) for _ in range(l)),
            )
            for _ in range(sample_budget)
        )
    for nus, tau, js in tuples:
        lhs = [GeneratorAction(nu, j) for nu, j in zip(nus, js)]
        rhs = [GeneratorAction(ctx.mul[tau, nu], j) for nu, j in zip(nus, js)]
        for c in probes:
            if compose_actions(inst, lhs, c) != compose_actions(inst, rhs, c):
                return False
    return True


def injectivity_check(inst: MonoidInstance, L: int) -> bool:
    """``phi(u)(probe) = phi(v)(probe)`` iff ``u = v`` in the monoid, for all ``|u|, |v| <= L``."""
    n = inst.n
    if sum(n**m for m in range(L + 1)) > inst.enum_budget:
        raise BudgetExceeded(f"words of length <= {L} exceed enumeration budget {inst.enum_budget}")
    p = probe(inst)
    by_image: dict[Configuration, tuple[int, int]] = {}
    by_element: dict[tuple[int, int], Configuration] = {}
    for m in range(L + 1):
        labels, _ = class_labels(inst, m)
        for code, w in enumerate(all_words(n, m)):
            element = (m, labels[code])
            image = phi_apply(inst, w, p)
            if by_image.setdefault(image, element) != element:
                return False
            if by_element.setdefault(element, image) != image:
                return False
    return True


__all__ = [
    "Configuration",
    "FreeGroupWord",
    "GeneratorAction",
    "compose_actions",
    "decompose_letter",
    "degree",
    "f_apply",
    "f_inverse",
    "injectivity_check",
    "phi_apply",
    "prepend",
    "probe",
    "probe_configurations",
    "reduce_word",
    "relation_check",
]
