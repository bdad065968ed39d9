"""Permutations of {1..n}, finite permutation groups and their structural predicates.

Permutations are stored as full image sequences, 1-indexed: ``images[i - 1]``
is the image of ``i``.  Groups are small (desk scale, degree <= ~12), so every
predicate is decided by exhaustive inspection of the element list.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "Permutation",
    "PermutationGroup",
    "GroupClassification",
    "compose",
    "generate_closure",
    "classify",
    "sigma_map",
    "cyclic_group",
    "regular_representation",
]


def _check_bijection(images: Sequence[int], n: int) -> None:
    if len(images) != n:
        raise ValueError(f"expected {n} images, got {len(images)}")
    seen = set()
    for v in images:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"image {v!r} is not an integer")
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if v in seen:
            raise ValueError(f"value {v} repeated")
        seen.add(v)


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        _check_bijection(images, len(images))
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        touched: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            for a in cyc:
                if not 1 <= a <= n:
                    raise ValueError(f"value {a} out of range 1..{n}")
                if a in touched:
                    raise ValueError(f"value {a} repeated")
                touched.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse_cycles(cls, n: int, text: str) -> Permutation:
        """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"(1,2)"``; ``"()"`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            entries = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            if entries:
                cycles.append(entries)
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self.images, start=1) if v == i]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p ∘ q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[v - 1] for v in q.images))


@dataclass(frozen=True)
class GroupClassification:
    is_abelian: bool
    is_semiregular: bool
    is_transitive: bool
    is_regular: bool
    orbits: tuple[tuple[int, ...], ...]
    orbit_representatives: tuple[int, ...]

    @property
    def is_cancellative(self) -> bool:
        # S_{n,l}(H) is cancellative exactly for semiregular abelian H
        return self.is_semiregular and self.is_abelian

    def as_dict(self) -> dict:
        return {
            "abelian": self.is_abelian,
            "semiregular": self.is_semiregular,
            "transitive": self.is_transitive,
            "regular": self.is_regular,
            "cancellative": self.is_cancellative,
            "orbits": [list(o) for o in self.orbits],
            "orbit_representatives": list(self.orbit_representatives),
        }


@dataclass(frozen=True, eq=False)
class PermutationGroup:
    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    @cached_property
    def _index(self) -> dict[Permutation, int]:
        return {g: k for k, g in enumerate(self.elements)}

    def index(self, p: Permutation) -> int:
        return self._index[p]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        """``mul_table[a][b]`` is the index of ``elements[a] ∘ elements[b]``."""
        idx = self._index
        return tuple(
            tuple(idx[compose(g, h)] for h in self.elements) for g in self.elements
        )

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        idx = self._index
        return tuple(idx[g.inverse()] for g in self.elements)

    @cached_property
    def action_table(self) -> tuple[tuple[int, ...], ...]:
        """0-based images: ``action_table[a][x]`` is ``elements[a](x + 1) - 1``."""
        return tuple(tuple(v - 1 for v in g.images) for g in self.elements)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(g.order() for g in self.elements))

    def orbit(self, i: int) -> tuple[int, ...]:
        return tuple(sorted({g(i) for g in self.elements}))

    def stabilizer(self, i: int) -> tuple[Permutation, ...]:
        return tuple(g for g in self.elements if g(i) == i)


def generate_closure(generators: Sequence[Permutation], n: int) -> PermutationGroup:
    """Smallest subgroup of Sym(n) containing ``generators`` (BFS multiplication)."""
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(tuple(g))
        if g.degree != n:
            raise ValueError(f"generator {g!r} has degree {g.degree}, expected {n}")
        gens.append(g)
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                gh = compose(g, h)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    # finite group: closure under products already contains all inverses
    return PermutationGroup(degree=n, elements=tuple(sorted(seen)), generators=tuple(gens))


def classify(H: PermutationGroup) -> GroupClassification:
    n = H.degree
    els = H.elements
    mul = H.mul_table
    k = len(els)
    abelian = all(mul[a][b] == mul[b][a] for a in range(k) for b in range(a + 1, k))
    semiregular = all(not g.fixed_points() for g in els[1:])
    orbits = []
    assigned: set[int] = set()
    for i in range(1, n + 1):
        if i not in assigned:
            orb = H.orbit(i)
            assigned.update(orb)
            orbits.append(orb)
    transitive = len(orbits) == 1
    return GroupClassification(
        is_abelian=abelian,
        is_semiregular=semiregular,
        is_transitive=transitive,
        is_regular=semiregular and transitive,
        orbits=tuple(orbits),
        orbit_representatives=tuple(o[0] for o in orbits),
    )


def sigma_map(H: PermutationGroup) -> dict[int, Permutation]:
    """For regular ``H``, map each point ``i`` to the unique ``σ_i ∈ H`` with ``σ_i(i) = 1``."""
    out: dict[int, Permutation] = {}
    for i in range(1, H.degree + 1):
        sols = [g for g in H.elements if g(i) == 1]
        if len(sols) != 1:
            raise PreconditionError(
                f"sigma_map requires regular H: {len(sols)} elements send {i} to 1"
            )
        out[i] = sols[0]
    return out


def cyclic_group(n: int) -> PermutationGroup:
    """The regular cyclic group generated by ``(1 2 ... n)``."""
    if n == 1:
        return generate_closure([], 1)
    return generate_closure([Permutation.from_cycles(n, [range(1, n + 1)])], n)


def regular_representation(H: PermutationGroup) -> PermutationGroup:
    """Left regular representation of ``H`` acting on its own elements (numbered 1..|H|)."""
    mul = H.mul_table
    k = len(H)
    gens = [Permutation(tuple(mul[a][b] + 1 for b in range(k))) for a in range(k)]
    return generate_closure(gens, k)
