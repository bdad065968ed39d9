"""The monoid S_{n,l}(H): words, rewrites, the word problem and element counts.

A word is a tuple of 1-based letter indices, ``(1, 2, 3)`` standing for
x1 x2 x3.  A rewrite replaces ``l`` consecutive letters by their images under
one element of ``H``; two words define the same monoid element exactly when
one rewrites to the other, so elements are the (finite, length-preserving)
rewrite classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import BudgetExceeded, InconsistencyError, PreconditionError
from .permgroup import (
    GroupClassification,
    Permutation,
    PermutationGroup,
    classify,
    generate_closure,
)

Word = tuple[int, ...]

DEFAULT_CLASS_CAP = 10**6
DEFAULT_ENUM_BUDGET = 10**7


@dataclass(frozen=True, eq=False)
class MonoidInstance:
    n: int
    l: int
    H: PermutationGroup
    class_cap: int = DEFAULT_CLASS_CAP
    enum_budget: int = DEFAULT_ENUM_BUDGET
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.l < 2:
            raise ValueError("l must be ≥ 2")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.H.degree != self.n:
            raise ValueError(f"H has degree {self.H.degree}, expected {self.n}")

    @classmethod
    def from_generators(cls, n: int, l: int, generators: Iterable, **kw) -> MonoidInstance:
        gens = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators]
        return cls(n, l, generate_closure(gens, n), **kw)

    @cached_property
    def classification(self) -> GroupClassification:
        return classify(self.H)

    @cached_property
    def orbit_label(self) -> dict[int, int]:
        """Letter -> index of its orbit (orbits ordered by their minima)."""
        return {x: k for k, orb in enumerate(self.classification.orbits) for x in orb}

    @cached_property
    def representative(self) -> dict[int, int]:
        """Letter -> least element of its orbit."""
        reps = self.classification.orbit_representatives
        return {x: reps[k] for x, k in self.orbit_label.items()}

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.H.generators) or "()"
        return f"MonoidInstance(n={self.n}, l={self.l}, H=<{gens}>, |H|={self.H.order})"

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        for x in w:
            if not isinstance(x, int) or not 1 <= x <= self.n:
                raise ValueError(f"letter {x!r} outside 1..{self.n}")
        return w


@dataclass(frozen=True)
class EquivalenceClass:
    members: frozenset[Word]
    canonical: Word

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members


class LemmaForm(NamedTuple):
    """``w = w1·suffix = prefix·w2`` with ``w1``, ``w2`` over orbit representatives."""

    w1: Word
    suffix: Word
    prefix: Word
    w2: Word


@dataclass(frozen=True)
class Witness:
    a: Word
    b: Word
    c: Word
    side: str  # "left": ab = ac, "right": ba = ca


class GrowthReport(NamedTuple):
    kind: str  # "linear" or "exponential"
    counts: dict[int, int]


def _encode(w: Word, n: int) -> int:
    return kernels.encode([x - 1 for x in w], n)


def _decode(code: int, m: int, n: int) -> Word:
    return tuple(x + 1 for x in kernels.decode(code, m, n))


def rewrite_step(inst: MonoidInstance, w: Sequence[int], pos: int, sigma: Permutation) -> Word:
    """Apply ``sigma`` to letters ``pos .. pos+l-1`` (1-based) of ``w``."""
    w = inst.check_word(w)
    if sigma not in inst.H:
        raise PreconditionError(f"{sigma!r} is not an element of H")
    if not 1 <= pos <= len(w) - inst.l + 1:
        raise IndexError(f"position {pos} out of range 1..{len(w) - inst.l + 1}")
    i = pos - 1
    return w[:i] + tuple(sigma(x) for x in w[i:i + inst.l]) + w[i + inst.l:]


def _class_codes(inst: MonoidInstance, w: Word) -> list[int]:
    return kernels.closure_codes(
        _encode(w, inst.n), len(w), inst.n, inst.l, inst.H.action_table, inst.class_cap
    )


def equivalence_class(inst: MonoidInstance, w: Sequence[int]) -> EquivalenceClass:
    w = inst.check_word(w)
    codes = _class_codes(inst, w)
    m = len(w)
    members = frozenset(_decode(c, m, inst.n) for c in codes)
    return EquivalenceClass(members=members, canonical=_decode(codes[0], m, inst.n))


def canonical_form(inst: MonoidInstance, w: Sequence[int]) -> Word:
    """Lexicographically least word representing the same element as ``w``."""
    w = inst.check_word(w)
    cache = inst._cache.setdefault("canon", {})
    out = cache.get(w)
    if out is None:
        if len(w) < inst.l:
            out = w
        else:
            out = _decode(_class_codes(inst, w)[0], len(w), inst.n)
        cache[w] = out
    return out


def words_equal(inst: MonoidInstance, u: Sequence[int], v: Sequence[int], method: str = "auto") -> bool:
    """Decide ``π(u) = π(v)``.

    ``method`` is ``"auto"`` (window sweep for abelian H, canonical forms
    otherwise), ``"sweep"`` or ``"bfs"``.  The sweep is only valid for abelian H.
    """
    u = inst.check_word(u)
    v = inst.check_word(v)
    if len(u) != len(v):
        return False
    if method == "auto":
        method = "sweep" if inst.classification.is_abelian else "bfs"
    if method == "sweep":
        if not inst.classification.is_abelian:
            raise PreconditionError("the window sweep requires abelian H")
        return kernels.sweep_equal(
            [x - 1 for x in u], [x - 1 for x in v], inst.l, inst.H.action_table, inst.H.mul_table
        )
    if method == "bfs":
        return canonical_form(inst, u) == canonical_form(inst, v)
    raise ValueError(f"unknown method {method!r}")


def factorize_lemma_form(inst: MonoidInstance, w: Sequence[int]) -> LemmaForm:
    """Push letters onto orbit representatives from the left and from the right.

    Left: keep a window ``tail`` of ``l - 1`` letters; when the next letter
    arrives, the element of H moving ``tail[0]`` to its representative is
    applied to the ``l``-window, and the representative is emitted into ``w1``.
    The right-hand factorization is the mirror image.
    """
    w = inst.check_word(w)
    l = inst.l
    if len(w) < l - 1:
        raise PreconditionError(f"word of length {len(w)} is shorter than l - 1 = {l - 1}")
    rep = inst.representative

    def mover(x: int) -> Permutation:
        target = rep[x]
        return next(g for g in inst.H.elements if g(x) == target)

    w1: list[int] = []
    tail = list(w[:l - 1])
    for m in w[l - 1:]:
        window = tail + [m]
        g = mover(window[0])
        window = [g(x) for x in window]
        w1.append(window[0])
        tail = window[1:]

    w2: list[int] = []
    head = list(w[len(w) - l + 1:])
    for m in reversed(w[:len(w) - l + 1]):
        window = [m] + head
        g = mover(window[-1])
        window = [g(x) for x in window]
        w2.insert(0, window[-1])
        head = window[:-1]

    out = LemmaForm(tuple(w1), tuple(tail), tuple(head), tuple(w2))
    if not words_equal(inst, w, out.w1 + out.suffix) or not words_equal(inst, w, out.prefix + out.w2):
        raise InconsistencyError(f"factorization of {w} does not represent the same element")
    return out


def class_labels(inst: MonoidInstance, m: int):
    """Class label of every word of length ``m``, indexed by word code (cached)."""
    cache = inst._cache.setdefault("labels", {})
    if m not in cache:
        cache[m] = kernels.label_words(m, inst.n, inst.l, inst.H.action_table, inst.enum_budget)
    return cache[m]


def count_elements_of_length(inst: MonoidInstance, m: int) -> int:
    if m < 0:
        raise ValueError("length must be >= 0")
    return class_labels(inst, m)[1]


def growth_classify(inst: MonoidInstance, m_max: int) -> GrowthReport:
    """Linear growth for transitive H, exponential otherwise; checked against counts."""
    l = inst.l
    if m_max < l:
        raise PreconditionError(f"m_max must be >= l = {l}")
    counts = {m: count_elements_of_length(inst, m) for m in range(1, m_max + 1)}
    cls = inst.classification
    if cls.is_transitive:
        plateau = {counts[m] for m in range(l - 1, m_max + 1)}
        if len(plateau) != 1 or plateau.pop() > inst.n ** (l - 1):
            raise InconsistencyError(f"transitive H but counts are not bounded: {counts}")
        return GrowthReport("linear", counts)
    r = len(cls.orbits)
    seq = [1] + [counts[m] for m in range(1, m_max + 1)]
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise InconsistencyError(f"non-transitive H but counts are not increasing: {counts}")
    if any(counts[m] < r**m for m in counts):
        raise InconsistencyError(f"counts fall below the free-submonoid bound {r}^m: {counts}")
    return GrowthReport("exponential", counts)


def cancellativity_witness(inst: MonoidInstance, L: int) -> Witness | None:
    """First ``a, b != c`` with ``ab = ac`` (left) or ``ba = ca`` (right), ``|a| + |b| <= L``.

    Scan order: total length, then side (left before right), then ``|a|``,
    then codes of ``a`` and ``b`` ascending.
    """
    n = inst.n
    if L < inst.l:
        raise PreconditionError(f"L must be >= l = {inst.l}")
    for s in range(2, L + 1):
        total_labels, _ = class_labels(inst, s)
        for side in ("left", "right"):
            for la in range(1, s):
                lb = s - la
                b_labels, _ = class_labels(inst, lb)
                for a in range(n**la):
                    first: dict[int, int] = {}
                    for b in range(n**lb):
                        code = a * n**lb + b if side == "left" else b * n**la + a
                        key = total_labels[code]
                        prev = first.setdefault(key, b)
                        if b_labels[prev] != b_labels[b]:
                            return _checked_witness(
                                inst, _decode(a, la, n), _decode(prev, lb, n), _decode(b, lb, n), side
                            )
    return None


def _checked_witness(inst: MonoidInstance, a: Word, b: Word, c: Word, side: str) -> Witness:
    if side == "left":
        lhs, rhs = a + b, a + c
    else:
        lhs, rhs = b + a, c + a
    if not words_equal(inst, lhs, rhs) or canonical_form(inst, b) == canonical_form(inst, c):
        raise InconsistencyError(f"bad cancellativity witness {a}, {b}, {c} ({side})")
    return Witness(a, b, c, side)


def all_words(n: int, m: int) -> Iterable[Word]:
    """Every word of length ``m`` in lexicographic order."""
    return itertools.product(range(1, n + 1), repeat=m)


__all__ = [
    "DEFAULT_CLASS_CAP",
    "DEFAULT_ENUM_BUDGET",
    "EquivalenceClass",
    "GrowthReport",
    "LemmaForm",
    "MonoidInstance",
    "Witness",
    "Word",
    "all_words",
    "canonical_form",
    "cancellativity_witness",
    "class_labels",
    "count_elements_of_length",
    "equivalence_class",
    "factorize_lemma_form",
    "growth_classify",
    "rewrite_step",
    "words_equal",
    "BudgetExceeded",
]
