"""Semigroup algebra K[S_{n,l}(H)], the group algebras K[G] and K[T(G)], over ℚ or 𝔽_p.

All arithmetic is exact: rationals are :class:`fractions.Fraction`, prime-field
scalars are ints reduced into ``range(p)``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import fraction_group as fg
from .errors import PreconditionError
from .fraction_group import FractionElement, TorsionTuple
from .rewriting import MonoidInstance, Word, canonical_form


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """ℚ when ``p == 0``, otherwise 𝔽_p."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> Field:
        text = text.strip().lower()
        if text in ("q", "0", "qq", "rational"):
            return cls(0)
        m = re.fullmatch(r"(?:p\s*=\s*|f_?|gf)?(\d+)", text)
        if not m:
            raise ValueError(f"cannot parse field {text!r}; use 'q' or 'p=3'")
        return cls(int(m.group(1)))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p) if self.p else 1 / x

    def __str__(self) -> str:
        return f"F_{self.p}" if self.p else "Q"


QQ = Field(0)


def _fmt_scalar(c) -> str:
    return str(c)


# ---------------------------------------------------------------- K[S]


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Finite linear combination of monoid elements, keyed by canonical words."""

    inst: MonoidInstance
    field: Field
    terms: Mapping[Word, object] = dc_field(default_factory=dict)

    @classmethod
    def from_terms(cls, inst: MonoidInstance, K: Field, terms: Mapping[Sequence[int], object] | Iterable) -> AlgebraElement:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, object] = {}
        for w, c in items:
            key = canonical_form(inst, w)
            acc[key] = K(acc.get(key, 0) + K(c))
        return cls(inst, K, {w: c for w, c in acc.items() if c})

    @classmethod
    def word(cls, inst: MonoidInstance, K: Field, w: Sequence[int], coeff=1) -> AlgebraElement:
        return cls.from_terms(inst, K, {tuple(w): coeff})

    @classmethod
    def one(cls, inst: MonoidInstance, K: Field) -> AlgebraElement:
        return cls.word(inst, K, ())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: AlgebraElement) -> None:
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if self.inst is not other.inst:
            raise ValueError("elements belong to different monoid instances")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = self.field(acc.get(w, 0) + c)
        return AlgebraElement(self.inst, self.field, {w: c for w, c in acc.items() if c})

    def scale(self, c) -> AlgebraElement:
        c = self.field(c)
        if not c:
            return AlgebraElement(self.inst, self.field, {})
        return AlgebraElement(self.inst, self.field, {w: self.field(c * v) for w, v in self.terms.items()})

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply_elements(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.field == other.field and dict(self.terms) == dict(other.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = "*".join(f"x{j}" for j in w) or "1"
            parts.append(f"{_fmt_scalar(self.terms[w])}*{mono}")
        return " + ".join(parts)

    def as_dict(self) -> dict:
        return {
            " ".join(map(str, w)): str(c)
            for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        }


def multiply_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    K = a.field
    acc: dict[Word, object] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            key = canonical_form(a.inst, u + v)
            acc[key] = K(acc.get(key, 0) + cu * cv)
    return AlgebraElement(a.inst, K, {w: c for w, c in acc.items() if c})


class Nilpotency(NamedTuple):
    nilpotent: bool
    exponent: int | None  # least k with a^k = 0, when nilpotent
    k_max: int

    def describe(self) -> str:
        if self.nilpotent:
            return f"nilpotent at k={self.exponent}"
        return f"not nilpotent up to {self.k_max}"


def is_nilpotent(a: AlgebraElement, k_max: int = 8) -> Nilpotency:
    power = a
    for k in range(1, k_max + 1):
        if power.is_zero():
            return Nilpotency(True, k, k_max)
        if k < k_max:
            power = multiply_elements(power, a)
    return Nilpotency(False, None, k_max)


def is_homogeneous(a: AlgebraElement) -> bool:
    return len({len(w) for w in a.terms}) <= 1


def homogeneous_components(a: AlgebraElement) -> dict[int, AlgebraElement]:
    out: dict[int, dict[Word, object]] = {}
    for w, c in a.terms.items():
        out.setdefault(len(w), {})[w] = c
    return {d: AlgebraElement(a.inst, a.field, t) for d, t in sorted(out.items())}


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(x\d+(?:\s*\*?\s*x\d+)*|1)?\s*")


def parse_element(inst: MonoidInstance, K: Field, text: str) -> AlgebraElement:
    """Parse ``"x2 - x1"``, ``"2*x1*x2 + 1"``, ``"0"``."""
    text = text.strip()
    if text == "0":
        return AlgebraElement(inst, K, {})
    terms: list[tuple[Word, Fraction]] = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse algebra element at {text[pos:]!r}")
        if terms and m.group(1) is None:
            raise ValueError(f"missing '+' or '-' before {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        mono = m.group(3) or "1"
        word = () if mono == "1" else tuple(int(x) for x in re.findall(r"x(\d+)", mono))
        terms.append((inst.check_word(word), sign * coeff))
        pos = m.end()
    return AlgebraElement.from_terms(inst, K, terms)


# ---------------------------------------------------------------- K[T(G)]


@dataclass(frozen=True, eq=False)
class FiniteDimAlgebra:
    """Group algebra of T(G) on the basis of torsion tuples; vectors are coefficient tuples."""

    field: Field
    basis: tuple[TorsionTuple, ...]
    table: tuple[tuple[int, ...], ...]
    identity_index: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dimension

    def unit(self, i: int) -> tuple:
        v = [self.field.zero] * self.dimension
        v[i] = self.field.one
        return tuple(v)

    def add(self, u: Sequence, v: Sequence) -> tuple:
        K = self.field
        return tuple(K(a + b) for a, b in zip(u, v))

    def scale(self, c, u: Sequence) -> tuple:
        K = self.field
        return tuple(K(c * a) for a in u)

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        K = self.field
        out = [K.zero] * self.dimension
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b:
                    out[row[j]] += a * b
        return tuple(K(c) for c in out)

    def is_commutative(self) -> bool:
        d = self.dimension
        return all(self.table[i][j] == self.table[j][i] for i in range(d) for j in range(i + 1, d))

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity_index:
            cur = self.table[cur][i]
            k += 1
        return k

    def nilpotency_index(self, u: Sequence, k_max: int | None = None) -> int | None:
        """Least ``k`` with ``u^k = 0``, or None if none up to ``k_max`` (default ``dim + 1``)."""
        if k_max is None:
            k_max = self.dimension + 1
        power = tuple(u)
        for k in range(1, k_max + 1):
            if not any(power):
                return k
            power = self.mul(power, u)
        return None


def torsion_group_algebra(inst: MonoidInstance, K: Field) -> FiniteDimAlgebra:
    basis = tuple(fg.torsion_tuples(inst))
    index = {t: i for i, t in enumerate(basis)}
    table = tuple(
        tuple(index[fg.torsion_multiply(inst, s, t)] for t in basis) for s in basis
    )
    return FiniteDimAlgebra(K, basis, table, index[fg.identity(inst).t])


class _Span:
    """Row-echelon span over a field, for membership tests and rank."""

    def __init__(self, K: Field, dim: int):
        self.K = K
        self.dim = dim
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list:
        K = self.K
        v = [K(x) for x in v]
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = [K(a - c * b) for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        r = self.reduce(v)
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            return False
        inv = self.K.inv(r[piv])
        r = [self.K(inv * x) for x in r]
        for k, (row, p) in enumerate(zip(self.rows, self.pivots)):
            c = row[piv]
            if c:
                self.rows[k] = [self.K(a - c * b) for a, b in zip(row, r)]
        self.rows.append(r)
        self.pivots.append(piv)
        return True

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __len__(self) -> int:
        return len(self.rows)


def radical_basis(A: FiniteDimAlgebra) -> list[tuple]:
    """Basis of the Jacobson radical of the group algebra of the finite abelian group T(G).

    Over characteristic 0 or ``p`` coprime to |T(G)| the radical is zero.
    Otherwise it is spanned by ``(g - 1)h`` for ``g`` in the Sylow p-subgroup
    and ``h`` in T(G).
    """
    if not A.is_commutative():
        raise PreconditionError("radical_basis needs a commutative group algebra")
    p = A.field.p
    d = A.dimension
    if p == 0 or d % p:
        return []
    sylow = []
    for i in range(d):
        o = A.element_order(i)
        while o % p == 0:
            o //= p
        if o == 1:
            sylow.append(i)
    span = _Span(A.field, d)
    one = A.identity_index
    for g in sylow:
        if g == one:
            continue
        for h in range(d):
            v = [0] * d
            v[A.table[g][h]] += 1
            v[h] -= 1
            span.add(v)
    return [tuple(row) for row in span.rows]


def radical_dimension_formula(A: FiniteDimAlgebra) -> int:
    """``|T| - |T| / |Syl_p(T)|``; zero in characteristic 0."""
    p = A.field.p
    d = A.dimension
    if p == 0:
        return 0
    sylow = 1
    while d % (sylow * p) == 0:
        sylow *= p
    return d - d // sylow


def quotient_has_no_nilpotents(A: FiniteDimAlgebra, radical: Sequence[Sequence], n_random: int = 40, seed: int = 0) -> bool:
    """No probe outside the span of ``radical`` becomes nilpotent modulo that span.

    Probes: every basis element, every difference of two basis elements, and
    ``n_random`` seeded random vectors.
    """
    K = A.field
    d = A.dimension
    span = _Span(K, d)
    for v in radical:
        span.add(v)
    probes = [A.unit(i) for i in range(d)]
    for i, j in itertools.combinations(range(d), 2):
        probes.append(A.add(A.unit(i), A.scale(-1, A.unit(j))))
    rng = random.Random(seed)
    modulus = K.p or 7
    for _ in range(n_random):
        probes.append(tuple(K(rng.randrange(modulus)) for _ in range(d)))
    for x in probes:
        if x in span:
            continue
        power = x
        for _ in range(d + 1):
            power = A.mul(power, x)
            if power in span:
                return False
    return True


# ---------------------------------------------------------------- K[G]


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """Finite linear combination of elements of the group of fractions G."""

    inst: MonoidInstance
    field: Field
    terms: Mapping[FractionElement, object]

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        K = self.field
        acc: dict[FractionElement, object] = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = fg.multiply(self.inst, g, h)
                acc[gh] = K(acc.get(gh, 0) + a * b)
        return GroupAlgebraElement(self.inst, K, {g: c for g, c in acc.items() if c})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.field == other.field and dict(self.terms) == dict(other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @classmethod
    def group_element(cls, inst: MonoidInstance, K: Field, g: FractionElement, coeff=1) -> GroupAlgebraElement:
        c = K(coeff)
        return cls(inst, K, {g: c} if c else {})


def to_group_algebra(a: AlgebraElement) -> GroupAlgebraElement:
    """Linear extension of ``from_word`` from K[S] into K[G]."""
    K = a.field
    acc: dict[FractionElement, object] = {}
    for w, c in a.terms.items():
        g = fg.from_word(a.inst, w)
        acc[g] = K(acc.get(g, 0) + c)
    return GroupAlgebraElement(a.inst, K, {g: c for g, c in acc.items() if c})


def trace_deg_zero(beta: GroupAlgebraElement):
    """Coefficient of the identity of G."""
    return beta.terms.get(fg.identity(beta.inst), beta.field.zero)


def group_algebra_nilpotency(beta: GroupAlgebraElement, k_max: int = 8) -> int | None:
    power = beta
    for k in range(1, k_max + 1):
        if power.is_zero():
            return k
        power = power * beta
    return None


def recover_coefficient(alpha: AlgebraElement, j: Sequence[int]):
    """``tr(α · x_{j_{l-1}}^{l-1} ··· x_{j_1}^{l-1} · x1^{-(m + l(l-1))})`` for homogeneous α.

    With α of degree ``m + l - 1`` this returns the coefficient of
    ``x1^m x_{j_1} ··· x_{j_{l-1}}`` in α.
    """
    inst = alpha.inst
    l = inst.l
    if not is_homogeneous(alpha) or alpha.is_zero():
        raise PreconditionError("recover_coefficient needs a non-zero homogeneous element")
    deg = len(next(iter(alpha.terms)))
    m = deg - (l - 1)
    if m < 0:
        raise PreconditionError(f"degree {deg} is below l - 1")
    tail: list[int] = []
    for x in reversed(j):
        tail.extend([x] * (l - 1))
    right = fg.multiply(inst, fg.from_word(inst, tail), fg.x1_power(inst, -(m + l * (l - 1))))
    beta = to_group_algebra(alpha) * GroupAlgebraElement.group_element(inst, alpha.field, right)
    return trace_deg_zero(beta)


__all__ = [
    "QQ",
    "AlgebraElement",
    "Field",
    "FiniteDimAlgebra",
    "GroupAlgebraElement",
    "Nilpotency",
    "group_algebra_nilpotency",
    "homogeneous_components",
    "is_homogeneous",
    "is_nilpotent",
    "multiply_elements",
    "parse_element",
    "quotient_has_no_nilpotents",
    "radical_basis",
    "radical_dimension_formula",
    "recover_coefficient",
    "to_group_algebra",
    "torsion_group_algebra",
    "trace_deg_zero",
]
