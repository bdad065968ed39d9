"""Monoids and algebras defined by permutation relations of abelian type.

The monoid ``S_{n,l}(H)`` has generators ``x_1..x_n`` and relations
``x_{i_1}...x_{i_l} = x_{σ(i_1)}...x_{σ(i_l)}`` for every ``σ`` in a permutation
group ``H``.  Subpackages cover the word problem (:mod:`permrel.rewriting`),
the group of fractions (:mod:`permrel.fraction_group`), the embedding into
the universal group (:mod:`permrel.embedding`) and the semigroup algebra
(:mod:`permrel.algebra`).
"""

from .errors import BudgetExceeded, InconsistencyError, PermrelError, PreconditionError
from .kernels import BACKEND
from .permgroup import (
    GroupClassification,
    Permutation,
    PermutationGroup,
    classify,
    compose,
    cyclic_group,
    generate_closure,
    regular_representation,
    sigma_map,
)
from .rewriting import (
    EquivalenceClass,
    MonoidInstance,
    canonical_form,
    cancellativity_witness,
    count_elements_of_length,
    equivalence_class,
    factorize_lemma_form,
    growth_classify,
    rewrite_step,
    words_equal,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "EquivalenceClass",
    "GroupClassification",
    "InconsistencyError",
    "MonoidInstance",
    "Permutation",
    "PermutationGroup",
    "PermrelError",
    "PreconditionError",
    "canonical_form",
    "cancellativity_witness",
    "classify",
    "compose",
    "count_elements_of_length",
    "cyclic_group",
    "equivalence_class",
    "factorize_lemma_form",
    "generate_closure",
    "growth_classify",
    "regular_representation",
    "rewrite_step",
    "sigma_map",
    "words_equal",
]
