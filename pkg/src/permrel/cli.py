"""Command-line front end: ``permrel <command> --instance file.json [args]``.

Every command is a thin adapter over a library call; the payload is what the
library returned, serialised with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Sequence

from . import algebra, embedding
from . import fraction_group as fg
from .errors import PermrelError
from .permgroup import Permutation, generate_closure
from .rewriting import (
    DEFAULT_CLASS_CAP,
    DEFAULT_ENUM_BUDGET,
    MonoidInstance,
    cancellativity_witness,
    count_elements_of_length,
    equivalence_class,
    growth_classify,
    words_equal,
)


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    l: int
    generators: tuple[Permutation, ...]

    def build(self, class_cap: int = DEFAULT_CLASS_CAP, enum_budget: int = DEFAULT_ENUM_BUDGET) -> MonoidInstance:
        return MonoidInstance(
            self.n, self.l, generate_closure(self.generators, self.n),
            class_cap=class_cap, enum_budget=enum_budget,
        )

    def as_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "generators": [list(g.images) for g in self.generators]}


def _parse_generator(n: int, g: Any, k: int) -> Permutation:
    try:
        if isinstance(g, str):
            if g.strip().startswith("["):
                g = json.loads(g)
            else:
                return Permutation.parse_cycles(n, g)
        if not isinstance(g, list):
            raise ValueError("expected an image array or a cycle string")
        if len(g) != n:
            raise ValueError(f"expected {n} images, got {len(g)}")
        return Permutation(tuple(g))
    except (ValueError, json.JSONDecodeError) as exc:
        raise ValueError(f"generators[{k}]: {exc}") from None


def parse_instance(text: str | dict) -> InstanceSpec:
    """Parse ``{"n": int, "l": int, "generators": [...]}`` from JSON text or a dict."""
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict):
        raise ValueError("instance must be a JSON object")
    for key in ("n", "l", "generators"):
        if key not in data:
            raise ValueError(f"missing field {key!r}")
    n, l, gens = data["n"], data["l"], data["generators"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n: expected a positive integer, got {n!r}")
    if not isinstance(l, int) or isinstance(l, bool):
        raise ValueError(f"l: expected an integer, got {l!r}")
    if l < 2:
        raise ValueError("l must be ≥ 2")
    if not isinstance(gens, list):
        raise ValueError("generators: expected a list")
    return InstanceSpec(n, l, tuple(_parse_generator(n, g, k) for k, g in enumerate(gens)))


def parse_word(text: str | Sequence[int]) -> tuple[int, ...]:
    """``"1 2 3"`` -> ``(1, 2, 3)``; the empty string is the empty word."""
    if not isinstance(text, str):
        return tuple(text)
    text = text.strip()
    if text in ("", "1", "e", "()"):
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"malformed word {text!r}; use space-separated indices like '1 2 3'") from None


COMMANDS = (
    "classify", "eq", "canon", "count", "growth", "cancel",
    "group-info", "embed-check", "radical", "nilpotent",
)


def run_command(inst: MonoidInstance, command: str, options: dict) -> dict:
    """Dispatch ``command`` and return its result payload."""
    if command == "classify":
        out = inst.classification.as_dict()
        out["order"] = inst.H.order
        return out
    if command == "eq":
        u, v = parse_word(options["w1"]), parse_word(options["w2"])
        return {"equal": words_equal(inst, u, v)}
    if command == "canon":
        cls = equivalence_class(inst, parse_word(options["w"]))
        return {"canonical": list(cls.canonical), "class_size": len(cls)}
    if command == "count":
        m = int(options["m"])
        return {"m": m, "count": count_elements_of_length(inst, m)}
    if command == "growth":
        report = growth_classify(inst, int(options["m_max"]))
        return {"growth": report.kind, "counts": {str(m): c for m, c in report.counts.items()}}
    if command == "cancel":
        L = int(options["L"])
        wit = cancellativity_witness(inst, L)
        payload = None
        if wit is not None:
            payload = {"a": list(wit.a), "b": list(wit.b), "c": list(wit.c), "side": wit.side}
        return {"L": L, "witness": payload, "cancellative_up_to_L": wit is None}
    if command == "group-info":
        fg.require_regular_abelian(inst)
        cen = fg.centrality_check(inst)
        return {
            "torsion_subgroup_order": inst.H.order ** (inst.l - 1),
            "torsion_factors": inst.l - 1,
            "exponent": inst.H.exponent,
            "x1_power_central": cen.central,
            "index_of_x1_power": cen.index,
            "expected_index": cen.expected_index,
            "generators": {str(j): fg.generator(inst, j).as_dict() for j in range(1, inst.n + 1)},
        }
    if command == "embed-check":
        L = int(options["L"])
        return {
            "L": L,
            "relation_check": embedding.relation_check(inst, options.get("sample_budget", 200_000)),
            "injective": embedding.injectivity_check(inst, L),
        }
    if command == "radical":
        fg.require_regular_abelian(inst)
        K = algebra.Field.parse(str(options["p"]))
        A = algebra.torsion_group_algebra(inst, K)
        basis = algebra.radical_basis(A)
        return {
            "field": str(K),
            "dimension": A.dimension,
            "radical_dimension": len(basis),
            "formula_dimension": algebra.radical_dimension_formula(A),
            "all_nilpotent": all(A.nilpotency_index(v) is not None for v in basis),
            "basis": [[str(c) for c in v] for v in basis],
        }
    if command == "nilpotent":
        K = options.get("field") or algebra.QQ
        a = algebra.parse_element(inst, K, options["element"])
        res = algebra.is_nilpotent(a, int(options["k_max"]))
        return {
            "field": str(K),
            "element": a.as_dict(),
            "homogeneous": algebra.is_homogeneous(a),
            "nilpotent": res.nilpotent,
            "exponent": res.exponent,
            "k_max": res.k_max,
        }
    raise ValueError(f"unknown command {command!r}")


def make_report(command: str, spec: InstanceSpec, result: dict, elapsed_ms: int) -> dict:
    return {"command": command, "instance": spec.as_dict(), "result": result, "elapsed_ms": elapsed_ms}


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("instance")
    src.add_argument("--instance", metavar="FILE", help="JSON file {n, l, generators}")
    src.add_argument("--n", type=int, help="degree (inline instance)")
    src.add_argument("--l", type=int, help="relation length (inline instance)")
    src.add_argument("--gen", action="append", default=[], metavar="PERM",
                     help="generator as cycles '(1 2 3)' or images '[2,3,1]'; repeatable")
    common.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET,
                        help="enumeration budget (default %(default)s words)")
    common.add_argument("--class-cap", type=int, default=DEFAULT_CLASS_CAP,
                        help="equivalence-class size cap (default %(default)s)")
    common.add_argument("--field", default="q", help="q or p=<prime> (default %(default)s)")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")

    parser = argparse.ArgumentParser(
        prog="permrel",
        description="Monoids S_{n,l}(H) defined by permutation relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="structural flags of H")
    p = sub.add_parser("eq", parents=[common], help="word problem")
    p.add_argument("w1")
    p.add_argument("w2")
    p = sub.add_parser("canon", parents=[common], help="canonical form and class size")
    p.add_argument("w")
    p = sub.add_parser("count", parents=[common], help="number of elements of length m")
    p.add_argument("m", type=int)
    p = sub.add_parser("growth", parents=[common], help="linear or exponential growth")
    p.add_argument("m_max", type=int)
    p = sub.add_parser("cancel", parents=[common], help="search for a cancellativity witness")
    p.add_argument("L", type=int)
    sub.add_parser("group-info", parents=[common], help="group of fractions (regular abelian H)")
    p = sub.add_parser("embed-check", parents=[common], help="faithfulness of the configuration action")
    p.add_argument("L", type=int)
    p.add_argument("--sample-budget", type=int, default=200_000)
    p = sub.add_parser("radical", parents=[common], help="radical of K[T(G)]")
    p.add_argument("p", help="0 or q for the rationals, else a prime")
    p = sub.add_parser("nilpotent", parents=[common], help="nilpotency of an element of K[S]")
    p.add_argument("element", help="e.g. 'x2 - x1'")
    p.add_argument("k_max", type=int)
    return parser


def _load_spec(args: argparse.Namespace) -> InstanceSpec:
    if args.instance:
        with open(args.instance, encoding="utf-8") as fh:
            return parse_instance(fh.read())
    if args.n is None or args.l is None:
        raise ValueError("give --instance FILE or both --n and --l (with optional --gen)")
    return parse_instance({"n": args.n, "l": args.l, "generators": list(args.gen)})


def _render_text(report: dict) -> str:
    lines = [f"{report['command']}  (n={report['instance']['n']}, l={report['instance']['l']})"]
    for key, val in sorted(report["result"].items()):
        lines.append(f"  {key}: {json.dumps(val, sort_keys=True)}")
    lines.append(f"  elapsed_ms: {report['elapsed_ms']}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _load_spec(args)
        inst = spec.build(class_cap=args.class_cap, enum_budget=args.budget)
        options = dict(vars(args))
        options["field"] = algebra.Field.parse(args.field)
        start = time.perf_counter()
        result = run_command(inst, args.command, options)
        elapsed = int((time.perf_counter() - start) * 1000)
    except (PermrelError, ValueError, OSError) as exc:
        print(f"permrel: error: {exc}", file=sys.stderr)
        return 1
    report = make_report(args.command, spec, result, elapsed)
    print(dumps(report) if args.json else _render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
