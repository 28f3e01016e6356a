"""Command-line front end: ``racg-lcs <subcommand> --input COMPLEX [options]``.

COMPLEX is a path to a JSON file, ``-`` for stdin, or the JSON text itself.
Exit status: 0 success, 1 input error, 2 a consistency check failed.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import gf2
from .acceptance import run_all
from .complexes import (MAX_SUBSET_ENUMERATION, Complex1Skeleton, ComplexError,
                        complex_to_dict, connected_components, full_subcomplex, parse_complex,
                        rk_homology_gf2)
from .lcs import (GeneratorSet, certificates, commutant_generators, l4_generators,
                  l4_generators_small, lk_basis, magnus_matrix, magnus_rank_of, restrict)
from .magnus import (DEFAULT_MAX_DEGREE, TruncationError, graded_component, mu, not_in_gamma,
                     render_monomial, render_series, series_to_json)
from .words import commutator_weight, evaluate_commutator, normalize, parse_commutator, parse_word

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Report:
    data: dict
    text: list[str]
    status: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def load_complex(source: str | None) -> Complex1Skeleton:
    if source is None:
        raise InputError("--input is required for this subcommand")
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return parse_complex(text)


def _fmt(c) -> str:
    return "(" + ",".join(map(str, c)) + ")"


def _generator_lines(gens: GeneratorSet) -> list[str]:
    if not len(gens):
        return ["  (none)"]
    width = max(len(_fmt(c)) for c in gens)
    return [f"  {_fmt(c):<{width}}  {why}" for c, why in zip(gens.commutators, gens.provenance)]


def cmd_info(K: Complex1Skeleton, args) -> Report:
    comps = connected_components(K)
    data = {"complex": complex_to_dict(K), "m": K.m, "edges": [list(e) for e in K.edges],
            "non_edges": [list(e) for e in K.non_edges()], "components": comps}
    text = [f"m          {K.m}",
            f"edges      {' '.join(_fmt(e) for e in K.edges) or '-'}",
            f"non-edges  {' '.join(_fmt(e) for e in K.non_edges()) or '-'}",
            f"components {' '.join(_fmt(c) for c in comps) or '-'}",
            f"mode       {'facets' if K.facets is not None else 'flag' if K.flag_mode else '1-dimensional'}"]
    return Report(data, text)


def cmd_commutant(K: Complex1Skeleton, args) -> Report:
    gens = commutant_generators(K)
    data = {"generators": gens.to_json()}
    text = [f"commutant generators: {len(gens)}"] + _generator_lines(gens)
    status = EXIT_OK
    if K.m <= MAX_SUBSET_ENUMERATION:
        # both counts equal the number of free factors of the commutant
        rank = rk_homology_gf2(K, 1)
        ok = rank == len(gens)
        data["homology_check"] = {"sum_reduced_h0": rank, "agrees": ok}
        text.append(f"homology cross-check: sum of reduced H0 over full subcomplexes = {rank} "
                    f"({'agrees' if ok else 'MISMATCH'})")
        status = EXIT_OK if ok else EXIT_CHECK
    return Report(data, text, status)


def cmd_lcs_basis(K: Complex1Skeleton, args) -> Report:
    if args.degree not in (1, 2, 3):
        raise InputError("--degree must be 1, 2 or 3")
    gens = lk_basis(K, args.degree)
    return Report(gens.to_json(),
                  [f"basis of L^{args.degree}: {len(gens)} elements"] + _generator_lines(gens))


def cmd_l4_gens(K: Complex1Skeleton, args) -> Report:
    gens = l4_generators(K)
    data = gens.to_json()
    text = [f"generators of L^4: {len(gens)}"]
    status = EXIT_OK
    if not args.verify:
        return Report(data, text + _generator_lines(gens))
    certs = certificates(K, gens, 4)
    rank = magnus_rank_of(K, gens, 4)
    bad = []
    for J in itertools.combinations(K.vertices, 4):
        sub, labels = full_subcomplex(K, J)
        ref = [tuple(labels[t - 1] for t in c) for c in l4_generators_small(sub)]
        if not gf2.same_span(magnus_matrix(K, restrict(gens, J), 4), magnus_matrix(K, ref, 4)):
            bad.append(list(J))
    data["verify"] = {"mu4_rank_lower_bound": rank,
                      "certificates": [[list(c), certs[c].value] for c in gens],
                      "subset_span_mismatches": bad}
    width = max((len(_fmt(c)) for c in gens), default=0)
    text += [f"  {_fmt(c):<{width}}  {certs[c].value:<16}  {why}"
             for c, why in zip(gens.commutators, gens.provenance)]
    text.append(f"rank of degree-4 Magnus images (lower bound for dim L^4): {rank}")
    text.append(f"4-subsets whose Magnus span differs from the table set: {len(bad)}")
    if bad:
        status = EXIT_CHECK
    return Report(data, text, status)


def _word_arg(args) -> str:
    if args.word is None:
        raise InputError("--word is required")
    return args.word


def cmd_mu(K: Complex1Skeleton, args) -> Report:
    w = normalize(K, parse_word(_word_arg(args).replace(",", " ")))
    s = mu(K, w, args.max_degree)
    data = {"word": list(w), "max_degree": args.max_degree, "series": series_to_json(s)}
    return Report(data, [f"word (normal form): {' '.join(map(str, w)) or '(identity)'}",
                         f"mu up to degree {args.max_degree}: {render_series(s)}"])


def cmd_not_in_gamma(K: Complex1Skeleton, args) -> Report:
    if args.k is None:
        raise InputError("--k is required")
    if args.k < 1:
        raise InputError("--k must be at least 1")
    if args.k > args.max_degree:
        raise TruncationError(f"--k {args.k} exceeds --max-degree {args.max_degree}")
    if (args.commutator is None) == (args.word is None):
        raise InputError("give exactly one of --commutator and --word")
    if args.commutator is not None:
        expr = parse_commutator(args.commutator)
        w = evaluate_commutator(K, expr)
        label, weight = args.commutator, commutator_weight(expr)
    else:
        w = normalize(K, parse_word(args.word.replace(",", " ")))
        label, weight = args.word, None
    cert = not_in_gamma(K, w, args.k, args.max_degree)
    component = sorted(graded_component(mu(K, w, args.k), args.k))
    data = {"element": label, "word": list(w), "k": args.k, "certificate": cert.value,
            "degree_k_terms": [list(t) for t in component]}
    text = [f"element: {label}  (word length {len(w)})"]
    if weight is not None:
        data["weight"] = weight
        text.append(f"lies in gamma_{weight} by construction")
    text.append(f"degree-{args.k} component of mu: "
                f"{' + '.join(render_monomial(t) for t in component) or '0'}")
    text.append(f"not in gamma_{args.k + 1}: {cert.value}")
    return Report(data, text)


def cmd_homology(K: Complex1Skeleton, args) -> Report:
    if args.k is None:
        raise InputError("--k is required")
    if args.k < 0:
        raise InputError("--k must be nonnegative")
    rank = rk_homology_gf2(K, args.k)
    return Report({"k": args.k, "rank": rank},
                  [f"sum over J of dim reduced H_{args.k - 1}(K_J; Z2) = {rank}"])


def cmd_selftest(args) -> Report:
    results = run_all(timings=args.timings)
    ok = all(r.passed for r in results)
    data = {"passed": ok, "criteria": [r.to_json(args.timings) for r in results]}
    text = [r.line(args.timings) for r in results]
    text.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return Report(data, text, EXIT_OK if ok else EXIT_CHECK)


COMMANDS: dict[str, Callable] = {
    "info": cmd_info,
    "commutant-gens": cmd_commutant,
    "lcs-basis": cmd_lcs_basis,
    "l4-gens": cmd_l4_gens,
    "mu": cmd_mu,
    "not-in-gamma": cmd_not_in_gamma,
    "homology": cmd_homology,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser = _Parser(prog="racg-lcs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "info": "vertex count, edges and connected components",
        "commutant-gens": "minimal generators of the commutant with a homology cross-check",
        "lcs-basis": "basis of L^1, L^2 or L^3",
        "l4-gens": "generating set of L^4 built from 4-point tables",
        "mu": "Magnus image of a word",
        "not-in-gamma": "one-sided certificate that an element lies outside gamma_{k+1}",
        "homology": "sum of mod-2 reduced homology ranks over full subcomplexes",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--input", help="JSON file, '-' for stdin, or inline JSON")
        if name == "lcs-basis":
            p.add_argument("--degree", type=int, required=True)
        if name == "l4-gens":
            p.add_argument("--verify", action="store_true",
                           help="add Magnus rank, certificates and per-subset span checks")
        if name in ("mu", "not-in-gamma"):
            p.add_argument("--word", help="space- or comma-separated generator indices")
            p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        if name == "not-in-gamma":
            p.add_argument("--commutator", help="e.g. '2,4,3,1' or '((2,4),(1,3))'")
        if name in ("not-in-gamma", "homology"):
            p.add_argument("--k", type=int)
    p = sub.add_parser("selftest", parents=[common], help="run the reproduction checks")
    p.add_argument("--timings", action="store_true", help="include elapsed times")
    return parser


def run(argv: list[str] | None = None) -> tuple[Report | None, str | None, bool]:
    """Parse and execute; returns (report, error message, json flag)."""
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "max_degree", 0) < 0:
            raise InputError("--max-degree must be nonnegative")
        if args.command == "selftest":
            return cmd_selftest(args), None, args.json
        K = load_complex(args.input)
        return COMMANDS[args.command](K, args), None, args.json
    except (InputError, ComplexError, TruncationError, ValueError) as exc:
        return None, str(exc), args.json


def main(argv: list[str] | None = None) -> int:
    report, error, as_json = run(argv)
    if error is not None:
        print(f"racg-lcs: error: {error}", file=sys.stderr)
        return EXIT_INPUT
    if as_json:
        print(json.dumps(report.data, indent=2, sort_keys=True))
    else:
        print("\n".join(report.text))
    return report.status


if __name__ == "__main__":
    sys.exit(main())
