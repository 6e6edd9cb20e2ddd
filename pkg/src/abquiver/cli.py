"""Batch command line front end.

Each subcommand fronts one engine operation, reads the declared text
formats, and emits a deterministic key/value report (or JSON with --json).
With --dump the report is replaced by the canonical text of the primary
object, which re-parses to an equal object.  Exit codes: 0 success, 1
domain error, 2 parse error.
"""

import argparse
import json
import sys

from .abcat import (ALL_MODULES, AbObject, SerreKernelOracle, check_morphism,
                    equal_in_quotient, in_kernel,
                    same_regular_theory_bounded)
from .dsl import render_formula
from .errors import EngineError, ParseError
from .formats import (pair_to_text, parse_pair_file, parse_pair_list,
                      parse_pairs_category, parse_quiver,
                      parse_representation, parse_formula_file,
                      quiver_to_text, representation_to_text)
from .formulas import evaluate, implies_all, is_closed, pair_value
from .fpmodules import free_realization, hom_basis
from .nori import build_nori_diagram, check_les_exactness, \
    homology_representation
from .scalars import ring_from_tag


def _read(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


class _FileContext:
    """Prefix parse errors with the file being parsed."""

    def __init__(self, path):
        self.path = path

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, traceback):
        if exc_type is not None and issubclass(exc_type, ParseError):
            raise ParseError("%s: %s" % (self.path, exc)) from None
        return False


def _parse_file(path, parser, *args):
    with _FileContext(path):
        return parser(_read(path), *args)


def _load_quiver(args):
    return _parse_file(args.quiver, parse_quiver)


def _load_rep(args, quiver, attr="rep"):
    path = getattr(args, attr)
    return _parse_file(path, parse_representation, quiver)


def _invariants_entry(report, invariants):
    report["invariants"] = {"free_rank": invariants.free_rank,
                            "torsion": list(invariants.torsion)}


def _matrix_entry(matrix):
    return [[str(x) for x in row] for row in matrix.entries]


def _subobject_report(report, sub, show):
    _invariants_entry(report, sub.invariants())
    report["generators"] = len(sub.rows)
    if show:
        report["basis"] = [[str(x) for x in row] for row in sub.rows]


# ---------------------------------------------------------------------------
# Command handlers: each returns (report dict, dump text or None)


def cmd_eval(args):
    quiver = _load_quiver(args)
    rep = _load_rep(args, quiver)
    formula = _parse_file(args.formula, parse_formula_file, quiver, rep.ring)
    sub = evaluate(formula, rep)
    report = {}
    _subobject_report(report, sub, args.show_matrices)
    return report, render_formula(formula) + "\n"


def cmd_pair_value(args):
    quiver = _load_quiver(args)
    rep = _load_rep(args, quiver)
    pair = _parse_file(args.pair, parse_pair_file, quiver, rep.ring)
    report = {}
    _invariants_entry(report, pair_value(pair, rep))
    return report, pair_to_text(pair)


def cmd_closed(args):
    quiver = _load_quiver(args)
    rep = _load_rep(args, quiver)
    pair = _parse_file(args.pair, parse_pair_file, quiver, rep.ring)
    verdict = is_closed(pair, rep)
    return {"verdict": verdict}, pair_to_text(pair)


def cmd_implies_all(args):
    quiver = _load_quiver(args)
    ring = ring_from_tag(args.ring)
    first = _parse_file(args.formula[0], parse_formula_file, quiver, ring)
    second = _parse_file(args.formula[1], parse_formula_file, quiver, ring)
    verdict = implies_all(first, second)
    dump = render_formula(first) + "\n" + render_formula(second) + "\n"
    return {"verdict": verdict}, dump


def cmd_hom(args):
    quiver = _load_quiver(args)
    ring = ring_from_tag(args.ring)
    first = _parse_file(args.formula[0], parse_formula_file, quiver, ring)
    second = _parse_file(args.formula[1], parse_formula_file, quiver, ring)
    source, _ = free_realization(first)
    target, _ = free_realization(second)
    basis = hom_basis(source, target)
    report = {"dimension": len(basis)}
    if args.show_matrices:
        rendered = []
        for morphism in basis:
            rendered.append([[repr(x) for x in row]
                             for row in morphism.matrix.entries])
        report["basis"] = rendered
    return report, None


def cmd_kernel_member(args):
    quiver = _load_quiver(args)
    if args.axioms is not None:
        ring = ring_from_tag(args.ring)
        pair = _parse_file(args.pair, parse_pair_file, quiver, ring)
        generators = [p for _, p in _parse_file(
            args.axioms, parse_pair_list, quiver, ring)]
        oracle = SerreKernelOracle.axioms(generators, args.budget)
    else:
        rep = _load_rep(args, quiver)
        pair = _parse_file(args.pair, parse_pair_file, quiver, rep.ring)
        oracle = SerreKernelOracle.model(rep)
    verdict = in_kernel(AbObject(pair), oracle)
    return {"verdict": verdict}, pair_to_text(pair)


def cmd_morphism_check(args):
    quiver = _load_quiver(args)
    if args.rep is not None:
        rep = _load_rep(args, quiver)
        ring = rep.ring
        mode = rep
        mode_name = "on_representation"
    else:
        ring = ring_from_tag(args.ring)
        mode = ALL_MODULES
        mode_name = ALL_MODULES
    source = AbObject(_parse_file(args.src, parse_pair_file, quiver, ring))
    target = AbObject(_parse_file(args.tgt, parse_pair_file, quiver, ring))
    theta = _parse_file(args.theta, parse_formula_file, quiver, ring)
    verdict = check_morphism(theta, source, target, mode)
    return {"mode": mode_name, "verdict": verdict}, \
        render_formula(theta) + "\n"


def cmd_quotient_equal(args):
    quiver = _load_quiver(args)
    rep = _load_rep(args, quiver)
    ring = rep.ring
    source = AbObject(_parse_file(args.src, parse_pair_file, quiver, ring))
    target = AbObject(_parse_file(args.tgt, parse_pair_file, quiver, ring))
    theta_f = _parse_file(args.theta, parse_formula_file, quiver, ring)
    theta_g = _parse_file(args.theta2, parse_formula_file, quiver, ring)
    from .abcat import AbMorphism
    f = AbMorphism(source, target, theta_f, rep)
    g = AbMorphism(source, target, theta_g, rep)
    verdict = equal_in_quotient(f, g, rep)
    return {"verdict": verdict}, None


def cmd_same_theory(args):
    quiver = _load_quiver(args)
    first = _load_rep(args, quiver)
    second = _load_rep(args, quiver, attr="rep2")
    named = _parse_file(args.probes, parse_pair_list, quiver, first.ring)
    verdict, witness = same_regular_theory_bounded(
        first, second, [p for _, p in named])
    report = {"verdict": verdict, "witness": None}
    if witness is not None:
        for name, pair in named:
            if pair == witness:
                report["witness"] = name
                break
    return report, None


def cmd_nori_build(args):
    data = _parse_file(args.pairs, parse_pairs_category)
    diagram = build_nori_diagram(data, args.dmax)
    report = {"vertices": len(diagram.quiver.vertices),
              "arrows": len(diagram.quiver.arrows)}
    return report, quiver_to_text(diagram.quiver)


def cmd_nori_homology(args):
    data = _parse_file(args.pairs, parse_pairs_category)
    ring = ring_from_tag(args.ring)
    diagram = build_nori_diagram(data, args.dmax)
    rep = homology_representation(data, diagram, ring)
    report = {"ring": ring.name, "fibers": {}}
    for vertex in diagram.quiver.vertices:
        inv = rep.fiber(vertex).invariants()
        report["fibers"][vertex] = {"free_rank": inv.free_rank,
                                    "torsion": list(inv.torsion)}
    if args.show_matrices:
        report["arrows"] = {a.name: _matrix_entry(rep.arrow_matrix(a.name))
                            for a in diagram.quiver.arrows}
    return report, representation_to_text(rep)


def cmd_les_check(args):
    data = _parse_file(args.pairs, parse_pairs_category)
    ring = ring_from_tag(args.ring)
    diagram = build_nori_diagram(data, args.dmax)
    rep = homology_representation(data, diagram, ring)
    verdict = check_les_exactness(rep, data, diagram, args.triple,
                                  range(0, args.dmax + 1))
    return {"triple": args.triple, "verdict": verdict}, None


COMMANDS = {
    "eval": cmd_eval,
    "pair-value": cmd_pair_value,
    "closed": cmd_closed,
    "implies-all": cmd_implies_all,
    "hom": cmd_hom,
    "kernel-member": cmd_kernel_member,
    "morphism-check": cmd_morphism_check,
    "quotient-equal": cmd_quotient_equal,
    "same-theory": cmd_same_theory,
    "nori-build": cmd_nori_build,
    "nori-homology": cmd_nori_homology,
    "les-check": cmd_les_check,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="abquiver",
        description="exact computations with pp-pairs over a quiver")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **needs):
        p = sub.add_parser(name)
        if needs.get("quiver"):
            p.add_argument("--quiver", required=True)
        if needs.get("rep"):
            p.add_argument("--rep", required=needs["rep"] == "required")
        if needs.get("rep2"):
            p.add_argument("--rep2", required=True)
        if needs.get("pair"):
            p.add_argument("--pair", required=True)
        if needs.get("formulas"):
            p.add_argument("--formula", action="append", required=True)
        if needs.get("formula1"):
            p.add_argument("--formula", required=True)
        if needs.get("ring"):
            p.add_argument("--ring", required=needs["ring"] == "required",
                           help="Q, Fp:N or Z")
        p.add_argument("--json", action="store_true")
        p.add_argument("--show-matrices", action="store_true",
                       dest="show_matrices")
        p.add_argument("--dump", action="store_true")
        return p

    add("eval", quiver=True, rep="required", formula1=True)
    add("pair-value", quiver=True, rep="required", pair=True)
    add("closed", quiver=True, rep="required", pair=True)
    add("implies-all", quiver=True, formulas=True, ring="required")
    add("hom", quiver=True, formulas=True, ring="required")
    p = add("kernel-member", quiver=True, rep="optional", pair=True,
            ring="optional")
    p.add_argument("--axioms")
    p.add_argument("--budget", type=int, default=2)
    p = add("morphism-check", quiver=True, rep="optional", ring="optional")
    p.add_argument("--theta", required=True)
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p = add("quotient-equal", quiver=True, rep="required")
    p.add_argument("--theta", required=True)
    p.add_argument("--theta2", required=True)
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p = add("same-theory", quiver=True, rep="required", rep2=True)
    p.add_argument("--probes", required=True)
    p = add("nori-build")
    p.add_argument("--pairs", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p = add("nori-homology", ring="required")
    p.add_argument("--pairs", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p = add("les-check", ring="required")
    p.add_argument("--pairs", required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--triple", required=True)
    return parser


def _flatten(report, prefix=""):
    lines = []
    for key, value in report.items():
        path = prefix + key
        if isinstance(value, dict):
            lines.extend(_flatten(value, path + "."))
        elif isinstance(value, bool):
            lines.append("%s: %s" % (path, "true" if value else "false"))
        elif isinstance(value, list):
            lines.append("%s: %s" % (path, json.dumps(value)))
        elif value is None:
            lines.append("%s: none" % path)
        else:
            lines.append("%s: %s" % (path, value))
    return lines


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command]
    try:
        report, dump = handler(args)
    except ParseError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return 2
    except EngineError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    if args.dump:
        if dump is None:
            print("error: this command has nothing to dump", file=sys.stderr)
            return 1
        sys.stdout.write(dump)
        return 0
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in _flatten(report):
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
