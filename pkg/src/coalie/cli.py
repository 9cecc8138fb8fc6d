"""
Command-line interface.

Exit codes: 0 when every check passes, 1 when some check fails (the report is
still printed), 2 on input errors.
"""

import argparse
import json
import sys

from . import catalog
from .envalg import (EnvelopingAlgebra, check_delta_space, is_involutory, primitives,
                     verify_hopf_axioms)
from .errors import CoalieError, NotLocallyConilpotent, ParseError, RejectedInput
from .exactmath import Subspace
from .formats import (dumps, emit_algebra_file, jsonable, parse_algebra_file, parse_ansatz_file,
                      parse_subspace_file, report_to_dict)
from .liecoalg import (INFINITE, center, cocommutativity_type, conilpotency, coradical_unital,
                       delta_kernel, is_unimodular, kernel_chain, nilpotency,
                       small_centralizer_sampled, verify_structure)
from .search import generate_system, simplify_system

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path):
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror))


def _load(path):
    return parse_algebra_file(_read(path), source=path)


def _out(args, text, doc):
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(text)


def _report_text(title, report):
    lines = [title]
    for c in report:
        lines.append("  %-16s %s%s" % (c.name, c.status, " (%s)" % c.note if c.note else ""))
        for w in c.witnesses:
            lines.append("      %s" % (w,))
    lines.append("result: %s" % ("PASS" if report.all_pass else "FAIL"))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------

def cmd_verify(args):
    status = EXIT_OK
    docs, texts = [], []
    for path in args.files:
        s = _load(path)
        r = verify_structure(s)
        texts.append(_report_text("%s (%s)" % (s.name or path, path), r))
        docs.append({"file": path, "name": s.name, **report_to_dict(r)})
        if not r.all_pass:
            status = EXIT_FAIL
    _out(args, "".join(texts), docs if len(docs) > 1 else docs[0])
    return status


def cmd_invariants(args):
    s = _load(args.file)
    n, con = nilpotency(s), conilpotency(s)
    K = delta_kernel(s) if verify_structure(s).all_pass else None
    Z = center(s)
    cor = coradical_unital(s)
    full = Subspace([s.unit_vector(i) for i in range(s.dim)], s.dim)
    small = small_centralizer_sampled(s, full, Subspace([], s.dim), seed=args.seed,
                                      count=args.samples)
    doc = {
        "name": s.name, "dim": s.dim, "nilpotency": n, "conilpotency": con,
        "kernel_chain": kernel_chain(s),
        "cocommutativity": cocommutativity_type(s),
        "ker_delta": K.render() if K is not None else None,
        "center": Z.render(),
        "coradical": cor.subspace.render(),
        "connected": cor.is_connected,
        "locally_conilpotent": con is not INFINITE,
        "unimodular": is_unimodular(s),
        "small_centralizers_sampled": small.passed,
    }
    if small.witness is not None:
        doc["small_centralizer_witness"] = s.render_vector(small.witness)
    lines = ["%s" % (s.name or args.file)]
    for k, v in doc.items():
        if k != "name":
            lines.append("  %-28s %s" % (k, jsonable(v)))
    _out(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK if cor.is_connected == (con is not INFINITE) else EXIT_FAIL


def cmd_antipode(args):
    s = _load(args.file)
    U = EnvelopingAlgebra.of(s)
    try:
        gens = [(U.names[i], U.antipode(U.generator(i))) for i in range(U.n)]
    except NotLocallyConilpotent as exc:
        _out(args, "no antipode: %s\n" % exc, {"name": s.name, "antipode": None,
                                              "error": str(exc)})
        return EXIT_FAIL
    witnesses = {}
    inv = is_involutory(s, witnesses)
    hopf = verify_hopf_axioms(s, args.max_degree, seed=args.seed)
    lines = []
    for name, v in gens:
        lines.append("S(%s) = %s" % (name, U.render(v)))
    for name, v in gens:
        lines.append("S^2(%s) = %s" % (name, U.render(U.antipode(v))))
    lines.append("involutory: %s" % ("yes" if inv else "no"))
    for name, w in witnesses.items():
        lines.append("  S^2(%s) - %s = %s" % (name, name,
                                              U.render(w - U.generator(U.names.index(name)))))
    text = "\n".join(lines) + "\n" + _report_text(
        "hopf axioms up to degree %d" % args.max_degree, hopf)
    doc = {"name": s.name,
           "antipode": {n: U.render(v) for n, v in gens},
           "antipode_squared": {n: U.render(U.antipode(v)) for n, v in gens},
           "involutory": inv,
           "hopf_axioms": report_to_dict(hopf)}
    _out(args, text, doc)
    return EXIT_OK if hopf.all_pass else EXIT_FAIL


def cmd_primitives(args):
    s = _load(args.file)
    U = EnvelopingAlgebra.of(s)
    space, elements = primitives(s, args.degree)
    rendered = [U.render(e) for e in elements]
    text = "primitives up to degree %d: dim %d\n" % (args.degree, space.dim)
    text += "".join("  %s\n" % r for r in rendered)
    _out(args, text, {"name": s.name, "degree": args.degree, "dim": space.dim,
                      "basis": rendered})
    return EXIT_OK


def cmd_deltaspace(args):
    s = _load(args.file)
    V = parse_subspace_file(_read(args.subspace), s, source=args.subspace)
    r = check_delta_space(s, V)
    _out(args, _report_text("delta-space check", r), report_to_dict(r))
    return EXIT_OK if r.all_pass else EXIT_FAIL


def cmd_search(args):
    fixed = _load(args.fixed)
    ansatz = parse_ansatz_file(_read(args.ansatz), fixed, source=args.ansatz)
    if args.mode and args.mode != ansatz.mode:
        raise InputError("--mode %s does not match the ansatz mode %s" % (args.mode, ansatz.mode))
    system = generate_system(fixed, ansatz)
    outcome = simplify_system(system)
    text = system.to_text() + "\n" + outcome.render()
    doc = {"unknowns": system.unknowns, "auxiliary": system.auxiliary,
           "equations": [{"poly": str(p), "provenance": str(pr)} for p, pr in system.equations],
           "reductions": [{"poly": str(p), "provenance": str(pr)} for p, pr in system.reductions],
           "status": outcome.status,
           "bindings": {u: str(v) for u, v in outcome.bindings.items()},
           "free": outcome.free,
           "derived_facts": [str(f) for f in outcome.derived_facts],
           "residual": [{"poly": str(p), "provenance": str(pr)}
                        for p, pr in outcome.residual_equations]}
    _out(args, text, doc)
    return EXIT_OK if outcome.status != "residual" else EXIT_FAIL


def cmd_catalog(args):
    if args.action == "list":
        lines = []
        for name in catalog.names():
            e = catalog.get(name)
            lines.append("%-20s %s%s" % (name, e.summary, "  [failing fixture]" if e.failing else ""))
        _out(args, "\n".join(lines) + "\n",
             [{"name": n, "summary": catalog.get(n).summary, "defaults": catalog.get(n).defaults}
              for n in catalog.names()])
        return EXIT_OK
    if not args.name:
        raise InputError("catalog emit needs an entry name")
    params = {}
    if args.params:
        params = json.loads(_read(args.params).decode("utf-8"))
        if not isinstance(params, dict):
            raise InputError("params file must hold an object")
    s = catalog.build(args.name, params)
    sys.stdout.write(emit_algebra_file(s))
    return EXIT_OK


def cmd_survey(args):
    table = catalog.survey_question_0_4()
    doc = {"rows": [dict(zip(("name", "n", "con", "dim", "value"), r)) for r in table.rows],
           "excluded": [{"name": n, "reason": w} for n, w in table.excluded],
           "max_value": table.max_value, "bound_holds": table.bound_holds}
    _out(args, table.render(), doc)
    return EXIT_OK if table.bound_holds else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled checks (default 0)")
    common.add_argument("--max-degree", type=int, default=3)
    common.add_argument("--samples", type=int, default=64,
                        help="sample count for the sampled centralizer check")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="coalie", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("verify", parents=[common], help="check all axioms of algebra files")
    q.add_argument("files", nargs="+")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("invariants", parents=[common], help="structural invariants")
    q.add_argument("file")
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("antipode", parents=[common], help="antipode on generators and S^2")
    q.add_argument("file")
    q.set_defaults(func=cmd_antipode)

    q = sub.add_parser("primitives", parents=[common], help="primitive elements of U(L)")
    q.add_argument("file")
    q.add_argument("--degree", type=int, default=2)
    q.set_defaults(func=cmd_primitives)

    q = sub.add_parser("deltaspace", parents=[common], help="check a candidate delta-space")
    q.add_argument("file")
    q.add_argument("--subspace", required=True)
    q.set_defaults(func=cmd_deltaspace)

    q = sub.add_parser("search", parents=[common], help="generate and simplify a constraint system")
    q.add_argument("--fixed", required=True)
    q.add_argument("--ansatz", required=True)
    q.add_argument("--mode", choices=("coproduct", "bracket"))
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("catalog", parents=[common], help="list or emit built-in structures")
    q.add_argument("action", choices=("list", "emit"))
    q.add_argument("name", nargs="?")
    q.add_argument("--params")
    q.set_defaults(func=cmd_catalog)

    q = sub.add_parser("survey", parents=[common], help="n(L) + con(L) - dim L over the catalog")
    q.set_defaults(func=cmd_survey)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError, RejectedInput, json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT
    except CoalieError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
