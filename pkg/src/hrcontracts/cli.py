"""Command-line front end: ``hrc <group> <command> <spec.hrc> [options]``.

Exit codes: 0 pass / true, 1 fail / false, 2 usage error, 3 semantic error
(parse, type, undefined name, universe cap).
"""
from __future__ import annotations

import argparse
import sys

from . import contracts as ca
from . import profiled as pf
from .assertion import receptiveness_witness
from .components import check_component, check_system
from .config import limits
from .dsl import Model, parse, parse_file
from .dsl.printer import _fmt_hist, print_assertion
from .errors import ContractError, SpecError
from .report import Report
from .verify import random_spec_text, verify_document

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _csv(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return n


def _global_flags(parser, defaults):
    sup = argparse.SUPPRESS
    parser.add_argument("--format", choices=("text", "json"),
                        default="text" if defaults else sup)
    parser.add_argument("--max-universe", type=_positive, default=None if defaults else sup)
    parser.add_argument("--seed", type=int, default=0 if defaults else sup)


def build_parser():
    # flags are accepted before or after the command; only the top level
    # carries defaults so a later occurrence wins
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, defaults=False)

    p = _Parser(prog="hrc", description="Check and combine assume/guarantee contracts.")
    _global_flags(p, defaults=True)
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, help_, spec=True):
        q = sub.add_parser(name, parents=[common], help=help_)
        if spec:
            q.add_argument("spec")
        return q

    check = groups.add_parser("check", help="relations and checks").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    q = leaf(check, "sat", "implementation satisfies contract")
    q.add_argument("--impl", required=True, help="assertion or component name")
    q.add_argument("--contract", required=True)
    for name, help_ in (("dom", "left dominates right"),
                        ("compat-pair", "profiled product of two contracts is compatible")):
        q = leaf(check, name, help_)
        q.add_argument("--left", required=True)
        q.add_argument("--right", required=True)
    for name in ("consistent", "compatible"):
        q = leaf(check, name, f"contract is {name}")
        q.add_argument("--contract", required=True)
    q = leaf(check, "component", "fuse a component's contracts and check its implementation")
    q.add_argument("--name", required=True)
    q = leaf(check, "system", "compose several components")
    q.add_argument("--names", required=True, type=_csv)

    op = groups.add_parser("op", help="contract operators").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    for name in ("meet", "join", "compose"):
        q = leaf(op, name, f"{name} of two contracts")
        q.add_argument("--left", required=True)
        q.add_argument("--right", required=True)
    q = leaf(op, "eliminate", "hide ports of a contract")
    q.add_argument("--contract", required=True)
    q.add_argument("--ports", required=True, type=_csv)
    q = leaf(op, "fuse", "fusion of a family of contracts")
    q.add_argument("--contracts", required=True, type=_csv)
    q.add_argument("--ports", default=[], type=_csv)

    q = groups.add_parser("canonicalize", parents=[common], help="canonical form of a contract")
    q.add_argument("spec")
    q.add_argument("--contract", required=True)

    oracle = groups.add_parser("oracle", help="brute-force cross-checks").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    q = oracle.add_parser("verify", parents=[common],
                          help="re-derive every operator result by enumeration")
    q.add_argument("spec", nargs="?")
    q.add_argument("--random", type=int, default=0, metavar="N",
                   help="also verify N random documents generated from --seed")
    return p


# -- rendering -------------------------------------------------------------------

def _run_text(run):
    return " ".join(f"{k}={_fmt_hist(v)}" for k, v in run.items())


def render_text(report):
    verdict = {True: "true", False: "false", None: "-"}[report.verdict]
    out = [report.command, f"verdict: {verdict}"]
    if report.profile is not None:
        for k, v in report.profile.describe().items():
            out.append(f"{k}: {', '.join(v) if v else '-'}")
    if report.contract is not None:
        out.append(f"assume: {print_assertion(report.contract.assumption)}")
        out.append(f"promise: {print_assertion(report.contract.promise)}")
    out.extend(report.lines)
    for d in report.diagnostics:
        line = f"[{d.kind}] {d.message}"
        if d.witness is not None:
            line += f" (witness: {_run_text(d.witness)})"
        out.append(line)
    return "\n".join(out) + "\n"


# -- commands --------------------------------------------------------------------

def _implementation(model, name):
    doc = model.doc
    if name in doc.assertions:
        return model.assertion(name)
    if name in doc.components and doc.components[name].implementation is not None:
        return model.expression(doc.components[name].implementation)
    raise SpecError(f"no assertion or component implementation named {name!r}")


def _canon(model, name):
    return ca.canonicalize(model.contract(name))


def _ports_known(model, ports):
    for p in ports:
        if p not in model.doc.markers:
            raise SpecError(f"undefined port {p!r}")


def _flag_report(report, ok, yes, no, witness=None):
    report.verdict = ok
    report.add("result", yes if ok else no, None if ok else witness)


def run_check(args, model):
    cmd = args.command
    if cmd == "sat":
        m = _implementation(model, args.impl)
        c = model.contract(args.contract)
        r = Report(f"check sat --impl {args.impl} --contract {args.contract}")
        _flag_report(r, ca.satisfies(m, c), "implementation satisfies the contract",
                     "implementation run violates the promise under the assumption",
                     ca.satisfaction_witness(m, c))
        return r
    if cmd == "dom":
        c1, c2 = _canon(model, args.left), _canon(model, args.right)
        r = Report(f"check dom --left {args.left} --right {args.right}")
        _flag_report(r, ca.dominates(c1, c2), f"{args.left} dominates {args.right}",
                     f"{args.left} does not dominate {args.right}")
        return r
    if cmd in ("consistent", "compatible"):
        pc = model.profiled(args.contract)
        r = Report(f"check {cmd} --contract {args.contract}", contract=pc, profile=pc.profile)
        if cmd == "consistent":
            _flag_report(r, pf.is_consistent(pc), "promise is receptive on uncontrolled ports",
                         "promise restricts uncontrolled ports",
                         receptiveness_witness(pc.promise, pc.profile.uncontrolled))
        else:
            _flag_report(r, pf.is_compatible_single(pc),
                         "assumption is receptive on controlled ports",
                         "assumption refuses a controlled history",
                         pf.compatibility_witness(pc))
        return r
    if cmd == "compat-pair":
        c1, c2 = model.profiled(args.left), model.profiled(args.right)
        r = Report(f"check compat-pair --left {args.left} --right {args.right}")
        try:
            both = pf.p_compose(c1, c2)
        except ContractError as e:
            r.verdict = False
            r.add("composition", str(e))
            return r
        r.contract, r.profile = both, both.profile
        _flag_report(r, pf.is_compatible_single(both),
                     "composite assumption is receptive on controlled ports",
                     "composite assumption refuses a controlled history",
                     pf.compatibility_witness(both))
        return r
    if cmd == "component":
        return check_component(model.component(args.name))
    if cmd == "system":
        return check_system([model.component(n) for n in args.names])
    raise UsageError(f"unknown check {cmd!r}")


def run_op(args, model):
    cmd = args.command
    if cmd in ("meet", "join", "compose"):
        fn = {"meet": ca.meet, "join": ca.join, "compose": ca.compose}[cmd]
        c = fn(_canon(model, args.left), _canon(model, args.right))
        return Report(f"op {cmd} --left {args.left} --right {args.right}", contract=c)
    if cmd == "eliminate":
        _ports_known(model, args.ports)
        c = ca.eliminate(_canon(model, args.contract), args.ports)
        return Report(f"op eliminate --contract {args.contract} --ports {','.join(args.ports)}",
                      contract=c)
    if cmd == "fuse":
        _ports_known(model, args.ports)
        if not args.contracts:
            raise UsageError("--contracts needs at least one name")
        c = ca.fuse([_canon(model, n) for n in args.contracts], args.ports)
        return Report(f"op fuse --contracts {','.join(args.contracts)} "
                      f"--ports {','.join(args.ports)}", contract=c)
    raise UsageError(f"unknown operator {cmd!r}")


def run_oracle(args):
    if args.spec is None and not args.random:
        raise UsageError("oracle verify needs a spec file or --random N")
    report = Report("oracle verify")
    ok = True
    if args.spec is not None:
        sub = verify_document(_load(args.spec))
        ok = sub.verdict
        report.diagnostics.extend(sub.diagnostics)
    for k in range(args.random):
        seed = args.seed + k
        sub = verify_document(parse(random_spec_text(seed)))
        ok = ok and sub.verdict
        for d in sub.diagnostics:
            if d.kind == "mismatch":
                report.add(d.kind, f"random document {seed}: {d.message}", d.witness)
    if args.random:
        report.add("summary", f"{args.random} random documents from seed {args.seed}")
    report.verdict = ok
    return report


def _load(path):
    try:
        return parse_file(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def dispatch(args):
    if args.group == "oracle":
        return run_oracle(args), True
    model = Model(_load(args.spec))
    if args.group == "check":
        return run_check(args, model), True
    if args.group == "op":
        return run_op(args, model), False
    c = _canon(model, args.contract)
    return Report(f"canonicalize --contract {args.contract}", contract=c), False


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_PASS if not e.code else EXIT_USAGE
    try:
        with limits(universe=args.max_universe):
            report, is_check = dispatch(args)
    except UsageError as e:
        print(f"hrc: {e}", file=stderr)
        return EXIT_USAGE
    except (SpecError, ContractError) as e:
        print(f"hrc: error: {e}", file=stderr)
        return EXIT_SEMANTIC
    stdout.write(report.dumps() + "\n" if args.format == "json" else render_text(report))
    if is_check:
        return EXIT_PASS if report.verdict else EXIT_FAIL
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
