"""Command-line entry point.

Exit status: 0 when every executed check passes, 1 on a property violation,
2 on unreadable or malformed input.
"""

import argparse
import itertools
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import serialize as ser
from .errors import FuzzyRieszError, InfeasibleError, InputError, PreconditionError
from .extension import (SublatticeSubspace, SubspaceOperator, factorize, null_ideal,
                        random_sublattice, theta_extension, verify_theta)
from .foset import validate_fuzzy_order
from .ideals import CoordinateIdeal
from .mutation import TARGETS, mutate
from .operators import classify_operator, kernel_ideal
from .quotient import (QuotientSpace, archimedean_battery, check_projection_hom,
                       check_quotient_lattice, nu_table, project)
from .rational import fmt
from .report import Report
from .seqmodel import nonarchimedean_demo, truncation_witness
from .space import GradedSpace, check_archimedean, check_compatibility
from .suite import lattice_identities_report, run_suite


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    seed: int = 0
    trials: int = 100
    fmt: str = "text"


class Output:
    def __init__(self, cfg):
        self.cfg = cfg
        self.lines = []
        self.failed = False

    def report(self, rep: Report):
        self.failed |= not rep.passed
        self.lines.append(rep.record() if self.cfg.fmt == "structured" else rep.text())

    def line(self, text):
        self.lines.append(text)

    def render(self):
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _load(path):
    return ser.read_json(path)


def cmd_check_foset(cfg, out, args):
    m = ser.load_foset(_load(args.file))
    ax = validate_fuzzy_order(m)
    rep = Report("1.1", "fuzzy-order", trials=1,
                 details={"size": m.size, "reflexive": ax.reflexive,
                          "antisymmetric": ax.antisymmetric, "transitive": ax.transitive})
    for name, wit in ax.violations:
        rep.fail(axiom=name, at=[m.label(i) for i in wit])
    out.report(rep)


def cmd_check_space(cfg, out, args):
    sp = ser.load_space(_load(args.file)) if args.file else GradedSpace(args.dim)
    comp = check_compatibility(sp, cfg.trials, cfg.seed)
    rep = Report("1.3", "compatibility", trials=comp.samples, details={"dim": sp.dim, "alpha": sp.alpha})
    for v in comp.violations:
        rep.fail(kind=v[0], x1=v[1], x2=v[2])
    out.report(rep)
    arch = check_archimedean(sp, cfg.trials, cfg.seed)
    rep = Report("1.9", "archimedean", trials=cfg.trials, details={"archimedean": arch})
    if not arch:
        rep.fail(reason="bounded ray")
    out.report(rep)
    out.report(lattice_identities_report(cfg.trials, max_dim=max(sp.dim, 1), seed=cfg.seed))


def cmd_check_operator(cfg, out, args):
    T = ser.load_operator(_load(args.file))
    c = classify_operator(T, samples=cfg.trials, seed=cfg.seed)
    details = {"positive": c.positive, "order_bounded": c.order_bounded,
               "riesz_hom": c.riesz_hom, "sigma_hom": c.sigma_hom}
    if c.riesz_hom:
        details["kernel"] = kernel_ideal(T).labels()
    if c.positive:
        details["null_ideal"] = null_ideal(T).labels()
    # a classification is information, not a failure
    out.report(Report("2.1", "classify-operator", trials=1, details=details))


def cmd_quotient(cfg, out, args):
    data = _load(args.file)
    q = ser.load_quotient(data)
    out.report(check_quotient_lattice(q, cfg.trials, cfg.seed))
    out.report(check_projection_hom(q, min(cfg.trials, 100), cfg.seed))
    if "classes" in data:
        classes = [project(q, ser.load_vec(v)) for v in data["classes"]]
        table = nu_table(q, classes)
        out.line("nu-table " + ser.dumps([[fmt(g) for g in row] for row in table.grades]))


def cmd_battery(cfg, out, args):
    if args.file:
        qs = [ser.load_quotient(_load(args.file))]
    else:
        sp = GradedSpace(args.dim)
        qs = [QuotientSpace(sp, CoordinateIdeal(sp, c))
              for r in range(args.dim + 1) for c in itertools.combinations(range(args.dim), r)]
    for q in qs:
        out.report(archimedean_battery(q, cfg.trials, cfg.seed).report)


def cmd_demo_nonarch(cfg, out, args):
    demo = nonarchimedean_demo(args.k_max)
    rep = Report("3.8", "nonarchimedean-demo", trials=len(demo.rows),
                 details={"k_max": args.k_max, "y_nonzero": demo.y_nonzero})
    for row in demo.rows:
        if cfg.fmt == "structured":
            out.line(f"k={row.k} nu={fmt(row.grade)} lambda={fmt(row.lam)} dominated={str(row.dominated).lower()}")
        else:
            out.line(f"k={row.k:>5}  nu([y], [e]/k) = {row.grade}  a_k in A with lambda = {row.lam}")
        if row.grade != Fraction(2, 3) or not row.dominated:
            rep.fail(k=row.k)
    tr = truncation_witness(args.k_max)
    rep.details["truncation_witness"] = tr.in_ideal and tr.within
    rep.notes.append(demo.verdict)
    if not demo.ok:
        rep.fail(reason=demo.verdict)
    out.report(rep)


def cmd_theta(cfg, out, args):
    if args.input:
        d = _load(args.input)
        for key in ("space", "basis", "images", "points"):
            if key not in d:
                raise InputError(f"missing field: {key}")
        sp = ser.load_space(d["space"])
        M = SublatticeSubspace.build(sp, [ser.load_vec(v) for v in d["basis"]])
        images = [ser.load_vec(v) for v in d["images"]]
        T = SubspaceOperator(M, tuple(images), GradedSpace(len(images[0]) if images else 0))
        rep = Report("4.13", "theta", trials=len(d["points"]))
        for p in d["points"]:
            x = ser.load_vec(p)
            out.line(f"theta({ser.dumps(ser.dump_vec(x))}) = {ser.dumps(ser.dump_vec(theta_extension(M, T, x)))}")
        out.report(rep)
        return
    rng = random.Random(cfg.seed)
    for k in range(max(1, cfg.trials // 10)):
        n, m = rng.randint(1, 5), rng.randint(1, 4)
        M, T = random_sublattice(rng, n, m)
        out.report(verify_theta(M, T, samples=10, seed=cfg.seed + k))


def cmd_factorize(cfg, out, args):
    Q, S, T = ser.load_factorization(_load(args.input))
    rep = Report("5.1", "factorize", trials=1)
    try:
        S1 = factorize(Q, S, T)
    except PreconditionError as exc:
        rep.fail(precondition=str(exc))
    else:
        rep.details["S1"] = ser.dumps(ser.dump_operator(S1)["entries"])
    out.report(rep)


def cmd_mutate(cfg, out, args):
    res = mutate(args.target, cfg.trials, cfg.seed)
    out.line(res.summary())
    out.report(res.report())


def cmd_suite(cfg, out, args):
    for rep in run_suite(cfg.seed, Fraction(args.scale)):
        out.report(rep)


COMMANDS = {
    "check-foset": cmd_check_foset, "check-space": cmd_check_space,
    "check-operator": cmd_check_operator, "quotient": cmd_quotient, "battery": cmd_battery,
    "demo-nonarch": cmd_demo_nonarch, "theta": cmd_theta, "factorize": cmd_factorize,
    "mutate": cmd_mutate, "suite": cmd_suite,
}


def _common(suppress):
    # subcommands re-declare the flags with suppressed defaults so that
    # values given before the subcommand are not overwritten
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--seed", type=int, default=d(0))
    c.add_argument("--trials", type=int, default=d(None))
    c.add_argument("--format", choices=("text", "structured"), default=d("text"))
    c.add_argument("--out", default=d(None), help="write the report here instead of stdout")
    return c


def build_parser():
    common = _common(True)
    p = argparse.ArgumentParser(prog="fuzzyriesz", parents=[_common(False)],
                                description="Checkers for finite fuzzy ordered spaces and fuzzy Riesz spaces.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("check-foset", "validate a fuzzy order file").add_argument("file")
    s = add("check-space", "compatibility, Archimedean property and lattice identities")
    s.add_argument("file", nargs="?")
    s.add_argument("--dim", type=int, default=3)
    add("check-operator", "classify an operator file").add_argument("file")
    add("quotient", "quotient lattice and projection checks").add_argument("file")
    s = add("battery", "the four Archimedean conditions for quotients by coordinate ideals")
    s.add_argument("file", nargs="?")
    s.add_argument("--dim", type=int, default=3)
    add("demo-nonarch", "certificate table for the non-Archimedean sequence quotient").add_argument(
        "--k-max", type=int, default=20)
    add("theta", "majorizing extension").add_argument("--in", dest="input")
    add("factorize", "dominated factorization T = S1 Q").add_argument("--in", dest="input", required=True)
    s = add("mutate", "mutation detection harness")
    s.add_argument("--target", choices=TARGETS, required=True)
    add("suite", "every battery at a reduced scale").add_argument("--scale", default="1/10")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    trials = args.trials if args.trials is not None else (500 if args.command == "mutate" else 100)
    cfg = RunConfig(args.command, [], args.seed, trials, args.format)
    out = Output(cfg)
    try:
        if trials < 1:
            raise InputError("--trials must be >= 1")
        if args.command == "demo-nonarch" and args.k_max < 1:
            raise InputError("--k-max must be >= 1")
        COMMANDS[args.command](cfg, out, args)
    except PreconditionError as exc:
        out.failed = True
        out.line(f"precondition violated: {exc}")
    except (InputError, ValueError) as exc:
        print(f"fuzzyriesz: error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleError, FuzzyRieszError, AssertionError) as exc:
        out.failed = True
        out.line(f"error: {exc}")
    text = out.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if out.failed else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
