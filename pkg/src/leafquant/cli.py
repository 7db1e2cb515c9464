"""Command-line front end: classify, simulate, compile, reduce, selftest.

Exit status: 0 when the command completed (whatever the verdict), 2 for
unparseable input, 3 when a resource cap was hit.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import barrington as bp
from .automata import Alphabet, RegularAcceptor, compile_regex
from .cardinal import CardinalSpec, cardinal_language, required_grid, search_reduction
from .catalog import catalog, parse_name
from .classify import classify_leaf_language
from .errors import LeafQuantError, ResourceLimitError
from .leafsim import parse_dimacs, sat_machine, trace
from .monoid import DEFAULT_MONOID_CAP

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3


@dataclass
class RunConfig:
    command: str
    paths: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    quiet: bool = False

    def validate(self):
        for key, val in self.bounds.items():
            vals = val if isinstance(val, tuple) else (val,)
            if any(x < 1 for x in vals):
                raise ValueError(f"--{key.replace('_', '-')} must be positive")
        for p in self.paths:
            if not p.startswith("catalog:") and not Path(p).is_file():
                raise FileNotFoundError(f"no such file: {p}")


def _ints(text: str) -> tuple:
    return tuple(int(t) for t in text.replace(",", " ").split())


def _lang(name: str, param: int | None):
    if param is None:
        name, param = parse_name(name)
    return catalog(name, param)


def cmd_classify(args, cfg) -> str:
    if args.regex is not None:
        alphabet = Alphabet(tuple(args.alphabet))
        dfa = compile_regex(args.regex, alphabet)
        acceptor = RegularAcceptor(dfa, name=args.regex, regex=args.regex)
        label = args.regex
    else:
        acceptor = _lang(args.name, args.param)
        label = acceptor.name
    result = classify_leaf_language(acceptor, cfg.bounds["monoid_cap"])
    text = result.report(label)
    if cfg.quiet:
        return next(l for l in text.splitlines() if l.startswith("VERDICT")) + "\n"
    return text


def cmd_simulate(args, cfg) -> str:
    cnf = parse_dimacs(Path(args.cnf).read_text())
    machine = sat_machine(cnf, cfg.bounds["var_cap"])
    b = _lang(args.lang, args.param)
    text = trace(machine, b, args.input)
    if cfg.quiet:
        return text.splitlines()[-1] + "\n"
    return f"LANGUAGE: {b.name}\nVARIABLES: {cnf.num_vars}\nCLAUSES: {len(cnf.clauses)}\n" + text


def cmd_compile(args, cfg) -> str:
    phi = bp.parse_formula(Path(args.formula).read_text())
    program = bp.compile_formula(bp.to_nor(phi))
    if args.pad:
        program = bp.pad_to_balanced(program)
    if args.assign is None:
        return "\n".join(program.listing()) + "\n"
    bits = [int(c) for c in args.assign.strip()]
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"assignment must be a bit string, got {args.assign!r}")
    n = bp.arity(phi)
    if len(bits) < n:
        raise bp.ArityError(f"formula uses {n} variables, assignment has {len(bits)}")
    value = program.evaluate(bits)
    verdict = "accept" if value == bp.A1 else "reject"
    if cfg.quiet:
        return f"VERDICT: {verdict}\n"
    return (f"LEAVES: {program.leaf_count()}\nCONVENTION: {bp.CONVENTION}\n"
            f"PRODUCT: {value}\nVERDICT: {verdict}\n")


def _spec(source: str, m_max: int) -> CardinalSpec:
    if source.startswith("catalog:"):
        return cardinal_language(_lang(source[len("catalog:"):], None), m_max)
    return CardinalSpec.parse(Path(source).read_text(), name=source)


def cmd_reduce(args, cfg) -> str:
    a = _spec(args.spec_a, args.m_max)
    b = _spec(args.spec_b, args.m_max)
    z_max = cfg.bounds["z_max"]
    if len(z_max) == 1:
        z_max = z_max * a.k
    w = search_reduction(a, b, z_max, cfg.bounds["alpha_max"], cfg.bounds["grid"],
                         limit=cfg.bounds["limit"])
    if w is not None:
        return "WITNESS: found\n" if cfg.quiet else w.export()
    if cfg.quiet:
        return "NONE-WITHIN-BOUNDS\n"
    grid = max(cfg.bounds["grid"], required_grid(a, b, z_max))
    return (f"NONE-WITHIN-BOUNDS\nZ_MAX: {' '.join(map(str, z_max))}\n"
            f"ALPHA_MAX: {cfg.bounds['alpha_max']}\nGRID: {grid}\n")


def cmd_selftest(args, cfg) -> str:
    lines = []
    for conv in (bp.LEFT_TO_RIGHT, bp.RIGHT_TO_LEFT):
        for label, ok in bp.w_identities(conv).items():
            lines.append(f"{conv} {label}: {'ok' if ok else 'fails'}")
    chosen = bp.select_convention()
    lines.append(f"CONVENTION: {chosen}")
    lines.append(f"PINNED: {'yes' if chosen == bp.CONVENTION else 'NO'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leafquant", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="print only the verdict line")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify a leaf language by its syntactic monoid")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", help="catalog name, e.g. E, par, mod_k:3, A:2, s5_word")
    src.add_argument("--regex", help="regular expression over --alphabet")
    p.add_argument("--param", type=int, help="parameter for mod_k / A")
    p.add_argument("--alphabet", default="01")
    p.add_argument("--monoid-cap", type=int, default=DEFAULT_MONOID_CAP)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", parents=[common],
                       help="leaf string of the SAT machine on a DIMACS formula")
    p.add_argument("cnf")
    p.add_argument("--lang", required=True, help="catalog name of the leaf language")
    p.add_argument("--param", type=int)
    p.add_argument("--input", default="", help="input word (ignored by the SAT machine)")
    p.add_argument("--var-cap", type=int, default=20)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("compile", parents=[common],
                       help="compile a formula into an S5 permutation program")
    p.add_argument("--formula", required=True, help="file with a prefix-notation formula")
    p.add_argument("--assign", help="bit string x1 x2 ... to evaluate on")
    p.add_argument("--pad", action="store_true", help="pad to a balanced tree first")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("reduce", parents=[common],
                       help="search for a multinomial reduction witness")
    p.add_argument("spec_a", help="spec file or catalog:NAME")
    p.add_argument("spec_b", help="spec file or catalog:NAME")
    p.add_argument("--z-max", type=_ints, default=(1,))
    p.add_argument("--alpha-max", type=int, default=2)
    p.add_argument("--grid", type=int, default=10)
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--limit", type=int, default=1_000_000)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("selftest", parents=[common],
                       help="check the NOR identities and the product convention")
    p.set_defaults(func=cmd_selftest)
    return parser


def _config(args) -> RunConfig:
    bounds = {}
    paths = []
    if args.command == "classify":
        bounds["monoid_cap"] = args.monoid_cap
    elif args.command == "simulate":
        bounds["var_cap"] = args.var_cap
        paths = [args.cnf]
    elif args.command == "compile":
        paths = [args.formula]
    elif args.command == "reduce":
        bounds.update(z_max=args.z_max, alpha_max=args.alpha_max, grid=args.grid,
                      limit=args.limit)
        paths = [args.spec_a, args.spec_b]
    return RunConfig(args.command, paths, bounds, args.quiet)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        cfg.validate()
        sys.stdout.write(args.func(args, cfg))
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (LeafQuantError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
