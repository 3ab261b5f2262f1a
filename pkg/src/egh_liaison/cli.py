"""Command-line front end: ``python -m egh_liaison <command> ...``.

Exit codes: 0 success, 1 usage, 2 computation error, 3 verification FAIL.
"""

from __future__ import annotations

import argparse
import random
import sys

from .combinat import (
    CIType,
    TypeChain,
    lex_plus_powers,
    liaison_hf,
    predicted_chain_hf,
    tilde_gamma_chain,
    witness_ideal,
)
from .errors import EGHError, NotAchievableError, VerificationError
from .linkage import (
    DEFAULT_MAX_STEPS,
    direct_link,
    egh_pipeline,
    link_identities,
    minimally_licci_chain,
    mod_linear_form,
)
from .linkage.report import chain_pairs, egh_pairs, render
from .polyalg import (
    HilbertFunction,
    Ideal,
    RingContext,
    colon,
    format_polynomial,
    parse_ideal_text,
    parse_polynomial,
)
from .polyalg.ring import degrevlex_key, is_prime

EXIT_OK, EXIT_USAGE, EXIT_ERROR, EXIT_FAIL = 0, 1, 2, 3
DEFAULT_PRIME = 32003
PROG = "egh-liaison"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tuple_arg(text: str) -> tuple:
    body = text.strip().strip("()")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer tuple: {text!r}") from None


def _seed(text: str) -> int:
    try:
        s = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer: {text!r}") from None
    if not -(1 << 63) <= s < (1 << 64):
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return s


def _global_flags(default) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=default,
                        help=f"field characteristic (default {DEFAULT_PRIME}; "
                             "ideal files carry their own)")
    common.add_argument("--format", choices=("table", "records"), default=default,
                        help="human table (default) or key=value records")
    return common


def build_parser() -> argparse.ArgumentParser:
    # flags are accepted before or after the command; the subcommand copies
    # must not overwrite a value given before it
    ap = _Parser(prog=PROG, description="Linkage experiments over a prime field.",
                 parents=[_global_flags(None)])
    common = _global_flags(argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function of S/I")
    p.add_argument("file")
    p.add_argument("--degree-bound", type=int)

    p = sub.add_parser("witness", parents=[common], help="monomial ideal from a type chain")
    p.add_argument("chain", help="e.g. 3,3;2,2;1,1")

    p = sub.add_parser("link", parents=[common], help="directly link I by the CI J")
    p.add_argument("file_i")
    p.add_argument("file_j")

    p = sub.add_parser("chain", parents=[common], help="minimal link chain down to a CI")
    p.add_argument("file")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--degree-bound", type=int)

    p = sub.add_parser("egh", parents=[common], help="monomial witness for an Artinian ideal")
    p.add_argument("file")
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)

    p = sub.add_parser("lpp", parents=[common], help="lex-plus-powers ideal")
    p.add_argument("e", type=_tuple_arg)
    p.add_argument("hf", type=_tuple_arg)

    p = sub.add_parser("modlin", parents=[common], help="transport a link modulo a linear form")
    p.add_argument("file_i1")
    p.add_argument("file_j")
    p.add_argument("--g", required=True, help="linear form, e.g. x1+2*x3")
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in suites")
    return ap


def _read_ideal(path: str, prime: int | None) -> Ideal:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise EGHError(f"cannot read {path}: {exc.strerror}") from None
    parsed = parse_ideal_text(text)
    if prime is not None and prime != parsed.ring.characteristic:
        raise UsageError(f"--prime {prime} conflicts with p = {parsed.ring.characteristic} "
                         f"in {path}")
    return Ideal(parsed.ring, parsed.generators)


def _gens(I: Ideal) -> str:
    gens = sorted(I.min_generators(), key=lambda g: degrevlex_key(g.leading_monomial()),
                  reverse=True)
    gens.sort(key=lambda g: g.homogeneous_degree)
    return "<" + ", ".join(format_polynomial(g) for g in gens) + ">"


def _flag(v: bool) -> str:
    return "true" if v else "false"


def _replay(args, *extra) -> str:
    parts = ["python3 -m egh_liaison", args.command] + [str(x) for x in extra]
    if args.prime is not None:
        parts += ["--prime", str(args.prime)]
    return " ".join(parts)


def cmd_hilbert(args) -> int:
    I = _read_ideal(args.file, args.prime)
    bound = args.degree_bound
    if I.is_artinian():
        values = list(I.hilbert_function().values)
        if bound is not None:
            values = list(I.hilbert_function().padded(bound + 1))[:bound + 1]
    elif bound is None:
        raise EGHError("S/I is not Artinian; pass --degree-bound")
    else:
        values = list(I.hilbert_function(bound).values)
    if args.format == "records":
        pairs = [("prime", str(I.ring.characteristic)), ("ring", I.ring.header())]
        pairs += [(f"hf.{t}", str(v)) for t, v in enumerate(values)]
        pairs.append(("artinian", _flag(I.is_artinian())))
        sys.stdout.write(render(pairs))
    else:
        print(f"{'t':>3}  H(S/I,t)")
        for t, v in enumerate(values):
            print(f"{t:>3}  {v}")
    return EXIT_OK


def cmd_witness(args) -> int:
    chain = TypeChain.parse(args.chain)
    n = len(chain.types[0])
    ring = RingContext(n, characteristic=args.prime or DEFAULT_PRIME)
    sets = tilde_gamma_chain(chain, ring)
    W = witness_ideal(chain, ring)
    predicted = predicted_chain_hf(chain)
    pairs = [("prime", str(ring.characteristic)), ("chain", str(chain))]
    pairs += [(f"gamma.{i}.size", str(len(mc))) for i, mc in enumerate(sets, 1)]
    pairs += [("witness", str(W)), ("hf_witness", str(W.hilbert_function())),
              ("hf_predicted", str(predicted)),
              ("hf_match", _flag(W.hilbert_function() == predicted))]
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK if W.hilbert_function() == predicted else EXIT_FAIL


def cmd_link(args) -> int:
    I = _read_ideal(args.file_i, args.prime)
    J = _read_ideal(args.file_j, args.prime)
    if I.ring != J.ring:
        raise EGHError("the two files declare different rings")
    pairs = [("prime", str(I.ring.characteristic)), ("ideal", _gens(I)), ("link", _gens(J))]
    try:
        step = direct_link(I, J)
    except VerificationError as exc:
        pairs += [("verdict", "FAIL"), ("reason", str(exc)),
                  ("replay", _replay(args, args.file_i, args.file_j))]
        sys.stdout.write(render(pairs, args.format))
        return EXIT_FAIL
    ident = link_identities(J, I, step.target)
    pairs += [("type", str(step.link_type)), ("target", _gens(step.target))]
    pairs += [(f"check.{k}", _flag(v)) for k, v in ident.items()]
    ok = all(ident.values())
    if I.is_artinian():
        hfs = [X.hilbert_function() for X in (I, J, step.target)]
        formula_ok = liaison_hf(hfs[1], hfs[0]) == hfs[2]
        pairs += [("hf_ideal", str(hfs[0])), ("hf_link", str(hfs[1])),
                  ("hf_target", str(hfs[2])), ("check.hf_formula", _flag(formula_ok))]
        ok = ok and formula_ok
    pairs.append(("verdict", "PASS" if ok else "FAIL"))
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK if ok else EXIT_FAIL


def _seeded_header(args, I: Ideal) -> list:
    return [("command", args.command), ("input", args.file), ("seed", str(args.seed)),
            ("prime", str(I.ring.characteristic)), ("ideal", _gens(I))]


def cmd_chain(args) -> int:
    I = _read_ideal(args.file, args.prime)
    rng = random.Random(args.seed)
    replay = _replay(args, args.file, "--seed", args.seed, "--max-steps", args.max_steps)
    pairs = _seeded_header(args, I)
    try:
        chain = minimally_licci_chain(I, rng=rng, max_steps=args.max_steps)
    except EGHError as exc:
        pairs += [("error", f"{type(exc).__name__}: {exc}"), ("replay", replay)]
        sys.stdout.write(render(pairs, args.format))
        return EXIT_ERROR
    pairs += chain_pairs(chain, args.degree_bound)
    ok = chain.is_sequentially_bounded()
    pairs += [("verdict", "PASS" if ok else "FAIL"), ("replay", replay)]
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_egh(args) -> int:
    I = _read_ideal(args.file, args.prime)
    rng = random.Random(args.seed)
    replay = _replay(args, args.file, "--seed", args.seed, "--max-steps", args.max_steps)
    pairs = _seeded_header(args, I)
    try:
        result = egh_pipeline(I, rng=rng, max_steps=args.max_steps)
    except EGHError as exc:
        pairs += [("error", f"{type(exc).__name__}: {exc}"), ("replay", replay)]
        sys.stdout.write(render(pairs, args.format))
        return EXIT_ERROR
    pairs += egh_pairs(result)
    pairs.append(("replay", replay))
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_lpp(args) -> int:
    e = CIType(args.e)
    ring = RingContext(max(len(e), 1), characteristic=args.prime or DEFAULT_PRIME)
    target = HilbertFunction(args.hf)
    pairs = [("prime", str(ring.characteristic)), ("e", str(e)), ("target", str(target))]
    try:
        M = lex_plus_powers(e, target, ring)
    except NotAchievableError as exc:
        pairs += [("achievable", "false"), ("reason", str(exc))]
        sys.stdout.write(render(pairs, args.format))
        return EXIT_ERROR
    hf = M.hilbert_function()
    ok = hf == target
    pairs += [("achievable", "true"), ("ideal", str(M)), ("hf", str(hf)),
              ("verdict", "PASS" if ok else "FAIL")]
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_modlin(args) -> int:
    I1 = _read_ideal(args.file_i1, args.prime)
    J = _read_ideal(args.file_j, args.prime)
    if I1.ring != J.ring:
        raise EGHError("the two files declare different rings")
    if args.j < 0:
        raise UsageError("--j must be non-negative")
    g = parse_polynomial(args.g, I1.ring)
    I2 = colon(J, I1)
    pairs = [("prime", str(I1.ring.characteristic)), ("g", format_polynomial(g)),
             ("j", str(args.j)), ("I1", _gens(I1)), ("J", _gens(J)), ("I2", _gens(I2))]
    try:
        out = mod_linear_form(I1, I2, J, g, args.j)
    except VerificationError as exc:
        pairs += [("verdict", "FAIL"), ("reason", str(exc)),
                  ("replay", _replay(args, args.file_i1, args.file_j, "--g", repr(args.g),
                                     "--j", args.j))]
        sys.stdout.write(render(pairs, args.format))
        return EXIT_FAIL
    pairs += [("I1'", _gens(out.lifted_source)), ("J'", _gens(out.lifted_link)),
              ("I2'", _gens(out.lifted_target))]
    pairs += [(f"check.{k}", _flag(v)) for k, v in out.identities.items()]
    pairs += [("quotient_ring", out.quotient_ring.header()),
              ("quotient.source", _gens(out.step.source)),
              ("quotient.link", _gens(out.step.link)),
              ("quotient.target", _gens(out.step.target)),
              ("quotient.type", str(out.step.link_type)),
              ("verdict", "PASS")]
    sys.stdout.write(render(pairs, args.format))
    return EXIT_OK


def cmd_selftest(args) -> int:
    from . import suites

    prime = args.prime or DEFAULT_PRIME
    print(f"prime={prime}")
    results = suites.all_suites(prime=prime)
    failed = False
    for r in results:
        print(r.summary())
        for g in r.genericity:
            print(f"  warning: genericity: {g}")
        for f in r.failures:
            print(f"  FAIL: {f}")
        failed = failed or not r.passed
    print("FAILED" if failed else "all suites passed")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "hilbert": cmd_hilbert, "witness": cmd_witness, "link": cmd_link, "chain": cmd_chain,
    "egh": cmd_egh, "lpp": cmd_lpp, "modlin": cmd_modlin, "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.prime is not None and not is_prime(args.prime):
            parser.error(f"--prime {args.prime} is not prime")
    except SystemExit as exc:  # --help, or a usage error already printed
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.format is None:
        args.format = "table"
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EGHError, ValueError) as exc:
        print(f"{PROG}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
