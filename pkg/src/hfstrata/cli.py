"""Command line interface: ideal files in, tables and JSON reports out.

Exit codes: 0 success (and all checks passed for verify commands),
1 verification checks failed, 2 usage/parse errors, 3 computation errors.
Results go to stdout, diagnostics to stderr.  JSON reports have a fixed
key order, integer-only values, no timestamps, and embed the tool
version plus the full input echo, so identical invocations are
byte-identical.
"""

import argparse
import json
import os
import sys

from . import __version__
from .errors import (
    DegenerateInputError,
    GenericityError,
    HfStrataError,
    ParameterError,
    ParseError,
    StructureError,
    InhomogeneousError,
)
from .field import DEFAULT_PRIME, NotPrimeError, PrimeField
from .groebner import Ideal, buchberger
from .invariants import betti_table, hilbert_function, minimal_free_resolution, regularity
from .deform import ext1_space, tangent_space
from .oracle import betti_bruteforce, hf_bruteforce, syzygies_bruteforce, tangent_bruteforce
from .ring import GREVLEX, LEX, MonomialOrder, RingContext
from .strata import cone_curve, truncate_ideal, verify_prop31

FIELD_ENV_VAR = "HFSTRATA_FIELD"


# ---------------------------------------------------------------------------
# ideal file format
# ---------------------------------------------------------------------------


def _tokenize_expr(text, line_no, col_offset):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        col = col_offset + i + 1
        if c in "+-*^":
            tokens.append((c, c, col))
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("NUMBER", int(text[i:j]), col))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], col))
            i = j
        else:
            raise ParseError(line_no, col, f"unexpected character {c!r}")
    return tokens


def _parse_expression(ring, text, line_no, col_offset=0):
    """Parse `terms joined by +/-, factors by *, powers by ^`."""
    tokens = _tokenize_expr(text, line_no, col_offset)
    if not tokens:
        raise ParseError(line_no, col_offset + 1, "empty polynomial expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, col_offset + len(text) + 1)

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind is not None and tok[0] != kind):
            want = kind or "a token"
            raise ParseError(line_no, tok[2], f"expected {want}, found {tok[1]!r}")
        pos += 1
        return tok

    var_index = {name: i for i, name in enumerate(ring.names)}

    def parse_factor():
        kind, value, col = peek()
        if kind == "NUMBER":
            take()
            return value, (0,) * ring.n
        if kind == "NAME":
            take()
            if value not in var_index:
                raise ParseError(line_no, col, f"undeclared variable {value!r}")
            exp = 1
            if peek()[0] == "^":
                take("^")
                _, exp, ecol = take("NUMBER")
                if exp < 0:
                    raise ParseError(line_no, ecol, "exponents must be non-negative")
            exps = [0] * ring.n
            exps[var_index[value]] = exp
            return 1, tuple(exps)
        raise ParseError(line_no, col, f"expected a coefficient or variable, found {value!r}")

    def parse_term():
        coeff, exps = parse_factor()
        while peek()[0] == "*":
            take("*")
            c2, e2 = parse_factor()
            coeff *= c2
            exps = tuple(a + b for a, b in zip(exps, e2))
        return coeff, exps

    terms = []
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take()[1] == "-" else 1
    coeff, exps = parse_term()
    terms.append((exps, sign * coeff))
    while peek()[0] is not None:
        kind, value, col = take()
        if kind not in ("+", "-"):
            raise ParseError(line_no, col, f"expected '+' or '-', found {value!r}")
        coeff, exps = parse_term()
        terms.append((exps, coeff if kind == "+" else -coeff))
    return ring.from_terms(terms)


def parse_ideal_file(text, default_field=None):
    """Parse the ideal file grammar into (RingContext, Ideal)."""
    if default_field is None:
        env = os.environ.get(FIELD_ENV_VAR)
        if env:
            try:
                default_field = int(env)
            except ValueError:
                raise ParseError(1, 1, f"{FIELD_ENV_VAR}={env!r} is not an integer") from None
        else:
            default_field = DEFAULT_PRIME
    field_p = None
    names = None
    order_kind = None
    gen_sources = []
    in_ideal = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        hash_pos = raw.find("#")
        line = raw if hash_pos < 0 else raw[:hash_pos]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        if in_ideal:
            gen_sources.append((line_no, indent, line.strip()))
            continue
        parts = stripped.split()
        head = parts[0]
        if head == "field":
            if field_p is not None:
                raise ParseError(line_no, indent + 1, "duplicate field declaration")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(line_no, indent + 1, "usage: field <prime>")
            field_p = int(parts[1])
        elif head == "vars":
            if names is not None:
                raise ParseError(line_no, indent + 1, "duplicate vars declaration")
            if len(parts) < 2:
                raise ParseError(line_no, indent + 1, "usage: vars <name> [<name> ...]")
            names = parts[1:]
            if len(set(names)) != len(names):
                raise ParseError(line_no, indent + 1, "variable names must be distinct")
        elif head == "order":
            if order_kind is not None:
                raise ParseError(line_no, indent + 1, "duplicate order declaration")
            if len(parts) != 2 or parts[1] not in (GREVLEX, LEX):
                raise ParseError(line_no, indent + 1, "usage: order grevlex|lex")
            order_kind = parts[1]
        elif stripped == "ideal:":
            if names is None:
                raise ParseError(line_no, indent + 1, "vars must be declared before ideal:")
            in_ideal = True
        else:
            raise ParseError(line_no, indent + 1, f"unknown directive {head!r}")
    if names is None:
        raise ParseError(1, 1, "missing vars declaration")
    if not in_ideal:
        raise ParseError(1, 1, "missing 'ideal:' section")
    p = field_p if field_p is not None else default_field
    try:
        field = PrimeField(p)
    except NotPrimeError:
        raise ParseError(1, 1, f"field modulus {p} is not prime") from None
    ring = RingContext(names, field, MonomialOrder(order_kind or GREVLEX))
    gens = []
    for idx, (line_no, indent, src) in enumerate(gen_sources):
        f = _parse_expression(ring, src, line_no, indent)
        if f.is_zero():
            raise ParseError(line_no, indent + 1, f"generator {idx} is zero")
        try:
            f.homogeneous_degree()
        except InhomogeneousError as exc:
            a, b = exc.degrees
            raise ParseError(
                line_no, indent + 1, f"generator {idx} is inhomogeneous: degrees {a} vs {b}"
            ) from None
        gens.append(f)
    return ring, Ideal(ring, gens)


def format_ideal_file(ideal: Ideal) -> str:
    """Canonical ideal file text; reparses to a generator-identical ideal."""
    ring = ideal.ring
    lines = [
        f"field {ring.field.p}",
        "vars " + " ".join(ring.names),
        f"order {ring.order.kind}",
        "ideal:",
    ]
    lines.extend(str(f) for f in ideal.generators)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    ring, ideal = parse_ideal_file(text)
    return text, ring, ideal


def _emit_json(payload, json_path):
    blob = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(blob)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(blob)


def _input_echo(path, text, **args):
    return {"file": path, "text": text, "args": dict(sorted(args.items()))}


def cmd_gb(args):
    _, _, ideal = _load(args.file)
    for g in buchberger(ideal):
        print(g)
    return 0


def cmd_hilb(args):
    _, _, ideal = _load(args.file)
    print(" ".join(str(hilbert_function(ideal, d)) for d in range(args.up_to + 1)))
    return 0


def cmd_res(args):
    _, _, ideal = _load(args.file)
    res = minimal_free_resolution(ideal, ideal.ring.n + 2)
    print(res)
    print(res.betti_table().render())
    return 0


def cmd_reg(args):
    _, _, ideal = _load(args.file)
    print(regularity(ideal))
    return 0


def cmd_truncate(args):
    _, _, ideal = _load(args.file)
    truncated = truncate_ideal(ideal, args.m, override=args.force)
    text = format_ideal_file(truncated)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def cmd_tangent(args):
    _, _, ideal = _load(args.file)
    print(tangent_space(ideal).dimension)
    return 0


def cmd_ext1(args):
    _, _, ideal = _load(args.file)
    print(ext1_space(ideal).dimension)
    return 0


def cmd_verify_prop31(args):
    text, _, ideal = _load(args.file)
    report = verify_prop31(ideal, args.m, degree_bound=args.bound, override=args.force)
    payload = {
        "version": __version__,
        "command": "verify-prop31",
        "input": _input_echo(
            args.file, text, m=args.m, bound=args.bound, force=bool(args.force)
        ),
        "report": report.to_json(),
    }
    _emit_json(payload, args.json)
    return 0 if report.all_ok() else 1


def cmd_cone_curve(args):
    text, _, ideal = _load(args.file)
    curve, report = cone_curve(ideal, args.m, args.seed, max_trials=args.trials)
    payload = {
        "version": __version__,
        "command": "cone-curve",
        "input": _input_echo(
            args.file, text, m=args.m, seed=args.seed, trials=args.trials
        ),
        "report": report.to_json(),
        "added_forms": [str(f) for f in curve.generators[len(ideal.generators) :]],
    }
    _emit_json(payload, args.json)
    return 0 if report.all_ok() else 1


def cmd_oracle(args):
    _, _, ideal = _load(args.file)
    if args.mode == "hilb":
        print(" ".join(str(hf_bruteforce(ideal, d)) for d in range(args.up_to + 1)))
    elif args.mode == "syz":
        syz = syzygies_bruteforce(ideal, args.bound)
        for e in sorted(syz):
            print(f"{e} {len(syz[e])}")
    elif args.mode == "tangent":
        print(tangent_bruteforce(ideal, args.bound))
    elif args.mode == "betti":
        table = betti_bruteforce(ideal, args.max_step, args.bound)
        print(table.render())
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hfstrata",
        description="Exact commutative algebra for truncation and cone-curve constructions over F_p.",
    )
    parser.add_argument("--version", action="version", version=f"hfstrata {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gb", help="reduced Groebner basis")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("hilb", help="Hilbert function of S/I")
    sp.add_argument("file")
    sp.add_argument("--up-to", dest="up_to", type=int, required=True)
    sp.set_defaults(func=cmd_hilb)

    sp = sub.add_parser("res", help="minimal free resolution and Betti table")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_res)

    sp = sub.add_parser("reg", help="Castelnuovo-Mumford regularity of the ideal")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_reg)

    sp = sub.add_parser("truncate", help="write the truncation I + m^m as an ideal file")
    sp.add_argument("file")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="allow m below reg(I)+2")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_truncate)

    sp = sub.add_parser("tangent", help="dim Hom_S(I, S/I)_0")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_tangent)

    sp = sub.add_parser("ext1", help="dim Ext^1_S(I, S/I)_0")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_ext1)

    sp = sub.add_parser("verify-prop31", help="verify the truncation claims for one m")
    sp.add_argument("file")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--force", action="store_true", help="allow m below reg(I)+2")
    sp.add_argument("--json", default=None, help="also write the JSON report here")
    sp.set_defaults(func=cmd_verify_prop31)

    sp = sub.add_parser("cone-curve", help="construct I + (g1, g2) with certified forms")
    sp.add_argument("file")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--json", default=None, help="also write the JSON report here")
    sp.set_defaults(func=cmd_cone_curve)

    sp = sub.add_parser("oracle", help="brute-force checks by dense linear algebra")
    sp.add_argument("mode", choices=["hilb", "syz", "tangent", "betti"])
    sp.add_argument("file")
    sp.add_argument("--up-to", dest="up_to", type=int, default=8)
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--max-step", dest="max_step", type=int, default=6)
    sp.set_defaults(func=cmd_oracle)

    return parser


def run(argv) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParameterError, NotPrimeError, StructureError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HfStrataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # internal failure: report, don't traceback
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
