"""Command-line interface: ``python -m padic_gm <command> [options]``.

Every command prints one canonical JSON document whose header echoes the
precision profile.  Exit codes: 0 success, 1 verification failure,
2 usage or domain error, 3 precision error.
"""
from __future__ import annotations

import argparse
import json
import sys

import sympy

from . import serialize
from .connection import (
    DIAGONAL,
    KATZ,
    NearlyOCForm,
    change_coordinates,
    get_splitting,
    nabla,
    nabla_classical,
    partial_chi,
    specialize_form,
)
from .errors import DomainError, PadicGMError, PrecisionError
from .hecke import HeckeOp, apply
from .padic import FamilyElement, PadicInt, PrecisionProfile
from .qseries import QSeries, delta, eisenstein_classical, eisenstein_e2, eisenstein_preset
from .verify import SUITES, run_all, run_suite
from .weights import classical_char, universal_char, weight_point, wt

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

_NAMED = {"delta": 12, "e2": 2, "e4": 4, "e6": 6}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _profile_flags(p):
    g = p.add_argument_group("precision profile")
    g.add_argument("--p", type=int, default=5, help="prime p >= 5 (default 5)")
    g.add_argument("--prec-p", type=int, default=6, dest="N", help="p-adic digits N (default 6)")
    g.add_argument("--prec-u", type=int, default=16, dest="M", help="family u-degree bound M (default 16)")
    g.add_argument("--prec-q", type=int, default=64, dest="Q", help="q-expansion length Q (default 64)")
    p.add_argument("--output", "-o", help="write JSON here instead of standard output")


def _input_flags(p, weight=True, splitting=KATZ):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", "-i", help="serialized series or form (JSON)")
    src.add_argument("--form", choices=sorted(_NAMED), help="built-in q-expansion")
    if weight:
        p.add_argument("--weight", help="k:INT or universal (defaults to the built-in form's weight)")
    p.add_argument("--splitting", default=splitting, help=f"coordinates of the form (default {splitting})")


def build_parser():
    parser = _Parser(prog="padic-gm", description="Exact p-adic families of nearly overconvergent modular forms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eisenstein", help="E_k q-expansion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--norm", choices=["std", "paper"], default="std")
    _profile_flags(p)

    _profile_flags(sub.add_parser("delta", help="Delta q-expansion"))

    p = sub.add_parser("theta", help="apply q d/dq to a series")
    _input_flags(p, weight=False)
    _profile_flags(p)

    p = sub.add_parser("partial", help="family operator theta + wt alpha0")
    _input_flags(p)
    _profile_flags(p)

    p = sub.add_parser("nabla", help="Gauss-Manin connection")
    p.add_argument("--r", type=int, default=0, help="type of the input form when built from a series")
    _input_flags(p)
    _profile_flags(p)

    p = sub.add_parser("hecke", help="U_p, V_p or T_l in diagonal coordinates")
    p.add_argument("--op", choices=["up", "vp", "tl"], required=True)
    p.add_argument("--ell", type=int)
    _input_flags(p, splitting=DIAGONAL)
    _profile_flags(p)

    p = sub.add_parser("specialize", help="evaluate a family object at weight k")
    p.add_argument("--k", type=int, required=True)
    _input_flags(p, weight=False)
    _profile_flags(p)

    p = sub.add_parser("wt", help="p-adic weight of a character")
    p.add_argument("--weight", required=True, help="k:INT or universal")
    _profile_flags(p)

    p = sub.add_parser("change-coords", help="move a form to another splitting")
    p.add_argument("--alpha", choices=["e2/12", "-e2/12"], required=True)
    p.add_argument("--direction", type=int, choices=[1, -1], default=1)
    p.add_argument("--to", help="name of the target coordinates")
    _input_flags(p)
    _profile_flags(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    _profile_flags(p)
    return parser


# -- helpers --------------------------------------------------------------------------


def _parse_weight(spec, profile):
    if spec == "universal":
        return universal_char(profile)
    if spec and spec.startswith("k:"):
        try:
            return classical_char(int(spec[2:]), profile)
        except ValueError:
            pass
    raise DomainError(f"weight must be 'k:INT' or 'universal', got {spec!r}")


def _named_series(name, profile):
    if name == "delta":
        return delta(profile)
    if name == "e2":
        return eisenstein_e2(profile)
    return eisenstein_preset({"e4": "E4_STD", "e6": "E6_STD"}[name], profile)


def _load(args, profile):
    """(object, profile) from --input or --form."""
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            obj, prof = serialize.loads(fh.read())
        return obj, prof
    if args.form:
        return _named_series(args.form, profile), profile
    raise DomainError("give --input FILE or --form NAME")


def _as_form(obj, args, profile, r=0):
    if isinstance(obj, NearlyOCForm):
        return obj
    spec = getattr(args, "weight", None)
    if spec is None:
        if not args.form:
            raise DomainError("a bare series needs --weight")
        spec = f"k:{_NAMED[args.form]}"
    chi = _parse_weight(spec, profile)
    f = obj
    if chi.is_family and not f.family:
        f = QSeries(f.coeffs, profile, family=True, prec=f.prec)
    return NearlyOCForm.from_series(f, chi, r, args.splitting)


def _eisenstein(k, norm, profile):
    if k == 2:
        return eisenstein_e2(profile)
    if norm == "paper":
        if k != 4:
            raise DomainError("the 120 normalization exists only for k = 4")
        return eisenstein_preset("E4_PAPER", profile)
    if k % 2 or k < 4:
        raise DomainError(f"Eisenstein series need even k >= 2, got {k}")
    c = sympy.Rational(-2 * k) / sympy.bernoulli(k)
    if c.q != 1:
        # -2k/B_k is not integral: scale by the denominator's inverse in Z/p^N
        inv = PadicInt(int(c.q), profile).inverse()
        return eisenstein_classical(k, int(c.p), profile).scale(inv) + (1 - inv.residue)
    return eisenstein_classical(k, int(c), profile)


def _scalar_json(x):
    if isinstance(x, FamilyElement):
        return {"u_coeffs": list(x.coeffs), "prec": x.prec}
    return {"value": x.residue, "prec": x.prec}


# -- commands ---------------------------------------------------------------------------


def _run(args):
    profile = PrecisionProfile(p=args.p, N=args.N, M=args.M, Q=args.Q)
    cmd = args.command
    if cmd == "eisenstein":
        return serialize.dumps(_eisenstein(args.k, args.norm, profile), profile, command=cmd), EXIT_OK
    if cmd == "delta":
        return serialize.dumps(delta(profile), profile, command=cmd), EXIT_OK
    if cmd == "wt":
        w = wt(_parse_weight(args.weight, profile))
        return json.dumps({"header": serialize.header(profile), "command": cmd, "wt": _scalar_json(w)},
                          sort_keys=True, separators=(",", ":")), EXIT_OK
    if cmd == "verify":
        result = run_all(profile, args.seed) if args.suite == "all" else run_suite(args.suite, profile, args.seed)
        text = json.dumps({"header": serialize.header(profile), "command": cmd, "result": result},
                          sort_keys=True, separators=(",", ":"))
        return text, EXIT_OK if result["passed"] else EXIT_FAIL

    obj, profile = _load(args, profile)
    if cmd == "theta":
        out = obj.theta() if isinstance(obj, QSeries) else NearlyOCForm(
            obj.weight, tuple(c.theta() for c in obj.components), obj.splitting)
    elif cmd == "partial":
        F = _as_form(obj, args, profile)
        s = get_splitting(F.splitting, profile)
        out = NearlyOCForm(F.weight.twist(2), tuple(
            partial_chi(f, F.weight.twist(-2 * a), s) for a, f in enumerate(F.components)), F.splitting)
    elif cmd == "nabla":
        F = _as_form(obj, args, profile, args.r)
        s = get_splitting(F.splitting, profile)
        out = nabla(F, s) if F.weight.is_family or F.weight.k is None else nabla_classical(F, s)
    elif cmd == "hecke":
        out = apply(HeckeOp(args.op, args.ell), _as_form(obj, args, profile))
    elif cmd == "specialize":
        uk = weight_point(args.k, profile)
        out = specialize_form(obj, uk) if isinstance(obj, NearlyOCForm) else obj.specialize(uk)
    elif cmd == "change-coords":
        F = _as_form(obj, args, profile)
        alpha = eisenstein_e2(profile).scale(PadicInt(12, profile).inverse())
        if args.alpha.startswith("-"):
            alpha = -alpha
        out = change_coordinates(F, alpha, to=args.to, direction=args.direction)
    else:  # pragma: no cover - argparse restricts the choices
        raise DomainError(f"unknown command {cmd!r}")
    return serialize.dumps(out, profile, command=cmd), EXIT_OK


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, execute, write JSON; return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text, code = _run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=stderr)
        return EXIT_PRECISION
    except (PadicGMError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stdout)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
