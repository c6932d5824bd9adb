"""JSON command-line front end.

Every verb writes one JSON document to stdout.  Bundle arguments are file
paths, with ``-`` (or an omitted path) meaning stdin.  Exit codes:

    0  success
    1  internal consistency failure
    2  invalid input (one-line JSON error object on stderr)
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import covers, cyclic, orbifold, parabolic, pullback
from .errors import ConsistencyError, InputError
from .exact import CycElem, as_rational, weight_multiplicities

VERBS = (
    "kappa", "sj", "cyclic-bundle", "eval", "tensor", "dual", "hom",
    "to-orbifold", "from-orbifold", "pullback", "deloop", "bound",
    "weights", "inject", "validate", "roundtrip",
)

# flags whose value may start with '-' (e.g. "--s -2,-1")
_VALUE_FLAGS = {"--m", "--c", "--j", "--alpha", "--power", "--spec", "--matrices",
                "--order", "--traces", "--s", "--t"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")] if text.strip() else []
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


class _Inputs:
    """Hands out JSON documents from files, reading stdin at most once."""

    def __init__(self, stdin: TextIO):
        self.stdin = stdin
        self.used_stdin = False

    def load(self, path: str | None):
        if path in (None, "-"):
            if self.used_stdin:
                raise InputError("stdin can only be used for one input")
            self.used_stdin = True
            text = self.stdin.read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {path}: {exc.strerror}") from exc
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}") from exc

    def bundle(self, path):
        return parabolic.require_valid(parabolic.bundle_from_json(self.load(path)))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parbun", description="Exact computations with parabolic bundles on P^1.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("kappa", help="kappa_{m,c}")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--c", type=int, required=True)

    s = sub.add_parser("sj", help="degree s_j of the cyclic bundle")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--j", type=int, required=True)

    s = sub.add_parser("cyclic-bundle", help="bundle attached to V_j")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--j", type=int, required=True)

    s = sub.add_parser("eval", help="degrees of the value at a weight vector")
    s.add_argument("bundle", nargs="?")
    s.add_argument("--alpha", required=True, help="comma-separated rationals, e.g. 1/3,0")

    s = sub.add_parser("tensor", help="tensor product of two bundles, or a tensor power")
    s.add_argument("bundles", nargs="*")
    s.add_argument("--power", type=int)

    for verb in ("dual", "to-orbifold", "from-orbifold", "validate", "roundtrip"):
        s = sub.add_parser(verb)
        s.add_argument("bundle", nargs="?")

    s = sub.add_parser("hom", help="internal hom")
    s.add_argument("bundles", nargs="*")

    s = sub.add_parser("pullback", help="pullback along z -> z^m, or root pullback")
    s.add_argument("bundle", nargs="?")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--root", action="store_true")

    s = sub.add_parser("deloop", help="remove ramification of order m at 0")
    s.add_argument("bundle", nargs="?")
    s.add_argument("--m", type=int, required=True)

    s = sub.add_parser("bound", help="upper bounds on the Nori bundle degrees")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec")
    g.add_argument("--matrices")

    s = sub.add_parser("weights", help="character multiplicities from traces")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--traces", required=True,
                   help="comma-separated integers, or '-' for a JSON list of coefficient arrays on stdin")

    s = sub.add_parser("inject", help="sorted-domination test")
    s.add_argument("--s", required=True)
    s.add_argument("--t", required=True)
    return p


def _merge_values(argv: Sequence[str]) -> list[str]:
    out, i = [], 0
    argv = list(argv)
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _two_bundles(inputs: _Inputs, paths: list[str]):
    if len(paths) > 2:
        raise InputError("expected at most two bundle paths")
    paths = [None] * (2 - len(paths)) + list(paths)
    return inputs.bundle(paths[0]), inputs.bundle(paths[1])


def dispatch(args, inputs: _Inputs):
    v = args.verb
    if v == "kappa":
        return {"kappa": cyclic.kappa(cyclic.CyclicCoverParams(args.m, args.c))}
    if v == "sj":
        return {"s_j": cyclic.s_j(cyclic.CyclicCoverParams(args.m, args.c), args.j)}
    if v == "cyclic-bundle":
        P = cyclic.CyclicCoverParams(args.m, args.c)
        return parabolic.bundle_to_json(cyclic.cyclic_bundle(P, args.j))
    if v == "eval":
        B = inputs.bundle(args.bundle)
        alpha = [as_rational(x) for x in args.alpha.split(",")] if args.alpha else []
        return {"degrees": parabolic.evaluate(B, alpha)}
    if v == "tensor":
        if args.power is not None:
            if len(args.bundles) > 1:
                raise InputError("--power takes a single bundle")
            B = inputs.bundle(args.bundles[0] if args.bundles else None)
            return parabolic.bundle_to_json(parabolic.tensor_power(B, args.power))
        return parabolic.bundle_to_json(parabolic.tensor(*_two_bundles(inputs, args.bundles)))
    if v == "hom":
        return parabolic.bundle_to_json(parabolic.hom(*_two_bundles(inputs, args.bundles)))
    if v == "dual":
        return parabolic.bundle_to_json(parabolic.dual(inputs.bundle(args.bundle)))
    if v == "to-orbifold":
        return orbifold.orb_to_json(orbifold.from_parabolic(inputs.bundle(args.bundle)))
    if v == "from-orbifold":
        O = orbifold.orb_from_json(inputs.load(args.bundle))
        return parabolic.bundle_to_json(orbifold.to_parabolic(O))
    if v == "pullback":
        B = inputs.bundle(args.bundle)
        out = pullback.root_pullback(B) if args.root else pullback.plain_pullback(B, args.m)
        return parabolic.bundle_to_json(out)
    if v == "deloop":
        return parabolic.bundle_to_json(pullback.deloop(inputs.bundle(args.bundle), args.m))
    if v == "bound":
        if args.spec is not None:
            S = covers.cover_spec_from_json(inputs.load(args.spec))
        else:
            S = covers.spec_from_matrices(*covers.matrices_from_json(inputs.load(args.matrices)))
        return covers.report_to_json(covers.bound_u(S))
    if v == "weights":
        if args.traces == "-":
            raw = inputs.load(None)
            if not isinstance(raw, list):
                raise InputError("traces on stdin must be a JSON list")
            traces = [x if isinstance(x, int) else CycElem(len(x), x) for x in raw]
            for x in raw:
                if not isinstance(x, (int, list)) or isinstance(x, bool):
                    raise InputError(f"bad trace {x!r}")
        else:
            traces = _int_list(args.traces)
        return {"multiplicities": weight_multiplicities(args.order, traces)}
    if v == "inject":
        return {"can_inject": covers.can_inject(_int_list(args.s), _int_list(args.t))}
    if v == "validate":
        B = parabolic.bundle_from_json(inputs.load(args.bundle))
        problems = parabolic.validate(B)
        return {"valid": not problems, "diagnostics": problems}
    if v == "roundtrip":
        return parabolic.bundle_to_json(inputs.bundle(args.bundle))
    raise InputError(f"unknown verb {v!r}")  # pragma: no cover


def run(argv: Sequence[str], stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(_merge_values(argv))
        result = dispatch(args, _Inputs(stdin))
    except InputError as exc:
        stderr.write(dumps({"error": "invalid_input", "message": str(exc)}) + "\n")
        return 2
    except ConsistencyError as exc:
        stderr.write(dumps({"error": "consistency_failure", "message": str(exc)}) + "\n")
        return 1
    stdout.write(dumps(result) + "\n")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
