"""``gorkit`` command-line front end.

Every subcommand builds a :class:`Report`; the text form is a few plain
lines, ``--json`` prints the same content as a JSON object tagged
``"schema": "gorkit/1"``.  Exit codes:

* 0  definitive result
* 1  a verification check failed
* 2  usage error (unknown subcommand, bad flags)
* 3  invalid input file
* 4  precondition failure (e.g. algebra not certified Iwanaga-Gorenstein)
* 5  capped or probabilistic verdict under ``--strict``

Configuration precedence is flag, then ``GORKIT_PRIME`` / ``GORKIT_CAP``,
then the input file (prime only), then the built-in default.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field

from . import gorenstein as gr
from . import io
from . import modcat as mc
from . import resolve as rs
from .algebra import truncation_warnings
from .frobext import NotAutomorphismError, NotProjectiveError
from .gorenstein import GorensteinConsistencyError, NotCertifiedError
from .linalg import DEFAULT_PRIME

SCHEMA = "gorkit/1"
DEFAULTS = {"cap": rs.DEFAULT_CAP, "window": gr.DEFAULT_WINDOW, "trials": 8}

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INVALID, EXIT_PRECONDITION, EXIT_UNKNOWN = 0, 1, 2, 3, 4, 5


@dataclass
class Report:
    command: list
    inputs: dict = field(default_factory=dict)  # file -> sha256 prefix
    results: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    exit_code: int = EXIT_OK
    uncertain: bool = False  # a capped or probabilistic verdict was reported
    as_json_output: bool = False

    def as_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
            "exit_code": self.exit_code,
        }

    def text(self) -> str:
        return "\n".join(self.lines + [f"warning: {w}" for w in self.warnings])


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- configuration ---------------------------------------------------------------


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw in (None, ""):
        return None
    try:
        return int(raw)
    except ValueError:
        raise _Fail(EXIT_USAGE, f"{name} must be an integer, got {raw!r}") from None


def _config(args) -> dict:
    return {
        "prime": args.prime if args.prime is not None else _env_int("GORKIT_PRIME"),
        "cap": args.cap if args.cap is not None else (_env_int("GORKIT_CAP") or DEFAULTS["cap"]),
        "window": args.window if args.window is not None else DEFAULTS["window"],
        "trials": args.trials if args.trials is not None else DEFAULTS["trials"],
        "seed": args.seed,
    }


def _digest(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()[:16]
    except OSError:
        return "unreadable"


class _Context:
    def __init__(self, args, report: Report):
        self.args = args
        self.cfg = _config(args)
        self.report = report

    def algebra(self, path):
        self.report.inputs[path] = _digest(path)
        A = io.load_algebra(path, self.cfg["prime"])
        self.report.warnings += [f"path {w} vanishes only through the nilpotency bound"
                                 for w in truncation_warnings(A.presentation)]
        return A

    def module(self, path, A):
        self.report.inputs[path] = _digest(path)
        return io.load_module(path, A)

    def cert(self, A):
        c = self.cfg
        return gr.certify_ig(A, c["cap"], c["trials"], c["seed"])

    def certified(self, A):
        cert = self.cert(A)
        gr.require_certified(cert)
        return cert

    def flag_uncertain(self, message: str):
        self.report.warnings.append(message)
        self.report.uncertain = True


# -- subcommands -------------------------------------------------------------------


def cmd_basis(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    labels = A.labels()
    ctx.report.results = {"dimension": A.dimension, "basis": labels, "prime": A.prime}
    ctx.report.lines += [f"dim A = {A.dimension} over F_{A.prime}", "basis: " + " ".join(labels)]


def _dimension_result(ctx: _Context, h: rs.HomologicalDimension):
    ctx.report.results = h.as_json()
    ctx.report.lines.append(str(h))
    if h.kind == "lower_bound":
        ctx.flag_uncertain(f"{h.label} capped: {h.reason or 'cap'}")


def cmd_pd(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    M = ctx.module(ctx.args.module, A)
    c = ctx.cfg
    _dimension_result(ctx, rs.pd(M, c["cap"], c["trials"], c["seed"]))


def cmd_id(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    M = ctx.module(ctx.args.module, A)
    c = ctx.cfg
    _dimension_result(ctx, rs.injective_dimension(M, c["cap"], c["trials"], c["seed"]))


def cmd_ext(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    M, N = ctx.module(ctx.args.m, A), ctx.module(ctx.args.n, A)
    i = ctx.args.degree
    if i < 0:
        raise _Fail(EXIT_PRECONDITION, "degree must be >= 0")
    e = rs.ext(M, N, i).dimension
    ctx.report.results = {"degree": i, "dimension": e}
    ctx.report.lines.append(f"dim Ext^{i} = {e}")


def cmd_ig_certify(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    cert = ctx.cert(A)
    ctx.report.results = cert.as_json()
    ctx.report.lines.append(cert.summary())
    if not cert.certified:
        ctx.flag_uncertain("algebra not certified Iwanaga-Gorenstein within the cap")


def cmd_gp_test(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    M = ctx.module(ctx.args.module, A)
    g = gr.gdim(M, ctx.certified(A))
    ctx.report.results = {"gp": g == 0, "gdim": g}
    ctx.report.lines.append("GP: yes" if g == 0 else f"GP: no (Gd = {g})")


def cmd_gdim(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    M = ctx.module(ctx.args.module, A)
    cert = ctx.certified(A)
    g = gr.gdim(M, cert)
    h = rs.pd(M, ctx.cfg["cap"], ctx.cfg["trials"], ctx.cfg["seed"])
    ctx.report.results = {"gdim": g, "pd": h.as_json()}
    if h.is_exact:
        ctx.report.lines.append(f"Gd = {g} (= pd)")
    else:
        ctx.report.lines.append(f"Gd = {g} ({h})")


def _gext(ctx: _Context, fn, route: str):
    A = ctx.algebra(ctx.args.algebra)
    X, Y = ctx.module(ctx.args.x, A), ctx.module(ctx.args.y, A)
    k = ctx.args.degree
    if k < 0:
        raise _Fail(EXIT_PRECONDITION, "degree must be >= 0")
    v = fn(X, Y, k, ctx.certified(A))
    ctx.report.results = {"degree": k, "dimension": v, "route": route}
    ctx.report.lines.append(f"dim GE^{k} = {v}")


def cmd_gext(ctx):
    _gext(ctx, gr.gorenstein_ext, "approximation")


def cmd_gext_direct(ctx):
    _gext(ctx, gr.gorenstein_ext_direct, "direct")


def cmd_tate(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    X, Y = ctx.module(ctx.args.x, A), ctx.module(ctx.args.y, A)
    cert = ctx.certified(A)
    lo, hi = ctx.args.lo, ctx.args.hi
    if lo > hi:
        raise _Fail(EXIT_PRECONDITION, "--from must not exceed --to")
    w = ctx.cfg["window"]
    if max(abs(lo), abs(hi)) > w - 2:
        raise _Fail(EXIT_PRECONDITION, f"degrees must satisfy |i| <= window - 2 = {w - 2}")
    dims = {i: gr.tate_ext(X, Y, i, cert, w) for i in range(lo, hi + 1)}
    ctx.report.results = {"window": w, "dimensions": {str(i): v for i, v in dims.items()}}
    ctx.report.lines += [f"dim TateExt^{i} = {v}" for i, v in dims.items()]


def cmd_am_check(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    X, Y = ctx.module(ctx.args.x, A), ctx.module(ctx.args.y, A)
    rep = gr.am_sequence_check(X, Y, ctx.certified(A), ctx.cfg["window"])
    ctx.report.results = {
        "rows": [{"k": k, "GE": ge, "Ext": ex, "TateExt": te} for k, ge, ex, te in rep.rows],
        "exact": rep.exact,
        "failures": list(rep.failures),
    }
    ctx.report.lines += rep.lines()
    if not rep.exact:
        ctx.report.exit_code = EXIT_FAILED


def cmd_nakayama(ctx: _Context):
    A = ctx.algebra(ctx.args.algebra)
    rows = gr.nakayama_check(A, ctx.cfg["trials"], ctx.cfg["seed"])
    V = A.quiver.vertices
    ctx.report.results = {"vertices": {V[v]: ans for v, ans in rows}}
    ctx.report.lines += [f"nu P({V[v]}) = I({V[v]}): {ans}" for v, ans in rows]
    if any(ans == "unknown" for _, ans in rows):
        ctx.flag_uncertain("isomorphism test inconclusive (probabilistic)")
    if any(ans == "no" for _, ans in rows):
        ctx.report.exit_code = EXIT_FAILED


def _extension(ctx: _Context):
    path = ctx.args.extension
    ctx.report.inputs[path] = _digest(path)
    return io.load_extension(path, ctx.cfg["prime"])


def cmd_frob_check(ctx: _Context):
    from .frobext import verify_frobenius

    emb, alpha = _extension(ctx)
    try:
        F = verify_frobenius(emb, alpha, ctx.cfg["trials"], ctx.cfg["seed"])
    except NotProjectiveError as exc:
        ctx.report.results = {"frobenius": False, "reason": str(exc)}
        ctx.report.lines.append(f"Frobenius: no ({exc})")
        return
    if F is None:
        ctx.report.results = {"frobenius": None}
        ctx.report.lines.append("Frobenius: no invertible element found (probabilistic)")
        ctx.flag_uncertain("negative Frobenius verdict is probabilistic")
        return
    ctx.report.results = {"frobenius": True, "tau": F.tau.tolist()}
    ctx.report.lines.append(f"Frobenius: yes (tau = {F.tau.tolist()})")


def cmd_transfer_check(ctx: _Context):
    from .frobext import transfer_checks, verify_frobenius

    emb, alpha = _extension(ctx)
    F = verify_frobenius(emb, alpha, ctx.cfg["trials"], ctx.cfg["seed"])
    if F is None:
        raise _Fail(EXIT_PRECONDITION, "no Frobenius structure found for the extension")
    cap = ctx.cfg["cap"]
    cS, cR = ctx.certified(emb.sub), ctx.certified(emb.big)
    rep = transfer_checks(F, cS, cR, ctx.args.samples, ctx.cfg["seed"], cap)
    ctx.report.results = {"d": cS.d, "checks": [{"check": lab, "ok": ok, "detail": det} for lab, ok, det in rep.checks],
                          "ok": rep.ok}
    ctx.report.lines += rep.lines()
    if not rep.ok:
        ctx.report.exit_code = EXIT_FAILED


def cmd_selftest(ctx: _Context):
    from . import fixtures
    from .oracle import ext_oracle, ge_oracle, generate_corpus

    prime = ctx.cfg["prime"] or DEFAULT_PRIME
    A = fixtures.by_name(ctx.args.algebra, prime)
    corpus = generate_corpus(A, ctx.cfg["seed"], ctx.args.dim_cap)
    cert = ctx.cert(A)
    mods = list(corpus.items())
    checks = mismatches = 0
    failures = []
    top = cert.d + 2 if cert.certified else 2
    for nx, X in mods:
        for ny, Y in mods:
            for i in range(top + 1):
                a, b = rs.ext(X, Y, i).dimension, ext_oracle(X, Y, i)
                checks += 1
                if a != b:
                    failures.append(f"Ext^{i}({nx}, {ny}): engine {a}, oracle {b}")
                if cert.certified:
                    g = (gr.gorenstein_ext(X, Y, i, cert), gr.gorenstein_ext_direct(X, Y, i, cert),
                         ge_oracle(X, Y, i, cert))
                    checks += 1
                    if len(set(g)) != 1:
                        failures.append(f"GE^{i}({nx}, {ny}): approximation {g[0]}, direct {g[1]}, oracle {g[2]}")
    mismatches = len(failures)
    ctx.report.results = {"algebra": ctx.args.algebra, "corpus": corpus.names(), "checks": checks,
                          "mismatches": mismatches, "failures": failures, "certificate": cert.summary()}
    ctx.report.lines.append(f"{cert.summary()}; corpus of {len(corpus)} modules")
    ctx.report.lines += [f"mismatch: {f}" for f in failures]
    ctx.report.lines.append(f"selftest {ctx.args.algebra}: {'ok' if not failures else 'FAILED'} ({checks} checks)")
    if not cert.certified:
        ctx.report.warnings.append("Gorenstein checks skipped: algebra not certified within the cap")
    if failures:
        ctx.report.exit_code = EXIT_FAILED


# -- parser ------------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="exit 5 on capped or probabilistic verdicts")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=None)
    common.add_argument("--cap", type=int, default=None)
    common.add_argument("--window", type=int, default=None)
    common.add_argument("--trials", type=int, default=None)

    p = argparse.ArgumentParser(prog="gorkit", description="Gorenstein homological algebra over finite-dimensional algebras")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, *positional, help=""):
        s = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            s.add_argument(arg)
        s.set_defaults(func=fn)
        return s

    add("basis", cmd_basis, "algebra", help="basis of the algebra")
    add("ext", cmd_ext, "algebra", "m", "n", help="dim Ext^i(M, N)").add_argument("--degree", type=int, required=True)
    add("pd", cmd_pd, "algebra", "module", help="projective dimension")
    add("id", cmd_id, "algebra", "module", help="injective dimension")
    add("ig-certify", cmd_ig_certify, "algebra", help="Iwanaga-Gorenstein certificate")
    add("gp-test", cmd_gp_test, "algebra", "module", help="is the module Gorenstein projective")
    add("gdim", cmd_gdim, "algebra", "module", help="Gorenstein projective dimension")
    add("gext", cmd_gext, "algebra", "x", "y", help="GE^k via special approximations").add_argument(
        "--degree", type=int, required=True)
    add("gext-direct", cmd_gext_direct, "algebra", "x", "y", help="GE^k via a strict GP resolution").add_argument(
        "--degree", type=int, required=True)
    t = add("tate", cmd_tate, "algebra", "x", "y", help="Tate Ext over a degree range")
    t.add_argument("--from", dest="lo", type=int, default=-3)
    t.add_argument("--to", dest="hi", type=int, default=3)
    add("am-check", cmd_am_check, "algebra", "x", "y", help="check the GE / Ext / Tate long exact sequence")
    add("nakayama", cmd_nakayama, "algebra", help="nu(P_v) against injective envelopes")
    add("frob-check", cmd_frob_check, "extension", help="is the extension Frobenius")
    add("transfer-check", cmd_transfer_check, "extension", help="Gorenstein transfer along a Frobenius extension"
        ).add_argument("--samples", type=int, default=20)
    s = add("selftest", cmd_selftest, help="engine/oracle agreement on a fixture corpus")
    s.add_argument("--algebra", required=True, choices=["e1", "e2", "e3", "e4", "e5"])
    s.add_argument("--dim-cap", type=int, default=6)
    return p


def run(argv=None) -> Report:
    argv = list(sys.argv[1:] if argv is None else argv)
    report = Report(command=argv)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        report.exit_code = EXIT_USAGE if exc.code else EXIT_OK
        report.results = {"error": "usage"}
        return report
    report.as_json_output = args.json
    try:
        ctx = _Context(args, report)
        args.func(ctx)
        if report.uncertain and args.strict and report.exit_code == EXIT_OK:
            report.exit_code = EXIT_UNKNOWN
    except _Fail as exc:
        _error(report, exc.code, str(exc))
    except io.InvalidFile as exc:
        _error(report, EXIT_INVALID, str(exc))
    except (NotCertifiedError, mc.AlgebraMismatch, NotAutomorphismError, NotProjectiveError) as exc:
        _error(report, EXIT_PRECONDITION, str(exc))
    except GorensteinConsistencyError as exc:
        _error(report, EXIT_FAILED, f"internal consistency check failed: {exc}")
    except ValueError as exc:
        _error(report, EXIT_PRECONDITION, str(exc))
    return report


def _error(report: Report, code: int, message: str):
    report.exit_code = code
    report.results = {"error": message}
    report.lines = [f"error: {message}"]


def main(argv=None) -> int:
    report = run(argv)
    if report.as_json_output:
        print(json.dumps(report.as_json(), indent=2, sort_keys=True))
    elif report.lines or report.warnings:
        print(report.text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
