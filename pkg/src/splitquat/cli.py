"""Command-line front end.

Reads ``{"a": [...], "b": [...], "c": [...]}`` from a file or stdin (or the
``--a/--b/--c`` flags), factorizes ``a t² + b t + c`` and prints a report.
Exit status: 0 factorizable, 1 not factorizable, 2 input error.
"""
from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import math
import sys
import time
from typing import Any, Sequence

from . import tolerance as tol
from .algebra import SplitQuaternion, inverse, mul
from .errors import NotInvertible, SplitQuatError
from .factorization import (
    FactorizationOutcome, Witness, coefficient_rank, enumerate_factorizations, factorize,
    remainder_candidates,
)
from .nullquadric import ProjectiveLine, line_null_intersections, segment_null_intersections
from .polynomials import RPoly, SPoly, norm_poly, poly_roots, reparametrize
from .verification import search_zero, verify_witness

__all__ = ["JobSpec", "InputError", "parse_job", "run", "render_text", "main"]


class InputError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class JobSpec:
    a: tuple[float, float, float, float]
    b: tuple[float, float, float, float]
    c: tuple[float, float, float, float]
    tolerance: float | None = None
    enumerate_all: bool = False
    verify: bool = False
    output_format: str = "text"
    seed: int = 0

    def polynomial(self) -> SPoly:
        return SPoly([SplitQuaternion(*self.c), SplitQuaternion(*self.b), SplitQuaternion(*self.a)])


def _quadruple(value: Any, name: str) -> tuple[float, float, float, float]:
    if isinstance(value, str):
        value = [p for p in value.replace(",", " ").split()]
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise InputError(f"field '{name}': expected 4 numbers, got {value!r}")
    out = []
    for k, v in enumerate(value):
        try:
            x = float(v)
        except (TypeError, ValueError):
            raise InputError(f"field '{name}'[{k}]: {v!r} is not a number") from None
        if not math.isfinite(x):
            raise InputError(f"field '{name}'[{k}]: {v!r} is not finite")
        out.append(x)
    return tuple(out)  # type: ignore[return-value]


def parse_document(text: str) -> dict[str, tuple]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("input: expected a JSON object with fields a, b, c")
    missing = [k for k in "abc" if k not in doc]
    if missing:
        raise InputError(f"input: missing field(s) {', '.join(missing)}")
    return {k: _quadruple(doc[k], k) for k in "abc"}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="splitquat",
        description="Factorize a quadratic split quaternion polynomial a t^2 + b t + c.",
    )
    p.add_argument("input", nargs="?", help="JSON file with fields a, b, c ('-' for stdin)")
    p.add_argument("--a", help="leading coefficient, e.g. 1,0,0,0")
    p.add_argument("--b", help="linear coefficient")
    p.add_argument("--c", help="constant coefficient")
    p.add_argument("--tolerance", type=float, help="zero-test tolerance (default 1e-9)")
    p.add_argument("--all", action="store_true", dest="enumerate_all",
                   help="list several factorizations instead of one")
    p.add_argument("--verify", action="store_true",
                   help="attach residual checks and, for negative verdicts, a numeric zero search")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    p.add_argument("--seed", type=int, default=0, help="seed for the zero search starts")
    return p


def parse_job(argv: Sequence[str], stdin=None) -> JobSpec:
    ns = _build_parser().parse_args(list(argv))
    flags = {k: getattr(ns, k) for k in "abc"}
    if any(v is not None for v in flags.values()):
        if ns.input is not None:
            raise InputError("give either an input document or --a/--b/--c, not both")
        coeffs = {k: _quadruple(v if v is not None else "0,0,0,0", k) for k, v in flags.items()}
    else:
        if ns.input in (None, "-"):
            text = (stdin or sys.stdin).read()
        else:
            try:
                with open(ns.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"{ns.input}: {exc.strerror}") from None
        coeffs = parse_document(text)
    if all(x == 0.0 for x in coeffs["a"]):
        raise InputError("leading coefficient must be nonzero")
    if ns.tolerance is not None and not ns.tolerance > 0:
        raise InputError("--tolerance must be positive")
    return JobSpec(coeffs["a"], coeffs["b"], coeffs["c"], ns.tolerance, ns.enumerate_all,
                   ns.verify, ns.output_format, ns.seed)


# ----------------------------------------------------------------------------
# report


def _num(x: float) -> float:
    x = float(x)
    return 0.0 if x == 0.0 else x


def _sq(h: SplitQuaternion | None):
    return None if h is None else [_num(v) for v in h.coords()]


def _poly(P: SPoly) -> list:
    return [_sq(c) for c in P.coeffs]


def _jsonable(value: Any) -> Any:
    if isinstance(value, SplitQuaternion):
        return _sq(value)
    if isinstance(value, RPoly):
        return [_num(c) for c in value.coeffs]
    if isinstance(value, SPoly):
        return _poly(value)
    if isinstance(value, enum.Enum):
        return value.value
    if dataclasses.is_dataclass(value):
        return {f.name.rstrip("_"): _jsonable(getattr(value, f.name))
                for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float):
        return _num(value) if math.isfinite(value) else None
    return value


def _witness_record(P: SPoly, w: Witness) -> dict:
    return {
        "unit": _sq(w.unit), "h1": _sq(w.h1), "h2": _sq(w.h2),
        "residual": _num(w.residual(P)),
        "factors": {"left": _poly(w.left), "right": _poly(w.right)},
    }


def _geometric_certificate(P: SPoly) -> dict:
    N = norm_poly(P)
    cert: dict[str, Any] = {
        "norm_poly": [_num(N.coeffs[m]) if m < len(N.coeffs) else 0.0 for m in range(5)],
        "quartic_roots": [],
        "remainders": [],
        "segment_intersections": None,
        "line_intersections": None,
    }
    if N.is_zero():
        return cert
    if N.degree >= 1:
        cert["quartic_roots"] = [[_num(z.real), _num(z.imag)] for z in poly_roots(N)]
    try:
        a_inv = inverse(P.leading)
    except NotInvertible:
        a_inv = None
    if a_inv is not None:
        M = SPoly([mul(a_inv, c) for c in P.coeffs[:-1]] + [SplitQuaternion.real(1.0)])
        cert["remainders"] = [
            {"M": [_num(x) for x in cand.M.coeffs], "classification": cand.classification.value,
             "ruling": None if cand.ruling is None else cand.ruling.value}
            for cand in remainder_candidates(M)
        ]
    cert["segment_intersections"] = segment_null_intersections(P).count
    if coefficient_rank(P.coeffs) == 2:
        count = line_null_intersections(ProjectiveLine.spanned_by(P.coeffs))
        cert["line_intersections"] = None if count == math.inf else int(count)
    return cert


def _oracle_form(P: SPoly) -> tuple[SplitQuaternion, SplitQuaternion, float] | None:
    """Monic form ``t² + b t + c`` with ``Sc(b) = 0`` reached by a real shift.

    Returns ``(b, c, s)`` meaning the zeros of ``P`` are the zeros of the
    monic form shifted by ``s``, or ``None`` when the leading coefficient is
    not invertible.
    """
    try:
        a_inv = inverse(P.leading)
    except NotInvertible:
        return None
    M = SPoly([mul(a_inv, c) for c in P.coeffs])
    s = -M[1].h0 / 2.0
    Mc = reparametrize(M, s)
    return Mc[1].vector, Mc[0], s


def run(job: JobSpec) -> dict:
    """Run the engine on a job and return the JSON-ready report."""
    P = job.polynomial()
    context = tol.tolerance(job.tolerance) if job.tolerance else _nullcontext()
    with context:
        started = time.perf_counter()
        outcome: FactorizationOutcome = factorize(P)
        witnesses = enumerate_factorizations(P) if job.enumerate_all else (
            [outcome.witness] if outcome.witness is not None else [])
        cert = _geometric_certificate(P)
        cert["details"] = _jsonable(outcome.certificate)
        report: dict[str, Any] = {
            "input": {"a": list(job.a), "b": list(job.b), "c": list(job.c)},
            "case": outcome.label.value,
            "factorizable": outcome.factorizable,
            "witnesses": [_witness_record(P, w) for w in witnesses],
            "certificate": cert,
            "exit": 0 if outcome.factorizable else 1,
        }
        if job.verify:
            report["verification"] = _verification(P, witnesses, outcome, job.seed)
        report["_elapsed"] = time.perf_counter() - started
    return report


def _verification(P: SPoly, witnesses: list[Witness], outcome, seed: int) -> dict:
    out: dict[str, Any] = {"residuals": []}
    for w in witnesses:
        r = verify_witness(P, w.left, w.right)
        out["residuals"].append({"max_abs": _num(r.max_abs), "passes": r.passes()})
    if not outcome.factorizable:
        form = _oracle_form(P)
        if form is None:
            out["search_zero"] = {"applicable": False}
        else:
            b, c, s = form
            z = search_zero(b, c, seed=seed)
            out["search_zero"] = {"applicable": True, "seed": seed, "starts": 64,
                                  "zero": None if z is None else _sq(z + s)}
    return out


class _nullcontext:
    def __enter__(self):
        return None

    def __exit__(self, *exc):
        return False


def _fmt(h) -> str:
    return "-" if h is None else str(SplitQuaternion(*h))


def _fmt_complex(re: float, im: float) -> str:
    scale = max(1.0, abs(re), abs(im))
    re = 0.0 if abs(re) <= 1e-12 * scale else re
    im = 0.0 if abs(im) <= 1e-12 * scale else im
    return f"{re:.6g}{im:+.6g}i"


def render_text(report: dict) -> str:
    inp = report["input"]
    lines = [
        f"P = ({_fmt(inp['a'])}) t^2 + ({_fmt(inp['b'])}) t + ({_fmt(inp['c'])})",
        f"case:          {report['case']}",
        f"factorizable:  {'yes' if report['factorizable'] else 'no'}",
    ]
    for k, w in enumerate(report["witnesses"], 1):
        if w["unit"] is not None:
            lines.append(f"witness {k}:     ({_fmt(w['unit'])}) (t - ({_fmt(w['h1'])})) "
                         f"(t - ({_fmt(w['h2'])}))")
        else:
            left = " + ".join(f"({_fmt(c)})t^{m}" for m, c in enumerate(w["factors"]["left"]))
            right = " + ".join(f"({_fmt(c)})t^{m}" for m, c in enumerate(w["factors"]["right"]))
            lines.append(f"witness {k}:     [{left}] [{right}]")
        lines.append(f"  residual:    {w['residual']:.3g}")
    cert = report["certificate"]
    lines.append("norm poly:     " + " ".join(f"{c:g}" for c in cert["norm_poly"])
                 + "  (constant term first)")
    if cert["quartic_roots"]:
        lines.append("roots:         " + ", ".join(_fmt_complex(re, im)
                                                   for re, im in cert["quartic_roots"]))
    for r in cert["remainders"]:
        ruling = f" ({r['ruling']})" if r["ruling"] else ""
        m0, m1, m2 = (v if abs(v) > 1e-12 else 0.0 for v in r["M"])
        lines.append(f"remainder:     M = {m2:g} t^2 + {m1:g} t + {m0:g}: "
                     f"{r['classification']}{ruling}")
    if cert["segment_intersections"] is not None:
        lines.append(f"segment ∩ N:   {cert['segment_intersections']}")
    if cert["line_intersections"] is not None:
        lines.append(f"line ∩ N:      {cert['line_intersections']}")
    for key, value in cert["details"].items():
        lines.append(f"  {key}: {value}")
    if "verification" in report:
        v = report["verification"]
        for k, r in enumerate(v["residuals"], 1):
            lines.append(f"verify {k}:      max deviation {r['max_abs']:.3g}"
                         f" ({'ok' if r['passes'] else 'FAILED'})")
        if "search_zero" in v:
            sz = v["search_zero"]
            if not sz["applicable"]:
                lines.append("zero search:   not applicable (leading coefficient not invertible)")
            else:
                found = "none found" if sz["zero"] is None else _fmt(sz["zero"])
                lines.append(f"zero search:   {found} ({sz['starts']} starts, seed {sz['seed']})")
    if "_elapsed" in report:
        lines.append(f"time:          {report['_elapsed'] * 1e3:.2f} ms")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        job = parse_job(sys.argv[1:] if argv is None else argv, stdin)
        report = run(job)
    except SystemExit as exc:  # argparse usage errors and --help
        return int(exc.code or 0)
    except InputError as exc:
        print(f"splitquat: error: {exc}", file=stderr)
        return 2
    except SplitQuatError as exc:
        print(f"splitquat: error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    elapsed = report.pop("_elapsed")
    if job.output_format == "json":
        json.dump(report, stdout, indent=2)
        stdout.write("\n")
    else:
        report["_elapsed"] = elapsed
        stdout.write(render_text(report) + "\n")
    return report["exit"]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
