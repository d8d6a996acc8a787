"""Command-line front end.  Every subcommand prints deterministic JSON
(or plain text with --format text) so outputs can be frozen as golden files.

Exit codes: 0 success, 1 domain errors (reported as a structured error
object on stderr), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import classical, mlde, serialize, structure, vvmf
from .errors import ModformError
from .qseries import DEFAULT_TERMS, QExpansion


@dataclass(frozen=True)
class CliConfig:
    terms: int
    tolerance: float
    format: str


def _env_terms() -> int:
    return int(os.environ.get("MODFORMS_TERMS", DEFAULT_TERMS))


def _add_common(sub, tol: bool = False):
    sub.add_argument("--terms", type=int, default=_env_terms(), help="truncation order N")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    if tol:
        sub.add_argument("--tol", type=float, default=1e-6, help="numeric tolerance")


def _config(args) -> CliConfig:
    cfg = CliConfig(args.terms, getattr(args, "tol", 1e-6), args.format)
    if cfg.terms < 1:
        raise ModformError("--terms must be >= 1")
    if cfg.tolerance <= 0:
        raise ModformError("--tol must be positive")
    return cfg


def _parse_fractions(text: str):
    return [Fraction(part.strip()) for part in text.split(",") if part.strip()]


def _named_form(name: str, terms: int) -> QExpansion:
    if name in ("P", "Q", "R"):
        return classical.eisenstein(name, terms)
    if name.lower() == "delta":
        return classical.delta(terms)
    m = re.fullmatch(r"eta\^?(\d+)", name)
    if m:
        return classical.eta_power(int(m.group(1)), terms)
    raise ModformError(f"unknown form {name!r}: use P, Q, R, delta, or eta^h")


def _resolve_mlde(spec: str) -> mlde.MLDE:
    """An exponent list like "0,5/6", or a path to an MLDE JSON document."""
    if re.fullmatch(r"[\s0-9,/\-]+", spec):
        return mlde.mlde_from_exponents(_parse_fractions(spec))
    path = Path(spec)
    if not path.exists():
        raise ModformError(f"MLDE spec {spec!r} is neither an exponent list nor a file")
    return serialize.mlde_from_json(json.loads(path.read_text()))


def _emit(doc: dict, text: str | None, cfg: CliConfig) -> int:
    if cfg.format == "text" and text is not None:
        print(text)
    else:
        sys.stdout.write(serialize.dumps(doc))
    return 0


# -- subcommand handlers -----------------------------------------------------

def _cmd_qexp(args) -> int:
    cfg = _config(args)
    f = _named_form(args.form, cfg.terms)
    return _emit(serialize.qexpansion_to_json(f), str(f), cfg)


def _cmd_serre(args) -> int:
    cfg = _config(args)
    f = _named_form(args.form, cfg.terms)
    out = classical.serre_derivative(f, Fraction(args.weight), cfg.terms)
    return _emit(serialize.qexpansion_to_json(out), str(out), cfg)


def _cmd_mlde_solve(args) -> int:
    cfg = _config(args)
    if args.exponents:
        equation = mlde.mlde_from_exponents(_parse_fractions(args.exponents))
    elif args.coeffs:
        if args.weight is None:
            raise ModformError("--coeffs requires --weight")
        doc = json.loads(Path(args.coeffs).read_text())
        coeffs = [serialize.polynomial_from_json(g) for g in doc]
        equation = mlde.MLDE.make(args.weight, len(coeffs) + 1, coeffs)
    else:
        raise ModformError("need --exponents or --weight with --coeffs")
    ind = mlde.indicial_polynomial(equation)
    system = mlde.fundamental_system(equation, cfg.terms)
    doc = {
        "k0": equation.weight,
        "order": equation.order,
        "mlde": serialize.mlde_to_json(equation),
        "indicial": serialize.indicial_to_json(ind),
        "weight_relation": mlde.weight_relation_check(equation.weight, ind.roots),
        "solutions": serialize.vvmf_to_json(system),
    }
    text = "\n".join(
        [f"k0 = {equation.weight}, order {equation.order}"]
        + [f"f_{j} = {f}" for j, f in enumerate(system.components, start=1)]
    )
    return _emit(doc, text, cfg)


def _cmd_monodromy(args) -> int:
    cfg = _config(args)
    equation = _resolve_mlde(args.mlde)
    system = mlde.fundamental_system(equation, cfg.terms)
    rho = vvmf.recover_rho_S(system)
    rep = system.rep.with_rho_S(rho)
    report = vvmf.check_relations(rep, cfg.tolerance)
    doc = {
        "k0": equation.weight,
        "exponents": [serialize.fraction_to_json(m) for m in rep.exponents],
        "rho_S": serialize.matrix_to_json(rho),
        "relations": serialize.relation_to_json(report),
    }
    lines = [f"rho(S) for k0 = {equation.weight}:"]
    for row in rho.tolist():
        lines.append("  " + "  ".join(f"{z:.6f}" for z in row))
    lines.append(f"rho(S)^2 = {report.sign:+d} I (residual {report.s_squared_residual:.2e})")
    lines.append(f"(rho(S)rho(T))^3 residual {report.braid_residual:.2e}")
    text = "\n".join(lines)
    return _emit(doc, text, cfg)


def _cmd_classify2d(args) -> int:
    cfg = _config(args)
    cls = structure.classify_2dim(args.a, args.b)
    doc = serialize.twodim_to_json(cls)
    if cls.kind == "cyclic":
        coker = structure.coker_ps_difference(cls)
        doc["coker_poly"] = {str(e): c for e, c in sorted(coker.items())}
    text = (
        f"({cls.a}, {cls.b}): {cls.kind}, k0 = {cls.k0}, "
        f"weights {list(cls.weights.weights)}, coker weight {cls.coker_weight}"
    )
    return _emit(doc, text, cfg)


def _cmd_poincare(args) -> int:
    cfg = _config(args)
    if args.weights:
        ps = structure.ps_from_weights([int(w) for w in _parse_fractions(args.weights)])
    elif args.cyclic:
        k0, p = (int(x) for x in _parse_fractions(args.cyclic))
        ps = structure.ps_cyclic(k0, p)
    else:
        raise ModformError("need --weights or --cyclic")
    doc = serialize.poincare_to_json(ps)
    if args.upto is not None:
        doc["coefficients"] = {
            str(w): structure.ps_coefficient(ps, w) for w in range(args.upto + 1)
        }
    return _emit(doc, str(ps), cfg)


def _cmd_verify_basis(args) -> int:
    cfg = _config(args)
    equation = _resolve_mlde(args.mlde)
    system = mlde.fundamental_system(equation, cfg.terms)
    generators = [system]
    for _ in range(1, equation.order):
        generators.append(vvmf.serre_vvmf(generators[-1]))
    report = structure.free_basis_verify(generators, args.kmax, cfg.terms)
    doc = serialize.free_basis_to_json(report)
    doc["k0"] = equation.weight
    doc["generator_weights"] = [g.weight for g in generators]
    return _emit(doc, report.message, cfg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modforms",
        description="Exact q-expansions, MLDEs, and module structure for SL(2,Z) forms.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("qexp", help="print a named classical form")
    sub.add_argument("--form", required=True, help="P, Q, R, delta, or eta^h")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_qexp)

    sub = subs.add_parser("serre", help="Serre derivative of a named form")
    sub.add_argument("--form", required=True)
    sub.add_argument("--weight", required=True, help="weight the form is regarded at")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_serre)

    sub = subs.add_parser("mlde", help="modular linear differential equations")
    mlde_subs = sub.add_subparsers(dest="mlde_command", required=True)
    solve = mlde_subs.add_parser("solve", help="fundamental system of an MLDE")
    solve.add_argument("--exponents", help="comma-separated indicial roots, e.g. 0,5/6")
    solve.add_argument("--weight", type=int, help="k0 when giving explicit coefficients")
    solve.add_argument("--coeffs", help="path to a JSON list of g_0..g_{p-2}")
    _add_common(solve)
    solve.set_defaults(handler=_cmd_mlde_solve)

    sub = subs.add_parser("monodromy", help="numeric rho(S) of a fundamental system")
    sub.add_argument("--mlde", required=True, help="exponent list or MLDE JSON path")
    _add_common(sub, tol=True)
    sub.set_defaults(handler=_cmd_monodromy)

    sub = subs.add_parser("classify2d", help="classify a 2-dimensional indecomposable")
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_classify2d)

    sub = subs.add_parser("poincare", help="Hilbert-Poincare series")
    sub.add_argument("--weights", help="fundamental weights, e.g. 4,6")
    sub.add_argument("--cyclic", help="k0,p for a cyclic module")
    sub.add_argument("--upto", type=int, help="also list coefficients through this weight")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_poincare)

    sub = subs.add_parser("verify-basis", help="desk check that F, DF, ... generate freely")
    sub.add_argument("--mlde", required=True, help="exponent list or MLDE JSON path")
    sub.add_argument("--kmax", type=int, default=40)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_verify_basis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ModformError as err:
        sys.stderr.write(
            serialize.dumps({"error": {"type": type(err).__name__, "message": str(err)}})
        )
        return 1
    except ValueError as err:
        sys.stderr.write(serialize.dumps({"error": {"type": "ValueError", "message": str(err)}}))
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
