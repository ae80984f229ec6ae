"""Batch front end.

    distab analyze   scene.toml [--json out.json]
    distab certify   scene.toml [--json out.json] [--seed N]
    distab enumerate scene.toml [--json out.json] [--csv out.csv]
                                [--budget N] [--seed N]
    distab verify-suite [--json out.json]

Exit codes: 0 success; 1 a suite check failed; 2 input error;
3 an internal consistency cross-check failed (tool bug indicator).
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import time
from typing import Optional

from . import certify as ct
from . import ideals as il
from .algebras import center
from .forms import assert_selfinjective, find_frobenius_form, is_symmetric, FormError
from .groups import GroupError, NotNormal
from .ideals import IdealError, RadicalContractViolation, quotient_by
from .modules import ModuleError
from .reporting import Report, digest
from .scenes import Scene, SceneError, parse_scene, _resolve_element, _resolve_subgroup
from .suite import run_suite

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENT = 3

INPUT_ERRORS = (
    SceneError,
    GroupError,
    IdealError,
    ModuleError,
    FormError,
    ct.CertifyError,
    NotNormal,
    OSError,
)


def _analysis_certificate(scene: Scene, seed: int) -> ct.Certificate:
    a = scene.algebra
    cert = ct.Certificate("analysis", ct.describe_algebra(a))
    series = [i.dim for i in il.radical_series(a)]
    cert.conditions["radical_series_dims"] = [a.dim] + series
    cert.conditions["socle_series_dims"] = [i.dim for i in il.socle_series(a)]
    cert.conditions["center_dim"] = center(a).dim
    frob = find_frobenius_form(a, seed=seed)
    sym = is_symmetric(a, seed=seed)
    cert.conditions["frobenius"] = frob.kind
    cert.conditions["frobenius_evidence"] = frob.evidence
    cert.conditions["symmetric"] = sym.kind
    return cert.finalize(ct.POSITIVE)


def _dispatch_certify(scene: Scene, seed: int) -> ct.Certificate:
    a = scene.algebra
    cmd = scene.command
    kind = cmd.get("kind")
    if not kind:
        raise SceneError("command.kind", "certify needs a command kind")

    def named_ideal(key="ideal"):
        name = cmd.get(key)
        if name not in scene.ideals:
            raise SceneError(f"command.{key}", f"unknown ideal {name!r}")
        return scene.ideals[name]

    def tag():
        cert = find_frobenius_form(a, seed=seed)
        if cert.is_selfinjective_witness():
            return assert_selfinjective(a, cert)
        if cmd.get("assert_selfinjective", False):
            return assert_selfinjective(a, cert, override=True)
        raise SceneError(
            "command",
            "algebra has no Frobenius certificate; set assert_selfinjective = true "
            "to override",
        )

    if kind == "quotient-embedding":
        return ct.certify_quotient_embedding(a, tag(), named_ideal())
    if kind == "square-zero":
        return ct.certify_square_zero(a, tag(), named_ideal())
    if kind == "central-quotient":
        sym = is_symmetric(a, seed=seed)
        z = _resolve_element(a, cmd, "command")
        return ct.certify_central_quotient(a, sym, z)
    if kind == "group-quotient":
        if scene.group is None:
            raise SceneError("command", "group-quotient needs a [group] table")
        n = _resolve_subgroup(scene.group, cmd, "command")
        return ct.certify_group_quotient(scene.group, n, scene.p)
    if kind == "central-p-subgroup":
        elems = cmd.get("elements")
        if not isinstance(elems, list):
            raise SceneError("command.elements", "list of vectors required")
        return ct.certify_central_p_subgroup(a, tag(), elems)
    if kind == "extension-obstruction":
        ideal = named_ideal()
        the_tag = tag()
        emb = ct.certify_quotient_embedding(a, the_tag, ideal)
        q, _ = quotient_by(ideal)
        qcert = find_frobenius_form(q, seed=seed)
        return ct.extension_closure_obstruction(a, the_tag, ideal, emb, qcert)
    if kind == "group-extension-closure":
        if scene.group is None:
            raise SceneError("command", "group-extension-closure needs a [group] table")
        n = _resolve_subgroup(scene.group, cmd, "command")
        return ct.certify_group_extension_closure(scene.group, n, scene.p)
    if kind == "mod-y":
        name = cmd.get("module")
        if name not in scene.modules:
            raise SceneError("command.module", f"unknown module {name!r}")
        return ct.certify_mod_y(a, tag(), scene.modules[name])
    if kind == "orthogonal-family":
        names = cmd.get("modules")
        if not isinstance(names, list) or not names:
            raise SceneError("command.modules", "list of module names required")
        mods = []
        for nm in names:
            if nm not in scene.modules:
                raise SceneError("command.modules", f"unknown module {nm!r}")
            mods.append(scene.modules[nm])
        return ct.check_orthogonal_family(a, mods)
    raise SceneError("command.kind", f"unknown certify command {kind!r}")


def _load_scene(path: str) -> tuple[Scene, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_scene(data), digest(data)


def _emit(report: Report, json_path: Optional[str]) -> None:
    text = report.to_json()
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code_for(certs: list[dict]) -> int:
    for c in certs:
        if c.get("verdict") == ct.INCONSISTENT:
            return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_analyze(args) -> int:
    scene, dg = _load_scene(args.scene)
    t0 = time.perf_counter()
    cert = _analysis_certificate(scene, args.seed)
    report = Report("analyze", dg, args.seed, [cert.to_dict()])
    if args.timing:
        report.timing_ms = (time.perf_counter() - t0) * 1000.0
    _emit(report, args.json)
    return _exit_code_for(report.certificates)


def cmd_certify(args) -> int:
    scene, dg = _load_scene(args.scene)
    t0 = time.perf_counter()
    cert = _dispatch_certify(scene, args.seed)
    report = Report("certify", dg, args.seed, [cert.to_dict()])
    if args.timing:
        report.timing_ms = (time.perf_counter() - t0) * 1000.0
    _emit(report, args.json)
    return _exit_code_for(report.certificates)


def cmd_enumerate(args) -> int:
    scene, dg = _load_scene(args.scene)
    t0 = time.perf_counter()
    a = scene.algebra
    frob = find_frobenius_form(a, seed=args.seed)
    if not frob.is_selfinjective_witness():
        raise SceneError("algebra", "enumeration requires a Frobenius certificate")
    enum_report, flagged = ct.enumerate_embedding_ideals(
        a, frob, budget=args.budget, seed=args.seed
    )
    report = Report("enumerate", dg, args.seed, [], enum_report.to_dict())
    if args.timing:
        report.timing_ms = (time.perf_counter() - t0) * 1000.0
    _emit(report, args.json)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["dim", "ideals", "embedding_positive"])
            for dim in sorted(enum_report.counts):
                row = enum_report.counts[dim]
                writer.writerow([dim, row["ideals"], row["embedding_positive"]])
    bad = (
        EXIT_INCONSISTENT
        if not (enum_report.half_dim_bound_ok and enum_report.monotone_ok)
        else EXIT_OK
    )
    return bad


def cmd_verify_suite(args) -> int:
    fault = os.environ.get("DISTAB_FAULT_INJECT") or None
    t0 = time.perf_counter()
    results = run_suite(fault)
    report = Report("verify-suite", None, args.seed, [], None,
                    [r.to_dict() for r in results])
    if args.timing:
        report.timing_ms = (time.perf_counter() - t0) * 1000.0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        sys.stderr.write(f"{status} {r.name}\n")
    if args.json:
        _emit(report, args.json)
    elif not args.quiet:
        sys.stdout.write(report.to_json())
    if any(r.inconsistent for r in results):
        return EXIT_INCONSISTENT
    if any(not r.passed for r in results):
        return EXIT_SUITE_FAILURE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distab",
        description="exact certification of distinguished abelian subcategories",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    parser.add_argument("--budget", type=int, default=1 << 20,
                        help="work budget for enumeration")
    parser.add_argument("--timing", action="store_true",
                        help="record wall-clock timing (breaks byte-determinism)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_an = sub.add_parser("analyze", help="series dims, duality certificates, center")
    p_an.add_argument("scene")
    p_an.add_argument("--json", help="write the JSON report here")
    p_an.set_defaults(func=cmd_analyze)

    p_ce = sub.add_parser("certify", help="run the certification named in the scene")
    p_ce.add_argument("scene")
    p_ce.add_argument("--json", help="write the JSON report here")
    p_ce.set_defaults(func=cmd_certify)

    p_en = sub.add_parser("enumerate", help="survey ideals for embedding positivity")
    p_en.add_argument("scene")
    p_en.add_argument("--json", help="write the JSON report here")
    p_en.add_argument("--csv", help="write the per-dimension table here")
    p_en.set_defaults(func=cmd_enumerate)

    p_vs = sub.add_parser("verify-suite", help="run the built-in paper-instance suite")
    p_vs.add_argument("--json", help="write the JSON report here")
    p_vs.add_argument("--quiet", action="store_true", help="suppress stdout report")
    p_vs.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = os.environ.get("DISTAB_THREADS")
    if threads:
        # all computation is single-process numpy; cap its thread pools
        os.environ.setdefault("OMP_NUM_THREADS", threads)
        os.environ.setdefault("OPENBLAS_NUM_THREADS", threads)
    try:
        return args.func(args)
    except RadicalContractViolation as e:
        sys.stderr.write(f"internal contract violation: {e}\n")
        return EXIT_INCONSISTENT
    except INPUT_ERRORS as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
