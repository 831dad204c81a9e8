"""Command-line pipelines over the .inc / .ls / JSON text formats."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .binmat import BinaryMatrix, FormatError, from_inc_text, to_inc_text
from .canonical import canonicalize, extract_mpls, reconstruct
from .geometry import (
    PencilWithTransversal,
    classify_v_eq_b,
    geometry_from_json,
    geometry_to_json,
    plane_check,
)
from .latin import MplsSet, from_ls_text, resolvability_report, to_ls_text, verify_mpls
from .matching import decompose_regular, duality_report
from .planes import build_pg2, geometry_from_incidence


@dataclass(frozen=True)
class CommandConfig:
    """Everything one subcommand invocation needs, parsed and typed."""

    command: str
    input: Path | None = None
    output: Path | None = None
    meta: Path | None = None
    in_dir: Path | None = None
    out_dir: Path | None = None
    json_out: Path | None = None
    order: int | None = None
    target: int | None = None
    seed: int = 0
    verbose: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pglatin",
        description="projective planes, mutually projective Latin squares, and matching duality",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized paths (default 0)")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress chatter on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-plane", help="write the incidence matrix of PG(2, q)")
    p.add_argument("--order", type=int, required=True, metavar="Q")
    p.add_argument("--out", type=Path, required=True, metavar="F.inc")
    p.add_argument("--json", type=Path, default=None, metavar="G.json", help="also write the geometry as JSON")

    p = sub.add_parser("canon", help="canonical block form of a plane incidence matrix")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="F.inc")
    p.add_argument("--out", type=Path, required=True, metavar="C.inc")
    p.add_argument("--meta", type=Path, required=True, metavar="C.json")

    p = sub.add_parser("extract", help="extract the square set from a plane incidence matrix")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="C.inc")
    p.add_argument("--out-dir", type=Path, required=True, metavar="DIR")

    p = sub.add_parser("reconstruct", help="rebuild the incidence matrix from L1.ls..Lk.ls")
    p.add_argument("--in-dir", type=Path, required=True, metavar="DIR")
    p.add_argument("--out", type=Path, required=True, metavar="F.inc")

    p = sub.add_parser("verify-plane", help="run both plane definitions against a matrix")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="F.inc")

    p = sub.add_parser("verify-mpls", help="check mutual projectivity of a square set")
    p.add_argument("--in-dir", type=Path, required=True, metavar="DIR")

    p = sub.add_parser("decompose", help="split a regular matrix into permutation matrices")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="F.inc")
    p.add_argument("--out-dir", type=Path, required=True, metavar="DIR")

    p = sub.add_parser("matching", help="report v, w, and witnesses for a matrix")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="F.inc")

    p = sub.add_parser("classify", help="pencil-with-transversal or plane, for v = b geometries")
    p.add_argument("--in", dest="input", type=Path, required=True, metavar="G.json")

    p = sub.add_parser("resolve", help="resolve square L<target> into transversals")
    p.add_argument("--in-dir", type=Path, required=True, metavar="DIR")
    p.add_argument("--target", type=int, required=True, metavar="I", help="1-based, matching L<I>.ls")
    return parser


def config_from_args(ns: argparse.Namespace) -> CommandConfig:
    return CommandConfig(
        command=ns.command,
        input=getattr(ns, "input", None),
        output=getattr(ns, "out", None),
        meta=getattr(ns, "meta", None),
        in_dir=getattr(ns, "in_dir", None),
        out_dir=getattr(ns, "out_dir", None),
        json_out=getattr(ns, "json", None),
        order=getattr(ns, "order", None),
        target=getattr(ns, "target", None),
        seed=ns.seed,
        verbose=ns.verbose,
    )


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _note(cfg: CommandConfig, message: str) -> None:
    if cfg.verbose:
        print(message, file=sys.stderr)


def _read_matrix(path: Path) -> BinaryMatrix:
    return from_inc_text(path.read_text())


def _load_mpls_dir(path: Path) -> MplsSet:
    found = {}
    for entry in path.iterdir():
        match = re.fullmatch(r"L(\d+)\.ls", entry.name)
        if match:
            found[int(match.group(1))] = entry
    if not found:
        raise FormatError(f"no L<i>.ls files in {path}")
    count = len(found)
    if sorted(found) != list(range(1, count + 1)):
        raise FormatError(f"square files must be numbered L1.ls..L{count}.ls, found {sorted(found)}")
    squares = tuple(from_ls_text(found[i].read_text()) for i in range(1, count + 1))
    return MplsSet(squares[0].order, squares)


def _cmd_gen_plane(cfg: CommandConfig) -> int:
    assert cfg.order is not None and cfg.output is not None
    bundle = build_pg2(cfg.order)
    cfg.output.write_text(to_inc_text(bundle.incidence))
    if cfg.json_out is not None:
        cfg.json_out.write_text(json.dumps(geometry_to_json(bundle.geometry), sort_keys=True, indent=2) + "\n")
    _note(cfg, f"built plane of order {cfg.order}")
    _emit({"b": bundle.geometry.b, "order": cfg.order, "out": str(cfg.output), "v": bundle.geometry.v})
    return 0


def _cmd_canon(cfg: CommandConfig) -> int:
    assert cfg.input is not None and cfg.output is not None and cfg.meta is not None
    form = canonicalize(_read_matrix(cfg.input))
    cfg.output.write_text(to_inc_text(form.matrix))
    meta = {
        "order": form.order,
        "row_perm": list(form.row_perm.images),
        "col_perm": list(form.col_perm.images),
    }
    cfg.meta.write_text(json.dumps(meta, sort_keys=True, indent=2) + "\n")
    _emit({"inc": str(cfg.output), "meta": str(cfg.meta), "order": form.order})
    return 0


def _cmd_extract(cfg: CommandConfig) -> int:
    assert cfg.input is not None and cfg.out_dir is not None
    form = canonicalize(_read_matrix(cfg.input))
    squares = extract_mpls(form)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for idx, square in enumerate(squares.squares, start=1):
        (cfg.out_dir / f"L{idx}.ls").write_text(to_ls_text(square))
    _emit({"count": len(squares.squares), "order": squares.order, "out_dir": str(cfg.out_dir)})
    return 0


def _cmd_reconstruct(cfg: CommandConfig) -> int:
    assert cfg.in_dir is not None and cfg.output is not None
    matrix = reconstruct(_load_mpls_dir(cfg.in_dir))
    cfg.output.write_text(to_inc_text(matrix))
    _emit({"out": str(cfg.output), "size": matrix.rows})
    return 0


def _cmd_verify_plane(cfg: CommandConfig) -> int:
    assert cfg.input is not None
    matrix = _read_matrix(cfg.input)
    try:
        geometry = geometry_from_incidence(matrix)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    verdict = plane_check(geometry)
    _emit(
        {
            "b": geometry.b,
            "first_def": verdict.first_def,
            "order": verdict.order,
            "second_def": verdict.second_def,
            "v": geometry.v,
        }
    )
    return 0 if verdict.first_def and verdict.second_def else 1


def _cmd_verify_mpls(cfg: CommandConfig) -> int:
    assert cfg.in_dir is not None
    squares = _load_mpls_dir(cfg.in_dir)
    report = verify_mpls(squares)
    _emit(
        {
            "count": len(squares.squares),
            "is_complete": report.is_complete,
            "is_mpls": report.is_mpls,
            "order": squares.order,
            "violations": list(report.violations),
        }
    )
    return 0 if report.is_mpls else 1


def _cmd_decompose(cfg: CommandConfig) -> int:
    assert cfg.input is not None and cfg.out_dir is not None
    matrix = _read_matrix(cfg.input)
    degree = sum(matrix.row(0))
    parts = decompose_regular(matrix, degree)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for idx, part in enumerate(parts, start=1):
        (cfg.out_dir / f"P{idx}.inc").write_text(to_inc_text(part))
    _emit({"count": len(parts), "out_dir": str(cfg.out_dir)})
    return 0


def _cmd_matching(cfg: CommandConfig) -> int:
    assert cfg.input is not None
    report = duality_report(_read_matrix(cfg.input))
    w_witness = None
    if report.w_witness is not None:
        w_witness = {"cols": list(report.w_witness.cols), "rows": list(report.w_witness.rows)}
    _emit(
        {
            "cols": report.cols,
            "rows": report.rows,
            "v": report.v,
            "v_witness": [list(pair) for pair in report.v_witness.pairs],
            "w": report.w,
            "w_witness": w_witness,
        }
    )
    return 0


def _cmd_classify(cfg: CommandConfig) -> int:
    assert cfg.input is not None
    payload = json.loads(cfg.input.read_text())
    geometry = geometry_from_json(payload)
    shape = classify_v_eq_b(geometry)
    if isinstance(shape, PencilWithTransversal):
        _emit({"kind": "pencil_with_transversal", "top": shape.top, "transversal": list(shape.transversal)})
    else:
        _emit({"kind": "projective_plane", "order": shape.order})
    return 0


def _cmd_resolve(cfg: CommandConfig) -> int:
    assert cfg.in_dir is not None and cfg.target is not None
    squares = _load_mpls_dir(cfg.in_dir)
    if not 1 <= cfg.target <= len(squares.squares):
        print(f"error: --target must sit in 1..{len(squares.squares)}", file=sys.stderr)
        return 2
    report = resolvability_report(squares, cfg.target - 1)
    _emit(
        {
            "resolutions": len(report.resolutions),
            "target": cfg.target,
            "transversals_per_resolution": squares.order,
            "verified": report.verified,
        }
    )
    return 0 if report.verified else 1


_HANDLERS = {
    "gen-plane": _cmd_gen_plane,
    "canon": _cmd_canon,
    "extract": _cmd_extract,
    "reconstruct": _cmd_reconstruct,
    "verify-plane": _cmd_verify_plane,
    "verify-mpls": _cmd_verify_mpls,
    "decompose": _cmd_decompose,
    "matching": _cmd_matching,
    "classify": _cmd_classify,
    "resolve": _cmd_resolve,
}


def run(cfg: CommandConfig) -> int:
    return _HANDLERS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        return run(cfg)
    except (FormatError, json.JSONDecodeError) as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
