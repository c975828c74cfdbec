"""qhopf command line: catalog, verify, dualize."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog as cat
from . import hopf, mhc
from .errors import BadShape, NoIdentity, NotLatinSquare, ParseError, QHopfError
from .hopf import FinDimHopfQuasigroup
from .mhc import FinDimMHC
from .quasigroup import load_table

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_LATIN = 3
EXIT_IDENTITY = 4
EXIT_OTHER = 5


def _load(path: str, kind: str):
    """A Cayley table, or a structure-tensor JSON file for --kind hq|mhc."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from None
        if isinstance(data, dict) and "mult" in data:
            if kind == "loop":
                raise ParseError("structure tensors given but --kind loop expects a Cayley table", 1)
            try:
                cls = FinDimMHC if kind == "mhc" else FinDimHopfQuasigroup
                s = cls.from_dict(data)
            except (KeyError, ValueError, TypeError, IndexError) as exc:
                raise ParseError(f"bad structure file: {exc}", 1) from None
            s.name = s.name or p.stem
            return s
    return load_table(p)


def _emit(reports, args) -> int:
    if args.json:
        data = [r.to_dict() for r in reports]
        out = data if args.command == "catalog" else data[0]
        print(json.dumps(out, indent=2, sort_keys=False))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else EXIT_FAIL


def cmd_catalog(args) -> list[cat.RunReport]:
    loops = cat.catalog()
    if args.only:
        if args.only not in loops:
            raise QHopfError(f"unknown instance {args.only!r}; choose from {', '.join(loops)}")
        loops = {args.only: loops[args.only]}
    return [cat.full_suite(q) for q in loops.values()]


def _sample_for(keys, args):
    if args.exhaustive:
        return None
    n = args.sample
    if n is None and len(keys) > cat.EXHAUSTIVE_LIMIT:
        n = cat.EXHAUSTIVE_LIMIT
    return cat.choose_sample(keys, n, args.seed)


def cmd_verify(args) -> cat.RunReport:
    obj = _load(args.path, args.kind)
    name = obj.name
    report = cat.RunReport(name)
    if isinstance(obj, FinDimMHC):
        sample = _sample_for(obj.basis(), args)
        cat.mhc_suite(obj, report, sample)
    elif isinstance(obj, FinDimHopfQuasigroup):
        sample = _sample_for(obj.basis(), args)
        cat.hq_suite(obj, report, sample)
    else:
        q = obj
        sample = _sample_for(q.elements(), args)
        cat.loop_suite(q, report, sample)
        if args.kind == "hq":
            cat.hq_suite(hopf.group_algebra(q), report, sample)
        elif args.kind == "mhc":
            ip = [c for c in report.checks if c.id.startswith("loop.") and c.status == "fail"]
            if ip:
                report.skip("mhc", "loop fails the inverse property")
            else:
                cat.mhc_suite(mhc.DiscreteMHC(q), report, sample)
    if sample is not None:
        report.stats["sample"] = {"n": len(sample), "seed": args.seed}
    return report


def cmd_dualize(args) -> cat.RunReport:
    q = _load(args.path, "loop")
    if not hasattr(q, "elements"):
        raise ParseError("dualize expects a Cayley table", 1)
    report = cat.RunReport(q.name)
    cat.loop_suite(q, report)
    A = mhc.function_algebra(q)
    H = cat.duality_suite(A, report)
    cat.biduality_suite(A, None, report)
    phi = mhc.integrals(A)[0]
    report.stats["integral_dim"] = len(hopf.integral_space(A.to_findim(), "left"))
    md = mhc.modular_data(A, phi)
    report.stats["tau"] = md.tau
    report.stats["delta_is_unit"] = md.delta.equals(A.unit_multiplier, [A.e(k) for k in A.basis()])
    if args.emit_dual:
        Path(args.emit_dual).write_text(H.to_json() + "\n")
    return report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhopf", description="Exact verification of Hopf quasigroups, "
                                "multiplier Hopf coquasigroups and their integral duals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable report")

    c = sub.add_parser("catalog", help="run the full suite on the built-in instances")
    common(c)
    c.add_argument("--only", metavar="NAME", help="a single instance, e.g. M_S3_2")

    v = sub.add_parser("verify", help="verify a Cayley table or structure file")
    common(v)
    v.add_argument("path")
    v.add_argument("--kind", choices=("loop", "hq", "mhc"), default="loop")
    v.add_argument("--exhaustive", action="store_true", help=f"check every tuple (default for n <= {cat.EXHAUSTIVE_LIMIT})")
    v.add_argument("--sample", type=int, metavar="N", help="check N sampled basis elements")
    v.add_argument("--seed", type=int, default=0, metavar="S")

    d = sub.add_parser("dualize", help="build and verify the integral dual of k(G)")
    common(d)
    d.add_argument("path")
    d.add_argument("--emit-dual", metavar="PATH", help="write the dual structure tensors as JSON")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"catalog": cmd_catalog, "verify": cmd_verify, "dualize": cmd_dualize}
    try:
        out = handlers[args.command](args)
    except (ParseError, BadShape) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotLatinSquare as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LATIN
    except NoIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except QHopfError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_OTHER
    reports = out if isinstance(out, list) else [out]
    return _emit(reports, args)


if __name__ == "__main__":
    sys.exit(main())
