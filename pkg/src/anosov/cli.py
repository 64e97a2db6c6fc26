"""Command line front end.

Exit codes: 0 success (or anosov), 1 semantic failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, io
from .doubling import DoublingError
from .hyperbolicity import AnosovCertificate, certify
from .pipeline import catalog_batch, double_and_certify, format_validation, validation_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _positive_a(text: str) -> int:
    try:
        a = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--a must be an integer, got {text!r}") from None
    if a < 2:
        raise argparse.ArgumentTypeError("--a must be >= 2")
    return a


def _load_algebra(path: str):
    return io.algebra_from_dict(io.load_json(path), str(path))


def _cert_summary(cert: AnosovCertificate) -> str:
    status = "ANOSOV" if cert.anosov else "NOT ANOSOV"
    flags = ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in (
        ("automorphism", cert.automorphism), ("integral", cert.integral),
        ("unimodular", cert.unimodular), ("hyperbolic", cert.hyperbolic)))
    line = f"{cert.algebra.name or 'algebra'} (dim {cert.algebra.dim}): {status} [{flags}]"
    if cert.expanding_dim is not None:
        line += f"; E+ {cert.expanding_dim}, E- {cert.contracting_dim} ({cert.classification_mode})"
    for w in cert.failure_witnesses:
        line += "\n  " + json.dumps(w, sort_keys=True)
    return line


def cmd_validate(args) -> int:
    alg = _load_algebra(args.path)
    rep = validation_report(alg)
    print(io.dumps(rep) if args.json else format_validation(rep), end="" if args.json else "\n")
    return EXIT_OK if rep["pass"] else EXIT_FAIL


def cmd_double(args) -> int:
    alg = _load_algebra(args.path)
    try:
        doubled, cert = double_and_certify(alg, args.a, args.scale)
    except DoublingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    cert_text = io.dumps(io.certificate_to_dict(cert))
    if args.out:
        stem = Path(args.path).stem
        out = Path(args.out)
        io.write_atomic(out / f"{stem}_double_a{args.a}.json", io.dumps(io.algebra_to_dict(doubled)))
        io.write_atomic(out / f"{stem}_double_a{args.a}.cert.json", cert_text)
        print(_cert_summary(cert))
    elif args.json:
        print(cert_text, end="")
    else:
        print(_cert_summary(cert))
    return EXIT_OK if cert.anosov else EXIT_FAIL


def cmd_certify(args) -> int:
    alg = _load_algebra(args.algebra)
    M = io.matrix_from_data(io.load_json(args.matrix), str(args.matrix))
    if len(M) != alg.dim:
        raise io.FormatError(str(args.matrix), f"matrix is {len(M)}x{len(M)} but the algebra has dimension {alg.dim}")
    cert = certify(alg, M, {"a": None, "construction": "user", "catalog_name": alg.name})
    text = io.dumps(io.certificate_to_dict(cert))
    if args.out:
        io.write_atomic(args.out, text)
        print(_cert_summary(cert))
    elif args.json:
        print(text, end="")
    else:
        print(_cert_summary(cert))
    return EXIT_OK if cert.anosov else EXIT_FAIL


def cmd_example(args) -> int:
    if args.list:
        for name, info in catalog.CATALOG.items():
            params = ", ".join(f"--{p} ({rng})" for p, rng in info["params"].items()) or "no parameters"
            extra = "; emits a matrix" if info["provides_matrix"] else ""
            print(f"{name}: {params}{extra}\n  {info['provenance']}")
        return EXIT_OK
    if not args.name:
        raise InputError("example needs a catalog name (or --list)")
    try:
        alg, M = catalog.build(args.name, k=args.k, r=args.r, a=args.a)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0] if exc.args else exc)) from None
    alg_text = io.dumps(io.algebra_to_dict(alg))
    if args.out:
        out = Path(args.out)
        io.write_atomic(out / f"{alg.name}.json", alg_text)
        written = [str(out / f"{alg.name}.json")]
        if M is not None:
            io.write_atomic(out / f"{alg.name}.matrix.json", io.dumps(io.matrix_to_dict(M)))
            written.append(str(out / f"{alg.name}.matrix.json"))
        print("\n".join(written))
    else:
        payload = io.algebra_to_dict(alg) if M is None else {
            "algebra": io.algebra_to_dict(alg), "matrix": io.matrix_to_rows(M)}
        print(io.dumps(payload), end="")
    return EXIT_OK


def cmd_recheck(args) -> int:
    data = io.load_json(args.path)
    ok, diffs, fresh = io.recheck_certificate(data)
    if args.json:
        print(io.dumps({"consistent": ok, "differences": diffs, "anosov": fresh["flags"]["anosov"]}), end="")
    else:
        verdict = "consistent" if ok else "INCONSISTENT"
        print(f"{args.path}: {verdict}; anosov = {str(fresh['flags']['anosov']).lower()}")
        for d in diffs:
            print(f"  {d}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args) -> int:
    rows = []
    all_ok = True
    entries = catalog_batch(args.a)
    for ident, alg, cert in entries:
        all_ok &= cert.anosov
        rows.append({"id": ident, "dim": alg.dim, "anosov": cert.anosov,
                     "expanding_dim": cert.expanding_dim, "contracting_dim": cert.contracting_dim,
                     "classification_mode": cert.classification_mode})
        if args.out:
            out = Path(args.out)
            io.write_atomic(out / "algebras" / f"{ident}.json", io.dumps(io.algebra_to_dict(alg)))
            io.write_atomic(out / "certificates" / f"{ident}.cert.json",
                            io.dumps(io.certificate_to_dict(cert)))
    summary = {"a": args.a, "entries": rows, "all_anosov": all_ok}
    if args.out:
        io.write_atomic(Path(args.out) / "summary.json", io.dumps(summary))
    if args.json:
        print(io.dumps(summary), end="")
    else:
        width = max(len(r["id"]) for r in rows)
        for r in rows:
            split = f"{r['expanding_dim']}/{r['contracting_dim']} {r['classification_mode']}" \
                if r["expanding_dim"] is not None else "-"
            print(f"{r['id']:<{width}}  dim {r['dim']:>2}  {'ANOSOV' if r['anosov'] else 'FAIL  '}  {split}")
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="anosov", description=(
        "Build and certify Anosov automorphisms of doubled graded nilpotent Lie algebras. "
        "Basis indices in all files are 1-based."))
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check Jacobi, grading, nilpotency and abelian factors")
    v.add_argument("path")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("double", help="build n+n with its integer automorphism and certify it")
    d.add_argument("path")
    d.add_argument("--a", type=_positive_a, default=2, help="integer >= 2 (default 2)")
    d.add_argument("--scale", action="store_true", help="rescale to integer structure constants first")
    d.add_argument("--out", help="directory for the doubled algebra and certificate")
    d.add_argument("--json", action="store_true", help="print the certificate JSON")
    d.set_defaults(func=cmd_double)

    c = sub.add_parser("certify", help="certify a user-supplied automorphism matrix")
    c.add_argument("algebra")
    c.add_argument("matrix")
    c.add_argument("--out", help="certificate file to write")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("example", help="emit a catalog algebra (and matrix when one is known)")
    e.add_argument("name", nargs="?")
    e.add_argument("--k", type=int)
    e.add_argument("--r", type=int)
    e.add_argument("--a", type=int)
    e.add_argument("--out", help="output directory")
    e.add_argument("--list", action="store_true", help="list catalog entries")
    e.set_defaults(func=cmd_example)

    r = sub.add_parser("recheck", help="re-run every exact check recorded in a certificate")
    r.add_argument("path")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_recheck)

    rp = sub.add_parser("report", help="certify the whole catalog")
    rp.add_argument("--a", type=_positive_a, default=2)
    rp.add_argument("--out", help="directory for algebras, certificates and summary.json")
    rp.add_argument("--json", action="store_true")
    rp.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (io.FormatError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
