"""Subcommand CLI over the label toolkit.

Exit codes: 0 success; 1 the checked artifact failed (invalid label,
profile error, stale structure, no comparison match); 2 usage errors
(bad arguments, unknown ids, fewer than two labels, missing fingerprint);
3 I/O errors. Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import canonical
from .fingerprint import compute_fingerprint
from .model import Label, ParseError, parse_label, validate_label
from .profiler import ProfileError, StalenessError, check_staleness, csv_header, profile_csv
from .reporting import (
    ComparisonError,
    FewerThanTwoLabels,
    NoLabelMatches,
    compare_labels,
    render_comparison_html,
    render_label_html,
    write_document_set,
)
from .resolution import ResolveError, resolve, resolve_all
from .service import serve


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.write(b"\n")
    sys.stdout.buffer.flush()


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        raise _Fail(3, f"cannot read {path}: {exc}") from None


def _load_label(path: str) -> Label:
    """Parse and validate, failing with exit code 1 on an invalid document."""
    try:
        label = parse_label(_read_bytes(path))
    except ParseError as exc:
        raise _Fail(1, f"{path}: {exc.code}: {exc}") from None
    report = validate_label(label)
    if not report.passed:
        _emit(canonical.dumps(report.to_tree()))
        raise _Fail(1, f"{path}: label fails validation")
    for violation in report.violations:
        _diag(f"warning: {violation.code} {violation.path}: {violation.message}")
    return label


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        label = parse_label(_read_bytes(args.label))
    except ParseError as exc:
        report = {"verdict": "fail",
                  "violations": [{"code": exc.code, "path": exc.path,
                                  "message": str(exc), "level": "error"}]}
        _emit(canonical.dumps(report))
        return 1
    report = validate_label(label)
    if not report.passed:
        _emit(canonical.dumps(report.to_tree()))
        return 1
    for violation in report.violations:
        _diag(f"warning: {violation.code} {violation.path}: {violation.message}")
    print("OK")
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    try:
        profile = profile_csv(_read_bytes(args.csv))
    except ProfileError as exc:
        raise _Fail(1, f"{args.csv}: {exc}") from None
    data = profile.to_bytes()
    if args.out:
        try:
            with open(args.out, "wb") as handle:
                handle.write(data + b"\n")
        except OSError as exc:
            raise _Fail(3, f"cannot write {args.out}: {exc}") from None
    else:
        _emit(data)
    return 0


def _cmd_fingerprint(args: argparse.Namespace) -> int:
    try:
        header = csv_header(_read_bytes(args.csv))
    except ProfileError as exc:
        raise _Fail(1, f"{args.csv}: {exc}") from None
    _emit(canonical.dumps(compute_fingerprint(header).to_tree()))
    return 0


def _cmd_check_staleness(args: argparse.Namespace) -> int:
    label = _load_label(args.label)
    try:
        profile = profile_csv(_read_bytes(args.csv))
    except ProfileError as exc:
        raise _Fail(1, f"{args.csv}: {exc}") from None
    try:
        report = check_staleness(label, profile)
    except StalenessError as exc:
        raise _Fail(2, str(exc)) from None
    _emit(report.to_bytes())
    return 0 if report.verdict == "fresh" else 1


def _cmd_resolve(args: argparse.Namespace) -> int:
    label = _load_label(args.label)
    try:
        view = resolve(label, args.use_case, args.prediction)
    except ResolveError as exc:
        raise _Fail(2, str(exc)) from None
    if args.json:
        _emit(view.to_bytes())
        return 0
    for alert in view.alerts:
        mitigation = f" (mitigation: {alert.mitigation})" if alert.mitigation else ""
        print(f"{alert.severity.value:<7} {alert.id}: {alert.title}{mitigation}")
    for fyi in view.fyis:
        print(f"green   {fyi.id}: {fyi.title}")
    summary = view.severity_summary
    print(f"-- {summary['red']} red, {summary['orange']} orange, "
          f"{summary['yellow']} yellow, {len(view.fyis)} FYIs")
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    if len(args.labels) < 2:
        raise _Fail(2, "compare needs at least two label files")
    labels = [_load_label(path) for path in args.labels]
    try:
        report = compare_labels(labels, args.use_case)
    except FewerThanTwoLabels as exc:
        raise _Fail(2, str(exc)) from None
    except NoLabelMatches as exc:
        raise _Fail(1, str(exc)) from None
    except (ComparisonError, ValueError) as exc:
        raise _Fail(2, str(exc)) from None
    if args.html:
        try:
            with open(args.html, "wb") as handle:
                handle.write(render_comparison_html(report))
        except OSError as exc:
            raise _Fail(3, f"cannot write {args.html}: {exc}") from None
    _emit(report.to_bytes())
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    label = _load_label(args.label)
    documents = render_label_html(label, resolve_all(label))
    try:
        write_document_set(documents, args.out)
    except OSError as exc:
        raise _Fail(3, f"cannot write under {args.out}: {exc}") from None
    _diag(f"wrote {len(documents)} files to {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    store_dir = args.store or os.environ.get("DNL_STORE")
    if not store_dir:
        raise _Fail(2, "no store directory: pass --store or set DNL_STORE")
    if not os.path.isdir(store_dir):
        raise _Fail(3, f"store directory does not exist: {store_dir}")
    try:
        serve(store_dir, args.port, host=args.host)
    except OSError as exc:
        raise _Fail(3, f"cannot serve: {exc}") from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dnl", description="dataset nutrition label toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a label document")
    p.add_argument("label")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("profile", help="profile a CSV dataset")
    p.add_argument("csv")
    p.add_argument("--out", help="write the profile JSON here instead of stdout")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("fingerprint", help="structural fingerprint of a CSV header")
    p.add_argument("csv")
    p.set_defaults(func=_cmd_fingerprint)

    p = sub.add_parser("check-staleness", help="compare a label's fingerprint against a CSV")
    p.add_argument("label")
    p.add_argument("csv")
    p.set_defaults(func=_cmd_check_staleness)

    p = sub.add_parser("resolve", help="alerts and FYIs for a use case and prediction")
    p.add_argument("label")
    p.add_argument("--use-case", required=True, dest="use_case")
    p.add_argument("--prediction", required=True)
    p.add_argument("--json", action="store_true", help="canonical JSON instead of text")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("compare", help="compare labels for one use case title")
    p.add_argument("labels", nargs="+", metavar="label")
    p.add_argument("--use-case", required=True, dest="use_case")
    p.add_argument("--html", help="also write a comparison table to this HTML file")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("render", help="render the three-pane HTML document set")
    p.add_argument("label")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="serve the label store over HTTP")
    p.add_argument("--store", help="store directory (default: $DNL_STORE)")
    p.add_argument("--port", type=int, default=8347)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _Fail as fail:
        _diag(fail.message)
        return fail.code


if __name__ == "__main__":
    sys.exit(main())
