"""Command-line front end.

Usage::

    catalan-tableaux catalan   --ops V:2,W:2 --n 5
    catalan-tableaux tableau   --ops V:2,W:2 --n 3
    catalan-tableaux exhibit   --ops V:2,W:2 --n 3
    catalan-tableaux verify    --ops V:2,W:2 --n 3 --format json

Exit status: 0 success, 1 invalid input, 2 resource cap exceeded,
3 theorem or language check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional

from . import counting, grammar, incidence, projection, tableau, terms

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _require_n(args, low: int) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < low:
        raise UsageError(f"--n must be >= {low} for '{args.command}'")
    return args.n


def cmd_catalan(sig, args) -> tuple[str, int]:
    values = counting.structure_catalan(sig, _require_n(args, 0))
    if args.format == "json":
        return _json({"ops": sig.spec_string(), "values": [str(v) for v in values]}), EXIT_OK
    if args.format == "csv":
        return _csv([("n", "S_n")] + list(enumerate(values))), EXIT_OK
    return " ".join(map(str, values)) + "\n", EXIT_OK


def cmd_residual(sig, args) -> tuple[str, int]:
    res = counting.functional_equation_residual(sig, _require_n(args, 0))
    status = EXIT_OK if not any(res) else EXIT_MISMATCH
    if args.format == "json":
        return _json({"ops": sig.spec_string(), "residual": [str(v) for v in res], "zero": not any(res)}), status
    if args.format == "csv":
        return _csv([("degree", "residual")] + list(enumerate(res))), status
    return " ".join(map(str, res)) + "\n", status


def cmd_enumerate(sig, args) -> tuple[str, int]:
    n = _require_n(args, 0)
    words = [terms.render_polish(t, sig) for t in terms.enumerate_iterates(sig, n, cap=args.cap)]
    if args.format == "json":
        return _json({"ops": sig.spec_string(), "n": n, "count": len(words), "words": words}), EXIT_OK
    if args.format == "csv":
        return _csv([("index", "word")] + list(enumerate(words, 1))), EXIT_OK
    return "".join(w + "\n" for w in words), EXIT_OK


def cmd_tableau(sig, args) -> tuple[str, int]:
    tab = tableau.build_tableau(sig, _require_n(args, 1), cap=args.cap)
    labels = tableau.canonical_labels(tab)
    if args.format == "json":
        return tableau.tableau_to_json(tab, labels) + "\n", EXIT_OK
    if args.format == "csv":
        header = ["place", "op"] + [terms.render_polish(t, sig) for t in tab.columns]
        rows = [[p, sig.ops[g].symbol] + ["" if v is None else v for v in row]
                for (p, g), row in zip(tab.lines, tableau.label_grid(tab, labels))]
        return _csv([header] + rows), EXIT_OK
    return tableau.render_tableau_text(tab, labels), EXIT_OK


def _analysis(sig, args):
    return incidence.analyse(sig, _require_n(args, 2), cell_cap=args.cap, matrix_cap=args.matrix_cap)


def cmd_incidence(sig, args) -> tuple[str, int]:
    an = _analysis(sig, args)
    mat = an.matrix
    if args.format == "json":
        return incidence.matrix_to_json(mat) + "\n", EXIT_OK
    if args.format == "csv":
        return incidence.matrix_to_csv(mat), EXIT_OK
    out = []
    for i in range(1, mat.size + 1):
        ones = " ".join(map(str, mat.ones(i)))
        out.append(f"{i}: sum={mat.row_sums[i - 1]} M={an.multiplicities.per_label[i]} ones=[{ones}]")
    freq = incidence.frequency(mat)
    out.append(f"I_n = {incidence.reducible_count(mat)}")
    out.append(f"frequency = {freq.numerator}/{freq.denominator} = {float(freq):.6g}")
    return "\n".join(out) + "\n", EXIT_OK


def cmd_exhibit(sig, args) -> tuple[str, int]:
    if args.format != "text":
        raise UsageError("'exhibit' renders text only; use 'incidence' for json/csv")
    an = _analysis(sig, args)
    return incidence.render_exhibit(an.matrix, an.multiplicities), EXIT_OK


def cmd_verify(sig, args) -> tuple[str, int]:
    n = _require_n(args, 2)
    report = incidence.verify_theorem(sig, n, cell_cap=args.cap, matrix_cap=args.matrix_cap)
    status = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return _json(report.to_dict()), status
    if args.format == "csv":
        rows = [("label", "M", "observed", "predicted", "match")]
        rows += [(r.label, r.multiplicity, r.observed, r.predicted, int(r.match)) for r in report.rows]
        return _csv(rows), status
    freq = report.frequency
    out = [
        f"signature {sig.spec_string()}, n = {n}",
        f"rows checked: {len(report.rows)}, mismatches: {len(report.mismatches())}",
        "histogram: " + " ".join(f"{k}:{v}" for k, v in report.histogram.items()),
        f"I_n (matrix) = {report.observed_I}",
        f"I_n (histogram formula) = {report.predicted_I}",
        f"frequency = {freq.numerator}/{freq.denominator} = {float(freq):.6g}",
    ]
    for r in report.mismatches():
        out.append(f"  mismatch label {r.label}: M={r.multiplicity} observed={r.observed} predicted={r.predicted}")
    out.append("OK" if report.ok else "MISMATCH")
    return "\n".join(out) + "\n", status


def cmd_project(sig, args) -> tuple[str, int]:
    binary, prov = projection.project_signature(sig)
    items = projection.provenance_to_list(prov, sig)
    if args.format == "json":
        return _json({"signature": binary.spec_string(), "provenance": items}), EXIT_OK
    if args.format == "csv":
        rows = [("derived", "source", "i", "j", "k", "definition")]
        rows += [(it["derived"], it["source"], *it["ijk"], it["definition"]) for it in items]
        return _csv(rows), EXIT_OK
    out = [f"{it['derived']}(x, x) = {it['definition']}" for it in items]
    out.append(f"projected signature: {binary.spec_string()}")
    return "\n".join(out) + "\n", EXIT_OK


def cmd_grammar(sig, args) -> tuple[str, int]:
    n = _require_n(args, 0)
    levels = grammar.generate_language(grammar.grammar_from_signature(sig), n, cap=args.cap)
    report = grammar.language_equals_enumeration(sig, n)
    status = EXIT_OK if report.equal else EXIT_MISMATCH
    if args.format == "json":
        obj = {"ops": sig.spec_string(), "levels": {str(m): sorted(ws) for m, ws in levels.items()},
               "report": report.to_dict()}
        return _json(obj), status
    if args.format == "csv":
        return _csv([("level", "word")] + [(m, w) for m, ws in levels.items() for w in sorted(ws)]), status
    out = []
    for m, ws in levels.items():
        out.append(f"# level {m} ({len(ws)} words)")
        out.extend(sorted(ws))
    out.append(f"# level {n} equals enumeration: {report.equal}")
    return "\n".join(out) + "\n", status


COMMANDS: dict[str, Callable] = {
    "catalan": cmd_catalan,
    "enumerate": cmd_enumerate,
    "tableau": cmd_tableau,
    "incidence": cmd_incidence,
    "exhibit": cmd_exhibit,
    "verify": cmd_verify,
    "project": cmd_project,
    "grammar": cmd_grammar,
    "residual": cmd_residual,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catalan-tableaux", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--ops", required=True, help="signature, e.g. V:2,W:2")
        p.add_argument("--n", type=int, help="order (or last index for sequences)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--cap", type=int, default=tableau.DEFAULT_CELL_CAP,
                       help="maximum number of terms or tableau cells")
        p.add_argument("--matrix-cap", type=int, default=incidence.DEFAULT_MATRIX_CAP,
                       help="maximum number of incidence matrix entries")
        p.add_argument("--output", "-o", help="write to this file instead of standard output")
    return parser


def run(argv: Optional[list[str]] = None) -> tuple[int, str, str]:
    """Execute a command; returns (exit status, stdout text, stderr text)."""
    args = build_parser().parse_args(argv)
    try:
        sig = terms.parse_signature(args.ops)
        text, status = COMMANDS[args.command](sig, args)
    except (UsageError, terms.SignatureError, tableau.TableauError) as exc:
        return EXIT_INVALID, "", f"error: {exc}\n"
    except terms.ResourceLimitExceeded as exc:
        return EXIT_CAP, "", f"error: {exc}; raise --cap/--matrix-cap to proceed\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        text = ""
    return status, text, ""


def main(argv: Optional[list[str]] = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
