"""Command-line front end: ``cxkit <subcommand> --system TYPE ...``.

Exit codes: 0 success, 1 a certificate failed verification, 2 malformed
input, 3 a size guard or search budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from functools import lru_cache
from importlib import resources
from typing import Callable, TextIO

from .coxeter import format_word, parse_word
from .errors import BudgetExceeded, CxkitError, GuardExceeded, ParseError
from .fconj import all_f_classes, f_conjugacy_class, reduce_to_min
from .invariants import (
    DLTuple,
    component_count,
    dl_dimension,
    f_support,
    has_full_f_support,
    is_coxeter_element,
    smoothness_certificate,
    strata_count,
)
from .reduction import ReductionResult, check_trace, reduce_word
from .twist import format_cycles, resolve_twist
from .words import greedy_normal_form

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


@lru_cache(maxsize=1)
def load_schema() -> dict:
    text = resources.files("cxkit").joinpath("schema/report-v1.json").read_text()
    return json.loads(text)


def validate_report(report: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``report`` violates the shipped schema."""
    import jsonschema

    jsonschema.validate(report, load_schema())


def parse_tuple(text: str) -> list[tuple[int, ...]]:
    """``"1 2 | 2 1"`` -> ``[(1, 2), (2, 1)]``; blank input is the empty tuple."""
    if not text.strip():
        return []
    return [parse_word(part) for part in text.split("|")]


def _words(xs) -> list[list[int]]:
    return [list(x.reduced_word) for x in xs]


def _sorted(xs):
    return sorted(xs, key=lambda x: (x.length, x.reduced_word))


def _orbits(orbs) -> list[list[int]]:
    return sorted(sorted(o) for o in orbs)


# --- subcommands: each returns (result payload, text lines) ------------------


def cmd_system(tw, args):
    sys_ = tw.system
    result = {
        "descriptor": sys_.descriptor,
        "rank": sys_.rank,
        "order": sys_.order,
        "generators": list(sys_.generators),
        "coxeter_matrix": [list(r) for r in sys_.coxeter_matrix],
        "cartan_matrix": [list(r) for r in sys_.cartan_matrix],
        "positive_roots": [list(r) for r in sys_.positive_roots],
        "twist": {
            "name": tw.name,
            "sigma": list(tw.sigma),
            "order": tw.order,
            "orbits": _orbits(tw.orbits()),
            "q_constraint": tw.q_constraint,
        },
    }
    lines = [
        f"system {tw.name}: rank {sys_.rank}, |W| = {sys_.order}, "
        f"{len(sys_.positive_roots)} positive roots",
        "coxeter matrix:",
        *("  " + " ".join(map(str, r)) for r in sys_.coxeter_matrix),
        "cartan matrix:",
        *("  " + " ".join(f"{a:2d}" for a in r) for r in sys_.cartan_matrix),
        "positive roots:",
        *("  " + " ".join(map(str, r)) for r in sys_.positive_roots),
        f"twist {format_cycles(tw.sigma)} of order {tw.order}; orbits "
        + " ".join("{" + ",".join(map(str, o)) + "}" for o in _orbits(tw.orbits())),
    ]
    if tw.q_constraint:
        lines.append(f"note: {tw.q_constraint}")
    return result, lines


def cmd_reduce(tw, args):
    word = tw.system.check_word(parse_word(args.word))
    res = reduce_word(tw, word)
    result = res.to_dict()
    lines = [
        f"input: {format_word(res.input_word) or '(empty)'}",
        f"final: {format_word(res.final_word) or '(empty)'}",
        f"class: min length {res.summary.min_length}, size {res.summary.size}, "
        f"elliptic {res.summary.elliptic}, contains input {res.summary.contains_input}",
        "trace:",
    ]
    for i, m in enumerate(res.trace, 1):
        payload = {k: v for k, v in m.payload().items() if k != "moves"}
        lines.append(f"  {i}. {m.kind} {json.dumps(payload)} [{m.paper_tag}]")
    return result, lines


def cmd_classes(tw, args):
    classes = all_f_classes(tw)
    rows = []
    lines = [f"{len(classes)} F-classes in {tw.name}"]
    for c in classes:
        rows.append({
            "representative": list(c.representative.reduced_word),
            "size": c.size,
            "min_length": c.min_length,
            "minimal_elements": _words(_sorted(c.minimal_elements)),
            "elliptic": c.elliptic,
        })
        lines.append(
            f"  [{format_word(c.representative.reduced_word) or 'e'}] size {c.size}, "
            f"min length {c.min_length}, {len(c.minimal_elements)} minimal"
            + (", elliptic" if c.elliptic else "")
        )
    return {"count": len(classes), "classes": rows}, lines


def cmd_minlen(tw, args):
    x = tw.system.element_from_word(parse_word(args.word))
    x0, path = reduce_to_min(tw, x)
    cls = f_conjugacy_class(tw, x)
    result = {
        "element": list(x.reduced_word),
        "length": x.length,
        "minimal_element": list(x0.reduced_word),
        "minimal_length": x0.length,
        "path": list(path.steps),
        "class_min_length": cls.min_length,
    }
    lines = [
        f"{format_word(x.reduced_word) or 'e'} (length {x.length}) -> "
        f"{format_word(x0.reduced_word) or 'e'} (length {x0.length})",
        f"shift path: {format_word(path.steps) or '(empty)'}",
    ]
    return result, lines


def _word_or_tuple(tw, args):
    if args.tuple is not None:
        return DLTuple.from_words(tw.system, parse_tuple(args.tuple))
    return tw.system.check_word(parse_word(args.word or ""))


def cmd_components(tw, args):
    t = _word_or_tuple(tw, args)
    poly = component_count(tw, t)
    result = {"polynomial": str(poly), "coefficients": poly.to_dict()}
    lines = [str(poly)]
    if args.q is not None:
        result["value"] = poly(args.q)
        lines.append(f"at q={args.q}: {result['value']}")
    if args.q_root is not None:
        p, e = args.q_root
        v = poly.evaluate_root_power(p, e)
        result["root_value"] = {"p": p, "doubled_exponent": e, "rational": v.rational,
                                "sqrt_coeff": v.sqrt_coeff, "irrational": not v.is_rational}
        lines.append(f"at q=sqrt({p})^{e}: {v}")
    return result, lines


def cmd_support(tw, args):
    t = _word_or_tuple(tw, args)
    supp = f_support(tw, t)
    full = has_full_f_support(tw, t)
    result = {"f_support": _orbits(supp), "orbits": _orbits(tw.orbits()),
              "full": full, "irreducible": full}
    lines = [
        "F-support: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in _orbits(supp)),
        f"irreducible: {full}",
    ]
    if not isinstance(t, DLTuple):
        x = tw.system.element_from_word(t)
        result["coxeter_element"] = is_coxeter_element(tw, x)
        lines.append(f"element is a Coxeter element: {result['coxeter_element']}")
    return result, lines


def cmd_smooth(tw, args):
    if args.tuple is None and args.word is not None:
        t = DLTuple.from_words(tw.system, [parse_word(args.word)])
    else:
        t = DLTuple.from_words(tw.system, parse_tuple(args.tuple or ""))
    cert = smoothness_certificate(t)
    result = {**cert.to_dict(), "dimension": dl_dimension(t), "strata": strata_count(t)}
    lines = [cert.verdict.value, f"dimension {result['dimension']}, {result['strata']} strata"]
    if cert.caveat:
        lines.append(f"caveat: {cert.caveat}")
    if cert.failing:
        lines.append("failing factors: " + " ".join(map(str, cert.failing)))
    return result, lines


def cmd_braid_nf(tw, args):
    nf = greedy_normal_form(tw.system, parse_word(args.word))
    factors = nf.words()
    result = {"factors": [list(f) for f in factors], "letter_count": nf.letter_count}
    lines = [" | ".join(format_word(f) for f in factors) or "(empty)"]
    return result, lines


_COMMANDS: dict[str, Callable] = {
    "system": cmd_system,
    "reduce": cmd_reduce,
    "classes": cmd_classes,
    "minlen": cmd_minlen,
    "components": cmd_components,
    "support": cmd_support,
    "smooth": cmd_smooth,
    "braid-nf": cmd_braid_nf,
}


def _q_root(text: str) -> tuple[int, int]:
    try:
        p, e = text.split(":")
        return int(p), int(e)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P:E, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing")

    sysopt = _Parser(add_help=False)
    sysopt.add_argument("--system", required=True, help='type descriptor, e.g. "A3", "2A3", "3D4"')
    sysopt.add_argument("--cycles", help='explicit twist as cycles, e.g. "(1 2)"')

    parser = _Parser(prog="cxkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("system", parents=[common, sysopt], help="print matrices and roots")
    for name, help_ in [
        ("reduce", "reduce a word to a minimal-length element, with a trace"),
        ("minlen", "descend an element to minimal length by cyclic shifts"),
        ("braid-nf", "left-greedy normal form in the braid monoid"),
    ]:
        p = sub.add_parser(name, parents=[common, sysopt], help=help_)
        p.add_argument("--word", required=True)
    sub.add_parser("classes", parents=[common, sysopt], help="list all F-conjugacy classes")
    for name, help_ in [
        ("components", "point-count polynomial of the set of components"),
        ("support", "F-support and irreducibility"),
        ("smooth", "smoothness certificate for a tuple"),
    ]:
        p = sub.add_parser(name, parents=[common, sysopt], help=help_)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--word")
        g.add_argument("--tuple", help='elements separated by "|", e.g. "1 2 | 2"')
        if name == "components":
            p.add_argument("--q", type=int, help="evaluate at an integer q")
            p.add_argument("--q-root", type=_q_root, metavar="P:E",
                           help="evaluate exactly at q = sqrt(P)^E")

    p = sub.add_parser("verify", parents=[common], help="re-check a reduce report")
    p.add_argument("file", help='JSON report from "reduce --json", or "-" for stdin')
    p = sub.add_parser("batch", parents=[common], help="run one request per line")
    p.add_argument("file")
    return parser


def _request_echo(args) -> dict:
    req = {"system": args.system}
    if args.cycles:
        req["cycles"] = args.cycles
    for key in ("word", "tuple"):
        val = getattr(args, key, None)
        if val is not None:
            req[key] = val
    for key in ("q", "q_root"):
        val = getattr(args, key, None)
        if val is not None:
            req[key] = list(val) if isinstance(val, tuple) else val
    return req


def execute(args) -> tuple[dict, list[str], int]:
    """Run a parsed request; returns the JSON report, text lines and exit code."""
    started = time.perf_counter()
    if args.command == "verify":
        report, lines, code = _verify(args)
    else:
        tw = resolve_twist(args.system, args.cycles)
        result, lines = _COMMANDS[args.command](tw, args)
        report = {"schema_version": SCHEMA_VERSION, "command": args.command,
                  "request": _request_echo(args), "result": result}
        code = EXIT_OK
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
        lines.append(f"time: {report['timing']['seconds']:.6f}s")
    return report, lines, code


def _verify(args):
    import jsonschema

    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc.strerror}", args.file) from None
    try:
        doc = json.loads(text)
        validate_report(doc)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    except jsonschema.ValidationError as exc:
        raise ParseError(f"report violates schema: {exc.message}") from None
    if doc.get("command") != "reduce":
        raise ParseError(f"can only verify reduce reports, got {doc.get('command')!r}")
    req = doc["request"]
    tw = resolve_twist(req["system"], req.get("cycles"))
    res = ReductionResult.from_dict(tw, doc["result"])
    check = check_trace(tw, parse_word(req["word"]), res)
    result = {"ok": check.ok, "message": check.message}
    if check.move_index is not None:
        result["move_index"] = check.move_index
    report = {"schema_version": SCHEMA_VERSION, "command": "verify",
              "request": {"file": args.file}, "result": result}
    lines = ["OK: certificate verified" if check.ok else f"FAILED: {check.message}"]
    return report, lines, EXIT_OK if check.ok else EXIT_VERIFY_FAILED


def _error_code(exc: BaseException) -> int:
    if isinstance(exc, (GuardExceeded, BudgetExceeded)):
        return EXIT_GUARD
    return EXIT_INPUT


def _diagnostic(exc: BaseException) -> str:
    msg = str(exc)
    token = getattr(exc, "token", None)
    if token and token not in msg:
        msg += f" (at {token!r})"
    return msg


def batch(path: str, out: TextIO, timing: bool = False) -> int:
    """Process one request per line; reports are emitted in input order."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
    parser = build_parser()
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            args = parser.parse_args(shlex.split(stripped))
            if args.command == "batch":
                raise ParseError("nested batch is not allowed", "batch")
            args.timing = args.timing or timing
            report, _, _ = execute(args)
            record = {**report, "line": lineno}
        except SystemExit:
            record = {"schema_version": SCHEMA_VERSION, "line": lineno,
                      "error": "request exited early", "exit_code": EXIT_INPUT}
        except (CxkitError, ValueError) as exc:
            record = {"schema_version": SCHEMA_VERSION, "line": lineno,
                      "error": _diagnostic(exc), "exit_code": _error_code(exc)}
        out.write(json.dumps(record) + "\n")
    return EXIT_OK


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "batch":
            return batch(args.file, out, args.timing)
        report, lines, code = execute(args)
    except (CxkitError, ValueError) as exc:
        err.write(f"cxkit: error: {_diagnostic(exc)}\n")
        return _error_code(exc)
    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
