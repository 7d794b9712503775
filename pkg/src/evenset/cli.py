"""Command-line front end: ``evenset <verb> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .classify import classify, classify_set, find_generator, is_prime, lemma_witness, type_iii_search
from .core import EnumerationTooLarge, EvensetError, PitchClassSet, canonical_class, check_modulus
from .maxeven import is_maximally_even, me_formula, me_oracle
from .properties import (
    angular_interval_sum,
    cardinality_variety,
    distance_sum_argmax,
    euclidean_chord_sum,
    second_order_me,
    step_pattern,
)
from .spectral import dft_subset, interval_content
from .svg import emit_svg_polygon

FORMATS = ("text", "json", "csv", "svg")


class UsageError(EvensetError):
    pass


def _lit(A: PitchClassSet) -> str:
    return str(A)


def _braces(A: PitchClassSet) -> str:
    return "{" + ",".join(map(str, A.members)) + "}"


def _num(x: float) -> str:
    return f"{abs(x) if abs(x) < 5e-7 else x:.6f}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(rows: list[tuple[str, str]]) -> str:
    return "".join(f"{k:<12}{v}\n" for k, v in rows)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join('--' + n for n in missing)}")


def _unsupported(fmt, verb):
    raise UsageError(f"format {fmt!r} is not available for {verb}")


def _parse_set(text: str) -> PitchClassSet:
    try:
        A = PitchClassSet.parse(text)
    except EvensetError as exc:
        raise UsageError(str(exc)) from None
    check_modulus(A.c)
    return A


def _me_summary(A: PitchClassSet) -> dict | None:
    if not 0 < len(A) < A.c or not is_maximally_even(A):
        return None
    return classify_set(A).to_json()


def cmd_analyze(args) -> str:
    A = _parse_set(args.set)
    spec = dft_subset(A)
    ic = interval_content(A)
    steps = step_pattern(A).steps if len(A) else ()
    info = _me_summary(A)
    cls = canonical_class(A, args.include_inversion)
    if args.format == "json":
        return _json({
            "set": list(A.members),
            "c": A.c,
            "d": len(A),
            "spectrum": spec.to_json(),
            "intervalVector": ic.to_json(),
            "steps": list(steps),
            "canonical": list(cls.canonical.members),
            "orbitSize": cls.orbit_size,
            "maximallyEven": info is not None,
            "classification": info,
            "generator": find_generator(A),
        })
    if args.format == "svg":
        return emit_svg_polygon(A)
    mags = spec.magnitudes()
    if args.format == "csv":
        rows = [("t", "re", "im", "abs", "ic")]
        rows += [(t, _num(v.real), _num(v.imag), _num(abs(v)), ic.counts[t]) for t, v in enumerate(spec.values)]
        return _csv(rows)
    if info is None:
        verdict = "not maximally even" if 0 < len(A) < A.c else "degenerate (empty or full)"
    elif info["type"] == "I":
        verdict = f"type I, generator {info['generator']}"
    else:
        verdict = f"type {info['type']}, m={info['m']}, c'={info['cPrime']}, d'={info['dPrime']}"
    width = 10
    return _table([
        ("set", _lit(A)),
        ("t", "".join(f"{t:>{width}}" for t in range(A.c))),
        ("|F(t)|", "".join(f"{_num(m):>{width}}" for m in mags)),
        ("IC", "".join(f"{n:>{width}}" for n in ic.counts)),
        ("steps", "(" + ",".join(map(str, steps)) + ")"),
        ("canonical", _lit(cls.canonical)),
        ("orbit", str(cls.orbit_size)),
        ("class", verdict),
    ])


def cmd_generate(args) -> str:
    _need(args, "c", "d")
    check_modulus(args.c)
    alpha = Fraction(args.alpha) if args.alpha is not None else Fraction(0)
    A = me_formula(args.c, args.d, alpha)
    cls = canonical_class(A, args.include_inversion)
    if args.format == "json":
        return _json({
            "c": args.c, "d": args.d, "alpha": str(alpha),
            "formula": list(A.members),
            "canonical": list(cls.canonical.members),
            "orbitSize": cls.orbit_size,
        })
    if args.format == "svg":
        return emit_svg_polygon(cls.canonical)
    if args.format == "csv":
        return _csv([("c", "d", "alpha", "formula", "canonical"),
                     (args.c, args.d, str(alpha), _braces(A), _braces(cls.canonical))])
    return _lit(cls.canonical) + "\n"


def cmd_oracle(args) -> str:
    _need(args, "c", "d")
    check_modulus(args.c)
    result = me_oracle(args.c, args.d, budget=args.budget)
    if args.format == "json":
        return _json(result.to_json())
    if args.format == "csv":
        return _csv([("set", "magnitude")] + [(_braces(A), _num(result.max_magnitude)) for A in result.maximizers])
    if args.format == "svg":
        return emit_svg_polygon(result.class_representatives[0])
    return _table([
        ("c, d", f"{args.c}, {args.d}"),
        ("max |F(d)|", _num(result.max_magnitude)),
        ("maximizers", str(len(result.maximizers))),
        ("classes", " ".join(_braces(A) for A in result.class_representatives)),
    ])


def cmd_classify(args) -> str:
    _need(args, "c", "d")
    info = classify(args.c, args.d)
    if args.format == "json":
        return _json(info.to_json())
    if args.format == "svg":
        return emit_svg_polygon(info.representative, title=f"ME({args.c},{args.d}) type {info.type}")
    if args.format == "csv":
        j = info.to_json()
        reduced = "" if info.reduced is None else _braces(info.reduced)
        return _csv([list(j), [("" if v is None else v) if k != "reduced" else reduced for k, v in j.items()]])
    return _table([
        ("set", _lit(info.representative)),
        ("type", info.type),
        ("m", str(info.m)),
        ("c', d'", f"{info.c_prime}, {info.d_prime}"),
        ("generator", "-" if info.generator is None else str(info.generator)),
        ("period", str(info.period)),
        ("reduced", "-" if info.reduced is None else _lit(info.reduced)),
    ])


def cmd_variety(args) -> str:
    _need(args, "c", "d")
    spans = [args.span] if args.span is not None else list(range(1, args.d + 1))
    reports = [cardinality_variety(args.c, args.d, k) for k in spans]
    if args.format == "json":
        return _json([
            {"spanK": r.span, "orbitCount": r.orbit_count,
             "representatives": [list(A.members) for A in r.representatives],
             "shapes": [list(s) for s in r.shapes]}
            for r in reports
        ])
    if args.format == "svg":
        _unsupported(args.format, "variety")
    rows = [(r.span, r.orbit_count, " ".join(_braces(A) for A in r.representatives)) for r in reports]
    if args.format == "csv":
        return _csv([("spanK", "orbitCount", "representatives")] + rows)
    return "".join(f"{k:>6}{n:>6}  {reps}\n" for k, n, reps in rows)


def scan_rows(lo: int, hi: int) -> list[tuple]:
    rows = []
    for c in range(lo, hi + 1):
        d = type_iii_search(c)
        if c > 12 and not is_prime(c):
            w = lemma_witness(c)
            k, p = w.k, w.p
        else:
            k = p = ""
        rows.append((c, "" if d is None else d, k, p))
    return rows


def cmd_scan_type3(args) -> str:
    _need(args, "max")
    rows = scan_rows(max(2, args.min), args.max)
    if args.format == "json":
        return _json([{"c": c, "d": d or None, "lemmaK": k or None, "lemmaP": p or None} for c, d, k, p in rows])
    if args.format == "svg":
        _unsupported(args.format, "scan-type3")
    if args.format == "csv":
        return _csv(rows)
    return "".join(f"{c:>5}{str(d):>6}{str(k):>6}{str(p):>4}\n" for c, d, k, p in rows)


def cmd_distsum(args) -> str:
    _need(args, "c", "d")
    check_modulus(args.c)
    res = distance_sum_argmax(args.c, args.d, args.metric, budget=args.budget)
    if args.format == "csv":
        rows = [("set", "angularSum", "euclideanSum")]
        rows += [(_braces(A), angular_interval_sum(A), f"{euclidean_chord_sum(A):.6f}") for A in res.maximizers]
        return _csv(rows)
    if args.format == "json":
        return _json({
            "c": res.c, "d": res.d, "metric": res.metric,
            "maxValue": res.max_value,
            "setCount": len(res.maximizers),
            "classCount": res.class_count,
            "classRepresentatives": [list(A.members) for A in res.class_representatives],
            "valueCounts": {str(k): v for k, v in res.value_counts.items()},
        })
    if args.format == "svg":
        _unsupported(args.format, "distsum")
    best = str(res.max_value) if args.metric == "angular" else _num(res.max_value)
    rows = [
        ("metric", res.metric),
        ("max", best),
        ("sets", str(len(res.maximizers))),
        ("classes", str(res.class_count)),
    ]
    if res.value_counts:
        rows.append(("values", " ".join(map(str, res.value_counts))))
    rows.append(("reps", " ".join(_braces(A) for A in res.class_representatives)))
    return _table(rows)


def cmd_verify(args) -> str:
    from .verify import SUITES, run_all

    if args.suite:
        checks = list(SUITES[args.suite]())
    else:
        checks = list(run_all(args.scale))
    args.failed = sum(not ch.ok for ch in checks)
    if args.format == "json":
        return _json([{"name": ch.name, "ok": ch.ok, "detail": ch.detail} for ch in checks])
    if args.format == "csv":
        return _csv([("name", "ok", "detail")] + [(ch.name, int(ch.ok), ch.detail) for ch in checks])
    if args.format == "svg":
        _unsupported(args.format, "verify")
    return "".join(f"{'PASS' if ch.ok else 'FAIL'}  {ch.name}  [{ch.detail}]\n" for ch in checks)


def cmd_second_order(args) -> str:
    _need(args, "c", "d", "e")
    offsets = [args.offset] if args.offset is not None else list(range(args.d))
    results = [(o, second_order_me(args.c, args.d, args.e, o)) for o in offsets]
    if args.format == "svg":
        if len(results) != 1:
            raise UsageError("svg output needs a single --offset")
        return emit_svg_polygon(results[0][1])
    if args.format == "json":
        return _json([
            {"offset": o, "set": list(A.members), "canonical": list(canonical_class(A).canonical.members)}
            for o, A in results
        ])
    rows = [(o, _braces(A), _braces(canonical_class(A).canonical)) for o, A in results]
    if args.format == "csv":
        return _csv([("offset", "set", "canonical")] + rows)
    return "".join(f"{o:>4}  {s:<24}{cn}\n" for o, s, cn in rows)


COMMANDS = {
    "analyze": cmd_analyze,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
    "classify": cmd_classify,
    "variety": cmd_variety,
    "scan-type3": cmd_scan_type3,
    "distsum": cmd_distsum,
    "verify": cmd_verify,
    "second-order": cmd_second_order,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--c", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--budget", type=int, default=None, help="enumeration cap on C(c, d)")
    common.add_argument("--include-inversion", action="store_true")

    parser = argparse.ArgumentParser(prog="evenset", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("analyze", parents=[common], help="spectrum, interval content and type of one set")
    p.add_argument("set", help='set literal such as "12:7:{0,2,4,5,7,9,11}"')
    p = sub.add_parser("generate", parents=[common], help="maximally even set from the floor formula")
    p.add_argument("--alpha", help='rational offset "p/q"')
    sub.add_parser("oracle", parents=[common], help="brute-force Fourier maximizers")
    sub.add_parser("classify", parents=[common], help="type I/IIa/IIb/III of ME(c, d)")
    p = sub.add_parser("variety", parents=[common], help="transposition types of consecutive windows")
    p.add_argument("--span", type=int)
    p = sub.add_parser("scan-type3", parents=[common], help="smallest type III cardinality per modulus")
    p.add_argument("--max", type=int)
    p.add_argument("--min", type=int, default=2)
    p = sub.add_parser("distsum", parents=[common], help="exhaustive distance-sum maximizers")
    p.add_argument("--metric", choices=("angular", "euclidean"), default="angular")
    p = sub.add_parser("verify", parents=[common], help="run the exhaustive property sweeps")
    p.add_argument("--suite", choices=("core", "spectral", "maxeven", "classify", "properties"))
    p.add_argument("--scale", type=float, default=1.0, help="shrink (<1) or grow the c-ranges")
    p = sub.add_parser("second-order", parents=[common], help="ME(d, e) indices into ME(c, d)")
    p.add_argument("--e", type=int)
    p.add_argument("--offset", type=int)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = COMMANDS[args.verb](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"evenset: error: {exc}", file=sys.stderr)
        return 2
    except EnumerationTooLarge as exc:
        print(f"evenset: {exc}", file=sys.stderr)
        return 3
    except EvensetError as exc:
        print(f"evenset: {exc}", file=sys.stderr)
        return 1
    out.write(text)
    if getattr(args, "failed", 0):
        print(f"evenset: {args.failed} property check(s) failed", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
