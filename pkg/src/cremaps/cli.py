"""Command-line front end.

Verbs: check, invert, compose, decompose, classify, verify, export-cone.
Maps are given inline in the monomial grammar (``x1^2, x1*x2, x2*x3``), as
JSON objects, or as ``@path`` references to UTF-8 files holding either
form.  Results go to stdout, errors to stderr with a nonzero exit status.
"""

import argparse
import json
import sys
from pathlib import Path

from .exactmat import IntMatrix, det_exact
from .inverse import InverseSolution, invert, verify_solution
from .monomap import (
    MapError,
    MonomialMap,
    compose,
    format_map,
    format_monomial,
    is_cremona,
    map_from_json,
    map_to_json,
    parse_map,
)
from .oracle import brute_force_solutions, cone_system
from .plane import classify, decompose, SupportPatternError


def export_cone(a: IntMatrix) -> str:
    """Render the homogeneous system A·beta_i = gamma + tau·e_i as the input
    text of the external Hilbert-basis tool.

    Line 1 is the equation count n^2, line 2 the unknown count n^2 + n + 1,
    then one row per equation with columns ordered (beta_1 | ... | beta_n |
    gamma | tau), then the computation mode line ``5``.  Single spaces,
    trailing newline.
    """
    if not a.is_square():
        raise ValueError("log-matrix must be square")
    n = a.rows
    if n < 2:
        raise ValueError("need n >= 2")
    system = cone_system(a)
    lines = [str(n * n), str(system.num_vars)]
    lines.extend(" ".join(str(x) for x in row) for row in system.rows)
    lines.append("5")
    return "\n".join(lines) + "\n"


def load_map(arg: str) -> MonomialMap:
    text = arg
    if arg.startswith("@"):
        text = Path(arg[1:]).read_text(encoding="utf-8")
    text = text.strip()
    if text.startswith("{"):
        return map_from_json(text)
    return parse_map(text)


def _emit(args, plain: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(plain)


def _matrix_lines(m: IntMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m.entries)


def _cmd_check(args) -> int:
    f = load_map(args.map)
    det = det_exact(f.log_matrix)
    verdict = is_cremona(f)
    word = "Cremona" if verdict else "not Cremona"
    _emit(
        args,
        f"{word} (d={f.degree}, det={det})",
        {"cremona": verdict, "degree": f.degree, "det": det},
    )
    return 0


def _cmd_invert(args) -> int:
    f = load_map(args.map)
    sol = invert(f)
    report = verify_solution(f, sol)
    inverse_map = sol.as_map()
    plain = "\n".join(
        [
            f"inverse: {format_map(inverse_map)}",
            "B:",
            _matrix_lines(sol.B),
            f"gamma: {format_monomial(sol.gamma)} = {tuple(sol.gamma)}",
            f"inverse degree: {sol.inverse_degree}",
            "verification:",
            report.render(),
        ]
    )
    _emit(
        args,
        plain,
        {
            "inverse": map_to_json(inverse_map),
            "solution": sol.to_json(),
            "verification": report.to_json(),
        },
    )
    return 0


def _cmd_compose(args) -> int:
    f = load_map(args.first)
    g = load_map(args.second)
    h = compose(f, g)
    _emit(args, format_map(h), map_to_json(h))
    return 0


def _cmd_decompose(args) -> int:
    f = load_map(args.map)
    word = decompose(f)
    _emit(args, word.text(), {"word": word.to_json(), "text": word.text()})
    return 0


def _cmd_classify(args) -> int:
    f = load_map(args.map)
    case = classify(f)
    _emit(
        args,
        f"case {case.tag} (d={case.degree}, source={case.source.one_line()}, "
        f"target={case.target.one_line()})",
        case.to_json(),
    )
    return 0


def _cmd_verify(args) -> int:
    f = load_map(args.map)
    g = load_map(args.inverse)
    if f.n != g.n:
        raise MapError("map and inverse have different dimensions")
    n = f.n
    prod = f.log_matrix.matmul(g.log_matrix)
    gamma = tuple(prod[r, 0] - (1 if r == 0 else 0) for r in range(n))
    structural = min(gamma) >= 0 and all(
        prod.column(i) == tuple(gamma[r] + (1 if r == i else 0) for r in range(n))
        for i in range(n)
    )
    if not structural:
        _emit(
            args,
            "not an inverse pair: A_F·A_G is not of the form Gamma + I",
            {"passed": False, "reason": "A_F·A_G is not of the form Gamma + I"},
        )
        return 1
    sol = InverseSolution(g.log_matrix, gamma)
    report = verify_solution(f, sol)
    payload = {"passed": report.passed, "verification": report.to_json()}
    plain = report.render()
    if args.oracle:
        result = brute_force_solutions(f.log_matrix)
        unique = len(result.solutions) == 1 and result.solutions[0] == sol
        payload["oracle"] = {
            "solutions": len(result.solutions),
            "matches": unique,
        }
        plain += f"\noracle: {'ok' if unique else 'FAIL'} ({len(result.solutions)} solution(s))"
        if not unique:
            _emit(args, plain, payload)
            return 1
    _emit(args, plain, payload)
    return 0 if report.passed else 1


def _cmd_export_cone(args) -> int:
    f = load_map(args.map)
    text = export_cone(f.log_matrix)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        if args.json:
            print(json.dumps({"written": args.output}))
    elif args.json:
        print(json.dumps({"cone_input": text}))
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremaps",
        description="Exact computations with monomial Cremona maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(handler=handler)
        return p

    p = add("check", _cmd_check, "decide whether a monomial map is Cremona")
    p.add_argument("map", help="monomial map (text, JSON, or @file)")

    p = add("invert", _cmd_invert, "compute the normalized monomial inverse")
    p.add_argument("map")

    p = add("compose", _cmd_compose, "compose two maps (second applied first)")
    p.add_argument("first")
    p.add_argument("second")

    p = add("decompose", _cmd_decompose, "write a plane map as a generator word")
    p.add_argument("map")

    p = add("classify", _cmd_classify, "match a plane map against the support cases")
    p.add_argument("map")

    p = add("verify", _cmd_verify, "check a (map, inverse) pair")
    p.add_argument("map")
    p.add_argument("inverse")
    p.add_argument("--oracle", action="store_true",
                   help="also confirm uniqueness by brute-force enumeration")

    p = add("export-cone", _cmd_export_cone, "emit the Hilbert-basis tool input")
    p.add_argument("map")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MapError, SupportPatternError, ValueError, RuntimeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
