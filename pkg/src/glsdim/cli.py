"""Command line interface: ``glsdim {analyze,sdim,verify,batch,lemma2}``.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 invalid weight (not dominant, or m < n), 4 some batch lines failed.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import charformula as cf
from . import verify
from .diagram import build_diagram
from .errors import NotDominant, UnsupportedShape
from .superdim import SuperdimReport, superdimension
from .weights import SuperWeight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WEIGHT, EXIT_BATCH = 0, 1, 2, 3, 4

_WEIGHT_RE = re.compile(r"^\s*\(?\s*(-?\d+(\s*,\s*-?\d+)*)\s*\|\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\)?\s*$")


class WeightSyntaxError(ValueError):
    pass


def parse_weight(text: str) -> SuperWeight:
    """Parse ``"c1,...,cm|d1,...,dn"``; whitespace and surrounding parentheses are ignored."""
    match = _WEIGHT_RE.match(text)
    if not match:
        raise WeightSyntaxError(f"cannot parse weight {text!r}; expected e.g. '1,0,0|0,1'")
    left, right = match.group(1), match.group(3)
    eps = tuple(int(x) for x in left.split(","))
    delta = tuple(int(x) for x in right.split(",")) if right else ()
    return SuperWeight(eps, delta)


def format_weight(w: SuperWeight) -> str:
    return str(w)


def report_dict(rep: SuperdimReport) -> dict:
    return {
        "weight": format_weight(rep.weight),
        "rho_shifted": str(rep.shifted),
        "diagram": build_diagram(rep.shifted).render(),
        "gamma": [list(p) for p in rep.gamma.pairs],
        "atypicality": str(rep.atypicality),
        "maximal": rep.maximal,
        "s_lambda": str(rep.s_lambda),
        "m_lambda_positive": [str(a) for a in rep.m_plus],
        "glambda_dim": str(rep.glambda_dim),
        "sdim_abs": str(rep.sdim_abs),
    }


def render_text(rep: SuperdimReport) -> str:
    d = report_dict(rep)
    m_plus = ", ".join(d["m_lambda_positive"]) or "(none)"
    gamma = ", ".join(f"e{i}-d{j}" for i, j in rep.gamma.pairs) or "(none)"
    return "\n".join([
        f"weight        ({d['weight']})  gl({rep.weight.m}|{rep.weight.n})",
        f"Lambda+rho    ({d['rho_shifted']})",
        "diagram",
        *("  " + line for line in d["diagram"].splitlines()),
        f"Gamma         {gamma}",
        f"atypicality   {rep.atypicality} ({'maximal' if rep.maximal else 'not maximal'})",
        f"s_Lambda      {rep.s_lambda}",
        f"M_Lambda+     {m_plus}",
        f"dim g_Lambda  {rep.glambda_dim}",
        f"|sdim|        {rep.sdim_abs}",
    ])


def _analyze_weight(text: str) -> SuperdimReport:
    return superdimension(parse_weight(text))


def cmd_analyze(args) -> int:
    rep = _analyze_weight(args.weight)
    if args.format == "json":
        print(json.dumps(report_dict(rep), indent=2))
    else:
        print(render_text(rep))
    return EXIT_OK


def cmd_sdim(args) -> int:
    print(_analyze_weight(args.weight).sdim_abs)
    return EXIT_OK


def cmd_lemma2(args) -> int:
    value = cf.lemma2_sum(args.r)
    print(value)
    return EXIT_OK if value == 1 else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(
        max_m=args.max_m, max_n=args.max_n, entry_bound=args.entry_bound, cutoff=args.cutoff,
        margin=args.margin, max_r=args.max_r, max_cells=args.max_cells,
    )
    dump = None
    dump_file = None
    if args.dump:
        dump_file = open(args.dump, "w", encoding="utf-8")

        def dump(w, sch):
            record = {"weight": format_weight(w), "kind": "sch", "terms": json.loads(sch.to_json())}
            dump_file.write(json.dumps(record) + "\n")

    passed = failed = 0
    start = time.perf_counter()
    try:
        for res in verify.run(args.suite, cfg, dump):
            passed += res.passed
            failed += not res.passed
            if res.passed and args.quiet:
                continue
            print(f"{'PASS' if res.passed else 'FAIL'}  {res.suite:<8} {res.case:<40} {res.detail}")
    finally:
        if dump_file:
            dump_file.close()
    print(f"{passed} passed, {failed} failed in {time.perf_counter() - start:.1f}s")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_batch(args) -> int:
    try:
        handle = open(args.file, encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    errors = 0
    with handle:
        for lineno, line in enumerate(handle, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                rep = _analyze_weight(text)
            except (WeightSyntaxError, NotDominant, UnsupportedShape) as exc:
                errors += 1
                print(f"line {lineno}: {exc}", file=sys.stderr)
                continue
            if args.format == "json":
                d = report_dict(rep)
                print(json.dumps({k: d[k] for k in ("weight", "atypicality", "maximal", "s_lambda", "sdim_abs")}))
            else:
                print(f"{format_weight(rep.weight)}\t{rep.atypicality}\t{str(rep.maximal).lower()}"
                      f"\t{rep.s_lambda}\t{rep.sdim_abs}")
            sys.stdout.flush()
    return EXIT_OK if errors == 0 else EXIT_BATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glsdim", description="Superdimensions of simple gl(m|n)-modules.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one highest weight")
    a.add_argument("weight", help="highest weight 'c1,...,cm|d1,...,dn'")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sdim", help="print |sdim L(weight)|")
    s.add_argument("weight")
    s.set_defaults(func=cmd_sdim)

    v = sub.add_parser("verify", help="run the cross-check suites")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    v.add_argument("--max-m", type=int, default=3)
    v.add_argument("--max-n", type=int, default=2)
    v.add_argument("--entry-bound", type=int, default=2)
    v.add_argument("--cutoff", type=int, default=None, help="engine truncation depth (default: automatic)")
    v.add_argument("--margin", type=int, default=cf.DEFAULT_MARGIN)
    v.add_argument("--max-r", type=int, default=10)
    v.add_argument("--max-cells", type=int, default=8)
    v.add_argument("--dump", metavar="PATH", help="write engine supercharacters as JSON lines")
    v.add_argument("-q", "--quiet", action="store_true", help="only print failures and the summary")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("batch", help="analyze one weight per line of a file")
    b.add_argument("--file", required=True)
    b.add_argument("--format", choices=("json", "tsv"), default="json")
    b.set_defaults(func=cmd_batch)

    l2 = sub.add_parser("lemma2", help="alternating multinomial sum over block-cyclic permutations")
    l2.add_argument("--r", type=int, required=True)
    l2.set_defaults(func=cmd_lemma2)
    return p


def _protect_negative_weights(argv: list[str]) -> list[str]:
    # "-1,0|0" would otherwise be taken for an option: move such tokens behind "--"
    if "--" in argv:
        return argv
    weights = [tok for tok in argv if tok.startswith("-") and "|" in tok]
    if not weights:
        return argv
    return [tok for tok in argv if tok not in weights] + ["--"] + weights


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_weights(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except WeightSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDominant, UnsupportedShape) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WEIGHT


if __name__ == "__main__":
    sys.exit(main())
