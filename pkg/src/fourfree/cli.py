"""Command-line surface: analyze, embed, colour, verify, demo, search.

Every run echoes its full effective configuration into a JSON report, so
re-running with the same flags reproduces the report byte for byte apart
from the ``elapsed_s`` timing fields.

Exit codes:
    0  success / zero violations
    1  monochromatic violations found
    2  hypothesis violated (the input group has an element of order 4)
    3  cap or budget exceeded (search verdict "unknown")
    4  I/O or parse failure

Presentation file format (``analyze``, ``embed``, ``verify --input``)::

    # comments and blank lines are ignored
    generators: 3
    relations:
    2 0 0
    0 6 0

Ambient signature text (``verify --signature``, ``colour --signature``)::

    prufer=3,5;s=2;r=1

Elements are written in the canonical text form of the ambient module,
e.g. ``d:{0=1/9,1=2/5};t:10;q:(0,3/2)``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .ambient import (
    INTEGER,
    RATIONAL,
    AmbientElement,
    AmbientSignature,
    ElementParseError,
)
from .colouring import DROPPED_LAYER_COLOURINGS, colour, colour_encode
from .embedding import build_embedding
from .presentation import (
    Presentation,
    canonical_decomposition,
    has_order_four,
    smith_normal_form,
)
from .sumset import (
    DEFAULT_BUDGET,
    DEFAULT_GROUP_CAP,
    FiniteGroupSpec,
    all_colourings_forced,
    min_colours_avoiding,
)
from .verifier import (
    DEFAULT_SAMPLE_CAP,
    SHIPPED_SAMPLES,
    SampleCapExceeded,
    SampleSpec,
    check_coset_uniqueness,
    enumerate_sample,
    find_mono_triples,
    order4_obstruction_demo,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ORDER_FOUR = 2
EXIT_BUDGET = 3
EXIT_IO = 4

DEFAULT_SIGNATURE = SHIPPED_SAMPLES["demo-default"].signature


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_IO):
        super().__init__(message)
        self.code = code


# -- input parsing ---------------------------------------------------------


def parse_presentation_text(text: str, source: str = "<input>") -> Presentation:
    """Parse the generators/relations file format with line diagnostics."""
    n_generators = None
    relations = []
    in_relations = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            try:
                n_generators = int(line.split(":", 1)[1])
            except ValueError:
                raise CliError(f"{source}:{lineno}: bad generator count {line!r}")
            continue
        if line.startswith("relations:"):
            in_relations = True
            continue
        if not in_relations:
            raise CliError(f"{source}:{lineno}: expected 'generators:' or 'relations:', got {line!r}")
        try:
            relations.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise CliError(f"{source}:{lineno}: bad relation row {line!r}")
    if n_generators is None:
        raise CliError(f"{source}: missing 'generators:' field")
    try:
        return Presentation(n_generators, tuple(relations))
    except ValueError as exc:
        raise CliError(f"{source}: {exc}")


def load_presentation(path: str) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    return parse_presentation_text(text, source=path)


def parse_signature_text(text: str, free_mode: str = RATIONAL) -> AmbientSignature:
    """Parse ``prufer=3,5;s=2;r=1`` into a signature."""
    prufer: tuple[int, ...] = ()
    s = 0
    r = 0
    for field in text.split(";"):
        field = field.strip()
        if not field:
            continue
        key, eq, value = field.partition("=")
        key = key.strip()
        value = value.strip()
        if not eq:
            raise CliError(f"bad signature field {field!r} (need key=value)")
        try:
            if key == "prufer":
                prufer = tuple(int(tok) for tok in value.split(",") if tok.strip())
            elif key == "s":
                s = int(value)
            elif key == "r":
                r = int(value)
            else:
                raise CliError(f"unknown signature field {key!r}")
        except ValueError:
            raise CliError(f"bad signature value in {field!r}")
    try:
        return AmbientSignature(prufer, s, r, free_mode)
    except ValueError as exc:
        raise CliError(f"invalid signature: {exc}")


# -- output ----------------------------------------------------------------


def _emit(report: dict, output: Optional[str], stdout_json: bool = True) -> None:
    text = json.dumps(report, indent=2, sort_keys=False)
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise CliError(f"cannot write {output}: {exc}")
    elif stdout_json:
        print(text)


# -- subcommands -------------------------------------------------------------


def _analysis_dict(pres: Presentation) -> dict:
    snf = smith_normal_form(pres.relations, n_cols=pres.n_generators)
    dec = canonical_decomposition(pres)
    return {
        "n_generators": pres.n_generators,
        "n_relations": len(pres.relations),
        "invariant_factors": list(snf.invariant_factors),
        "free_rank": dec.free_rank,
        "primary_factors": [[p, e] for p, e in dec.primary_factors],
        "torsion_order": dec.torsion_order,
        "has_order_four": has_order_four(dec),
        "verdict": "order-4 present" if has_order_four(dec) else "4-free",
    }


def cmd_analyze(args) -> int:
    pres = load_presentation(args.input)
    report = {
        "config": {"subcommand": "analyze", "input": args.input},
        "analysis": _analysis_dict(pres),
    }
    _emit(report, args.output)
    return EXIT_ORDER_FOUR if report["analysis"]["has_order_four"] else EXIT_OK


def cmd_embed(args) -> int:
    pres = load_presentation(args.input)
    analysis = _analysis_dict(pres)
    report = {
        "config": {"subcommand": "embed", "input": args.input, "free_mode": args.free_mode},
        "analysis": analysis,
    }
    if analysis["has_order_four"]:
        report["error"] = "group contains an element of order 4; cannot embed"
        _emit(report, args.output)
        return EXIT_ORDER_FOUR
    emap = build_embedding(canonical_decomposition(pres), args.free_mode)
    report["embedding"] = emap.describe()
    _emit(report, args.output)
    return EXIT_OK


def cmd_colour(args) -> int:
    sig = parse_signature_text(args.signature, args.free_mode)
    texts = list(args.elements)
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                texts.extend(line.strip() for line in fh if line.strip())
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc}")
    if not texts:
        raise CliError("no elements given (positional arguments or --input file)")
    items = []
    for text in texts:
        try:
            elem = AmbientElement.parse(sig, text)
        except ElementParseError as exc:
            raise CliError(f"bad element {text!r}: {exc}")
        items.append({"element": elem.canonical_text(), "colour": colour_encode(colour(elem))})
    for item in items:
        print(f"{item['element']}\t{item['colour']}")
    if args.output:
        report = {
            "config": {
                "subcommand": "colour",
                "signature": sig.describe(),
                "free_mode": args.free_mode,
            },
            "items": items,
        }
        _emit(report, args.output, stdout_json=False)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = {
        "subcommand": "verify",
        "input": args.input,
        "signature": args.signature,
        "free_mode": args.free_mode,
        "prufer_depth": args.prufer_depth,
        "q_bound": args.q_bound,
        "q_den_bound": args.q_den_bound,
        "mode": args.mode,
        "count": args.count,
        "seed": args.seed,
        "cap": args.cap,
        "parallel": args.parallel,
        "drop_layer": args.drop_layer,
    }
    report: dict = {"config": config}

    if args.input:
        pres = load_presentation(args.input)
        analysis = _analysis_dict(pres)
        report["analysis"] = analysis
        if analysis["has_order_four"]:
            report["error"] = "hypothesis violated: group contains an element of order 4"
            _emit(report, args.output)
            return EXIT_ORDER_FOUR
        sig = build_embedding(canonical_decomposition(pres), args.free_mode).signature
    elif args.signature:
        sig = parse_signature_text(args.signature, args.free_mode)
    else:
        sig = AmbientSignature(
            DEFAULT_SIGNATURE.prufer_factors,
            DEFAULT_SIGNATURE.s,
            DEFAULT_SIGNATURE.r,
            args.free_mode,
        )
    config["resolved_signature"] = sig.describe()

    spec = SampleSpec(
        sig,
        prufer_depth=args.prufer_depth,
        q_numerator_bound=args.q_bound,
        q_denominator_bound=args.q_den_bound,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
    )
    try:
        elements = enumerate_sample(spec, cap=args.cap)
    except SampleCapExceeded as exc:
        report["error"] = str(exc)
        _emit(report, args.output)
        return EXIT_BUDGET

    colour_fn = DROPPED_LAYER_COLOURINGS[args.drop_layer] if args.drop_layer else colour
    triple = find_mono_triples(
        elements, colour_fn, parallel=args.parallel, sample=spec.describe()
    )
    coset = check_coset_uniqueness(elements)
    report["triple_report"] = triple.describe()
    report["coset_report"] = coset.describe()
    _emit(report, args.output)
    print(
        f"checked {triple.pairs} pairs over {triple.distinct} elements: "
        f"{len(triple.violations)} violations",
        file=sys.stderr,
    )
    return EXIT_OK if triple.ok else EXIT_VIOLATIONS


def cmd_demo(args) -> int:
    orders = _parse_orders(args.group)
    demo = order4_obstruction_demo(orders)
    for line in demo.transcript:
        print(line)
    if args.output:
        report = {"config": {"subcommand": "demo", "group": list(orders)}, "demo": demo.describe()}
        _emit(report, args.output, stdout_json=False)
    return EXIT_OK


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise CliError(f"bad group orders {text!r} (expected e.g. 4,4)")
    if not orders:
        raise CliError("empty group orders")
    return orders


def cmd_search(args) -> int:
    orders = _parse_orders(args.group)
    group = FiniteGroupSpec(orders)
    config = {
        "subcommand": "search",
        "group": list(orders),
        "colours": args.colours,
        "min_colours": args.min_colours,
        "budget": args.budget,
        "cap": args.cap,
    }
    if args.min_colours:
        res = min_colours_avoiding(group, budget=args.budget, cap=args.cap)
        report = {"config": config, "result": res.describe()}
        _emit(report, args.output)
        if res.verdict == "unknown":
            print("verdict: unknown (budget exceeded)", file=sys.stderr)
            return EXIT_BUDGET
        print(f"min colours avoiding: {res.count}", file=sys.stderr)
        return EXIT_OK
    if args.colours is None:
        raise CliError("search needs --colours N or --min-colours")
    res = all_colourings_forced(group, args.colours, budget=args.budget, cap=args.cap)
    report = {"config": config, "result": res.describe()}
    _emit(report, args.output)
    if res.verdict == "unknown":
        print("verdict: unknown (budget exceeded)", file=sys.stderr)
        return EXIT_BUDGET
    print(f"verdict: {res.verdict}", file=sys.stderr)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourfree",
        description="Colourings of abelian groups without order-4 elements: "
        "analysis, embedding, colouring, verification sweeps, demos, searches.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="invariant factors and order-4 verdict")
    p.add_argument("--input", required=True, help="presentation file")
    p.add_argument("--output", help="write JSON report here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed", help="ambient signature and generator images")
    p.add_argument("--input", required=True, help="presentation file")
    p.add_argument("--output", help="write JSON report here")
    p.add_argument("--free-mode", choices=[RATIONAL, INTEGER], default=RATIONAL)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("colour", help="colour elements given in canonical text form")
    p.add_argument("elements", nargs="*", help="elements in canonical text form")
    p.add_argument("--signature", default="prufer=3,5;s=2;r=1", help="ambient signature text")
    p.add_argument("--free-mode", choices=[RATIONAL, INTEGER], default=RATIONAL)
    p.add_argument("--input", help="file with one element per line")
    p.add_argument("--output", help="write JSON report here")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="pair sweep for monochromatic {2a,2b,a+b}")
    p.add_argument("--input", help="presentation file (embedded before sweeping)")
    p.add_argument("--signature", help="ambient signature text (default: demo signature)")
    p.add_argument("--free-mode", choices=[RATIONAL, INTEGER], default=RATIONAL)
    p.add_argument("--prufer-depth", type=int, default=1)
    p.add_argument("--q-bound", type=int, default=1, help="free numerator bound")
    p.add_argument("--q-den-bound", type=int, default=1, help="free denominator bound")
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--count", type=int, default=1000, help="random-mode sample size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_SAMPLE_CAP)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--drop-layer", choices=sorted(DROPPED_LAYER_COLOURINGS), default=None,
                   help="diagnostic: drop one colour layer")
    p.add_argument("--output", help="write JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="order-4 obstruction demo")
    p.add_argument("--group", default="4,4", help="cyclic orders, e.g. 4,4")
    p.add_argument("--output", help="write JSON report here")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("search", help="forced-colouring search on a finite group")
    p.add_argument("--group", default="4", help="cyclic orders, e.g. 4 or 4,4")
    p.add_argument("--colours", type=int, default=None)
    p.add_argument("--min-colours", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP)
    p.add_argument("--output", help="write JSON report here")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main_entry() -> None:
    raise SystemExit(main())
