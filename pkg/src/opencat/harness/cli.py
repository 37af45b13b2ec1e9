"""Command line interface: ``opencat validate|compose|apply|laws|gen``.

Exit codes: 0 ok, 1 validation or law failure, 2 parse error, 3 boundary mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from ..elements import parse_element, validate_presheaf, validate_presheaf_morphism
from ..errors import BoundaryMismatchError, OpenCatError, ParseError
from ..fincat import validate_category, validate_functor, validate_nat
from ..openfun import OpenFunctor, apply_open, apply_open_arrow, compose_open, validate_open_functor
from ..opennat import validate_open_nat
from .corpus import LAWS, format_summary, run_laws
from .generate import (
    STYLES,
    GenParams,
    gen_category,
    gen_open_functor,
    gen_open_nat_chain,
    gen_presheaf,
    random_functor,
)
from .serialize import LawRequest, element_from_json, parse, serialize

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BOUNDARY = 0, 1, 2, 3

VALIDATORS = {
    "category": validate_category,
    "presheaf": validate_presheaf,
    "presheaf_morphism": validate_presheaf_morphism,
    "functor": validate_functor,
    "nattrans": validate_nat,
    "open_functor": validate_open_functor,
    "open_nat_trans": lambda t: validate_open_nat(t, deep=True),
}


def _read(path):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse(text)


def _write(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_element_arg(text):
    text = text.strip()
    try:
        if text.startswith("["):
            return element_from_json(json.loads(text))
        return parse_element(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad element expression {text!r}: {exc}") from None


def _params(args, seed=None) -> GenParams:
    return GenParams(
        seed=args.seed if seed is None else seed,
        max_objects=args.max_objects,
        max_extra_arrows=args.max_extra_arrows,
        max_fiber=args.max_fiber,
        category_style=args.style,
    )


def _run_law_request(req: LawRequest) -> int:
    laws = LAWS if req.law == "all" else (req.law,)
    base = GenParams(req.seed, req.max_objects, req.max_extra_arrows, req.max_fiber, req.category_style)
    results = run_laws(laws, base, req.count)
    sys.stdout.write(format_summary(results))
    return EXIT_OK if all(r.holds for v in results.values() for rs in v for r in rs) else EXIT_FAIL


def cmd_validate(args) -> int:
    doc = _read(args.file)
    if doc.kind == "law_request":
        return _run_law_request(doc.value)
    report = VALIDATORS[doc.kind](doc.value)
    if not report:
        print(f"{doc.kind}: valid")
        return EXIT_OK
    print(f"{doc.kind}: {len(report)} violation(s)")
    for v in report:
        print(f"  {v}")
    return EXIT_FAIL


def _open_functor(path) -> OpenFunctor:
    doc = _read(path)
    if doc.kind != "open_functor":
        raise ParseError(f"{path}: expected an open_functor document, got {doc.kind}")
    return doc.value


def cmd_compose(args) -> int:
    G, F = _open_functor(args.g), _open_functor(args.f)
    _write(serialize(compose_open(G, F)), args.output)
    return EXIT_OK


def cmd_apply(args) -> int:
    F = _open_functor(args.file)
    x = _parse_element_arg(args.element)
    if args.arrow is not None:
        print(apply_open_arrow(F, args.arrow, x))
    else:
        print(apply_open(F, args.object, x))
    return EXIT_OK


def cmd_laws(args) -> int:
    req = LawRequest(
        law=args.law,
        seed=args.seed,
        count=args.count,
        max_objects=args.max_objects,
        max_extra_arrows=args.max_extra_arrows,
        max_fiber=args.max_fiber,
        category_style=args.style,
    )
    return _run_law_request(req)


def cmd_gen(args) -> int:
    p = _params(args)
    C = gen_category(p.derive("C"))
    D = gen_category(p.derive("D"))
    if args.kind == "category":
        value = gen_category(p)
    elif args.kind == "presheaf":
        value = gen_presheaf(p, C)
    elif args.kind == "functor":
        value = random_functor(random.Random(p.seed), C, D)
    elif args.kind == "open_functor":
        value = gen_open_functor(p, C, D)
    elif args.kind == "open_nat_trans":
        _, (value,) = gen_open_nat_chain(p, C, D, 1)
    else:
        value = LawRequest(seed=args.seed, max_objects=args.max_objects, max_extra_arrows=args.max_extra_arrows,
                           max_fiber=args.max_fiber, category_style=args.style)
    _write(serialize(value), args.output)
    return EXIT_OK


def _add_gen_options(sp, style_default):
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-objects", type=int, default=3)
    sp.add_argument("--max-extra-arrows", type=int, default=4)
    sp.add_argument("--max-fiber", type=int, default=3)
    sp.add_argument("--style", choices=STYLES + ("mixed",), default=style_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opencat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check a document against its axioms")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("compose", help="compose two open functors, G after F")
    sp.add_argument("g")
    sp.add_argument("f")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("apply", help="apply an open functor to an object or arrow with an interaction")
    sp.add_argument("file")
    target = sp.add_mutually_exclusive_group(required=True)
    target.add_argument("--object")
    target.add_argument("--arrow")
    sp.add_argument("--element", required=True, help="x, *, <x,*> or a JSON element")
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("laws", help="check the bicategory laws on generated instances")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--law", choices=LAWS + ("all",), default="all")
    _add_gen_options(sp, "mixed")
    sp.set_defaults(func=cmd_laws)

    sp = sub.add_parser("gen", help="emit a generated document")
    sp.add_argument("--kind", required=True,
                    choices=("category", "presheaf", "functor", "open_functor", "open_nat_trans", "law_request"))
    sp.add_argument("-o", "--output")
    _add_gen_options(sp, "dag_free")
    sp.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BoundaryMismatchError as exc:
        print(f"boundary mismatch: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except (OpenCatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
