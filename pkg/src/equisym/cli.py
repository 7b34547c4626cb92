"""Command-line front end.

Three subcommands::

    equisym atlas  --genus G [--primes-only] [--orders 4,6] [--out PATH]
                   [--format json|csv|md] [--max-candidates N]
                   [--singerman-table PATH]
    equisym family W q w | equisym family Q q
    equisym oracle "h;m1,m2,..." n g

Exit codes are a stable contract: 0 success, 2 invalid arguments, 3 search
space over the size guard, 4 codimension premise violation at genus >= 4,
5 epimorphism order violation.

Atlas documents are cached when ``STRATA_ATLAS_CACHE`` names a directory;
the cache key includes the genus, the order configuration and the
extension-table hash, so overriding the table invalidates stale entries.
Output is byte-deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import __version__
from .actions import SizeGuard, brute_force_count
from .classifier import (
    Atlas,
    PremiseViolation,
    classify_genus,
    render_csv,
    render_json_document,
    render_markdown,
)
from .families import OrderViolation, family_Q, family_W
from .signatures import Signature, is_prime
from .stratification import AtlasConfig

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SIZE_GUARD = 3
EXIT_PREMISE = 4
EXIT_ORDER_VIOLATION = 5


def _generated_by() -> str:
    return "equisym %s" % __version__


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cache_path(genus: int, config: AtlasConfig, fmt: str) -> str | None:
    root = os.environ.get("STRATA_ATLAS_CACHE")
    if not root:
        return None
    key = json.dumps(
        {
            "schema": SCHEMA_VERSION,
            "version": __version__,
            "genus": genus,
            "primes_only": config.primes_only,
            "orders": sorted(config.extra_orders),
            "defaults": config.include_default_composites,
            "table": config.table().content_hash(),
            "format": fmt,
        },
        sort_keys=True,
    )
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    return os.path.join(root, "atlas-%d-%s.%s" % (genus, digest, fmt))


def _render(atlas: Atlas, fmt: str) -> str:
    if fmt == "json":
        return render_json_document(atlas, _generated_by(), SCHEMA_VERSION)
    if fmt == "csv":
        return render_csv(atlas)
    if fmt == "md":
        return render_markdown(atlas)
    raise ValueError("unknown format %r" % fmt)


def load_atlas_document(path: str) -> dict:
    """Parse an atlas JSON file, checking the schema version."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            "unsupported atlas schema %r (expected %d)" % (doc.get("schema_version"), SCHEMA_VERSION)
        )
    return doc


def cmd_atlas(args: argparse.Namespace) -> int:
    orders: tuple[int, ...] = ()
    if args.orders:
        try:
            orders = tuple(sorted({int(x) for x in args.orders.split(",") if x.strip()}))
        except ValueError:
            print("--orders expects a comma-separated list of integers", file=sys.stderr)
            return EXIT_USAGE
        if any(n < 2 for n in orders):
            print("orders must be >= 2", file=sys.stderr)
            return EXIT_USAGE
    config = AtlasConfig(
        primes_only=args.primes_only,
        extra_orders=orders,
        max_candidates=args.max_candidates,
        singerman_path=args.singerman_table,
    )
    cache = _cache_path(args.genus, config, args.format)
    if cache and os.path.exists(cache):
        with open(cache, "r", encoding="utf-8") as fh:
            _write(fh.read(), args.out)
        return EXIT_OK
    atlas = classify_genus(args.genus, config)
    text = _render(atlas, args.format)
    if cache:
        os.makedirs(os.path.dirname(cache), exist_ok=True)
        with open(cache, "w", encoding="utf-8") as fh:
            fh.write(text)
    _write(text, args.out)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if args.family == "W":
        if args.w is None:
            print("family W needs two primes: W q w", file=sys.stderr)
            return EXIT_USAGE
        if not (is_prime(args.q) and is_prime(args.w) and args.q > 5 and args.w > 5 and args.q != args.w):
            print("family W needs distinct primes q, w > 5", file=sys.stderr)
            return EXIT_USAGE
        report = family_W(args.q, args.w)
    else:
        if args.w is not None:
            print("family Q takes a single prime", file=sys.stderr)
            return EXIT_USAGE
        if not (is_prime(args.q) and args.q > 5):
            print("family Q needs a prime q > 5", file=sys.stderr)
            return EXIT_USAGE
        report = family_Q(args.q)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "generated_by": _generated_by(),
        "report": report.to_payload(),
    }
    _write(json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": ")) + "\n", args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        sig = Signature.parse(args.signature)
    except ValueError as exc:
        print("bad signature: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    count = brute_force_count(sig, args.n, args.genus, args.max_candidates)
    print(count)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equisym",
        description="Cyclic equisymmetric strata of the moduli-space branch locus",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_atlas = sub.add_parser("atlas", help="build and classify the branch locus of one genus")
    p_atlas.add_argument("--genus", type=int, required=True)
    p_atlas.add_argument("--primes-only", action="store_true", help="skip composite orders")
    p_atlas.add_argument("--orders", help="extra composite orders, comma separated")
    p_atlas.add_argument("--out", help="output path (default stdout)")
    p_atlas.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p_atlas.add_argument("--max-candidates", type=int, default=10**8, help="size guard")
    p_atlas.add_argument("--singerman-table", help="override extension-table file")
    p_atlas.set_defaults(func=cmd_atlas)

    p_family = sub.add_parser("family", help="validate one of the dimension-4 families")
    p_family.add_argument("family", choices=("W", "Q"))
    p_family.add_argument("q", type=int)
    p_family.add_argument("w", type=int, nargs="?")
    p_family.add_argument("--out", help="output path (default stdout)")
    p_family.set_defaults(func=cmd_family)

    p_oracle = sub.add_parser("oracle", help="brute-force vector count (independent test oracle)")
    p_oracle.add_argument("signature", help="quotient signature, syntax h;m1,m2,...")
    p_oracle.add_argument("n", type=int, help="cyclic group order")
    p_oracle.add_argument("genus", type=int, help="expected cover genus")
    p_oracle.add_argument("--max-candidates", type=int, default=10**7)
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SizeGuard as exc:
        print("size guard: %s" % exc, file=sys.stderr)
        return EXIT_SIZE_GUARD
    except PremiseViolation as exc:
        print("premise violation: %s" % exc, file=sys.stderr)
        return EXIT_PREMISE
    except OrderViolation as exc:
        print("order violation: %s" % exc, file=sys.stderr)
        return EXIT_ORDER_VIOLATION
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
