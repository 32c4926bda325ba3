"""Headless driver: generation, analysis, permalinks, bookmarks, audit.

Exit codes: 0 success, 1 validation error, 2 usage error. No subcommand
touches the network; everything runs from local files and stdin/stdout.
"""

from __future__ import annotations

import argparse
import datetime
import os
import secrets
import sys
from pathlib import Path

from . import document, feedback, history, patterns, share, tiles

STORE_ENV_VAR = "POCKETFORGE_STORE"
DEFAULT_STORE_PATH = Path.home() / ".pocketforge" / "bookmarks.json"


def _seed_type(value: str) -> int:
    seed = int(value)
    if not 0 <= seed <= tiles.MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2^64), got {value}")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pocketforge",
        description="Generate, analyze, bookmark, and share single-page HTML artifacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a page from the tile grammar")
    gen.add_argument("--seed", type=_seed_type, default=None,
                     help="64-bit seed; omit for a random one (reported on stderr)")
    gen.add_argument("--tileset", default="default",
                     help="path to a tile-set file, or 'default' for the bundled set")
    gen.add_argument("--out", default=None, help="write the page here instead of stdout")

    ana = sub.add_parser("analyze", help="report size and comparisons for a page")
    ana.add_argument("path", help="HTML file to analyze, or '-' for stdin")
    ana.add_argument("--refs", default=None, help="reference-table file (default: bundled)")

    perma = sub.add_parser("permalink", help="convert between text and permalinks")
    perma_sub = perma.add_subparsers(dest="direction", required=True)
    perma_sub.add_parser("encode", help="stdin text -> permalink on stdout")
    perma_sub.add_parser("decode", help="stdin permalink -> text on stdout")

    marks = sub.add_parser("bookmarks", help="keep favorite artifacts")
    marks_sub = marks.add_subparsers(dest="action", required=True)
    add = marks_sub.add_parser("add", help="bookmark the page given on stdin")
    add.add_argument("label", help="bookmark label")
    add.add_argument("--store", default=None, help="bookmark store file")
    lst = marks_sub.add_parser("list", help="list bookmarks, newest first")
    lst.add_argument("--store", default=None, help="bookmark store file")

    sub.add_parser("audit", help="print the design-pattern manifest and audit")

    return parser


def _store_path(flag_value: str | None) -> Path:
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(STORE_ENV_VAR)
    if env:
        return Path(env)
    return DEFAULT_STORE_PATH


def _load_tileset(spec_value: str) -> tiles.TileSet:
    if spec_value == "default":
        return tiles.default_tileset()
    return tiles.load_tileset(Path(spec_value).read_bytes())


def _cmd_generate(args: argparse.Namespace) -> int:
    tileset = _load_tileset(args.tileset)
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr)
    html = document.serialize(tiles.generate(tileset, seed))
    if args.out:
        Path(args.out).write_text(html + "\n", encoding="utf-8")
    else:
        sys.stdout.write(html + "\n")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.path).read_text(encoding="utf-8")
    if args.refs:
        refs = feedback.load_reference_pages(Path(args.refs).read_bytes())
    else:
        refs = feedback.default_reference_pages()
    report = feedback.measure_size(text)
    print(f"{report.bytes} bytes")
    for ref in refs:
        print(feedback.render_feedback(feedback.compare(report, ref)))
    return 0


def _cmd_permalink(args: argparse.Namespace) -> int:
    if args.direction == "encode":
        state = history.EditorState(source_text=sys.stdin.read())
        sys.stdout.write(share.encode_permalink(state).encoded + "\n")
        return 0
    encoded = sys.stdin.read().strip()
    state = share.decode_permalink(encoded)
    sys.stdout.write(state.source_text)
    return 0


def _cmd_bookmarks(args: argparse.Namespace) -> int:
    store = share.FileBookmarkStore(_store_path(args.store))
    if args.action == "add":
        text = sys.stdin.read()
        store.add(args.label, history.EditorState(source_text=text))
        return 0
    for bookmark in store.list():
        stamp = datetime.datetime.fromtimestamp(bookmark.created_at / 1000, datetime.timezone.utc)
        print(f"{stamp.isoformat()}\t{bookmark.label}")
    return 0


def _cmd_audit(_args: argparse.Namespace) -> int:
    print(patterns.report_json())
    return 0 if patterns.audit().ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "analyze": _cmd_analyze,
        "permalink": _cmd_permalink,
        "bookmarks": _cmd_bookmarks,
        "audit": _cmd_audit,
    }
    try:
        return handlers[args.command](args)
    except (tiles.TileSetError, share.PermalinkDecodeError, share.StorageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
