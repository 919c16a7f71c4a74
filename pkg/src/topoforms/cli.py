# -*- coding: utf-8 -*- {{{
# ===----------------------------------------------------------------------===
#
#                 topoforms
#
# ===----------------------------------------------------------------------===
#
# Copyright 2026 The topoforms developers
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not
# use this file except in compliance with the License. You may obtain a copy
# of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
#
# ===----------------------------------------------------------------------===
# }}}

"""
Command line entry point.

Exit status is 0 on success, 1 for usage errors and 2 when a computation fails.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from topoforms.cache import OrbitCache
from topoforms.config import load_config, set_config
from topoforms.emit import EXTENSIONS, FORMATS, emit_grid
from topoforms.errors import TopographError
from topoforms.forms import BinaryQuadraticForm
from topoforms.logs import setup_logging, verbosity_to_level
from topoforms.render import render_topograph
from topoforms.scan import scan_panel, split_by_family
from topoforms.seifert import SeifertParams, bracket_reduce, describe, lemma_bounds
from topoforms.topograph import invariant
from topoforms.utils import format_rational

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="topoforms",
                     description="Topograph invariants of binary quadratic forms and "
                     "Seifert form scans.")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("invariant", help="print the invariant of a x^2 + h xy + b y^2")
    p.add_argument("form", nargs=3, type=int, metavar=("A", "H", "B"))
    p.add_argument("--listing", action="store_true", help="reference listing style output")

    p = sub.add_parser("compare", help="decide whether two forms are isomorphic")
    p.add_argument("forms", nargs=6, type=int, metavar=("A0", "H0", "B0", "A1", "H1", "B1"))

    p = sub.add_parser("seifert", help="report on the forms of S(p, q, k, n)")
    p.add_argument("params", nargs=4, type=int, metavar=("P", "Q", "K", "N"))

    p = sub.add_parser("scan", help="scan the (k, n) panel |k|, |n| <= size")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", help="output file, standard output when omitted")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--scale", type=int, help="pixels per cell for image formats")
    p.add_argument("--cache", help="orbit cache file, read and updated")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--two-sided", action="store_true",
                   help="compare Q0 with both Q1 and -Q1")
    p.add_argument("--split", action="store_true",
                   help="write one panel per topograph family next to --out")
    p.add_argument("--no-memo", action="store_true", help="compute every cell separately")

    p = sub.add_parser("render", help="draw the topograph near the root vertex")
    p.add_argument("form", nargs=3, type=int, metavar=("A", "H", "B"))
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--format", choices=("dot", "ascii"), default="dot")

    p = sub.add_parser("lemma", help="bounds on t for (u x + v0 y)^2 + t y^2 vs v1")
    p.add_argument("values", nargs=3, type=int, metavar=("U", "V0", "V1"))
    return parser


def _write(data: bytes, out: Optional[str]):
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _cmd_invariant(args):
    inv = invariant(BinaryQuadraticForm(*args.form))
    print(inv.to_listing() if args.listing else inv.serialize())


def _cmd_compare(args):
    f0 = BinaryQuadraticForm(*args.forms[:3])
    f1 = BinaryQuadraticForm(*args.forms[3:])
    i0, i1 = invariant(f0), invariant(f1)
    print("EQUAL" if i0 == i1 else "DIFFERENT")
    print(f"{tuple(f0)} {i0}")
    print(f"{tuple(f1)} {i1}")


def _cmd_seifert(args):
    print(describe(SeifertParams.build(*args.params)))


def _cmd_scan(args):
    if args.split and args.out is None:
        raise UsageError("topoforms scan: --split needs --out")
    cache = OrbitCache.load(args.cache, args.p, args.q) if args.cache else None
    grid = scan_panel(args.p, args.q, args.size, two_sided=args.two_sided,
                      memoize=not args.no_memo, cache=cache, jobs=args.jobs)
    if cache is not None:
        cache.save(args.cache)
    if not args.split:
        _write(emit_grid(grid, args.format, args.scale), args.out)
        return
    out = Path(args.out)
    base = out.with_suffix("") if out.suffix else out
    for family, panel in split_by_family(grid).items():
        target = base.parent / f"{base.name}.{family}.{EXTENSIONS[args.format]}"
        target.write_bytes(emit_grid(panel, args.format, args.scale))
        _log.info(f"wrote {target}")


def _cmd_render(args):
    tree = render_topograph(BinaryQuadraticForm(*args.form), args.depth)
    print(tree.to_dot() if args.format == "dot" else tree.to_ascii(), end="")


def _cmd_lemma(args):
    u, v0, v1 = args.values
    bounds = lemma_bounds(u, v0, v1)
    print(f"[v0]_u = {bracket_reduce(v0, u)}")
    print(f"[v1]_u = {bracket_reduce(v1, u)}")
    print(f"t0 = {format_rational(bounds.t0)}")
    print(f"t1 = {format_rational(bounds.t1)}")


COMMANDS = {
    "invariant": _cmd_invariant,
    "compare": _cmd_compare,
    "seifert": _cmd_seifert,
    "scan": _cmd_scan,
    "render": _cmd_render,
    "lemma": _cmd_lemma,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        setup_logging(verbosity_to_level(args.verbose))
        if args.config:
            set_config(load_config(args.config))
        COMMANDS[args.command](args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (TopographError, OSError) as e:
        print(f"topoforms: {e}", file=sys.stderr)
        return EXIT_COMPUTATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
