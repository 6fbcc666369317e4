#!/usr/bin/env python3

import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence

from fuzzywuzzy import fuzz

from affperm import AffinePerm, from_word, inverse, parse_word
from bijection import core_to_alcove, dominant_alcove_of_core, enumerate_extremal, make_record
from config import Config
from cores import (Abacus, NSet, NVector, Partition, balanced_abacus, n_set, n_vector, partition_from_nset,
                   partition_from_nvector, render_diagram)
from errors import InvalidInputError, PreconditionError, ShiAtlasError
from geometry import walls
from levelt import KINDS, MAXIMAL, MINIMAL, LevelTContext
from parking import arc_diagram, parking_function
from region_cache import RegionCache
from svg_plot import plot_arrangement
from verification import FAIL, INFO, PASS, Verifier

ENCODINGS = ('partition', 'abacus', 'nvector', 'nset', 'window', 'word')
FORMATS = ('json', 'text')

CYAN = '\033[96m'
GREEN = '\033[92m'
YELLOW = '\033[93m'
RED = '\033[91m'
BOLD = '\033[1m'
RESET = '\033[0m'


def setup_logging():
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Shi regions, n-cores and the level-t actions that connect them'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    convert = sub.add_parser('convert', help='Convert an n-core between encodings')
    convert.add_argument('--n', type=int, required=True, help='Number of runners / rank')
    convert.add_argument('--from', dest='source', required=True, help=f"Input encoding ({', '.join(ENCODINGS)})")
    convert.add_argument('--to', dest='target', required=True, help='Output encoding')
    convert.add_argument('value', help='Encoded object: JSON array, abacus object, or a word like "0 1"')
    convert.add_argument('--format', choices=FORMATS, default='json',
                         help='json (default) or text with the Young diagram and balanced abacus')

    mapper = sub.add_parser('map', help='Map an extremal alcove to its core, or back with --inverse')
    _add_context_arguments(mapper)
    mapper.add_argument('--word', help='Alcove as a word in the generators, e.g. "1 0 1"')
    mapper.add_argument('--nset', help='Core as a residue-keyed n-set, e.g. "[3,4,-4]"')
    mapper.add_argument('--inverse', action='store_true', help='Map an n-set back to its alcove')
    mapper.add_argument('--format', choices=FORMATS, default='json',
                        help='json (default) or text with diagram, abacus and arc diagram')

    enumerate_cmd = sub.add_parser('enumerate', help='Write every extremal alcove as JSON lines')
    _add_context_arguments(enumerate_cmd)
    enumerate_cmd.add_argument('--out', help='Output file (default: stdout)')

    verify = sub.add_parser('verify', help='Run the consistency checks for one (n, m)')
    verify.add_argument('--n', type=int, required=True)
    verify.add_argument('--m', type=int, default=1)
    verify.add_argument('--out', help='Write the JSON report to this file')
    verify.add_argument('--json', action='store_true', help='Print the JSON report instead of a summary')
    verify.add_argument('--skip-oracle', action='store_true', help='Leave out the brute-force region comparison')
    verify.add_argument('--refresh-cache', action='store_true',
                        help='Drop the cached region table for (n, m) before running (needs SHI_USE_CACHE)')

    plot = sub.add_parser('plot', help='Draw the m-Shi arrangement for n = 3 as SVG')
    plot.add_argument('--n', type=int, default=3)
    plot.add_argument('--m', type=int, default=1)
    plot.add_argument('--out', help='SVG file (default: shi_<n>_<m>.svg)')
    plot.add_argument('--highlight', default='', help='Alcoves whose regions get outlined, as words separated by ";"')
    return parser


def _add_context_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--n', type=int, required=True, help='Rank n >= 3')
    parser.add_argument('--m', type=int, default=1, help='Shi parameter m >= 1')
    parser.add_argument('--kind', default=MINIMAL, help=f"Extremal kind ({', '.join(KINDS)})")


def main(argv: Optional[Sequence[str]] = None):
    setup_logging()
    logger = logging.getLogger(__name__)

    args = build_parser().parse_args(argv)
    commands = {
        'convert': cmd_convert,
        'map': cmd_map,
        'enumerate': cmd_enumerate,
        'verify': cmd_verify,
        'plot': cmd_plot,
    }

    try:
        code = commands[args.command](args)
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.")
        sys.exit(1)
    except ShiAtlasError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"Error: {e}")
        sys.exit(e.exit_code)
    if code:
        sys.exit(code)


def resolve_name(name: str, choices: Sequence[str], what: str) -> str:
    """Exact (case-insensitive) match, or an error listing the closest choices."""
    lowered = name.strip().lower()
    if lowered in choices:
        return lowered
    scored = sorted(choices, key=lambda c: fuzz.ratio(lowered, c), reverse=True)
    suggestions = ', '.join(scored[:Config.MAX_SUGGESTIONS])
    raise InvalidInputError(f"unknown {what} '{name}'. Did you mean: {suggestions}?")


def parse_int_list(text: str, what: str) -> List[int]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"{what} must be a JSON array of integers: {e}")
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InvalidInputError(f"{what} must be a JSON array of integers, got {text}")
    check_magnitude(value, what)
    return value


def check_magnitude(values: Sequence[int], what: str) -> None:
    """Reject entries beyond Config.MAX_ENTRY before anything iterates up to them."""
    limit = Config.MAX_ENTRY
    for v in values:
        if abs(v) > limit:
            raise InvalidInputError(f"{what} entry {v} is outside the input limit |x| <= {limit} (SHI_MAX_ENTRY)")


def to_json(value) -> str:
    return json.dumps(value, separators=(',', ':'))


def _context(args) -> LevelTContext:
    kind = resolve_name(args.kind, KINDS, 'kind')
    check_magnitude([args.n, args.m], 'context')
    return LevelTContext.for_kind(args.n, args.m, kind)


def _guard_scale(n: int, m: int) -> None:
    if n > Config.MAX_N or m > Config.MAX_M:
        raise PreconditionError(f"(n, m) = ({n}, {m}) exceeds the limits n <= {Config.MAX_N}, m <= {Config.MAX_M}")


# convert

def decode(source: str, text: str, n: int):
    """An n-core partition, or for words the affine permutation itself."""
    if source == 'word':
        return from_word(parse_word(text), n)
    if source == 'abacus':
        try:
            data = json.loads(text)
            floor = int(data['floor'])
            beads = [int(b) for b in data.get('beads', [])]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"abacus must look like {{\"floor\": 0, \"beads\": [1, 2]}}: {e}")
        check_magnitude([floor] + beads, 'abacus')
        abacus = Abacus(n, floor, beads)
        abacus.runner_levels()
        return abacus.partition()
    values = parse_int_list(text, source)
    if source == 'partition':
        if sum(abs(v) for v in values) > Config.MAX_ENTRY:
            raise InvalidInputError(f"partition size {sum(values)} is outside the input limit {Config.MAX_ENTRY}")
        lam = Partition(values)
        n_set(lam, n)
        return lam
    if len(values) != n:
        raise InvalidInputError(f"{source} {values} must have exactly n = {n} entries")
    if source == 'nvector':
        return partition_from_nvector(NVector(values))
    return partition_from_nset(NSet(values))


def core_partition(obj) -> Partition:
    """The core of a decoded object; an alcove w stands for the core with dominant window w^-1."""
    if isinstance(obj, AffinePerm):
        return partition_from_nset(NSet(inverse(obj).window))
    return obj


def encode(target: str, obj, n: int):
    if isinstance(obj, AffinePerm):
        if target == 'word':
            return obj.reduced_word()
        if target == 'window':
            return inverse(obj).to_list()
        obj = core_partition(obj)
    if target == 'partition':
        return obj.to_list()
    if target == 'abacus':
        abacus = balanced_abacus(obj, n)
        return {'floor': abacus.floor, 'beads': sorted(abacus.beads)}
    if target == 'nvector':
        return n_vector(obj, n).to_list()
    if target == 'nset':
        return n_set(obj, n).to_list()
    if target == 'window':
        return list(n_set(obj, n).window())
    return dominant_alcove_of_core(n_set(obj, n)).reduced_word()


def core_text(lam: Partition, n: int) -> str:
    abacus = balanced_abacus(lam, n)
    return '\n'.join([
        f"partition: {to_json(lam.to_list())}",
        render_diagram(lam),
        f"balanced abacus (floor {abacus.floor}):",
        abacus.render(),
    ])


def cmd_convert(args) -> int:
    source = resolve_name(args.source, ENCODINGS, 'encoding')
    target = resolve_name(args.target, ENCODINGS, 'encoding')
    if args.n < 3 and 'word' in (source, target):
        raise InvalidInputError(f"words need n >= 3, got n = {args.n}")
    check_magnitude([args.n], 'n')
    obj = decode(source, args.value, args.n)
    result = encode(target, obj, args.n)
    if args.format == 'text':
        print(f"{target}: {to_json(result)}")
        print(core_text(core_partition(obj), args.n))
    elif source == 'word':
        # a word names an alcove, not a core encoding: print the value bare
        print(to_json(result))
    else:
        print(to_json({target: result}))
    return 0


# map

def region_record(w: AffinePerm, ctx: LevelTContext) -> Dict:
    record = make_record(w, ctx).to_dict()
    record['walls'] = [wall.to_dict() for wall in walls(w)]
    record['parking_function'] = parking_function(w, ctx.m).to_list()
    return record


def cmd_map(args) -> int:
    ctx = _context(args)
    if args.inverse:
        if args.nset is None:
            raise InvalidInputError("--inverse needs --nset")
        w = core_to_alcove(NSet(parse_int_list(args.nset, 'nset')), ctx)
    else:
        if args.word is None:
            raise InvalidInputError("map needs --word (or --nset with --inverse)")
        w = from_word(parse_word(args.word), args.n)
    record = region_record(w, ctx)
    if args.format == 'text':
        print(region_text(record, w, ctx))
    else:
        print(to_json(record))
    return 0


def region_text(record: Dict, w: AffinePerm, ctx: LevelTContext) -> str:
    lam = Partition(record['partition'])
    return '\n'.join([
        f"alcove {to_json(record['word'])} window {to_json(record['window'])} "
        f"({ctx.m}-{ctx.kind}, t={ctx.t})",
        f"g {to_json(record['g'])}  y {to_json(record['y'])}  sigma {to_json(record['sigma'])}",
        f"core (n-set): {to_json(record['core'])}",
        core_text(lam, ctx.n),
        f"parking function: {to_json(record['parking_function'])}",
        arc_diagram(w, ctx.m).render(),
    ])


# enumerate

class AtlasWriter:
    """Writes the records of one context as JSON lines and keeps running counts."""

    def __init__(self, ctx: LevelTContext, out: Optional[str] = None):
        self.ctx = ctx
        self.out = out
        self.logger = logging.getLogger(__name__)
        self.stats = {
            'records': 0,
            'dominant': 0,
            'expected': ctx.t ** (ctx.n - 1),
        }

    def run(self) -> int:
        records = enumerate_extremal(self.ctx.n, self.ctx.m, self.ctx.kind)
        lines = [to_json(record.to_dict()) for record in records]
        self.stats['records'] = len(records)
        self.stats['dominant'] = sum(1 for r in records if r.g.is_identity())

        if self.out:
            with open(self.out, 'w') as f:
                f.write(''.join(line + '\n' for line in lines))
            self.logger.info(f"Wrote {len(lines)} records to {self.out}")
            self._print_summary()
        else:
            for line in lines:
                print(line)
        self.logger.info(self.summary_line())
        return 0

    def summary_line(self) -> str:
        return (f"ATLAS {self.ctx.m}-{self.ctx.kind} n={self.ctx.n}: {self.stats['records']} records "
                f"(expected {self.stats['expected']}), {self.stats['dominant']} dominant")

    def _print_summary(self):
        ok = self.stats['records'] == self.stats['expected']
        colour = GREEN if ok else RED
        print(f"\n{'═' * 50}")
        print(f"{BOLD}{CYAN}ATLAS {self.ctx.m}-{self.ctx.kind} n={self.ctx.n}{RESET}")
        print('═' * 50)
        print(f"Records written: {colour}{BOLD}{self.stats['records']}{RESET}")
        print(f"Expected (t^(n-1), t={self.ctx.t}): {BOLD}{self.stats['expected']}{RESET}")
        print(f"Dominant records: {BOLD}{self.stats['dominant']}{RESET}")
        print(f"Output: {self.out}")


def cmd_enumerate(args) -> int:
    ctx = _context(args)
    _guard_scale(ctx.n, ctx.m)
    return AtlasWriter(ctx, args.out).run()


# verify

def _print_report(verifier: Verifier) -> None:
    colours = {PASS: GREEN, FAIL: RED, INFO: YELLOW}
    for result in verifier.results:
        status = result['status']
        print(f"{colours[status]}{status.upper():>4}{RESET}  {result['check_id']}")
        if status != PASS and result['witness'] is not None:
            print(f"      {json.dumps(result['witness'])}")
    counts = verifier.counts()
    print(f"\n{'═' * 50}")
    print(f"{BOLD}{CYAN}VERIFY n={verifier.n} m={verifier.m}{RESET}")
    print('═' * 50)
    print(f"Minimal / maximal alcoves: {BOLD}{counts[MINIMAL]}/{counts[MAXIMAL]}{RESET}")
    print(f"Passed: {GREEN}{BOLD}{verifier.stats[PASS]}{RESET}")
    print(f"Informational: {YELLOW}{BOLD}{verifier.stats[INFO]}{RESET}")
    print(f"Failed: {RED}{BOLD}{verifier.stats[FAIL]}{RESET}")


def open_region_cache(n: int, m: int, refresh: bool = False) -> Optional[RegionCache]:
    logger = logging.getLogger(__name__)
    if not Config.USE_REGION_CACHE:
        if refresh:
            logger.warning("--refresh-cache has no effect unless SHI_USE_CACHE is set")
        return None
    cache = RegionCache(Config.REGION_CACHE_PATH)
    if refresh and cache.remove_regions(n, m):
        logger.info(f"Dropped cached regions for n={n}, m={m}; the oracle will search again")
    logger.info(f"Region cache holds {cache.get_cache_size()} contexts: {', '.join(cache.get_cached_keys()) or '-'}")
    return cache


def cmd_verify(args) -> int:
    _guard_scale(args.n, args.m)
    cache = open_region_cache(args.n, args.m, args.refresh_cache)
    verifier = Verifier(args.n, args.m, use_oracle=not args.skip_oracle, cache=cache)
    verifier.run()
    report = {'n': args.n, 'm': args.m, 'counts': verifier.counts(), 'checks': verifier.results}
    if args.out:
        with open(args.out, 'w') as f:
            json.dump(report, f, indent=2)
    if args.json:
        print(to_json(report))
    else:
        _print_report(verifier)
    return verifier.exit_code


# plot

def cmd_plot(args) -> int:
    if args.n != 3:
        raise PreconditionError(f"plotting is only available for n = 3, got n = {args.n}")
    highlight = [from_word(parse_word(word), args.n) for word in args.highlight.split(';') if word.strip()]
    out = args.out or f"shi_{args.n}_{args.m}.svg"
    plot = plot_arrangement(args.n, args.m, out, highlight)
    print(f"Wrote {out}: {len(plot.regions)} regions, {len(plot.labels())} labelled minimal alcoves, "
          f"{len(plot.highlighted)} highlighted")
    return 0


if __name__ == "__main__":
    main()
