"""
Command-line entry point.

Words and messages stream one per line between --input and --output;
statistics go out as JSON documents or key=value records; diagnostics and
log lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import ExitStack
from typing import Callable, Dict, Iterable, List, Optional, TextIO

from digit_ecc import analysis_oracles, channel_sim, prototype_codec, wxli_sets
from digit_ecc.code_model import CodeSpec, parse, parse_message
from digit_ecc.config import Config, resolve_workers
from digit_ecc.digit_arith import DigitVec
from digit_ecc.errors import DataError, DecoderInvariantError, DigitEccError, UsageError
from digit_ecc.families import build_spec, codec_for, normalize_family
from digit_ecc.nwxli_codec import load_index_set
from digit_ecc.results_store import ResultsStore

logger = logging.getLogger("digit_ecc")

TABLE_R = range(3, 10)
LANDSCAPE = (
    ("prototype", dict(family="prototype", p=3, r=2)),
    ("A1", dict(family="a1", r=3)),
    ("A2", dict(family="a2", r=4)),
    ("A2 sparse", dict(family="a2sparse", r=4)),
    ("Golay", dict(family="golay")),
)


def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    verbosity.add_argument("--quiet", action="store_true", help="log warnings and errors only")
    parent.add_argument("--strict", action="store_true", help="malformed input lines are fatal")
    parent.add_argument("--workers", type=int, default=None, help="worker processes (default ECC_WORKERS)")
    parent.add_argument("--output", default=None, help="output file (default stdout)")
    return parent


def _family_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--family", required=True, help="prototype, a1, a2, a2sparse, golay or nwxli")
    parent.add_argument("--p", type=int, default=None, help="prime base (prototype)")
    parent.add_argument("--r", type=int, default=None, help="index length")
    parent.add_argument("--message-len", type=int, default=None, help="message digits (adaptive families)")
    parent.add_argument("--global-check", action="store_true", help="append the value-sum position (a2sparse)")
    parent.add_argument("--set", dest="set_path", default=None, help="index set file (nwxli)")
    parent.add_argument("--wise", type=int, default=None, help="independence order of the set (nwxli)")
    return parent


def _store_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--append",
        nargs="?",
        const="",
        default=None,
        metavar="PATH",
        help="also append the run to a results store (default ECC_RESULTS_PATH)",
    )
    parent.add_argument("--format", choices=("json", "record"), default="json", help="stats output format")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common, family, store = _common_parent(), _family_parent(), _store_parent()
    parser = argparse.ArgumentParser(prog="digit-ecc", description="Digit-indexed q-ary error-correcting codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common, family], help="print code parameters and position roles")

    for name, text in (("encode", "encode message lines"), ("decode", "decode word lines")):
        cmd = sub.add_parser(name, parents=[common, family], help=text)
        cmd.add_argument("--input", default=None, help="input file (default stdin)")
    sub.choices["decode"].add_argument(
        "--show-syndromes", action="store_true", help="append the syndrome values to each line"
    )

    mindist = sub.add_parser("mindist", parents=[common, family, store], help="run both distance oracles")
    mindist.add_argument("--max-weight", type=int, default=None, help="column search weight (default min(d, 4))")

    sweep = sub.add_parser("sweep", parents=[common, family, store], help="exhaustive or sampled error sweep")
    sweep.add_argument("--weight", type=int, default=1)
    sweep.add_argument("--codewords", type=int, default=None, help="random codewords besides the zero word")
    sweep.add_argument("--samples", type=int, default=None, help="random patterns per codeword instead of all")
    sweep.add_argument("--seed", type=int, default=None)

    simulate = sub.add_parser("simulate", parents=[common, family, store], help="Monte Carlo channel run")
    simulate.add_argument("--trials", type=int, default=10000)
    simulate.add_argument("--epsilon", type=float, default=0.01)
    simulate.add_argument("--weight", type=int, default=None, help="force exactly this many errors per trial")
    simulate.add_argument("--seed", type=int, default=None)

    wxli = sub.add_parser("wxli", parents=[common], help="print or certify independent index sets")
    wxli.add_argument("--r", type=int, default=None, help="I1 family index length")
    wxli.add_argument("--certify", action="store_true", help="certify I1 and I2 3-wise independent")
    wxli.add_argument("--max-r", type=int, default=None, help="certify every r from 3 to this value")
    wxli.add_argument("--long-running", action="store_true", help="allow r above ECC_CERTIFY_MAX_R")
    wxli.add_argument("--set", dest="set_path", default=None, help="index set file to certify")
    wxli.add_argument("--vectors", default=None, help="comma-separated vectors to certify")
    wxli.add_argument("--p", type=int, default=3)
    wxli.add_argument("--k", type=int, default=None, help="independence order to test")

    table = sub.add_parser("table", parents=[common], help="parameter tables")
    table.add_argument("--landscape", action="store_true", help="parameters of the constructed code families")
    table.add_argument("--adds", action="store_true", help="syndrome add counts of the prototype code")
    table.add_argument("--p", type=int, default=3)
    table.add_argument("--r", type=int, default=5)
    return parser


def configure_logging(args: argparse.Namespace, stream: TextIO):
    level = Config.LOG_LEVEL.upper()
    if args.verbose:
        level = "DEBUG"
    elif args.quiet:
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(levelname)s %(name)s: %(message)s",
        stream=stream,
        force=True,
    )


def _spec_from(args: argparse.Namespace) -> CodeSpec:
    return build_spec(
        normalize_family(args.family),
        p=args.p,
        r=args.r,
        message_len=args.message_len,
        global_check=args.global_check,
        set_path=args.set_path,
        wise=args.wise,
        workers=args.workers,
    )


def _stream_lines(
    lines: Iterable[str],
    handle: Callable[[str], str],
    out: TextIO,
    err: TextIO,
    strict: bool,
) -> int:
    """Apply `handle` to every non-blank line; bad lines are reported and skipped unless strict."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            out.write(handle(line) + "\n")
        except DataError as e:
            err.write(f"line {lineno}: {e}\n")
            if strict:
                return e.exit_code
    return 0


def cmd_info(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    out.write(f"{spec.parameters}\n")
    out.write(f"family={spec.family.value} base={spec.base} r={spec.r} label={spec.label}\n")
    for pos in spec.positions:
        out.write(f"{pos.label} {pos.role.value}\n")
    return 0


def cmd_encode(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    codec = codec_for(spec)
    with ExitStack() as stack:
        source = stack.enter_context(open(args.input, encoding="utf-8")) if args.input else stdin
        return _stream_lines(
            source, lambda line: str(codec.encode(parse_message(spec, line))), out, err, _strict(args)
        )


def cmd_decode(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    codec = codec_for(spec)

    def handle(line: str) -> str:
        word = parse(spec, line)
        outcome, repaired = codec.decode(word)
        text = f"{outcome.status} {repaired} {outcome.detail()}"
        if args.show_syndromes:
            text += f" {codec.describe_syndromes(word)}"
        return text

    with ExitStack() as stack:
        source = stack.enter_context(open(args.input, encoding="utf-8")) if args.input else stdin
        return _stream_lines(source, handle, out, err, _strict(args))


def _strict(args) -> bool:
    return args.strict or Config.ECC_STRICT


def _emit(args, out, namespace: str, record: str, document: Dict[str, object]):
    if args.format == "record":
        out.write(record + "\n")
    else:
        out.write(json.dumps(document, indent=2) + "\n")
    if args.append is not None:
        ResultsStore(args.append or None).append_run(namespace, document)


def cmd_mindist(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    w_max = args.max_weight or min(spec.distance, analysis_oracles.MAX_SEARCH_WEIGHT)
    verdict = analysis_oracles.min_distance_column_search(
        analysis_oracles.check_matrix_of(spec), w_max, workers=args.workers
    )
    try:
        enumerated: Optional[int] = analysis_oracles.min_weight_enumeration(spec)
    except DigitEccError as e:
        logger.warning("Skipping enumeration: %s", e)
        enumerated = None
    witness = verdict.witness(spec)
    found = verdict.first_dependency
    if enumerated is not None:
        agree = found == enumerated if found is not None else enumerated > w_max
        if not agree:
            raise DecoderInvariantError(
                f"Distance oracles disagree on {spec.label}: column search {verdict.describe()}, "
                f"enumeration {enumerated}."
            )
    document = {
        "spec": spec.label,
        "column_search": verdict.describe(),
        "enumeration": enumerated,
        "witness": str(witness) if witness is not None else None,
    }
    record = (
        f"spec={spec.label} column_search={verdict.describe()} "
        f"enumeration={enumerated if enumerated is not None else 'skipped'} "
        f"witness={witness if witness is not None else '-'}"
    )
    _emit(args, out, "mindist", record, document)
    return 0


def cmd_sweep(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    codewords = Config.ECC_SWEEP_CODEWORDS if args.codewords is None else args.codewords
    seed = Config.ECC_DEFAULT_SEED if args.seed is None else args.seed
    if codewords < 0:
        raise UsageError(f"Codeword count must not be negative, got {codewords}.")
    report = analysis_oracles.sweep_codewords(spec, args.weight, codewords, seed, samples=args.samples)
    _emit(args, out, "sweep", report.to_record(), report.to_document())
    return 0


def cmd_simulate(args, out, err, stdin) -> int:
    spec = _spec_from(args)
    config = channel_sim.ChannelConfig(
        spec=spec,
        epsilon=args.epsilon,
        trials=args.trials,
        seed=Config.ECC_DEFAULT_SEED if args.seed is None else args.seed,
        forced_weight=args.weight,
        workers=args.workers,
    )
    report = channel_sim.run(config)
    _emit(args, out, "simulate", report.to_record(), report.to_document())
    return 0


def _certify_line(r: int, args) -> str:
    i1, i2 = wxli_sets.certify_family(r, long_running=args.long_running, workers=args.workers)
    return f"r={r} f={wxli_sets.f_value(r)} I1={i1.describe()} I2={i2.describe()}"


def cmd_wxli(args, out, err, stdin) -> int:
    if args.set_path or args.vectors:
        if args.vectors:
            vectors: List[DigitVec] = [DigitVec.parse(text, args.p) for text in args.vectors.split(",")]
        else:
            vectors = load_index_set(args.set_path, args.p)
        if args.k is not None:
            verdict = wxli_sets.is_kwise_independent(vectors, args.k, workers=args.workers)
            out.write(f"k={args.k} {verdict.describe()}\n")
            return 0
        order = wxli_sets.certified_order(vectors, min(4, len(vectors)), workers=args.workers)
        out.write(f"size={len(vectors)} certified_order={order}\n")
        return 0
    if args.max_r is not None:
        for r in range(3, args.max_r + 1):
            out.write(_certify_line(r, args) + "\n")
        return 0
    if args.r is None:
        raise UsageError("wxli needs --r, --max-r, --set or --vectors.")
    if args.certify:
        out.write(_certify_line(args.r, args) + "\n")
        return 0
    family = wxli_sets.build_family(args.r)
    out.write(f"r={family.r} n={family.n} f={family.f_value}\n")
    for vec in family.i1:
        out.write(f"I1 {vec}\n")
    for j, vec in enumerate(family.redundant, start=1):
        out.write(f"R{j} {vec}\n")
    return 0


def cmd_table(args, out, err, stdin) -> int:
    if args.adds:
        spec = prototype_codec.build_prototype_spec(args.p, args.r)
        counter = prototype_codec.AddCounter()
        prototype_codec.compute_syndromes(spec, spec.zero_word(), counter)
        out.write(f"family=prototype p={args.p} r={args.r} N={spec.n_block} checks={args.r + 1} adds={counter.adds}\n")
        return 0
    if args.landscape:
        for name, params in LANDSCAPE:
            spec = build_spec(**params)
            out.write(f"{name} {spec.parameters} rate={spec.k_msg / spec.n_block:.3f}\n")
        return 0
    out.write("r f block msg rate\n")
    for r in TABLE_R:
        f = wxli_sets.f_value(r)
        block, msg = 2 * f + 2, 2 * f - r
        out.write(f"{r} {f} {block} {msg} {msg / block:.3f}\n")
    return 0


COMMANDS = {
    "info": cmd_info,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "mindist": cmd_mindist,
    "sweep": cmd_sweep,
    "simulate": cmd_simulate,
    "wxli": cmd_wxli,
    "table": cmd_table,
}


def main(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    configure_logging(args, stderr)
    logger.debug("Running %s with %d worker(s)", args.command, resolve_workers(args.workers))
    try:
        with ExitStack() as stack:
            out = stack.enter_context(open(args.output, "w", encoding="utf-8")) if args.output else stdout
            return COMMANDS[args.command](args, out, stderr, stdin)
    except DecoderInvariantError as e:
        stderr.write(f"internal error: {e}\n")
        return e.exit_code
    except DigitEccError as e:
        stderr.write(f"error: {e}\n")
        return e.exit_code
    except OSError as e:
        stderr.write(f"error: {e}\n")
        return DataError.exit_code
