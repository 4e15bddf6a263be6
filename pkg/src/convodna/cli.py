"""``convodna`` command line.

Exit status: 0 ok, 1 checks found violations, 2 usage error, 3 bad input
data, 4 domain error (unsupported parameters, catastrophic code, or a
``--strict`` decode that produced ``*``).
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .analysis import free_distance, is_catastrophic, max_correctable, tau
from .channel import ChannelConfig, default_tau, run_experiment
from .codon import codon_bits, codon_to_amino, split_codons, transcribe
from .convcode import (CodeSpec, build_state_diagram, encode_poly, encode_register, encode_walk,
                       interleave)
from .decode import exhaustive_decode, viterbi_general
from .dna import (check_forbidden, check_gc, check_hd, check_rc, check_reverse, check_uncorrelated,
                  parse_dna, read_code_set)
from .dnamodel import CSV_HEADER, ModelConfig, RecordError, analyze_fasta, default_config, revised_config
from .errors import ConvodnaError, DomainError
from .gf2poly import bits_str, to_bits

CONSTRAINTS = ("hd", "reverse", "rc", "gc", "forbidden", "uncorrelated")


def _groups(bits, n):
    return ",".join(bits_str(bits[i:i + n]) for i in range(0, len(bits), n))


def _code(args) -> CodeSpec:
    return CodeSpec.from_strings(args.code, args.gens)


def _add_code(p):
    p.add_argument("--code", required=True, metavar="N,K,M")
    p.add_argument("--gens", required=True, metavar="G1,G2,...",
                   help="generators as little-endian bit strings or 1+x^2 forms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convodna", allow_abbrev=False,
                                     description="Convolutional codes and DNA code tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", allow_abbrev=False, help="encode a message")
    _add_code(p)
    p.add_argument("--message", required=True)
    p.add_argument("--mode", choices=("poly", "register", "walk"), default="register")
    p.add_argument("--interleave", action="store_true",
                   help="poly mode: print tick groups instead of one line per component")
    p.add_argument("--ticks", type=int, help="register/poly: ticks to emit (default flushes)")

    p = sub.add_parser("decode", allow_abbrev=False, help="decode a received word")
    _add_code(p)
    p.add_argument("--algo", choices=("exhaustive", "viterbi"), default="viterbi")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--received", required=True, help="comma-separated n-bit groups")
    p.add_argument("--digits", type=int, help="input words to decode (default: one per tick)")
    p.add_argument("--tie", choices=("merge", "first"), default="merge")
    p.add_argument("--strict", action="store_true", help="exit 4 if any * is emitted")

    p = sub.add_parser("analyze", allow_abbrev=False, help="free distance, catastrophic flag, tau(e)")
    _add_code(p)

    p = sub.add_parser("state-diagram", allow_abbrev=False, help="state diagram as DOT")
    _add_code(p)

    p = sub.add_parser("channel", allow_abbrev=False, help="decoding experiment over a noisy channel")
    _add_code(p)
    p.add_argument("--decoder", choices=("exhaustive", "viterbi"), default="viterbi")
    p.add_argument("--tau", type=int)
    p.add_argument("--kind", choices=("bsc", "burst-guard"), default="bsc")
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--burst-weight", type=int, default=1)
    p.add_argument("--burst-len", type=int, default=1)
    p.add_argument("--guard-len", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--message-len", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dna-check", allow_abbrev=False, help="check DNA codeword-set constraints")
    p.add_argument("--set", required=True, type=Path, dest="set_file")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--constraints", default="hd,reverse,rc,gc")
    p.add_argument("--motifs", type=Path)
    p.add_argument("--gc-weight", type=int)

    p = sub.add_parser("codon", allow_abbrev=False, help="codon indices and amino acids")
    p.add_argument("--input", required=True)
    p.add_argument("--emit", choices=("index", "amino", "both"), default="both")

    p = sub.add_parser("dna-cacd", allow_abbrev=False, help="CACD and GC content per FASTA record")
    p.add_argument("--fasta", required=True, type=Path)
    p.add_argument("--config", default="default", help="default, revised, or a JSON file")
    p.add_argument("--frame", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--out", type=Path)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "encode" and args.mode == "poly":
        k = args.code.split(",")[1:2]
        if k and k[0].strip() != "1":
            parser.error("--mode poly needs k = 1; use --mode register")
    if args.command == "dna-check":
        unknown = set(args.constraints.split(",")) - set(CONSTRAINTS)
        if unknown:
            parser.error(f"--constraints: unknown {', '.join(sorted(unknown))}")
        if "forbidden" in args.constraints.split(",") and args.motifs is None:
            parser.error("--constraints forbidden needs --motifs")
    return args


def _effective(args) -> str:
    cfg = {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items())}
    return "# convodna " + json.dumps(cfg, sort_keys=True)


def cmd_encode(args, out):
    code = _code(args)
    msg = to_bits(args.message)
    if args.mode == "walk":
        out.write(_groups(encode_walk(build_state_diagram(code), msg), code.n) + "\n")
    elif args.mode == "poly":
        cw = encode_poly(code, "".join(map(str, msg)) or "0")
        ticks = args.ticks if args.ticks is not None else len(msg) + code.m
        if args.interleave:
            out.write(_groups(interleave(cw, ticks), code.n) + "\n")
        else:
            for c in cw.components:
                out.write(str(c) + "\n")
    else:
        groups = encode_register(code, msg, args.ticks)
        out.write(",".join(bits_str(g) for g in groups) + "\n")
    return 0


def cmd_decode(args, out):
    code = _code(args)
    if args.algo == "exhaustive":
        word = exhaustive_decode(code, args.received, args.tau, args.digits)
    else:
        word = viterbi_general(code, args.received, args.tau, args.digits, args.tie)
    out.write(str(word) + "\n")
    if word.padded_ticks:
        logging.getLogger("convodna").info("zero-padded %d tick(s)", word.padded_ticks)
    return 4 if args.strict and word.erasures else 0


def cmd_analyze(args, out):
    code = _code(args)
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    w.writerow(("metric", "value"))
    w.writerow(("code", code.label()))
    cat = is_catastrophic(code)
    w.writerow(("catastrophic", str(cat).lower()))
    if cat:
        raise DomainError("catastrophic code: free distance and tau(e) are undefined")
    d = free_distance(code)
    w.writerow(("free_distance", d))
    for e in range(1, max_correctable(d) + 1):
        w.writerow((f"tau({e})", tau(code, e)))
    return 0


def cmd_state_diagram(args, out):
    out.write(build_state_diagram(_code(args)).to_dot())
    return 0


def cmd_channel(args, out):
    code = _code(args)
    cfg = ChannelConfig(args.kind, args.p, args.burst_weight, args.burst_len, args.guard_len, args.seed)
    t = args.tau if args.tau is not None else default_tau(code, args.decoder)
    report = run_experiment(code, args.decoder, cfg, args.trials, args.message_len, t)
    out.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    return 0


def cmd_dna_check(args, out):
    with open(args.set_file, encoding="utf-8") as fh:
        code = read_code_set(fh, args.d)
    motifs = []
    if args.motifs is not None:
        with open(args.motifs, encoding="utf-8") as fh:
            motifs = [m.split("#", 1)[0].strip() for m in fh]
            motifs = [parse_dna(m, line=i) for i, m in enumerate(motifs, 1) if m]
    checks = {
        "hd": lambda: check_hd(code, args.d),
        "reverse": lambda: check_reverse(code, args.d),
        "rc": lambda: check_rc(code, args.d),
        "gc": lambda: check_gc(code, args.gc_weight),
        "forbidden": lambda: check_forbidden(code, motifs),
        "uncorrelated": lambda: check_uncorrelated(code),
    }
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    w.writerow(("constraint", "status", "subject", "value", "bound"))
    failed = False
    for name in args.constraints.split(","):
        report = checks[name]()
        failed |= not report.satisfied
        w.writerows(report.to_rows())
    return 1 if failed else 0


def cmd_codon(args, out):
    rna = transcribe(args.input.strip())
    codons, rest = split_codons(rna)
    w = csv.writer(out, delimiter="\t", lineterminator="\n")
    header = ["codon"] + (["index"] if args.emit in ("index", "both") else []) \
        + (["amino"] if args.emit in ("amino", "both") else [])
    w.writerow(header)
    for c in codons:
        row = [c]
        if args.emit in ("index", "both"):
            row.append(codon_bits(c))
        if args.emit in ("amino", "both"):
            row.append(codon_to_amino(c))
        w.writerow(row)
    return 0


def _model_config(spec: str) -> ModelConfig:
    if spec == "default":
        return default_config()
    if spec == "revised":
        return revised_config()
    return ModelConfig.from_json(Path(spec).read_text(encoding="utf-8"))


def cmd_dna_cacd(args, out):
    cfg = _model_config(args.config)
    results = analyze_fasta(args.fasta, cfg, args.frame)
    sink = open(args.out, "w", encoding="utf-8", newline="") if args.out else out
    status = 0
    try:
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in results:
            if isinstance(r, RecordError):
                print(f"convodna: record {r.record_id}: {r.message}", file=sys.stderr)
                status = 3
                continue
            w.writerow((r.record_id, r.length, f"{r.gc_content:.6f}", f"{r.cacd:.6f}", r.block_count))
    finally:
        if args.out:
            sink.close()
    return status


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "analyze": cmd_analyze,
    "state-diagram": cmd_state_diagram,
    "channel": cmd_channel,
    "dna-check": cmd_dna_check,
    "codon": cmd_codon,
    "dna-cacd": cmd_dna_cacd,
}


def run(args, out=None) -> int:
    out = out or sys.stdout
    print(_effective(args), file=sys.stderr)
    try:
        return COMMANDS[args.command](args, out)
    except ConvodnaError as exc:
        print(f"convodna: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"convodna: error: {exc}", file=sys.stderr)
        return 3


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="convodna: %(levelname)s: %(message)s", force=True)
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
