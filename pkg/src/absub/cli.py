"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input or corrupt stream,
3 verification mismatch.

Incremental streams use a line format that a later `replay` invocation can
decode without re-running the enumeration:

    v=1 kind=<sas|mas-skeleton|mas-direct> alphabet=<bytes|ints> word=<word>
    I <first output>
    E <keep> <segment> <segment> ...

Segments are `e,<node>,<node>` (single edge), `d,<node>,<node>` (forced
chain between two nodes) and `l,<letter>` (literal final letter); nodes are
`s`, `f`, a position, or a pair `i.j`.  The word stays last on the header
line because it may contain spaces in ints mode.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as bench_mod
from . import classify, mas_direct, mas_skeleton, oracle, sas
from .errors import AbsubError, TooLarge
from .string_index import build_index, build_word
from .longest_mas import longest_mas, longest_mas_length
from .skeleton import DefaultPath, Edge, EditScript, FinalLetter


class UsageError(Exception):
    pass


class VerifyMismatch(Exception):
    pass


class StreamError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="absub", description="shortest and minimal absent subsequences")
    p.add_argument("--alphabet", choices=("bytes", "ints"), default="bytes",
                   help="bytes: each character is a symbol; ints: whitespace separated integers")
    p.add_argument("--format", dest="fmt", choices=("text", "structured"), default="text")
    p.add_argument("--verify", action="store_true",
                   help="cross-check results against slow reference code where feasible")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("arches", help="arch factorization and universality index")
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")

    sp = sub.add_parser("universality", help="universality index only")
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")

    sp = sub.add_parser("check", help="membership tests for a pattern")
    sp.add_argument("--kind", required=True,
                    choices=("subsequence", "sas", "mas", "mas-prefix"))
    sp.add_argument("--pattern", required=True)
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")

    sp = sub.add_parser("sas", help="shortest absent subsequences")
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true")
    group.add_argument("--incremental", action="store_true")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--engine", choices=("skeleton",), default="skeleton")

    sp = sub.add_parser("mas", help="minimal absent subsequences")
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true")
    group.add_argument("--incremental", action="store_true")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--engine", choices=("direct", "skeleton"), default="direct")

    sp = sub.add_parser("longest-mas", help="one longest minimal absent subsequence")
    sp.add_argument("file", nargs="?", default=None,
                    help="file holding the word (default: standard input)")
    sp.add_argument("--length-only", action="store_true")

    sp = sub.add_parser("replay", help="decode an incremental stream from stdin or a file")
    sp.add_argument("file", nargs="?", default=None)

    sp = sub.add_parser("bench", help="delay and scaling measurements (TSV, optional figures)")
    sp.add_argument("--sizes", default="1000,10000,100000",
                    help="comma separated word lengths")
    sp.add_argument("--sigmas", default="2,16", help="comma separated alphabet sizes")
    sp.add_argument("--outputs", type=int, default=2000,
                    help="outputs sampled per enumerator run")
    sp.add_argument("--seed", type=int, default=20240801)
    sp.add_argument("--out", default=None, help="TSV destination (default stdout)")
    sp.add_argument("--figures", default=None, metavar="DIR",
                    help="also render PNG figures into this directory")
    return p


def _node_str(node) -> str:
    if isinstance(node, tuple):
        return f"{node[0]}.{node[1]}"
    return str(node)


def _node_parse(text: str):
    if text in ("s", "f"):
        return text
    if "." in text:
        i, j = text.split(".", 1)
        return int(i), int(j)
    return int(text)


def _script_line(script: EditScript) -> str:
    parts = [f"E {script.keep}"]
    for seg in script.segments:
        if isinstance(seg, Edge):
            parts.append(f"e,{_node_str(seg.src)},{_node_str(seg.dst)}")
        elif isinstance(seg, DefaultPath):
            parts.append(f"d,{_node_str(seg.src)},{_node_str(seg.dst)}")
        else:
            parts.append(f"l,{seg.letter}")
    return " ".join(parts)


def _parse_script(line: str) -> EditScript:
    fields = line.split()
    if len(fields) < 2 or fields[0] != "E":
        raise StreamError(f"malformed record: {line!r}")
    try:
        keep = int(fields[1])
        segments = []
        for field in fields[2:]:
            tag, _, rest = field.partition(",")
            if tag == "e":
                a, b = rest.split(",")
                segments.append(Edge(_node_parse(a), _node_parse(b)))
            elif tag == "d":
                a, b = rest.split(",")
                segments.append(DefaultPath(_node_parse(a), _node_parse(b)))
            elif tag == "l":
                segments.append(FinalLetter(int(rest)))
            else:
                raise ValueError(tag)
    except ValueError as exc:
        raise StreamError(f"malformed record: {line!r}") from exc
    return EditScript(keep, None, tuple(segments))


def _header(kind: str, args, word) -> str:
    return f"v=1 kind={kind} alphabet={args.alphabet} word={word.render()}"


def _read_word(args):
    """One word per invocation, from the file argument or standard input."""
    if args.file is None or args.file == "-":
        stream = sys.stdin
        data = stream.buffer.read() if hasattr(stream, "buffer") else stream.read()
    else:
        with open(args.file, "rb") as fh:
            data = fh.read()
    if args.alphabet == "ints":
        if isinstance(data, bytes):
            data = data.decode("ascii")
        return build_word(data, "ints")
    # bytes mode: every byte is a letter, so only the line ending is dropped
    if isinstance(data, bytes):
        return build_word(data.rstrip(b"\r\n"), "bytes")
    return build_word(data.rstrip("\r\n"), "bytes")


def _pattern_letters(text: str, word, mode: str):
    if mode == "bytes":
        return tuple(word.letter_of(ch) for ch in text)
    return tuple(word.letter_of(int(tok)) for tok in text.split())


def _cmd_arches(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    segments = []
    for ell in range(1, idx.arches.iota + 1):
        lo, hi = idx.arches.arch_bounds(ell)
        segments.append(word.render(word.letters[lo - 1:hi]))
    if idx.arches.rest_start <= idx.n:
        segments.append(word.render(word.letters[idx.arches.rest_start - 1:]))
    rendered = "|".join(segments)
    if args.verify:
        _verify_iota(idx)
    if args.fmt == "structured":
        print(_header("arches", args, word), file=out)
        print(f"R {rendered}", file=out)
        print(f"U {idx.arches.iota}", file=out)
    else:
        print(rendered, file=out)
        print(f"iota={idx.arches.iota}", file=out)
    return 0


def _cmd_universality(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    if args.verify:
        _verify_iota(idx)
    if args.fmt == "structured":
        print(_header("universality", args, word), file=out)
        print(f"U {idx.arches.iota}", file=out)
    else:
        print(idx.arches.iota, file=out)
    return 0


def _verify_iota(idx):
    try:
        want = oracle.brute_iota(idx.word.letters, idx.sigma)
    except TooLarge:
        print("verify: skipped (input beyond oracle guard)", file=sys.stderr)
        return
    if want != idx.arches.iota:
        raise VerifyMismatch(f"universality index {idx.arches.iota}, oracle says {want}")


def _cmd_check(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    pattern = _pattern_letters(args.pattern, word, args.alphabet)
    if args.kind == "subsequence":
        got = classify.is_subsequence(pattern, idx)
        naive = lambda: oracle.is_subsequence_naive(pattern, word.letters)
    elif args.kind == "sas":
        got = classify.is_sas(pattern, idx)
        naive = lambda: oracle.is_sas_naive(pattern, word.letters, idx.sigma)
    elif args.kind == "mas":
        got = classify.is_mas(pattern, idx)
        naive = lambda: oracle.is_mas_naive(pattern, word.letters)
    else:
        got = classify.is_mas_prefix(pattern, idx)
        naive = lambda: oracle.is_mas_prefix_naive(pattern, word.letters, idx.sigma)
    if args.verify:
        try:
            want = naive()
            if want != got:
                raise VerifyMismatch(f"{args.kind}: fast path {got}, oracle {want}")
        except TooLarge:
            print("verify: skipped (input beyond oracle guard)", file=sys.stderr)
    value = "true" if got else "false"
    if args.fmt == "structured":
        print(_header("check", args, word), file=out)
        print(f"B {value}", file=out)
    else:
        print(value, file=out)
    return 0


def _emit_words(kind, args, idx, words, out):
    shown = 0
    seen = set() if args.verify else None
    if args.fmt == "structured":
        print(_header(kind, args, idx.word), file=out)
    for letters in words:
        if args.verify:
            _verify_word(kind, idx, letters, seen)
        rendered = idx.word.render(letters)
        print(f"W {rendered}" if args.fmt == "structured" else rendered, file=out)
        shown += 1
        if args.limit is not None and shown >= args.limit:
            break
    return 0


def _verify_word(kind, idx, letters, seen):
    if letters in seen:
        raise VerifyMismatch(f"duplicate output {letters}")
    seen.add(letters)
    w = idx.word.letters
    if kind == "sas":
        if len(letters) != idx.arches.iota + 1 or oracle.is_subsequence_naive(letters, w):
            raise VerifyMismatch(f"{letters} is not a shortest absent subsequence")
    else:
        if not oracle.is_mas_naive(letters, w):
            raise VerifyMismatch(f"{letters} is not a minimal absent subsequence")


def _cmd_sas(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    dag = sas.build_sas_skeleton(idx)
    if args.count:
        value = sas.count_sas(idx, dag)
        if args.verify:
            _verify_count("sas", idx, value)
        if args.fmt == "structured":
            print(_header("sas", args, word), file=out)
            print(f"C {value}", file=out)
        else:
            print(value, file=out)
        return 0
    if args.incremental:
        return _run_stream("sas", args, idx,
                           sas.enumerate_sas_incremental(idx, dag),
                           lambda scripts: sas.replay_sas(idx, scripts, dag), out)
    return _emit_words("sas", args, idx, sas.enumerate_sas(idx, dag), out)


def _cmd_mas(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    if args.count:
        value = mas_skeleton.count_mas(idx)
        if args.verify:
            _verify_count("mas", idx, value)
        if args.fmt == "structured":
            print(_header("mas", args, word), file=out)
            print(f"C {value}", file=out)
        else:
            print(value, file=out)
        return 0
    if args.incremental:
        if args.engine == "direct":
            return _run_stream("mas-direct", args, idx,
                               mas_direct.enumerate_mas_incremental(idx),
                               lambda scripts: mas_direct.replay_mas(idx, scripts), out)
        dag = mas_skeleton.build_mas_skeleton(idx)
        return _run_stream("mas-skeleton", args, idx,
                           mas_skeleton.enumerate_mas_via_skeleton_incremental(idx, dag),
                           lambda scripts: mas_skeleton.replay_mas_via_skeleton(idx, scripts, dag),
                           out)
    if args.engine == "direct":
        words = mas_direct.enumerate_mas(idx)
    else:
        words = mas_skeleton.enumerate_mas_via_skeleton(idx)
    return _emit_words("mas", args, idx, words, out)


def _verify_count(kind, idx, value):
    letters = idx.word.letters
    try:
        if kind == "sas":
            want = oracle.brute_sas_count(letters, idx.sigma)
        else:
            want = len(oracle.brute_mas(letters, idx.sigma))
    except TooLarge:
        print("verify: skipped (input beyond oracle guard)", file=sys.stderr)
        return
    if want != value:
        raise VerifyMismatch(f"{kind} count {value}, oracle says {want}")


def _run_stream(kind, args, idx, scripts, replayer, out) -> int:
    print(_header(kind, args, idx.word), file=out)
    emitted = 0
    limit = args.limit

    # replaying our own scripts as we emit them recovers the first output for
    # the integrity anchor without a second enumeration pass; the replayer
    # yields exactly one output per script, so the queue never runs dry
    script_queue: list[EditScript] = []

    def feeder():
        while script_queue:
            yield script_queue.pop(0)

    replay_gen = replayer(feeder())
    for script in scripts:
        script_queue.append(script)
        word_letters = next(replay_gen)
        if emitted == 0:
            print(f"I {idx.word.render(word_letters)}", file=out)
        print(_script_line(script), file=out)
        emitted += 1
        if limit is not None and emitted >= limit:
            break
    return 0


def _cmd_longest(args, out) -> int:
    word = _read_word(args)
    idx = build_index(word)
    if args.length_only:
        value = longest_mas_length(idx)
        if args.verify:
            _verify_longest(idx, value, None)
        if args.fmt == "structured":
            print(_header("longest-mas", args, word), file=out)
            print(f"L {value}", file=out)
        else:
            print(value, file=out)
        return 0
    witness = longest_mas(idx)
    if args.verify:
        _verify_longest(idx, len(witness), witness)
    if args.fmt == "structured":
        print(_header("longest-mas", args, word), file=out)
        print(f"W {idx.word.render(witness)}", file=out)
    else:
        print(idx.word.render(witness), file=out)
    return 0


def _verify_longest(idx, value, witness):
    letters = idx.word.letters
    if witness is not None and not oracle.is_mas_naive(witness, letters):
        raise VerifyMismatch(f"witness {witness} is not a minimal absent subsequence")
    try:
        want = oracle.brute_longest_mas(letters, idx.sigma)
    except TooLarge:
        print("verify: skipped (input beyond oracle guard)", file=sys.stderr)
        return
    if want != value:
        raise VerifyMismatch(f"longest length {value}, oracle says {want}")


def _cmd_replay(args, out) -> int:
    if args.file is None:
        lines = sys.stdin
    else:
        lines = open(args.file, "r", encoding="utf-8")
    try:
        header = None
        for raw in lines:
            header = raw.rstrip("\n")
            break
        if header is None:
            raise StreamError("empty stream")
        fields = header.split(" ", 3)
        if len(fields) != 4 or fields[0] != "v=1":
            raise StreamError(f"unsupported header: {header!r}")
        kind = fields[1].removeprefix("kind=")
        mode = fields[2].removeprefix("alphabet=")
        word_text = fields[3].removeprefix("word=")
        if fields[1] == kind or fields[2] == mode or fields[3] == word_text:
            raise StreamError(f"unsupported header: {header!r}")
        if kind not in ("sas", "mas-skeleton", "mas-direct") or mode not in ("bytes", "ints"):
            raise StreamError(f"unsupported header: {header!r}")
        word = build_word(word_text, mode)
        idx = build_index(word)

        anchor = [None]

        def scripts():
            for raw_line in lines:
                line = raw_line.rstrip("\n")
                if not line:
                    continue
                if line.startswith("I "):
                    anchor[0] = line[2:]
                    continue
                yield _parse_script(line)

        if kind == "sas":
            outputs = sas.replay_sas(idx, scripts())
        elif kind == "mas-skeleton":
            outputs = mas_skeleton.replay_mas_via_skeleton(idx, scripts())
        else:
            outputs = mas_direct.replay_mas(idx, scripts())
        first = True
        for letters in outputs:
            rendered = idx.word.render(letters)
            if first:
                first = False
                if anchor[0] is not None and anchor[0] != rendered:
                    raise StreamError(
                        f"stream anchor {anchor[0]!r} disagrees with {rendered!r}")
            print(rendered, file=out)
        return 0
    finally:
        if args.file is not None:
            lines.close()


def _dispatch(args, out) -> int:
    if args.command == "arches":
        return _cmd_arches(args, out)
    if args.command == "universality":
        return _cmd_universality(args, out)
    if args.command == "check":
        return _cmd_check(args, out)
    if args.command == "sas":
        return _cmd_sas(args, out)
    if args.command == "mas":
        return _cmd_mas(args, out)
    if args.command == "longest-mas":
        return _cmd_longest(args, out)
    if args.command == "replay":
        return _cmd_replay(args, out)
    if args.command == "bench":
        return bench_mod.run(args, out)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _dispatch(args, out)
    except VerifyMismatch as exc:
        print(f"verify mismatch: {exc}", file=sys.stderr)
        return 3
    except StreamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AbsubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # keep the interpreter from complaining again at shutdown flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
