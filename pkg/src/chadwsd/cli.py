"""Command-line entry point.

    chadwsd --command disambiguate --lexicon lex.txt --corpus br-a01.tsv --out tags.txt
    chadwsd --command evaluate --lexicon lex.txt --corpus a.tsv --corpus b.tsv \\
            --pos n --out table.tsv --trace
    chadwsd --command translate --lexicon lex.txt --bilingual ro-en.txt \\
            --corpus text.txt
    chadwsd --command baseline --lexicon lex.txt --corpus br-a01.tsv

Exit status: 0 ok, 2 usage error or missing file, 3 input format error,
4 assignment/gold alignment error. Errors print one line to stderr,
``chadwsd:error:<kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import evaluator
from .disambiguator import run_chain
from .errors import AlignmentError, FormatError
from .lexicon import (format_pos_filter, load_corpus_sentences,
                      load_lexicon, load_stem_table, load_stoplist,
                      normalize_word, parse_pos_filter, StemTable)
from .measures import MeasureKind
from .translator import load_bilingual, render_choices, translate_sentence

COMMANDS = ("disambiguate", "evaluate", "translate", "baseline")
EXIT_USAGE = 2
EXIT_IO = 2
EXIT_FORMAT = 3
EXIT_ALIGN = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"chadwsd:error:usage: {message}\n")


def build_parser():
    p = _Parser(
        prog="chadwsd",
        description="Dictionary-based word sense disambiguation (CHAD chain).")
    p.add_argument("--command", required=True, choices=COMMANDS)
    p.add_argument("--lexicon", help="sense inventory file")
    p.add_argument("--stems", help="word<TAB>stem table")
    p.add_argument("--corpus", action="append", default=[],
                   help="tagged corpus (repeatable); plain text for translate")
    p.add_argument("--bilingual", help="source<TAB>cand:pos,... file (translate)")
    p.add_argument("--measure", default="overlap",
                   choices=[m.value for m in MeasureKind])
    p.add_argument("--pos", default="n,v,a,adv",
                   help="comma list of n, v, a, adv (default: %(default)s)")
    p.add_argument("--stoplist", help="drop these words from glosses")
    p.add_argument("--scope", default="document", choices=("document", "sentence"),
                   help="run one chain per file or restart it per sentence")
    p.add_argument("--include-unknown", action="store_true",
                   help="count words missing from the lexicon as errors")
    p.add_argument("--trace", action="store_true",
                   help="also write the running precision trace (evaluate)")
    p.add_argument("--trace-out", help="trace path (default: derived from --out)")
    p.add_argument("--json", dest="json_out", help="structured output path")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _check(args):
    if not args.lexicon:
        raise UsageError("--lexicon is required")
    if not args.corpus:
        raise UsageError("--corpus is required")
    if args.command == "translate":
        if not args.bilingual:
            raise UsageError("--bilingual is required for translate")
        if len(args.corpus) != 1:
            raise UsageError("translate takes exactly one --corpus")
    elif args.bilingual:
        raise UsageError("--bilingual only applies to translate")
    if args.command in ("disambiguate", "baseline") and len(args.corpus) != 1:
        raise UsageError(f"{args.command} takes exactly one --corpus")
    if args.trace and args.command != "evaluate":
        raise UsageError("--trace only applies to evaluate")
    if args.trace and not (args.out or args.trace_out):
        raise UsageError("--trace needs --out or --trace-out")
    if args.trace_out and len(args.corpus) > 1:
        raise UsageError("--trace-out needs a single --corpus")
    try:
        pos = parse_pos_filter(args.pos)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return pos, MeasureKind.parse(args.measure)


def _write_text(path, text):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _label(path) -> str:
    return Path(path).stem


def _trace_path(args, label):
    if args.trace_out:
        return Path(args.trace_out)
    out = Path(args.out)
    if len(args.corpus) == 1:
        return out.with_name(out.stem + ".trace.tsv")
    return out.with_name(f"{out.stem}.{label}.trace.tsv")


def _load_resources(args):
    table = load_stem_table(args.stems) if args.stems else StemTable()
    stoplist = load_stoplist(args.stoplist) if args.stoplist else frozenset()
    lexicon = load_lexicon(args.lexicon, table, bool(stoplist), stoplist)
    return table, lexicon


def _cmd_tag(args, pos, measure, table, lexicon, baseline):
    sentences = load_corpus_sentences(args.corpus[0], table)
    result = run_chain(sentences, lexicon, measure, pos, args.scope, baseline)
    _write_text(args.out, "".join(" ".join(a.tag() for a in s) + "\n" for s in result))
    if args.json_out:
        lines = [json.dumps({"sentence": i, "tokens": [a.to_dict() for a in s]},
                            sort_keys=True) for i, s in enumerate(result)]
        Path(args.json_out).write_text("".join(l + "\n" for l in lines),
                                       encoding="utf-8")


def _cmd_evaluate(args, pos, measure, table, lexicon):
    reports = []
    for path in args.corpus:
        label = _label(path)
        sentences = load_corpus_sentences(path, table)
        gold, runs = evaluator.run_all_measures(sentences, lexicon, pos, args.scope)
        reports.append(evaluator.report_from_runs(
            gold, runs, pos, label, measure, args.include_unknown))
        if args.trace:
            points = evaluator.progress_trace(runs[measure], gold, pos,
                                              args.include_unknown)
            evaluator.write_trace_tsv(points, _trace_path(args, label))
    reports = evaluator.sort_reports(reports)
    if args.out:
        evaluator.write_report_tsv(reports, args.out)
    else:
        sys.stdout.write("".join("\t".join(r) + "\n"
                                 for r in evaluator.report_rows(reports)))
    if args.json_out:
        evaluator.write_report_json(reports, args.json_out)


def _cmd_translate(args, measure, lexicon):
    bi = load_bilingual(args.bilingual)
    text = Path(args.corpus[0]).read_text(encoding="utf-8")
    out, structured = [], []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        words = [w for w in (normalize_word(t) for t in line.split()) if w]
        choices = translate_sentence(words, bi, lexicon, measure)
        out.append(render_choices(choices) + "\n")
        structured.append([c.to_dict() for c in choices])
    _write_text(args.out, "".join(out))
    if args.json_out:
        Path(args.json_out).write_text(
            "".join(json.dumps(s, sort_keys=True) + "\n" for s in structured),
            encoding="utf-8")


def run(args) -> int:
    pos, measure = _check(args)
    table, lexicon = _load_resources(args)
    logging.getLogger(__name__).info(
        "%s: %d lexemes, pos=%s, measure=%s", args.command, len(lexicon),
        format_pos_filter(pos), measure)
    if args.command == "disambiguate":
        _cmd_tag(args, pos, measure, table, lexicon, baseline=False)
    elif args.command == "baseline":
        _cmd_tag(args, pos, measure, table, lexicon, baseline=True)
    elif args.command == "evaluate":
        _cmd_evaluate(args, pos, measure, table, lexicon)
    else:
        _cmd_translate(args, measure, lexicon)
    return 0


def _fail(kind, message, status):
    print(f"chadwsd:error:{kind}: {message}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return run(args)
    except UsageError as e:
        return _fail("usage", e, EXIT_USAGE)
    except FormatError as e:
        return _fail("format", e, EXIT_FORMAT)
    except AlignmentError as e:
        return _fail("alignment", e, EXIT_ALIGN)
    except OSError as e:
        return _fail("io", f"{e.filename}: {e.strerror}", EXIT_IO)


if __name__ == "__main__":
    sys.exit(main())
