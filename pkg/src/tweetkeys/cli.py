"""Command-line entry point.

Subcommands: tokenize, tag, extract, corpus check, eval, serve.  Input is one
tweet per line from a file argument or standard input.  Exit codes: 0 on
success, 1 on malformed flags, 2 on resource/dataset failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import defaults
from .corpora import CorpusError, CorpusStore, load_corpus
from .evaluation import EvalScores, average_scores, round2, score
from .lemmatizer import LemmaRules
from .model import CorpusKind, Mode
from .ner import Gazetteer, GazetteerError
from .pipeline import PipelineConfig, extract, to_json_dict
from .tagger import TagLexicon, tag
from .tokenizer import tokenize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; flags errors are 1 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class ResourceFailure(Exception):
    pass


def _add_resource_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", metavar="PATH", help="tagger lexicon file")
    parser.add_argument("--lemma", metavar="PATH", help="lemmatizer rules file")
    parser.add_argument("--gazetteer", metavar="PATH", help="entity gazetteer file")
    parser.add_argument("--dsk", metavar="PATH", help="domain keyword corpus")
    parser.add_argument("--reject", metavar="PATH", help="reject-word corpus")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tweetkeys", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_tok = sub.add_parser("tokenize", help="print token surfaces, one per line")
    p_tok.add_argument("input", nargs="?", help="file with one tweet per line (default: stdin)")

    p_tag = sub.add_parser("tag", help="print surface<TAB>TAG lines per tweet")
    p_tag.add_argument("input", nargs="?")
    _add_resource_flags(p_tag)

    p_ext = sub.add_parser("extract", help="extract keywords per tweet")
    p_ext.add_argument("input", nargs="?")
    p_ext.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STAGE2.value)
    p_ext.add_argument("--format", choices=["json", "table"], default="json")
    p_ext.add_argument("--trace", action="store_true", help="include the per-stage trace")
    _add_resource_flags(p_ext)

    p_corpus = sub.add_parser("corpus", help="corpus utilities")
    corpus_sub = p_corpus.add_subparsers(dest="corpus_command", required=True)
    p_check = corpus_sub.add_parser("check", help="validate a corpus file")
    p_check.add_argument("path")
    p_check.add_argument("--kind", choices=["dsk", "reject"], default="dsk")

    p_eval = sub.add_parser("eval", help="score extraction against human keyword sets")
    p_eval.add_argument("dataset", help='JSON array of {"tweet", "human", "human2"?}')
    p_eval.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STAGE2.value)
    p_eval.add_argument("--format", choices=["json", "table"], default="table")
    _add_resource_flags(p_eval)

    p_serve = sub.add_parser("serve", help="run the judgment-session HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--sessions-dir", default="sessions")
    p_serve.add_argument("--ui", metavar="DIR", help="static UI directory to serve at /")

    return parser


def _read_tweets(source: str | None) -> list[str]:
    if source:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise ResourceFailure(f"cannot read input: {e}") from e
    else:
        text = sys.stdin.read()
    return [line for line in text.splitlines() if line.strip()]


def _build_config(args, mode: Mode, keep_trace: bool = False) -> PipelineConfig:
    try:
        lexicon = TagLexicon.load(args.lexicon) if args.lexicon else defaults.default_lexicon()
        rules = LemmaRules.load(args.lemma) if args.lemma else defaults.default_rules()
        gazetteer = (
            Gazetteer.load(args.gazetteer) if args.gazetteer else defaults.default_gazetteer()
        )
        if args.dsk or args.reject:
            dsk = (
                load_corpus(args.dsk, CorpusKind.DSK)
                if args.dsk
                else defaults.default_store().dsk
            )
            reject = (
                load_corpus(args.reject, CorpusKind.REJECT)
                if args.reject
                else defaults.default_store().reject
            )
            store = CorpusStore(dsk=dsk, reject=reject)
        else:
            store = defaults.default_store()
    except (OSError, ValueError) as e:
        raise ResourceFailure(str(e)) from e
    return PipelineConfig(
        mode=mode,
        store=store,
        lexicon=lexicon,
        rules=rules,
        gazetteer=gazetteer,
        keep_trace=keep_trace,
    )


def _cmd_tokenize(args) -> int:
    for i, tweet in enumerate(_read_tweets(args.input)):
        if i:
            print()
        for token in tokenize(tweet):
            print(token.surface)
    return EXIT_OK


def _cmd_tag(args) -> int:
    config = _build_config(args, Mode.STAGE2)
    for i, tweet in enumerate(_read_tweets(args.input)):
        if i:
            print()
        for tagged in tag(tokenize(tweet), config.lexicon):
            print(f"{tagged.surface}\t{tagged.tag.code}")
    return EXIT_OK


def _extract_table(result: dict) -> str:
    lines = [f"tweet: {result['tweet']}"]
    for kw in result["keywords"]:
        lines.append(f"  {kw['text']}\t{kw['tag']}\t{kw['source']}")
    return "\n".join(lines)


def _cmd_extract(args) -> int:
    config = _build_config(args, Mode(args.mode), keep_trace=args.trace)
    for tweet in _read_tweets(args.input):
        result = to_json_dict(extract(tweet, config))
        if args.format == "json":
            print(json.dumps(result, ensure_ascii=False))
        else:
            print(_extract_table(result))
    return EXIT_OK


def _cmd_corpus_check(args) -> int:
    kind = CorpusKind(args.kind)
    try:
        corpus = load_corpus(args.path, kind)
    except CorpusError as e:
        raise ResourceFailure(str(e)) from e
    print(f"{args.path}: {len(corpus)} terms, kind={kind.value}")
    return EXIT_OK


def _score_set(tweets: list[dict], key: str, config: PipelineConfig) -> list[EvalScores]:
    scores = []
    for entry in tweets:
        machine = extract(entry["tweet"], config).keywords
        scores.append(score(machine, entry[key]))
    return scores


def _table_lines(name: str, scores: list[EvalScores]) -> list[str]:
    lines = [f"{name}", f"{'Tweet':<8}{'P':>6}{'R':>6}{'F1':>6}"]
    for i, s in enumerate(scores, start=1):
        lines.append(
            f"{i:<8}{round2(s.precision):>6.2f}{round2(s.recall):>6.2f}{round2(s.f1):>6.2f}"
        )
    avg = average_scores(scores)
    lines.append(
        f"{'Average':<8}{round2(avg.precision):>6.2f}{round2(avg.recall):>6.2f}{round2(avg.f1):>6.2f}"
    )
    return lines


def _cmd_eval(args) -> int:
    config = _build_config(args, Mode(args.mode))
    try:
        dataset = json.loads(Path(args.dataset).read_text(encoding="utf-8"))
    except OSError as e:
        raise ResourceFailure(f"cannot read dataset: {e}") from e
    except json.JSONDecodeError as e:
        raise ResourceFailure(f"malformed dataset JSON: {e}") from e
    if not isinstance(dataset, list) or not dataset:
        raise ResourceFailure("dataset must be a nonempty JSON array")
    for entry in dataset:
        if "tweet" not in entry or "human" not in entry:
            raise ResourceFailure('every dataset entry needs "tweet" and "human"')

    sets = [("human", _score_set(dataset, "human", config))]
    if all("human2" in e for e in dataset):
        sets.append(("human2", _score_set(dataset, "human2", config)))

    if args.format == "json":
        payload = {"sets": []}
        for name, scores in sets:
            avg = average_scores(scores)
            payload["sets"].append(
                {
                    "name": name,
                    "scores": [
                        {
                            "tweet": i + 1,
                            "precision": round2(s.precision),
                            "recall": round2(s.recall),
                            "f1": round2(s.f1),
                        }
                        for i, s in enumerate(scores)
                    ],
                    "average": {
                        "precision": round2(avg.precision),
                        "recall": round2(avg.recall),
                        "f1": round2(avg.f1),
                    },
                }
            )
        if len(sets) == 2:
            payload["cross_average_f1"] = round2(
                sum(average_scores(s).f1 for _, s in sets) / len(sets)
            )
        print(json.dumps(payload, ensure_ascii=False))
    else:
        blocks = []
        for name, scores in sets:
            blocks.extend(_table_lines(f"Keyword set: {name}", scores))
            blocks.append("")
        if len(sets) == 2:
            cross = round2(sum(average_scores(s).f1 for _, s in sets) / len(sets))
            blocks.append(f"Cross-set average F1: {cross:.2f}")
        print("\n".join(blocks).rstrip())
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    ui = args.ui
    if ui is None:
        candidate = Path("frontend/dist")
        ui = str(candidate) if candidate.is_dir() else None
    app = create_app(sessions_dir=args.sessions_dir, ui_dir=ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "tokenize": _cmd_tokenize,
        "tag": _cmd_tag,
        "extract": _cmd_extract,
        "eval": _cmd_eval,
        "serve": _cmd_serve,
    }
    try:
        if args.command == "corpus":
            return _cmd_corpus_check(args)
        return handlers[args.command](args)
    except ResourceFailure as e:
        print(f"tweetkeys: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (CorpusError, GazetteerError) as e:
        print(f"tweetkeys: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
