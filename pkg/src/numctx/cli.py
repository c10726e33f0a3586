"""Command-line surface: validate, train, evaluate, compare, classify.

Exit codes: 0 success, 1 data/runtime error, 2 usage error. All randomness
flows from ``--seed``, so two invocations with equal flags produce
byte-identical reports. ``NUMCTX_LEXICON`` overrides the default lexicon
path; an explicit ``--lexicon`` flag wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import bow_features, context_features, evaluation
from .classifiers import (
    Algorithm,
    ModelFormatError,
    TrainConfig,
    TrainedModel,
    deserialize,
    predict,
    serialize,
    train,
)
from .context_features import Lexicon, LexiconError
from .corpus import (
    Corpus,
    CorpusError,
    bundled_corpus_path,
    load_corpus,
    scan_corpus,
)
from .labels import LABELS
from .locator import locate_numbers, shape_of, tokenize
from .verbalizer import (
    CurrencyMode,
    UnitMode,
    VerbalizationError,
    VerbalizationStyle,
    YearMode,
    verbalize,
)

_PIPELINE_MAGIC = "numctx-pipeline v1"
_OUT_OF_SCOPE_CLASSIFIERS = ("svm-poly", "svm-rbf")


def _add_corpus_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--corpus",
        type=Path,
        default=None,
        help="corpus CSV (id,text,start,end,label); defaults to the bundled corpus",
    )


def _add_lexicon_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        type=Path,
        default=None,
        help="keyword lexicon file; defaults to $NUMCTX_LEXICON, then the bundled lexicon",
    )


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--extractor", choices=evaluation.EXTRACTORS, default="context")
    parser.add_argument(
        "--classifier",
        choices=[a.value for a in Algorithm] + list(_OUT_OF_SCOPE_CLASSIFIERS),
        default="dt",
    )
    parser.add_argument("--k", type=int, default=1, help="neighbors for knn (1 or 3)")
    parser.add_argument("--max-depth", type=int, default=16, help="dt depth limit, 0 = unlimited")
    parser.add_argument("--min-leaf", type=int, default=1)
    parser.add_argument("--shrinkage", type=float, default=1e-4)
    parser.add_argument("--c-reg", type=float, default=1.0)
    parser.add_argument("--epochs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--bow-cap", type=int, default=bow_features.DEFAULT_CAP)


def _add_eval_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--folds", type=int, default=10)
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")


def _add_style_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--year-mode", choices=("full", "paired"), default="full")
    parser.add_argument("--currency-mode", choices=("spoken", "symbolic"), default="spoken")
    parser.add_argument("--unit-mode", choices=("full", "abbrev"), default="full")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numctx",
        description="locate numbers in Malay sentences, classify their format, verbalize them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a corpus file and print class counts")
    _add_corpus_flag(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_train = sub.add_parser("train", help="train on a corpus and write a model file")
    _add_corpus_flag(p_train)
    _add_lexicon_flag(p_train)
    _add_model_flags(p_train)
    p_train.add_argument("--output", type=Path, required=True, help="model file to write")
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("evaluate", help="k-fold cross-validation report")
    _add_corpus_flag(p_eval)
    _add_lexicon_flag(p_eval)
    _add_model_flags(p_eval)
    _add_eval_flags(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_cmp = sub.add_parser("compare", help="context vs bag-of-words comparison report")
    _add_corpus_flag(p_cmp)
    _add_lexicon_flag(p_cmp)
    _add_model_flags(p_cmp)
    _add_eval_flags(p_cmp)
    p_cmp.set_defaults(func=cmd_compare)

    p_cls = sub.add_parser(
        "classify", help="read sentences on stdin, print span/label/verbalization lines"
    )
    _add_corpus_flag(p_cls)
    _add_lexicon_flag(p_cls)
    _add_model_flags(p_cls)
    _add_style_flags(p_cls)
    p_cls.add_argument("--model", type=Path, default=None, help="model file from 'train'")
    p_cls.set_defaults(func=cmd_classify)

    return parser


def _resolve_lexicon_path(args) -> Path:
    if args.lexicon is not None:
        return args.lexicon
    env = os.environ.get("NUMCTX_LEXICON")
    if env:
        return Path(env)
    return context_features.default_lexicon_path()


def _load_lexicon(args) -> Lexicon:
    return context_features.load_lexicon(_resolve_lexicon_path(args))


def _load_corpus(args) -> Corpus:
    return load_corpus(args.corpus if args.corpus is not None else bundled_corpus_path())


def _usage_error(message: str):
    print(f"numctx: error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _train_config(args) -> TrainConfig:
    if args.classifier in _OUT_OF_SCOPE_CLASSIFIERS:
        _usage_error(
            f"classifier {args.classifier!r} is unsupported (out of scope); "
            "supported classifiers are dt, knn, lda, svm - see README"
        )
    return TrainConfig(
        algorithm=Algorithm(args.classifier),
        k=args.k,
        max_depth=None if args.max_depth == 0 else args.max_depth,
        min_leaf=args.min_leaf,
        shrinkage=args.shrinkage,
        c_reg=args.c_reg,
        epochs=args.epochs,
        seed=args.seed,
    )


def _check_folds(folds: int) -> None:
    if folds < 2:
        _usage_error(f"--folds must be >= 2, got {folds}")


def _emit_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        sys.stdout.write(evaluation.render_tsv(report))


# --- commands ---------------------------------------------------------------


def cmd_validate(args) -> int:
    path = args.corpus if args.corpus is not None else bundled_corpus_path()
    sentences, issues = scan_corpus(path)
    counts = {label: 0 for label in LABELS}
    for sentence in sentences:
        counts[sentence.label] += 1
    print(f"corpus\t{path}")
    print(f"rows\t{len(sentences)}")
    for label in LABELS:
        print(f"{label.name}\t{counts[label]}")
    for label in LABELS:
        if counts[label] == 0:
            print(f"warning: class {label.name} has 0 instances")
    for issue in issues:
        print(f"error: {issue.error}", file=sys.stderr)
    return 1 if issues else 0


def cmd_evaluate(args) -> int:
    _check_folds(args.folds)
    cfg = _train_config(args)
    corpus = _load_corpus(args)
    lexicon = _load_lexicon(args)
    summary = evaluation.cross_validate(
        corpus, args.extractor, cfg, k=args.folds, seed=args.seed,
        lexicon=lexicon, bow_cap=args.bow_cap,
    )
    _emit_report(evaluation.evaluation_report(summary), args.format)
    return 0


def cmd_compare(args) -> int:
    _check_folds(args.folds)
    cfg = _train_config(args)
    corpus = _load_corpus(args)
    lexicon = _load_lexicon(args)
    context_summary = evaluation.cross_validate(
        corpus, "context", cfg, k=args.folds, seed=args.seed, lexicon=lexicon
    )
    bow_summary = evaluation.cross_validate(
        corpus, "bow", cfg, k=args.folds, seed=args.seed, bow_cap=args.bow_cap
    )
    _emit_report(evaluation.comparison_report(context_summary, bow_summary), args.format)
    return 0


# --- trained pipelines (extractor state + classifier) -----------------------


def _fit_pipeline(corpus: Corpus, cfg: TrainConfig, extractor: str, lexicon: Lexicon, bow_cap: int):
    y = [s.label for s in corpus]
    if extractor == "context":
        X = np.vstack([context_features.encode_at(s.text, s.span, lexicon) for s in corpus])
        state: Lexicon | bow_features.BowVocab = lexicon
    else:
        raws = [context_features.token_at(s.text, s.span).raw for s in corpus]
        vocab = bow_features.build_vocab(raws, cap=bow_cap)
        X = np.vstack([bow_features.bow_encode(raw, vocab) for raw in raws]).astype(np.float64)
        state = vocab
    model = train(X, y, cfg)
    return model, state


def save_pipeline(path: Path, extractor: str, model: TrainedModel, state) -> None:
    lines = [_PIPELINE_MAGIC, f"extractor {extractor}"]
    if extractor == "context":
        lexicon: Lexicon = state
        lines.append(f"lexicon {lexicon.version} {len(lexicon.entries)}")
        for word in sorted(lexicon.entries):
            lines.append(f"lexentry {word} {lexicon.entries[word].name}")
    else:
        vocab: bow_features.BowVocab = state
        lines.append(f"vocabcap {vocab.cap}")
        pairs = " ".join(f"{b}:{c}" for b, c in sorted(vocab.byte_to_column.items()))
        lines.append(f"vocab {pairs}".rstrip())
    lines.append("model")
    blob = "\n".join(lines) + "\n" + serialize(model)
    path.write_text(blob, encoding="utf-8")


def load_pipeline(path: Path):
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != _PIPELINE_MAGIC:
        raise ModelFormatError(f"{path}: bad magic line, expected {_PIPELINE_MAGIC!r}")
    pos = 1

    def take(key: str) -> list[str]:
        nonlocal pos
        if pos >= len(lines):
            raise ModelFormatError(f"{path}: unexpected end of file")
        parts = lines[pos].split(" ")
        if parts[0] != key:
            raise ModelFormatError(f"{path}: expected {key!r} line, got {lines[pos]!r}")
        pos += 1
        return parts[1:]

    (extractor,) = take("extractor")
    if extractor == "context":
        version, count_s = take("lexicon")
        try:
            count = int(count_s)
        except ValueError:
            raise ModelFormatError(f"{path}: bad lexicon entry count {count_s!r}") from None
        entries: dict[str, context_features.KeywordClass] = {}
        for _ in range(count):
            word, class_name = take("lexentry")
            try:
                entries[word] = context_features.KeywordClass[class_name]
            except KeyError:
                raise ModelFormatError(f"{path}: unknown keyword class {class_name!r}") from None
        state: Lexicon | bow_features.BowVocab = Lexicon(entries=entries, version=version)
    elif extractor == "bow":
        (cap_s,) = take("vocabcap")
        pairs = take("vocab")
        byte_to_column: dict[int, int] = {}
        try:
            cap = int(cap_s)
            for pair in pairs:
                if pair:
                    byte_s, col_s = pair.split(":")
                    byte_to_column[int(byte_s)] = int(col_s)
        except ValueError:
            raise ModelFormatError(f"{path}: bad vocab section") from None
        state = bow_features.BowVocab(byte_to_column=byte_to_column, cap=cap)
    else:
        raise ModelFormatError(f"{path}: unknown extractor {extractor!r}")

    if pos >= len(lines) or lines[pos] != "model":
        raise ModelFormatError(f"{path}: missing 'model' section")
    model = deserialize("\n".join(lines[pos + 1 :]) + "\n")
    return extractor, model, state


def cmd_train(args) -> int:
    cfg = _train_config(args)
    corpus = _load_corpus(args)
    lexicon = _load_lexicon(args)
    model, state = _fit_pipeline(corpus, cfg, args.extractor, lexicon, args.bow_cap)
    save_pipeline(args.output, args.extractor, model, state)
    print(f"trained {cfg.algorithm.value} on {len(corpus)} rows ({args.extractor} features) -> {args.output}")
    return 0


def _style_from_args(args) -> VerbalizationStyle:
    return VerbalizationStyle(
        year_mode=YearMode(args.year_mode),
        currency_mode=CurrencyMode(args.currency_mode),
        unit_mode=UnitMode(args.unit_mode),
    )


def cmd_classify(args) -> int:
    style = _style_from_args(args)
    if args.model is not None:
        extractor, model, state = load_pipeline(args.model)
    else:
        # no model file: train on the (bundled by default) corpus right here
        extractor = args.extractor
        cfg = _train_config(args)
        corpus = _load_corpus(args)
        lexicon = _load_lexicon(args)
        model, state = _fit_pipeline(corpus, cfg, extractor, lexicon, args.bow_cap)

    for line in sys.stdin:
        text = line.rstrip("\n")
        if not text:
            continue
        tokens = tokenize(text)
        for number in locate_numbers(text):
            window = context_features.window_for_token(tokens, number)
            if extractor == "context":
                vec = context_features.encode(window, shape_of(number), state)
            else:
                vec = bow_features.bow_encode(number.raw, state).astype(np.float64)
            label = predict(model, vec)
            words = verbalize(number, label, style, context=window)
            start, end = number.span
            print(f"{start}-{end}\t{label.name}\t{words}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CorpusError, LexiconError, ModelFormatError, VerbalizationError, ValueError, OSError) as exc:
        print(f"numctx: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
