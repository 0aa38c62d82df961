"""Command-line entry point: ``niafs {bench,select,aggregate,report}``.

Exit status is 0 on success, 1 for invalid input or configuration and 2
when a grid finished with at least one failed cell.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path


from .classifiers import CLASSIFIERS, Metrics, make_classifier
from .data.events import EventLog, aggregate_events, join_labels, load_vocabulary, write_count_table
from .data.ingest import PreprocessSpec, load_dataset, load_schema
from .data.split import MinMaxScaler, split_train_test
from .errors import ValidationError
from .harness.config import load_config
from .harness.grid import run_grid
from .harness.reference import compare_to_reference
from .harness.report import emit_report, read_grid_csv, write_outputs
from .optimize.core import ALGORITHMS, OptimizerSpec
from .rng import RngStream
from .selection import PROTOCOLS, FitnessSpec, select_features

EXIT_OK, EXIT_INVALID, EXIT_FAILED_CELLS = 0, 1, 2


def _bench(args):
    config = load_config(args.config)
    result = run_grid(config, workers=args.workers)
    out_dir = Path(args.out) if args.out else Path(config.output_dir)
    paths = write_outputs(result, out_dir)
    print(emit_report(result, "markdown"), end="")
    if config.reference:
        print(compare_to_reference(result.mean_table(), config.reference).format())
    print(f"wrote {paths['csv']}, {paths['repeats']}, {paths['markdown']}")
    for cell in result.failed_cells:
        print(f"FAILED {cell.algorithm} x {cell.classifier}: {cell.diagnostic}", file=sys.stderr)
    return EXIT_FAILED_CELLS if result.failed_cells else EXIT_OK


def _select(args):
    spec = load_schema(args.schema) if args.schema else PreprocessSpec()
    data = load_dataset(args.dataset, spec)
    seed = RngStream(args.seed)
    train, test = split_train_test(data, seed.derive(0))
    fspec = FitnessSpec(protocol=args.protocol, threshold=args.threshold, alpha=args.alpha,
                        scale=spec.scale == "minmax_01")
    opt = OptimizerSpec(args.algo, args.population, args.evaluations)
    selection_data = data if args.protocol == "paper_faithful" else train
    result = select_features(selection_data, opt, fspec, seed.derive(1))
    cols = list(result.mask.indices)
    Xtr, Xte = train.features, test.features
    if fspec.scale:
        scaler = MinMaxScaler.fit(Xtr)
        Xtr, Xte = scaler.transform(Xtr), scaler.transform(Xte)
    model = make_classifier(args.classifier).fit(Xtr[:, cols], train.labels, rng=seed.derive(2))
    m = Metrics.compute(model.predict(Xte[:, cols]), model.predict_scores(Xte[:, cols]), test.labels)
    names = [data.feature_names[i] for i in cols]
    print(f"selected {result.selected_count}/{data.n_features}: {', '.join(names)}")
    print("mask " + "".join("1" if b else "0" for b in result.mask.included))
    print(f"wrapper_fitness {result.wrapper_fitness!r}")
    print(f"accuracy {m.accuracy:.4f} f1 {m.f1:.4f} auc {m.auc:.4f}")
    return EXIT_OK


def _aggregate(args):
    vocab = load_vocabulary(args.vocab, expected_size=args.vocab_size)
    table = aggregate_events(EventLog.from_csv(args.events), vocab)
    if args.labels:
        table = join_labels(table, args.labels, args.label_column)
    write_count_table(table, args.out, args.label_column)
    rep = table.report
    print(f"{len(table.enrollment_ids)} enrollments x {len(vocab)} actions -> {args.out}")
    print(f"counted {rep.in_vocabulary} events; rejected {sum(rep.rejected_actions.values())} "
          f"out-of-vocabulary action(s) and {rep.bad_timestamps} bad timestamp(s)")
    for action, n in sorted(rep.rejected_actions.items()):
        print(f"  rejected action {action!r}: {n}")
    if rep.unlabelled_enrollments:
        print(f"  {rep.unlabelled_enrollments} enrollment(s) had events but no label and were left out")
    return EXIT_OK


def _report(args):
    result = read_grid_csv(args.input)
    text = emit_report(result, args.format, args.out)
    if args.out is None:
        print(text, end="")
    if args.reference:
        print(compare_to_reference(result.mean_table(), args.reference).format())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="niafs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run the full algorithm x classifier grid")
    b.add_argument("--config", required=True)
    b.add_argument("--out", help="output directory (overrides output_dir in the config)")
    b.add_argument("--workers", type=int, help="worker processes (default: NIAFS_WORKERS or all cores)")
    b.set_defaults(func=_bench)

    s = sub.add_parser("select", help="run one feature selection and report the mask")
    s.add_argument("--dataset", required=True)
    s.add_argument("--schema")
    s.add_argument("--algo", required=True, choices=ALGORITHMS)
    s.add_argument("--classifier", default="KNN", choices=list(CLASSIFIERS))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--protocol", default="paper_faithful", choices=PROTOCOLS)
    s.add_argument("--threshold", type=float, default=0.5)
    s.add_argument("--alpha", type=float, default=0.99)
    s.add_argument("--population", type=int, default=30)
    s.add_argument("--evaluations", type=int, default=15000)
    s.set_defaults(func=_select)

    a = sub.add_parser("aggregate", help="turn a clickstream log into per-enrollment action counts")
    a.add_argument("--events", required=True)
    a.add_argument("--labels")
    a.add_argument("--vocab", required=True)
    a.add_argument("--vocab-size", type=int, help="expected vocabulary size, e.g. 32")
    a.add_argument("--label-column", default="label")
    a.add_argument("--out", required=True)
    a.set_defaults(func=_aggregate)

    r = sub.add_parser("report", help="render a grid CSV")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--format", default="markdown", choices=("markdown", "csv"))
    r.add_argument("--out")
    r.add_argument("--reference", help="published table to compare against, e.g. clickstream")
    r.set_defaults(func=_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
