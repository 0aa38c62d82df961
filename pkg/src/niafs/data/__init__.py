"""Dataset ingestion, synthetic fixtures, splitting and scaling."""

from .dataset import Dataset
from .events import AggregationReport, CountTable, EventLog, aggregate_events, join_labels, load_vocabulary, write_count_table
from .ingest import (
    BinRule,
    LabelRule,
    PreprocessSpec,
    RawTable,
    apply_encoding,
    bin_numeric,
    binarize_label,
    build_dataset,
    encode_categoricals,
    load_csv,
    load_dataset,
    load_schema,
    write_processed_csv,
)
from .split import MinMaxScaler, scale_features, split_indices, split_train_test, stratified_folds

__all__ = [
    "AggregationReport",
    "BinRule",
    "CountTable",
    "Dataset",
    "EventLog",
    "LabelRule",
    "MinMaxScaler",
    "PreprocessSpec",
    "RawTable",
    "aggregate_events",
    "apply_encoding",
    "bin_numeric",
    "binarize_label",
    "build_dataset",
    "encode_categoricals",
    "join_labels",
    "load_csv",
    "load_dataset",
    "load_schema",
    "load_vocabulary",
    "scale_features",
    "split_indices",
    "split_train_test",
    "stratified_folds",
    "write_count_table",
    "write_processed_csv",
]
