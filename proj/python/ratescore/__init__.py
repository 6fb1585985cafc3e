"""Entity-aware radiology report scoring."""

from ._core import (
    InputError,
    Session,
    ValidationError,
    bleu,
    hash_encode,
    kendall_tau_b,
    load_params,
    normalize_name,
    pearson,
    rouge_l,
    spearman,
    split_sentences,
    tokenize,
)

__all__ = [
    "InputError",
    "Session",
    "ValidationError",
    "bleu",
    "hash_encode",
    "kendall_tau_b",
    "load_params",
    "normalize_name",
    "pearson",
    "rouge_l",
    "spearman",
    "split_sentences",
    "tokenize",
]
