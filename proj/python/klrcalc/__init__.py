from ._klrcalc import (
    character,
    direct_hom,
    ext,
    lemma_suite,
    resolve,
    verify,
)

__all__ = [
    "character",
    "direct_hom",
    "ext",
    "lemma_suite",
    "resolve",
    "verify",
]
