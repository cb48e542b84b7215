"""Finite oriented singquandles and coloring invariants of singular links."""

from ._core import (
    Presentation,
    Singquandle,
    SingquandleError,
    affine,
    are_isomorphic,
    closure,
    colorings,
    corpus_ids,
    from_tables,
    load_link,
    load_singquandle,
    parse_presentation,
    parse_singquandle,
    pd_to_presentation,
    phi,
    sqp,
    sqp_terms,
    ssqp,
    validate,
)

__all__ = [
    "Presentation",
    "Singquandle",
    "SingquandleError",
    "affine",
    "are_isomorphic",
    "closure",
    "colorings",
    "corpus_ids",
    "from_tables",
    "load_link",
    "load_singquandle",
    "parse_presentation",
    "parse_singquandle",
    "pd_to_presentation",
    "phi",
    "sqp",
    "sqp_terms",
    "ssqp",
    "validate",
]
