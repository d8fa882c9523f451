"""Booklinks as generator words: invariants, moves, spectra and the knot table."""

from .errors import BooklinkError
from .identify import DTCode, PlanarDiagram, dt_code, identify, jones, kauffman_bracket, writhe
from .moves import resolve_bridge, to_braid
from .polynomial import LaurentPolynomial
from .spectrum import Spectrum, composite_combine, parse_spectrum, split_combine, validate_spectrum
from .table import KnotRecord, load_knot_data, load_witnesses, regenerate_table
from .word import (
    BooklinkWord,
    braid_count,
    bridge_index,
    connected_sum,
    parse_word,
    serialize_word,
    split_union,
    trace_components,
    validate,
)

__all__ = [
    "BooklinkError",
    "BooklinkWord",
    "DTCode",
    "KnotRecord",
    "LaurentPolynomial",
    "PlanarDiagram",
    "Spectrum",
    "braid_count",
    "bridge_index",
    "composite_combine",
    "connected_sum",
    "dt_code",
    "identify",
    "jones",
    "kauffman_bracket",
    "load_knot_data",
    "load_witnesses",
    "parse_spectrum",
    "parse_word",
    "regenerate_table",
    "resolve_bridge",
    "serialize_word",
    "split_combine",
    "split_union",
    "to_braid",
    "trace_components",
    "validate",
    "validate_spectrum",
    "writhe",
]
