"""Exact computations on ribbon graphs, bouquets and Delta-matroids."""

from ._core import (
    ChordDiagram,
    IntMatrix,
    RibbonkitError,
    SetSystem,
    adjust,
    adjusted_matrix,
    all_certificates,
    delta_matroid,
    find_certificate,
    fixture,
    fixture_names,
    is_hurwitz_stable,
    is_log_concave,
    is_valid_certificate,
    m2,
    make_cn,
    mpm,
    parse_bqt,
    parse_dsys,
    q_sequence,
    qt_poly,
    qt_poly_eval,
    random_bouquet,
    random_pseudo,
    rhp_root_count,
    run_acceptance,
    verify_detection,
)

__version__ = "0.1.0"


def diagram(word, twisted=""):
    """Build a chord diagram from whitespace-separated labels."""
    return ChordDiagram(word.split(), twisted.split())


def load_fixture(name):
    """The diagram and named certificates of a shipped bouquet fixture."""
    doc = parse_bqt(fixture(name))
    return doc["diagram"], doc["certificates"]


def error_kind(exc):
    """Name of the failure carried by a RibbonkitError."""
    return exc.args[0]


__all__ = [name for name in dir() if not name.startswith("_")]
