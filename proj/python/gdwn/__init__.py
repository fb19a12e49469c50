"""Generalized Diagonal Wythoff Nim: sieve, oracle and analysis bindings."""

from ._gdwn import (
    GdwnError,
    beatty_a,
    beatty_b,
    classify_pair,
    compute_pi,
    detect_split,
    normalize_spec,
    p_pairs,
    p_positions,
    split_witness,
    word,
    wythoff_equivalent,
    z_shift,
    zeckendorf,
)

WYTHOFF = [(0, 1), (1, 1)]


def extension(p, q):
    """Wythoff Nim with the extra diagonal pair (p, q)."""
    return WYTHOFF + [(p, q)]


__all__ = [
    "GdwnError",
    "WYTHOFF",
    "beatty_a",
    "beatty_b",
    "classify_pair",
    "compute_pi",
    "detect_split",
    "extension",
    "normalize_spec",
    "p_pairs",
    "p_positions",
    "split_witness",
    "word",
    "wythoff_equivalent",
    "z_shift",
    "zeckendorf",
]
