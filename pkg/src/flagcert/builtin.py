"""Shipped data for the alternating-6-cycle certificate.

Everything the verifier treats as ground truth lives here: the bipartite
template, the 26 published class representatives, the 16 rooted flags, the
8x8 certificate matrix, the sparse base vector, the claimed bound and the
golden table of 72 product-expansion equations.

Template vertex layout (shared by all representatives): left part 0,1,2
bottom-to-top, right part 3,4,5 bottom-to-top.  Each representative is
recorded by its blue pairs; the remaining template pairs are red.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .graphs import (
    ClassTable,
    Color,
    ColoredGraph,
    Flag,
    alternating_cycle,
    classify,
    complete_bipartite,
    enumerate_template_colorings,
    underlying_automorphisms,
)

TEMPLATE_PARTS = (3, 3)

# Left part (bottom to top) then right part (bottom to top).
_L1, _L2, _L3 = 0, 1, 2
_R1, _R2, _R3 = 3, 4, 5

# Blue pairs of each of the 26 class representatives, keyed by class index.
_CLASS_BLUE_PAIRS = {
    1: [],
    2: [(_L1, _R1)],
    3: [(_L1, _R1), (_L2, _R2)],
    4: [(_L1, _R1), (_L2, _R2), (_L3, _R3)],
    5: [(_L1, _R1), (_L2, _R1)],
    6: [(_L1, _R1), (_L2, _R1), (_L3, _R2)],
    7: [(_L1, _R1), (_L2, _R1), (_L3, _R2), (_L3, _R3)],
    8: [(_L1, _R1), (_L2, _R1), (_L1, _R2)],
    9: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L3, _R3)],
    10: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L3, _R2)],
    11: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L3, _R2), (_L2, _R3)],
    12: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L3, _R2), (_L2, _R3), (_L3, _R3)],
    13: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L2, _R2)],
    14: [(_L1, _R1), (_L2, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R3)],
    15: [(_L1, _R1), (_L2, _R1), (_L3, _R1)],
    16: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2)],
    17: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R3)],
    18: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L1, _R3)],
    19: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2)],
    20: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R3)],
    21: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L1, _R3)],
    22: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L1, _R3), (_L3, _R3)],
    23: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R2)],
    24: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R2), (_L1, _R3)],
    25: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R2), (_L1, _R3), (_L2, _R3)],
    26: [(_L1, _R1), (_L2, _R1), (_L3, _R1), (_L1, _R2), (_L2, _R2), (_L3, _R2), (_L1, _R3), (_L2, _R3), (_L3, _R3)],
}

NUM_CLASSES = 26
GROUP_ORDER = 72  # 2 * 3! * 3! underlying symmetries of the template
NUM_COLORINGS = 512


def template() -> ColoredGraph:
    """The 3+3 complete bipartite template (colours are placeholders)."""
    return complete_bipartite(*TEMPLATE_PARTS)


def target() -> ColoredGraph:
    """The alternating 6-cycle whose density the certificate bounds."""
    return alternating_cycle(6)


@lru_cache(maxsize=1)
def class_representatives() -> tuple[ColoredGraph, ...]:
    tmpl = template()
    blue_sets = {k: {tuple(sorted(p)) for p in v} for k, v in _CLASS_BLUE_PAIRS.items()}
    reps = []
    for index in range(1, NUM_CLASSES + 1):
        blue = blue_sets[index]
        reps.append(
            ColoredGraph(
                tmpl.n,
                (
                    (u, v, Color.BLUE if (u, v) in blue else Color.RED)
                    for u, v in tmpl.pairs()
                ),
            )
        )
    return tuple(reps)


@lru_cache(maxsize=1)
def template_group() -> tuple[tuple[int, ...], ...]:
    return tuple(underlying_automorphisms(template()))


@lru_cache(maxsize=1)
def class_table() -> ClassTable:
    """Classification of all 512 template colourings, in published order."""
    return classify(
        enumerate_template_colorings(template()),
        template_group(),
        class_representatives(),
    )


# -- flags -------------------------------------------------------------------

# Each flag has four vertices: root 1, root 2, and one extra vertex attached
# to each root.  Local layout: 0 = root 1, 1 = root 2, 2 adjacent to root 2,
# 3 adjacent to root 1, closing a 4-cycle 0-1-2-3-0.
_FLAG_PAIRS = ((0, 1), (1, 2), (0, 3), (2, 3))

# Colour patterns (root edge, then around the cycle) for the red-rooted
# family; the blue-rooted family is the colour swap.
_RED_FAMILY_PATTERNS = (
    "RRRR",
    "RRRB",
    "RRBR",
    "RRBB",
    "RBRR",
    "RBRB",
    "RBBR",
    "RBBB",
)


def _flag_from_pattern(pattern: str) -> Flag:
    colors = {"R": Color.RED, "B": Color.BLUE}
    edges = [
        (u, v, colors[pattern[k]]) for k, (u, v) in enumerate(_FLAG_PAIRS)
    ]
    return Flag(ColoredGraph(4, edges), (0, 1))


@lru_cache(maxsize=1)
def red_flags() -> tuple[Flag, ...]:
    """The eight flags whose root edge is red."""
    return tuple(_flag_from_pattern(p) for p in _RED_FAMILY_PATTERNS)


@lru_cache(maxsize=1)
def blue_flags() -> tuple[Flag, ...]:
    """Colour swaps of the red-rooted flags; the root edge is blue."""
    return tuple(
        Flag(f.graph.swap_colors(), f.roots) for f in red_flags()
    )


# -- certificate payload -------------------------------------------------------

# The positive semidefinite matrix of the certificate, entries over a common
# denominator of 128.
MATRIX_DENOMINATOR = 128
MATRIX_NUMERATORS = (
    (2, -6, -2, -3, 1, -3, 5, 6),
    (-6, 58, -3, 12, -6, 12, -47, -20),
    (-2, -3, 56, -14, -47, 11, 4, -5),
    (-3, 12, -14, 12, 10, 2, -10, -9),
    (1, -6, -47, 10, 56, -14, 2, -2),
    (-3, 12, 11, 2, -14, 12, -10, -10),
    (5, -47, 4, -10, 2, -10, 44, 12),
    (6, -20, -5, -9, -2, -10, 12, 28),
)


def matrix_rows() -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(x, MATRIX_DENOMINATOR) for x in row)
        for row in MATRIX_NUMERATORS
    )


# Linear part of the certificate: class index -> coefficient.  These equal
# the conditional densities of the target among template embeddings.
BASE_VECTOR = {
    4: Fraction(1, 6),
    9: Fraction(1, 12),
    11: Fraction(1, 12),
    12: Fraction(1, 6),
}

BOUND = Fraction(1, 64)


# -- golden expansion table ----------------------------------------------------

# For each family and each unordered flag pair (i, j), i <= j, 1-based: the
# nonzero expansion coefficients of the glued product over the 26 classes,
# as numerators over 72.  Transcribed once; every entry is recomputed and
# cross-checked by the verifier, so a transcription slip fails loudly.
_GOLDEN_NUMERATORS_RED = {
    (1, 1): {1: 72, 2: 16, 3: 4},
    (1, 2): {2: 8, 5: 8, 8: 2},
    (1, 3): {2: 8, 3: 4, 5: 4, 6: 2},
    (1, 4): {5: 4, 8: 2, 15: 12, 16: 2},
    (1, 5): {2: 8, 3: 4, 5: 4, 6: 2},
    (1, 6): {5: 4, 8: 2, 15: 12, 16: 2},
    (1, 7): {3: 4, 6: 4, 7: 8},
    (1, 8): {8: 2, 16: 4, 18: 8},
    (2, 2): {3: 4, 8: 4, 13: 8},
    (2, 3): {3: 4, 6: 2, 8: 2, 10: 2},
    (2, 4): {6: 2, 10: 2, 16: 2, 19: 2},
    (2, 5): {3: 4, 6: 2, 8: 2, 10: 2},
    (2, 6): {6: 2, 10: 2, 16: 2, 19: 2},
    (2, 7): {4: 12, 9: 4, 11: 2},
    (2, 8): {9: 2, 17: 4, 21: 2},
    (3, 3): {5: 4, 8: 4, 10: 2},
    (3, 4): {8: 2, 13: 8, 16: 2, 19: 2},
    (3, 5): {3: 4, 4: 12, 8: 2, 9: 2},
    (3, 6): {6: 2, 9: 2, 16: 2, 17: 2},
    (3, 7): {6: 2, 9: 2, 10: 2, 11: 2},
    (3, 8): {10: 2, 17: 2, 19: 2, 21: 2},
    (4, 4): {10: 2, 19: 4, 23: 12},
    (4, 5): {6: 2, 9: 2, 16: 2, 17: 2},
    (4, 6): {7: 8, 11: 2, 18: 8, 21: 2},
    (4, 7): {9: 2, 14: 8, 17: 2, 20: 2},
    (4, 8): {11: 2, 20: 2, 21: 2, 24: 4},
    (5, 5): {5: 4, 8: 4, 10: 2},
    (5, 6): {8: 2, 13: 8, 16: 2, 19: 2},
    (5, 7): {6: 2, 9: 2, 10: 2, 11: 2},
    (5, 8): {10: 2, 17: 2, 19: 2, 21: 2},
    (6, 6): {10: 2, 19: 4, 23: 12},
    (6, 7): {9: 2, 14: 8, 17: 2, 20: 2},
    (6, 8): {11: 2, 20: 2, 21: 2, 24: 4},
    (7, 7): {7: 8, 11: 4, 12: 12},
    (7, 8): {11: 2, 20: 4, 22: 4},
    (8, 8): {12: 12, 22: 8, 25: 8},
}

_GOLDEN_NUMERATORS_BLUE = {
    (1, 1): {22: 4, 25: 16, 26: 72},
    (1, 2): {21: 2, 24: 8, 25: 8},
    (1, 3): {20: 2, 22: 4, 24: 4, 25: 8},
    (1, 4): {19: 2, 21: 2, 23: 12, 24: 4},
    (1, 5): {20: 2, 22: 4, 24: 4, 25: 8},
    (1, 6): {19: 2, 21: 2, 23: 12, 24: 4},
    (1, 7): {14: 8, 20: 4, 22: 4},
    (1, 8): {13: 8, 19: 4, 21: 2},
    (2, 2): {18: 8, 21: 4, 22: 4},
    (2, 3): {17: 2, 20: 2, 21: 2, 22: 4},
    (2, 4): {16: 2, 17: 2, 19: 2, 20: 2},
    (2, 5): {17: 2, 20: 2, 21: 2, 22: 4},
    (2, 6): {16: 2, 17: 2, 19: 2, 20: 2},
    (2, 7): {9: 2, 11: 4, 12: 12},
    (2, 8): {8: 2, 10: 4, 11: 2},
    (3, 3): {17: 2, 21: 4, 24: 4},
    (3, 4): {16: 2, 18: 8, 19: 2, 21: 2},
    (3, 5): {11: 2, 12: 12, 21: 2, 22: 4},
    (3, 6): {10: 2, 11: 2, 19: 2, 20: 2},
    (3, 7): {9: 2, 11: 2, 17: 2, 20: 2},
    (3, 8): {8: 2, 10: 2, 16: 2, 17: 2},
    (4, 4): {15: 12, 16: 4, 17: 2},
    (4, 5): {10: 2, 11: 2, 19: 2, 20: 2},
    (4, 6): {8: 2, 9: 2, 13: 8, 14: 8},
    (4, 7): {6: 2, 7: 8, 10: 2, 11: 2},
    (4, 8): {5: 4, 6: 2, 8: 2, 9: 2},
    (5, 5): {17: 2, 21: 4, 24: 4},
    (5, 6): {16: 2, 18: 8, 19: 2, 21: 2},
    (5, 7): {9: 2, 11: 2, 17: 2, 20: 2},
    (5, 8): {8: 2, 10: 2, 16: 2, 17: 2},
    (6, 6): {15: 12, 16: 4, 17: 2},
    (6, 7): {6: 2, 7: 8, 10: 2, 11: 2},
    (6, 8): {5: 4, 6: 2, 8: 2, 9: 2},
    (7, 7): {4: 12, 9: 4, 14: 8},
    (7, 8): {3: 4, 6: 4, 9: 2},
    (8, 8): {2: 8, 3: 8, 4: 12},
}


def golden_expansion(family: str, i: int, j: int) -> dict[int, Fraction]:
    """Published expansion of flag product (i, j) in the given family.

    ``family`` is "R" or "B"; indices are 1-based and order-insensitive.
    Returns a dense vector over all 26 class indices.
    """
    table = _GOLDEN_NUMERATORS_RED if family == "R" else _GOLDEN_NUMERATORS_BLUE
    key = (i, j) if i <= j else (j, i)
    sparse = table[key]
    return {
        index: Fraction(sparse.get(index, 0), GROUP_ORDER)
        for index in range(1, NUM_CLASSES + 1)
    }


def golden_pairs() -> list[tuple[str, int, int]]:
    """All 72 (family, i, j) keys of the golden table, i <= j."""
    return [("R", i, j) for (i, j) in sorted(_GOLDEN_NUMERATORS_RED)] + [
        ("B", i, j) for (i, j) in sorted(_GOLDEN_NUMERATORS_BLUE)
    ]
