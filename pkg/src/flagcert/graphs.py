"""Edge-coloured graphs, isomorphism machinery and template classification.

Vertices are integers 0..n-1.  Edges are unordered pairs carrying one of two
colours; absent pairs are non-edges.  Everything here is immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import enum
from itertools import permutations
from typing import Iterable, Optional, Sequence


class Color(enum.Enum):
    """One of the two edge colours."""

    RED = "R"
    BLUE = "B"

    @property
    def swapped(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __repr__(self) -> str:
        return self.value


# Integer codes used in canonical encodings and hot counting loops.
_COLOR_BIT = {Color.RED: 0, Color.BLUE: 1}
_BIT_COLOR = (Color.RED, Color.BLUE)


class ColoredGraph:
    """A loopless graph with red/blue edges and possibly missing pairs.

    ``edges`` is normalized to a sorted tuple of ``(u, v, Color)`` with
    ``u < v``; equality and hashing are structural.
    """

    __slots__ = ("n", "edges", "_color", "__weakref__", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, Color]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        color: dict[tuple[int, int], Color] = {}
        for u, v, c in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if not isinstance(c, Color):
                raise ValueError(f"edge ({u},{v}) colour must be a Color")
            key = (u, v) if u < v else (v, u)
            if key in color:
                raise ValueError(f"duplicate edge {key}")
            color[key] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "edges", tuple(sorted((u, v, color[(u, v)]) for (u, v) in color))
        )
        object.__setattr__(self, "_color", color)
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ColoredGraph is immutable")

    # -- basic queries ----------------------------------------------------

    def edge_color(self, u: int, v: int) -> Optional[Color]:
        return self._color.get((u, v) if u < v else (v, u))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Present pairs, sorted."""
        return tuple((u, v) for u, v, _ in self.edges)

    def is_clique(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # -- derived graphs ---------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "ColoredGraph":
        """Apply the vertex bijection ``u -> perm[u]``."""
        return ColoredGraph(
            self.n, ((perm[u], perm[v], c) for u, v, c in self.edges)
        )

    def swap_colors(self) -> "ColoredGraph":
        return ColoredGraph(self.n, ((u, v, c.swapped) for u, v, c in self.edges))

    def all_red_underlying(self) -> "ColoredGraph":
        """The underlying graph with every edge recoloured red.

        Colour-blind counting problems reduce to colour-preserving ones on
        these monochromatic shadows.
        """
        return ColoredGraph(self.n, ((u, v, Color.RED) for u, v, _ in self.edges))

    def color_matrix(self) -> tuple[tuple[Optional[int], ...], ...]:
        """Adjacency matrix with entries 0 (red), 1 (blue) or None (absent)."""
        m = [[None] * self.n for _ in range(self.n)]
        for u, v, c in self.edges:
            bit = _COLOR_BIT[c]
            m[u][v] = bit
            m[v][u] = bit
        return tuple(tuple(row) for row in m)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{u}{v}:{c.value}" for u, v, c in self.edges)
        return f"ColoredGraph(n={self.n}, [{body}])"


class Flag:
    """A coloured graph with an ordered tuple of distinguished root vertices."""

    __slots__ = ("graph", "roots", "_hash")

    def __init__(self, graph: ColoredGraph, roots: Sequence[int]):
        roots = tuple(roots)
        if len(set(roots)) != len(roots):
            raise ValueError("roots must be pairwise distinct")
        if any(not 0 <= r < graph.n for r in roots):
            raise ValueError("root index out of range")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "_hash", hash((graph, roots)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Flag is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Flag)
            and self.graph == other.graph
            and self.roots == other.roots
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Flag({self.graph!r}, roots={self.roots})"


# -- constructions ---------------------------------------------------------


def complete_graph(n: int, color: Color) -> ColoredGraph:
    return ColoredGraph(
        n, ((u, v, color) for u in range(n) for v in range(u + 1, n))
    )


def complete_bipartite(a: int, b: int, color: Color = Color.RED) -> ColoredGraph:
    """K_{a,b} with part {0..a-1} against part {a..a+b-1}."""
    return ColoredGraph(
        a + b, ((u, a + w, color) for u in range(a) for w in range(b))
    )


def alternating_cycle(length: int = 6) -> ColoredGraph:
    """The even cycle whose every vertex meets one red and one blue edge."""
    if length < 4 or length % 2:
        raise ValueError("alternating cycle length must be even and >= 4")
    edges = []
    for i in range(length):
        j = (i + 1) % length
        u, v = (i, j) if i < j else (j, i)
        edges.append((u, v, Color.RED if i % 2 == 0 else Color.BLUE))
    return ColoredGraph(length, edges)


# -- automorphisms ----------------------------------------------------------

_MAX_BRUTE_N = 8


def underlying_automorphisms(g: ColoredGraph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency, colours ignored.

    Exhaustive over all n! permutations; guarded to keep the factorial
    search honest.
    """
    if g.n > _MAX_BRUTE_N:
        raise ValueError(f"brute-force automorphism search limited to n <= {_MAX_BRUTE_N}")
    adj = [0] * g.n
    for u, v, _ in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out = []
    for perm in permutations(range(g.n)):
        ok = True
        for u in range(g.n):
            mapped = 0
            nbr = adj[u]
            while nbr:
                lsb = nbr & -nbr
                mapped |= 1 << perm[lsb.bit_length() - 1]
                nbr ^= lsb
            if mapped != adj[perm[u]]:
                ok = False
                break
        if ok:
            out.append(perm)
    return out


def automorphism_count(g: ColoredGraph) -> int:
    """Number of colour-preserving automorphisms."""
    count = 0
    for perm in underlying_automorphisms(g):
        if all(g.edge_color(perm[u], perm[v]) == c for u, v, c in g.edges):
            count += 1
    return count


# -- canonical forms and classification -------------------------------------

CanonicalCode = tuple  # tuple of ((u, v), colour_bit) entries


def encode(g: ColoredGraph) -> CanonicalCode:
    """Bit-exact edge encoding: pairs sorted lexicographically, red=0, blue=1."""
    return tuple(((u, v), _COLOR_BIT[c]) for u, v, c in g.edges)


def canonical_form(g: ColoredGraph, group: Sequence[Sequence[int]]) -> CanonicalCode:
    """Lexicographically least encoding of ``g`` over the permutation group."""
    best = None
    for perm in group:
        code = sorted(
            (
                ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])),
                _COLOR_BIT[c],
            )
            for u, v, c in g.edges
        )
        if best is None or code < best:
            best = code
    return tuple(best) if best is not None else ()


def enumerate_template_colorings(template: ColoredGraph) -> list[ColoredGraph]:
    """All 2^e red/blue colourings of the template's pair set.

    Deterministic order: pairs sorted, colouring index read as bits with
    red for 0, so index 0 is the all-red colouring.
    """
    pairs = template.pairs()
    if len(pairs) > 16:
        raise ValueError("template has more than 16 edges; enumeration refused")
    out = []
    for index in range(1 << len(pairs)):
        out.append(
            ColoredGraph(
                template.n,
                (
                    (u, v, _BIT_COLOR[(index >> k) & 1])
                    for k, (u, v) in enumerate(pairs)
                ),
            )
        )
    return out


class ClassEntry:
    """One isomorphism class: published index, representative, symmetries."""

    __slots__ = ("index", "representative", "aut_count", "multiplicity")

    def __init__(self, index, representative, aut_count, multiplicity):
        self.index = index
        self.representative = representative
        self.aut_count = aut_count
        self.multiplicity = multiplicity


class ClassTable:
    """Isomorphism classes of template colourings, in a fixed reference order."""

    def __init__(self, classes: list[ClassEntry], lookup: dict, group):
        self.classes = classes
        self.lookup = lookup
        self.group = group

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def indices(self) -> range:
        return range(1, len(self.classes) + 1)

    def entry(self, index: int) -> ClassEntry:
        return self.classes[index - 1]

    def representative(self, index: int) -> ColoredGraph:
        return self.classes[index - 1].representative

    def multiplicity(self, index: int) -> int:
        return self.classes[index - 1].multiplicity

    def class_of(self, g: ColoredGraph) -> int:
        """Class index of a colouring of the same template."""
        return self.lookup[canonical_form(g, self.group)]

    def swap_involution(self) -> dict[int, int]:
        """Index map induced by swapping every edge colour of a representative."""
        return {
            e.index: self.class_of(e.representative.swap_colors())
            for e in self.classes
        }


def classify(
    colorings: Sequence[ColoredGraph],
    group: Sequence[Sequence[int]],
    reference: Sequence[ColoredGraph],
) -> ClassTable:
    """Partition colourings into isomorphism orbits, aligned to ``reference``.

    ``reference`` fixes the published class order; every orbit must contain
    exactly one reference representative.  Orbit sizes are cross-checked
    against the orbit-stabilizer count |group| / aut.
    """
    orbits: dict[CanonicalCode, list[ColoredGraph]] = {}
    for g in colorings:
        orbits.setdefault(canonical_form(g, group), []).append(g)

    ref_codes = {}
    for pos, rep in enumerate(reference):
        code = canonical_form(rep, group)
        if code in ref_codes:
            raise ValueError(f"reference representatives {ref_codes[code]} and {pos} are isomorphic")
        ref_codes[code] = pos
    if len(orbits) != len(reference):
        raise ValueError(
            f"found {len(orbits)} isomorphism classes, reference lists {len(reference)}"
        )
    if set(orbits) != set(ref_codes):
        raise ValueError("reference representatives do not match the computed orbits")

    order = len(group)
    entries: list[Optional[ClassEntry]] = [None] * len(reference)
    lookup = {}
    for code, members in orbits.items():
        pos = ref_codes[code]
        rep = reference[pos]
        aut = automorphism_count(rep)
        if len(members) * aut != order:
            raise ValueError(
                f"orbit of class {pos + 1}: size {len(members)} * aut {aut} != {order}"
            )
        entries[pos] = ClassEntry(pos + 1, rep, aut, len(members))
        lookup[code] = pos + 1
    return ClassTable(entries, lookup, list(group))
