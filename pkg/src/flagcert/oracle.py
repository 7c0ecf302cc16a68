"""Independent brute-force confirmation of the certificate's identities.

Everything here recomputes both sides of each identity from first
principles on concrete hosts: class densities by direct injective counting,
product densities by counting the glued graphs, the flagged inequality by
assembling rooted-count vectors and quadratic forms.  Exact rational
arithmetic throughout; randomness is a deterministic function of a 64-bit
seed and an index, so results never depend on iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from . import builtin
from .certificate import builtin_certificate, flag_product, format_rational
from .counting import (
    alternating_hom_inj_from_matrices,
    d_density,
    density_vector,
    falling_factorial,
    hom_inj_count,
    rooted_hom_inj_count,
    t_bip,
    t_inj,
)
from .graphs import Color, ColoredGraph

# -- deterministic randomness ---------------------------------------------------

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_TRIAL_SALT = 0xD1342543DE82EF95


def mix64(z: int) -> int:
    """The splitmix64 finalizer; the one mixing function used everywhere."""
    z &= _MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def stream_value(seed: int, index: int) -> int:
    """Value ``index`` of the stream: mix64(seed + (index+1) * golden)."""
    return mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


def trial_seed(seed: int, trial: int) -> int:
    """Per-trial master seeds for Monte Carlo runs."""
    return mix64(((seed ^ _TRIAL_SALT) + (trial + 1) * _GOLDEN) & _MASK64)


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def random_clique_coloring(n: int, seed: int) -> ColoredGraph:
    """Clique on n vertices, each pair red or blue with probability 1/2.

    Pair k (in sorted order) is coloured by bit 0 of stream value k, red on
    zero, so the draw depends only on (seed, pair index).
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = []
    for k, (u, v) in enumerate(_pair_list(n)):
        bit = stream_value(seed, k) & 1
        edges.append((u, v, Color.RED if bit == 0 else Color.BLUE))
    return ColoredGraph(n, edges)


def _random_clique_matrices(n: int, seed: int):
    """Red/blue adjacency of random_clique_coloring, built vectorized.

    Bit-for-bit the same colours as the scalar path.
    """
    idx = np.arange(n * (n - 1) // 2, dtype=np.uint64)
    z = (np.uint64(seed) + (idx + np.uint64(1)) * np.uint64(_GOLDEN))
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    bits = (z & np.uint64(1)).astype(np.int64)
    uu, vv = np.triu_indices(n, k=1)
    red = np.zeros((n, n), dtype=np.int64)
    blue = np.zeros((n, n), dtype=np.int64)
    red[uu, vv] = 1 - bits
    red[vv, uu] = 1 - bits
    blue[uu, vv] = bits
    blue[vv, uu] = bits
    return red, blue


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class OracleRecord:
    check: str
    instance: str
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class OracleReport:
    records: tuple[OracleRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.records)

    @property
    def counts(self) -> dict[str, int]:
        total = len(self.records)
        held = sum(1 for r in self.records if r.holds)
        return {"checks": total, "passed": held, "failed": total - held}

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "summary": self.counts,
            "records": [
                {
                    "check": r.check,
                    "instance": r.instance,
                    "lhs": format_rational(r.lhs),
                    "rhs": format_rational(r.rhs),
                    "holds": r.holds,
                }
                for r in self.records
            ],
        }


def _merge_reports(reports) -> OracleReport:
    records = []
    for rep in reports:
        records.extend(rep.records)
    return OracleReport(tuple(records))


# -- identity checks on one concrete clique ---------------------------------------


def check_identities(g: ColoredGraph) -> OracleReport:
    """Recount both sides of every identity on one coloured clique.

    Checks, exactly in rationals: the class densities sum to one; the
    target's density equals its class expansion; and each of the 128 ordered
    flag-product densities equals its class expansion.
    """
    if not g.is_clique():
        raise ValueError("identity checks require a coloured clique host")
    table = builtin.class_table()
    name = f"clique n={g.n}"
    records = []

    dvec = density_vector(g, table)
    records.append(
        OracleRecord(
            "sum_to_one", name, sum(dvec.values(), Fraction(0)), Fraction(1),
            sum(dvec.values(), Fraction(0)) == 1,
        )
    )

    target = builtin.target()
    lhs = t_inj(target, g)
    rhs = sum(
        (
            t_bip(target, table.representative(l)) * dvec[l]
            for l in table.indices
        ),
        Fraction(0),
    )
    records.append(OracleRecord("double_count", name, lhs, rhs, lhs == rhs))

    families = {"R": builtin.red_flags(), "B": builtin.blue_flags()}
    for fam, flags in families.items():
        for i in range(1, 9):
            for j in range(i, 9):
                product = flag_product(flags[i - 1], flags[j - 1])
                lhs = t_inj(product, g)
                expansion = {
                    l: t_bip(product, table.representative(l))
                    for l in table.indices
                }
                rhs = sum(
                    (expansion[l] * dvec[l] for l in table.indices), Fraction(0)
                )
                records.append(
                    OracleRecord(f"expansion_{fam}{i}.{j}", name, lhs, rhs, lhs == rhs)
                )
                if i != j:
                    records.append(
                        OracleRecord(
                            f"expansion_{fam}{j}.{i}", name, lhs, rhs, lhs == rhs
                        )
                    )
    return OracleReport(tuple(records))


_MAX_INEQUALITY_N = 14


def check_flagged_inequality(g: ColoredGraph) -> OracleReport:
    """Evaluate the certificate's upper-bound expression exactly on a clique.

    Records the target density (lhs), the bound expression (rhs) built from
    base densities plus the two rooted quadratic forms, and the per-pair
    overlap surpluses that the bound discards.
    """
    if not g.is_clique():
        raise ValueError("the flagged inequality is stated for coloured cliques")
    n = g.n
    if n < 6:
        raise ValueError("the flagged inequality needs at least 6 vertices")
    if n > _MAX_INEQUALITY_N:
        cost = 144 * falling_factorial(n, 6)
        raise ValueError(
            f"host with {n} vertices rejected: roughly {cost:.2e} map checks; "
            f"limit is n <= {_MAX_INEQUALITY_N}"
        )
    table = builtin.class_table()
    cert = builtin_certificate()
    matrix = cert.families[0].matrix
    name = f"clique n={n}"
    records = []

    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    vectors = {}
    for fam, flags in (("R", builtin.red_flags()), ("B", builtin.blue_flags())):
        vectors[fam] = {
            (u, v): [rooted_hom_inj_count(f, g, u, v) for f in flags]
            for u, v in pairs
        }

    quad = {"R": 0, "B": 0}
    den = builtin.MATRIX_DENOMINATOR
    num = [[matrix.rows[i][j] * den for j in range(8)] for i in range(8)]
    if any(x.denominator != 1 for row in num for x in row):
        raise ValueError("certificate matrix entries must share denominator 128")
    num = [[int(x) for x in row] for row in num]
    for fam in ("R", "B"):
        total = 0
        for uv in pairs:
            x = vectors[fam][uv]
            total += sum(
                num[i][j] * x[i] * x[j] for i in range(8) for j in range(8)
            )
        quad[fam] = total

    base_part = sum(
        (coeff * d_density(l, g, table) for l, coeff in cert.base.items()),
        Fraction(0),
    )
    rhs = base_part + Fraction(quad["R"] + quad["B"], den * falling_factorial(n, 6))
    lhs = t_inj(builtin.target(), g)
    records.append(
        OracleRecord("flagged_inequality", name, lhs, rhs, lhs <= rhs)
    )

    # Overlap surplus: the nonnegative difference between products of rooted
    # counts and rooted counts of the glued product, summed over root pairs.
    for fam, flags in (("R", builtin.red_flags()), ("B", builtin.blue_flags())):
        for i in range(1, 9):
            for j in range(i, 9):
                product = flag_product(flags[i - 1], flags[j - 1])
                glued = hom_inj_count(product, g)
                overlap = sum(
                    vectors[fam][uv][i - 1] * vectors[fam][uv][j - 1]
                    for uv in pairs
                )
                surplus = Fraction(overlap - glued)
                records.append(
                    OracleRecord(
                        f"overlap_surplus_{fam}{i}.{j}",
                        name,
                        surplus,
                        Fraction(0),
                        surplus >= 0,
                    )
                )
                if i != j:
                    records.append(
                        OracleRecord(
                            f"overlap_surplus_{fam}{j}.{i}",
                            name,
                            surplus,
                            Fraction(0),
                            surplus >= 0,
                        )
                    )
    return OracleReport(tuple(records))


# -- exhaustive sweep over every colouring of the 6-clique -------------------------
#
# All patterns involved are 6-vertex graphs, so on a 6-vertex host every
# injective map is one of the 720 vertex bijections.  For each pattern and
# each bijection, the colour constraints read a fixed subset of the host's
# 15 pair-colour bits; the bijection therefore matches exactly the hosts in
# one subcube of {0,1}^15.  Accumulating subcubes gives the exact count of
# every pattern in all 32768 hosts at once, and every identity becomes an
# integer identity between count tables.


@dataclass(frozen=True)
class SweepReport:
    hosts: int
    failures: dict[str, int]
    min_inequality_slack: Fraction
    checks: int

    @property
    def passed(self) -> bool:
        return all(v == 0 for v in self.failures.values())

    def to_dict(self) -> dict:
        return {
            "hosts": self.hosts,
            "checks": self.checks,
            "passed": self.passed,
            "failures": dict(self.failures),
            "min_inequality_slack": format_rational(self.min_inequality_slack),
        }


def _pattern_count_table(pattern: ColoredGraph, pair_index, spread_cache) -> np.ndarray:
    """Counts of colour-preserving bijections into each of the 32768 hosts."""
    assert pattern.n == 6
    edges = [(u, v, 0 if c is Color.RED else 1) for u, v, c in pattern.edges]
    weights: dict[tuple[int, int], int] = {}
    for perm in permutations(range(6)):
        mask = 0
        val = 0
        for u, v, bit in edges:
            p = pair_index[perm[u]][perm[v]]
            mask |= 1 << p
            if bit:
                val |= 1 << p
        key = (mask, val)
        weights[key] = weights.get(key, 0) + 1
    counts = np.zeros(1 << 15, dtype=np.int32)
    for (mask, val), w in weights.items():
        counts[_spread(mask, spread_cache) + val] += w
    return counts


def _spread(mask: int, cache: dict) -> np.ndarray:
    """All subset sums of the pair-bits outside ``mask``."""
    arr = cache.get(mask)
    if arr is None:
        arr = np.zeros(1, dtype=np.int64)
        for b in range(15):
            if not (mask >> b) & 1:
                arr = np.concatenate([arr, arr + (1 << b)])
        cache[mask] = arr
    return arr


def exhaustive_k6_sweep() -> SweepReport:
    """Check every identity and the inequality on all 32768 6-clique hosts."""
    n = 6
    table = builtin.class_table()
    cert = builtin_certificate()
    pair_index = [[0] * n for _ in range(n)]
    for k, (u, v) in enumerate(_pair_list(n)):
        pair_index[u][v] = k
        pair_index[v][u] = k
    spread_cache: dict[int, np.ndarray] = {}

    mult = np.array([table.multiplicity(l) for l in table.indices], dtype=np.int64)
    class_counts = np.stack(
        [
            _pattern_count_table(table.representative(l), pair_index, spread_cache)
            for l in table.indices
        ]
    ).astype(np.int64)
    weighted = mult[:, None] * class_counts

    failures: dict[str, int] = {}
    total_checks = 0

    # (a) class densities sum to one
    sums = weighted.sum(axis=0)
    failures["sum_to_one"] = int((sums != 720).sum())
    total_checks += sums.size

    # (b) the target's expansion identity
    target = builtin.target()
    target_counts = _pattern_count_table(target, pair_index, spread_cache).astype(np.int64)
    w_target = np.array(
        [int(72 * t_bip(target, table.representative(l))) for l in table.indices],
        dtype=np.int64,
    )
    rhs = (w_target[:, None] * weighted).sum(axis=0)
    failures["double_count"] = int((72 * target_counts != rhs).sum())
    total_checks += rhs.size

    # (c) the 128 ordered product expansions (64 per family; the two orders
    # of a pair glue to the same graph, so each unordered table serves both)
    expansion_failures = 0
    families = {"R": builtin.red_flags(), "B": builtin.blue_flags()}
    for fam, flags in families.items():
        for i in range(1, 9):
            for j in range(i, 9):
                product = flag_product(flags[i - 1], flags[j - 1])
                counts = _pattern_count_table(product, pair_index, spread_cache).astype(np.int64)
                w = np.array(
                    [
                        int(72 * t_bip(product, table.representative(l)))
                        for l in table.indices
                    ],
                    dtype=np.int64,
                )
                bad = int((72 * counts != (w[:, None] * weighted).sum(axis=0)).sum())
                orders = 1 if i == j else 2
                expansion_failures += orders * bad
                total_checks += orders * counts.size
    failures["expansions"] = expansion_failures

    # (d) the flagged inequality, via rooted count vectors
    root_pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rooted = {}
    for fam, flags in families.items():
        x = np.zeros((8, len(root_pairs), 1 << 15), dtype=np.int16)
        for k, flag in enumerate(flags):
            fl_edges = [
                (u, v, 0 if c is Color.RED else 1) for u, v, c in flag.graph.edges
            ]
            r1, r2 = flag.roots
            others = [v for v in range(4) if v not in (r1, r2)]
            for pi, (u, v) in enumerate(root_pairs):
                rest = [w for w in range(n) if w not in (u, v)]
                for w in rest:
                    for z in rest:
                        if w == z:
                            continue
                        image = {r1: u, r2: v, others[0]: w, others[1]: z}
                        mask = 0
                        valbits = 0
                        for a, b, bit in fl_edges:
                            p = pair_index[image[a]][image[b]]
                            mask |= 1 << p
                            if bit:
                                valbits |= 1 << p
                        x[k, pi][_spread(mask, spread_cache) + valbits] += 1
        rooted[fam] = x.astype(np.int64)

    scaled_rows = [
        [x * builtin.MATRIX_DENOMINATOR for x in row]
        for row in cert.families[0].matrix.rows
    ]
    assert all(x.denominator == 1 for row in scaled_rows for x in row)
    numerators = np.array([[int(x) for x in row] for row in scaled_rows], dtype=np.int64)
    quads = {
        fam: np.einsum("ipm,ij,jpm->m", rooted[fam], numerators, rooted[fam])
        for fam in families
    }

    # scale the inequality by 720 * 384 to clear every denominator
    base_scaled = np.zeros(len(table.indices), dtype=np.int64)
    for l, coeff in cert.base.items():
        scaled = 384 * coeff
        base_scaled[l - 1] = int(scaled)
        assert scaled == int(scaled)
    lhs_scaled = 384 * target_counts
    rhs_scaled = (base_scaled[:, None] * weighted).sum(axis=0) + 3 * (
        quads["R"] + quads["B"]
    )
    slack = rhs_scaled - lhs_scaled
    failures["flagged_inequality"] = int((slack < 0).sum())
    total_checks += slack.size

    return SweepReport(
        hosts=1 << 15,
        failures=failures,
        min_inequality_slack=Fraction(int(slack.min()), 384 * 720),
        checks=total_checks,
    )


# -- Monte Carlo -------------------------------------------------------------------


@dataclass(frozen=True)
class MonteCarloResult:
    n: int
    trials: int
    seed: int
    mean: Fraction
    minimum: Fraction
    maximum: Fraction

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "mean": format_rational(self.mean),
            "mean_approx": float(self.mean),
            "min": format_rational(self.minimum),
            "max": format_rational(self.maximum),
        }


def monte_carlo_mean(n: int, trials: int, seed: int) -> MonteCarloResult:
    """Exact mean of the target's injective density over random cliques.

    Each trial draws an independent uniformly random colouring from its
    derived seed; the density is an exact rational via the closed-form
    alternating-cycle count, and the mean is accumulated without rounding.
    """
    if n < 6:
        raise ValueError("Monte Carlo hosts need at least 6 vertices")
    if trials < 1:
        raise ValueError("need at least one trial")
    den = falling_factorial(n, 6)
    values = []
    for t in range(trials):
        red, blue = _random_clique_matrices(n, trial_seed(seed, t))
        values.append(Fraction(alternating_hom_inj_from_matrices(red, blue), den))
    mean = sum(values, Fraction(0)) / trials
    return MonteCarloResult(
        n=n,
        trials=trials,
        seed=seed,
        mean=mean,
        minimum=min(values),
        maximum=max(values),
    )
