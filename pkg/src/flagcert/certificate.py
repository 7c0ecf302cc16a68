"""Certificate model, flag products, exact PSD verification and file I/O.

A certificate bundles a target pattern, a sparse base vector over the 26
template classes, two rooted flag families sharing a symmetric matrix, and
the claimed bound.  Verification reproduces every coefficient in exact
rational arithmetic; nothing here ever rounds.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import builtin
from .counting import t_bip
from .graphs import ClassTable, Color, ColoredGraph, Flag, canonical_form


class SchemaError(ValueError):
    """Certificate text violates the schema; ``path`` locates the offence."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


# -- symmetric matrices and PSD checking --------------------------------------


class SymMatrix:
    """Dense symmetric matrix of exact rationals."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        m = len(rows)
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"row {i} has length {len(row)}, expected {m}")
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("SymMatrix is immutable")

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access, matching the published index convention."""
        return self.rows[i - 1][j - 1]

    def with_entry(self, i: int, j: int, value: Fraction) -> "SymMatrix":
        """Copy with the (i, j) and (j, i) entries replaced (1-based)."""
        rows = [list(r) for r in self.rows]
        rows[i - 1][j - 1] = value
        rows[j - 1][i - 1] = value
        return SymMatrix(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)


@dataclass(frozen=True)
class PsdReport:
    """Outcome of exact LDL^T elimination with diagonal pivoting."""

    is_psd: bool
    pivot_sequence: tuple[Fraction, ...]
    kernel_basis: tuple[tuple[Fraction, ...], ...]
    detail: str = ""


def psd_check(m: SymMatrix) -> PsdReport:
    """Decide positive semidefiniteness exactly and extract the kernel.

    Diagonal pivoting always selects the largest remaining diagonal entry.
    A step where every remaining diagonal entry is zero is accepted only if
    the whole residual block vanishes; those directions span the kernel.
    A negative pivot, or a zero diagonal next to residual off-diagonal mass,
    certifies that the matrix is not PSD.
    """
    n = m.order
    s = [list(row) for row in m.rows]
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    pivots: list[Fraction] = []

    k = 0
    while k < n:
        p = max(range(k, n), key=lambda i: s[i][i])
        if s[p][p] == 0:
            residual_zero = all(
                s[i][j] == 0 for i in range(k, n) for j in range(k, n)
            )
            if residual_zero:
                pivots.extend([Fraction(0)] * (n - k))
                break
            if all(s[i][i] == 0 for i in range(k, n)):
                return PsdReport(
                    False,
                    tuple(pivots),
                    (),
                    detail="zero diagonal block with nonzero off-diagonal residue",
                )
            # fall through: pivot on a strictly negative diagonal entry
            p = min(range(k, n), key=lambda i: s[i][i])
        if p != k:
            perm[k], perm[p] = perm[p], perm[k]
            s[k], s[p] = s[p], s[k]
            for row in s:
                row[k], row[p] = row[p], row[k]
            lower[k], lower[p] = lower[p], lower[k]
        pivot = s[k][k]
        pivots.append(pivot)
        row_k = list(s[k])
        for i in range(k + 1, n):
            factor = s[i][k] / pivot
            lower[i][k] = factor
            if factor:
                for j in range(k + 1, n):
                    s[i][j] -= factor * row_k[j]
            s[i][k] = Fraction(0)
            s[k][i] = Fraction(0)
        k += 1

    if any(p < 0 for p in pivots):
        return PsdReport(False, tuple(pivots), (), detail="negative pivot")

    # Kernel directions correspond to zero pivots: solve L^T y = e_k and
    # undo the permutation.
    kernel = []
    for k, pivot in enumerate(pivots):
        if pivot != 0:
            continue
        y = [Fraction(0)] * n
        y[k] = Fraction(1)
        for i in range(k - 1, -1, -1):
            y[i] = -sum(lower[j][i] * y[j] for j in range(i + 1, n))
        x = [Fraction(0)] * n
        for i in range(n):
            x[perm[i]] = y[i]
        lead = next(v for v in x if v)
        kernel.append(tuple(v / lead for v in x))

    for vec in kernel:
        for i in range(n):
            if sum(m.rows[i][j] * vec[j] for j in range(n)) != 0:
                raise AssertionError("kernel reconstruction failed")
    return PsdReport(True, tuple(pivots), tuple(kernel))


# -- flag products and expansions ----------------------------------------------


def flag_product(f1: Flag, f2: Flag) -> ColoredGraph:
    """Glue two flags along their roots; the shared root edge appears once.

    The output forgets the root markers.  Edges present between the roots in
    both flags must agree in colour.
    """
    if len(f1.roots) != len(f2.roots):
        raise ValueError("flags must have the same number of roots")

    def local_map(f: Flag, extra_base: int) -> dict[int, int]:
        mapping = {r: k for k, r in enumerate(f.roots)}
        nxt = extra_base
        for v in range(f.graph.n):
            if v not in mapping:
                mapping[v] = nxt
                nxt += 1
        return mapping

    nroots = len(f1.roots)
    m1 = local_map(f1, nroots)
    m2 = local_map(f2, nroots + (f1.graph.n - nroots))
    merged: dict[tuple[int, int], Color] = {}
    for f, mapping in ((f1, m1), (f2, m2)):
        for u, v, c in f.graph.edges:
            a, b = mapping[u], mapping[v]
            key = (a, b) if a < b else (b, a)
            if key in merged and merged[key] != c:
                raise ValueError(
                    f"root edge colour conflict at pair {key}: "
                    f"{merged[key].value} vs {c.value}"
                )
            merged[key] = c
    n = f1.graph.n + f2.graph.n - nroots
    return ColoredGraph(n, ((u, v, c) for (u, v), c in merged.items()))


@lru_cache(maxsize=None)
def _expansion_cached(p: ColoredGraph, table: ClassTable) -> dict[int, Fraction]:
    return {index: t_bip(p, table.representative(index)) for index in table.indices}


def expand_in_classes(p: ColoredGraph, table: ClassTable) -> dict[int, Fraction]:
    """Conditional densities of the pattern across all template classes."""
    return dict(_expansion_cached(p, table))


# -- the certificate -------------------------------------------------------------


@dataclass(frozen=True)
class FlagFamily:
    """An ordered flag list sharing a root-edge colour, plus its matrix."""

    root_edge_color: Color
    flags: tuple[Flag, ...]
    matrix: SymMatrix

    def __post_init__(self):
        if self.matrix.order != len(self.flags):
            raise ValueError("matrix order must match the number of flags")
        for k, f in enumerate(self.flags):
            if len(f.roots) != 2:
                raise ValueError(f"flag {k} must have exactly two roots")
            c = f.graph.edge_color(*f.roots)
            if c != self.root_edge_color:
                raise ValueError(
                    f"flag {k} root edge colour {c} does not match family"
                )


@dataclass(frozen=True)
class Certificate:
    """Serializable proof object for one density bound."""

    name: str
    template_parts: tuple[int, int]
    target: ColoredGraph
    base: dict[int, Fraction]
    families: tuple[FlagFamily, ...]
    bound: Fraction
    classes: Optional[tuple[ColoredGraph, ...]] = None


@lru_cache(maxsize=1)
def builtin_certificate() -> Certificate:
    """The shipped alternating-6-cycle certificate."""
    matrix = SymMatrix(builtin.matrix_rows())
    return Certificate(
        name="alternating-6-cycle",
        template_parts=builtin.TEMPLATE_PARTS,
        target=builtin.target(),
        base=dict(builtin.BASE_VECTOR),
        families=(
            FlagFamily(Color.RED, builtin.red_flags(), matrix),
            FlagFamily(Color.BLUE, builtin.blue_flags(), matrix),
        ),
        bound=builtin.BOUND,
        classes=builtin.class_representatives(),
    )


def certificate_coefficients(
    cert: Certificate, table: ClassTable
) -> dict[int, Fraction]:
    """Per-class coefficient of the certificate's upper-bound expression.

    base(l) plus the full ordered double sum of matrix entries against the
    expansions of the glued flag products.
    """
    coeffs = {
        index: cert.base.get(index, Fraction(0)) for index in table.indices
    }
    for family in cert.families:
        m = len(family.flags)
        for i in range(m):
            for j in range(m):
                weight = family.matrix.rows[i][j]
                if not weight:
                    continue
                expansion = _expansion_cached(
                    flag_product(family.flags[i], family.flags[j]), table
                )
                for index, value in expansion.items():
                    if value:
                        coeffs[index] += weight * value
    return coeffs


# -- verification -----------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    certificate_name: str
    checks: tuple[CheckResult, ...]
    coefficients: dict[int, Fraction]
    bound: Fraction
    psd_reports: tuple[PsdReport, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "certificate": self.certificate_name,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "coefficients": {
                str(k): format_rational(v)
                for k, v in sorted(self.coefficients.items())
            },
            "bound": format_rational(self.bound),
            "psd": [
                {
                    "is_psd": r.is_psd,
                    "pivots": [format_rational(p) for p in r.pivot_sequence],
                    "kernel": [
                        [format_rational(x) for x in vec] for vec in r.kernel_basis
                    ],
                }
                for r in self.psd_reports
            ],
        }


def verify_certificate(cert: Certificate, strict_base: bool = True) -> VerificationReport:
    """Run the full verification pipeline; failures land in the report.

    Checks, in order: template classification, base vector against the
    target's conditional densities (strict mode), PSD status of every family
    matrix, all class coefficients against the claimed bound, and the shipped
    golden expansion table.
    """
    checks: list[CheckResult] = []
    table = builtin.class_table()

    # 1. classification of the template colourings
    mult_sum = sum(e.multiplicity for e in table.classes)
    class_ok = len(table) == builtin.NUM_CLASSES and mult_sum == builtin.NUM_COLORINGS
    detail = f"{mult_sum} colourings in {len(table)} classes"
    if cert.template_parts != builtin.TEMPLATE_PARTS:
        class_ok = False
        detail += f"; unsupported template parts {list(cert.template_parts)}"
    if cert.classes is not None:
        if len(cert.classes) != len(table):
            class_ok = False
            detail += f"; certificate lists {len(cert.classes)} classes"
        else:
            group = table.group
            for index, rep in enumerate(cert.classes, start=1):
                if canonical_form(rep, group) != canonical_form(
                    table.representative(index), group
                ):
                    class_ok = False
                    detail += f"; class {index} mismatch"
                    break
    checks.append(CheckResult("classification", class_ok, detail))

    # 2. base vector ties the linear part to the target's densities
    if strict_base:
        try:
            base_ok = True
            bad = []
            for index in table.indices:
                expected = t_bip(cert.target, table.representative(index))
                if cert.base.get(index, Fraction(0)) != expected:
                    base_ok = False
                    bad.append(index)
            base_detail = (
                "matches target densities" if base_ok else f"mismatch at {bad}"
            )
        except ValueError as exc:
            base_ok = False
            base_detail = str(exc)
        checks.append(CheckResult("base_vector", base_ok, base_detail))

    # 3. PSD check per family
    psd_reports = []
    for k, family in enumerate(cert.families):
        report = psd_check(family.matrix)
        psd_reports.append(report)
        checks.append(
            CheckResult(
                f"psd_family_{family.root_edge_color.value}",
                report.is_psd,
                f"kernel dimension {len(report.kernel_basis)}"
                if report.is_psd
                else report.detail,
            )
        )

    # 4. every class coefficient equals the claimed bound
    try:
        coefficients = certificate_coefficients(cert, table)
        bad = [k for k, v in coefficients.items() if v != cert.bound]
        checks.append(
            CheckResult(
                "coefficients",
                not bad,
                f"all 26 equal {format_rational(cert.bound)}"
                if not bad
                else f"classes {bad} deviate from the bound",
            )
        )
    except ValueError as exc:
        coefficients = {}
        checks.append(CheckResult("coefficients", False, str(exc)))

    # 5. golden table: recompute the 72 shipped expansion equations
    golden_ok = True
    bad_keys = []
    families = {"R": builtin.red_flags(), "B": builtin.blue_flags()}
    for fam, i, j in builtin.golden_pairs():
        flags = families[fam]
        product = flag_product(flags[i - 1], flags[j - 1])
        if _expansion_cached(product, table) != builtin.golden_expansion(fam, i, j):
            golden_ok = False
            bad_keys.append(f"{fam}{i}.{j}")
    checks.append(
        CheckResult(
            "golden_expansions",
            golden_ok,
            "72 equations reproduced" if golden_ok else f"mismatch at {bad_keys}",
        )
    )

    return VerificationReport(
        certificate_name=cert.name,
        checks=tuple(checks),
        coefficients=coefficients,
        bound=cert.bound,
        psd_reports=tuple(psd_reports),
    )


# -- serialization -----------------------------------------------------------------

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def format_rational(x: Fraction) -> str:
    """Canonical string form: reduced "p/q", or plain integer when q = 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text, path: str) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(path, f"expected a rational string, got {type(text).__name__}")
    match = _RAT_RE.match(text)
    if not match:
        raise SchemaError(path, f"malformed rational {text!r}")
    num = int(match.group(1))
    if match.group(2) is None:
        return Fraction(num)
    den = int(match.group(2))
    if den <= 0:
        raise SchemaError(path, f"denominator must be positive in {text!r}")
    value = Fraction(num, den)
    if (value.numerator, value.denominator) != (num, den):
        raise SchemaError(
            path, f"rational {text!r} is not canonical; write {format_rational(value)}"
        )
    return value


def _require_keys(obj: dict, path: str, required: Sequence[str], optional: Sequence[str] = ()):
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected an object, got {type(obj).__name__}")
    for key in required:
        if key not in obj:
            raise SchemaError(path, f"missing field {key!r}")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise SchemaError(path, f"unknown fields {sorted(unknown)}")


def _graph_to_obj(g: ColoredGraph) -> dict:
    return {"n": g.n, "edges": [[u, v, c.value] for u, v, c in g.edges]}


def _graph_from_obj(obj, path: str, roots: bool = False):
    required = ["n", "edges"] + (["roots"] if roots else [])
    _require_keys(obj, path, required)
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise SchemaError(f"{path}.n", "vertex count must be a nonnegative integer")
    if not isinstance(obj["edges"], list):
        raise SchemaError(f"{path}.edges", "expected a list")
    edges = []
    prev = None
    for k, item in enumerate(obj["edges"]):
        epath = f"{path}.edges[{k}]"
        if (
            not isinstance(item, list)
            or len(item) != 3
            or not isinstance(item[0], int)
            or not isinstance(item[1], int)
        ):
            raise SchemaError(epath, "expected [u, v, colour]")
        u, v, cval = item
        if not (0 <= u < v < n):
            raise SchemaError(epath, f"require 0 <= u < v < n, got u={u}, v={v}, n={n}")
        if cval not in ("R", "B"):
            raise SchemaError(epath, f"colour must be 'R' or 'B', got {cval!r}")
        if prev is not None and (u, v) <= prev:
            raise SchemaError(epath, "edge pairs must be strictly increasing")
        prev = (u, v)
        edges.append((u, v, Color(cval)))
    graph = ColoredGraph(n, edges)
    if not roots:
        return graph
    rts = obj["roots"]
    if not isinstance(rts, list) or not all(isinstance(r, int) for r in rts):
        raise SchemaError(f"{path}.roots", "expected a list of vertex indices")
    if len(rts) > 2:
        raise SchemaError(f"{path}.roots", "at most two roots are supported")
    if len(rts) != 2:
        raise SchemaError(f"{path}.roots", "exactly two roots required")
    if len(set(rts)) != len(rts):
        raise SchemaError(f"{path}.roots", "duplicate root indices")
    if any(not 0 <= r < n for r in rts):
        raise SchemaError(f"{path}.roots", "root index out of range")
    return Flag(graph, rts)


def save_certificate(cert: Certificate) -> str:
    """Serialize to the certificate text format (strict JSON)."""
    obj = {
        "name": cert.name,
        "template": {"parts": list(cert.template_parts)},
        "target": _graph_to_obj(cert.target),
    }
    if cert.classes is not None:
        obj["classes"] = [_graph_to_obj(g) for g in cert.classes]
    obj["base"] = {
        str(k): format_rational(v) for k, v in sorted(cert.base.items()) if v
    }
    obj["families"] = [
        {
            "root_edge_color": family.root_edge_color.value,
            "flags": [
                dict(_graph_to_obj(f.graph), roots=list(f.roots))
                for f in family.flags
            ],
            "matrix": [
                [format_rational(x) for x in row] for row in family.matrix.rows
            ],
        }
        for family in cert.families
    ]
    obj["bound"] = format_rational(cert.bound)
    return json.dumps(obj, indent=2) + "\n"


def load_certificate(text: str) -> Certificate:
    """Parse and validate certificate text; violations carry a path."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    _require_keys(
        obj,
        "$",
        ["name", "template", "target", "base", "families", "bound"],
        optional=["classes"],
    )
    if not isinstance(obj["name"], str):
        raise SchemaError("$.name", "expected a string")
    _require_keys(obj["template"], "$.template", ["parts"])
    parts = obj["template"]["parts"]
    if (
        not isinstance(parts, list)
        or len(parts) != 2
        or not all(isinstance(p, int) and p > 0 for p in parts)
    ):
        raise SchemaError("$.template.parts", "expected two positive part sizes")

    target = _graph_from_obj(obj["target"], "$.target")

    classes = None
    if "classes" in obj:
        if not isinstance(obj["classes"], list):
            raise SchemaError("$.classes", "expected a list")
        classes = tuple(
            _graph_from_obj(item, f"$.classes[{k}]")
            for k, item in enumerate(obj["classes"])
        )

    if not isinstance(obj["base"], dict):
        raise SchemaError("$.base", "expected an object")
    base = {}
    for key, value in obj["base"].items():
        if not key.isdigit() or not 1 <= int(key) <= builtin.NUM_CLASSES:
            raise SchemaError(f"$.base.{key}", "key must be a class index 1..26")
        base[int(key)] = parse_rational(value, f"$.base.{key}")
        if base[int(key)] < 0:
            raise SchemaError(f"$.base.{key}", "base entries must be nonnegative")

    if not isinstance(obj["families"], list) or not obj["families"]:
        raise SchemaError("$.families", "expected a nonempty list")
    families = []
    for fk, fam_obj in enumerate(obj["families"]):
        fpath = f"$.families[{fk}]"
        _require_keys(fam_obj, fpath, ["root_edge_color", "flags", "matrix"])
        cval = fam_obj["root_edge_color"]
        if cval not in ("R", "B"):
            raise SchemaError(f"{fpath}.root_edge_color", "must be 'R' or 'B'")
        if not isinstance(fam_obj["flags"], list) or not fam_obj["flags"]:
            raise SchemaError(f"{fpath}.flags", "expected a nonempty list")
        flags = tuple(
            _graph_from_obj(item, f"{fpath}.flags[{k}]", roots=True)
            for k, item in enumerate(fam_obj["flags"])
        )
        m = len(flags)
        rows_obj = fam_obj["matrix"]
        if not isinstance(rows_obj, list) or len(rows_obj) != m:
            raise SchemaError(f"{fpath}.matrix", f"expected {m} rows")
        rows = []
        for i, row in enumerate(rows_obj):
            if not isinstance(row, list) or len(row) != m:
                raise SchemaError(f"{fpath}.matrix[{i}]", f"expected {m} entries")
            rows.append(
                [
                    parse_rational(x, f"{fpath}.matrix[{i}][{j}]")
                    for j, x in enumerate(row)
                ]
            )
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] != rows[j][i]:
                    raise SchemaError(
                        f"{fpath}.matrix[{i}][{j}]", "matrix must be symmetric"
                    )
        try:
            families.append(FlagFamily(Color(cval), flags, SymMatrix(rows)))
        except ValueError as exc:
            raise SchemaError(fpath, str(exc)) from exc

    bound = parse_rational(obj["bound"], "$.bound")
    return Certificate(
        name=obj["name"],
        template_parts=(parts[0], parts[1]),
        target=target,
        base=base,
        families=tuple(families),
        bound=bound,
        classes=classes,
    )
