"""Difference families, their colored refinements, and developed designs.

Verification functions return report objects and never raise on content
that is merely wrong. A family either covers each nonzero difference the
stated number of times or the report says which element is off. Exceptions
mark malformed input only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .algebra import (
    Group,
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    make_group,
)
from .errors import (
    BadVectorLength,
    DuplicateElements,
    InvalidKDF,
    InvalidPBD,
    MalformedInput,
    NotAUnitalDesign,
)
from .schema import KaleidoscopeSchema, OrderedBlock, schema_from_json, schema_to_json

__all__ = [
    "delta",
    "DFReport",
    "verify_df",
    "DifferenceFamily",
    "KaleidoscopicDifferenceFamily",
    "KDFReport",
    "verify_kdf",
    "Plane",
    "Kaleidoscope",
    "develop",
    "KaleidoscopeReport",
    "verify_kaleidoscope",
    "replicate",
    "is_linear_block",
    "PairwiseBalancedDesign",
    "PBDReport",
    "verify_pbd",
    "translate_block",
    "scale_block",
    "kdf_to_json",
    "kdf_from_json",
    "kaleidoscope_to_json",
    "kaleidoscope_from_json",
    "df_to_json",
    "df_from_json",
    "pbd_to_text",
    "pbd_from_text",
]


def delta(points: Iterable, group: Group) -> tuple:
    """All ordered differences x - y of distinct members, sorted canonically.

    A set of n distinct elements yields n(n-1) differences, listed with
    multiplicity.
    """
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise DuplicateElements(f"repeated element in {pts!r}")
    out = [group.sub(x, y) for x in pts for y in pts if x != y]
    out.sort()
    return tuple(out)


# ---------------------------------------------------------------------------
# plain difference families


@dataclass
class DFReport:
    valid: bool
    lam: int
    coverage: dict
    off_elements: list  # (element, count) pairs where count != lam
    bad_blocks: list    # blocks of the wrong size or with repeats

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.bad_blocks:
            parts.append(f"{len(self.bad_blocks)} malformed blocks")
        if self.off_elements:
            el, count = self.off_elements[0]
            parts.append(
                f"difference {el!r} covered {count} times, wanted {self.lam}"
            )
        return "; ".join(parts) or "invalid"


def verify_df(blocks: Sequence, group: Group, k: int, lam: int) -> DFReport:
    """Check that blocks form a (v, k, lam) difference family over group.

    Every nonzero group element must occur exactly lam times among the
    differences of all blocks.
    """
    coverage: dict = {}
    bad_blocks = []
    for block in blocks:
        pts = list(block)
        if len(pts) != k or len(set(pts)) != k:
            bad_blocks.append(tuple(pts))
            continue
        for x in pts:
            for y in pts:
                if x != y:
                    d = group.sub(x, y)
                    coverage[d] = coverage.get(d, 0) + 1
    off = []
    for el in group.elements():
        if el == group.zero:
            continue
        count = coverage.get(el, 0)
        if count != lam:
            off.append((el, count))
    valid = not bad_blocks and not off and group.zero not in coverage
    return DFReport(valid, lam, coverage, off, bad_blocks)


@dataclass
class DifferenceFamily:
    """A plain, uncolored difference family."""

    group: Group
    k: int
    lam: int
    blocks: tuple[frozenset, ...]

    def report(self) -> DFReport:
        return verify_df(self.blocks, self.group, self.k, self.lam)


# ---------------------------------------------------------------------------
# colored families


@dataclass
class KaleidoscopicDifferenceFamily:
    """Ordered blocks whose same-colored lines each form a (v, h, 1) family."""

    group: Group
    schema: KaleidoscopeSchema
    blocks: tuple[OrderedBlock, ...]
    provenance: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for block in self.blocks:
            if not block.schema.same_layout(self.schema):
                raise MalformedInput("block layout differs from family layout")


@dataclass
class KDFReport:
    valid: bool
    family_report: DFReport
    color_reports: list[DFReport]
    failing_colors: list[int]

    def summary(self) -> str:
        if self.valid:
            return "valid"
        if self.failing_colors:
            return f"colors {self.failing_colors} fail: " + "; ".join(
                self.color_reports[c].summary() for c in self.failing_colors[:3]
            )
        return "block family fails: " + self.family_report.summary()


def verify_kdf(kdf: KaleidoscopicDifferenceFamily) -> KDFReport:
    """Check the block family and each color class.

    The blocks, as point sets, must form a (v, k, b) difference family.
    For every color, the lines of that color across all blocks must form a
    (v, h, 1) difference family. The first condition follows from the
    second whenever the layout tiles its position pairs; both are checked.
    """
    group = kdf.group
    schema = kdf.schema
    family_report = verify_df(
        [frozenset(b.points) for b in kdf.blocks],
        group,
        schema.k,
        schema.lambda_underlying,
    )
    color_reports = []
    failing = []
    all_lines = [b.lines() for b in kdf.blocks]
    for color in range(schema.b):
        rep = verify_df(
            [lines[color] for lines in all_lines], group, schema.h, 1
        )
        color_reports.append(rep)
        if not rep.valid:
            failing.append(color)
    valid = family_report.valid and not failing
    return KDFReport(valid, family_report, color_reports, failing)


def translate_block(block: OrderedBlock, g, group: Group) -> OrderedBlock:
    return OrderedBlock(
        block.schema, tuple(group.add(x, g) for x in block.points)
    )


def scale_block(block: OrderedBlock, u, field: Group) -> OrderedBlock:
    return OrderedBlock(
        block.schema, tuple(field.mul(u, x) for x in block.points)
    )


# ---------------------------------------------------------------------------
# full colored designs


@dataclass(frozen=True)
class Plane:
    """One colored plane: line sets indexed by color.

    Planes that arise as a translate of an ordered block also remember the
    point tuple, which keeps their serialized form compact.
    """

    lines: tuple[frozenset, ...]
    block: Optional[tuple] = None


@dataclass
class Kaleidoscope:
    points: tuple
    schema: KaleidoscopeSchema
    planes: tuple[Plane, ...]
    group: Optional[Group] = None


def develop(kdf: KaleidoscopicDifferenceFamily) -> Kaleidoscope:
    """Translate every block by every group element.

    Refuses families that fail verification, since the result would not be
    a kaleidoscope.
    """
    report = verify_kdf(kdf)
    if not report.valid:
        raise InvalidKDF(report.summary())
    group = kdf.group
    schema = kdf.schema
    planes = []
    for block in kdf.blocks:
        for g in group.elements():
            pts = tuple(group.add(x, g) for x in block.points)
            planes.append(Plane(schema.lines_at(pts), pts))
    return Kaleidoscope(
        tuple(group.elements()), schema, tuple(planes), group
    )


@dataclass
class KaleidoscopeReport:
    valid: bool
    pairs: int
    colors: int
    first_violation: Optional[tuple]  # ((x, y), color, count)
    alien_points: list

    def summary(self) -> str:
        if self.valid:
            return "valid"
        if self.alien_points:
            return f"planes use unknown points {self.alien_points[:3]!r}"
        (x, y), color, count = self.first_violation
        return (
            f"pair ({x!r}, {y!r}) carries color {color} {count} times,"
            " wanted 1"
        )


def verify_kaleidoscope(k: Kaleidoscope) -> KaleidoscopeReport:
    """Count (pair, color) incidences and demand each equals one."""
    point_set = set(k.points)
    b = k.schema.b
    alien = []
    counts: dict = {}
    for plane in k.planes:
        if len(plane.lines) != b:
            raise MalformedInput("plane has the wrong number of lines")
        for color, line in enumerate(plane.lines):
            for x in line:
                if x not in point_set:
                    alien.append(x)
            for x, y in combinations(sorted(line), 2):
                counts[(x, y, color)] = counts.get((x, y, color), 0) + 1
    if alien:
        return KaleidoscopeReport(False, len(counts), b, None, alien)
    n = len(k.points)
    expected = n * (n - 1) // 2 * b
    over = [key for key, c in counts.items() if c != 1]
    if not over and len(counts) == expected:
        return KaleidoscopeReport(True, expected, b, None, [])
    if over:
        x, y, color = min(over)
        return KaleidoscopeReport(
            False, expected, b, ((x, y), color, counts[(x, y, color)]), []
        )
    # Some pair-color slot is missing; find the first one.
    pts = sorted(point_set)
    for x, y in combinations(pts, 2):
        for color in range(b):
            if (x, y, color) not in counts:
                return KaleidoscopeReport(
                    False, expected, b, ((x, y), color, 0), []
                )
    return KaleidoscopeReport(False, expected, b, None, [])


# ---------------------------------------------------------------------------
# pairwise balanced designs and replication


@dataclass
class PairwiseBalancedDesign:
    """Blocks over points 0..v-1, meant to cover each pair exactly once."""

    v: int
    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        for block in self.blocks:
            for x in block:
                if not isinstance(x, int) or not 0 <= x < self.v:
                    raise MalformedInput(
                        f"point {x!r} outside 0..{self.v - 1}"
                    )


@dataclass
class PBDReport:
    valid: bool
    first_violation: Optional[tuple]  # ((x, y), count)


def verify_pbd(pbd: PairwiseBalancedDesign) -> PBDReport:
    coverage = {}
    for block in pbd.blocks:
        for pair in combinations(sorted(block), 2):
            coverage[pair] = coverage.get(pair, 0) + 1
    for pair in combinations(range(pbd.v), 2):
        count = coverage.get(pair, 0)
        if count != 1:
            return PBDReport(False, (pair, count))
    return PBDReport(True, None)


def replicate(
    design: PairwiseBalancedDesign, schema: KaleidoscopeSchema
) -> Kaleidoscope:
    """Color b copies of each block of a 2-(v, k, 1) design.

    Copy j of a block assigns color (i + j) mod b to its i-th layout line,
    so the copies exhaust the colorings cyclically. The input must have
    uniform block size k equal to the layout's and cover each point pair
    exactly once.
    """
    k = schema.k
    for block in design.blocks:
        if len(block) != k:
            raise NotAUnitalDesign(
                f"block size {len(block)} differs from layout size {k}"
            )
    rep = verify_pbd(design)
    if not rep.valid:
        pair, count = rep.first_violation
        raise NotAUnitalDesign(f"pair {pair} covered {count} times")
    b = schema.b
    planes = []
    for block in design.blocks:
        ordered = tuple(sorted(block))
        base = schema.lines_at(ordered)
        for j in range(b):
            planes.append(
                Plane(tuple(base[(c - j) % b] for c in range(b)), None)
            )
    return Kaleidoscope(tuple(range(design.v)), schema, tuple(planes), None)


# ---------------------------------------------------------------------------
# linear blocks over the two-element field


def is_linear_block(vectors: Iterable[int], n: int) -> bool:
    """True when the seven vectors plus zero close under bitwise addition.

    The vectors must be distinct, nonzero and fit in n bits. Closure makes
    them the nonzero members of a three-dimensional subspace.
    """
    vs = list(vectors)
    if len(vs) != 7:
        raise MalformedInput(f"need exactly 7 vectors, got {len(vs)}")
    limit = 1 << n
    for v in vs:
        if not isinstance(v, int) or not 0 < v < limit:
            raise BadVectorLength(f"{v!r} is not a nonzero {n}-bit vector")
    group = set(vs)
    if len(group) != 7:
        raise DuplicateElements("vectors must be distinct")
    return all(x ^ y in group for x, y in combinations(vs, 2))


# ---------------------------------------------------------------------------
# serialization


def df_to_json(df: DifferenceFamily) -> dict:
    return {
        "group": descriptor_to_json(df.group.descriptor),
        "k": df.k,
        "lambda": df.lam,
        "blocks": [
            sorted(element_to_json(df.group, x) for x in block)
            for block in df.blocks
        ],
    }


def df_from_json(obj) -> DifferenceFamily:
    if not isinstance(obj, dict):
        raise MalformedInput("difference family must be a JSON object")
    try:
        group = make_group(descriptor_from_json(obj["group"]))
        k = int(obj["k"])
        lam = int(obj["lambda"])
        raw = obj["blocks"]
    except KeyError as missing:
        raise MalformedInput(f"family object lacks key {missing}") from None
    if not isinstance(raw, list):
        raise MalformedInput("blocks must be a list")
    blocks = tuple(
        frozenset(element_from_json(group, x) for x in block) for block in raw
    )
    return DifferenceFamily(group, k, lam, blocks)


def kdf_to_json(kdf: KaleidoscopicDifferenceFamily) -> dict:
    return {
        "group": descriptor_to_json(kdf.group.descriptor),
        "schema": schema_to_json(kdf.schema),
        "blocks": [
            [element_to_json(kdf.group, x) for x in block.points]
            for block in kdf.blocks
        ],
        "provenance": kdf.provenance,
    }


def kdf_from_json(obj) -> KaleidoscopicDifferenceFamily:
    if not isinstance(obj, dict):
        raise MalformedInput("family must be a JSON object")
    try:
        group = make_group(descriptor_from_json(obj["group"]))
        schema = schema_from_json(obj["schema"])
        raw = obj["blocks"]
    except KeyError as missing:
        raise MalformedInput(f"family object lacks key {missing}") from None
    if not isinstance(raw, list):
        raise MalformedInput("blocks must be a list")
    blocks = tuple(
        OrderedBlock(
            schema, tuple(element_from_json(group, x) for x in block)
        )
        for block in raw
    )
    provenance = obj.get("provenance") or {}
    if not isinstance(provenance, dict):
        raise MalformedInput("provenance must be an object")
    return KaleidoscopicDifferenceFamily(group, schema, blocks, provenance)


def kaleidoscope_to_json(k: Kaleidoscope) -> dict:
    if k.group is not None:
        points = descriptor_to_json(k.group.descriptor)
        group = k.group

        def enc(x):
            return element_to_json(group, x)

    else:
        points = len(k.points)
        if tuple(k.points) != tuple(range(points)):
            raise MalformedInput(
                "only integer point ranges serialize without a group"
            )

        def enc(x):
            return int(x)
    planes = []
    for plane in k.planes:
        if plane.block is not None:
            planes.append([enc(x) for x in plane.block])
        else:
            planes.append(
                {"lines": [[enc(x) for x in sorted(line)] for line in plane.lines]}
            )
    return {
        "points": points,
        "schema": schema_to_json(k.schema),
        "planes": planes,
    }


def kaleidoscope_from_json(obj) -> Kaleidoscope:
    if not isinstance(obj, dict):
        raise MalformedInput("kaleidoscope must be a JSON object")
    try:
        raw_points = obj["points"]
        schema = schema_from_json(obj["schema"])
        raw_planes = obj["planes"]
    except KeyError as missing:
        raise MalformedInput(f"kaleidoscope lacks key {missing}") from None
    group = None
    if isinstance(raw_points, int):
        points = tuple(range(raw_points))

        def dec(x):
            if not isinstance(x, int) or not 0 <= x < raw_points:
                raise MalformedInput(f"point {x!r} out of range")
            return x

    elif isinstance(raw_points, dict):
        group = make_group(descriptor_from_json(raw_points))
        points = tuple(group.elements())

        def dec(x):
            return element_from_json(group, x)

    else:
        raise MalformedInput("points must be a count or a group descriptor")
    if not isinstance(raw_planes, list):
        raise MalformedInput("planes must be a list")
    planes = []
    for raw in raw_planes:
        if isinstance(raw, dict):
            raw_lines = raw.get("lines")
            if not isinstance(raw_lines, list) or len(raw_lines) != schema.b:
                raise MalformedInput("plane needs one line per color")
            lines = tuple(
                frozenset(dec(x) for x in line) for line in raw_lines
            )
            for line in lines:
                if len(line) != schema.h:
                    raise MalformedInput("line has the wrong size")
            planes.append(Plane(lines, None))
        elif isinstance(raw, list):
            pts = tuple(dec(x) for x in raw)
            block = OrderedBlock(schema, pts)
            planes.append(Plane(block.lines(), pts))
        else:
            raise MalformedInput("plane must be a point list or a line table")
    return Kaleidoscope(points, schema, tuple(planes), group)


def pbd_to_text(pbd: PairwiseBalancedDesign) -> str:
    lines = [f"v={pbd.v}"]
    for block in pbd.blocks:
        lines.append(" ".join(str(x) for x in sorted(block)))
    return "\n".join(lines) + "\n"


def pbd_from_text(text: str) -> PairwiseBalancedDesign:
    """Parse the block-per-line format.

    The first significant line is ``v=<count>``; every later line lists
    one block as space-separated point indices. Blank lines and lines
    starting with ``#`` are skipped.
    """
    v = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if v is None:
            if not line.startswith("v="):
                raise MalformedInput(f"line {lineno}: expected 'v=<count>'")
            try:
                v = int(line[2:])
            except ValueError:
                raise MalformedInput(
                    f"line {lineno}: bad point count {line[2:]!r}"
                ) from None
            continue
        try:
            pts = [int(tok) for tok in line.split()]
        except ValueError:
            raise MalformedInput(
                f"line {lineno}: blocks are space-separated ints"
            ) from None
        if len(set(pts)) != len(pts):
            raise DuplicateElements(f"line {lineno}: repeated point")
        blocks.append(frozenset(pts))
    if v is None:
        raise MalformedInput("no 'v=' header found")
    return PairwiseBalancedDesign(v, tuple(blocks))


def dumps(obj: dict) -> str:
    """Stable JSON text: sorted keys, no trailing spaces."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)
