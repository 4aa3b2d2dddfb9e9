"""Plane layouts: which positions of a block form each colored line.

A layout ("schema") on k positions is a list of b lines, each an h-subset
of {0, .., k-1}, such that every pair of positions lies on exactly one
line. The line index doubles as the color index everywhere in the package.

Two layouts are built in. The seven-point one has lines
{i, i+1, i+3} mod 7. The nine-point one stores its fixed point at position
0 and runs an eight-cycle over positions 1..8: lines {i, i+1, i+3} mod 8 on
the cycle, plus four lines {fixed, j, j+4} through position 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import DuplicateElements, MalformedInput

__all__ = [
    "KaleidoscopeSchema",
    "OrderedBlock",
    "builtin_schema",
    "validate_schema",
    "SchemaReport",
    "lines_of",
    "schema_to_json",
    "schema_from_json",
]


@dataclass(frozen=True)
class KaleidoscopeSchema:
    name: str
    k: int
    h: int
    lines: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 3 or not (2 <= self.h < self.k):
            raise MalformedInput(
                f"need k > h >= 2, got k={self.k}, h={self.h}"
            )
        for line in self.lines:
            if len(line) != self.h or len(set(line)) != self.h:
                raise MalformedInput(f"line {line} is not an {self.h}-subset")
            if any(not isinstance(i, int) or not 0 <= i < self.k for i in line):
                raise MalformedInput(f"line {line} has an index out of range")

    @property
    def b(self) -> int:
        """Number of lines, which is also the number of colors."""
        return len(self.lines)

    @property
    def lambda_underlying(self) -> int:
        """Pair multiplicity of the uncolored design a family develops into.

        Each block covers a point pair once per line through the matching
        position pair, and the lines tile the position pairs, so this is
        the line count b.
        """
        return len(self.lines)

    def lines_at(self, points: tuple) -> tuple[frozenset, ...]:
        """The b colored lines of a block, as point sets, color order."""
        return tuple(
            frozenset(points[i] for i in line) for line in self.lines
        )

    def same_layout(self, other: "KaleidoscopeSchema") -> bool:
        return (
            self.k == other.k
            and self.h == other.h
            and self.lines == other.lines
        )


@dataclass
class SchemaReport:
    valid: bool
    first_violation: Optional[tuple[tuple[int, int], int]]
    coverage: dict


def _sorted_line(indices: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(indices))


def _fano_schema() -> KaleidoscopeSchema:
    lines = tuple(
        _sorted_line((i, (i + 1) % 7, (i + 3) % 7)) for i in range(7)
    )
    return KaleidoscopeSchema("fano", 7, 3, lines)


def _hesse_schema() -> KaleidoscopeSchema:
    cyc = [
        _sorted_line((1 + i, 1 + (i + 1) % 8, 1 + (i + 3) % 8))
        for i in range(8)
    ]
    thru = [_sorted_line((0, j + 1, j + 5)) for j in range(4)]
    return KaleidoscopeSchema("hesse", 9, 3, tuple(cyc + thru))


_BUILTINS = {"fano": _fano_schema, "hesse": _hesse_schema}


def builtin_schema(name: str) -> KaleidoscopeSchema:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise MalformedInput(f"no builtin layout named {name!r}") from None


def validate_schema(schema: KaleidoscopeSchema) -> SchemaReport:
    """Check that the lines cover every position pair exactly once."""
    coverage = {pair: 0 for pair in combinations(range(schema.k), 2)}
    for line in schema.lines:
        for pair in combinations(sorted(line), 2):
            coverage[pair] += 1
    first = None
    for pair in combinations(range(schema.k), 2):
        if coverage[pair] != 1:
            first = (pair, coverage[pair])
            break
    return SchemaReport(first is None, first, coverage)


@dataclass(frozen=True)
class OrderedBlock:
    """A block whose tuple order carries the layout's positions."""

    schema: KaleidoscopeSchema
    points: tuple

    def __post_init__(self):
        if len(self.points) != self.schema.k:
            raise MalformedInput(
                f"block has {len(self.points)} points, layout wants"
                f" {self.schema.k}"
            )
        if len(set(self.points)) != len(self.points):
            raise DuplicateElements(f"repeated point in block {self.points}")

    def lines(self) -> tuple[frozenset, ...]:
        return self.schema.lines_at(self.points)


def lines_of(block: OrderedBlock) -> tuple[frozenset, ...]:
    """Colored lines of a block, indexed by color."""
    return block.lines()


def schema_to_json(schema: KaleidoscopeSchema):
    """Builtin layouts serialize as their name, others in full."""
    for name, build in _BUILTINS.items():
        if schema.same_layout(build()):
            return name
    return {
        "name": schema.name,
        "k": schema.k,
        "h": schema.h,
        "lines": [list(line) for line in schema.lines],
    }


def schema_from_json(obj) -> KaleidoscopeSchema:
    """Load a layout and insist it tiles the position pairs."""
    if isinstance(obj, str):
        return builtin_schema(obj)
    if not isinstance(obj, dict):
        raise MalformedInput("layout must be a name or a JSON object")
    try:
        name = obj["name"]
        k = obj["k"]
        h = obj["h"]
        raw_lines = obj["lines"]
    except KeyError as missing:
        raise MalformedInput(f"layout object lacks key {missing}") from None
    if not isinstance(raw_lines, list):
        raise MalformedInput("layout lines must be a list")
    try:
        lines = tuple(_sorted_line(line) for line in raw_lines)
    except TypeError:
        raise MalformedInput("layout lines must hold integers") from None
    schema = KaleidoscopeSchema(str(name), int(k), int(h), lines)
    report = validate_schema(schema)
    if not report.valid:
        pair, count = report.first_violation
        raise MalformedInput(
            f"layout covers position pair {pair} {count} times, wanted 1"
        )
    return schema
