"""Composition constructions: difference matrices, products, and gluing.

The product construction pairs each block entry with a matrix row, one
composed block per matrix column, and adjoins the second family on the
zero fiber. Because any subset of rows of a difference matrix is again a
difference matrix on those rows, the construction respects colored lines
when the blocks are ordered: the lines of color j select rows by the
layout's j-th line, and those selected rows still cover every difference.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .algebra import (
    Group,
    ProductGroup,
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    make_group,
)
from .designs import (
    DifferenceFamily,
    Kaleidoscope,
    KaleidoscopicDifferenceFamily,
    PairwiseBalancedDesign,
    Plane,
    develop,
    kaleidoscope_from_json,
    kdf_from_json,
    verify_df,
    verify_kaleidoscope,
    verify_kdf,
    verify_pbd,
)
from .errors import (
    IngredientInvalid,
    InvalidPBD,
    MalformedInput,
    MissingIngredient,
    OrderTooSmall,
    SchemaMismatch,
)
from .schema import OrderedBlock, schema_to_json

__all__ = [
    "DifferenceMatrix",
    "field_dm",
    "DMReport",
    "verify_dm",
    "compose_df",
    "compose_kdf",
    "pbd_compose",
    "Catalog",
    "dm_to_json",
    "dm_from_json",
]


@dataclass
class DifferenceMatrix:
    """k rows of |H| entries; row differences sweep H exactly once each."""

    group: Group
    rows: tuple[tuple, ...]

    @property
    def k(self) -> int:
        return len(self.rows)


def field_dm(field: Group, k: int) -> DifferenceMatrix:
    """The multiplication-table matrix over a field of order q >= k.

    Row i holds a_i * x as x sweeps the field, where a_i is the i-th
    element in canonical order. Distinct a_i make every row pair differ by
    a nonzero scalar multiple of the sweep, which hits each element once.
    """
    if not field.is_field:
        raise MalformedInput("the multiplication-table matrix needs a field")
    if k > field.order:
        raise OrderTooSmall(
            f"cannot pick {k} distinct multipliers in a field of order"
            f" {field.order}"
        )
    sweep = field.elements()
    rows = tuple(
        tuple(field.mul(a, x) for x in sweep) for a in sweep[:k]
    )
    return DifferenceMatrix(field, rows)


@dataclass
class DMReport:
    valid: bool
    failing_pair: Optional[tuple]  # (row, row, element, count)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        r, s, el, count = self.failing_pair
        return (
            f"rows {r},{s}: difference {el!r} appears {count} times,"
            " wanted 1"
        )


def verify_dm(m: DifferenceMatrix) -> DMReport:
    """Check every row pair covers each group element exactly once."""
    group = m.group
    n = group.order
    for row in m.rows:
        if len(row) != n:
            raise MalformedInput(
                f"row length {len(row)} differs from group order {n}"
            )
    for r in range(len(m.rows)):
        for s in range(r + 1, len(m.rows)):
            counts: dict = {}
            for a, b in zip(m.rows[r], m.rows[s]):
                d = group.sub(a, b)
                counts[d] = counts.get(d, 0) + 1
            for el in group.elements():
                if counts.get(el, 0) != 1:
                    return DMReport(
                        False, (r, s, el, counts.get(el, 0))
                    )
    return DMReport(True, None)


def _check_dm_ingredient(m: DifferenceMatrix, k: int, group: Group):
    if m.k != k:
        raise IngredientInvalid(
            f"matrix has {m.k} rows, the blocks have {k} entries"
        )
    if m.group != group:
        raise IngredientInvalid("matrix group differs from the second family")
    rep = verify_dm(m)
    if not rep.valid:
        raise IngredientInvalid("difference matrix: " + rep.summary())


def compose_df(
    df: DifferenceFamily, dfp: DifferenceFamily, m: DifferenceMatrix
) -> DifferenceFamily:
    """Product of two (*, k, lam) families through a difference matrix.

    Output blocks pair the i-th point of each first-family block with the
    i-th row of the matrix, one block per column, plus the second family
    lifted onto the zero fiber. The result lives over the direct product.
    """
    if df.k != dfp.k or df.lam != dfp.lam:
        raise IngredientInvalid("families must share k and lambda")
    for name, ingredient in (("first", df), ("second", dfp)):
        rep = ingredient.report()
        if not rep.valid:
            raise IngredientInvalid(f"{name} family: {rep.summary()}")
    _check_dm_ingredient(m, df.k, dfp.group)
    product = ProductGroup(df.group, dfp.group)
    blocks = []
    for block in df.blocks:
        ordered = sorted(block)
        for col in range(dfp.group.order):
            blocks.append(
                frozenset(
                    (pt, m.rows[i][col]) for i, pt in enumerate(ordered)
                )
            )
    zero = df.group.zero
    for block in dfp.blocks:
        blocks.append(frozenset((zero, y) for y in block))
    return DifferenceFamily(product, df.k, df.lam, tuple(blocks))


def compose_kdf(
    kdf: KaleidoscopicDifferenceFamily,
    kdfp: KaleidoscopicDifferenceFamily,
    m: DifferenceMatrix,
) -> KaleidoscopicDifferenceFamily:
    """Product of two colored families with one shared layout.

    Positions are preserved, so the color-j lines of a composed block pick
    exactly the matrix rows indexed by the layout's j-th line. Ingredients
    are verified first.
    """
    if not kdf.schema.same_layout(kdfp.schema):
        raise SchemaMismatch("the families use different layouts")
    for name, ingredient in (("first", kdf), ("second", kdfp)):
        rep = verify_kdf(ingredient)
        if not rep.valid:
            raise IngredientInvalid(f"{name} family: {rep.summary()}")
    _check_dm_ingredient(m, kdf.schema.k, kdfp.group)
    product = ProductGroup(kdf.group, kdfp.group)
    schema = kdf.schema
    blocks = []
    for block in kdf.blocks:
        for col in range(kdfp.group.order):
            blocks.append(
                OrderedBlock(
                    schema,
                    tuple(
                        (pt, m.rows[i][col])
                        for i, pt in enumerate(block.points)
                    ),
                )
            )
    zero = kdf.group.zero
    for block in kdfp.blocks:
        blocks.append(
            OrderedBlock(schema, tuple((zero, y) for y in block.points))
        )
    provenance = {
        "construction": "product",
        "left_order": kdf.group.order,
        "right_order": kdfp.group.order,
    }
    return KaleidoscopicDifferenceFamily(
        product, schema, tuple(blocks), provenance
    )


def pbd_compose(
    pbd: PairwiseBalancedDesign,
    catalog: Mapping[int, Kaleidoscope],
    verify_ingredients: bool = True,
) -> Kaleidoscope:
    """Glue catalog kaleidoscopes along the blocks of a covering design.

    Each design block is replaced by a copy of the catalog entry of its
    size, relabeled order-preservingly onto the block's points. Every
    point pair lies in one design block, so it keeps exactly one plane
    line per color.
    """
    rep = verify_pbd(pbd)
    if not rep.valid:
        pair, count = rep.first_violation
        raise InvalidPBD(f"pair {pair} covered {count} times, wanted 1")
    schema = None
    planes = []
    checked: set[int] = set()
    for block in pbd.blocks:
        size = len(block)
        ingredient = catalog.get(size)
        if ingredient is None:
            raise MissingIngredient(size)
        if schema is None:
            schema = ingredient.schema
        elif not ingredient.schema.same_layout(schema):
            raise SchemaMismatch(
                f"catalog entry for size {size} uses a different layout"
            )
        if verify_ingredients and size not in checked:
            krep = verify_kaleidoscope(ingredient)
            if not krep.valid:
                raise IngredientInvalid(
                    f"catalog entry for size {size}: {krep.summary()}"
                )
            checked.add(size)
        if len(ingredient.points) != size:
            raise IngredientInvalid(
                f"catalog entry for size {size} has"
                f" {len(ingredient.points)} points"
            )
        relabel = dict(zip(ingredient.points, sorted(block)))
        for plane in ingredient.planes:
            lines = tuple(
                frozenset(relabel[x] for x in line) for line in plane.lines
            )
            block_pts = (
                tuple(relabel[x] for x in plane.block)
                if plane.block is not None
                else None
            )
            planes.append(Plane(lines, block_pts))
    if schema is None:
        raise MalformedInput("the covering design has no blocks")
    return Kaleidoscope(tuple(range(pbd.v)), schema, tuple(planes), None)


# ---------------------------------------------------------------------------
# serialization and the on-disk catalog


def dm_to_json(m: DifferenceMatrix) -> dict:
    return {
        "group": descriptor_to_json(m.group.descriptor),
        "rows": [
            [element_to_json(m.group, x) for x in row] for row in m.rows
        ],
    }


def dm_from_json(obj) -> DifferenceMatrix:
    if not isinstance(obj, dict):
        raise MalformedInput("difference matrix must be a JSON object")
    try:
        group = make_group(descriptor_from_json(obj["group"]))
        raw = obj["rows"]
    except KeyError as missing:
        raise MalformedInput(f"matrix object lacks key {missing}") from None
    if not isinstance(raw, list):
        raise MalformedInput("rows must be a list")
    rows = tuple(
        tuple(element_from_json(group, x) for x in row) for row in raw
    )
    return DifferenceMatrix(group, rows)


_CATALOG_NAME = re.compile(r"k(\d+)_(\w+)\.json$")


class Catalog:
    """Directory of verified families keyed by order and layout name.

    Files are named ``k<order>_<layout>.json`` and hold either a colored
    family (developed on read) or a full kaleidoscope.
    """

    def __init__(self, root):
        self.root = Path(root)

    def path_for(self, order: int, schema_name: str) -> Path:
        return self.root / f"k{order}_{schema_name}.json"

    def entries(self) -> list[dict]:
        out = []
        if not self.root.is_dir():
            return out
        for path in sorted(self.root.iterdir()):
            match = _CATALOG_NAME.fullmatch(path.name)
            if match:
                out.append(
                    {
                        "order": int(match.group(1)),
                        "schema": match.group(2),
                        "file": path.name,
                    }
                )
        return out

    def get_raw(self, order: int, schema_name: str) -> dict:
        path = self.path_for(order, schema_name)
        if not path.is_file():
            raise MissingIngredient(order)
        try:
            return json.loads(path.read_text())
        except json.JSONDecodeError as err:
            raise MalformedInput(f"{path}: {err}") from None

    def load_kaleidoscope(
        self, order: int, schema_name: str, verify: bool = True
    ) -> Kaleidoscope:
        obj = self.get_raw(order, schema_name)
        if "blocks" in obj:
            kdf = kdf_from_json(obj)
            scope = develop(kdf)  # develop verifies the family
        else:
            scope = kaleidoscope_from_json(obj)
            if verify:
                rep = verify_kaleidoscope(scope)
                if not rep.valid:
                    raise IngredientInvalid(
                        f"catalog entry k{order}_{schema_name}:"
                        f" {rep.summary()}"
                    )
        if len(scope.points) != order:
            raise IngredientInvalid(
                f"catalog entry k{order}_{schema_name} has"
                f" {len(scope.points)} points"
            )
        return scope

    def add(self, obj: dict) -> Path:
        """Verify a family or kaleidoscope object and store it."""
        if "blocks" in obj:
            kdf = kdf_from_json(obj)
            rep = verify_kdf(kdf)
            if not rep.valid:
                raise IngredientInvalid(rep.summary())
            order = kdf.group.order
            name = _schema_filename(schema_to_json(kdf.schema))
        elif "planes" in obj:
            scope = kaleidoscope_from_json(obj)
            rep = verify_kaleidoscope(scope)
            if not rep.valid:
                raise IngredientInvalid(rep.summary())
            order = len(scope.points)
            name = _schema_filename(schema_to_json(scope.schema))
        else:
            raise MalformedInput("expected a family or kaleidoscope object")
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path_for(order, name)
        path.write_text(
            json.dumps(obj, sort_keys=True, indent=1) + "\n"
        )
        return path


def _schema_filename(encoded) -> str:
    if isinstance(encoded, str):
        return encoded
    name = str(encoded.get("name", "custom"))
    cleaned = re.sub(r"\W+", "", name) or "custom"
    return cleaned
