"""Finite cyclic groups, prime and extension fields, and cyclotomic classes.

Elements are plain hashable Python values. A cyclic group or prime field
element is an int in ``range(v)``. An extension field element is a tuple of
coefficient ints with the constant term first, so ``(4, 1)`` over
``Z_5[t]/(t^2 - 3)`` means ``4 + t``. A direct product element is a pair.

Every group fixes one canonical element order, used whenever "smallest" is
meant anywhere in the package: numeric for residues, lexicographic on
coefficient tuples for extensions (constant term compared first), and
lexicographic on pairs for products. ``Group.elements()`` returns the full
list in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .errors import (
    BadCongruence,
    MalformedInput,
    NonPrimeModulus,
    OrderTooSmall,
    ReducibleModulus,
    ZeroElement,
)

Element = Union[int, tuple]

__all__ = [
    "Cyclic",
    "PrimeField",
    "ExtensionField",
    "Product",
    "GroupDescriptor",
    "Element",
    "Group",
    "make_group",
    "descriptor_to_json",
    "descriptor_from_json",
    "element_to_json",
    "element_from_json",
    "is_prime",
    "prime_factors",
    "find_irreducible",
    "primitive_element",
    "CyclotomicTable",
    "cyclotomic_table",
    "cyclotomic_index",
    "transversal",
]


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class Cyclic:
    """Integers mod v under addition."""

    v: int


@dataclass(frozen=True)
class PrimeField:
    """Integers mod a prime p."""

    p: int


@dataclass(frozen=True)
class ExtensionField:
    """Z_p[t] modulo a monic irreducible polynomial.

    ``modulus`` lists coefficients from the constant term up and includes
    the leading 1, so t^2 - 3 over Z_5 is ``(2, 0, 1)``.
    """

    p: int
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class Product:
    left: "GroupDescriptor"
    right: "GroupDescriptor"


GroupDescriptor = Union[Cyclic, PrimeField, ExtensionField, Product]


def descriptor_to_json(desc: GroupDescriptor) -> dict:
    if isinstance(desc, Cyclic):
        return {"kind": "cyclic", "v": desc.v}
    if isinstance(desc, PrimeField):
        return {"kind": "prime", "p": desc.p}
    if isinstance(desc, ExtensionField):
        return {"kind": "ext", "p": desc.p, "modulus": list(desc.modulus)}
    if isinstance(desc, Product):
        return {
            "kind": "product",
            "left": descriptor_to_json(desc.left),
            "right": descriptor_to_json(desc.right),
        }
    raise MalformedInput(f"not a group descriptor: {desc!r}")


def descriptor_from_json(obj) -> GroupDescriptor:
    if not isinstance(obj, dict):
        raise MalformedInput("group descriptor must be a JSON object")
    kind = obj.get("kind")
    if kind == "cyclic":
        v = obj.get("v")
        if not isinstance(v, int):
            raise MalformedInput("cyclic descriptor needs an integer 'v'")
        return Cyclic(v)
    if kind == "prime":
        p = obj.get("p")
        if not isinstance(p, int):
            raise MalformedInput("prime descriptor needs an integer 'p'")
        return PrimeField(p)
    if kind == "ext":
        p = obj.get("p")
        mod = obj.get("modulus")
        if not isinstance(p, int) or not isinstance(mod, (list, tuple)):
            raise MalformedInput("ext descriptor needs 'p' and 'modulus'")
        if not all(isinstance(c, int) for c in mod):
            raise MalformedInput("modulus coefficients must be integers")
        reduced = tuple(c % p for c in mod) if p > 1 else tuple(mod)
        return ExtensionField(p, reduced)
    if kind == "product":
        return Product(
            descriptor_from_json(obj.get("left")),
            descriptor_from_json(obj.get("right")),
        )
    raise MalformedInput(f"unknown group kind: {kind!r}")


# ---------------------------------------------------------------------------
# integer and polynomial helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_divmod(a: list[int], b: tuple[int, ...], p: int):
    """Divide a by b over Z_p. b must be monic. Returns (quot, rem)."""
    a = [c % p for c in a]
    db = len(b) - 1
    quot = [0] * max(1, len(a) - db)
    while len(a) > db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) <= db:
            break
        shift = len(a) - 1 - db
        coef = a[-1]
        quot[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
    while a and a[-1] == 0:
        a.pop()
    return quot, a


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg/2."""
    d = len(modulus) - 1
    for m in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=m):
            divisor = tuple(low) + (1,)
            _, rem = _poly_divmod(list(modulus), divisor, p)
            if not rem:
                return False
    return True


def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Canonically smallest monic irreducible of the given degree over Z_p."""
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if degree < 2:
        raise MalformedInput("degree must be at least 2")
    for low in itertools.product(range(p), repeat=degree):
        candidate = tuple(low) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise MalformedInput(f"no irreducible of degree {degree} over Z_{p}")


# ---------------------------------------------------------------------------
# groups


class Group:
    """Additive finite abelian group with a fixed canonical element order."""

    is_field = False
    descriptor: GroupDescriptor
    order: int
    zero: Element

    def add(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def neg(self, a: Element) -> Element:
        raise NotImplementedError

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def elements(self) -> list[Element]:
        """All elements in canonical order. The list is cached."""
        cached = getattr(self, "_elements", None)
        if cached is None:
            cached = self._build_elements()
            self._elements = cached
        return cached

    def _build_elements(self) -> list[Element]:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor!r})"


class CyclicGroup(Group):
    def __init__(self, v: int):
        if not isinstance(v, int) or v < 1:
            raise MalformedInput(f"cyclic order must be a positive int, got {v!r}")
        self.descriptor = Cyclic(v)
        self.order = v
        self.zero = 0

    def add(self, a, b):
        return (a + b) % self.order

    def neg(self, a):
        return (-a) % self.order

    def _build_elements(self):
        return list(range(self.order))


class PrimeFieldGroup(Group):
    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeModulus(f"{p!r} is not prime")
        self.descriptor = PrimeField(p)
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.order

    def neg(self, a):
        return (-a) % self.order

    def mul(self, a, b):
        return (a * b) % self.order

    def inv(self, a):
        if a % self.order == 0:
            raise ZeroElement("zero has no inverse")
        return pow(a, self.order - 2, self.order)

    def pow_(self, a, n: int):
        return pow(a, n, self.order)

    def _build_elements(self):
        return list(range(self.order))


class ExtensionFieldGroup(Group):
    is_field = True

    def __init__(self, p: int, modulus):
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeModulus(f"{p!r} is not prime")
        mod = tuple(c % p for c in modulus)
        if len(mod) < 3:
            raise MalformedInput("extension modulus must have degree at least 2")
        if mod[-1] != 1:
            raise MalformedInput("extension modulus must be monic")
        if not _is_irreducible(mod, p):
            raise ReducibleModulus(f"{list(modulus)} factors over Z_{p}")
        self.descriptor = ExtensionField(p, mod)
        self.p = p
        self.degree = len(mod) - 1
        self.order = p ** self.degree
        d = self.degree
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        # Reduction table: _red[j] is t^(d+j) written in the power basis.
        base = tuple((-mod[i]) % p for i in range(d))
        red = [base]
        for _ in range(d - 2):
            prev = red[-1]
            hi = prev[d - 1]
            shifted = (0,) + prev[: d - 1]
            red.append(tuple((shifted[i] + hi * base[i]) % p for i in range(d)))
        self._red = red

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p = self.p
        d = self.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        res = conv[:d]
        for j in range(d, 2 * d - 1):
            c = conv[j] % p
            if c:
                row = self._red[j - d]
                for i in range(d):
                    res[i] += c * row[i]
        return tuple(r % p for r in res)

    def inv(self, a):
        if a == self.zero:
            raise ZeroElement("zero has no inverse")
        return self.pow_(a, self.order - 2)

    def pow_(self, a, n: int):
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def _build_elements(self):
        return list(itertools.product(range(self.p), repeat=self.degree))


class ProductGroup(Group):
    def __init__(self, left: Group, right: Group):
        self.left = left
        self.right = right
        self.descriptor = Product(left.descriptor, right.descriptor)
        self.order = left.order * right.order
        self.zero = (left.zero, right.zero)

    def add(self, a, b):
        return (self.left.add(a[0], b[0]), self.right.add(a[1], b[1]))

    def neg(self, a):
        return (self.left.neg(a[0]), self.right.neg(a[1]))

    def _build_elements(self):
        return [
            (x, y) for x in self.left.elements() for y in self.right.elements()
        ]


def make_group(desc: GroupDescriptor) -> Group:
    """Build the group handle a descriptor names."""
    if isinstance(desc, Cyclic):
        return CyclicGroup(desc.v)
    if isinstance(desc, PrimeField):
        return PrimeFieldGroup(desc.p)
    if isinstance(desc, ExtensionField):
        return ExtensionFieldGroup(desc.p, desc.modulus)
    if isinstance(desc, Product):
        return ProductGroup(make_group(desc.left), make_group(desc.right))
    raise MalformedInput(f"not a group descriptor: {desc!r}")


# ---------------------------------------------------------------------------
# element serialization


def element_to_json(group: Group, x: Element):
    if isinstance(group, (CyclicGroup, PrimeFieldGroup)):
        return int(x)
    if isinstance(group, ExtensionFieldGroup):
        return [int(c) for c in x]
    if isinstance(group, ProductGroup):
        return [
            element_to_json(group.left, x[0]),
            element_to_json(group.right, x[1]),
        ]
    raise MalformedInput(f"unknown group type: {group!r}")


def element_from_json(group: Group, obj) -> Element:
    if isinstance(group, (CyclicGroup, PrimeFieldGroup)):
        if not isinstance(obj, int):
            raise MalformedInput(f"expected an integer element, got {obj!r}")
        return obj % group.order
    if isinstance(group, ExtensionFieldGroup):
        if not isinstance(obj, (list, tuple)) or len(obj) != group.degree:
            raise MalformedInput(
                f"expected {group.degree} coefficients, got {obj!r}"
            )
        if not all(isinstance(c, int) for c in obj):
            raise MalformedInput("coefficients must be integers")
        return tuple(c % group.p for c in obj)
    if isinstance(group, ProductGroup):
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise MalformedInput(f"expected a pair, got {obj!r}")
        return (
            element_from_json(group.left, obj[0]),
            element_from_json(group.right, obj[1]),
        )
    raise MalformedInput(f"unknown group type: {group!r}")


# ---------------------------------------------------------------------------
# multiplicative structure


def primitive_element(field: Group) -> Element:
    """Canonically smallest element whose multiplicative order is q - 1."""
    if not field.is_field:
        raise MalformedInput("primitive elements need a field")
    cached = getattr(field, "_primitive", None)
    if cached is not None:
        return cached
    q = field.order
    if q == 2:
        field._primitive = field.one
        return field.one
    factors = prime_factors(q - 1)
    cofactors = [(q - 1) // r for r in factors]
    for x in field.elements():
        if x == field.zero:
            continue
        if all(field.pow_(x, m) != field.one for m in cofactors):
            field._primitive = x
            return x
    raise MalformedInput("no generator found; field arithmetic is broken")


_DENSE_LIMIT = 50_000


class CyclotomicTable:
    """Classifies nonzero field elements into e classes.

    Class i is the coset g^i * H where H is the subgroup of e-th powers and
    g is the canonical primitive element. Small fields get a dense map built
    by walking the powers of g; larger fields resolve each element lazily
    through the e-th power character, caching as they go. Class indices are
    multiplicative either way.
    """

    def __init__(self, field: Group, e: int):
        if not field.is_field:
            raise MalformedInput("cyclotomic classes need a field")
        if e not in (3, 6):
            raise MalformedInput(f"class count must be 3 or 6, got {e}")
        q = field.order
        if q - 1 < e:
            raise OrderTooSmall(f"field of order {q} has fewer than {e} units")
        if (q - 1) % e:
            raise BadCongruence(f"{e} does not divide {q} - 1")
        self.field = field
        self.e = e
        self.q = q
        self.primitive = primitive_element(field)
        self._exp = (q - 1) // e
        self._index: dict = {}
        self._char_lookup = None
        if q <= _DENSE_LIMIT:
            x = field.one
            g = self.primitive
            for k in range(q - 1):
                self._index[x] = k % e
                x = field.mul(x, g)
        else:
            omega = field.pow_(self.primitive, self._exp)
            lookup = {}
            w = field.one
            for i in range(e):
                lookup[w] = i
                w = field.mul(w, omega)
            self._char_lookup = lookup

    def index(self, x: Element) -> int:
        """Class index of x. Zero is in no class."""
        if x == self.field.zero:
            raise ZeroElement("zero belongs to no cyclotomic class")
        got = self._index.get(x)
        if got is None:
            if self._char_lookup is None:
                raise MalformedInput(f"{x!r} is not an element of this field")
            ch = self.field.pow_(x, self._exp)
            got = self._char_lookup.get(ch)
            if got is None:
                raise MalformedInput(f"{x!r} is not an element of this field")
            self._index[x] = got
        return got

    def class_of_int(self, n: int) -> int:
        """Class of the field element 1 + 1 + ... (n ones). n mod p != 0."""
        f = self.field
        x = f.zero
        for _ in range(n):
            x = f.add(x, f.one)
        return self.index(x)


def cyclotomic_table(field: Group, e: int = 3) -> CyclotomicTable:
    return CyclotomicTable(field, e)


def cyclotomic_index(table: CyclotomicTable, x: Element) -> int:
    return table.index(x)


def transversal(field: Group, mode: str = "canonical") -> list[Element]:
    """A set S of (q-1)/6 cube-class-0 elements with {s, -s} disjoint.

    The plus-minus orbits of S tile the nonzero cubes exactly. Canonical
    mode keeps the canonically smaller member of each orbit. Sixth-powers
    mode returns the set of sixth powers, which works only when q = 3
    (mod 4), since then -1 is not a sixth power.
    """
    if not field.is_field:
        raise MalformedInput("transversals need a field")
    q = field.order
    if q % 6 != 1:
        raise BadCongruence(f"field order {q} is not 1 mod 6")
    if mode == "sixth_powers":
        if q % 4 != 3:
            raise BadCongruence(
                f"sixth powers split the cubes only for q = 3 mod 4, got {q}"
            )
        powers = {
            field.pow_(x, 6) for x in field.elements() if x != field.zero
        }
        return sorted(powers)
    if mode != "canonical":
        raise MalformedInput(f"unknown transversal mode: {mode!r}")
    cubes = set()
    for x in field.elements():
        if x != field.zero:
            cubes.add(field.mul(x, field.mul(x, x)))
    out = []
    taken = set()
    for x in field.elements():
        if x in cubes and x not in taken:
            out.append(x)
            taken.add(x)
            taken.add(field.neg(x))
    return out
