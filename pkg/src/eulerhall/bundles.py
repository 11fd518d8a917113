"""Families of line-bundle classes and their Euler classes.

A family models a direct sum of line bundles over a product of 2-spheres:
each member is the tensor product of coordinate pullbacks indexed by a
nonempty finite atom set, plus an optional count of trivial line summands.
Everything here works with equivalence classes only; the Euler class of a
member with atom set I is the sum of the generators of I, and the Euler
class of the family is the product of those sums (zero as soon as a
trivial summand is present).

The JSON form ``{"sets": [[1, 2], [2]], "trivial_lines": 0}`` is the
canonical on-disk representation consumed by the CLI: atoms are positive
integers, inner arrays nonempty, deduplicated and ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import ring
from .errors import InvalidInput
from .ring import RingElement


def index_set(atoms: Iterable[int]) -> frozenset:
    """Validate and freeze a nonempty set of atom ids."""
    s = frozenset(atoms)
    if not s:
        raise InvalidInput("index sets must be nonempty")
    for a in s:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise InvalidInput(f"atom ids must be integers >= 1, got {a!r}")
    return s


@dataclass(frozen=True)
class BundleFamily:
    """Ordered list of atom sets plus a count of trivial line summands."""

    sets: tuple[frozenset, ...] = ()
    trivial_lines: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(index_set(s) for s in self.sets))
        if not isinstance(self.trivial_lines, int) or self.trivial_lines < 0:
            raise InvalidInput("trivial_lines must be a nonnegative integer")

    @classmethod
    def of(cls, *sets: Iterable[int], trivial_lines: int = 0) -> "BundleFamily":
        return cls(sets=tuple(frozenset(s) for s in sets), trivial_lines=trivial_lines)

    @property
    def dimension(self) -> int:
        return len(self.sets) + self.trivial_lines

    def atoms(self) -> frozenset:
        """Union of all atom sets in the family."""
        out: set = set()
        for s in self.sets:
            out |= s
        return frozenset(out)

    def to_json_dict(self) -> dict:
        return {
            "sets": [sorted(s) for s in self.sets],
            "trivial_lines": self.trivial_lines,
        }

    @classmethod
    def from_json_dict(cls, data) -> "BundleFamily":
        if not isinstance(data, dict):
            raise InvalidInput("family document must be a JSON object")
        unknown = set(data) - {"sets", "trivial_lines"}
        if unknown:
            raise InvalidInput(f"unknown field {sorted(unknown)[0]!r} in family document")
        if "sets" not in data:
            raise InvalidInput("missing field 'sets'")
        raw_sets = data["sets"]
        if not isinstance(raw_sets, list):
            raise InvalidInput("field 'sets' must be an array of arrays")
        sets = []
        for i, entry in enumerate(raw_sets):
            if not isinstance(entry, list) or not entry:
                raise InvalidInput(f"sets[{i}] must be a nonempty array of atom ids")
            for a in entry:
                if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                    raise InvalidInput(f"sets[{i}] contains invalid atom id {a!r}")
            sets.append(frozenset(entry))
        trivial = data.get("trivial_lines", 0)
        if not isinstance(trivial, int) or isinstance(trivial, bool) or trivial < 0:
            raise InvalidInput("field 'trivial_lines' must be a nonnegative integer")
        return cls(sets=tuple(sets), trivial_lines=trivial)


def euler_line(atoms: Iterable[int]) -> RingElement:
    """Euler class of one tensor-product line: the sum of its generators."""
    s = index_set(atoms)
    return ring.RingElement._raw({frozenset((a,)): 1 for a in s})


def euler_class(f: BundleFamily) -> RingElement:
    """Euler class of the whole family via the product formula.

    A trivial summand has Euler class zero and kills the product.  The
    empty family gives the unit.  Partial products are reduced as they
    grow, so colliding monomials are discarded immediately.
    """
    if f.trivial_lines > 0:
        return ring.zero()
    result = ring.one()
    for s in f.sets:
        result = result * euler_line(s)
        if result.is_zero:
            break
    return result


def dimension(f: BundleFamily) -> int:
    return f.dimension


def direct_sum(f: BundleFamily, g: BundleFamily) -> BundleFamily:
    return BundleFamily(sets=f.sets + g.sets, trivial_lines=f.trivial_lines + g.trivial_lines)


def has_duplicate_singleton(f: BundleFamily) -> int | None:
    """Smallest atom n such that the singleton {n} occurs twice, if any."""
    seen: set = set()
    witnesses: set = set()
    for s in f.sets:
        if len(s) == 1:
            (a,) = s
            if a in seen:
                witnesses.add(a)
            seen.add(a)
    return min(witnesses) if witnesses else None
