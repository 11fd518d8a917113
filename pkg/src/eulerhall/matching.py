"""Hall's condition, systems of distinct representatives, and SDR counts.

A family of atom sets satisfies Hall's condition when every subfamily
covers at least as many atoms as it has members; by the marriage theorem
this is equivalent to the existence of a system of distinct
representatives (one atom per set, all distinct).  This module decides
the condition three ways -- direct subset enumeration, maximum matching,
and permanent counting -- because downstream checks rely on the routes
agreeing.

Atom sets are compressed to column indices 0..u-1 (ascending atom order)
before hitting the kernels, so families over arbitrarily large atom ids
work; the compiled backend is used whenever the compressed width fits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from . import _kernels
from .bundles import BundleFamily
from .errors import CapExceeded, DimensionMismatch, TheoremViolation

EXHAUSTIVE_CAP = 16  # 2^m subsets scanned
PERMANENT_CAP = 20  # 2^m Ryser terms, exact big-int accumulation
NAIVE_CAP = 8  # m! permutations


@dataclass(frozen=True)
class MatchingResult:
    """Optional system of distinct representatives, in family order."""

    assignment: tuple[int, ...] | None

    @property
    def saturates(self) -> bool:
        return self.assignment is not None


@dataclass(frozen=True)
class HallViolation:
    """0-based positions of a subfamily covering fewer atoms than members."""

    indices: tuple[int, ...]


def _columns(f: BundleFamily):
    """Compress the family's atoms to 0-based columns, ascending."""
    atoms = sorted(set().union(*f.sets)) if f.sets else []
    index = {a: i for i, a in enumerate(atoms)}
    rows = tuple(tuple(index[a] for a in sorted(s)) for s in f.sets)
    return rows, atoms


def hall_exhaustive(f: BundleFamily, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Check Hall's condition by scanning every nonempty subfamily."""
    m = len(f.sets)
    if m > cap:
        raise CapExceeded(f"exhaustive Hall check capped at {cap} sets, got {m}")
    rows, atoms = _columns(f)
    return _kernels.hall_violation(rows, len(atoms)) < 0


def max_matching(f: BundleFamily) -> MatchingResult:
    """Maximum matching between set positions and atoms.

    The assignment is present exactly when every set is matched; it is
    deterministic for a given input order (greedy seeding plus
    augmenting-path search, both scanning atoms in ascending order).
    """
    rows, atoms = _columns(f)
    col_of = _kernels.max_matching(rows, len(atoms))
    if all(c >= 0 for c in col_of):
        return MatchingResult(assignment=tuple(atoms[c] for c in col_of))
    return MatchingResult(assignment=None)


def hall_via_matching(f: BundleFamily) -> bool:
    return max_matching(f).saturates


def find_violation(f: BundleFamily) -> HallViolation | None:
    """A witnessing subfamily when Hall's condition fails, else None.

    Starting from the first unmatched set of a maximum matching, collect
    every set reachable by alternating paths; that subfamily covers one
    atom fewer than it has members.  The returned subfamily need not be
    minimal.
    """
    rows, atoms = _columns(f)
    ncols = len(atoms)
    col_of = _kernels.max_matching(rows, ncols)
    unmatched = [j for j, c in enumerate(col_of) if c < 0]
    if not unmatched:
        return None
    row_of = [-1] * ncols
    for j, c in enumerate(col_of):
        if c >= 0:
            row_of[c] = j
    # BFS over alternating paths: any edge out of a set, matched edge back.
    start = unmatched[0]
    seen_rows = {start}
    seen_cols: set = set()
    frontier = [start]
    while frontier:
        nxt = []
        for j in frontier:
            for c in rows[j]:
                if c in seen_cols:
                    continue
                seen_cols.add(c)
                r = row_of[c]
                if r >= 0 and r not in seen_rows:
                    seen_rows.add(r)
                    nxt.append(r)
        frontier = nxt
    indices = tuple(sorted(seen_rows))
    union = set().union(*(f.sets[j] for j in indices))
    if len(union) >= len(indices):
        raise TheoremViolation("alternating reachability produced an invalid Hall witness")
    return HallViolation(indices=indices)


def sdr_count(f: BundleFamily, atoms: Iterable[int]) -> int:
    """Number of systems of distinct representatives onto a fixed atom set.

    Equals the permanent of the 0/1 incidence matrix (rows = sets,
    columns = the given atoms in ascending order), computed by Ryser's
    method.
    """
    target = sorted(set(atoms))
    m = len(f.sets)
    if len(target) != m:
        raise DimensionMismatch(f"need exactly {m} atoms, got {len(target)}")
    if m > PERMANENT_CAP:
        raise CapExceeded(f"permanent capped at {PERMANENT_CAP} sets, got {m}")
    index = {a: i for i, a in enumerate(target)}
    rows = tuple(tuple(index[a] for a in sorted(s & frozenset(target))) for s in f.sets)
    return _kernels.permanent(rows, m)


def sdr_count_naive(f: BundleFamily, atoms: Iterable[int]) -> int:
    """Same count by brute force over all m! permutations (oracle)."""
    target = sorted(set(atoms))
    m = len(f.sets)
    if len(target) != m:
        raise DimensionMismatch(f"need exactly {m} atoms, got {len(target)}")
    if m > NAIVE_CAP:
        raise CapExceeded(f"naive SDR count capped at {NAIVE_CAP} sets, got {m}")
    count = 0
    for perm in permutations(target):
        if all(t in s for t, s in zip(perm, f.sets)):
            count += 1
    return count
