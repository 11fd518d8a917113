"""Theorem harness: Euler/Hall/matching equivalence and verdict engine.

For a family of tensor-product lines (no trivial summands), three
conditions coincide: the Euler class of the direct sum is nonzero, the
family satisfies Hall's condition, and a system of distinct
representatives exists.  ``equivalence_report`` evaluates all three from
their own definitions and treats any disagreement as an internal failure,
never an input error.

The verdict engine answers whether one trivial line can split off the
direct sum.  A nonzero Euler class (equivalently, Hall) obstructs the
split; a duplicated singleton forces it, because the doubled coordinate
line always splits a trivial line off itself.  Between the two mechanisms
the answer is genuinely open, and the engine says so rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import matching
from .bundles import BundleFamily, direct_sum, euler_class, has_duplicate_singleton
from .errors import CapExceeded, InvalidInput, TheoremViolation
from .matching import HallViolation, MatchingResult


@dataclass(frozen=True)
class EquivalenceReport:
    euler_nonzero: bool
    hall: bool
    matching: MatchingResult
    euler_class_degree: int | None
    agree: bool


class VerdictTag(Enum):
    NOT_SUBORDINATE = "not_subordinate"
    SUBORDINATE = "subordinate"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Verdict:
    tag: VerdictTag
    witness: int | None = None
    matching: MatchingResult | None = None
    violation: HallViolation | None = None


def _require_pure(f: BundleFamily, what: str) -> None:
    if f.trivial_lines > 0:
        raise InvalidInput(f"{what} requires trivial_lines = 0, got {f.trivial_lines}")


def equivalence_report(f: BundleFamily) -> EquivalenceReport:
    """Evaluate the three equivalent conditions and record agreement.

    Raises TheoremViolation if they disagree; that would mean a bug, not
    bad input.
    """
    _require_pure(f, "equivalence_report")
    e = euler_class(f)
    nonzero = not e.is_zero
    hall = matching.hall_via_matching(f)
    mm = matching.max_matching(f)
    agree = nonzero == hall == mm.saturates
    report = EquivalenceReport(
        euler_nonzero=nonzero,
        hall=hall,
        matching=mm,
        euler_class_degree=e.homogeneous_degree(),
        agree=agree,
    )
    if not agree:
        raise TheoremViolation(
            f"equivalence broken on {f.to_json_dict()}: "
            f"euler={nonzero} hall={hall} matching={mm.saturates}"
        )
    return report


def verify_coefficient_identity(f: BundleFamily) -> bool:
    """Check that every Euler-class coefficient counts the SDRs onto it.

    For each atom set S of size m inside the family's union, the
    coefficient of the monomial S must equal the number of systems of
    distinct representatives using exactly the atoms of S (the permanent
    of the incidence matrix).  Monomials must also stay inside the union
    and be homogeneous of degree m.
    """
    _require_pure(f, "verify_coefficient_identity")
    m = len(f.sets)
    if m > matching.PERMANENT_CAP:
        raise CapExceeded(f"coefficient check capped at {matching.PERMANENT_CAP} sets")
    e = euler_class(f)
    union = f.atoms()
    for mono in e.terms:
        if not mono <= union or len(mono) != m:
            return False
    for subset in combinations(sorted(union), m):
        if e.coeff(subset) != matching.sdr_count(f, subset):
            return False
    return True


def subordination_verdict(f: BundleFamily) -> Verdict:
    """Decide whether one trivial line splits off the family's direct sum.

    Hall's condition holding is a proof that it cannot (the Euler class is
    then nonzero and would have to vanish); a duplicated singleton is a
    proof that it does.  Anything else is reported as undecided.
    """
    _require_pure(f, "subordination_verdict")
    mm = matching.max_matching(f)
    if mm.saturates:
        return Verdict(tag=VerdictTag.NOT_SUBORDINATE, matching=mm)
    violation = matching.find_violation(f)
    witness = has_duplicate_singleton(f)
    if witness is not None:
        return Verdict(tag=VerdictTag.SUBORDINATE, witness=witness, violation=violation)
    return Verdict(tag=VerdictTag.UNDECIDED, violation=violation)


def doubled_verdict(f: BundleFamily) -> Verdict:
    """Verdict for the family summed with itself.

    Doubling duplicates every singleton, so any family containing a
    singleton becomes subordinate.
    """
    _require_pure(f, "doubled_verdict")
    return subordination_verdict(direct_sum(f, f))
