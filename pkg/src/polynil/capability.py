"""Capability of finitely generated abelian groups in polynilpotent varieties.

Two independent decision routes are provided:

* :func:`is_capable_closed_form` reads the verdict off the invariant
  factors.
* :func:`is_capable_oracle` checks, element by element, whether factoring
  out a cyclic subgroup leaves the order of the multiplier unchanged (the
  natural map is then injective and the element lies in the epicenter).

A finite abelian group is capable exactly when no non-identity element
survives that test.
"""

from dataclasses import dataclass
from typing import Optional

from .abelian import (
    FGAbelianGroup,
    GroupElement,
    UnsupportedOperation,
    closure,
    elements,
    quotient_by_subgroup,
    subgroup_generated,
)
from .multiplier import multiplier_order, polynilpotent_multiplier
from .witt import as_row

# rule tags
TRIVIAL = "trivial-group"
BAER_FINITE = "baer-finite"
BAER_INFINITE = "baer-infinite"
NONSOLUBLE_FINITE = "nonsoluble-finite"
NONSOLUBLE_INFINITE = "nonsoluble-infinite"
SOLUBLE_TWO_GENERATOR = "soluble-two-generator"
SOLUBLE_FINITE = "soluble-finite"
SOLUBLE_INFINITE = "soluble-infinite"
ORACLE = "oracle"

RULE_DESCRIPTIONS = {
    TRIVIAL: "the trivial group is E/V*(E) for E = 1",
    BAER_FINITE: "nilpotent row, finite group: capable iff k >= 2 and n1 = n2",
    BAER_INFINITE: "nilpotent row, infinite group: capable iff m >= 2",
    NONSOLUBLE_FINITE: "row with c1 >= 2, finite group: capable iff k >= 2 and n1 = n2",
    NONSOLUBLE_INFINITE: "row with c1 >= 2, infinite group: capable iff m >= 2",
    SOLUBLE_TWO_GENERATOR: "row with t >= 2 and c1 = 1 kills every multiplier "
                           "of a group with at most two generators",
    SOLUBLE_FINITE: "row with t >= 2 and c1 = 1, finite group: "
                    "capable iff k >= 3 and n1 = n2 = n3",
    SOLUBLE_INFINITE: "row with t >= 2 and c1 = 1, infinite group: capable iff m >= 3",
    ORACLE: "no non-identity cyclic quotient preserves the multiplier order",
}


@dataclass(frozen=True)
class CapabilityVerdict:
    capable: bool
    rule: str
    witness: Optional[GroupElement] = None

    def __post_init__(self):
        if not self.rule:
            raise ValueError("verdict needs a rule tag")
        if self.capable and self.witness is not None:
            raise ValueError("a capable verdict cannot carry a witness")

    def __bool__(self):
        return self.capable


@dataclass(frozen=True)
class EpicenterResult:
    members: tuple
    structure: FGAbelianGroup
    quotient: FGAbelianGroup

    @property
    def is_trivial(self):
        return len(self.members) == 1


def is_capable_closed_form(g, row):
    row = as_row(row)
    if g.is_trivial:
        return CapabilityVerdict(True, TRIVIAL)
    n = g.torsion
    if row.soluble_type:
        if g.is_finite:
            if g.k <= 2:
                return CapabilityVerdict(False, SOLUBLE_TWO_GENERATOR)
            return CapabilityVerdict(n[0] == n[1] == n[2], SOLUBLE_FINITE)
        return CapabilityVerdict(g.rank >= 3, SOLUBLE_INFINITE)
    if g.is_finite:
        rule = BAER_FINITE if row.t == 1 else NONSOLUBLE_FINITE
        return CapabilityVerdict(g.k >= 2 and n[0] == n[1], rule)
    rule = BAER_INFINITE if row.t == 1 else NONSOLUBLE_INFINITE
    return CapabilityVerdict(g.rank >= 2, rule)


def _require_finite(g, what):
    if not g.is_finite:
        raise UnsupportedOperation(f"{what} needs a finite group, got {g}")


def injectivity_test(g, gens, row):
    """Whether ``VM(g) -> VM(g / <gens>)`` is injective, judged by order equality."""
    _require_finite(g, "injectivity_test")
    row = as_row(row)
    before = multiplier_order(polynilpotent_multiplier(g, row))
    after = multiplier_order(polynilpotent_multiplier(quotient_by_subgroup(g, gens), row))
    return before == after


class _CyclicQuotients:
    """Per-group cache of ``g / <x>`` so several rows can share the SNF work."""

    def __init__(self, g):
        _require_finite(g, "cyclic quotient census")
        self.g = g
        self.items = [(x, quotient_by_subgroup(g, [x]))
                      for x in elements(g) if x != g.identity()]

    def injective(self, row):
        row = as_row(row)
        target = multiplier_order(polynilpotent_multiplier(self.g, row))
        seen = {}
        for x, q in self.items:
            if q not in seen:
                seen[q] = multiplier_order(polynilpotent_multiplier(q, row)) == target
            yield x, seen[q]


def is_capable_oracle(g, row, _quotients=None):
    quotients = _quotients or _CyclicQuotients(g)
    for x, injective in quotients.injective(row):
        if injective:
            return CapabilityVerdict(False, ORACLE, witness=x)
    return CapabilityVerdict(True, ORACLE)


def oracle_verdicts(g, rows):
    """Oracle verdicts for several rows, sharing one pass of quotient computations."""
    quotients = _CyclicQuotients(g)
    return {as_row(row): is_capable_oracle(g, row, quotients) for row in rows}


def epicenter(g, row):
    """The subgroup ``V**(g)`` and the largest capable quotient ``g / V**(g)``."""
    _require_finite(g, "epicenter")
    quotients = _CyclicQuotients(g)
    members = [g.identity()] + [x for x, inj in quotients.injective(row) if inj]
    members_set = set(members)
    if closure(g, members) != members_set:
        raise ArithmeticError(f"epicenter of {g} under row {as_row(row)} is not a subgroup")
    return EpicenterResult(
        members=tuple(members),
        structure=subgroup_generated(g, members),
        quotient=quotient_by_subgroup(g, members),
    )


def largest_capable_quotient(g, row):
    return epicenter(g, row).quotient
