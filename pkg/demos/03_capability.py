"""
Capability: closed form against the brute-force oracle
======================================================

The closed form reads the answer off (m, n_1, n_2, n_3). The oracle instead
looks for a non-identity element x whose cyclic quotient leaves the
multiplier order unchanged; such an x lies in the epicenter and proves the
group is not capable.
"""

from polynil import (
    FGAbelianGroup,
    epicenter,
    is_capable_closed_form,
    is_capable_oracle,
    largest_capable_quotient,
)

cases = [
    ((0, (3, 3)), (1,)),
    ((0, (3, 3)), (1, 1)),
    ((0, (3, 3, 3)), (1, 1)),
    ((0, (4, 2)), (1,)),
    ((0, (8, 4, 2)), (1, 1)),
    ((0, (6, 6, 2)), (2, 1)),
]
for (rank, torsion), row in cases:
    g = FGAbelianGroup(rank, torsion)
    closed = is_capable_closed_form(g, row)
    oracle = is_capable_oracle(g, row)
    print(f"{str(g):<14} row {row!s:<7} closed={closed.capable!s:<5} ({closed.rule})"
          f"  oracle={oracle.capable!s:<5} witness={oracle.witness}")

# Infinite groups get closed-form verdicts only
for m in range(4):
    g = FGAbelianGroup(m, (2,))
    print(g, {row: is_capable_closed_form(g, row).capable for row in [(1,), (1, 1)]})

# The epicenter and the largest capable quotient
for torsion in [(4, 2), (8, 2, 2), (9, 3), (5,)]:
    g = FGAbelianGroup(0, torsion)
    e = epicenter(g, (1,))
    print(f"{g}: epicenter {e.structure} ({len(e.members)} elements), "
          f"largest capable quotient {largest_capable_quotient(g, (1,))}")
