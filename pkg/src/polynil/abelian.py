"""Finitely generated abelian groups in invariant-factor form.

A group is stored as ``Z^rank + Z_{n_1} + ... + Z_{n_k}`` with
``n_{i+1} | n_i`` (largest factor first) and every ``n_i >= 2``.
Quotients and canonical forms go through the Smith normal form of a
relation matrix.
"""

from dataclasses import dataclass
from itertools import product
from math import inf, prod

from sympy import factorint
from sympy.utilities.iterables import partitions

from .snf import cokernel

INFINITE = inf


class UnsupportedOperation(ValueError):
    """Raised when an operation needs a finite group and gets an infinite one."""


@dataclass(frozen=True)
class FGAbelianGroup:
    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.rank < 0:
            raise ValueError(f"negative rank {self.rank}")
        for n in self.torsion:
            if n < 2:
                raise ValueError(f"torsion factor {n} < 2 in {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if a % b:
                raise ValueError(f"{b} does not divide {a} in {self.torsion}")

    @property
    def k(self):
        return len(self.torsion)

    @property
    def is_finite(self):
        return self.rank == 0

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def identity(self):
        return GroupElement((0,) * self.rank, (0,) * self.k)

    def element(self, free=(), torsion=()):
        """Build an element, reducing torsion residues."""
        free, torsion = tuple(free), tuple(torsion)
        if len(free) != self.rank or len(torsion) != self.k:
            raise ValueError(
                f"element shape ({len(free)}; {len(torsion)}) does not match "
                f"group shape ({self.rank}; {self.k})")
        return GroupElement(free, tuple(a % n for a, n in zip(torsion, self.torsion)))

    def add(self, x, y):
        return GroupElement(
            tuple(a + b for a, b in zip(x.free, y.free)),
            tuple((a + b) % n for a, b, n in zip(x.torsion, y.torsion, self.torsion)))

    def neg(self, x):
        return GroupElement(tuple(-a for a in x.free),
                            tuple(-a % n for a, n in zip(x.torsion, self.torsion)))

    def contains(self, x):
        return (len(x.free) == self.rank and len(x.torsion) == self.k
                and all(0 <= a < n for a, n in zip(x.torsion, self.torsion)))

    def element_order(self, x):
        if any(x.free):
            return INFINITE
        o = 1
        for a, n in zip(x.torsion, self.torsion):
            o = o * (n // _gcd(a, n)) // _gcd(o, n // _gcd(a, n))
        return o

    def __str__(self):
        terms = []
        if self.rank:
            terms.append(f"Z^{self.rank}")
        terms += [f"Z{n}" for n in self.torsion]
        return " + ".join(terms) or "1"


@dataclass(frozen=True)
class GroupElement:
    free: tuple = ()
    torsion: tuple = ()

    def __str__(self):
        return "(" + ", ".join(map(str, self.free + self.torsion)) + ")"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def canonicalize(rank, moduli):
    """Canonical form of ``Z^rank + Z_{moduli[0]} + ...``.

    >>> canonicalize(0, [6, 4])
    FGAbelianGroup(rank=0, torsion=(12, 2))
    """
    moduli = [int(n) for n in moduli]
    if rank < 0:
        raise ValueError(f"negative rank {rank}")
    bad = [n for n in moduli if n <= 0]
    if bad:
        raise ValueError(f"moduli must be positive, got {bad}")
    relations = [[n if i == j else 0 for j in range(len(moduli))]
                 for i, n in enumerate(moduli)]
    _, factors = cokernel(relations, len(moduli))
    return FGAbelianGroup(rank, tuple(reversed(factors)))


def order(g):
    if g.rank:
        return INFINITE
    return prod(g.torsion)


def relation_matrix(g, gens=()):
    """Rows: the defining relations of ``g`` followed by one row per generator.

    Columns are ordered free part first, then torsion.
    """
    width = g.rank + g.k
    rows = []
    for i, n in enumerate(g.torsion):
        row = [0] * width
        row[g.rank + i] = n
        rows.append(row)
    for x in gens:
        if not g.contains(x):
            raise ValueError(f"{x} is not an element of {g}")
        rows.append(list(x.free) + list(x.torsion))
    return rows, width


def quotient_by_subgroup(g, gens):
    """Canonical form of ``g / <gens>``."""
    rows, width = relation_matrix(g, gens)
    rank, moduli = cokernel(rows, width)
    return FGAbelianGroup(rank, tuple(reversed(moduli)))


def elements(g):
    """Every element of a finite group, lexicographic in the residues."""
    if not g.is_finite:
        raise UnsupportedOperation(f"cannot enumerate the infinite group {g}")
    for residues in product(*(range(n) for n in g.torsion)):
        yield GroupElement((), residues)


def closure(g, gens):
    """Set of elements of the subgroup generated by ``gens`` (finite case)."""
    span = {g.identity()}
    frontier = [g.identity()]
    for x in gens:
        if not g.contains(x):
            raise ValueError(f"{x} is not an element of {g}")
        if any(x.free):
            raise UnsupportedOperation("closure of generators with a free part is infinite")
    gens = [x for x in gens if x != g.identity()]
    while frontier:
        nxt = []
        for y in frontier:
            for x in gens:
                z = g.add(x, y)
                if z not in span:
                    span.add(z)
                    nxt.append(z)
        frontier = nxt
    return span


def subgroup_generated(g, gens):
    """Isomorphism type of ``<gens>``, found by closure and an order census."""
    span = closure(g, gens)
    counts = {}
    for x in span:
        o = g.element_order(x)
        counts[o] = counts.get(o, 0) + 1
    return _type_from_order_census(counts)


def _type_from_order_census(counts):
    # Number of elements of order dividing p^j pins down each p-primary part.
    total = sum(counts.values())
    torsion_parts = []
    for p, e in factorint(total).items():
        below = []
        for j in range(e + 1):
            below.append(sum(c for o, c in counts.items() if (p ** j) % o == 0))
        # below[j] = p^{sum_i min(a_i, j)}; successive ratios count parts >= j
        logs = [_ilog(b, p) for b in below]
        parts_at_least = [logs[j] - logs[j - 1] for j in range(1, e + 1)]
        exps = []
        for j, cnt in enumerate(parts_at_least, start=1):
            nxt = parts_at_least[j] if j < len(parts_at_least) else 0
            exps += [j] * (cnt - nxt)
        torsion_parts.append([p ** a for a in exps])
    return canonicalize(0, [q for part in torsion_parts for q in part])


def _ilog(n, p):
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def is_valid_subgroup_shape(h, g):
    """Whether ``h`` could be a subgroup of the finite group ``g``.

    Checks ``m_i | n_i`` after padding ``h`` with trivial factors; this is
    necessary for ``h <= g`` but not claimed to be sufficient.
    """
    if h.k > g.k:
        return False
    return all(n % m == 0 for m, n in zip(h.torsion, g.torsion))


def groups_of_order(n):
    """All abelian groups of order ``n`` in canonical form."""
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        per_prime.append([
            sorted((p ** a for a, mult in part.items() for _ in range(mult)), reverse=True)
            for part in (dict(q) for q in partitions(e))])
    out = []
    for choice in product(*per_prime):
        out.append(canonicalize(0, [q for powers in choice for q in powers]))
    return sorted(out, key=lambda g: g.torsion)


def enumerate_abelian_groups(order_bound):
    """Every finite abelian group of order at most ``order_bound``, by order."""
    if order_bound < 1:
        raise ValueError("order_bound must be >= 1")
    for n in range(1, order_bound + 1):
        yield from groups_of_order(n)
