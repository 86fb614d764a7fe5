"""Polynilpotent multipliers of finitely generated abelian groups.

For ``G = Z^m + Z_{n_1} + ... + Z_{n_k}`` and class row ``(c_1, ..., c_t)``
the multiplier is

    Z^(f_m) + Z_{n_1}^(f_{m+1} - f_m) + ... + Z_{n_k}^(f_{m+k} - f_{m+k-1})

with ``f_i = chi_chain(row, i)``.
"""

from dataclasses import dataclass
from math import inf, prod

from sympy import factorint

from .abelian import FGAbelianGroup
from .witt import as_row, chi_chain


@dataclass(frozen=True)
class MultiplierStructure:
    """Free rank plus ``(modulus, multiplicity)`` layers, largest modulus first.

    Layers are normalized on construction: multiplicity-zero and modulus-one
    layers are dropped and equal moduli are merged.
    """

    free_rank: int = 0
    layers: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"negative free rank {self.free_rank}")
        merged = {}
        for n, mult in self.layers:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for modulus {n}")
            if n < 1:
                raise ValueError(f"modulus {n} < 1")
            if mult and n > 1:
                merged[n] = merged.get(n, 0) + mult
        layers = tuple(sorted(merged.items(), reverse=True))
        for (a, _), (b, _) in zip(layers, layers[1:]):
            if a % b:
                raise ValueError(f"layer moduli {a}, {b} are not a divisor chain")
        object.__setattr__(self, "layers", layers)

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.layers

    def as_group(self):
        """The structure as an ``FGAbelianGroup`` (expands multiplicities)."""
        torsion = [n for n, mult in self.layers for _ in range(mult)]
        return FGAbelianGroup(self.free_rank, tuple(torsion))

    def __str__(self):
        terms = []
        if self.free_rank:
            terms.append(f"Z^({self.free_rank})")
        terms += [f"Z_{n}^({mult})" for n, mult in self.layers]
        return " + ".join(terms) or "0"


def polynilpotent_multiplier(g, row):
    row = as_row(row)
    m = g.rank
    f = [chi_chain(row, m + i) for i in range(g.k + 1)]
    layers = [(n, f[i + 1] - f[i]) for i, n in enumerate(g.torsion)]
    return MultiplierStructure(f[0], tuple(layers))


def multiplier_order(s):
    """Order as ``{prime: exponent}``, or ``inf`` when the free rank is positive."""
    if s.free_rank:
        return inf
    out = {}
    for n, mult in s.layers:
        for p, e in factorint(n).items():
            out[p] = out.get(p, 0) + e * mult
    return out


def factored_value(fo):
    """Expand a factored order back to an integer (small cases only)."""
    if fo == inf:
        return inf
    return prod(p ** e for p, e in fo.items())


def multiplier_torsion_free_rank(s):
    return s.free_rank


def torsion_part(s):
    return MultiplierStructure(0, s.layers)
