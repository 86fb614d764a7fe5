"""Möbius function, Witt numbers and the composed exponents ``f_i``."""

from dataclasses import dataclass
from functools import lru_cache

from sympy import divisors, factorint


@dataclass(frozen=True)
class ClassRow:
    """Class row ``(c_1, ..., c_t)`` of a polynilpotent variety."""

    classes: tuple

    def __post_init__(self):
        classes = tuple(self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise ValueError("class row must be non-empty")
        for c in classes:
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise ValueError(f"class row entries must be integers >= 1, got {classes}")

    @classmethod
    def parse(cls, text):
        """``"1,2"`` -> ``ClassRow((1, 2))``."""
        try:
            classes = tuple(int(part) for part in str(text).split(","))
        except ValueError:
            raise ValueError(f"malformed class row {text!r}") from None
        return cls(classes)

    @property
    def t(self):
        return len(self.classes)

    @property
    def soluble_type(self):
        """``t >= 2`` and ``c_1 == 1``: every two-generator multiplier vanishes."""
        return self.t >= 2 and self.classes[0] == 1

    def __str__(self):
        return ",".join(map(str, self.classes))


def as_row(row):
    if isinstance(row, ClassRow):
        return row
    if isinstance(row, str):
        return ClassRow.parse(row)
    if isinstance(row, int):
        return ClassRow((row,))
    return ClassRow(tuple(row))


def mobius(n):
    if n <= 0:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    exps = factorint(n).values()
    if any(e > 1 for e in exps):
        return 0
    return -1 if len(exps) % 2 else 1


@lru_cache(maxsize=None)
def witt(w, d):
    """Number of basic commutators of weight ``w`` on ``d`` letters.

    >>> witt(3, 2)
    2
    """
    if w < 1 or d < 0:
        raise ValueError(f"witt needs w >= 1 and d >= 0, got ({w}, {d})")
    total = sum(mobius(e) * d ** (w // e) for e in divisors(w))
    q, r = divmod(total, w)
    assert r == 0, f"Möbius sum {total} not divisible by {w}"
    return q


def chi_chain(row, i):
    """``f_i``: apply ``witt(c_1 + 1, .)`` first, ``witt(c_t + 1, .)`` last."""
    if i < 0:
        raise ValueError(f"chi_chain needs i >= 0, got {i}")
    value = i
    for c in as_row(row).classes:
        value = witt(c + 1, value)
    return value
