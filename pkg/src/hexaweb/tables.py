"""Loader for the shipped coefficient tables (``data/coefficients.txt``).

Each line is one monomial term::

    object target exp_a2 exp_b2 exp_c2 coefficient sqrt3_power S_power

meaning ``coefficient * (a^2)^i (b^2)^j (c^2)^k * sqrt(3)^m * S^s``
contributes to ``target`` of ``object``. Coefficients are exact rationals.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

import mpmath
import numpy as np

FORMAT_VERSION = 1
# the tabulated polynomials cancel heavily; evaluate them in extended precision
PRECISION_DIGITS = 40
QUADRATIC_TARGETS = ("xx", "yy", "zz", "xy", "xz", "yz")


class Term(NamedTuple):
    i: int
    j: int
    k: int
    coeff: Fraction
    sqrt3: int
    s: int


def parse(text: str) -> dict:
    table = defaultdict(list)
    version = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if "format version" in line:
                version = int(line.rsplit(None, 1)[-1])
            continue
        parts = line.split()
        if len(parts) != 8:
            raise ValueError(f"line {lineno}: expected 8 fields, got {len(parts)}")
        obj, target, i, j, k, coeff, m, s = parts
        table[(obj, target)].append(Term(int(i), int(j), int(k), Fraction(coeff), int(m), int(s)))
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported coefficient table version {version}")
    return dict(table)


@lru_cache(maxsize=1)
def load() -> dict:
    text = resources.files("hexaweb").joinpath("data/coefficients.txt").read_text()
    return parse(text)


def objects() -> list[str]:
    return sorted({obj for obj, _ in load()})


def _heron(a2, b2, c2):
    sq = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)
    return mpmath.sqrt(sq) / 2 if sq > 0 else mpmath.mpf(0)


def evaluate(obj: str, target: str, a: float, b: float, c: float, S: float) -> float:
    """Value of one tabulated polynomial.

    Only the sign of ``S`` is taken from the argument; its magnitude is
    recomputed from the sides at working precision.
    """
    terms = load().get((obj, target))
    if terms is None:
        if any(o == obj for o, _ in load()):
            return 0.0
        raise KeyError(f"no table for {obj!r}")
    with mpmath.workdps(PRECISION_DIGITS):
        a2, b2, c2 = (mpmath.mpf(float(x)) ** 2 for x in (a, b, c))
        s = _heron(a2, b2, c2) * (1 if S >= 0 else -1)
        r3 = mpmath.sqrt(3)
        total = mpmath.fsum(
            mpmath.mpf(t.coeff.numerator) / t.coeff.denominator * a2**t.i * b2**t.j * c2**t.k * r3**t.sqrt3 * s**t.s
            for t in terms
        )
        return float(total)


def triple(obj: str, a, b, c, S) -> np.ndarray:
    return np.array([evaluate(obj, t, a, b, c, S) for t in "xyz"])


def quadratic(obj: str, a, b, c, S) -> np.ndarray:
    """Symmetric 3x3 matrix of a tabulated barycentric conic."""
    q = {t: evaluate(obj, t, a, b, c, S) for t in QUADRATIC_TARGETS}
    return np.array(
        [
            [q["xx"], q["xy"] / 2, q["xz"] / 2],
            [q["xy"] / 2, q["yy"], q["yz"] / 2],
            [q["xz"] / 2, q["yz"] / 2, q["zz"]],
        ]
    )
