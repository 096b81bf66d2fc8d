"""Exact rational scalars, vectors, and small dense linear algebra.

Every mathematical path in this package runs over ``fractions.Fraction``;
floats are never accepted, produced, or compared.  Rationals serialize as
"a" or "a/b" with b > 0 and no "/1" suffix, so formatted output is
canonical and byte-stable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import RationalSyntaxError

Vector = "tuple[Fraction, ...]"
Matrix = "tuple[tuple[Fraction, ...], ...]"

_RATIONAL = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "a" or "a/b" with an optional leading sign.  Decimals rejected."""
    token = text.strip()
    if not _RATIONAL.match(token):
        raise RationalSyntaxError(f"not an exact rational: {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise RationalSyntaxError(f"zero denominator: {text!r}") from None


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_vector(tokens: Iterable[str]):
    return tuple(parse_rational(t) for t in tokens)


def format_vector(vector) -> list:
    return [format_rational(x) for x in vector]


def vzero(n: int):
    return (Fraction(0),) * n


def vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vneg(x):
    return tuple(-a for a in x)


def vscale(c, x):
    c = Fraction(c)
    return tuple(c * a for a in x)


def vdot(x, y) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def mat_identity(n: int):
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def mat_vec(m, v):
    return tuple(vdot(row, v) for row in m)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(vdot(row, col) for col in bt) for row in a)


def mat_transpose(m):
    return tuple(zip(*m))


def mat_inverse(m):
    """Gauss-Jordan inverse of a square rational matrix."""
    n = len(m)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q via fraction-exact Gaussian elimination."""
    work = [list(r) for r in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col] / work[rank][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
