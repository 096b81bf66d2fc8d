"""Finite root systems of the simple Lie algebras A-G, in exact arithmetic.

Each system is realized in a fixed orthogonal coordinate model (the
classical embeddings: A_l in the sum-zero hyperplane of Q^{l+1}, B_l, C_l,
D_l in Q^l, E_6/E_7/E_8 inside Q^8, F_4 in Q^4, G_2 in the sum-zero plane
of Q^3).  The invariant form is a rational multiple of the dot product,
scaled so that the highest root theta satisfies (theta|theta) = 2; the
highest short root then has squared length 2 over the lacing number.

Everything downstream (roots, Coxeter numbers, fundamental weights and
coweights, Weyl matrices) is generated from the simple roots by reflection
closure and exact linear algebra, not quoted from tables, so the classical
constants double as consistency checks in the test suite.

Weyl group elements are canonicalized by their matrix on the coordinate
model: two elements are equal iff their matrices are equal, and the stored
generator word is provenance only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import DomainError, GroupTooLargeError, InputError, LieTypeError
from .rationals import (
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_transpose,
    mat_vec,
    vadd,
    vdot,
    vscale,
    vsub,
    vzero,
)

Vector = Tuple[Fraction, ...]

WEYL_CAP_ENV = "ADMW_WEYL_CAP"
DEFAULT_WEYL_CAP = 10**7

_FAMILIES = "ABCDEFG"

_RANK_CONSTRAINTS = {
    "A": "A requires rank >= 1",
    "B": "B requires rank >= 2",
    "C": "C requires rank >= 2",
    "D": "D requires rank >= 4 (D3 is rejected; use A3)",
    "E": "E requires rank in {6, 7, 8}",
    "F": "F requires rank = 4",
    "G": "G requires rank = 2",
}


def _rank_ok(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True)
class LieType:
    """A simple type label: family A-G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise LieTypeError(
                f"unknown family {self.family!r}: expected one of A-G"
            )
        if not isinstance(self.rank, int) or not _rank_ok(self.family, self.rank):
            raise LieTypeError(
                f"invalid rank {self.rank} for family {self.family}: "
                + _RANK_CONSTRAINTS[self.family]
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        token = text.strip().upper()
        if len(token) < 2 or token[0] not in _FAMILIES or not token[1:].isdigit():
            raise LieTypeError(
                f"cannot parse Lie type {text!r}: expected a family letter A-G "
                "followed by a rank, e.g. B2"
            )
        return cls(token[0], int(token[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _basis_vector(dim: int, i: int, value: Fraction = Fraction(1)) -> Vector:
    v = [Fraction(0)] * dim
    v[i] = value
    return tuple(v)


def _simple_root_model(t: LieType):
    """Ambient dimension, simple-root vectors, and form scale for a type."""
    l = t.rank
    one = Fraction(1)
    half = Fraction(1, 2)
    if t.family == "A":
        dim = l + 1
        simples = [
            vadd(_basis_vector(dim, i), _basis_vector(dim, i + 1, -one))
            for i in range(l)
        ]
        return dim, simples, one
    if t.family in ("B", "C", "D"):
        dim = l
        chain = [
            vadd(_basis_vector(dim, i), _basis_vector(dim, i + 1, -one))
            for i in range(l - 1)
        ]
        if t.family == "B":
            return dim, chain + [_basis_vector(dim, l - 1)], one
        if t.family == "C":
            return dim, chain + [_basis_vector(dim, l - 1, Fraction(2))], half
        last = vadd(_basis_vector(dim, l - 2), _basis_vector(dim, l - 1))
        return dim, chain + [last], one
    if t.family == "E":
        dim = 8
        a1 = (half, -half, -half, -half, -half, -half, -half, half)
        a2 = vadd(_basis_vector(dim, 0), _basis_vector(dim, 1))
        chain = [
            vadd(_basis_vector(dim, i + 1), _basis_vector(dim, i, -one))
            for i in range(7)
        ]
        # chain[i] = e_{i+2} - e_{i+1} in 1-based coordinates
        simples = [a1, a2] + chain[:6]
        return dim, simples[:l], one
    if t.family == "F":
        dim = 4
        simples = [
            vsub(_basis_vector(dim, 1), _basis_vector(dim, 2)),
            vsub(_basis_vector(dim, 2), _basis_vector(dim, 3)),
            _basis_vector(dim, 3),
            (half, -half, -half, -half),
        ]
        return dim, simples, one
    # G2 in the sum-zero plane of Q^3
    dim = 3
    simples = [
        (one, -one, Fraction(0)),
        (Fraction(-2), one, one),
    ]
    return dim, simples, Fraction(1, 3)


@dataclass(frozen=True, eq=True)
class FiniteWeylElement:
    """A Weyl group element, canonicalized by its matrix.

    ``word`` records one generator word producing the element (1-based
    simple reflection indices) and does not participate in equality.
    """

    matrix: Tuple[Tuple[Fraction, ...], ...]
    word: Tuple[int, ...] = field(compare=False, default=())

    def apply(self, v: Vector) -> Vector:
        return mat_vec(self.matrix, v)


@dataclass(frozen=True, eq=False)
class FiniteRootSystem:
    """Exact root data for one simple type.

    Roots live in an orthogonal coordinate model; ``form_scale`` is the
    scalar c with (x|y) = c * dot(x, y).  Root lists are sorted by
    (height, coordinates) so all derived output is deterministic.
    """

    lie_type: LieType
    dim: int
    form_scale: Fraction
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    roots: Tuple[Vector, ...]
    theta: Vector
    theta_s: Vector
    rho: Vector
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    coxeter_number: int
    dual_coxeter_number: int
    lacing_number: int
    fundamental_weights: Tuple[Vector, ...]
    fundamental_coweights: Tuple[Vector, ...]
    coroot_lattice_basis: Tuple[Vector, ...]
    coweight_lattice_basis: Tuple[Vector, ...]
    _root_set: frozenset
    _positive_set: frozenset
    _coords: dict

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(
            tuple(self.form_scale if i == j else Fraction(0) for j in range(self.dim))
            for i in range(self.dim)
        )

    def bilinear(self, x: Vector, y: Vector) -> Fraction:
        """The normalized invariant form (x|y)."""
        return self.form_scale * vdot(x, y)

    def coroot(self, alpha: Vector) -> Vector:
        return vscale(2 / self.bilinear(alpha, alpha), alpha)

    def pairing(self, lam: Vector, alpha: Vector) -> Fraction:
        """<lam, alpha^vee> = 2 (lam|alpha) / (alpha|alpha)."""
        return 2 * self.bilinear(lam, alpha) / self.bilinear(alpha, alpha)

    def is_root(self, alpha: Vector) -> bool:
        return alpha in self._root_set

    def is_positive_root(self, alpha: Vector) -> bool:
        return alpha in self._positive_set

    def root_coordinates(self, alpha: Vector) -> Tuple[int, ...]:
        return self._coords[alpha]

    def height(self, alpha: Vector) -> int:
        return sum(self._coords[alpha])

    def simple_reflection_matrix(self, i: int):
        """Matrix of s_i on the coordinate model (i is 1-based)."""
        alpha = self.simple_roots[i - 1]
        norm = self.bilinear(alpha, alpha)
        cols = []
        for j in range(self.dim):
            coeff = 2 * self.form_scale * alpha[j] / norm
            col = vsub(_basis_vector(self.dim, j), vscale(coeff, alpha))
            cols.append(col)
        return tuple(zip(*cols))

    def weight_from_fundamental(self, coeffs: Sequence[Fraction]) -> Vector:
        if len(coeffs) != self.rank:
            raise InputError(
                f"expected {self.rank} fundamental-weight coordinates, "
                f"got {len(coeffs)}"
            )
        v = vzero(self.dim)
        for c, om in zip(coeffs, self.fundamental_weights):
            v = vadd(v, vscale(c, om))
        return v

    def fundamental_coordinates(self, lam: Vector) -> Tuple[Fraction, ...]:
        return tuple(self.pairing(lam, a) for a in self.simple_roots)


def reflect(rs: FiniteRootSystem, alpha: Vector, lam: Vector) -> Vector:
    """Reflection s_alpha(lam) = lam - <lam, alpha^vee> alpha, alpha a root."""
    if not rs.is_root(alpha):
        raise DomainError(f"{alpha} is not a root of {rs.lie_type}")
    return vsub(lam, vscale(rs.pairing(lam, alpha), alpha))


def _reflect_raw(alpha: Vector, lam: Vector) -> Vector:
    # the form scale cancels in 2 (lam|alpha) / (alpha|alpha)
    coeff = 2 * vdot(lam, alpha) / vdot(alpha, alpha)
    return vsub(lam, vscale(coeff, alpha))


@lru_cache(maxsize=None)
def _build(t: LieType) -> FiniteRootSystem:
    dim, simples, scale = _simple_root_model(t)
    l = t.rank
    simples = [tuple(Fraction(x) for x in s) for s in simples]

    # Close the simple roots under simple reflections.
    roots = set(simples)
    queue = list(simples)
    while queue:
        r = queue.pop()
        for s in simples:
            image = _reflect_raw(s, r)
            if image not in roots:
                roots.add(image)
                queue.append(image)

    def bilinear(x, y):
        return scale * vdot(x, y)

    def pairing(lam, alpha):
        return 2 * bilinear(lam, alpha) / bilinear(alpha, alpha)

    cartan = tuple(
        tuple(int(pairing(simples[j], simples[i])) for j in range(l))
        for i in range(l)
    )
    for i in range(l):
        assert cartan[i][i] == 2
    cartan_inv = mat_inverse(tuple(tuple(Fraction(x) for x in row) for row in cartan))

    # omega_i = sum_k (A^{-1})_{ki} alpha_k ;  omega_i^vee = sum_k (A^{-1})_{ik} alpha_k^vee
    coroots = [vscale(2 / bilinear(a, a), a) for a in simples]
    fund_weights = []
    fund_coweights = []
    for i in range(l):
        w = vzero(dim)
        cw = vzero(dim)
        for k in range(l):
            w = vadd(w, vscale(cartan_inv[k][i], simples[k]))
            cw = vadd(cw, vscale(cartan_inv[i][k], coroots[k]))
        fund_weights.append(w)
        fund_coweights.append(cw)

    # Integer coordinates in the simple-root basis, via fundamental coweights.
    coords = {}
    for r in roots:
        cs = tuple(bilinear(r, cw) for cw in fund_coweights)
        assert all(c.denominator == 1 for c in cs)
        coords[r] = tuple(int(c) for c in cs)

    positives = {r for r in roots if all(c >= 0 for c in coords[r])}
    assert 2 * len(positives) == len(roots)

    def sort_key(r):
        return (sum(coords[r]), r)

    all_sorted = tuple(sorted(roots, key=sort_key))
    pos_sorted = tuple(sorted(positives, key=sort_key))

    norms = sorted({bilinear(r, r) for r in roots})
    assert len(norms) in (1, 2)
    lacing = int(2 / norms[0]) if len(norms) == 2 else 1
    assert lacing in (1, 2, 3)

    theta = max(roots, key=sort_key)
    assert bilinear(theta, theta) == 2
    if lacing == 1:
        theta_s = theta
    else:
        short = [r for r in roots if bilinear(r, r) == norms[0]]
        theta_s = max(short, key=sort_key)
    # Both distinguished roots are dominant.
    assert all(pairing(theta, a) >= 0 for a in simples)
    assert all(pairing(theta_s, a) >= 0 for a in simples)

    rho = vscale(Fraction(1, 2), _vsum(pos_sorted, dim))
    assert all(pairing(rho, a) == 1 for a in simples)

    h = sum(coords[theta]) + 1
    h_dual = int(pairing(rho, theta)) + 1

    return FiniteRootSystem(
        lie_type=t,
        dim=dim,
        form_scale=scale,
        simple_roots=tuple(simples),
        positive_roots=pos_sorted,
        roots=all_sorted,
        theta=theta,
        theta_s=theta_s,
        rho=rho,
        cartan_matrix=cartan,
        coxeter_number=h,
        dual_coxeter_number=h_dual,
        lacing_number=lacing,
        fundamental_weights=tuple(fund_weights),
        fundamental_coweights=tuple(fund_coweights),
        coroot_lattice_basis=tuple(coroots),
        coweight_lattice_basis=tuple(fund_coweights),
        _root_set=frozenset(roots),
        _positive_set=frozenset(positives),
        _coords=coords,
    )


def _vsum(vectors: Iterable[Vector], dim: int) -> Vector:
    total = vzero(dim)
    for v in vectors:
        total = vadd(total, v)
    return total


def build_root_system(t) -> FiniteRootSystem:
    """Construct (and cache) the finite root system for a type label."""
    if isinstance(t, str):
        t = LieType.parse(t)
    return _build(t)


def weyl_order(t: LieType) -> int:
    """Order of the Weyl group, by the classical product formulas."""
    l = t.rank
    if t.family == "A":
        return factorial(l + 1)
    if t.family in ("B", "C"):
        return 2**l * factorial(l)
    if t.family == "D":
        return 2 ** (l - 1) * factorial(l)
    if t.family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[l]
    if t.family == "F":
        return 1152
    return 12


def _weyl_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(WEYL_CAP_ENV, DEFAULT_WEYL_CAP))


def weyl_elements(
    rs: FiniteRootSystem, cap: Optional[int] = None
) -> Iterator[FiniteWeylElement]:
    """Enumerate the Weyl group, each element exactly once.

    Breadth-first over generator words, so elements appear in order of
    increasing length with a deterministic tie-break; refuses to start when
    the classical order formula exceeds the cap (``ADMW_WEYL_CAP``,
    default 10^7).
    """
    order = weyl_order(rs.lie_type)
    limit = _weyl_cap(cap)
    if order > limit:
        raise GroupTooLargeError(
            f"group too large: |W({rs.lie_type})| = {order} exceeds cap {limit}"
        )
    gens = [rs.simple_reflection_matrix(i) for i in range(1, rs.rank + 1)]
    identity = mat_identity(rs.dim)
    seen = {identity: ()}
    yield FiniteWeylElement(identity, ())
    frontier = [identity]
    count = 1
    while frontier:
        next_level = []
        for m in sorted(frontier):
            for i, g in enumerate(gens, start=1):
                product = mat_mul(m, g)
                if product not in seen:
                    word = seen[m] + (i,)
                    seen[product] = word
                    next_level.append(product)
        for m in sorted(next_level):
            yield FiniteWeylElement(m, seen[m])
            count += 1
        frontier = next_level
    assert count == order


def identity_weyl(rs: FiniteRootSystem) -> FiniteWeylElement:
    return FiniteWeylElement(mat_identity(rs.dim), ())


def finite_from_word(rs: FiniteRootSystem, word: Sequence[int]) -> FiniteWeylElement:
    """Product s_{word[0]} s_{word[1]} ... acting by function composition."""
    m = mat_identity(rs.dim)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise DomainError(f"simple reflection index {i} out of range 1..{rs.rank}")
        m = mat_mul(m, rs.simple_reflection_matrix(i))
    return FiniteWeylElement(m, tuple(word))


def finite_inverse(rs: FiniteRootSystem, w: FiniteWeylElement) -> FiniteWeylElement:
    # The form is a scalar multiple of the dot product, so Weyl matrices are
    # orthogonal and inversion is transposition.
    return FiniteWeylElement(mat_transpose(w.matrix), tuple(reversed(w.word)))


def finite_length(rs: FiniteRootSystem, w: FiniteWeylElement) -> int:
    """Coxeter length = number of positive roots sent negative."""
    return sum(
        1 for a in rs.positive_roots if not rs.is_positive_root(w.apply(a))
    )


def dominant_integral_weights(
    rs: FiniteRootSystem, bound_root: Vector, bound: int
) -> list:
    """All dominant integral weights with a bounded pairing.

    Returns every lam with <lam, alpha_i^vee> a nonnegative integer for all
    i and <lam, theta> <= bound (form pairing, when ``bound_root`` is the
    highest root) or <lam, theta_s^vee> <= bound (when it is the highest
    short root).  A negative bound yields the empty list.
    """
    if bound_root == rs.theta:
        margins = [rs.bilinear(w, rs.theta) for w in rs.fundamental_weights]
    elif bound_root == rs.theta_s:
        margins = [rs.pairing(w, rs.theta_s) for w in rs.fundamental_weights]
    else:
        raise DomainError(
            "bound_root must be the highest root or the highest short root"
        )
    margins = [Fraction(m) for m in margins]
    assert all(m.denominator == 1 and m > 0 for m in margins)
    if bound < 0:
        return []

    out = []
    coeffs = [0] * rs.rank

    def scan(i: int, budget: Fraction):
        if i == rs.rank:
            out.append(rs.weight_from_fundamental([Fraction(c) for c in coeffs]))
            return
        c = 0
        while c * margins[i] <= budget:
            coeffs[i] = c
            scan(i + 1, budget - c * margins[i])
            c += 1
        coeffs[i] = 0

    scan(0, Fraction(bound))
    return sorted(out)
