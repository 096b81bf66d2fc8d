"""Real affine roots, affine weights, and the extended affine Weyl group.

A real root is alpha + n*delta with alpha a finite root and n an integer;
it is positive when n > 0, or n = 0 and alpha is positive.  An affine
weight carries its finite part, the level (coefficient of Lambda_0), and
the delta coefficient, all exact rationals.  The delta part is tracked
even though classification criteria only consult the finite part and the
level: translations shift it, and keeping it makes the weight action a
genuine group action (reporting layers project it away).

Elements of the extended group W x P^vee are stored in the semidirect
normal form t_mu * w, which is unique, so equality is componentwise.  The
subgroup generated by affine simple reflections corresponds to mu in the
coroot lattice; elements permuting the affine simple roots make up the
diagram-rotation subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DomainError
from .finite import (
    FiniteRootSystem,
    FiniteWeylElement,
    Vector,
    finite_from_word,
    finite_inverse,
    identity_weyl,
)
from .rationals import vadd, vneg, vscale, vsub, vzero


@dataclass(frozen=True)
class RealRoot:
    """alpha + n*delta for a finite root alpha."""

    alpha: Vector
    n: int


@dataclass(frozen=True)
class AffineWeight:
    """finite part + level * Lambda_0 + delta_part * delta."""

    finite: Vector
    level: Fraction
    delta_part: Fraction = Fraction(0)


@dataclass(frozen=True)
class ExtendedWeylElement:
    """t_translation * finite_factor, the semidirect normal form."""

    finite_factor: FiniteWeylElement
    translation: Vector


def is_real_root(rs: FiniteRootSystem, beta: RealRoot) -> bool:
    return rs.is_root(beta.alpha)


def is_positive_real_root(rs: FiniteRootSystem, beta: RealRoot) -> bool:
    if beta.n != 0:
        return beta.n > 0
    return rs.is_positive_root(beta.alpha)


def real_root_negated(beta: RealRoot) -> RealRoot:
    return RealRoot(vneg(beta.alpha), -beta.n)


def coroot_pairing(rs: FiniteRootSystem, lam: AffineWeight, beta: RealRoot) -> Fraction:
    """<lam, beta^vee> = <finite(lam), alpha^vee> + n * (2/(alpha|alpha)) * level."""
    if not rs.is_root(beta.alpha):
        raise DomainError(f"{beta.alpha} is not a root of {rs.lie_type}")
    c_alpha = 2 / rs.bilinear(beta.alpha, beta.alpha)
    return rs.pairing(lam.finite, beta.alpha) + beta.n * c_alpha * lam.level


def rho_hat(rs: FiniteRootSystem) -> AffineWeight:
    """The affine Weyl vector: finite part rho, level the dual Coxeter number."""
    return AffineWeight(rs.rho, Fraction(rs.dual_coxeter_number), Fraction(0))


def weight_add(a: AffineWeight, b: AffineWeight) -> AffineWeight:
    return AffineWeight(vadd(a.finite, b.finite), a.level + b.level,
                        a.delta_part + b.delta_part)


def weight_sub(a: AffineWeight, b: AffineWeight) -> AffineWeight:
    return AffineWeight(vsub(a.finite, b.finite), a.level - b.level,
                        a.delta_part - b.delta_part)


def affine_simple_roots(rs: FiniteRootSystem) -> List[RealRoot]:
    """[alpha_0, alpha_1, ..., alpha_l] with alpha_0 = -theta + delta."""
    return [RealRoot(vneg(rs.theta), 1)] + [
        RealRoot(a, 0) for a in rs.simple_roots
    ]


def in_coweight_lattice(rs: FiniteRootSystem, mu: Vector) -> bool:
    """mu lies in the coweight lattice (integral against all simple roots,
    and inside the span of the roots)."""
    coords = [rs.bilinear(a, mu) for a in rs.simple_roots]
    if any(c.denominator != 1 for c in coords):
        return False
    rebuilt = vzero(rs.dim)
    for c, cw in zip(coords, rs.fundamental_coweights):
        rebuilt = vadd(rebuilt, vscale(c, cw))
    return rebuilt == tuple(mu)


def in_coroot_lattice(rs: FiniteRootSystem, mu: Vector) -> bool:
    """mu lies in the coroot lattice."""
    if not in_coweight_lattice(rs, mu):
        return False
    # Solve mu = sum d_i alpha_i^vee: with c_j = (alpha_j|mu) the coordinates
    # satisfy c_j = sum_i d_i A_{ij}, i.e. d = c * A^{-1} in row convention.
    from .rationals import mat_inverse

    coords = [rs.bilinear(a, mu) for a in rs.simple_roots]
    ainv = mat_inverse(
        tuple(tuple(Fraction(x) for x in row) for row in rs.cartan_matrix)
    )
    for i in range(rs.rank):
        d_i = sum(coords[j] * ainv[j][i] for j in range(rs.rank))
        if Fraction(d_i).denominator != 1:
            return False
    return True


def _require_extended(rs: FiniteRootSystem, g: ExtendedWeylElement) -> None:
    if not in_coweight_lattice(rs, g.translation):
        raise DomainError(
            "not an extended Weyl element: translation part "
            f"{g.translation} is outside the coweight lattice"
        )


def identity_element(rs: FiniteRootSystem) -> ExtendedWeylElement:
    return ExtendedWeylElement(identity_weyl(rs), vzero(rs.dim))


def translation_element(rs: FiniteRootSystem, mu: Vector) -> ExtendedWeylElement:
    g = ExtendedWeylElement(identity_weyl(rs), tuple(mu))
    _require_extended(rs, g)
    return g


def from_finite(rs: FiniteRootSystem, w: FiniteWeylElement) -> ExtendedWeylElement:
    return ExtendedWeylElement(w, vzero(rs.dim))


def compose(
    rs: FiniteRootSystem, g1: ExtendedWeylElement, g2: ExtendedWeylElement
) -> ExtendedWeylElement:
    """(t_mu1 w1)(t_mu2 w2) = t_{mu1 + w1(mu2)} (w1 w2)."""
    from .rationals import mat_mul

    w = FiniteWeylElement(
        mat_mul(g1.finite_factor.matrix, g2.finite_factor.matrix),
        g1.finite_factor.word + g2.finite_factor.word,
    )
    mu = vadd(g1.translation, g1.finite_factor.apply(g2.translation))
    return ExtendedWeylElement(w, mu)


def inverse_element(rs: FiniteRootSystem, g: ExtendedWeylElement) -> ExtendedWeylElement:
    w_inv = finite_inverse(rs, g.finite_factor)
    return ExtendedWeylElement(w_inv, vneg(w_inv.apply(g.translation)))


def simple_affine_reflection(rs: FiniteRootSystem, i: int) -> ExtendedWeylElement:
    """s_i for i = 0..l; s_0 is the reflection at -theta + delta."""
    if i == 0:
        w = _reflection_at(rs, rs.theta)
        return ExtendedWeylElement(w, rs.coroot(rs.theta))
    if not 1 <= i <= rs.rank:
        raise DomainError(f"affine reflection index {i} out of range 0..{rs.rank}")
    return from_finite(rs, finite_from_word(rs, [i]))


def _reflection_at(rs: FiniteRootSystem, alpha: Vector) -> FiniteWeylElement:
    cols = []
    norm = rs.bilinear(alpha, alpha)
    for j in range(rs.dim):
        e = tuple(Fraction(1 if k == j else 0) for k in range(rs.dim))
        coeff = 2 * rs.bilinear(e, alpha) / norm
        cols.append(vsub(e, vscale(coeff, alpha)))
    return FiniteWeylElement(tuple(zip(*cols)), ())


def element_from_word(rs: FiniteRootSystem, word: Sequence[int]) -> ExtendedWeylElement:
    """Product of affine simple reflections, indices in 0..l."""
    g = identity_element(rs)
    for i in word:
        g = compose(rs, g, simple_affine_reflection(rs, i))
    return g


def _act_root_raw(rs, w: FiniteWeylElement, mu: Vector, beta: RealRoot) -> RealRoot:
    image = w.apply(beta.alpha)
    shift = rs.bilinear(image, mu)
    return RealRoot(image, int(beta.n - shift))


def act_on_root(
    rs: FiniteRootSystem, g: ExtendedWeylElement, beta: RealRoot
) -> RealRoot:
    """t_mu w (alpha + n delta) = w(alpha) + (n - (w(alpha)|mu)) delta."""
    _require_extended(rs, g)
    if not rs.is_root(beta.alpha):
        raise DomainError(f"{beta.alpha} is not a root of {rs.lie_type}")
    return _act_root_raw(rs, g.finite_factor, g.translation, beta)


def act_on_weight(
    rs: FiniteRootSystem, g: ExtendedWeylElement, lam: AffineWeight
) -> AffineWeight:
    """Linear action on weights; preserves all coroot pairings."""
    _require_extended(rs, g)
    mu = g.translation
    moved = g.finite_factor.apply(lam.finite)
    finite = vadd(moved, vscale(lam.level, mu))
    delta = (
        lam.delta_part
        - rs.bilinear(moved, mu)
        - lam.level * rs.bilinear(mu, mu) / 2
    )
    return AffineWeight(finite, lam.level, delta)


def dot_action(
    rs: FiniteRootSystem, g: ExtendedWeylElement, lam: AffineWeight
) -> AffineWeight:
    """g . lam = g(lam + rho_hat) - rho_hat; the level is unchanged."""
    return weight_sub(act_on_weight(rs, g, weight_add(lam, rho_hat(rs))), rho_hat(rs))


def inversion_bound(rs: FiniteRootSystem, g: ExtendedWeylElement) -> int:
    """A delta-degree bound covering every inversion of g.

    Images of alpha + n delta have delta-coefficient n - (w(alpha)|mu), so
    any positive root sent negative satisfies n <= max |(alpha|mu)|.
    """
    best = 0
    for a in rs.roots:
        val = abs(rs.bilinear(a, g.translation))
        assert val.denominator == 1
        best = max(best, int(val))
    return best + 1


def inversion_set(
    rs: FiniteRootSystem,
    g: ExtendedWeylElement,
    search_bound: Optional[int] = None,
) -> List[RealRoot]:
    """Positive real roots sent negative by g (exact and complete).

    ``search_bound`` may widen the scan but must dominate the proven
    bound; the default uses the bound itself.
    """
    _require_extended(rs, g)
    bound = inversion_bound(rs, g)
    if search_bound is None:
        search_bound = bound
    elif search_bound < bound:
        raise DomainError(
            f"search bound {search_bound} is below the proven sufficient "
            f"bound {bound}"
        )
    out = []
    w, mu = g.finite_factor, g.translation
    for alpha in rs.roots:
        lo = 0 if rs.is_positive_root(alpha) else 1
        for n in range(lo, search_bound + 1):
            beta = RealRoot(alpha, n)
            if not is_positive_real_root(rs, _act_root_raw(rs, w, mu, beta)):
                out.append(beta)
    return sorted(out, key=lambda b: (b.n, rs.root_coordinates(b.alpha)))


def permutes_simple_affine_roots(
    rs: FiniteRootSystem, g: ExtendedWeylElement
) -> bool:
    """Membership test for the diagram-rotation subgroup: g fixes the set
    {alpha_0, ..., alpha_l}."""
    _require_extended(rs, g)
    simples = affine_simple_roots(rs)
    images = {act_on_root(rs, g, a) for a in simples}
    return images == set(simples)


def random_extended_element(rs, rng, max_word=4, coweight_bound=2) -> ExtendedWeylElement:
    """Seeded random element of W x P^vee, for property tests."""
    word = [rng.randrange(0, rs.rank + 1) for _ in range(rng.randrange(0, max_word + 1))]
    g = element_from_word(rs, word)
    mu = vzero(rs.dim)
    for cw in rs.fundamental_coweights:
        mu = vadd(mu, vscale(rng.randint(-coweight_bound, coweight_bound), cw))
    return compose(rs, g, translation_element(rs, mu))
