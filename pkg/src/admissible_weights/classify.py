"""Classification of highest weights over a fixed admissible level.

A level context bundles the root system, the admissibility certificate
p/q, and the integral root system of the vacuum weight k*Lambda_0.  From
it we enumerate:

  * the dominant members of the classified family (dominant integral
    finite part, bounded by p - h^vee against the highest root when
    gcd(lacing, q) = 1, and by p - h against the highest short coroot
    otherwise);
  * the positivity twists, the finitely many t_mu*w sending every simple
    integral root of the vacuum system to a positive real root (testing on
    the simple integral roots suffices, since any positive integral root
    is a nonnegative combination of them);
  * the full family: dot-orbit of the dominant members under the twists,
    deduplicated by finite part, with the delta coefficient projected to
    zero (membership criteria never consult it).

The membership oracle then says: lam is the highest weight of a module
over the simple quotient vertex algebra iff lam is admissible and its
integral root system is isomorphic to the vacuum one.  The remaining
operations expose the rank-one reduction data (k_i, restriction to the
i-th sl2), a battery of necessary conditions derived from that reduction,
and orbit moves that stay inside the family whenever no inversion pairing
is a positive integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .admissibility import (
    AdmissibilityReport,
    IntegralRootSystem,
    LevelCertificate,
    is_admissible_number,
    is_admissible_weight,
    isomorphic_integral_systems,
    simple_integral_roots,
    vacuum_weight,
)
from .affine import (
    AffineWeight,
    ExtendedWeylElement,
    RealRoot,
    act_on_root,
    affine_simple_roots,
    coroot_pairing,
    dot_action,
    identity_element,
    inversion_set,
    is_positive_real_root,
    rho_hat,
    simple_affine_reflection,
    translation_element,
    weight_add,
)
from .errors import DomainError, NotAdmissibleError
from .finite import (
    FiniteRootSystem,
    FiniteWeylElement,
    Vector,
    build_root_system,
    dominant_integral_weights,
    weyl_elements,
)
from .rationals import vadd, vscale, vzero


@dataclass(eq=False)
class AdmissibleLevelContext:
    """All level-wide data needed by the classification operations.

    Enumerations are computed once on first access and cached; every
    value involved is immutable, so recomputation under concurrent first
    access is harmless.
    """

    rs: FiniteRootSystem
    certificate: LevelCertificate
    base_system: IntegralRootSystem

    @property
    def level(self) -> Fraction:
        return self.certificate.level

    @property
    def p(self) -> int:
        return self.certificate.p

    @property
    def q(self) -> int:
        return self.certificate.q

    @property
    def long_case(self) -> bool:
        """True for gcd(lacing, q) = 1 (bound against the highest root)."""
        return self.certificate.case_gcd == 1

    @cached_property
    def dominant_weights(self) -> Tuple[AffineWeight, ...]:
        rs = self.rs
        if self.long_case:
            bound_root = rs.theta
            bound = self.p - rs.dual_coxeter_number
        else:
            bound_root = rs.theta_s
            bound = self.p - rs.coxeter_number
        vecs = dominant_integral_weights(rs, bound_root, bound)
        return tuple(AffineWeight(v, self.level, Fraction(0)) for v in vecs)

    @cached_property
    def twists(self) -> Tuple[ExtendedWeylElement, ...]:
        return tuple(_positivity_twists(self))

    @cached_property
    def orbit_multiplicity(self) -> Dict[Vector, int]:
        """How many (twist, dominant weight) pairs land on each finite part."""
        counts: Dict[Vector, int] = {}
        for y in self.twists:
            for lam in self.dominant_weights:
                key = dot_action(self.rs, y, lam).finite
                counts[key] = counts.get(key, 0) + 1
        return counts

    @cached_property
    def module_weights(self) -> Tuple[AffineWeight, ...]:
        keys = sorted(self.orbit_multiplicity)
        return tuple(AffineWeight(k, self.level, Fraction(0)) for k in keys)

    @cached_property
    def module_weight_keys(self) -> frozenset:
        return frozenset(self.orbit_multiplicity)


def level_context(rs, k) -> AdmissibleLevelContext:
    """Build the context for an admissible level; reject other levels."""
    if isinstance(rs, str):
        rs = build_root_system(rs)
    cert = is_admissible_number(rs, k)
    if not cert.admissible:
        raise NotAdmissibleError(
            f"level {k} is not admissible for {rs.lie_type}: {cert.reason}"
        )
    base = simple_integral_roots(rs, vacuum_weight(rs, k))
    return AdmissibleLevelContext(rs=rs, certificate=cert, base_system=base)


def _positivity_twists(ctx: AdmissibleLevelContext) -> List[ExtendedWeylElement]:
    """All y = t_mu*w with y(beta) > 0 for every simple integral root beta
    of the vacuum system.

    Completeness: writing nu = w^{-1}(mu), positivity of the images of the
    finite simple roots forces (alpha_i|nu) <= 0, and positivity of the
    image of the affine simple integral root -theta' + n0*delta forces
    sum a_i (alpha_i|nu) >= -n0 with all a_i >= 1, so each coordinate
    (alpha_i|nu) lies in [-n0, 0].
    """
    rs = ctx.rs
    n0 = ctx.q if ctx.long_case else ctx.q // rs.lacing_number
    base_simples = ctx.base_system.simple_roots
    out = []
    for w in weyl_elements(rs):
        for coords in itertools.product(range(-n0, 1), repeat=rs.rank):
            nu = vzero(rs.dim)
            for c, cw in zip(coords, rs.fundamental_coweights):
                nu = vadd(nu, vscale(c, cw))
            g = ExtendedWeylElement(w, w.apply(nu))
            if all(
                is_positive_real_root(rs, act_on_root(rs, g, beta))
                for beta in base_simples
            ):
                out.append(g)
    return out


def base_system_label(ctx: AdmissibleLevelContext) -> str:
    """Display label for the vacuum integral system.

    The suffix records the case split, (1) when gcd(lacing, q) = 1 and
    (lacing) otherwise; it identifies the isomorphism class by finite type
    and case rather than by twisted-diagram nomenclature.
    """
    t = ctx.rs.lie_type
    suffix = 1 if ctx.long_case else ctx.rs.lacing_number
    return f"{t.family}{t.rank}~({suffix})"


def integral_system_label(ctx: AdmissibleLevelContext, system: IntegralRootSystem) -> str:
    if isomorphic_integral_systems(system, ctx.base_system):
        return base_system_label(ctx)
    return f"nonprincipal(rank={system.span_rank})"


@dataclass(frozen=True)
class ClassificationFailure:
    check: str
    witness: Dict[str, object]


@dataclass(frozen=True)
class ClassificationReport:
    weight: AffineWeight
    is_module: bool
    admissible: bool
    isomorphic: bool
    integral_system: str
    failures: Tuple[ClassificationFailure, ...]
    admissibility: AdmissibilityReport


def is_module_over_simple_vertex_algebra(
    ctx: AdmissibleLevelContext, lam: AffineWeight
) -> ClassificationReport:
    """Membership oracle: admissible weight with vacuum-isomorphic
    integral root system."""
    if lam.level != ctx.level:
        raise DomainError(
            f"weight has level {lam.level}, context level is {ctx.level}"
        )
    report = is_admissible_weight(ctx.rs, lam)
    iso = isomorphic_integral_systems(report.system, ctx.base_system)
    failures: List[ClassificationFailure] = []
    if not report.admissible:
        witness: Dict[str, object] = {}
        if report.witness is not None:
            witness["root"] = {
                "alpha": [str(x) for x in report.witness.alpha],
                "n": report.witness.n,
            }
        if report.pairing is not None:
            witness["pairing"] = str(report.pairing)
        failures.append(
            ClassificationFailure(f"admissible:{report.failed_condition}", witness)
        )
    if not iso:
        failures.append(
            ClassificationFailure(
                "integral-system-isomorphism",
                {
                    "base": base_system_label(ctx),
                    "system_rank": report.system.span_rank,
                    "system_size": len(report.system.simple_roots),
                },
            )
        )
    return ClassificationReport(
        weight=lam,
        is_module=report.admissible and iso,
        admissible=report.admissible,
        isomorphic=iso,
        integral_system=integral_system_label(ctx, report.system),
        failures=tuple(failures),
        admissibility=report,
    )


@dataclass(frozen=True)
class ReductionDatum:
    """Rank-one reduction along the i-th simple root."""

    index: int
    level_i: Fraction
    h_value: Fraction


def reduction_data(ctx: AdmissibleLevelContext, lam: AffineWeight) -> List[ReductionDatum]:
    """k_i + 2 = (2/(alpha_i|alpha_i)) (k + h^vee); the restricted weight
    keeps the pairing <finite(lam), alpha_i^vee>."""
    rs = ctx.rs
    shifted = ctx.level + rs.dual_coxeter_number
    out = []
    for i, alpha in enumerate(rs.simple_roots, start=1):
        c = 2 / rs.bilinear(alpha, alpha)
        out.append(
            ReductionDatum(
                index=i,
                level_i=c * shifted - 2,
                h_value=rs.pairing(lam.finite, alpha),
            )
        )
    return out


_SL2 = None


def _sl2_system() -> FiniteRootSystem:
    global _SL2
    if _SL2 is None:
        _SL2 = build_root_system("A1")
    return _SL2


def sl2_weight(h_value: Fraction, level: Fraction) -> AffineWeight:
    """The rank-one weight with <finite, alpha^vee> = h_value at the
    given level, on the cached A1 system."""
    rs = _sl2_system()
    return AffineWeight(
        vscale(Fraction(h_value) / 2, rs.simple_roots[0]), Fraction(level), Fraction(0)
    )


def sl2_reduction_admissible(datum: ReductionDatum) -> AdmissibilityReport:
    """Admissibility of the restricted weight, decided by instantiating
    the full machinery on A1 rather than a bespoke formula."""
    return is_admissible_weight(_sl2_system(), sl2_weight(datum.h_value, datum.level_i))


@dataclass(frozen=True)
class BatteryCheck:
    name: str
    applicable: bool
    passed: bool
    detail: str


@dataclass(frozen=True)
class BatteryReport:
    checks: Tuple[BatteryCheck, ...]
    all_passed: bool
    consistent: bool


def kostant_subset(rs: FiniteRootSystem, i: int) -> List[FiniteWeylElement]:
    """{w in W : w^{-1}(alpha_i) is positive}; half of the group."""
    if not 1 <= i <= rs.rank:
        raise DomainError(f"simple root index {i} out of range 1..{rs.rank}")
    alpha = rs.simple_roots[i - 1]
    out = []
    for w in weyl_elements(rs):
        # Weyl matrices are orthogonal here, so w^{-1} acts by the transpose.
        preimage = tuple(
            sum(w.matrix[r][c] * alpha[r] for r in range(rs.dim))
            for c in range(rs.dim)
        )
        if rs.is_positive_root(preimage):
            out.append(w)
    return out


def finite_dot(rs: FiniteRootSystem, w: FiniteWeylElement, lam_bar: Vector) -> Vector:
    """w . lam = w(lam + rho) - rho on finite weights."""
    from .rationals import vsub

    return vsub(w.apply(vadd(lam_bar, rs.rho)), rs.rho)


def necessary_condition_battery(
    ctx: AdmissibleLevelContext, lam: AffineWeight
) -> BatteryReport:
    """Necessary conditions for membership.

    (i) every rank-one restriction must be admissible at its level k_i;
    (ii) for weights with integral finite pairings, the dominant bound
    <finite, theta> <= p - h^vee (or <finite, theta_s^vee> <= p - h) is
    recovered through the Kostant subset: p - 2 must dominate the dotted
    pairing <w . lam, alpha_i^vee> for w taking the bounding root to a
    simple root;
    (iii) the battery is consistent with the oracle: a positive oracle
    verdict implies every applicable check passes.
    """
    rs = ctx.rs
    checks: List[BatteryCheck] = []

    for datum in reduction_data(ctx, lam):
        report = sl2_reduction_admissible(datum)
        checks.append(
            BatteryCheck(
                name=f"sl2-reduction[{datum.index}]",
                applicable=True,
                passed=report.admissible,
                detail=(
                    f"h-value {datum.h_value}, level {datum.level_i}"
                    + ("" if report.admissible else f", fails {report.failed_condition}")
                ),
            )
        )

    fundamental = rs.fundamental_coordinates(lam.finite)
    integral = all(c.denominator == 1 for c in fundamental)
    if integral:
        bounding_root = rs.theta if ctx.long_case else rs.theta_s
        target_length = rs.bilinear(bounding_root, bounding_root)
        index = next(
            i
            for i, a in enumerate(rs.simple_roots, start=1)
            if rs.bilinear(a, a) == target_length
        )
        alpha = rs.simple_roots[index - 1]
        witness = next(
            w
            for w in kostant_subset(rs, index)
            if w.apply(bounding_root) == alpha
        )
        dotted = rs.pairing(finite_dot(rs, witness, lam.finite), alpha)
        direct = rs.pairing(vadd(lam.finite, rs.rho), bounding_root) - 1
        assert dotted == direct
        checks.append(
            BatteryCheck(
                name="dominant-bound",
                applicable=True,
                passed=dotted <= ctx.p - 2,
                detail=f"dotted pairing {dotted} vs p - 2 = {ctx.p - 2}",
            )
        )
    else:
        checks.append(
            BatteryCheck(
                name="dominant-bound",
                applicable=False,
                passed=True,
                detail="finite pairings are not all integral",
            )
        )

    all_passed = all(c.passed for c in checks if c.applicable)
    oracle = is_module_over_simple_vertex_algebra(ctx, lam)
    consistent = (not oracle.is_module) or all_passed
    checks.append(
        BatteryCheck(
            name="oracle-consistency",
            applicable=True,
            passed=consistent,
            detail=f"oracle verdict {oracle.is_module}",
        )
    )
    return BatteryReport(tuple(checks), all_passed, consistent)


@dataclass(frozen=True)
class MoveResult:
    """Outcome of one orbit move; inapplicable moves name the violation."""

    applied: bool
    weight: Optional[AffineWeight]
    blocking_root: Optional[RealRoot]
    blocking_pairing: Optional[Fraction]


def duflo_joseph_move(
    ctx: AdmissibleLevelContext, lam: AffineWeight, g: ExtendedWeylElement
) -> MoveResult:
    """Apply g . lam when no inversion pairing is a positive integer.

    The caller certifies lam as a member of the classified family; the
    move then stays inside it.  Positive integers exclude 0 here: the
    shifted pairings of a regular dominant weight avoid {0, -1, -2, ...},
    so its complement on integral roots is {1, 2, ...}.
    """
    rs = ctx.rs
    shifted = weight_add(lam, rho_hat(rs))
    for beta in inversion_set(rs, g):
        value = coroot_pairing(rs, shifted, beta)
        if value.denominator == 1 and value >= 1:
            return MoveResult(False, None, beta, value)
    return MoveResult(True, dot_action(rs, g, lam), None, None)


def generator_by_name(rs: FiniteRootSystem, token: str) -> ExtendedWeylElement:
    """Resolve an orbit-generator name.

    "s0".."sl" are the affine simple reflections, "t1".."tl" translations
    by the fundamental coweights, and "d<perm>" a diagram rotation given by
    its node permutation (digit string for ranks below 10, or
    comma-separated node indices; position i holds the image of node i).
    """
    from .errors import InputError

    name = token.strip()
    if len(name) >= 2 and name[0] == "s" and name[1:].isdigit():
        i = int(name[1:])
        if i > rs.rank:
            raise InputError(f"reflection {name!r} out of range s0..s{rs.rank}")
        return simple_affine_reflection(rs, i)
    if len(name) >= 2 and name[0] == "t" and name[1:].isdigit():
        i = int(name[1:])
        if not 1 <= i <= rs.rank:
            raise InputError(f"translation {name!r} out of range t1..t{rs.rank}")
        return translation_element(rs, rs.fundamental_coweights[i - 1])
    if name.startswith("d") and len(name) > 1:
        body = name[1:]
        if "," in body:
            images = tuple(int(x) for x in body.split(","))
        elif body.isdigit():
            images = tuple(int(ch) for ch in body)
        else:
            raise InputError(f"cannot parse diagram twist {token!r}")
        if sorted(images) != list(range(rs.rank + 1)):
            raise InputError(
                f"{token!r} is not a permutation of the nodes 0..{rs.rank}"
            )
        if images == tuple(range(rs.rank + 1)):
            return identity_element(rs)
        for g, perm in diagram_twist_group(rs):
            if perm == images:
                return g
        raise InputError(
            f"{token!r} does not correspond to a diagram rotation of "
            f"{rs.lie_type}"
        )
    raise InputError(f"unknown generator name {token!r}")


def diagram_twist_group(
    rs: FiniteRootSystem,
) -> List[Tuple[ExtendedWeylElement, Tuple[int, ...]]]:
    """Elements permuting the affine simple roots, with their node
    permutations (image position of each node 0..l)."""
    simples = affine_simple_roots(rs)
    index = {beta: i for i, beta in enumerate(simples)}
    out = []
    for w in weyl_elements(rs):
        for coords in itertools.product((-1, 0), repeat=rs.rank):
            nu = vzero(rs.dim)
            for c, cw in zip(coords, rs.fundamental_coweights):
                nu = vadd(nu, vscale(c, cw))
            g = ExtendedWeylElement(w, w.apply(nu))
            images = [act_on_root(rs, g, beta) for beta in simples]
            if all(im in index for im in images):
                out.append((g, tuple(index[im] for im in images)))
    return out
