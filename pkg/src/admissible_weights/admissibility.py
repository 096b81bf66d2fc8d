"""Admissible levels, integral root systems, and weight admissibility.

For a weight lam of rational level k with k + h^vee = p/q, the real root
alpha + n*delta is *integral* when <lam + rho_hat, (alpha + n delta)^vee>
is an integer.  In each finite direction alpha this is a congruence

    t_alpha + n * c_alpha * (p/q)  in  Z,   c_alpha = 2/(alpha|alpha),

whose solution set is empty or a full arithmetic progression: writing
c_alpha * p/q = P/Q in lowest terms, solutions exist iff the denominator
of t_alpha divides Q, and then n = -t_alpha*Q * P^{-1} (mod Q).  The
modulus Q always divides q.

The simple roots of the integral system are computed exactly: a positive
integral root is simple iff its reflection maps every other positive
integral root to a positive one.  Only the minimal occurrence in each
direction can be simple (the reflection in any later occurrence throws the
minimal one below zero), which keeps the candidate set finite, and the
result is certified after the fact: the count must equal the rank of the
rational span of the integral roots, and every positive integral root in a
bounded window must decompose as a nonnegative integer combination of the
returned simple roots.  A plain "sum of two positive roots" test would be
wrong here: with simple roots alpha and -alpha + 2*delta, the root
alpha + 2*delta decomposes only as a three-term combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .affine import (
    AffineWeight,
    RealRoot,
    coroot_pairing,
    is_positive_real_root,
    rho_hat,
    weight_add,
)
from .errors import CriticalLevelError, DomainError, SearchBoundError
from .finite import FiniteRootSystem, Vector
from .rationals import mat_rank, vadd, vscale, vsub, vzero


@dataclass(frozen=True)
class LevelCertificate:
    """Outcome of the admissible-number criterion for one level."""

    level: Fraction
    p: int
    q: int
    case_gcd: int
    min_numerator: int
    admissible: bool
    reason: Optional[str] = None


def shifted_level(rs: FiniteRootSystem, k: Fraction) -> Fraction:
    shifted = Fraction(k) + rs.dual_coxeter_number
    if shifted == 0:
        raise CriticalLevelError(
            f"critical level: k = -{rs.dual_coxeter_number} for {rs.lie_type}"
        )
    return shifted


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def is_admissible_number(rs: FiniteRootSystem, k) -> LevelCertificate:
    """Decide admissibility of a rational level, with certificate.

    k + h^vee = p/q must have p, q positive coprime, with p >= h^vee when
    gcd(lacing, q) = 1 and p >= h when it equals the lacing number.
    """
    k = Fraction(k)
    shifted = shifted_level(rs, k)
    p, q = shifted.numerator, shifted.denominator
    case = _gcd(rs.lacing_number, q)
    min_p = rs.dual_coxeter_number if case == 1 else rs.coxeter_number
    if p <= 0:
        return LevelCertificate(
            k, p, q, case, min_p, False,
            f"shifted level {p}/{q} is not a positive rational",
        )
    if p < min_p:
        bound_name = "the dual Coxeter number" if case == 1 else "the Coxeter number"
        return LevelCertificate(
            k, p, q, case, min_p, False,
            f"numerator p = {p} is below {bound_name} {min_p}",
        )
    return LevelCertificate(k, p, q, case, min_p, True, None)


@dataclass(frozen=True)
class ResidueClass:
    """The set {n : n = residue (mod modulus)}."""

    modulus: int
    residue: int

    def contains(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def members(self, lo: int, hi: int) -> List[int]:
        """All members in [lo, hi]."""
        if hi < lo:
            return []
        first = lo + (self.residue - lo) % self.modulus
        return list(range(first, hi + 1, self.modulus))

    def least(self, lo: int) -> int:
        return lo + (self.residue - lo) % self.modulus


def _progression(t: Fraction, step: Fraction) -> Optional[ResidueClass]:
    """Solve {n in Z : t + n*step in Z} for nonzero rational step."""
    P, Q = step.numerator, step.denominator
    if Q % t.denominator != 0:
        return None
    big_t = int(t * Q)
    inv = pow(P % Q, -1, Q) if Q > 1 else 0
    return ResidueClass(Q, (-big_t * inv) % Q)


def integral_root_membership(
    rs: FiniteRootSystem, lam: AffineWeight, alpha: Vector
) -> Optional[ResidueClass]:
    """Residue description of {n : alpha + n*delta is integral for lam}."""
    if not rs.is_root(alpha):
        raise DomainError(f"{alpha} is not a root of {rs.lie_type}")
    shifted = shifted_level(rs, lam.level)
    t = rs.pairing(vadd(lam.finite, rs.rho), alpha)
    c_alpha = 2 / rs.bilinear(alpha, alpha)
    return _progression(t, c_alpha * shifted)


@dataclass(frozen=True, eq=False)
class IntegralRootSystem:
    """Simple roots and membership rules of the integral root system."""

    owner: AffineWeight
    simple_roots: Tuple[RealRoot, ...]
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    rules: Tuple[Tuple[Vector, Optional[ResidueClass]], ...]
    span_rank: int

    def rule_for(self, alpha: Vector) -> Optional[ResidueClass]:
        for a, rule in self.rules:
            if a == alpha:
                return rule
        raise DomainError(f"{alpha} is not a root of the host system")

    def contains(self, beta: RealRoot) -> bool:
        rule = self.rule_for(beta.alpha)
        return rule is not None and rule.contains(beta.n)


def _integral_rules(rs, lam) -> Dict[Vector, Optional[ResidueClass]]:
    return {a: integral_root_membership(rs, lam, a) for a in rs.roots}


def _span_rank(rs, rules) -> int:
    rows = []
    for alpha, rule in rules.items():
        if rule is None:
            continue
        rows.append(tuple(alpha) + (Fraction(rule.residue),))
        rows.append(tuple(vzero(rs.dim)) + (Fraction(rule.modulus),))
    if not rows:
        return 0
    return mat_rank(rows)


def _minimal_occurrence(rs, alpha, rule) -> Optional[RealRoot]:
    if rule is None:
        return None
    lo = 0 if rs.is_positive_root(alpha) else 1
    return RealRoot(alpha, rule.least(lo))


def _is_simple(rs, rules, beta: RealRoot) -> bool:
    """True iff s_beta maps every other positive integral root to a
    positive one (the defining property of a simple root)."""
    b, nb = beta.alpha, beta.n
    for gamma, rule in rules.items():
        if rule is None:
            continue
        c = rs.pairing(gamma, b)
        assert c.denominator == 1
        c = int(c)
        if c <= 0:
            # delta-degree of the image is n - c*nb >= n; it can vanish only
            # at n = 0 with c = 0, where the finite part is gamma itself.
            continue
        lo = 0 if rs.is_positive_root(gamma) else 1
        for n in rule.members(lo, c * nb):
            if gamma == b and n == nb:
                continue
            n_image = n - c * nb
            if n_image < 0:
                return False
            if n_image == 0 and not rs.is_positive_root(vsub(gamma, vscale(c, b))):
                return False
    return True


def _decomposes(rs, rules, simple_set, beta: RealRoot, memo) -> bool:
    """beta is a nonnegative integer combination of the simple roots,
    verified by reflection descent."""
    if beta in memo:
        return memo[beta]
    if beta in simple_set:
        memo[beta] = True
        return True
    memo[beta] = False  # guards cycles; overwritten on success
    ok = False
    for pi in simple_set:
        c = int(rs.pairing(beta.alpha, pi.alpha))
        if c <= 0:
            continue
        image = RealRoot(vsub(beta.alpha, vscale(c, pi.alpha)), beta.n - c * pi.n)
        if not rs.is_root(image.alpha):
            continue
        rule = rules[image.alpha]
        if rule is None or not rule.contains(image.n):
            continue
        if not is_positive_real_root(rs, image):
            continue
        if _decomposes(rs, rules, simple_set, image, memo):
            ok = True
            break
    memo[beta] = ok
    return ok


def simple_integral_roots(rs: FiniteRootSystem, lam: AffineWeight) -> IntegralRootSystem:
    """Simple roots of the integral root system of lam, with certificates."""
    shifted = shifted_level(rs, lam.level)
    q = shifted.denominator
    rules = _integral_rules(rs, lam)

    candidates = []
    max_residue = 0
    for alpha in rs.roots:
        beta = _minimal_occurrence(rs, alpha, rules[alpha])
        if beta is not None:
            candidates.append(beta)
            max_residue = max(max_residue, rules[alpha].residue)

    simple = [beta for beta in candidates if _is_simple(rs, rules, beta)]
    simple.sort(key=lambda b: (b.n, rs.root_coordinates(b.alpha)))
    simple_set = set(simple)

    rank = _span_rank(rs, rules)
    window = 2 * q * rs.lacing_number + max_residue
    for attempt in range(2):
        ok = len(simple) == rank
        if ok:
            memo = {}
            for alpha, rule in rules.items():
                if rule is None or not ok:
                    continue
                lo = 0 if rs.is_positive_root(alpha) else 1
                for n in rule.members(lo, window):
                    if not _decomposes(rs, rules, simple_set, RealRoot(alpha, n), memo):
                        ok = False
                        break
        if ok:
            break
        if attempt == 0:
            window *= 2
        else:
            raise SearchBoundError(
                f"search bound insufficient for {rs.lie_type} at level "
                f"{lam.level}: {len(simple)} simple roots against span rank {rank}"
            )

    cartan = tuple(
        tuple(int(rs.pairing(b2.alpha, b1.alpha)) for b2 in simple)
        for b1 in simple
    )
    return IntegralRootSystem(
        owner=lam,
        simple_roots=tuple(simple),
        cartan_matrix=cartan,
        rules=tuple(sorted(rules.items())),
        span_rank=rank,
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    """Verdict of the admissible-weight test, with a witness on failure."""

    admissible: bool
    failed_condition: Optional[str]  # "regularity" | "span"
    witness: Optional[RealRoot]
    pairing: Optional[Fraction]
    system: IntegralRootSystem


def is_admissible_weight(rs: FiniteRootSystem, lam: AffineWeight) -> AdmissibilityReport:
    """lam is admissible iff it is regular dominant and its integral roots
    span the full rational span of the real roots.

    Regular dominance is tested on the simple integral roots only; the
    decomposition certificate of ``simple_integral_roots`` extends
    positivity to every positive integral root.
    """
    system = simple_integral_roots(rs, lam)
    shifted_weight = weight_add(lam, rho_hat(rs))
    for beta in system.simple_roots:
        value = coroot_pairing(rs, shifted_weight, beta)
        assert value.denominator == 1
        if value <= 0:
            return AdmissibilityReport(False, "regularity", beta, value, system)
    if system.span_rank != rs.rank + 1:
        witness = next(
            (RealRoot(alpha, 0) for alpha, rule in system.rules if rule is None),
            None,
        )
        return AdmissibilityReport(False, "span", witness, None, system)
    return AdmissibilityReport(True, None, None, None, system)


def isomorphic_integral_systems(s1: IntegralRootSystem, s2: IntegralRootSystem) -> bool:
    """Cartan matrices agree up to a simultaneous row/column permutation."""
    return cartan_permutation_equivalent(s1.cartan_matrix, s2.cartan_matrix)


def cartan_permutation_equivalent(a, b) -> bool:
    n = len(a)
    if len(b) != n:
        return False

    def profile(m, i):
        return (sorted(m[i]), sorted(row[i] for row in m))

    candidates = [
        [j for j in range(n) if profile(a, i) == profile(b, j)] for i in range(n)
    ]
    if any(not c for c in candidates):
        return False

    assignment: List[int] = []
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            if all(
                a[i][k] == b[j][assignment[k]] and a[k][i] == b[assignment[k]][j]
                for k in range(i)
            ):
                used[j] = True
                assignment.append(j)
                if backtrack(i + 1):
                    return True
                assignment.pop()
                used[j] = False
        return False

    return backtrack(0)


def vacuum_weight(rs: FiniteRootSystem, k) -> AffineWeight:
    """k * Lambda_0: zero finite part at level k."""
    return AffineWeight(vzero(rs.dim), Fraction(k), Fraction(0))
