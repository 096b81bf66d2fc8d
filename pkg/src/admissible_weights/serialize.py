"""JSON-ready dict shapes for root systems, weights, and roots.

All rationals are emitted as canonical strings ("a" or "a/b", b > 0), so
serialized output is exact and byte-stable.  Weights carry both the raw
coordinates of the finite part and its fundamental-weight coordinates;
the latter are what the CLI accepts back, which makes emitted weights
round-trippable.
"""

from __future__ import annotations

from typing import Dict, List

from .affine import AffineWeight, RealRoot
from .finite import FiniteRootSystem
from .rationals import format_rational, format_vector, parse_rational


def root_system_payload(rs: FiniteRootSystem) -> Dict[str, object]:
    return {
        "type": str(rs.lie_type),
        "family": rs.lie_type.family,
        "rank": rs.rank,
        "roots": [format_vector(r) for r in rs.roots],
        "simple_roots": [format_vector(r) for r in rs.simple_roots],
        "positive_roots": [format_vector(r) for r in rs.positive_roots],
        "form": [format_vector(row) for row in rs.form],
        "h": rs.coxeter_number,
        "h_dual": rs.dual_coxeter_number,
        "lacing": rs.lacing_number,
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "theta": format_vector(rs.theta),
        "theta_s": format_vector(rs.theta_s),
        "rho": format_vector(rs.rho),
        "fundamental_weights": [format_vector(w) for w in rs.fundamental_weights],
        "fundamental_coweights": [format_vector(w) for w in rs.fundamental_coweights],
    }


def weight_payload(rs: FiniteRootSystem, lam: AffineWeight) -> Dict[str, object]:
    return {
        "finite": format_vector(lam.finite),
        "level": format_rational(lam.level),
        "delta": format_rational(lam.delta_part),
        "fundamental": format_vector(rs.fundamental_coordinates(lam.finite)),
    }


def real_root_payload(beta: RealRoot) -> Dict[str, object]:
    return {"alpha": format_vector(beta.alpha), "n": beta.n}


def weight_from_fundamental_strings(
    rs: FiniteRootSystem, coords: List[str], level: str
) -> AffineWeight:
    values = [parse_rational(c) for c in coords]
    return AffineWeight(
        rs.weight_from_fundamental(values), parse_rational(level)
    )
