"""Six-point configurations and the named intersection-point families.

From two disk points a, b (nonzero, non-collinear with 0) we derive the
unit-circle reflections a_star = 1/conj(a), b_star and the geodesic
endpoints a_end, b_end.  The line family k, s, t, u, v, the great-circle
family k_c ... v_c, and the p/q family each have two evaluation paths:
synthetic intersections and closed forms, which must agree.

All eleven points of the combined family are real multiples of
H = a(1-|b|^2) + b(1-|a|^2); p, q, p_c, q_c are positive real multiples of
conj(Q) = b(1-|a|^2)^2 + a|a-b|(|1-conj(a)b| - |a-b|).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import (
    CoincidentPoints,
    CollinearWithOrigin,
    DegenerateDenominator,
    NearBoundary,
    OutsideDisk,
    ZeroPoint,
)
from .euclid import line_intersection, scale_of
from .hyperbolic import geodesic_endpoints, hyperbolic_midpoint
from .spherical import GcisQuadratic, gcis, gcis_quadratic_solve, gcis_roots

_DENOM_TOL = 1e-12


@dataclass(frozen=True)
class DiskConfig:
    """Validated pair a, b with the four derived boundary/reflection points."""

    a: complex
    b: complex
    a_star: complex
    b_star: complex
    a_end: complex
    b_end: complex


@dataclass(frozen=True)
class PointFamily:
    """All named intersection points of a configuration."""

    k: complex
    s: complex
    t: complex
    u: complex
    v: complex
    m: complex
    kc: complex
    sc: complex
    tc: complex
    uc: complex
    vc: complex
    p: complex
    q: complex
    pc: complex
    qc: complex
    H: complex


def h_vector(a: complex, b: complex) -> complex:
    """Common direction H = a(1-|b|^2) + b(1-|a|^2) of the eleven points."""
    return a * (1 - abs(b) ** 2) + b * (1 - abs(a) ** 2)


def build_config(a: complex, b: complex) -> DiskConfig:
    """Validate a, b and derive reflections and geodesic endpoints."""
    if a == 0 or b == 0:
        raise ZeroPoint("a and b must be nonzero")
    if abs(a) >= 1 or abs(b) >= 1:
        raise OutsideDisk("a and b must lie in the open unit disk")
    if a == b:
        raise CoincidentPoints("a and b must be distinct")
    if abs((a * b.conjugate()).imag) <= _DENOM_TOL * abs(a) * abs(b):
        raise CollinearWithOrigin("a, b collinear with the origin")
    a_end, b_end = geodesic_endpoints(a, b)
    return DiskConfig(a, b, 1 / a.conjugate(), 1 / b.conjugate(), a_end, b_end)


def _moduli(cfg: DiskConfig) -> tuple[float, float, float, float, float]:
    a, b = cfg.a, cfg.b
    return (abs(a - b), abs(1 - a * b.conjugate()),
            abs(a) ** 2, abs(b) ** 2, abs(a * b) ** 2)


def _checked_div(name: str, num: complex, den: float | complex,
                 sc: float = 1.0) -> complex:
    if abs(den) <= _DENOM_TOL * sc:
        raise DegenerateDenominator(f"denominator of {name} vanishes")
    return num / den


def five_points_euclid(cfg: DiskConfig, path: str = "closed_form"
                       ) -> tuple[complex, complex, complex, complex, complex]:
    """Points k, s, t, u, v as line intersections or via their closed forms."""
    a, b = cfg.a, cfg.b
    if path == "synthetic":
        ast, bst, ae, be = cfg.a_star, cfg.b_star, cfg.a_end, cfg.b_end
        return (line_intersection(ae, ast, be, bst),
                line_intersection(a, be, b, ae),
                line_intersection(ae, bst, be, ast),
                line_intersection(a, bst, b, ast),
                line_intersection(a, ae, b, be))
    if path != "closed_form":
        raise ValueError(f"unknown path {path!r}")
    mab, m1, a2, b2, ab2 = _moduli(cfg)
    H = h_vector(a, b)
    k = _checked_div("k", (mab - m1) * H,
                     (1 - ab2) * mab + (2 * ab2 - (a2 + b2)) * m1)
    s = _checked_div("s", H, 2 - 2 * (a * b.conjugate()).real - mab * m1)
    t = _checked_div("t", H, 2 * (a * b.conjugate()).real - 2 * ab2 + mab * m1)
    u = _checked_div("u", H, 1 - ab2)
    v = _checked_div("v", (m1 - mab) * H,
                     (2 - (a2 + b2)) * m1 - (1 - ab2) * mab)
    return k, s, t, u, v


def chordal_quadratics(cfg: DiskConfig) -> dict[str, GcisQuadratic]:
    """Quadratic conj(H) z^2 + 2Rz - H = 0 for each great-circle point."""
    a, b = cfg.a, cfg.b
    mab, m1, a2, b2, _ = _moduli(cfg)
    if abs(m1 - mab) <= 1e-10:
        raise NearBoundary("|a-b| within rounding of |1 - a conj(b)|")
    H = h_vector(a, b)
    shared = (1 - a2) * (1 - b2) * m1
    return {
        "kc": GcisQuadratic(H, shared / (mab - m1)),
        "sc": GcisQuadratic(H, m1 * (m1 - mab)),
        "tc": GcisQuadratic(H, m1 * (mab - m1)),
        "uc": GcisQuadratic(H, 0.0),
        "vc": GcisQuadratic(H, shared / (m1 - mab)),
    }


def five_points_chordal(cfg: DiskConfig, path: str = "quadratic"
                        ) -> tuple[complex, complex, complex, complex, complex]:
    """Points k_c, s_c, t_c, u_c, v_c via the quadratics or via GCIS."""
    a, b = cfg.a, cfg.b
    if path == "gcis":
        ast, bst, ae, be = cfg.a_star, cfg.b_star, cfg.a_end, cfg.b_end
        return (gcis(ae, ast, be, bst),
                gcis(a, be, b, ae),
                gcis(ae, bst, be, ast),
                gcis(a, bst, b, ast),
                gcis(a, ae, b, be))
    if path != "quadratic":
        raise ValueError(f"unknown path {path!r}")
    quads = chordal_quadratics(cfg)
    return tuple(gcis_quadratic_solve(quads[n])   # type: ignore[return-value]
                 for n in ("kc", "sc", "tc", "uc", "vc"))


def _positive_multiple(roots: tuple[complex, complex], direction: complex
                       ) -> complex:
    """Root that is a positive real multiple of the given direction."""
    return max(roots, key=lambda z: (z * direction.conjugate()).real)


def pq_family(cfg: DiskConfig, path: str = "closed_form"
              ) -> tuple[complex, complex, complex, complex]:
    """Points p, q, p_c, q_c; all positive real multiples of conj(Q).

    The chordal pair is selected among the quadratic (or GCIS) roots by that
    direction: q_c generally lies outside the unit disk.
    """
    a, b = cfg.a, cfg.b
    mab, m1, a2, b2, _ = _moduli(cfg)
    num = b * (1 - a2) ** 2 + a * mab * (m1 - mab)    # = conj(Q)
    if path == "synthetic":
        p = line_intersection(a, cfg.b_end, cfg.a_star, b)
        q = line_intersection(a, cfg.b_star, cfg.a_star, cfg.b_end)
        pc = _positive_multiple(gcis_roots(a, cfg.b_end, cfg.a_star, b), num)
        qc = _positive_multiple(
            gcis_roots(a, cfg.b_star, cfg.a_star, cfg.b_end), num)
        return p, q, pc, qc
    if path != "closed_form":
        raise ValueError(f"unknown path {path!r}")
    sc = scale_of(a, b)
    p = _checked_div("p", num, (1 - a2) ** 2 + a2 * mab * (m1 - mab), sc)
    q = _checked_div("q", num, b2 * (1 - a2) ** 2 + mab * (m1 - mab), sc)
    Q = num.conjugate()
    R = (1 - a2) * m1 * (mab - m1)
    if abs(Q) <= _DENOM_TOL * sc:
        raise DegenerateDenominator("Q vanishes")
    qc = _positive_multiple(_complex_quadratic_roots(Q, R, -num), num)
    pc = _positive_multiple(_complex_quadratic_roots(Q, -R, -num), num)
    return p, q, pc, qc


def _complex_quadratic_roots(c2: complex, c1: complex, c0: complex
                             ) -> tuple[complex, complex]:
    disc = cmath.sqrt(c1 * c1 - 4 * c2 * c0)
    return (-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)


def collinearity_residual(points: list[complex]) -> float:
    """Normalized cross-product residual of the points about the first one.

    Zero for exactly collinear points; dimensionless.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    anchor = points[0]
    rel = [z - anchor for z in points[1:]]
    worst = 0.0
    for i in range(len(rel)):
        for j in range(i + 1, len(rel)):
            r = abs((rel[i] * rel[j].conjugate()).imag) \
                / max(1.0, abs(rel[i]) * abs(rel[j]))
            worst = max(worst, r)
    return worst


def family_report(a: complex, b: complex
                  ) -> tuple[dict[str, complex], dict[str, str], float | None]:
    """Every named point computed independently, with per-point status.

    Returns (points, statuses, residual): statuses map each name to "ok" or
    the degeneracy message; residual is the collinearity residual of the
    successfully computed H-family points with the origin (None when fewer
    than two survive).
    """
    cfg = build_config(a, b)
    mab, m1, a2, b2, ab2 = _moduli(cfg)
    H = h_vector(a, b)
    numq = b * (1 - a2) ** 2 + a * mab * (m1 - mab)
    Q, R = numq.conjugate(), (1 - a2) * m1 * (mab - m1)
    shared = (1 - a2) * (1 - b2) * m1

    def quad_point(r: float) -> complex:
        if not cmath.isfinite(complex(r)):
            raise NearBoundary("|a-b| within rounding of |1 - a conj(b)|")
        return gcis_quadratic_solve(GcisQuadratic(H, r))

    def ratio(num: complex, den: float) -> complex:
        return _checked_div("point", num, den)

    makers: dict[str, object] = {
        "k": lambda: ratio((mab - m1) * H,
                           (1 - ab2) * mab + (2 * ab2 - (a2 + b2)) * m1),
        "s": lambda: ratio(H, 2 - 2 * (a * b.conjugate()).real - mab * m1),
        "t": lambda: ratio(H, 2 * (a * b.conjugate()).real - 2 * ab2 + mab * m1),
        "u": lambda: ratio(H, 1 - ab2),
        "v": lambda: ratio((m1 - mab) * H, (2 - (a2 + b2)) * m1 - (1 - ab2) * mab),
        "m": lambda: hyperbolic_midpoint(a, b),
        "k_c": lambda: quad_point(shared / (mab - m1)) if abs(m1 - mab) > 1e-10
        else _near_boundary(),
        "s_c": lambda: quad_point(m1 * (m1 - mab)),
        "t_c": lambda: quad_point(m1 * (mab - m1)),
        "u_c": lambda: quad_point(0.0),
        "v_c": lambda: quad_point(shared / (m1 - mab)) if abs(m1 - mab) > 1e-10
        else _near_boundary(),
        "p": lambda: ratio(numq, (1 - a2) ** 2 + a2 * mab * (m1 - mab)),
        "q": lambda: ratio(numq, b2 * (1 - a2) ** 2 + mab * (m1 - mab)),
        "p_c": lambda: _positive_multiple(
            _complex_quadratic_roots(Q, -R, -numq), numq),
        "q_c": lambda: _positive_multiple(
            _complex_quadratic_roots(Q, R, -numq), numq),
    }
    points: dict[str, complex] = {
        "a_star": cfg.a_star, "b_star": cfg.b_star,
        "a_end": cfg.a_end, "b_end": cfg.b_end, "H": H,
    }
    statuses: dict[str, str] = {name: "ok" for name in points}
    for name, make in makers.items():
        try:
            points[name] = make()                     # type: ignore[operator]
            statuses[name] = "ok"
        except (DegenerateDenominator, NearBoundary) as exc:
            statuses[name] = f"degenerate: {exc}"
    h_family = [points[n] for n in
                ("k", "s", "t", "u", "v", "m", "k_c", "s_c", "t_c", "u_c", "v_c")
                if n in points]
    residual = collinearity_residual([0j, *h_family]) if len(h_family) >= 2 else None
    return points, statuses, residual


def _near_boundary() -> complex:
    raise NearBoundary("|a-b| within rounding of |1 - a conj(b)|")


def eleven_points(a: complex, b: complex) -> tuple[PointFamily, float]:
    """Full point family for (a, b) plus the collinearity residual of the
    eleven H-direction points with the origin."""
    cfg = build_config(a, b)
    k, s, t, u, v = five_points_euclid(cfg)
    kc, sc, tc, uc, vc = five_points_chordal(cfg)
    m = hyperbolic_midpoint(a, b)
    p, q, pc, qc = pq_family(cfg)
    fam = PointFamily(k, s, t, u, v, m, kc, sc, tc, uc, vc, p, q, pc, qc,
                      h_vector(a, b))
    residual = collinearity_residual(
        [0j, k, m, s, t, u, v, kc, sc, tc, uc, vc])
    return fam, residual
