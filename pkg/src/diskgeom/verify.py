"""Randomized, seedable verification harness with independent oracles.

Each check draws samples from a named sampler; the per-sample RNG stream is
derived from (seed, sample index), so results do not depend on evaluation
order.  Samples that hit a degenerate configuration raise a GeometryError
and are counted as skipped; a run fails with SamplerStarvation when fewer
than 90% of the requested samples survive.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    GeometryError,
    PointOutsideDisk,
    SamplerMismatch,
    SamplerStarvation,
    UnknownTheorem,
)
from .euclid import line_intersection, orthocenter, scale_of
from .hyperbolic import (
    chord_vs_geodesic_midpoint,
    geodesic_intersection_on_circle,
    hyperbolic_line,
    hyperbolic_midpoint,
    midpoint_via_inversion,
    midpoint_via_lens,
    mobius_T,
    rho,
)
from .spherical import (
    chordal_distance,
    chordal_midpoint,
    gcis,
    great_circle_projection,
    gencircle_from_pair_intersection,
    orthogonal_great_circle,
    to_sphere,
)
from .configurations import (
    build_config,
    collinearity_residual,
    eleven_points,
    five_points_chordal,
    five_points_euclid,
    pq_family,
)


@dataclass(frozen=True)
class SampleSpec:
    """Sampler selection plus exclusion margins."""

    sampler: str
    count: int
    seed: int
    min_radius: float = 0.05
    boundary_margin: float = 0.05
    min_angle: float = 0.05
    min_gap: float = 0.1
    moduli_margin: float = 0.0

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be >= 1")
        for name in ("min_radius", "boundary_margin", "min_angle", "min_gap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class VerificationReport:
    """Residual statistics of one randomized check."""

    theorem_id: str
    sampler: str
    requested: int
    evaluated: int
    skipped: int
    seed: int
    tolerance: float
    max_residual: float
    mean_residual: float
    worst_input: list[list[float]]
    passed: bool
    assertive: bool
    wall_time_s: float

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "sampler": self.sampler,
            "requested": self.requested,
            "evaluated": self.evaluated,
            "skipped": self.skipped,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "mean_residual": self.mean_residual,
            "worst_input": self.worst_input,
            "passed": self.passed,
            "assertive": self.assertive,
            "wall_time_s": self.wall_time_s,
        }


def _rng(spec: SampleSpec, index: int) -> np.random.Generator:
    return np.random.default_rng([spec.seed & 0xFFFFFFFFFFFFFFFF, index])


def sample_disk_pair(spec: SampleSpec, index: int) -> tuple[complex, complex]:
    """Pair in the punctured disk, non-collinear with 0, within margins."""
    rng = _rng(spec, index)
    for _ in range(1000):
        ra = rng.uniform(spec.min_radius, 1 - spec.boundary_margin)
        rb = rng.uniform(spec.min_radius, 1 - spec.boundary_margin)
        ta = rng.uniform(0, 2 * math.pi)
        tb = rng.uniform(0, 2 * math.pi)
        gap = abs(math.remainder(ta - tb, math.pi))
        if gap < spec.min_angle or math.pi - gap < spec.min_angle:
            continue
        if spec.moduli_margin and abs(ra - rb) < spec.moduli_margin:
            continue
        return complex(ra * math.cos(ta), ra * math.sin(ta)), \
            complex(rb * math.cos(tb), rb * math.sin(tb))
    raise SamplerStarvation("disk_pair rejection sampling did not converge")


def sample_circle_quadruple(spec: SampleSpec, index: int
                            ) -> tuple[complex, complex, complex, complex, float]:
    """Four unit-circle points in positive cyclic order with angular gaps
    >= min_gap, plus a uniform parameter usable for chord points."""
    rng = _rng(spec, index)
    for _ in range(1000):
        angles = np.sort(rng.uniform(0, 2 * math.pi, size=4))
        gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * math.pi]]))
        if np.min(gaps) < spec.min_gap:
            continue
        start = rng.uniform(0, 2 * math.pi)
        a, b, c, d = (complex(math.cos(t + start), math.sin(t + start))
                      for t in angles)
        return a, b, c, d, float(rng.uniform(0, 1))
    raise SamplerStarvation("circle_quadruple rejection sampling did not converge")


def sample_lens_pair(spec: SampleSpec, index: int) -> tuple[complex, complex]:
    """Boundary points of a lens through -1 and 1 symmetric in the real axis:
    a on the upper arc, b on the lower (mirrored) arc."""
    rng = _rng(spec, index)
    for _ in range(1000):
        t = rng.uniform(0.2, 3.0)                 # arc circle center at -it
        center = -1j * t
        radius = math.sqrt(1 + t * t)
        lo = math.atan2(t, -1.0)                  # angle of -1 seen from center
        hi = math.atan2(t, 1.0)                   # angle of +1 seen from center
        margin = spec.min_angle
        pa = center + radius * np.exp(1j * rng.uniform(hi + margin, lo - margin))
        pb = center + radius * np.exp(1j * rng.uniform(hi + margin, lo - margin))
        a = complex(pa)
        b = complex(pb).conjugate()
        if a.imag <= 0 or b.imag >= 0:
            continue
        if abs(a) >= 1 - spec.boundary_margin or abs(b) >= 1 - spec.boundary_margin:
            continue
        return a, b
    raise SamplerStarvation("lens_pair rejection sampling did not converge")


SAMPLERS: dict[str, Callable] = {
    "disk_pair": sample_disk_pair,
    "circle_quadruple": sample_circle_quadruple,
    "lens_pair": sample_lens_pair,
}


# ---------------------------------------------------------------------------
# independent oracles


def gcis_oracle(a: complex, b: complex, c: complex, d: complex) -> complex:
    """Great-circle intersection via brute-force circle intersection of the
    two projected circles; never touches the intersection quadratic."""
    return gencircle_from_pair_intersection(a, b, c, d)


def midpoint_oracle(x: complex, y: complex) -> complex:
    """Hyperbolic midpoint by bisection along the T_x-straightened geodesic."""
    if x == y:
        return x
    yp = mobius_T(x, y)
    u = yp / abs(yp)
    lo, hi = 0.0, abs(yp)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if rho(0j, mid * u) < rho(mid * u, yp):
            lo = mid
        else:
            hi = mid
    return mobius_T(-x, 0.5 * (lo + hi) * u)


def conjecture_check(a: complex, b: complex, c: complex, d: complex,
                     h: complex) -> float:
    """Residual |rho(h,j) - rho(k,l)| for the four-chord configuration.

    Samples whose derived points leave the open disk raise PointOutsideDisk
    (a skip signal, not a failure).
    """
    g = line_intersection(a, b, c, d)
    j = line_intersection(g, h, a, c)
    k = line_intersection(g, h, b, d)
    l = line_intersection(g, h, a, d)
    for z in (h, j, k, l):
        if abs(z) >= 1:
            raise PointOutsideDisk(f"derived point {z} outside the open disk")
    return abs(rho(h, j) - rho(k, l))


def mobius_invariance_check(a: complex, b: complex, c: complex, d: complex,
                            h: complex, w: complex | None = None
                            ) -> tuple[float, float]:
    """Moduli-difference residuals (| |T_w(h)|-|T_w(l)| |, | |T_w(j)|-|T_w(k)| |)
    for a conjecture configuration; w defaults to 1/conj(g)."""
    g = line_intersection(a, b, c, d)
    j = line_intersection(g, h, a, c)
    k = line_intersection(g, h, b, d)
    l = line_intersection(g, h, a, d)
    if w is None:
        w = 1 / g.conjugate()
    return (abs(abs(mobius_T(w, h)) - abs(mobius_T(w, l))),
            abs(abs(mobius_T(w, j)) - abs(mobius_T(w, k))))


# ---------------------------------------------------------------------------
# per-theorem residuals


def _residual_five_points_collinear(sample: Sequence[complex]) -> float:
    a, b = sample
    cfg = build_config(a, b)
    k, s, t, u, v = five_points_euclid(cfg, path="synthetic")
    return collinearity_residual([0j, k, s, t, u, v, hyperbolic_midpoint(a, b)])


def _residual_explicit_formulas(sample: Sequence[complex]) -> float:
    a, b = sample
    cfg = build_config(a, b)
    syn = five_points_euclid(cfg, path="synthetic")
    closed = five_points_euclid(cfg, path="closed_form")
    return max(abs(x - y) / scale_of(x, y) for x, y in zip(syn, closed))


def _residual_five_points_chordal(sample: Sequence[complex]) -> float:
    a, b = sample
    cfg = build_config(a, b)
    via_gcis = five_points_chordal(cfg, path="gcis")
    via_quad = five_points_chordal(cfg, path="quadratic")
    agreement = max(abs(x - y) / scale_of(x, y)
                    for x, y in zip(via_gcis, via_quad))
    return max(agreement, collinearity_residual([0j, *via_quad]))


def _residual_eleven_points(sample: Sequence[complex]) -> float:
    a, b = sample
    return eleven_points(a, b)[1]


def _residual_pq_collinear(sample: Sequence[complex]) -> float:
    a, b = sample
    cfg = build_config(a, b)
    closed = pq_family(cfg, path="closed_form")
    syn = pq_family(cfg, path="synthetic")
    agreement = max(abs(x - y) / scale_of(x, y) for x, y in zip(closed, syn))
    return max(agreement, collinearity_residual([0j, *closed]))


def _residual_lens_lemma(sample: Sequence[complex]) -> float:
    a, b = sample
    return abs(hyperbolic_midpoint(a, b).imag)


def _residual_midpoint_constructions(sample: Sequence[complex]) -> float:
    a, b = sample
    m = hyperbolic_midpoint(a, b)
    residuals = [
        abs(midpoint_via_lens(a, b) - m),
        abs(midpoint_via_inversion(a, b) - m),
        abs(rho(a, m) - rho(b, m)),
        abs(rho(a, m) + rho(m, b) - rho(a, b)),
    ]
    return max(residuals)


def _residual_midpoint_oracle(sample: Sequence[complex]) -> float:
    a, b = sample
    return abs(midpoint_oracle(a, b) - hyperbolic_midpoint(a, b))


def _altitude_residual(h: complex, p1: complex, p2: complex, p3: complex
                       ) -> float:
    """Max residual of h lying on the three altitudes of triangle p1 p2 p3."""
    worst = 0.0
    for apex, u, v in ((p1, p2, p3), (p2, p1, p3), (p3, p1, p2)):
        side = v - u
        r = abs(((h - apex) * side.conjugate()).real) \
            / max(1.0, abs(side) * scale_of(h, apex))
        worst = max(worst, r)
    return worst


def _residual_orthocenter_w2(sample: Sequence) -> float:
    a, b, c, d = sample[:4]
    w1 = line_intersection(a, b, c, d)
    w2 = line_intersection(a, c, b, d)
    w3 = line_intersection(a, d, b, c)
    direct = abs(orthocenter(0j, w1, w3) - w2) / scale_of(w1, w2, w3)
    return max(direct, _altitude_residual(w2, 0j, w1, w3))


def _residual_w_in_disk(sample: Sequence) -> float:
    a, b, c, d = sample[:4]
    w = geodesic_intersection_on_circle(a, b, c, d)
    eps = 1e-6   # geodesic construction needs interior points
    g1 = hyperbolic_line(a * (1 - eps), c * (1 - eps))
    g2 = hyperbolic_line(b * (1 - eps), d * (1 - eps))
    return max(g1.carrier.residual(w), g2.carrier.residual(w))


def _residual_chord_geodesic_collinear(sample: Sequence) -> float:
    a, b, c, d = sample[:4]
    f, m = chord_vs_geodesic_midpoint(a, b, c, d)
    return collinearity_residual([0j, f, m])


def _residual_midpoint_origin_f(sample: Sequence) -> float:
    a, b, c, d = sample[:4]
    f, m = chord_vs_geodesic_midpoint(a, b, c, d)
    if abs(f) >= 1:
        raise PointOutsideDisk("chord intersection outside the disk")
    return abs(m - hyperbolic_midpoint(0j, f))


def _residual_chordal_midpoint(sample: Sequence[complex]) -> float:
    a, b = sample
    m = chordal_midpoint(a, b)
    residuals = [abs(chordal_distance(a, m) - chordal_distance(b, m))]
    pa, pb, pm = to_sphere(a), to_sphere(b), to_sphere(m)
    # coplanarity of the three sphere points with the sphere center
    va = np.array([pa.xi, pa.eta, pa.zeta - 0.5])
    vb = np.array([pb.xi, pb.eta, pb.zeta - 0.5])
    vm = np.array([pm.xi, pm.eta, pm.zeta - 0.5])
    residuals.append(abs(float(np.dot(np.cross(va, vb), vm))))
    residuals.append(great_circle_projection(a, b).residual(m))
    circ = orthogonal_great_circle(a, b)
    residuals.append(abs(abs(m - circ.center) - circ.radius))
    first = great_circle_projection(a, b).circle
    if first is not None:
        # right-angle meeting: |c1 - c2|^2 = r1^2 + r2^2
        d2 = abs(first.center - circ.center) ** 2
        residuals.append(abs(d2 - first.radius ** 2 - circ.radius ** 2)
                         / max(1.0, d2))
    return max(residuals)


def _residual_conjecture(sample: Sequence) -> float:
    a, b, c, d, tpos = sample
    h = b + (0.05 + 0.9 * tpos) * (c - b)
    return conjecture_check(a, b, c, d, h)


@dataclass(frozen=True)
class _Check:
    sampler: str
    default_tol: float
    fn: Callable
    assertive: bool = True


CHECKS: dict[str, _Check] = {
    "five_points_collinear": _Check("disk_pair", 1e-8, _residual_five_points_collinear),
    "explicit_formulas": _Check("disk_pair", 1e-9, _residual_explicit_formulas),
    "five_points_chordal": _Check("disk_pair", 1e-8, _residual_five_points_chordal),
    "eleven_points": _Check("disk_pair", 1e-8, _residual_eleven_points),
    "pq_collinear": _Check("disk_pair", 1e-8, _residual_pq_collinear),
    "lens_lemma": _Check("lens_pair", 1e-9, _residual_lens_lemma),
    "midpoint_constructions": _Check("disk_pair", 1e-9, _residual_midpoint_constructions),
    "midpoint_oracle": _Check("disk_pair", 1e-9, _residual_midpoint_oracle),
    "orthocenter_w2": _Check("circle_quadruple", 1e-8, _residual_orthocenter_w2),
    "w_in_disk": _Check("circle_quadruple", 1e-9, _residual_w_in_disk),
    "chord_geodesic_collinear": _Check("circle_quadruple", 1e-9,
                                       _residual_chord_geodesic_collinear),
    "midpoint_origin_f": _Check("circle_quadruple", 1e-9, _residual_midpoint_origin_f),
    "chordal_midpoint": _Check("disk_pair", 1e-9, _residual_chordal_midpoint),
    "conjecture": _Check("circle_quadruple", 1e-9, _residual_conjecture,
                         assertive=False),
}

# checks whose formulas need a |a| != |b| separation to stay well-conditioned
_NEEDS_MODULI_MARGIN = {"midpoint_constructions", "chordal_midpoint"}


def default_spec(theorem_id: str, count: int, seed: int) -> SampleSpec:
    """SampleSpec preset matching the check's sampler requirements."""
    check = CHECKS.get(theorem_id)
    if check is None:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    margin = 0.02 if theorem_id in _NEEDS_MODULI_MARGIN else 0.0
    return SampleSpec(sampler=check.sampler, count=count, seed=seed,
                      moduli_margin=margin)


def _flatten_input(sample: Sequence) -> list[list[float]]:
    out = []
    for item in sample:
        z = complex(item)
        out.append([z.real, z.imag])
    return out


def run_check(theorem_id: str, spec: SampleSpec,
              tol: float | None = None) -> VerificationReport:
    """Run one randomized check and aggregate residual statistics."""
    check = CHECKS.get(theorem_id)
    if check is None:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    if spec.sampler != check.sampler:
        raise SamplerMismatch(
            f"{theorem_id} requires sampler {check.sampler!r}, got {spec.sampler!r}")
    if tol is None:
        tol = check.default_tol
    sampler = SAMPLERS[spec.sampler]
    start = time.perf_counter()
    max_res, sum_res = 0.0, 0.0
    worst: Sequence = ()
    evaluated = skipped = 0
    for i in range(spec.count):
        sample = sampler(spec, i)
        try:
            r = check.fn(sample)
        except GeometryError:
            skipped += 1
            continue
        evaluated += 1
        sum_res += r
        if r >= max_res:
            max_res, worst = r, sample
    if evaluated < 0.9 * spec.count:
        raise SamplerStarvation(
            f"only {evaluated}/{spec.count} samples survived for {theorem_id}")
    return VerificationReport(
        theorem_id=theorem_id,
        sampler=spec.sampler,
        requested=spec.count,
        evaluated=evaluated,
        skipped=skipped,
        seed=spec.seed,
        tolerance=tol,
        max_residual=max_res,
        mean_residual=sum_res / evaluated,
        worst_input=_flatten_input(worst),
        passed=(max_res <= tol) or not check.assertive,
        assertive=check.assertive,
        wall_time_s=time.perf_counter() - start,
    )


def run_all(count: int, seed: int, tol: float | None = None
            ) -> list[VerificationReport]:
    """Run every registered check with its preset sampler."""
    return [run_check(tid, default_spec(tid, count, seed), tol)
            for tid in CHECKS]
