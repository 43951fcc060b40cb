"""Subordination checks on concrete functions, by image containment.

sqrt(1+z) is univalent on the disk, so p is subordinate to it exactly when
p(0) = 1 and the image p(D) stays inside the lemniscate interior; the same
containment criterion applies to every catalogued target h(D).  Images are
probed on circles |z| = rho for rho near 1, with the truncation order raised
until the coefficient tail at the largest radius is negligible.

The falsification entry point is :func:`verify_implication`: build the lemma's
differential expression for a concrete p by exact series arithmetic (never
finite differences), probe it against the lemma's target, probe p against the
lemniscate, and classify the outcome.  For admissible coefficients the
combination "hypothesis holds, conclusion fails" can never legitimately
occur; reporting it would falsify the machinery, which is the point of the
randomized suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .catalog import (DerivOverP, FirstOrderPlus, LemmaSpec, OnePlus,
                      SecondOrderSum, SecondOrderSquareSum, SecondOrderWeighted,
                      SquarePlus, SquareRational, get_lemma)
from .geometry import DELTA, Region
from .series import NormalizationError, TruncatedSeries


@dataclass(frozen=True)
class ProbeSpec:
    radial_levels: tuple = (0.9, 0.99, 0.999)
    angular_points: int = 4096
    tail_tol: float = 1e-8
    start_order: int = 64
    max_order: int = 2048

    def __post_init__(self):
        if not all(0.0 < r < 1.0 for r in self.radial_levels):
            raise ValueError("radial levels must lie in (0, 1)")
        if self.angular_points < 8:
            raise ValueError("need at least 8 angular points")


@dataclass(frozen=True)
class ImageProbe:
    radial_levels: tuple
    angular_points: int
    max_margin: float
    worst_point: tuple  # (z, w) at the largest margin

    @property
    def contained(self) -> bool:
        return self.max_margin < 0.0


@dataclass(frozen=True)
class ImplicationReport:
    lemma_id: str
    beta: Optional[complex]
    gamma: Optional[float]
    class_ok: bool
    hypothesis_holds: bool
    conclusion_holds: bool
    status: str  # 'confirmed' | 'vacuous' | 'COUNTEREXAMPLE'
    work_order: int
    tail_ok: bool
    hypothesis_probe: ImageProbe
    conclusion_probe: ImageProbe


def image_in_region(p, region: Region, spec: ProbeSpec = ProbeSpec()) -> ImageProbe:
    """Probe the image of the disk under p against the region.

    p is a TruncatedSeries (treated as an exact polynomial) or any callable
    accepting complex arrays.  p(0) must sit at the region's anchor value.
    """
    if isinstance(p, TruncatedSeries):
        at_zero = complex(p.coeffs[0])
        values_at = lambda rho, k: p.values_on_circle(rho, k)
    else:
        at_zero = complex(p(np.array(0.0 + 0.0j)))
        values_at = lambda rho, k: p(rho * np.exp(2j * np.pi * np.arange(k) / k))
    if abs(at_zero - region.anchor) > 1e-9:
        raise NormalizationError(
            f"p(0) = {at_zero:g} does not match the region anchor {region.anchor:g}")

    worst = (0.0 + 0.0j, at_zero)
    worst_margin = -np.inf
    k = spec.angular_points
    for rho in spec.radial_levels:
        w = values_at(rho, k)
        margins = np.asarray(region.margin(w))
        idx = int(np.argmax(margins))
        if margins[idx] > worst_margin:
            worst_margin = float(margins[idx])
            z = rho * np.exp(2j * np.pi * idx / k)
            worst = (complex(z), complex(w[idx]))
    return ImageProbe(tuple(spec.radial_levels), k, worst_margin, worst)


def _jet(p: TruncatedSeries):
    a = p
    b = p.derivative().shift_up()        # z p'
    c = p.derivative().derivative().shift_up().shift_up()  # z^2 p''
    return a, b, c


def hypothesis_series(lemma: LemmaSpec | str, p: TruncatedSeries,
                      beta=None, gamma=None) -> TruncatedSeries:
    """The lemma's differential expression psi(p, zp', z^2 p'') as a series."""
    if isinstance(lemma, str):
        lemma = get_lemma(lemma)
    form = lemma.make_form(beta, gamma)
    a, b, c = _jet(p)
    if isinstance(form, FirstOrderPlus):
        q = b
        for _ in range(form.n):
            q = q / a
        return a + q.scale(form.beta)
    if isinstance(form, SquarePlus):
        if form.n == -1:
            return a * a + (a * b).scale(form.beta)
        q = b
        for _ in range(form.n):
            q = q / a
        return a * a + q.scale(form.beta)
    if isinstance(form, SquareRational):
        return a * a + b / (a.scale(form.beta) + form.gamma)
    if isinstance(form, OnePlus):
        q = b
        for _ in range(form.n):
            q = q / a
        return TruncatedSeries.constant(1.0, q.order) + q.scale(form.beta)
    if isinstance(form, DerivOverP):
        return b / a
    if isinstance(form, SecondOrderSum):
        return b + c
    if isinstance(form, SecondOrderSquareSum):
        return a * a + b + c
    if isinstance(form, SecondOrderWeighted):
        return b.scale(form.gamma) + c.scale(form.beta)
    raise TypeError(f"unhandled form {form!r}")


def verify_implication(lemma_id: str, p: TruncatedSeries, beta=None, gamma=None,
                       spec: ProbeSpec = ProbeSpec()) -> ImplicationReport:
    """Probe one hypothesis/conclusion pair on a concrete p with p(0) = 1.

    Statuses: 'confirmed' (both hold), 'vacuous' (hypothesis fails, including
    a p outside the lemma's coefficient class), 'COUNTEREXAMPLE' (hypothesis
    holds, conclusion fails).  p is treated as an exact polynomial; the
    internal working order is doubled until the tail of the hypothesis series
    at the outermost probe radius drops below the probe tolerance.
    """
    lemma = get_lemma(lemma_id)
    if abs(complex(p.coeffs[0]) - 1.0) > 1e-9:
        raise NormalizationError("p(0) must equal 1")
    low = p.coeffs[1:lemma.n_class]
    class_ok = bool(low.size == 0 or np.max(np.abs(low)) <= 1e-13)

    rho_max = max(spec.radial_levels)
    work = max(spec.start_order, p.order)
    while True:
        hyp = hypothesis_series(lemma, p.pad_to(work), beta, gamma)
        tail = hyp.tail_estimate(rho_max)
        if tail <= spec.tail_tol or work >= spec.max_order:
            break
        work = min(2 * work, spec.max_order)
    tail_ok = tail <= spec.tail_tol

    hyp_probe = image_in_region(hyp, lemma.region, spec)
    concl_probe = image_in_region(p, DELTA, spec)
    hypothesis_holds = class_ok and hyp_probe.contained
    conclusion_holds = concl_probe.contained
    if not hypothesis_holds:
        status = "vacuous"
    elif conclusion_holds:
        status = "confirmed"
    else:
        status = "COUNTEREXAMPLE"
    return ImplicationReport(
        lemma_id=lemma_id,
        beta=beta,
        gamma=gamma,
        class_ok=class_ok,
        hypothesis_holds=hypothesis_holds,
        conclusion_holds=conclusion_holds,
        status=status,
        work_order=work,
        tail_ok=tail_ok,
        hypothesis_probe=hyp_probe,
        conclusion_probe=concl_probe,
    )


def sharpness_probe_example2(delta: float) -> float:
    """Re(z p'(z)/p(z)) for p = sqrt(1+z) at z = 1 - delta, exactly z/(2(1+z)).

    Approaches the half-plane bound 1/4 from below as delta -> 0 (defect
    delta/8 + O(delta^2)), which is what makes the bound unimprovable.
    """
    if not (0.0 < delta <= 1.0):
        raise ValueError("delta must lie in (0, 1]")
    z = 1.0 - delta
    return float(np.real(z / (2.0 * (1.0 + z))))


def random_normalized_p(order: int, seed: int, n_class: int = 1) -> TruncatedSeries:
    """Random polynomial p with p(0) = 1 and |a_k| <= 0.5/k^2.

    The decay keeps images within evaluable range (|p - 1| < 0.5 * pi^2/6)
    and in particular keeps p zero-free on the closed disk.  Coefficients
    below index ``n_class`` are zero, so p lies in the 1 + a_n z^n + ... class.
    """
    rng = np.random.default_rng(seed)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    for k in range(max(1, n_class), order + 1):
        mag = 0.5 / k**2 * rng.uniform(0.0, 1.0)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        c[k] = mag * np.exp(1j * phase)
    return TruncatedSeries(c)


def random_normalized_f(order: int, seed: int) -> TruncatedSeries:
    """Random polynomial f with f(0) = 0, f'(0) = 1 and |a_k| <= 0.5/k^2."""
    rng = np.random.default_rng(seed)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    for k in range(2, order + 1):
        mag = 0.5 / k**2 * rng.uniform(0.0, 1.0)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        c[k] = mag * np.exp(1j * phase)
    return TruncatedSeries(c)
