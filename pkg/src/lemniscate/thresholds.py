"""Bisection recovery of the catalogued coefficient bounds.

The solver brackets, for each thresholded lemma, the smallest coefficient at
which the lemma's own sufficiency certificate holds: the scan verdict is
admissible *and* the per-theta objective profile attains its global minimum
on the center line theta = 0.  The second condition matters: three of the
catalogued bounds (first3, first4, sq2) mark where the objective minimum
migrates to theta = 0, not where raw admissibility first holds — below them
the functional can remain admissible while the minimum sits off-center, and
raw admissibility alone would bracket a smaller, uncatalogued constant.  For
the remaining lemmas the two conditions coincide and the certificate bracket
equals the plain admissibility transition.

The verdict is boolean and the objective is not smooth where the minimizing
theta switches branches, so bisection is used rather than gradient steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .admissibility import GridSpec, scan_profile
from .catalog import LemmaSpec, UnknownLemmaError, get_lemma

DEFAULT_SEARCH = (0.05, 6.0)
DEFAULT_TOL = 1e-4
_CENTER_TOL = 1e-12


class BracketError(RuntimeError):
    """The search interval does not straddle a certificate transition."""


class MonotonicityError(RuntimeError):
    """Certificate flips more than once across the sampled search interval."""


@dataclass(frozen=True)
class ThresholdResult:
    lemma_id: str
    beta_low: float
    beta_high: float
    beta_star: float
    tolerance: float
    iterations: int
    closed_form: Optional[float]


def certified_at(lemma_id: str, beta: float, gamma: Optional[float] = None,
                 grid: GridSpec = GridSpec()) -> bool:
    """True iff the scan is admissible and the objective minimum sits at theta = 0."""
    lemma = get_lemma(lemma_id)
    form = lemma.make_form(beta, gamma)
    prof = scan_profile(form, lemma.region, grid, n_class=lemma.n_class)
    admissible = float(prof.objective.min()) >= -grid.eps_adm
    return admissible and prof.min_is_centered(_CENTER_TOL)


def find_beta_threshold(lemma_id: str, search=None, tol: float = DEFAULT_TOL,
                        grid: GridSpec = GridSpec(),
                        gamma: Optional[float] = None) -> ThresholdResult:
    """Bracket the lemma's coefficient bound to within ``tol`` by bisection.

    Raises BracketError when the certificate does not change across the
    interval and MonotonicityError when an 8-point pre-scan sees it flip more
    than once (the bound is then not a single transition in the interval).
    """
    lemma = get_lemma(lemma_id)
    if lemma.unconditional:
        raise BracketError(f"{lemma_id} holds for every admissible coefficient; "
                           "there is no threshold to bracket")
    lo, hi = search if search is not None else DEFAULT_SEARCH
    if not (0.0 < lo < hi):
        raise BracketError("need 0 < lo < hi")

    samples = np.linspace(lo, hi, 8)
    flags = [certified_at(lemma_id, float(b), gamma, grid) for b in samples]
    if flags[0] or not flags[-1]:
        raise BracketError(
            f"no certificate transition in [{lo:g}, {hi:g}] for {lemma_id}")
    for prev, cur in zip(flags, flags[1:]):
        if prev and not cur:
            raise MonotonicityError(
                f"certificate is not monotone across [{lo:g}, {hi:g}] for {lemma_id}")

    # shrink to the sampled flip before bisecting
    k = flags.index(True)
    blo, bhi = float(samples[k - 1]), float(samples[k])
    iterations = 0
    while bhi - blo > tol:
        mid = 0.5 * (blo + bhi)
        if certified_at(lemma_id, mid, gamma, grid):
            bhi = mid
        else:
            blo = mid
        iterations += 1
    return ThresholdResult(
        lemma_id=lemma_id,
        beta_low=blo,
        beta_high=bhi,
        beta_star=0.5 * (blo + bhi),
        tolerance=tol,
        iterations=iterations,
        closed_form=lemma.threshold_closed,
    )


def closed_form_beta(lemma_id: str) -> float:
    """The exact catalogued bound, where a closed form exists."""
    lemma: LemmaSpec = get_lemma(lemma_id)
    if lemma.threshold_closed is None:
        raise UnknownLemmaError(f"{lemma_id} has no closed-form bound")
    return float(lemma.threshold_closed)
