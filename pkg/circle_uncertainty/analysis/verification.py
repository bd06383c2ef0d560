"""Invariant suite over a seeded random-state corpus and the named states"""
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from ..constants import CHAIN_SLACK, DEFAULT_SATURATION_TOL, REPRODUCER_FILE_NAME
from ..errors import CircleUncertaintyError
from ..special import bessel_ratio
from ..states import (
    CircleState, VonMisesParams, cat_state, intelligent_residual, l_eigenstate, minimal_grid_size, random_state,
    rotate, von_mises, x_extremal_state
)
from ..utils.logging import log_info, log_warning
from .bounds import component_relations, frame_vector, full_report, u2_alpha_sweep, u2_closed_form, v2_bound
from .ladder import commutator_residual, pq_bounds, similarity_residual
from .moments import (
    central_moment_identity, covariance, dispersion_l, mean_norm_identity_gap, moments_from_coeffs,
    quadrature_oracle
)

CATALOG_KAPPAS = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
CATALOG_LAMBDAS = (0, 1, 3)
CATALOG_ALPHAS = (0.0, 1.1)
COMPONENT_ANGLES = 2.0 * np.pi * np.arange(64) / 64


@dataclass
class CheckTally:
    passed: int = 0
    total: int = 0


@dataclass
class VerificationSummary:
    """Pass counts per check; rendering is deterministic for a fixed seed"""
    corpus_size: int
    seed: int
    checks: dict = field(default_factory=dict)
    first_failure: Optional[str] = None
    reproducer: Optional[Path] = None
    
    @property
    def all_passed(self) -> bool:
        return all(t.passed == t.total for t in self.checks.values())
    
    def record(self, name: str, ok: bool):
        tally = self.checks.setdefault(name, CheckTally())
        tally.total += 1
        tally.passed += int(ok)
    
    def render(self) -> str:
        width = max(len(name) for name in self.checks) if self.checks else 0
        lines = [f"verify corpus={self.corpus_size} seed={self.seed}"]
        for name, tally in self.checks.items():
            status = 'ok' if tally.passed == tally.total else 'FAIL'
            lines.append(f"  {name.ljust(width)}  {tally.passed}/{tally.total}  {status}")
        if self.first_failure:
            lines.append(f"first failure: {self.first_failure}")
        if self.reproducer:
            lines.append(f"reproducer: {self.reproducer}")
        lines.append('PASS' if self.all_passed else 'FAIL')
        return '\n'.join(lines) + '\n'


def _oracle_agrees(state: CircleState) -> bool:
    coeff_path = moments_from_coeffs(state)
    grid_path = quadrature_oracle(state, minimal_grid_size(state, oversampling=4))
    return (abs(coeff_path.e1 - grid_path.e1) <= 1e-10 and abs(coeff_path.e2 - grid_path.e2) <= 1e-10
            and abs(coeff_path.l1 - grid_path.l1) <= 1e-10 and abs(coeff_path.l2 - grid_path.l2) <= 1e-10)


def _rotation_invariant(state: CircleState, phi_prime: float) -> bool:
    before, after = full_report(state), full_report(rotate(state, phi_prime))
    return all(abs(getattr(before, name) - getattr(after, name)) <= 1e-9 for name in ('u2', 'v2', 'var_e', 'var_l'))


def _closed_matches_sweep(state: CircleState) -> bool:
    m = moments_from_coeffs(state)
    closed = u2_closed_form(covariance(m), frame_vector(m))
    swept, _ = u2_alpha_sweep(state)
    return abs(closed - swept) <= 1e-8


def corpus_checks(phi_prime: float) -> dict[str, Callable[[CircleState], bool]]:
    """Checks applied to every normalised corpus state"""
    return {
        'oracle_equivalence': _oracle_agrees,
        'mean_norm_identity': lambda s: abs(mean_norm_identity_gap(moments_from_coeffs(s))) <= 1e-10,
        'central_moment_identity': lambda s: abs(central_moment_identity(moments_from_coeffs(s)).central_gap) <= 1e-10,
        'ordering_chain': lambda s: full_report(s).sat_ordering_chain,
        'closed_form_vs_sweep': _closed_matches_sweep,
        'rotation_invariance': lambda s: _rotation_invariant(s, phi_prime),
        'component_relations': lambda s: component_relations(s, COMPONENT_ANGLES).min_slack() >= -CHAIN_SLACK,
        'ladder_commutator': lambda s: commutator_residual(s) <= 1e-10,
        'ladder_similarity': lambda s: similarity_residual(s) <= 1e-10,
        'ladder_chain': lambda s: pq_bounds(s).chain_ok,
    }


def _von_mises_saturates(state: CircleState, tol: float) -> bool:
    m = moments_from_coeffs(state)
    gamma = covariance(m)
    var_l = dispersion_l(m)
    u2 = u2_closed_form(gamma, frame_vector(m))
    return var_l - u2 <= tol * max(1.0, var_l) and abs(u2 - v2_bound(gamma)) <= tol


def _von_mises_bessel_moments(state: CircleState, p: VonMisesParams) -> bool:
    m = moments_from_coeffs(state)
    phase = np.exp(1j * p.alpha)
    r1, r2 = bessel_ratio(1, 2.0 * p.kappa), bessel_ratio(2, 2.0 * p.kappa)
    return abs(m.e1 - r1 * phase) <= 1e-9 and abs(m.e2 - r2 * phase * phase) <= 1e-9


def _rotation_changes_frame_variance(state: CircleState) -> bool:
    """Witness that (dS)^2 is frame dependent while U^2 is not"""
    before = covariance(moments_from_coeffs(state))
    after = covariance(moments_from_coeffs(rotate(state, 0.5 * np.pi)))
    return abs(before.var_s - after.var_s) > 1e-3


def _x_extremal_bounded(state: CircleState) -> bool:
    bounds = pq_bounds(state)
    return bounds.saturation_gap >= -CHAIN_SLACK * max(1.0, bounds.var_l)


def _chain_ok(state: CircleState) -> bool:
    return full_report(state).sat_ordering_chain


CatalogCheck = tuple[str, str, Callable[[], CircleState], Callable[[CircleState], bool]]


def catalog_checks(tol: float = DEFAULT_SATURATION_TOL) -> list[CatalogCheck]:
    """(check name, state label, state builder, check) for the named states; equal labels build equal states"""
    checks = []
    for kappa in CATALOG_KAPPAS:
        for lam in CATALOG_LAMBDAS:
            for alpha in CATALOG_ALPHAS:
                p = VonMisesParams(kappa, lam, alpha)
                label = f"von-mises:k={kappa},l={lam},a={alpha}"
                build = partial(von_mises, p)
                checks.append(('von_mises_saturation', label, build, lambda s: _von_mises_saturates(s, tol)))
                checks.append(('intelligent_residual', label, build,
                               lambda s, p=p: intelligent_residual(s, p.kappa, p.lam, p.alpha) <= 1e-8))
                checks.append(('von_mises_bessel_moments', label, build,
                               lambda s, p=p: _von_mises_bessel_moments(s, p)))
        checks.append(('catalog_chain', f"cat:k={kappa}", lambda k=kappa: cat_state(k), _chain_ok))
        checks.append(('x_extremal_bound', f"x-extremal:k={kappa}",
                       lambda k=kappa: x_extremal_state(VonMisesParams(k)), _x_extremal_bounded))
    for l in (-3, 0, 5):
        checks.append(('catalog_chain', f"l-eigenstate:{l}", lambda l=l: l_eigenstate(l), _chain_ok))
    checks.append(('rotation_witness', 'von-mises:k=1', lambda: von_mises(VonMisesParams(1.0)),
                   _rotation_changes_frame_variance))
    return checks


def _safe(check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except CircleUncertaintyError as e:
        log_warning(f"Check raised {type(e).__name__}: {e}")
        return False


def _cached_build(built: dict, label: str, build: Callable[[], CircleState]) -> Optional[CircleState]:
    if label not in built:
        try:
            built[label] = build()
        except CircleUncertaintyError as e:
            log_warning(f"Building {label} raised {type(e).__name__}: {e}")
            built[label] = None
    return built[label]


def build_corpus(corpus_size: int, seed: int, inject_denormalized: bool = False) -> tuple[list[CircleState], float]:
    """Seeded random states on l in [-16, 16] and one rotation angle"""
    rng = np.random.default_rng(seed)
    corpus = [random_state(rng) for _ in range(corpus_size)]
    phi_prime = float(rng.uniform(0.0, 2.0 * np.pi))
    if inject_denormalized:
        first = corpus[0]
        corpus[0] = CircleState.from_coefficients(first.l_min, first.coeffs * 1.01, strict=False)
    return corpus, phi_prime


def run_verification(corpus_size: int, seed: int, tol: float = DEFAULT_SATURATION_TOL,
                     inject_denormalized: bool = False, dump_dir=None) -> VerificationSummary:
    """
    Run every invariant check and collect pass counts.
    
    Args:
        corpus_size: Number of random states, at least 1
        seed: Seed of the corpus generator
        tol: Saturation tolerance for the von Mises checks
        inject_denormalized: Replace the first corpus state by a denormalised copy
        dump_dir: Directory for the reproducer of the first failing state
    """
    from ..storage.state_file import write_state
    
    if corpus_size < 1:
        raise ValueError(f"corpus_size must be at least 1, got {corpus_size}")
    summary = VerificationSummary(corpus_size, seed)
    corpus, phi_prime = build_corpus(corpus_size, seed, inject_denormalized)
    checks = corpus_checks(phi_prime)
    
    for index, state in enumerate(corpus):
        failed = []
        normalized = state.is_normalized()
        summary.record('normalization', normalized)
        if not normalized:
            failed.append('normalization')
        else:
            for name, check in checks.items():
                ok = _safe(lambda: check(state))
                summary.record(name, ok)
                if not ok:
                    failed.append(name)
        if failed and summary.first_failure is None:
            summary.first_failure = f"corpus state {index}: {', '.join(failed)}"
            summary.reproducer = write_state(state, Path(dump_dir or '.') / REPRODUCER_FILE_NAME)
            log_warning(f"Verification failure on corpus state {index}: {', '.join(failed)}")
    
    built = {}
    for name, label, build, check in catalog_checks(tol):
        state = _cached_build(built, label, build)
        ok = state is not None and _safe(lambda: check(state))
        summary.record(name, ok)
        if not ok and summary.first_failure is None:
            summary.first_failure = f"{label}: {name}"
            if state is not None:
                summary.reproducer = write_state(state, Path(dump_dir or '.') / REPRODUCER_FILE_NAME)
            log_warning(f"Verification failure on {label}: {name}")
    
    log_info(f"Verification seed={seed} corpus={corpus_size}: {'PASS' if summary.all_passed else 'FAIL'}")
    return summary
