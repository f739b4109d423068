"""Randomised checks of spectral containment, equality and the exponent identity."""

from dataclasses import dataclass, field

import numpy as np

from .algebra import random_element, spectrum
from .linalg import NumericFailure, directed_distance, float_eigenvalues, hausdorff
from .mapbuilder import SMABlockReader, evaluate_map, target_blocks
from .sma import condensation, sample_diag_conj
from .wedderburn import wedderburn_profile

DEFAULT_TOL = 1e-8
DEFAULT_SAMPLES = 500


@dataclass
class VerificationReport:
    samples: int
    violations: list = field(default_factory=list)  # (sample seed, offending eigenvalue, distance)
    max_defect: float = 0.0
    check: str = ""

    @property
    def verdict(self):
        return "pass" if not self.violations else "fail"

    def to_json(self):
        return {
            "check": self.check,
            "samples": self.samples,
            "verdict": self.verdict,
            "max_defect": self.max_defect,
            "violations": [
                {"seed": s, "eigenvalue": [z.real, z.imag], "distance": d}
                for s, z, d in sorted(self.violations, key=lambda v: v[0])
            ],
        }


def sample_seed(seed, t):
    return seed * 1_000_003 + t


def samples(A, N, seed):
    """Seeded elements of ``A``; for SMAs every other sample is a diagonalizable conjugate."""
    rho = getattr(A, "quasi_order", None)
    for t in range(N):
        s = sample_seed(seed, t)
        if rho is not None and t % 2 == 1:
            a, _, _ = sample_diag_conj(rho, s, A)
        else:
            a = random_element(A, s)
        yield s, a


def _image_spectrum(M, tol):
    _, distinct = float_eigenvalues(M, tol)
    return distinct


def _sources_match(A, spec):
    if A.dim != spec.source.dim:
        raise ValueError(f"map expects a source of dimension {spec.source.dim}, algebra has {A.dim}")
    if isinstance(spec.source, SMABlockReader) and getattr(A, "quasi_order", None) is None:
        raise ValueError("map reads SMA blocks but the algebra carries no quasi-order")


def check_shrinking(A, spec, N=DEFAULT_SAMPLES, tol=DEFAULT_TOL, seed=0):
    """Every eigenvalue of the image lies within ``tol`` of the source spectrum."""
    _sources_match(A, spec)
    rep = VerificationReport(N, check="shrinking")
    for s, a in samples(A, N, seed):
        src = spectrum(a, tol * 0.1)
        img = _image_spectrum(evaluate_map(spec, a), tol * 0.1)
        for z in img:
            d = float(np.min(np.abs(src - z)))
            rep.max_defect = max(rep.max_defect, d)
            if d > tol:
                rep.violations.append((s, complex(z), d))
    return rep


def check_preserving(A, spec, N=DEFAULT_SAMPLES, tol=DEFAULT_TOL, seed=0):
    """Source and image spectra agree to Hausdorff distance ``tol``."""
    _sources_match(A, spec)
    rep = VerificationReport(N, check="preserving")
    for s, a in samples(A, N, seed):
        src = spectrum(a, tol * 0.1)
        img = _image_spectrum(evaluate_map(spec, a), tol * 0.1)
        rep.max_defect = max(rep.max_defect, hausdorff(src, img))
        for z in img:
            d = float(np.min(np.abs(src - z)))
            if d > tol:
                rep.violations.append((s, complex(z), d))
        for z in src:
            d = float(np.min(np.abs(img - z))) if img.size else float("inf")
            if d > tol:
                rep.violations.append((s, complex(z), d))
    return rep


def check_multiplicative(A, spec, N=100, tol=DEFAULT_TOL, seed=0):
    """``phi(ab) = phi(a) phi(b)`` on random pairs, relative to the factor norms."""
    _sources_match(A, spec)
    rep = VerificationReport(N, check="multiplicative")
    for t in range(N):
        s = sample_seed(seed, t)
        a = random_element(A, s)
        b = random_element(A, s + 500_000)
        Pa, Pb, Pab = evaluate_map(spec, a), evaluate_map(spec, b), evaluate_map(spec, a * b)
        scale = 1.0 + np.linalg.norm(Pa) * np.linalg.norm(Pb)
        d = float(np.max(np.abs(Pab - Pa @ Pb))) / scale if Pab.size else 0.0
        rep.max_defect = max(rep.max_defect, d)
        if d > tol:
            rep.violations.append((s, complex(0.0), d))
    return rep


def check_quotient_lemma(A, N=100, tol=DEFAULT_TOL, seed=0, profile=None):
    """Spectra in ``A`` and in ``A/rad(A)`` coincide on random elements."""
    if profile is None:
        profile = wedderburn_profile(A, seed)
    Q = profile.qmap
    rep = VerificationReport(N, check="quotient_lemma")
    for s, a in samples(A, N, seed):
        sa = spectrum(a, tol * 0.1)
        sq = spectrum(Q(a), tol * 0.1)
        d = hausdorff(sa, sq)
        rep.max_defect = max(rep.max_defect, d)
        if d > tol:
            worst = max(list(sa) + list(sq), key=lambda z: max(directed_distance([z], sa), directed_distance([z], sq)))
            rep.violations.append((s, complex(worst), d))
    return rep


@dataclass
class ExponentProfile:
    """Multiplicities ``l_r(j)`` of each probe eigenvalue in each target block.

    ``exponents[j][r]`` refers to the original index ``r`` of the quasi-order.
    """

    exponents: list
    trials: int
    trial_invariant: bool
    class_constant: bool
    matches_family: bool
    violations: list = field(default_factory=list)

    def to_json(self):
        return {
            "exponents": [list(e) for e in self.exponents],
            "trials": self.trials,
            "trial_invariant": self.trial_invariant,
            "class_constant": self.class_constant,
            "matches_family": self.matches_family,
            "violations": self.violations,
        }


def exponent_multiplicities(M, diag, guard=0.25):
    """Multiplicity of each ``diag`` value as an eigenvalue of ``M``.

    Eigenvalues are clustered onto the nearest probe value; one lying farther
    than ``guard`` times the probe separation from every probe is a numeric
    failure.
    """
    eigs = np.linalg.eigvals(M) if M.size else np.zeros(0, dtype=complex)
    diag = np.asarray(diag, dtype=complex)
    if diag.size > 1:
        gaps = np.abs(diag[:, None] - diag[None, :])
        np.fill_diagonal(gaps, np.inf)
        sep = float(gaps.min())
    else:
        sep = 1.0
    counts = [0] * diag.size
    for z in eigs:
        d = np.abs(diag - z)
        r = int(np.argmin(d))
        if d[r] > guard * sep:
            raise NumericFailure(f"eigenvalue {z:.4g} is not near any probe value")
        counts[r] += 1
    return tuple(counts)


def exponent_profile(rho, spec, trials=20, seed=0, A=None):
    """Exponents of ``char(phi_j(S diag(lam) S^{-1}))`` over random ``S`` and separated ``lam``."""
    from .sma import sma_algebra

    if A is None:
        A = sma_algebra(rho)
    cond = condensation(rho)
    per_trial = []
    for t in range(trials):
        X, _, D = sample_diag_conj(rho, sample_seed(seed, t), A)
        blocks = target_blocks(spec, evaluate_map(spec, X))
        per_trial.append([exponent_multiplicities(B, D) for B in blocks])
    first = per_trial[0]
    violations = []
    invariant = all(pt == first for pt in per_trial)
    if not invariant:
        violations.append("exponents differ between trials")
    class_constant = True
    matches = True
    for j, ell in enumerate(first):
        for b in range(len(cond.block_sizes)):
            vals = {ell[r] for r in range(rho.n) if cond.class_of[r] == b}
            if len(vals) != 1:
                class_constant = False
                violations.append(f"block {j}: exponents vary inside class {b}")
            elif vals.pop() != spec.family[j][b]:
                matches = False
                violations.append(f"block {j}: class {b} exponent differs from the family count")
    return ExponentProfile([list(e) for e in first], trials, invariant, class_constant, matches, violations)
