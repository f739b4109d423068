"""Radical, semisimple splitting and the Wedderburn profile ``(k_1, ..., k_p)``.

The radical is the kernel of the trace form ``(x, y) -> tr L_{xy}``, which
over a field of characteristic zero is exactly the Jacobson radical.  The
semisimple quotient is split with spectral idempotents of a random central
element; all dimension counts come out of exact subspace computations or are
cross-checked against them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .algebra import Element, IdealBasis, quotient_algebra, regular_rep, right_rep
from .linalg import NumericFailure, RowSpace, kernel_of_rows
from .scalars import ZERO, GaussRational

RETRY_BUDGET = 16


class InternalConsistencyError(RuntimeError):
    """A post-condition on an exact computation failed."""


def trace_vector(A):
    """``t[k] = tr(L_{e_k})``."""
    t = [ZERO] * A.dim
    for (k, l), p in A.structure.items():
        c = p.get(l)
        if c:
            t[k] = t[k] + c
    return t


def trace_form(A):
    """Exact Gram matrix ``G[i][j] = tr(L_{e_i e_j})`` as a list of rows."""
    t = trace_vector(A)
    G = [[ZERO] * A.dim for _ in range(A.dim)]
    for (i, j), p in A.structure.items():
        s = ZERO
        for k, c in p.items():
            if t[k]:
                s = s + c * t[k]
        G[i][j] = s
    return G


def nilpotency_index(A, vectors):
    """Smallest ``s`` with ``R^s = 0`` for the span R of ``vectors`` (None if it never vanishes)."""
    if not vectors:
        return 1 if A.dim else 0
    current = list(vectors)
    for s in range(1, A.dim + 2):
        space = RowSpace(A.dim)
        nxt = []
        for r in current:
            for v in vectors:
                prod = A.mul_exact(r, v)
                if space.add(prod):
                    nxt.append(prod)
        if not nxt:
            return s + 1
        current = nxt
    return None


def radical_basis(A):
    """Exact basis of the Jacobson radical of ``A``."""
    G = trace_form(A)
    # a is in the radical iff sum_i a_i G[i][j] = 0 for every j.
    rows = [[G[i][j] for i in range(A.dim)] for j in range(A.dim)]
    vecs = kernel_of_rows(rows, A.dim)
    try:
        rad = IdealBasis(A, vecs)
    except ValueError as exc:
        raise InternalConsistencyError(f"trace-form kernel is not an ideal: {exc}") from exc
    if vecs and nilpotency_index(A, vecs) is None:
        raise InternalConsistencyError("trace-form kernel is not nilpotent")
    return rad


@dataclass
class Component:
    """One simple component ``e * Abar`` of a semisimple algebra."""

    k: int
    idempotent: object  # exact tuple or complex ndarray, coordinates in Abar
    basis: list  # vectors spanning e*Abar (exact tuples or complex ndarrays)
    exact: bool


def center_basis(A):
    """Exact basis of the center ``{z : z e_i = e_i z for all i}``."""
    n = A.dim
    rows = []
    for i in range(n):
        # coefficient of e_k in z e_i - e_i z, as a linear form in z
        forms = {}
        for l in range(n):
            for k, c in A.product_of_basis(l, i).items():
                forms.setdefault(k, {})
                forms[k][l] = forms[k].get(l, ZERO) + c
            for k, c in A.product_of_basis(i, l).items():
                forms.setdefault(k, {})
                forms[k][l] = forms[k].get(l, ZERO) - c
        for form in forms.values():
            form = {l: c for l, c in form.items() if c}
            if form:
                rows.append(form)
    return kernel_of_rows(rows, n)


def _rationalize(v, max_den=10**4):
    out = []
    for z in v:
        re = Fraction(float(z.real)).limit_denominator(max_den)
        im = Fraction(float(z.imag)).limit_denominator(max_den)
        out.append(GaussRational(re, im))
    return tuple(out)


def _exact_idempotents_ok(A, idems):
    one = A.unit
    total = tuple(ZERO for _ in range(A.dim))
    for a, e in enumerate(idems):
        if A.mul_exact(e, e) != e:
            return False
        for i in range(A.dim):
            b = A.basis_vector(i)
            if A.mul_exact(e, b) != A.mul_exact(b, e):
                return False
        for f in idems[a + 1:]:
            if any(A.mul_exact(e, f)):
                return False
        total = tuple(x + y for x, y in zip(total, e))
    return total == one


def _exact_span(A, e):
    space = RowSpace(A.dim)
    out = []
    for i in range(A.dim):
        v = A.mul_exact(e, A.basis_vector(i))
        if space.add(v):
            out.append(v)
    return out


def _float_span(A, e, tol):
    L = regular_rep(Element(A, np.asarray(e, dtype=complex), False))
    U, s, _ = np.linalg.svd(L)
    r = int(np.sum(s > tol * (1.0 + s[0])))
    return [U[:, t] for t in range(r)]


def split_semisimple(Abar, seed=0, tol=1e-8):
    """Split a semisimple algebra into simple components.

    Returns components sorted by ``k`` (stable), with primitive central
    idempotents that are exact whenever they have Gaussian-rational
    coordinates and float otherwise.
    """
    n = Abar.dim
    Z = center_basis(Abar)
    p = len(Z)
    if p == 0:
        raise InternalConsistencyError("center of a unital algebra cannot be zero")
    Zf = np.array([[complex(x) for x in z] for z in Z], dtype=complex).T  # n x p
    Zpinv = np.linalg.pinv(Zf)
    unit_c = Zpinv @ Abar.unit_float
    last = None
    for attempt in range(RETRY_BUDGET):
        rng = np.random.default_rng([seed, attempt])
        coeff = rng.normal(size=p) + 1j * rng.normal(size=p)
        z = Zf @ coeff
        Lz = regular_rep(Element(Abar, z, False))
        Mz = Zpinv @ Lz @ Zf
        mu = np.linalg.eigvals(Mz)
        scale = 1.0 + float(np.max(np.abs(mu)))
        gaps = np.abs(mu[:, None] - mu[None, :])
        np.fill_diagonal(gaps, np.inf)
        if p > 1 and float(gaps.min()) < 1e-6 * scale:
            last = "eigenvalue collision in random central element"
            continue
        idems = []
        for a in range(p):
            P = np.eye(p, dtype=complex)
            for b in range(p):
                if b != a:
                    P = P @ (Mz - mu[b] * np.eye(p)) / (mu[a] - mu[b])
            idems.append(Zf @ (P @ unit_c))
        dims = []
        ok = True
        for e in idems:
            tr = np.trace(regular_rep(Element(Abar, e, False)))
            d = int(round(tr.real))
            if abs(tr - d) > 1e-6 * n or d < 1 or isqrt(d) ** 2 != d:
                ok = False
                break
            dims.append(d)
        if not ok or sum(dims) != n:
            last = "component dimensions are not perfect squares summing to the dimension"
            continue
        exact_idems = [_rationalize(e) for e in idems]
        exact = _exact_idempotents_ok(Abar, exact_idems)
        comps = []
        for e, ee, d in zip(idems, exact_idems, dims):
            if exact:
                basis = _exact_span(Abar, ee)
                if len(basis) != d:
                    raise InternalConsistencyError("exact component dimension disagrees with its trace")
                comps.append(Component(isqrt(d), ee, basis, True))
            else:
                basis = _float_span(Abar, e, tol)
                if len(basis) != d:
                    last = "numerical rank of a component disagrees with its trace"
                    break
                comps.append(Component(isqrt(d), e, basis, False))
        else:
            comps.sort(key=lambda c: c.k)
            return comps
    raise NumericFailure(f"semisimple splitting failed after {RETRY_BUDGET} seeds: {last}")


@dataclass
class WedderburnProfile:
    """Radical, simple-component sizes and maximal ideals of an algebra."""

    algebra: object
    radical: IdealBasis
    p: int
    ks: list
    maximal_ideals: list  # IdealBasis (exact) or complex ndarray with basis columns
    component_bases: list
    quotient: object = None
    qmap: object = None
    components: list = field(default_factory=list)
    exact_ideals: bool = True

    @property
    def rad_dim(self):
        return len(self.radical)

    def to_json(self):
        return {
            "dim": self.algebra.dim,
            "rad_dim": self.rad_dim,
            "p": self.p,
            "ks": list(self.ks),
            "max_ideal_codims": [k * k for k in self.ks],
        }


def _maximal_ideal(A, qmap, comp, tol):
    # M_i = {a : e_i Q(a) = 0}, the preimage of the complementary components.
    Abar = qmap.target
    cols = [qmap.matrix.column(j) for j in range(A.dim)]
    if comp.exact:
        rows = []
        imgs = [Abar.mul_exact(comp.idempotent, c) for c in cols]
        for r in range(Abar.dim):
            rows.append([imgs[j][r] for j in range(A.dim)])
        vecs = kernel_of_rows(rows, A.dim)
        return IdealBasis(A, vecs)
    Le = regular_rep(Element(Abar, np.asarray(comp.idempotent, dtype=complex), False))
    M = Le @ qmap.matrix_float
    _, s, Vh = np.linalg.svd(M)
    r = int(np.sum(s > tol * (1.0 + (s[0] if s.size else 0.0))))
    return Vh[r:].conj().T


def wedderburn_profile(A, seed=0, tol=1e-8):
    """Compute the Wedderburn profile of ``A``."""
    rad = radical_basis(A)
    Abar, Q = quotient_algebra(A, rad)
    if radical_basis(Abar).vectors:
        raise InternalConsistencyError("quotient by the radical is not semisimple")
    comps = split_semisimple(Abar, seed, tol)
    ks = [c.k for c in comps]
    exact = all(c.exact for c in comps)
    ideals = [_maximal_ideal(A, Q, c, tol) for c in comps]
    for M, k in zip(ideals, ks):
        size = len(M) if isinstance(M, IdealBasis) else M.shape[1]
        if size != A.dim - k * k:
            raise InternalConsistencyError("maximal ideal has the wrong codimension")
    if sum(k * k for k in ks) + len(rad) != A.dim:
        raise InternalConsistencyError("component and radical dimensions do not add up")
    return WedderburnProfile(
        algebra=A,
        radical=rad,
        p=len(ks),
        ks=ks,
        maximal_ideals=ideals,
        component_bases=[c.basis for c in comps],
        quotient=Abar,
        qmap=Q,
        components=comps,
        exact_ideals=exact,
    )


@dataclass
class SimpleIsomorphism:
    """Explicit map from a semisimple algebra onto one of its ``k x k`` matrix blocks.

    ``tensor[l]`` is the image of basis element ``e_l``; the map kills every
    other component.
    """

    k: int
    tensor: np.ndarray  # shape (dim, k, k)

    def __call__(self, coords):
        return np.tensordot(np.asarray(coords, dtype=complex), self.tensor, axes=(0, 0))


def split_simple_component(Abar, component, seed=0, tol=1e-8, checks=20):
    """Isomorphism of a simple component of ``Abar`` with the full matrix algebra ``M_k``."""
    k = component.k
    n = Abar.dim
    e = np.asarray([complex(x) for x in component.idempotent], dtype=complex)
    B = np.array([[complex(x) for x in v] for v in component.basis], dtype=complex).T
    Bq, _ = np.linalg.qr(B)
    Ls = np.array([regular_rep(Element(Abar, np.eye(n, dtype=complex)[l], False)) for l in range(n)])
    if k == 1:
        U = (e / np.linalg.norm(e))[:, None]
        return _finish(Abar, Ls, U, 1, e, Bq, seed, tol, checks)
    last = None
    for attempt in range(RETRY_BUDGET):
        rng = np.random.default_rng([seed, attempt, 7])
        r = rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)
        a = np.tensordot(r, Ls, axes=(0, 0)) @ e  # a = r e lies in the component
        La = np.tensordot(a, Ls, axes=(0, 0))
        R = Bq.conj().T @ La @ Bq
        w = np.linalg.eigvals(R)
        scale = 1.0 + float(np.max(np.abs(w)))
        order = np.argsort(w.real + 1e-3 * w.imag)
        w = w[order]
        groups = []
        for x in w:
            for g in groups:
                if abs(g[0] - x) < 1e-6 * scale:
                    g.append(x)
                    break
            else:
                groups.append([x])
        if len(groups) != k or any(len(g) != k for g in groups):
            last = "random component element lacks k distinct eigenvalues"
            continue
        lams = [np.mean(g) for g in groups]
        f = e.copy()
        lam = lams[0]
        for mu in lams[1:]:
            f = (La @ f - mu * f) / (lam - mu)
        W = right_rep(Element(Abar, f, False)) @ Bq
        U, s, _ = np.linalg.svd(W)
        if s[k - 1] < 1e-6 * s[0] or (s.size > k and s[k] > 1e-6 * s[0]):
            last = "spectral idempotent is not of rank one"
            continue
        try:
            return _finish(Abar, Ls, U[:, :k], k, e, Bq, seed, tol, checks)
        except NumericFailure as exc:
            last = str(exc)
    raise NumericFailure(f"simple component splitting failed after {RETRY_BUDGET} seeds: {last}")


def _finish(Abar, Ls, U, k, e, Bq, seed, tol, checks):
    tensor = np.einsum("ai,lab,bj->lij", U.conj(), Ls, U)
    iso = SimpleIsomorphism(k, tensor)
    if np.max(np.abs(iso(e) - np.eye(k))) > tol:
        raise NumericFailure("component unit does not map to the identity")
    rng = np.random.default_rng([seed, 99])
    for _ in range(checks):
        x = Bq @ (rng.uniform(-1, 1, Bq.shape[1]) + 1j * rng.uniform(-1, 1, Bq.shape[1]))
        y = Bq @ (rng.uniform(-1, 1, Bq.shape[1]) + 1j * rng.uniform(-1, 1, Bq.shape[1]))
        xy = np.tensordot(x, Ls, axes=(0, 0)) @ y
        res = np.max(np.abs(iso(xy) - iso(x) @ iso(y)))
        if res > tol * (1.0 + np.max(np.abs(iso(x))) * np.max(np.abs(iso(y)))):
            raise NumericFailure(f"multiplicativity residual {res:.3g} exceeds tolerance")
    return iso
