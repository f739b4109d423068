"""Finite-dimensional unital complex algebras given by structure constants."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .linalg import (
    ExactMatrix,
    RowSpace,
    exact_inverse,
    exact_rank,
    float_eigenvalues,
    max_root_multiplicity,
)
from .scalars import ONE, ZERO, gr


class AlgebraError(ValueError):
    pass


class AssociativityError(AlgebraError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"associativity fails for basis triple {triple}")


class UnitLawError(AlgebraError):
    def __init__(self, index, side):
        self.index = index
        self.side = side
        super().__init__(f"unit law fails on the {side} for basis element {index}")


class NotAnIdealError(AlgebraError):
    def __init__(self, vector_index, basis_index, side):
        self.witness = (vector_index, basis_index, side)
        super().__init__(
            f"span is not an ideal: {side} product of ideal vector {vector_index} "
            f"with basis element {basis_index} leaves the span"
        )


def _sparse_vec(v):
    return {k: x for k, x in enumerate(v) if x}


def _axpy(acc, f, vec):
    for k, x in vec.items():
        nv = acc.get(k, ZERO) + f * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class Algebra:
    """Unital algebra with basis ``e_0..e_{n-1}`` and ``e_i e_j = sum_k c[i][j][k] e_k``.

    ``structure`` maps ``(i, j)`` to a sparse dict ``{k: GaussRational}``;
    absent pairs multiply to zero.  Build instances through
    :func:`make_algebra`, which validates the axioms exactly.
    """

    def __init__(self, dim, structure, unit, labels=None):
        self.dim = dim
        self.structure = structure
        self.unit = tuple(unit)
        self.labels = tuple(labels) if labels is not None else None
        self.quasi_order = None  # set when the algebra is a structural matrix algebra

    def __repr__(self):
        return f"Algebra(dim={self.dim})"

    # exact arithmetic on coordinate tuples

    def product_of_basis(self, i, j):
        return self.structure.get((i, j), {})

    def mul_exact(self, x, y):
        xs = _sparse_vec(x)
        ys = _sparse_vec(y)
        acc = {}
        for i, a in xs.items():
            for j, b in ys.items():
                p = self.structure.get((i, j))
                if p:
                    _axpy(acc, a * b, p)
        return tuple(acc.get(k, ZERO) for k in range(self.dim))

    def basis_vector(self, i):
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    @cached_property
    def tensor(self):
        """Dense complex array ``C[i, j, k]`` of structure constants."""
        C = np.zeros((self.dim, self.dim, self.dim), dtype=complex)
        for (i, j), p in self.structure.items():
            for k, c in p.items():
                C[i, j, k] = complex(c)
        return C

    @cached_property
    def unit_float(self):
        return np.array([complex(x) for x in self.unit], dtype=complex)

    @cached_property
    def jordan_bound(self):
        """Largest Jordan block of ``L_a`` for generic ``a`` (1 means generically diagonalizable).

        Computed exactly from minimal polynomials of a few pseudo-random
        integer elements; it bounds the eigenvalue scatter that roundoff can
        produce in :func:`spectrum`.
        """
        rng = np.random.default_rng(12345)
        best = 1
        for _ in range(3):
            coords = tuple(gr(int(c)) for c in rng.integers(-9, 10, size=self.dim))
            best = max(best, max_root_multiplicity(minimal_polynomial(self, coords)))
        return best

    def element(self, coords, exact=None):
        return Element.of(self, coords, exact)

    def one(self):
        return Element(self, self.unit, True)

    def basis_element(self, i):
        return Element(self, self.basis_vector(i), True)


def minimal_polynomial(A, coords):
    """Exact minimal polynomial of an element (low-to-high coefficients, monic)."""
    n = A.dim
    space = RowSpace(n + n + 1)
    power = A.unit
    for d in range(n + 1):
        row = list(power) + [ONE if t == d else ZERO for t in range(n + 1)]
        rem = space.reduce(row)
        if not any(k < n for k in rem):
            poly = [rem.get(n + t, ZERO) for t in range(d + 1)]
            lead = poly[-1]
            return [c / lead for c in poly]
        space.add(row)
        power = A.mul_exact(power, coords)
    raise AssertionError("minimal polynomial degree exceeds dimension")


@dataclass(frozen=True, eq=False)
class Element:
    """An element of an algebra, with exact (GaussRational) or float coordinates."""

    algebra: Algebra
    coords: object
    exact: bool

    @classmethod
    def of(cls, algebra, coords, exact=None):
        if exact is None:
            exact = not isinstance(coords, np.ndarray) and all(not isinstance(c, (float, complex)) for c in coords)
        if exact:
            coords = tuple(gr(c) for c in coords)
        else:
            coords = np.asarray([complex(c) for c in coords], dtype=complex)
            if not np.all(np.isfinite(coords)):
                raise ValueError("non-finite coordinates")
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        return cls(algebra, coords, exact)

    def to_float(self):
        if not self.exact:
            return self
        return Element(self.algebra, np.array([complex(c) for c in self.coords], dtype=complex), False)

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        if self.exact and other.exact:
            return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)), True)
        return Element(self.algebra, self.to_float().coords + other.to_float().coords, False)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        if self.exact and not isinstance(scalar, (float, complex)):
            s = gr(scalar)
            return Element(self.algebra, tuple(s * c for c in self.coords), True)
        return Element(self.algebra, complex(scalar) * self.to_float().coords, False)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.__rmul__(other)
        self._check(other)
        if self.exact and other.exact:
            return Element(self.algebra, self.algebra.mul_exact(self.coords, other.coords), True)
        L = regular_rep(self.to_float())
        return Element(self.algebra, L @ other.to_float().coords, False)

    def __neg__(self):
        return (-1) * self


def regular_rep(a):
    """Matrix of left multiplication by ``a``; column j holds the coordinates of ``a e_j``."""
    A = a.algebra
    if a.exact:
        cols = [[ZERO] * A.dim for _ in range(A.dim)]
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j in range(A.dim):
                for k, c in A.product_of_basis(i, j).items():
                    cols[j][k] = cols[j][k] + x * c
        return ExactMatrix.from_columns(cols, A.dim)
    return np.einsum("i,ijk->kj", a.coords, A.tensor)


def right_rep(a):
    """Float matrix of right multiplication by ``a``."""
    A = a.algebra
    x = a.to_float().coords
    return np.einsum("j,ijk->ki", x, A.tensor)


def spectrum(a, tol=None):
    """Distinct eigenvalues of ``L_a``, sorted by (real, imaginary) part."""
    L = regular_rep(a.to_float())
    _, distinct = float_eigenvalues(L, tol, defect=a.algebra.jordan_bound)
    return np.array(sorted(distinct.tolist(), key=lambda z: (round(z.real, 9), round(z.imag, 9))), dtype=complex)


def is_invertible(a, tol=None):
    if a.exact:
        return exact_rank(regular_rep(a)) == a.algebra.dim
    sp = spectrum(a, tol)
    if tol is None:
        tol = 1e-9 * (1.0 + float(np.max(np.abs(sp))))
    return bool(np.min(np.abs(sp)) > tol)


def make_algebra(dim, structure, unit, labels=None):
    """Validate structure constants and unit exactly and return an :class:`Algebra`.

    ``structure`` may be a mapping ``(i, j) -> {k: c}`` or an iterable of
    ``(i, j, k, c)`` entries; repeated entries are summed.
    """
    if dim < 1:
        raise AlgebraError("dimension must be positive")
    table = {}
    items = structure.items() if isinstance(structure, dict) else None
    if items is not None:
        entries = ((i, j, k, c) for (i, j), p in items for k, c in p.items())
    else:
        entries = structure
    for i, j, k, c in entries:
        for idx in (i, j, k):
            if not (0 <= idx < dim):
                raise AlgebraError(f"structure index {idx} out of range for dimension {dim}")
        c = gr(c)
        p = table.setdefault((i, j), {})
        v = p.get(k, ZERO) + c
        if v:
            p[k] = v
        else:
            p.pop(k, None)
    table = {ij: p for ij, p in table.items() if p}
    unit = tuple(gr(u) for u in unit)
    if len(unit) != dim:
        raise AlgebraError("unit has wrong length")
    A = Algebra(dim, table, unit, labels)
    check_associative(A)
    check_unit(A)
    return A


def check_associative(A):
    n = A.dim
    st = A.structure
    for i in range(n):
        for j in range(n):
            pij = st.get((i, j), {})
            for l in range(n):
                pjl = st.get((j, l), {})
                if not pij and not pjl:
                    continue
                lhs = {}
                for k, c in pij.items():
                    _axpy(lhs, c, st.get((k, l), {}))
                rhs = {}
                for k, c in pjl.items():
                    _axpy(rhs, c, st.get((i, k), {}))
                if lhs != rhs:
                    raise AssociativityError((i, j, l))


def check_unit(A):
    for i in range(A.dim):
        e = A.basis_vector(i)
        if A.mul_exact(A.unit, e) != e:
            raise UnitLawError(i, "left")
        if A.mul_exact(e, A.unit) != e:
            raise UnitLawError(i, "right")


class IdealBasis:
    """Exact basis of a subspace of an algebra, expected to be a two-sided ideal."""

    def __init__(self, algebra, vectors, check=True):
        self.algebra = algebra
        space = RowSpace(algebra.dim)
        vecs = []
        for v in vectors:
            v = tuple(gr(x) for x in v)
            if not space.add(v):
                raise AlgebraError("ideal basis vectors are linearly dependent")
            vecs.append(v)
        self.vectors = vecs
        self._space = space
        if check:
            self.check_ideal()

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return f"IdealBasis(dim={len(self.vectors)} in {self.algebra!r})"

    def contains(self, v):
        return self._space.contains(v)

    def check_ideal(self):
        A = self.algebra
        for vi, v in enumerate(self.vectors):
            for i in range(A.dim):
                e = A.basis_vector(i)
                if not self.contains(A.mul_exact(e, v)):
                    raise NotAnIdealError(vi, i, "left")
                if not self.contains(A.mul_exact(v, e)):
                    raise NotAnIdealError(vi, i, "right")


class QuotientMap:
    """Exact linear map ``A -> A/I`` given by a projection matrix."""

    def __init__(self, source, target, matrix, lift_indices):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.lift_indices = lift_indices  # source basis indices chosen as coset representatives

    @cached_property
    def matrix_float(self):
        return self.matrix.to_numpy()

    def __call__(self, a):
        if a.algebra is not self.source:
            raise ValueError("element not in the source algebra")
        if a.exact:
            return Element(self.target, self.matrix @ a.coords, True)
        return Element(self.target, self.matrix_float @ a.coords, False)


def quotient_algebra(A, ideal):
    """Return ``(A/I, Q)`` with coset representatives chosen greedily among standard basis vectors."""
    if not isinstance(ideal, IdealBasis):
        ideal = IdealBasis(A, ideal)
    elif ideal.algebra is not A:
        raise ValueError("ideal belongs to another algebra")
    n = A.dim
    space = RowSpace(n)
    for v in ideal.vectors:
        space.add(v)
    chosen = [i for i in range(n) if space.add(A.basis_vector(i))]
    q = len(chosen)
    cols = [A.basis_vector(i) for i in chosen] + list(ideal.vectors)
    T = ExactMatrix.from_columns(cols, n)
    Tinv = exact_inverse(T)
    Qmat = ExactMatrix(Tinv.rows[:q], n) if q else ExactMatrix([], n)
    structure = {}
    for a, ia in enumerate(chosen):
        for b, ib in enumerate(chosen):
            p = A.product_of_basis(ia, ib)
            if not p:
                continue
            full = tuple(p.get(k, ZERO) for k in range(n))
            img = Qmat @ full
            sp = {k: x for k, x in enumerate(img) if x}
            if sp:
                structure[(a, b)] = sp
    unit = Qmat @ A.unit if q else ()
    if q == 0:
        raise AlgebraError("quotient by the whole algebra is the zero algebra")
    labels = [A.labels[i] for i in chosen] if A.labels else None
    Abar = make_algebra(q, structure, unit, labels)
    return Abar, QuotientMap(A, Abar, Qmat, chosen)


def matrix_unit_algebra(n, pairs, labels=None):
    """Span of the matrix units ``E_ij`` for ``(i, j)`` in ``pairs`` (0-based), in the given order."""
    pairs = list(pairs)
    index = {p: t for t, p in enumerate(pairs)}
    structure = {}
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if j == k:
                c = index.get((i, l))
                if c is None:
                    raise AlgebraError(f"matrix units E{i}{j} and E{k}{l} multiply outside the span")
                structure[(a, b)] = {c: ONE}
    diag = [index.get((i, i)) for i in range(n)]
    if any(d is None for d in diag):
        raise AlgebraError("span of matrix units must contain every diagonal unit")
    unit = [ZERO] * len(pairs)
    for d in diag:
        unit[d] = ONE
    if labels is None:
        labels = [f"E{i + 1},{j + 1}" for i, j in pairs]
    return make_algebra(len(pairs), structure, unit, labels)


def direct_sum_algebra(blocks):
    """Block-diagonal algebra ``M_{k_1} + ... + M_{k_p}`` on matrix-unit bases."""
    blocks = list(blocks)
    if not blocks or any(k < 1 for k in blocks):
        raise AlgebraError("blocks must be a nonempty list of positive sizes")
    pairs = []
    off = 0
    for k in blocks:
        pairs.extend((off + i, off + j) for i in range(k) for j in range(k))
        off += k
    return matrix_unit_algebra(off, pairs)


def truncated_polynomial_algebra(k):
    """``C[x]/(x^k)`` on the basis ``1, t, ..., t^{k-1}``."""
    structure = {(i, j): {i + j: ONE} for i in range(k) for j in range(k) if i + j < k}
    unit = [ONE] + [ZERO] * (k - 1)
    labels = ["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, k)]
    return make_algebra(k, structure, unit, labels)


def change_basis(A, T):
    """Same algebra on the basis ``f_a = sum_k T[k, a] e_k`` (T exact and invertible)."""
    Tinv = exact_inverse(T)
    cols = T.columns()
    n = A.dim
    structure = {}
    for a in range(n):
        for b in range(n):
            prod = A.mul_exact(cols[a], cols[b])
            img = Tinv @ prod
            sp = {k: x for k, x in enumerate(img) if x}
            if sp:
                structure[(a, b)] = sp
    return make_algebra(n, structure, Tinv @ A.unit)


def random_element(A, seed):
    """Float element with real and imaginary parts i.i.d. uniform on [-1, 1]."""
    rng = np.random.default_rng(seed)
    z = rng.uniform(-1.0, 1.0, A.dim) + 1j * rng.uniform(-1.0, 1.0, A.dim)
    return Element(A, z, False)
