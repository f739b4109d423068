"""Exact linear algebra over Gaussian rationals and float spectral kernels.

Exact matrices are stored as tuples of rows of :class:`GaussRational`.
Elimination runs over sparse rows (``dict`` column -> value) because the
linear systems built from structure constants are overwhelmingly zero.
"""

import numpy as np

from .scalars import ONE, ZERO, GaussRational, gr


class NumericFailure(ArithmeticError):
    """A floating-point kernel could not produce a trustworthy answer."""


class ExactMatrix:
    """Dense exact matrix with GaussRational entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(gr(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, cols, nrows):
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return ExactMatrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [matvec(self, c) for c in other.columns()]
            return ExactMatrix.from_columns(cols, self.nrows) if cols else ExactMatrix.zeros(self.nrows, 0)
        return matvec(self, other)

    def to_numpy(self):
        return np.array([[complex(x) for x in r] for r in self.rows], dtype=complex).reshape(self.nrows, self.ncols)

    def rank(self):
        return exact_rank(self)


def matvec(M, v):
    """Exact product ``M @ v`` for an ExactMatrix and a coordinate sequence."""
    if len(v) != M.ncols:
        raise ValueError("shape mismatch")
    nz = [(j, x) for j, x in enumerate(v) if x]
    out = []
    for r in M.rows:
        s = ZERO
        for j, x in nz:
            a = r[j]
            if a:
                s = s + a * x
        out.append(s)
    return tuple(out)


class RowSpace:
    """Incrementally maintained reduced row echelon basis.

    Pivot rows are normalised to a leading 1 and kept fully reduced against
    one another, so membership tests and kernel extraction need one pass.
    The pivot of a new row is its first nonzero column.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> sparse row

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row):
        """Return the sparse remainder of ``row`` modulo the current span."""
        r = _sparse(row)
        for c in [c for c in r if c in self.pivots]:
            f = r.get(c)
            if not f:
                continue
            for k, v in self.pivots[c].items():
                nv = r.get(k, ZERO) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def contains(self, row):
        return not self.reduce(row)

    def add(self, row):
        """Insert ``row``; return True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = ONE / r[c]
        r = {k: v * inv for k, v in r.items()}
        for pc, prow in self.pivots.items():
            f = prow.get(c)
            if f:
                for k, v in r.items():
                    nv = prow.get(k, ZERO) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[c] = r
        return True

    def kernel(self):
        """Basis of the null space of the stored rows, one vector per free column."""
        free = [j for j in range(self.ncols) if j not in self.pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for c, prow in self.pivots.items():
                x = prow.get(f)
                if x:
                    v[c] = -x
            basis.append(tuple(v))
        return basis

    def basis(self):
        """Dense RREF rows in pivot order."""
        out = []
        for c in sorted(self.pivots):
            v = [ZERO] * self.ncols
            for k, x in self.pivots[c].items():
                v[k] = x
            out.append(tuple(v))
        return out


def _sparse(row):
    if isinstance(row, dict):
        return {k: gr(v) for k, v in row.items() if v}
    return {k: gr(v) for k, v in enumerate(row) if v}


def exact_kernel(M):
    """Exact basis of ``{v : M v = 0}``; its size is ``M.ncols - rank(M)``."""
    space = RowSpace(M.ncols)
    for r in M.rows:
        space.add(r)
    return space.kernel()


def kernel_of_rows(rows, ncols):
    space = RowSpace(ncols)
    for r in rows:
        space.add(r)
    return space.kernel()


def exact_rank(M):
    space = RowSpace(M.ncols)
    for r in M.rows:
        space.add(r)
    return len(space)


def span_basis(vectors, ncols):
    """Independent subset spanning the same space, in input order."""
    space = RowSpace(ncols)
    return [tuple(gr(x) for x in v) for v in vectors if space.add(v)]


def exact_inverse(M):
    """Exact inverse of a square ExactMatrix; raises ZeroDivisionError if singular."""
    n = M.nrows
    if M.ncols != n:
        raise ValueError("square matrix required")
    space = RowSpace(2 * n)
    for i, r in enumerate(M.rows):
        space.add(list(r) + [ONE if j == i else ZERO for j in range(n)])
    if any(c not in space.pivots for c in range(n)):
        raise ZeroDivisionError("matrix is singular")
    rows = []
    for c in range(n):
        p = space.pivots[c]
        rows.append([p.get(n + j, ZERO) for j in range(n)])
    return ExactMatrix(rows, n)


def exact_solve_columns(basis_cols, targets, dim):
    """Coordinates of each target in terms of independent ``basis_cols``.

    Raises ValueError when some target lies outside the span.
    """
    k = len(basis_cols)
    space = RowSpace(k + len(targets))
    # Solve B X = T by eliminating the augmented rows [B | T].
    for i in range(dim):
        space.add([c[i] for c in basis_cols] + [t[i] for t in targets])
    if any(c not in space.pivots for c in range(k)):
        raise ValueError("basis columns are dependent")
    if any(c >= k for c in space.pivots):
        raise ValueError("target outside the span")
    out = []
    for t in range(len(targets)):
        out.append(tuple(space.pivots[c].get(k + t, ZERO) for c in range(k)))
    return out


# ---------------------------------------------------------------- float side

EPS = np.finfo(float).eps


def as_float_matrix(M):
    """Validate and convert to a complex ndarray (the FloatMatrix of this package)."""
    if isinstance(M, ExactMatrix):
        A = M.to_numpy()
    else:
        A = np.asarray(M, dtype=complex)
    if A.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def default_tol(M):
    A = np.asarray(M)
    scale = float(np.max(np.abs(A))) if A.size else 0.0
    return 1e-9 * (1.0 + scale)


def cluster_points(points, radius, defect=1, scale=None):
    """Group complex points and return the cluster centroids.

    Points closer than ``radius`` are merged (single linkage).  When
    ``defect > 1`` a cluster of ``m`` points may also spread over the
    radius ``10 * eps**(1/min(m, defect)) * scale`` that a defective
    eigenvalue of algebraic multiplicity ``m`` scatters into under roundoff.
    """
    pts = np.asarray(points, dtype=complex).ravel()
    n = pts.size
    if n == 0:
        return pts, np.zeros(0, dtype=int)
    if scale is None:
        scale = 1.0 + float(np.max(np.abs(pts)))
    reach = radius
    if defect > 1:
        reach = max(radius, 10.0 * EPS ** (1.0 / defect) * scale)
    labels = _single_linkage(pts, reach)
    if defect > 1:
        labels = _split_clusters(pts, labels, radius, defect, scale)
    ids = sorted(set(labels.tolist()), key=lambda l: np.flatnonzero(labels == l)[0])
    remap = {l: i for i, l in enumerate(ids)}
    labels = np.array([remap[l] for l in labels.tolist()], dtype=int)
    cents = np.array([pts[labels == i].mean() for i in range(len(ids))], dtype=complex)
    return cents, labels


def _single_linkage(pts, radius):
    n = pts.size
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    d = np.abs(pts[:, None] - pts[None, :])
    ii, jj = np.nonzero(np.triu(d <= radius, 1))
    for i, j in zip(ii.tolist(), jj.tolist()):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return np.array([find(i) for i in range(n)], dtype=int)


def _split_clusters(pts, labels, radius, defect, scale):
    # A cluster is accepted when its spread about the centroid fits the
    # roundoff radius for its size; otherwise it is re-linked more tightly.
    out = labels.copy()
    nxt = int(labels.max()) + 1
    stack = [np.flatnonzero(labels == l) for l in set(labels.tolist())]
    while stack:
        idx = stack.pop()
        m = idx.size
        if m == 1:
            continue
        c = pts[idx].mean()
        spread = float(np.max(np.abs(pts[idx] - c)))
        allowed = max(radius, 10.0 * EPS ** (1.0 / min(m, defect)) * scale)
        if spread <= allowed:
            continue
        sub = pts[idx]
        r = allowed
        lab = _single_linkage(sub, r)
        while len(set(lab.tolist())) == 1 and r > radius:
            r /= 10.0
            lab = _single_linkage(sub, r)
        if len(set(lab.tolist())) == 1:
            continue
        for l in set(lab.tolist()):
            part = idx[lab == l]
            out[part] = nxt
            nxt += 1
            stack.append(part)
    return out


def float_eigenvalues(M, tol=None, defect=1):
    """Eigenvalues of a square complex matrix.

    Returns ``(multiset, distinct)``: all eigenvalues with multiplicity, and
    the centroids of the clusters formed at distance ``tol``.  ``defect`` is
    an upper bound on Jordan block sizes; see :func:`cluster_points`.
    """
    A = as_float_matrix(M)
    if A.shape[0] != A.shape[1]:
        raise ValueError("square matrix required")
    if A.shape[0] == 0:
        return np.zeros(0, dtype=complex), np.zeros(0, dtype=complex)
    if tol is None:
        tol = default_tol(A)
    try:
        w = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NumericFailure(f"eigensolver failed: {exc}") from exc
    if not np.all(np.isfinite(w)):
        raise NumericFailure("eigensolver returned non-finite values")
    scale = 1.0 + float(np.linalg.norm(A, 2))
    cents, _ = cluster_points(w, tol, defect=defect, scale=scale)
    return w, cents


def char_poly(M):
    """Monic characteristic polynomial ``det(xI - M)``, highest degree first."""
    A = as_float_matrix(M)
    if A.shape[0] != A.shape[1]:
        raise ValueError("square matrix required")
    if A.shape[0] == 0:
        return np.array([1.0 + 0j])
    c = np.poly(A).astype(complex)
    c[0] = 1.0
    return c


def hausdorff(X, Y):
    """Hausdorff distance between two finite point sets in the complex plane."""
    X = np.asarray(X, dtype=complex).ravel()
    Y = np.asarray(Y, dtype=complex).ravel()
    if X.size == 0 and Y.size == 0:
        return 0.0
    if X.size == 0 or Y.size == 0:
        return float("inf")
    d = np.abs(X[:, None] - Y[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def directed_distance(X, Y):
    """``max_{x in X} min_{y in Y} |x - y|``; zero for empty X."""
    X = np.asarray(X, dtype=complex).ravel()
    Y = np.asarray(Y, dtype=complex).ravel()
    if X.size == 0:
        return 0.0
    if Y.size == 0:
        return float("inf")
    return float(np.abs(X[:, None] - Y[None, :]).min(axis=1).max())


# ------------------------------------------------ exact univariate polynomials
# Coefficient lists run from the constant term upwards.

def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_deriv(p):
    return poly_trim([k * c for k, c in enumerate(p)][1:])


def poly_divmod(a, b):
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lead
        s = len(a) - len(b)
        q[s] = f
        for t, c in enumerate(b):
            a[s + t] = a[s + t] - f * c
        a = poly_trim(a)
    return poly_trim(q), a


def poly_gcd(a, b):
    """Monic gcd of two exact polynomials."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def max_root_multiplicity(p):
    """Largest multiplicity of a root of ``p`` over the complex numbers."""
    p = poly_trim(p)
    if len(p) <= 1:
        return 0
    m = 1
    g = poly_gcd(p, poly_deriv(p))
    while len(g) > 1:
        m += 1
        g = poly_gcd(g, poly_deriv(g))
    return m
