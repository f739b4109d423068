"""Structural matrix algebras: spans of matrix units indexed by a quasi-order."""

from dataclasses import dataclass
from itertools import product

import networkx as nx
import numpy as np

from .algebra import AlgebraError, Element, IdealBasis, matrix_unit_algebra
from .scalars import ONE, ZERO

RESAMPLE_BUDGET = 16


class QuasiOrderError(AlgebraError):
    def __init__(self, message, witnesses):
        self.witnesses = witnesses
        super().__init__(f"{message}: {witnesses}")


@dataclass(frozen=True)
class QuasiOrder:
    """Reflexive transitive relation on ``{0, ..., n-1}`` (stored 0-based)."""

    n: int
    pairs: frozenset

    @classmethod
    def from_pairs(cls, n, pairs, one_based=False, close=False, reflexive_close=False):
        shift = 1 if one_based else 0
        ps = set()
        for i, j in pairs:
            i, j = int(i) - shift, int(j) - shift
            if not (0 <= i < n and 0 <= j < n):
                raise QuasiOrderError("pair out of range", [(i + shift, j + shift)])
            ps.add((i, j))
        if reflexive_close:
            ps |= {(i, i) for i in range(n)}
        if close:
            ps = transitive_closure(n, ps)
        q = cls(n, frozenset(ps))
        q.validate()
        return q

    def validate(self):
        missing = [(i + 1, i + 1) for i in range(self.n) if (i, i) not in self.pairs]
        if missing:
            raise QuasiOrderError("relation is not reflexive, missing", missing)
        succ = self.successors()
        bad = []
        for i, j in sorted(self.pairs):
            for k in sorted(succ[j]):
                if (i, k) not in self.pairs:
                    bad.append(((i + 1, j + 1), (j + 1, k + 1)))
        if bad:
            raise QuasiOrderError("relation is not transitive; pairs without their composite", bad[:5])

    def successors(self):
        succ = {i: set() for i in range(self.n)}
        for i, j in self.pairs:
            succ[i].add(j)
        return succ

    def sorted_pairs(self):
        return sorted(self.pairs)

    def to_json(self):
        return {"n": self.n, "pairs": [[i + 1, j + 1] for i, j in self.sorted_pairs()]}


def transitive_closure(n, pairs):
    reach = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        reach[i, j] = True
    for k in range(n):
        reach |= reach[:, k:k + 1] & reach[k:k + 1, :]
    return {(int(i), int(j)) for i, j in zip(*np.nonzero(reach))}


def sma_algebra(rho):
    """Algebra spanned by ``E_ij`` for ``(i, j)`` in the quasi-order, basis in sorted pair order."""
    rho.validate()
    A = matrix_unit_algebra(rho.n, rho.sorted_pairs())
    A.quasi_order = rho
    return A


@dataclass(frozen=True)
class Condensation:
    permutation: tuple  # permutation[new_position] = original index
    block_sizes: tuple
    class_of: tuple  # original index -> block index

    def classes(self):
        out = [[] for _ in self.block_sizes]
        for i, b in enumerate(self.class_of):
            out[b].append(i)
        return out

    def permutation_matrix(self):
        """``R`` with ``(R X R^{-1})[a, b] = X[perm[a], perm[b]]``."""
        n = len(self.permutation)
        R = np.zeros((n, n))
        for a, i in enumerate(self.permutation):
            R[a, i] = 1.0
        return R

    def block_slices(self):
        out, off = [], 0
        for k in self.block_sizes:
            out.append(slice(off, off + k))
            off += k
        return out


def condensation(rho):
    """Mutual-reachability classes of ``rho`` in a topological order of the class DAG.

    Ties in the topological order go to the class with the smallest member.
    """
    G = nx.DiGraph()
    G.add_nodes_from(range(rho.n))
    G.add_edges_from((i, j) for i, j in rho.pairs if i != j)
    C = nx.condensation(G)
    members = nx.get_node_attributes(C, "members")
    order = list(nx.lexicographical_topological_sort(C, key=lambda c: min(members[c])))
    perm, sizes = [], []
    class_of = [0] * rho.n
    for b, c in enumerate(order):
        ms = sorted(members[c])
        perm.extend(ms)
        sizes.append(len(ms))
        for i in ms:
            class_of[i] = b
    cond = Condensation(tuple(perm), tuple(sizes), tuple(class_of))
    for i, j in rho.pairs:
        if class_of[i] > class_of[j]:
            raise AssertionError("condensation order is not block upper-triangular")
    for i in range(rho.n):
        for j in range(rho.n):
            if class_of[i] == class_of[j] and (i, j) not in rho.pairs:
                raise AssertionError("condensation class is not a full block")
    return cond


def sma_radical(rho, A=None):
    """Radical of the SMA: the units ``E_ij`` joining different classes."""
    if A is None:
        A = sma_algebra(rho)
    cls = condensation(rho).class_of
    vecs = []
    for t, (i, j) in enumerate(rho.sorted_pairs()):
        if cls[i] != cls[j]:
            vecs.append(A.basis_vector(t))
    return IdealBasis(A, vecs)


def _off_block_mask(rho):
    cls = condensation(rho).class_of
    return [cls[i] != cls[j] for i, j in rho.sorted_pairs()]


def block_projection(rho, X):
    """Block-diagonal truncation of an SMA element (kills the radical coordinates)."""
    mask = _off_block_mask(rho)
    if X.exact:
        coords = tuple(ZERO if m else c for m, c in zip(mask, X.coords))
        return Element(X.algebra, coords, True)
    coords = np.where(np.array(mask), 0.0, X.coords)
    return Element(X.algebra, coords.astype(complex), False)


def to_matrix(rho, X):
    """``n x n`` complex matrix of an SMA element."""
    M = np.zeros((rho.n, rho.n), dtype=complex)
    coords = X.to_float().coords
    for t, (i, j) in enumerate(rho.sorted_pairs()):
        M[i, j] = coords[t]
    return M


def from_matrix(rho, A, M, tol=1e-9):
    """SMA element with matrix ``M``; entries outside the relation must vanish to ``tol``."""
    scale = 1.0 + float(np.max(np.abs(M)))
    mask = np.ones((rho.n, rho.n), dtype=bool)
    for i, j in rho.pairs:
        mask[i, j] = False
    leak = float(np.max(np.abs(M[mask]))) if mask.any() else 0.0
    if leak > tol * scale:
        raise AlgebraError(f"matrix leaves the structural pattern (entry {leak:.3g})")
    coords = np.array([M[i, j] for i, j in rho.sorted_pairs()], dtype=complex)
    return Element(A, coords, False)


def random_invertible(rho, rng, eps=0.5):
    """``I + eps * R`` for a random SMA matrix R, resampled until well conditioned."""
    for _ in range(RESAMPLE_BUDGET):
        R = np.zeros((rho.n, rho.n), dtype=complex)
        for i, j in rho.pairs:
            R[i, j] = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        S = np.eye(rho.n) + eps * R
        if np.linalg.cond(S) < 1e8:
            return S
    raise AlgebraError("could not sample an invertible SMA element")


def sample_diag_conj(rho, seed, A=None, D=None, S=None):
    """Random ``S D S^{-1}`` with ``S`` invertible in the SMA and ``D`` diagonal with distinct entries.

    Returns ``(element, S, diagonal)``.
    """
    if A is None:
        A = sma_algebra(rho)
    rng = np.random.default_rng(seed)
    if S is None:
        S = random_invertible(rho, rng)
    if D is None:
        r = 0.1 * rng.uniform(0, 1, rho.n)
        theta = rng.uniform(0, 2 * np.pi, rho.n)
        D = rng.permutation(np.arange(1, rho.n + 1)).astype(complex) + r * np.exp(1j * theta)
    D = np.asarray(D, dtype=complex)
    M = S @ np.diag(D) @ np.linalg.inv(S)
    return from_matrix(rho, A, M, tol=1e-8), S, D


def all_quasi_orders(n):
    """Every quasi-order on ``n`` points (labelled), by filtering reflexive relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    diag = {(i, i) for i in range(n)}
    out = []
    for bits in product((False, True), repeat=len(off)):
        ps = diag | {p for p, b in zip(off, bits) if b}
        if transitive_closure(n, ps) == ps:
            out.append(QuasiOrder(n, frozenset(ps)))
    return out


def random_quasi_order(n, rng, density=None):
    """Transitive closure of a random reflexive relation."""
    if density is None:
        density = rng.uniform(0.05, 0.5)
    ps = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and rng.uniform() < density:
                ps.add((i, j))
    return QuasiOrder(n, frozenset(transitive_closure(n, ps)))


def quasi_order_with_blocks(ks, rng, density=0.5):
    """Random quasi-order whose condensation has the given class sizes, in this order."""
    starts = np.cumsum([0] + list(ks))
    cls = []
    for b, k in enumerate(ks):
        cls.extend([b] * k)
    n = len(cls)
    ps = {(i, j) for i in range(n) for j in range(n) if cls[i] == cls[j]}
    for a in range(len(ks)):
        for b in range(a + 1, len(ks)):
            if rng.uniform() < density:
                ps.add((int(starts[a]), int(starts[b])))
    return QuasiOrder(n, frozenset(transitive_closure(n, ps)))


def block_diagonal_quasi_order(ks):
    return quasi_order_with_blocks(ks, np.random.default_rng(0), density=0.0)
