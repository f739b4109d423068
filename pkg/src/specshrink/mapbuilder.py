"""Block-repetition witness maps ``A -> M_{m_1} + ... + M_{m_q}``.

Each target block ``j`` receives the diagonal blocks ``X_i`` of the source
element, block ``i`` repeated ``x_i^j`` times.  Source elements are reduced
to their blocks either by reading the condensed matrix of a structural
matrix algebra, or through the quotient by the radical followed by explicit
matrix isomorphisms of the simple components.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from .algebra import Element
from .linalg import ExactMatrix
from .scalars import GaussRational
from .sma import QuasiOrder, condensation
from .wedderburn import split_simple_component, wedderburn_profile


class MapSpecError(ValueError):
    pass


class SMABlockReader:
    """Reads the diagonal blocks of an SMA element in condensation order (exact copying)."""

    kind = "sma"

    def __init__(self, rho, cond=None):
        self.rho = rho
        self.cond = cond if cond is not None else condensation(rho)
        self.pairs = rho.sorted_pairs()
        self.ks = list(self.cond.block_sizes)
        pos = {i: a for a, i in enumerate(self.cond.permutation)}
        self._index = []
        for b, sl in enumerate(self.cond.block_slices()):
            idx = []
            for t, (i, j) in enumerate(self.pairs):
                if sl.start <= pos[i] < sl.stop and sl.start <= pos[j] < sl.stop:
                    idx.append((t, pos[i] - sl.start, pos[j] - sl.start))
            self._index.append(idx)

    @property
    def dim(self):
        return len(self.pairs)

    def blocks(self, a):
        coords = a.coords
        out = []
        for k, idx in zip(self.ks, self._index):
            X = np.zeros((k, k), dtype=complex)
            for t, r, c in idx:
                X[r, c] = complex(coords[t])
            out.append(X)
        return out

    def to_json(self):
        return {
            "kind": self.kind,
            "quasi_order": self.rho.to_json(),
            "permutation": [i + 1 for i in self.cond.permutation],
            "block_sizes": self.ks,
        }


class QuotientBlockReader:
    """``a -> Q(a) -> (psi_1(Q a), ..., psi_p(Q a))`` for a general source algebra."""

    kind = "quotient"

    def __init__(self, qmatrix, isos, ks):
        self.qmatrix = qmatrix  # ExactMatrix, dim(A/rad) x dim(A)
        self.qfloat = qmatrix.to_numpy()
        self.isos = [np.asarray(t, dtype=complex) for t in isos]  # each (dim(A/rad), k, k)
        self.ks = list(ks)

    @property
    def dim(self):
        return self.qmatrix.ncols

    def blocks(self, a):
        x = self.qfloat @ a.to_float().coords
        return [np.tensordot(x, T, axes=(0, 0)) for T in self.isos]

    def to_json(self):
        return {
            "kind": self.kind,
            "ks": self.ks,
            "quotient_matrix": [[c.to_parts() for c in row] for row in self.qmatrix.rows],
            "quotient_cols": self.qmatrix.ncols,
            "isomorphisms": [_complex_to_json(T) for T in self.isos],
        }


def _complex_to_json(T):
    T = np.asarray(T, dtype=complex)
    return {"shape": list(T.shape), "re": T.real.ravel().tolist(), "im": T.imag.ravel().tolist()}


def _complex_from_json(d):
    re = np.array(d["re"], dtype=float)
    im = np.array(d["im"], dtype=float)
    return (re + 1j * im).reshape(d["shape"])


def reader_from_json(d):
    if d["kind"] == "sma":
        q = d["quasi_order"]
        rho = QuasiOrder.from_pairs(q["n"], q["pairs"], one_based=True)
        reader = SMABlockReader(rho)
        if [i + 1 for i in reader.cond.permutation] != d["permutation"] or reader.ks != d["block_sizes"]:
            raise MapSpecError("stored condensation does not match the quasi-order")
        return reader
    if d["kind"] == "quotient":
        rows = [[GaussRational.from_parts(*c) for c in row] for row in d["quotient_matrix"]]
        Q = ExactMatrix(rows, d["quotient_cols"])
        return QuotientBlockReader(Q, [_complex_from_json(t) for t in d["isomorphisms"]], d["ks"])
    raise MapSpecError(f"unknown source kind {d['kind']!r}")


def prepare_source(A, profile=None, seed=0, tol=1e-8):
    """Block reader for ``A``: condensation route for SMAs, quotient route otherwise."""
    if getattr(A, "quasi_order", None) is not None:
        return SMABlockReader(A.quasi_order)
    if profile is None:
        profile = wedderburn_profile(A, seed, tol)
    isos = [split_simple_component(profile.quotient, c, seed, tol).tensor for c in profile.components]
    return QuotientBlockReader(profile.qmap.matrix, isos, profile.ks)


@dataclass
class ShrinkMapSpec:
    source: object  # SMABlockReader or QuotientBlockReader
    targets: list
    family: list
    order: list  # per target: list of (source block, repetition slot, transposed)

    @property
    def ks(self):
        return self.source.ks

    def covers_all(self):
        p = len(self.ks)
        return all(any(x[i] > 0 for x in self.family) for i in range(p))

    def to_json(self):
        return {
            "source": self.source.to_json(),
            "targets": list(self.targets),
            "family": [list(x) for x in self.family],
            "order": [[[i, s, bool(t)] for i, s, t in o] for o in self.order],
        }

    @classmethod
    def from_json(cls, d):
        spec = cls(
            reader_from_json(d["source"]),
            [int(m) for m in d["targets"]],
            [tuple(int(v) for v in x) for x in d["family"]],
            [[(int(i), int(s), bool(t)) for i, s, t in o] for o in d["order"]],
        )
        _validate(spec)
        return spec


def _validate(spec):
    ks = spec.ks
    if len(spec.family) != len(spec.targets) or len(spec.order) != len(spec.targets):
        raise MapSpecError("family, order and targets differ in length")
    for j, (x, m, o) in enumerate(zip(spec.family, spec.targets, spec.order)):
        if len(x) != len(ks) or any(v < 0 for v in x):
            raise MapSpecError(f"family entry {j} is not a non-negative {len(ks)}-vector")
        if sum(k * v for k, v in zip(ks, x)) != m:
            raise MapSpecError(f"family entry {j} does not solve sum k_i x_i = {m}")
        counts = [0] * len(ks)
        for i, _, _ in o:
            counts[i] += 1
        if counts != list(x):
            raise MapSpecError(f"block order {j} disagrees with the family counts")


def build_block_map(source, targets, family):
    """Witness map for a family of solutions; blocks ascend by source index, repetitions contiguous."""
    family = [tuple(int(v) for v in x) for x in family]
    order = [[(i, s, False) for i, c in enumerate(x) for s in range(c)] for x in family]
    spec = ShrinkMapSpec(source, [int(m) for m in targets], family, order)
    _validate(spec)
    return spec


def evaluate_map(spec, a):
    """Block-diagonal image of ``a`` of size ``sum(targets)``."""
    if not isinstance(a, Element):
        raise MapSpecError("expected an algebra element")
    if a.algebra.dim != spec.source.dim:
        raise MapSpecError(f"element of dimension {a.algebra.dim} does not match the source ({spec.source.dim})")
    blocks = spec.source.blocks(a)
    out = []
    for o in spec.order:
        for i, _, transposed in o:
            out.append(blocks[i].T if transposed else blocks[i])
    return block_diag(*out) if out else np.zeros((0, 0), dtype=complex)


def target_blocks(spec, M):
    """Split an image matrix into its target blocks."""
    out, off = [], 0
    for m in spec.targets:
        out.append(M[off:off + m, off:off + m])
        off += m
    return out
