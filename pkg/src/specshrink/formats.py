"""JSON input formats: structure constants, quasi-orders and matrix blocks."""

import json
from dataclasses import dataclass

from .algebra import make_algebra
from .scalars import GaussRational
from .sma import QuasiOrder, block_diagonal_quasi_order, sma_algebra

KINDS = ("structure", "pairs", "matrix_blocks")


class SchemaError(ValueError):
    def __init__(self, where, message):
        self.where = where
        super().__init__(f"{where}: {message}")


@dataclass
class InputSpec:
    kind: str  # "structure-constants", "quasi-order" or "matrix-blocks"
    payload: dict


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(where, f"expected an integer, got {json.dumps(x)}")
    return x


def _scalar(q, where):
    if not isinstance(q, list) or len(q) != 4:
        raise SchemaError(where, "expected [re_num, re_den, im_num, im_den]")
    a, b, c, d = (_int(v, f"{where}[{t}]") for t, v in enumerate(q))
    if b <= 0 or d <= 0:
        raise SchemaError(where, "denominators must be positive")
    return GaussRational.from_parts(a, b, c, d)


def classify(data, where="$"):
    if not isinstance(data, dict):
        raise SchemaError(where, "top level must be an object")
    present = [k for k in KINDS if k in data]
    if len(present) != 1:
        raise SchemaError(where, f"expected exactly one of {list(KINDS)}, found {present}")
    kind = {"structure": "structure-constants", "pairs": "quasi-order", "matrix_blocks": "matrix-blocks"}[present[0]]
    return InputSpec(kind, data)


def algebra_from_json(data, where="$"):
    n = _int(data.get("dim"), f"{where}.dim")
    if n < 1:
        raise SchemaError(f"{where}.dim", "dimension must be positive")
    unit = data.get("unit")
    if not isinstance(unit, list) or len(unit) != n:
        raise SchemaError(f"{where}.unit", f"expected a list of {n} scalars")
    unit = [_scalar(u, f"{where}.unit[{t}]") for t, u in enumerate(unit)]
    entries = []
    structure = data.get("structure")
    if not isinstance(structure, list):
        raise SchemaError(f"{where}.structure", "expected a list of entries")
    for t, e in enumerate(structure):
        w = f"{where}.structure[{t}]"
        if not isinstance(e, list) or len(e) != 7:
            raise SchemaError(w, "expected [i, j, k, re_num, re_den, im_num, im_den]")
        i, j, k = (_int(v, f"{w}[{s}]") for s, v in enumerate(e[:3]))
        for s, idx in enumerate((i, j, k)):
            if not 0 <= idx < n:
                raise SchemaError(f"{w}[{s}]", f"index {idx} out of range 0..{n - 1}")
        entries.append((i, j, k, _scalar(e[3:], w)))
    return make_algebra(n, entries, unit, data.get("labels"))


def algebra_to_json(A):
    entries = []
    for (i, j), p in sorted(A.structure.items()):
        for k, c in sorted(p.items()):
            entries.append([i, j, k] + c.to_parts())
    out = {"dim": A.dim, "unit": [u.to_parts() for u in A.unit], "structure": entries}
    if A.labels:
        out["labels"] = list(A.labels)
    return out


def quasi_order_from_json(data, where="$", close=False, reflexive_close=False):
    n = _int(data.get("n"), f"{where}.n")
    if n < 1:
        raise SchemaError(f"{where}.n", "n must be positive")
    pairs = data.get("pairs")
    if not isinstance(pairs, list):
        raise SchemaError(f"{where}.pairs", "expected a list of [i, j] pairs")
    out = []
    for t, pr in enumerate(pairs):
        w = f"{where}.pairs[{t}]"
        if not isinstance(pr, list) or len(pr) != 2:
            raise SchemaError(w, "expected [i, j]")
        i, j = _int(pr[0], f"{w}[0]"), _int(pr[1], f"{w}[1]")
        if not (1 <= i <= n and 1 <= j <= n):
            raise SchemaError(w, f"indices must lie in 1..{n}")
        out.append((i, j))
    return QuasiOrder.from_pairs(n, out, one_based=True, close=close, reflexive_close=reflexive_close)


def parse_input(source, close=False, reflexive_close=False):
    """Load an algebra from a path or parsed JSON; returns ``(Algebra, QuasiOrder or None)``.

    Quasi-order and matrix-block inputs keep their SMA certificate on
    ``Algebra.quasi_order``.
    """
    if isinstance(source, dict):
        data = source
    else:
        try:
            with open(source) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{source}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    spec = classify(data)
    if spec.kind == "structure-constants":
        return algebra_from_json(data), None
    if spec.kind == "quasi-order":
        rho = quasi_order_from_json(data, close=close, reflexive_close=reflexive_close)
        return sma_algebra(rho), rho
    blocks = data["matrix_blocks"]
    if not isinstance(blocks, list) or not blocks:
        raise SchemaError("$.matrix_blocks", "expected a nonempty list of block sizes")
    ks = [_int(k, f"$.matrix_blocks[{t}]") for t, k in enumerate(blocks)]
    if any(k < 1 for k in ks):
        raise SchemaError("$.matrix_blocks", "block sizes must be positive")
    rho = block_diagonal_quasi_order(ks)
    return sma_algebra(rho), rho

