"""Representability of block sizes and the existence decisions built on it.

A target block of size ``m`` can receive a continuous spectrum-shrinking map
from an algebra with profile ``ks`` exactly when ``m`` is a non-negative
integer combination of the ``ks``.  The coefficient vectors are the repetition
counts of the witness maps in :mod:`specshrink.mapbuilder`.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd


@dataclass(frozen=True)
class SolutionSet:
    ks: tuple
    m: int
    solutions: tuple  # lexicographically sorted tuples x with sum k_i x_i = m

    @property
    def exists(self):
        return bool(self.solutions)


@dataclass(frozen=True)
class Decision:
    verdict: str  # "yes", "no" or "undetermined"
    witness: tuple = None  # one solution vector per target block
    note: str = ""
    missed_index: int = None  # source block left uncovered by a non-covering witness

    def to_json(self):
        out = {
            "verdict": self.verdict,
            "witness": [list(x) for x in self.witness] if self.witness is not None else None,
            "note": self.note,
        }
        if self.missed_index is not None:
            out["missed_index"] = self.missed_index
        return out


def _check_ks(ks):
    ks = tuple(int(k) for k in ks)
    if not ks or any(k < 1 for k in ks):
        raise ValueError("ks must be a nonempty list of positive integers")
    return ks


def all_solutions(ks, m):
    """Every ``x`` in N_0^p with ``sum k_i x_i = m``, in lexicographic order."""
    ks = _check_ks(ks)
    if m < 0:
        raise ValueError("m must be non-negative")
    p = len(ks)
    out = []

    def rec(i, rest, prefix):
        if i == p - 1:
            if rest % ks[i] == 0:
                out.append(tuple(prefix) + (rest // ks[i],))
            return
        for x in range(rest // ks[i] + 1):
            prefix.append(x)
            rec(i + 1, rest - x * ks[i], prefix)
            prefix.pop()

    rec(0, m, [])
    return SolutionSet(ks, m, tuple(out))


def representable_table(ks, limit):
    """``table[m]`` is True when ``m`` is a non-negative combination of ``ks`` (0 <= m <= limit)."""
    ks = _check_ks(ks)
    table = [False] * (limit + 1)
    table[0] = True
    for m in range(1, limit + 1):
        table[m] = any(k <= m and table[m - k] for k in ks)
    return table


def covers(family, p):
    """Indices ``i`` used by some member of the family."""
    return {i for x in family for i in range(p) if x[i] > 0}


def decide_shrink(ks, ms):
    """Is there a continuous spectrum-shrinking map from profile ``ks`` into profile ``ms``?"""
    ks = _check_ks(ks)
    ms = _check_ks(ms)
    witness = []
    for j, m in enumerate(ms):
        sols = all_solutions(ks, m).solutions
        if not sols:
            return Decision("no", None, f"target block {j} of size {m} is not a non-negative combination of {list(ks)}")
        witness.append(sols[0])
    return Decision("yes", tuple(witness), "lexicographically smallest solution per target block")


def find_covering_family(ks, ms):
    """A family (one solution per target block) using every source index, or None."""
    ks = _check_ks(ks)
    ms = _check_ks(ms)
    p = len(ks)
    sets = [all_solutions(ks, m).solutions for m in ms]
    if any(not s for s in sets):
        return None
    full = frozenset(range(p))
    supports = [[frozenset(i for i in range(p) if x[i]) for x in s] for s in sets]

    # greedy: per block, the solution adding the most new indices (ties: lexicographic)
    chosen, covered = [], set()
    for s, sup in zip(sets, supports):
        best = max(range(len(s)), key=lambda t: (len(sup[t] - covered), -t))
        chosen.append(s[best])
        covered |= sup[best]
    if covered == full:
        return tuple(chosen)

    # exact search with pruning on what the remaining blocks could still add
    reach = [frozenset()] * (len(ms) + 1)
    for j in range(len(ms) - 1, -1, -1):
        reach[j] = reach[j + 1] | frozenset().union(*supports[j])
    if reach[0] != full:
        return None
    seen = set()

    def search(j, cov):
        if cov == full:
            return [sets[t][0] for t in range(j, len(ms))]
        if j == len(ms) or (cov | reach[j]) != full or (j, cov) in seen:
            return None
        seen.add((j, cov))
        order = sorted(range(len(sets[j])), key=lambda t: -len(supports[j][t] - cov))
        for t in order:
            rest = search(j + 1, cov | supports[j][t])
            if rest is not None:
                return [sets[j][t]] + rest
        return None

    found = search(0, frozenset())
    return tuple(found) if found is not None else None


def decide_preserve(ks, ms):
    """Is there a continuous spectrum-preserving map from profile ``ks`` into profile ``ms``?"""
    ks = _check_ks(ks)
    ms = _check_ks(ms)
    shrink = decide_shrink(ks, ms)
    if shrink.verdict == "no":
        return Decision("no", None, "no spectrum-shrinking map exists: " + shrink.note)
    fam = find_covering_family(ks, ms)
    if fam is None:
        return Decision("no", None, "every family of solutions leaves some source block unused")
    if covers(fam, len(ks)) != set(range(len(ks))):
        raise AssertionError("covering family failed validation")
    return Decision("yes", fam, "family covers every source block")


def forced_indices(ks, ms):
    """Source indices ``i`` for which some target equation has ``x_i > 0`` in every solution."""
    ks = _check_ks(ks)
    p = len(ks)
    forced = set()
    for m in ms:
        sols = all_solutions(ks, m).solutions
        for i in range(p):
            if sols and all(x[i] > 0 for x in sols):
                forced.add(i)
    return forced


OPEN_QUESTION_NOTE = (
    "every family of solutions covers every source block, but the source is not known to be "
    "isomorphic to a structural matrix algebra; whether all continuous spectrum-shrinking maps "
    "are then spectrum-preserving is an open question"
)


def decide_all_shrink_preserving(ks, ms, a_is_sma):
    """Is every continuous spectrum-shrinking map ``A -> B`` spectrum-preserving?

    "no" comes with a non-covering family (the witness for a shrinking map
    that is not preserving); "yes" needs an SMA source; otherwise the
    verdict is "undetermined".
    """
    ks = _check_ks(ks)
    ms = _check_ks(ms)
    p = len(ks)
    shrink = decide_shrink(ks, ms)
    if shrink.verdict == "no":
        return Decision("yes", None, "vacuous: no continuous spectrum-shrinking map exists")
    forced = forced_indices(ks, ms)
    missing = [i for i in range(p) if i not in forced]
    if missing:
        i = missing[0]
        fam = []
        for m in ms:
            sols = all_solutions(ks, m).solutions
            fam.append(next(x for x in sols if x[i] == 0))
        fam = tuple(fam)
        if i in covers(fam, p):
            raise AssertionError("non-covering witness failed validation")
        return Decision("no", fam, f"family never uses source block {i}", missed_index=i)
    if a_is_sma:
        return Decision("yes", None, "every family covers every source block and the source is an SMA")
    return Decision("undetermined", None, OPEN_QUESTION_NOTE)


def frobenius_number(ks):
    """Largest integer that is not a non-negative combination of ``ks``."""
    ks = _check_ks(ks)
    if len(ks) < 2:
        raise ValueError("a Frobenius number needs at least two generators")
    if 1 in ks:
        raise ValueError("no Frobenius number, 1 in ks")
    if reduce(gcd, ks) != 1:
        raise ValueError("generators must be coprime")
    a = min(ks)
    # once a consecutive representable values appear, every larger value is representable
    table = [True]
    run, last_gap, m = 0, 0, 0
    while run < a:
        m += 1
        ok = any(k <= m and table[m - k] for k in ks)
        table.append(ok)
        if ok:
            run += 1
        else:
            run, last_gap = 0, m
    return last_gap


def eigenvalue_selection_exists(ks):
    """Does the algebra admit a continuous spectrum-shrinking map into the scalars?"""
    ks = _check_ks(ks)
    return 1 in ks
