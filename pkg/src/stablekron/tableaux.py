"""Paths on the partition-algebra branching graph.

A path of length s from lam to nu is a sequence of integral steps, each
removing a box (or nothing) and then adding a box (or nothing).  This
module enumerates the full path sets, the quotient subsets for the two
families where they are defined (maximal depth and one-row pairs), the
adjacent-step swap, and the classification of triples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import total_ordering

from .partitions import (
    Dominance,
    Partition,
    add_box,
    contains,
    intersect,
    remove_box,
)


class UnsupportedFamily(ValueError):
    """The quotient basis is only defined for maximal-depth and one-row triples."""


class InsufficientLength(ValueError):
    """A path of the requested length cannot hold the target partition."""


class ShapeMismatch(ValueError):
    """Tableaux compared for dominance must share length and start."""


class StepKind(enum.Enum):
    MOVE_UP = "move-up"
    DUMMY = "dummy"
    MOVE_DOWN = "move-down"


@total_ordering
@dataclass(frozen=True, slots=True)
class Step:
    """One integral step: remove a box in row ``remove_row``, add one in
    row ``add_row``.  Row 0 means no change at that half-level."""

    remove_row: int
    add_row: int

    def __post_init__(self):
        if self.remove_row < 0 or self.add_row < 0:
            raise ValueError("row indices must be >= 0")

    @classmethod
    def add(cls, i: int) -> "Step":
        return cls(0, i)

    @classmethod
    def remove(cls, i: int) -> "Step":
        return cls(i, 0)

    @classmethod
    def dummy(cls, i: int) -> "Step":
        return cls(i, i)

    @property
    def kind(self) -> StepKind:
        if self.remove_row > self.add_row:
            return StepKind.MOVE_UP
        if self.remove_row == self.add_row:
            return StepKind.DUMMY
        return StepKind.MOVE_DOWN

    @property
    def sort_key(self) -> tuple:
        """Key realizing the total order: move-up < dummy < move-down,
        refined within each kind (see reading.step_compare)."""
        p, q = self.remove_row, self.add_row
        if p > q:
            return (0, q, -p)
        if p == q:
            return (1, -p)
        return (2, -p, q)

    def __lt__(self, other: "Step") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        p, q = self.remove_row, self.add_row
        if p == q:
            return f"d{p}"
        if q == 0:
            return f"r{p}"
        if p == 0:
            return f"a{q}"
        return f"m({p},{q})"


def parse_step(text: str) -> Step:
    """Inverse of str(Step): "a2", "r1", "d0" or "m(p,q)"."""
    text = text.strip()
    if text.startswith("m(") and text.endswith(")"):
        p, q = (int(x) for x in text[2:-1].split(","))
        return Step(p, q)
    kind, arg = text[0], int(text[1:])
    if kind == "a":
        return Step.add(arg)
    if kind == "r":
        return Step.remove(arg)
    if kind == "d":
        return Step.dummy(arg)
    raise ValueError(f"cannot parse step {text!r}")


def apply_step(lam: Partition, st: Step):
    """Apply one step, or None when either half is illegal."""
    cur = lam
    if st.remove_row:
        cur = remove_box(cur, st.remove_row)
        if cur is None:
            return None
    if st.add_row:
        cur = add_box(cur, st.add_row)
    return cur


@dataclass(frozen=True)
class KroneckerTableau:
    """A path in the branching graph: a start partition plus its steps.

    Levels are recomputed on demand; two paths are equal iff their
    (start, steps) data agree.
    """

    start: Partition
    steps: tuple[Step, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def levels(self) -> list[Partition]:
        """The partitions at integer levels 0..s.  Raises if the path is invalid."""
        out = [self.start]
        for st in self.steps:
            nxt = apply_step(out[-1], st)
            if nxt is None:
                raise ValueError(f"invalid path: {self}")
            out.append(nxt)
        return out

    @property
    def end(self) -> Partition:
        return self.levels()[-1]

    def is_valid(self) -> bool:
        cur = self.start
        for st in self.steps:
            cur = apply_step(cur, st)
            if cur is None:
                return False
        return True

    @property
    def sort_key(self) -> tuple:
        return tuple(st.sort_key for st in self.steps)

    def __str__(self) -> str:
        return "·".join(str(st) for st in self.steps)


def parse_tableau(start: Partition, text: str) -> KroneckerTableau:
    """Parse the "r1·d1·a1" format (empty string is the empty path)."""
    text = text.strip()
    steps = tuple(parse_step(tok) for tok in text.split("·")) if text else ()
    return KroneckerTableau(start, steps)


class TripleClass(enum.Enum):
    MAXIMAL_DEPTH = "maximal-depth"
    ONE_ROW_PAIR = "one-row"
    CO_PIERI_HORIZONTAL = "co-pieri-horizontal"
    CO_PIERI_STAIRCASE = "co-pieri-staircase"
    UNKNOWN = "unknown"


def classify(lam: Partition, nu: Partition, mu: Partition) -> TripleClass:
    """Classify a triple into the families named by the counting rule.

    Precedence: maximal depth, then one-row, then the two further co-Pieri
    shapes; overlapping triples take the first matching tag.
    """
    if lam.size + mu.size == nu.size:
        return TripleClass.MAXIMAL_DEPTH
    if len(lam) <= 1 and len(nu) <= 1:
        return TripleClass.ONE_ROW_PAIR
    inter = intersect(lam, nu)
    lam_skew = _skew_is_horizontal(lam, inter)
    nu_skew = _skew_is_horizontal(nu, inter)
    if (
        lam_skew
        and nu_skew
        and mu.size == max(lam.size - inter.size, nu.size - inter.size)
    ):
        return TripleClass.CO_PIERI_HORIZONTAL
    if lam == nu and _is_staircase(lam) and mu.size <= lam[-1]:
        return TripleClass.CO_PIERI_STAIRCASE
    return TripleClass.UNKNOWN


def _skew_is_horizontal(outer: Partition, inner: Partition) -> bool:
    return all(outer.row(i) <= inner.row(i - 1) for i in range(2, len(outer) + 1))


def _is_staircase(lam: Partition) -> bool:
    # (dl, d(l-1), ..., 2d, d) for some d, l >= 1
    if not lam:
        return False
    d = lam[-1]
    l = len(lam)
    return all(lam[i] == d * (l - i) for i in range(l))


def _needed_steps(cur: Partition, nu: Partition) -> int:
    """Lower bound on steps to reach nu: each step removes and adds at most one box."""
    shared = intersect(cur, nu).size
    return max(cur.size - shared, nu.size - shared)


def _step_candidates(cur: Partition):
    """All legal (step, result) pairs from cur, in ascending step order."""
    out = [(Step.dummy(0), cur)]
    for q in range(1, len(cur) + 2):
        bigger = add_box(cur, q)
        if bigger is not None:
            out.append((Step.add(q), bigger))
    for p in range(1, len(cur) + 1):
        mid = remove_box(cur, p)
        if mid is None:
            continue
        out.append((Step.dummy(p), cur))
        out.append((Step.remove(p), mid))
        for q in range(1, len(mid) + 2):
            if q == p:
                continue
            bigger = add_box(mid, q)
            if bigger is not None:
                out.append((Step(p, q), bigger))
    out.sort(key=lambda sr: sr[0].sort_key)
    return out


def enumerate_std(lam: Partition, nu: Partition, s: int) -> list[KroneckerTableau]:
    """All paths of s integral steps from lam to nu, depth-first in step order."""
    results: list[KroneckerTableau] = []
    prefix: list[Step] = []

    def walk(cur: Partition, remaining: int):
        if remaining == 0:
            if cur == nu:
                results.append(KroneckerTableau(lam, tuple(prefix)))
            return
        for st, nxt in _step_candidates(cur):
            if _needed_steps(nxt, nu) > remaining - 1:
                continue
            prefix.append(st)
            walk(nxt, remaining - 1)
            prefix.pop()

    walk(lam, s)
    return results


def enumerate_std0(lam: Partition, nu: Partition, s: int) -> list[KroneckerTableau]:
    """The quotient-basis subset of enumerate_std.

    Maximal depth (s = |nu| - |lam|): the whole of Std, which consists of
    pure add paths.  One-row pairs: paths over {r(1), d(1), a(1)} whose
    total number of removals (every step with removal half in row 1, so
    d(1) counts too) is at most |lam|.  Anything else is unsupported.
    """
    if s == nu.size - lam.size:
        return _enumerate_pure_add(lam, nu, s)
    if len(lam) <= 1 and len(nu) <= 1:
        return _enumerate_one_row(lam, nu, s)
    raise UnsupportedFamily(
        f"no quotient basis for ({lam!r}, {nu!r}, s={s})"
    )


def _enumerate_pure_add(lam: Partition, nu: Partition, s: int) -> list[KroneckerTableau]:
    if not contains(lam, nu):
        return []
    results: list[KroneckerTableau] = []
    prefix: list[Step] = []

    def walk(cur: Partition, remaining: int):
        if remaining == 0:
            if cur == nu:
                results.append(KroneckerTableau(lam, tuple(prefix)))
            return
        for q in range(1, len(cur) + 2):
            nxt = add_box(cur, q)
            if nxt is None or not contains(nxt, nu):
                continue
            prefix.append(Step.add(q))
            walk(nxt, remaining - 1)
            prefix.pop()

    walk(lam, s)
    return results


_ONE_ROW_STEPS = (Step.remove(1), Step.dummy(1), Step.add(1))


def _enumerate_one_row(lam: Partition, nu: Partition, s: int) -> list[KroneckerTableau]:
    budget = lam.size
    results: list[KroneckerTableau] = []
    prefix: list[Step] = []

    def walk(cur: Partition, remaining: int, removals: int):
        if remaining == 0:
            if cur == nu:
                results.append(KroneckerTableau(lam, tuple(prefix)))
            return
        for st in _ONE_ROW_STEPS:
            if st.remove_row and removals + 1 > budget:
                continue
            nxt = apply_step(cur, st)
            if nxt is None or abs(nxt.size - nu.size) > remaining - 1:
                continue
            prefix.append(st)
            walk(nxt, remaining - 1, removals + (1 if st.remove_row else 0))
            prefix.pop()

    walk(lam, s, 0)
    return results


def swap(t: KroneckerTableau, k: int):
    """Exchange steps k and k+1 (1-indexed), or None when the exchanged
    path is not valid."""
    if not 1 <= k < t.length:
        raise IndexError(f"swap position {k} out of range for length {t.length}")
    before = t.levels()[k - 1]
    mid = apply_step(before, t.steps[k])
    if mid is None or apply_step(mid, t.steps[k - 1]) is None:
        return None
    steps = list(t.steps)
    steps[k - 1], steps[k] = steps[k], steps[k - 1]
    return KroneckerTableau(t.start, tuple(steps))


def most_dominant(lam: Partition, r: int) -> KroneckerTableau:
    """The path from the empty partition that idles, then fills lam row by row."""
    if r < lam.size:
        raise InsufficientLength(f"need at least {lam.size} steps for {lam!r}")
    steps = [Step.dummy(0)] * (r - lam.size)
    for i, part in enumerate(lam, start=1):
        steps.extend([Step.add(i)] * part)
    return KroneckerTableau(Partition(), tuple(steps))


def _level_dominance(a: Partition, b: Partition) -> Dominance:
    """Dominance of two levels of a path, which may hold different numbers
    of boxes.  A level with fewer boxes is the more dominant one: the
    partitions are compared as if padded by a long first row, which for
    equal sizes is the classical dominance order.  Realized by comparing
    tail sums (smaller tails dominate)."""
    ta = [sum(a[i:]) for i in range(len(a) + 1)]
    tb = [sum(b[i:]) for i in range(len(b) + 1)]
    depth = max(len(ta), len(tb))
    ta += [0] * (depth - len(ta))
    tb += [0] * (depth - len(tb))
    ge = all(x <= y for x, y in zip(ta, tb))
    le = all(x >= y for x, y in zip(ta, tb))
    if ge and le:
        return Dominance.EQUAL
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def tableau_dominance(a: KroneckerTableau, b: KroneckerTableau) -> Dominance:
    """Levelwise dominance over integer levels; requires equal shape data."""
    if a.length != b.length or a.start != b.start:
        raise ShapeMismatch("tableaux must share length and start")
    ge = le = True
    for x, y in zip(a.levels(), b.levels()):
        cmp = _level_dominance(x, y)
        if cmp is Dominance.INCOMPARABLE:
            return Dominance.INCOMPARABLE
        if cmp is Dominance.LESS:
            ge = False
        elif cmp is Dominance.GREATER:
            le = False
    if ge and le:
        return Dominance.EQUAL
    return Dominance.GREATER if ge else (Dominance.LESS if le else Dominance.INCOMPARABLE)
