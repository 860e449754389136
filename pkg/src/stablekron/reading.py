"""Reading words of weight orbits and the lattice count.

Steps carry a total order (move-up < dummy < move-down, refined within
each kind); the reading word of an orbit sorts the (step, frame) pairs of
any member by that order, tie-breaking equal steps by weakly decreasing
frame.  Counting the semistandard orbits with lattice reading word gives
the stable Kronecker coefficient on the supported families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbits import WeightedOrbit, enumerate_sstd, frame_of
from .partitions import Partition
from .tableaux import (
    KroneckerTableau,
    Step,
    TripleClass,
    UnsupportedFamily,
    classify,
)


def step_compare(a: Step, b: Step) -> int:
    """-1, 0 or 1 as a sorts before, equal to, or after b."""
    ka, kb = a.sort_key, b.sort_key
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class ReadingWord:
    steps: tuple[Step, ...]
    frames: tuple[int, ...]

    def __str__(self) -> str:
        top = " ".join(str(st) for st in self.steps)
        bottom = " ".join(str(f) for f in self.frames)
        return f"[{top} | {bottom}]"


def reading_word(o: WeightedOrbit) -> ReadingWord:
    """The sorted 2 x s array of steps and frames; member-independent."""
    return reading_word_of(o.representative, o.weight)


def reading_word_of(t: KroneckerTableau, mu: Partition) -> ReadingWord:
    pairs = [
        (st, frame_of(k, mu)) for k, st in enumerate(t.steps, start=1)
    ]
    pairs.sort(key=lambda sf: (sf[0].sort_key, -sf[1]))
    return ReadingWord(
        tuple(st for st, _ in pairs), tuple(f for _, f in pairs)
    )


def is_lattice(w: ReadingWord) -> bool:
    """Every prefix of the frame row holds at least as many i as i+1."""
    counts: dict[int, int] = {}
    for f in w.frames:
        counts[f] = counts.get(f, 0) + 1
        if f > 1 and counts[f] > counts.get(f - 1, 0):
            return False
    return True


def stable_kronecker_copieri(lam: Partition, nu: Partition, mu: Partition) -> int:
    """The lattice count: semistandard orbits with lattice reading word.

    Only defined on the families with a quotient basis; raises
    UnsupportedFamily otherwise.
    """
    tag = classify(lam, nu, mu)
    if tag not in (TripleClass.MAXIMAL_DEPTH, TripleClass.ONE_ROW_PAIR):
        raise UnsupportedFamily(
            f"triple ({lam!r}, {nu!r}, {mu!r}) classifies as {tag.value}"
        )
    orbits = enumerate_sstd(lam, nu, mu.size, mu)
    return sum(1 for o in orbits if is_lattice(reading_word(o)))


def stable_kronecker(
    lam: Partition, nu: Partition, mu: Partition, fallback: bool = False
) -> tuple[int, str]:
    """Convenience router: the lattice count where supported, else the
    character oracle when fallback is requested.  Returns (value, method)
    so the engine used is never hidden."""
    try:
        return stable_kronecker_copieri(lam, nu, mu), "copieri"
    except UnsupportedFamily:
        if not fallback:
            raise
    from .characters import stable_kronecker_oracle

    return stable_kronecker_oracle(lam, nu, mu), "oracle"
