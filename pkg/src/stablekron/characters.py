"""Independent oracles: symmetric-group characters, Kronecker
coefficients and their stable limits, Littlewood-Richardson coefficients,
Kostka numbers and standard-tableaux counts.

Everything here is exact integer arithmetic and deliberately shares no
code with the path/orbit pipeline, so the two can cross-validate each
other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition, contains, pad


class SizeMismatch(ValueError):
    """Character and coefficient arguments must partition the same n."""


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, lex-descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of every size 0..n."""
    return [Partition(p) for m in range(n + 1) for p in partitions_of(m)]


def centralizer_order(rho) -> int:
    """z_rho = prod_i i^{m_i} m_i! over cycle-length multiplicities m_i."""
    z = 1
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    for i, m in mult.items():
        z *= i**m * math.factorial(m)
    return z


@dataclass(frozen=True)
class CycleType:
    rho: Partition

    @property
    def z(self) -> int:
        return centralizer_order(self.rho)

    @property
    def size(self) -> int:
        return self.rho.size


# Shared read-mostly memo table; inserts are idempotent so concurrent use
# is benign.  Keyed on (shape, remaining cycles), largest cycle stripped
# first.
_CHAR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _border_strips(lam: tuple[int, ...], k: int):
    """All removals of a length-k border strip from lam via beta-numbers.

    Yields (smaller shape, strip height).
    """
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        shape = tuple(
            x - (length - 1 - i) for i, x in enumerate(new_beta)
        )
        while shape and shape[-1] == 0:
            shape = shape[:-1]
        yield shape, height


def _char(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    key = (lam, rho)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    k, rest = rho[0], rho[1:]
    value = 0
    for shape, height in _border_strips(lam, k):
        term = _char(shape, rest)
        value += -term if height % 2 else term
    _CHAR_CACHE[key] = value
    return value


def character(lam: Partition, rho) -> int:
    """chi^lam at cycle type rho, by rim-hook recursion."""
    rho_parts = rho.rho if isinstance(rho, CycleType) else Partition(rho)
    if lam.size != rho_parts.size:
        raise SizeMismatch(f"|{lam!r}| != |{rho_parts!r}|")
    return _char(tuple(lam), tuple(rho_parts))


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """g(lam, mu, nu) = sum_rho chi^lam chi^mu chi^nu / z_rho."""
    n = lam.size
    if mu.size != n or nu.size != n:
        raise SizeMismatch("all three partitions must have equal size")
    nfact = math.factorial(n)
    total = 0
    for rho in partitions_of(n):
        term = _char(tuple(lam), rho) * _char(tuple(mu), rho) * _char(tuple(nu), rho)
        if term:
            total += term * (nfact // centralizer_order(rho))
    assert total % nfact == 0, "character sum must be an integer multiple of n!"
    value = total // nfact
    assert value >= 0
    return value


def padded_kronecker(lam: Partition, nu: Partition, mu: Partition, n: int) -> int:
    """g of the three partitions padded to total n."""
    return kronecker(pad(lam, n), pad(nu, n), pad(mu, n))


def min_padding(lam: Partition, nu: Partition, mu: Partition) -> int:
    """Smallest n for which all three pads are partitions."""
    return max(
        (p.size + (p[0] if p else 0) for p in (lam, nu, mu)), default=0
    )


def stable_kronecker_oracle(lam: Partition, nu: Partition, mu: Partition) -> int:
    """Limit of the padded coefficients under growing first rows.

    The sequence is weakly increasing and stabilizes once the first rows
    are long enough, but it can plateau early (e.g. two equal values
    followed by another increase), so two consecutive agreeing n are only
    accepted past the conservative bound |lam| + |nu| + |mu| + largest
    first row.
    """
    slack = max((p[0] for p in (lam, nu, mu) if p), default=0)
    bound = lam.size + nu.size + mu.size + slack
    n = max(min_padding(lam, nu, mu), bound, 1)
    prev = padded_kronecker(lam, nu, mu, n)
    while True:
        n += 1
        cur = padded_kronecker(lam, nu, mu, n)
        if cur == prev:
            return cur
        prev = cur


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^nu_{lam,mu}: column-strict fillings of nu/lam with content mu
    whose reverse reading word is a lattice permutation.

    Enumerated directly over skew fillings; independent of the path
    machinery.
    """
    if lam.size + mu.size != nu.size or not contains(lam, nu):
        return 0
    if mu.size == 0:
        return 1
    cells = [
        (i, j)
        for i in range(len(nu))
        for j in range(lam.row(i + 1), nu[i])
    ]
    grid: dict[tuple[int, int], int] = {}
    remaining = list(mu)
    count = 0

    def fill(idx: int):
        nonlocal count
        if idx == len(cells):
            if _is_lr_word(_reverse_word(nu, lam, grid)):
                count += 1
            return
        i, j = cells[idx]
        lo = grid.get((i, j - 1), 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            above = grid.get((i - 1, j))
            if above is not None and above >= v:
                continue
            grid[(i, j)] = v
            remaining[v - 1] -= 1
            fill(idx + 1)
            remaining[v - 1] += 1
            del grid[(i, j)]

    fill(0)
    return count


def _reverse_word(nu, lam, grid) -> list[int]:
    word = []
    for i in range(len(nu)):
        for j in range(nu[i] - 1, lam.row(i + 1) - 1, -1):
            word.append(grid[(i, j)])
    return word


def _is_lr_word(word: list[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def kostka(beta: Partition, content) -> int:
    """Semistandard fillings of shape beta with the given content.

    The content may be any composition (tuple of nonnegative counts).
    """
    content = tuple(content)
    if beta.size != sum(content):
        raise SizeMismatch(f"|{beta!r}| != |{content}|")
    if beta.size == 0:
        return 1
    remaining = list(content)
    row_above: list[list[int]] = []
    count = 0

    def fill(i: int, j: int, row: list[int]):
        nonlocal count
        if i == len(beta):
            count += 1
            return
        if j == beta[i]:
            row_above.append(row)
            fill(i + 1, 0, [])
            row_above.pop()
            return
        lo = row[j - 1] if j else 1
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if i and row_above[-1][j] >= v:
                continue
            remaining[v - 1] -= 1
            row.append(v)
            fill(i, j + 1, row)
            row.pop()
            remaining[v - 1] += 1

    fill(0, 0, [])
    return count


def standard_count(mu: Partition) -> int:
    """f^mu by the hook length formula."""
    if not mu:
        return 1
    conj = [sum(1 for p in mu if p > j) for j in range(mu[0])]
    result = math.factorial(mu.size)
    for i, p in enumerate(mu):
        for j in range(p):
            result //= (p - j) + (conj[j] - i) - 1
    return result


def save_character_cache(path: str) -> None:
    """Write the memo table as sorted "shape|cycles|value" lines."""
    lines = sorted(
        f"{','.join(map(str, lam)) or '0'}|{','.join(map(str, rho)) or '0'}|{v}"
        for (lam, rho), v in _CHAR_CACHE.items()
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))


def load_character_cache(path: str) -> int:
    """Merge entries from a cache file; returns the number loaded."""
    loaded = 0
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            lam_s, rho_s, val = line.split("|")
            lam = () if lam_s == "0" else tuple(int(x) for x in lam_s.split(","))
            rho = () if rho_s == "0" else tuple(int(x) for x in rho_s.split(","))
            _CHAR_CACHE[(lam, rho)] = int(val)
            loaded += 1
    return loaded
