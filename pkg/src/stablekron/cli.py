"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
Partitions are written "a,b,c" ("0" or "" for the empty partition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import characters
from .characters import (
    SizeMismatch,
    kostka,
    kronecker,
    lr_coefficient,
    partitions_of,
    partitions_up_to,
    stable_kronecker_oracle,
    standard_count,
)
from .orbits import enumerate_sstd, to_classical
from .partitions import (
    FirstRowTooShort,
    Partition,
    contains,
    format_partition,
    parse_partition,
)
from .reading import is_lattice, reading_word, stable_kronecker_copieri
from .tableaux import (
    TripleClass,
    UnsupportedFamily,
    classify,
    enumerate_std,
    enumerate_std0,
    swap,
)

_CACHE_FILE = "characters.cache"


def _cache_path() -> str | None:
    cache_dir = os.environ.get("KRON_CACHE_DIR")
    if cache_dir and os.path.isdir(cache_dir):
        return os.path.join(cache_dir, _CACHE_FILE)
    return None


def _sub_partitions(nu: Partition) -> list[Partition]:
    """All partitions contained in nu."""
    out: list[Partition] = []

    def build(prefix: list[int], row: int, cap: int):
        out.append(Partition(prefix))
        if row >= len(nu):
            return
        for part in range(min(cap, nu[row]), 0, -1):
            prefix.append(part)
            build(prefix, row + 1, part)
            prefix.pop()

    build([], 0, nu[0] if nu else 0)
    return out


def sweep_maximal_depth(max_nu: int) -> list[dict]:
    """Lattice count vs Littlewood-Richardson over all maximal-depth
    triples with |nu| <= max_nu."""
    mismatches = []
    for m in range(max_nu + 1):
        for nu_parts in partitions_of(m):
            nu = Partition(nu_parts)
            for lam in _sub_partitions(nu):
                s = nu.size - lam.size
                for mu_parts in partitions_of(s):
                    mu = Partition(mu_parts)
                    got = stable_kronecker_copieri(lam, nu, mu)
                    want = lr_coefficient(lam, mu, nu)
                    if got != want:
                        mismatches.append(
                            {
                                "lambda": str(lam),
                                "nu": str(nu),
                                "mu": str(mu),
                                "copieri": got,
                                "oracle": want,
                            }
                        )
    return mismatches


def sweep_one_row(max_part: int, max_mu: int) -> list[dict]:
    """Lattice count vs character-oracle stable limit over one-row pairs."""
    mismatches = []
    for a in range(max_part + 1):
        for b in range(max_part + 1):
            lam = Partition((a,) if a else ())
            nu = Partition((b,) if b else ())
            for mu in partitions_up_to(max_mu):
                got = stable_kronecker_copieri(lam, nu, mu)
                want = stable_kronecker_oracle(lam, nu, mu)
                if got != want:
                    mismatches.append(
                        {
                            "lambda": str(lam),
                            "nu": str(nu),
                            "mu": str(mu),
                            "copieri": got,
                            "oracle": want,
                        }
                    )
    return mismatches


def sweep_dims(max_size: int, max_s: int) -> list[dict]:
    """Orbit-count identity |SStd| = sum_beta g*K against the oracles,
    over supported triples with |lam|, |nu| <= max_size and s <= max_s."""
    mismatches = []
    shapes = partitions_up_to(max_size)
    for lam in shapes:
        for nu in shapes:
            for s in range(max_s + 1):
                if s != nu.size - lam.size and not (len(lam) <= 1 and len(nu) <= 1):
                    continue
                betas = [Partition(b) for b in partitions_of(s)]
                gbar = {
                    beta: stable_kronecker_copieri(lam, nu, beta) for beta in betas
                }
                for mu in betas:
                    got = len(enumerate_sstd(lam, nu, s, mu))
                    want = sum(gbar[beta] * kostka(beta, mu) for beta in betas)
                    if got != want:
                        mismatches.append(
                            {
                                "lambda": str(lam),
                                "nu": str(nu),
                                "mu": str(mu),
                                "copieri": got,
                                "oracle": want,
                            }
                        )
    return mismatches


def _orbit_json(orbit, with_reading: bool) -> dict:
    tag = classify(orbit.representative.start, orbit.representative.end, orbit.weight)
    obj = {
        "weight": list(orbit.weight),
        "representative": str(orbit.representative),
        "size": orbit.size,
        "semistandard": True,
    }
    if tag is TripleClass.MAXIMAL_DEPTH:
        obj["classical"] = to_classical(orbit)
    if with_reading:
        word = reading_word(orbit)
        obj["reading"] = {
            "steps": [str(st) for st in word.steps],
            "frames": list(word.frames),
            "lattice": is_lattice(word),
        }
    return obj


def _orbit_dot(orbits) -> str:
    lines = ["digraph swaps {"]
    for idx, orbit in enumerate(orbits):
        bnd = set()
        acc = 0
        for part in orbit.weight[:-1]:
            acc += part
            bnd.add(acc)
        for m in orbit.members:
            lines.append(f'  "{idx}:{m}";')
            for k in range(1, m.length):
                if k in bnd:
                    continue
                other = swap(m, k)
                if other is not None and other.sort_key > m.sort_key:
                    lines.append(f'  "{idx}:{m}" -> "{idx}:{other}" [label="{k}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_count(args) -> int:
    lam, nu, mu = args.lam, args.nu, args.mu
    if args.method == "oracle":
        value, method = stable_kronecker_oracle(lam, nu, mu), "oracle"
    elif args.method == "copieri":
        value, method = stable_kronecker_copieri(lam, nu, mu), "copieri"
    else:
        try:
            value, method = stable_kronecker_copieri(lam, nu, mu), "copieri"
        except UnsupportedFamily:
            value, method = stable_kronecker_oracle(lam, nu, mu), "oracle"
    if args.format == "json":
        print(
            json.dumps(
                {
                    "lambda": str(lam),
                    "nu": str(nu),
                    "mu": str(mu),
                    "value": value,
                    "method": method,
                }
            )
        )
    else:
        print(f"{value} ({method})")
    return 0


def cmd_enumerate(args) -> int:
    lam, nu = args.lam, args.nu
    if args.kind in ("std", "std0"):
        if args.s is None:
            raise SystemExit2("enumerate std/std0 requires -s")
        paths = (
            enumerate_std(lam, nu, args.s)
            if args.kind == "std"
            else enumerate_std0(lam, nu, args.s)
        )
        if args.format == "json":
            print(json.dumps({"count": len(paths), "tableaux": [str(p) for p in paths]}))
        else:
            print(f"{len(paths)} tableaux")
            for p in paths:
                print(str(p))
        return 0
    if args.mu is None:
        raise SystemExit2("enumerate sstd/latt requires -m")
    mu = args.mu
    orbits = enumerate_sstd(lam, nu, mu.size, mu)
    if args.kind == "latt":
        orbits = [o for o in orbits if is_lattice(reading_word(o))]
    if args.dot:
        print(_orbit_dot(orbits))
        return 0
    if args.format == "json":
        print(
            json.dumps(
                {
                    "count": len(orbits),
                    "orbits": [_orbit_json(o, with_reading=True) for o in orbits],
                }
            )
        )
    else:
        print(f"{len(orbits)} orbits")
        for o in orbits:
            word = reading_word(o)
            flag = "lattice" if is_lattice(word) else "non-lattice"
            print(f"{o.representative}  size={o.size}  {word}  {flag}")
    return 0


def cmd_verify(args) -> int:
    if args.family == "maximal-depth":
        mismatches = sweep_maximal_depth(args.max_nu)
    elif args.family == "one-row":
        mismatches = sweep_one_row(args.max_part, args.max_mu)
    else:
        mismatches = sweep_dims(args.max_size, args.max_s)
    for miss in mismatches:
        print(
            "MISMATCH ({lambda}; {nu}; {mu}) copieri={copieri} oracle={oracle}".format(
                **miss
            )
        )
    print("PASS" if not mismatches else f"FAIL ({len(mismatches)} mismatches)")
    return 0 if not mismatches else 1


_CASE_LABELS = {
    TripleClass.MAXIMAL_DEPTH: "maximal depth: |lambda| + |mu| = |nu|",
    TripleClass.ONE_ROW_PAIR: "one-row pair (case i)",
    TripleClass.CO_PIERI_HORIZONTAL: "horizontal-strip skews (case ii)",
    TripleClass.CO_PIERI_STAIRCASE: "staircase (case iii)",
    TripleClass.UNKNOWN: "not a recognized family",
}


def cmd_classify(args) -> int:
    tag = classify(args.lam, args.nu, args.mu)
    if args.format == "json":
        print(json.dumps({"class": tag.value, "label": _CASE_LABELS[tag]}))
    else:
        print(f"{tag.value}: {_CASE_LABELS[tag]}")
    return 0


def cmd_oracle(args) -> int:
    if args.kind == "char":
        value = characters.character(args.lam, args.rho)
    elif args.kind == "kron":
        value = kronecker(args.lam, args.mu, args.nu)
    elif args.kind == "stable":
        value = stable_kronecker_oracle(args.lam, args.nu, args.mu)
    elif args.kind == "lr":
        value = lr_coefficient(args.lam, args.mu, args.nu)
    elif args.kind == "kostka":
        value = kostka(args.beta, args.mu)
    else:
        value = standard_count(args.mu)
    if args.format == "json":
        print(json.dumps({"value": value}))
    else:
        print(value)
    return 0


class SystemExit2(Exception):
    """Usage/domain error mapped to exit code 2."""


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablekron",
        description=(
            "Stable Kronecker coefficients via lattice Kronecker tableaux. "
            "The one-row family means lambda and nu are both one-row "
            "partitions (mu arbitrary)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triple(p, mu_default=Partition()):
        p.add_argument("-l", "--lam", type=_partition_arg, default=Partition())
        p.add_argument("-n", "--nu", type=_partition_arg, default=Partition())
        p.add_argument("-m", "--mu", type=_partition_arg, default=mu_default)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("count", help="compute one stable Kronecker coefficient")
    add_triple(p)
    p.add_argument("--method", choices=("auto", "copieri", "oracle"), default="auto")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list paths or orbits")
    p.add_argument("kind", choices=("std", "std0", "sstd", "latt"))
    add_triple(p, mu_default=None)
    p.add_argument("-s", type=int, default=None, help="path length (std/std0)")
    p.add_argument("--dot", action="store_true", help="emit the swap graph as DOT")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run an oracle-equivalence sweep")
    p.add_argument("family", choices=("maximal-depth", "one-row", "dims"))
    p.add_argument("--max-nu", type=int, default=6)
    p.add_argument("--max-part", type=int, default=4)
    p.add_argument("--max-mu", type=int, default=3)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--max-s", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="name the family of a triple")
    add_triple(p)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", help="evaluate one oracle directly")
    p.add_argument("kind", choices=("char", "kron", "stable", "lr", "kostka", "fstd"))
    add_triple(p)
    p.add_argument("-r", "--rho", type=_partition_arg, default=Partition())
    p.add_argument("-b", "--beta", type=_partition_arg, default=Partition())
    add_format(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache = _cache_path()
    if cache and os.path.exists(cache):
        characters.load_character_cache(cache)
    try:
        code = args.func(args)
    except (UnsupportedFamily, SizeMismatch, FirstRowTooShort, SystemExit2, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache:
        characters.save_character_cache(cache)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
