"""Finite-type Cartan data and root systems.

Node labelling conventions (fixed, not the generic Bourbaki ones):

* A_r, B_r, C_r, F_4, G_2: a chain 0 - 1 - ... - (r-1).
  B_r has the short root at node 0, C_r the long root at node 0,
  F_4 is short-short-long-long (0,1 short), G_2 has node 1 long.
* D_r: nodes 0 and 1 are the fork ends, both attached to node 2,
  then a chain 2 - 3 - ... - (r-1).
* E_r: a chain 0 - 1 - 3 - 4 - ... - (r-1) with node 2 attached to
  the branch node 3.

Roots are coefficient tuples on the simple roots (length = rank).
The default orientation directs every edge from the smaller to the
larger label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

RootVector = tuple  # coefficient tuple over the node labels

_SERIES = "ABCDEFG"

# |positive roots| per series, as a function of the rank
_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


def _validate(series: str, rank: int) -> None:
    ok = (
        (series == "A" and rank >= 1)
        or (series in ("B", "C") and rank >= 2)
        or (series == "D" and rank >= 4)
        or (series == "E" and rank in (6, 7, 8))
        or (series == "F" and rank == 4)
        or (series == "G" and rank == 2)
    )
    if not ok:
        raise ValueError(f"invalid finite type {series}_{rank}")


def _edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(rank - 1)]
    if series == "D":
        return [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, rank - 1)]
    if series == "E":
        return [(0, 1), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank - 1)]
    raise ValueError(series)


def _d_values(series: str, rank: int) -> tuple[int, ...]:
    if series in ("A", "D", "E"):
        return (1,) * rank
    if series == "B":
        return (1,) + (2,) * (rank - 1)
    if series == "C":
        return (2,) + (1,) * (rank - 1)
    if series == "F":
        return (1, 1, 2, 2)
    if series == "G":
        return (1, 3)
    raise ValueError(series)


@dataclass(frozen=True)
class CartanDatum:
    series: str
    rank: int
    labels: tuple[int, ...]
    d: tuple[int, ...]
    pairing: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    orientation: tuple[tuple[int, int], ...]
    positive_roots: tuple[RootVector, ...]

    @property
    def key(self):
        return (self.series, self.rank, self.orientation)

    def __repr__(self):
        return f"CartanDatum({self.series}{self.rank})"

    def simple_root(self, i: int) -> RootVector:
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0

    def form(self, v: RootVector, w: RootVector) -> int:
        """Symmetric bilinear form extended from the simple-root pairing."""
        total = 0
        for i, vi in enumerate(v):
            if not vi:
                continue
            row = self.pairing[i]
            total += vi * sum(wj * row[j] for j, wj in enumerate(w) if wj)
        return total

    def is_positive_root(self, v: RootVector) -> bool:
        return v in self._root_set

    @property
    def _root_set(self):
        cache = _ROOT_SET_CACHE.get(self.key)
        if cache is None:
            cache = frozenset(self.positive_roots)
            _ROOT_SET_CACHE[self.key] = cache
        return cache

    def twist_number(self, v: RootVector) -> int:
        """((v,v) - sum_i v_i (a_i,a_i)) / 2; the exponent attached to word reversal."""
        diag = sum(vi * self.pairing[i][i] for i, vi in enumerate(v))
        n2 = self.form(v, v) - diag
        assert n2 % 2 == 0
        return n2 // 2

    def serialize(self) -> str:
        payload = {
            "series": self.series,
            "rank": self.rank,
            "pairing": [list(row) for row in self.pairing],
            "orientation": [list(e) for e in self.orientation],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


_ROOT_SET_CACHE: dict = {}


def _positive_roots(rank, pairing, d) -> tuple[RootVector, ...]:
    """Closure under root strings, height by height.

    gamma = beta + alpha_i is a root iff the alpha_i-string through beta
    extends upward: q = p - 2(beta,alpha_i)/(alpha_i,alpha_i) >= 1 with
    p the number of downward steps that stay roots.
    """
    simples = []
    for i in range(rank):
        v = [0] * rank
        v[i] = 1
        simples.append(tuple(v))
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(rank):
                gamma = list(beta)
                gamma[i] += 1
                gamma = tuple(gamma)
                if gamma in roots:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                pair = sum(
                    bj * pairing[i][j] for j, bj in enumerate(beta) if bj
                )
                if p - pair // d[i] >= 1:
                    roots.add(gamma)
                    new.append(gamma)
        frontier = new
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


@lru_cache(maxsize=None)
def build_cartan(series: str, rank: int, orientation=None) -> CartanDatum:
    """Construct the datum for a finite type; see the module docstring for labels.

    ``orientation`` may override the default smaller-to-larger edge direction;
    it must contain exactly one of (i, j), (j, i) per diagram edge.
    """
    _validate(series, rank)
    edges = _edges(series, rank)
    d = _d_values(series, rank)
    pairing = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        pairing[i][i] = 2 * d[i]
    for i, j in edges:
        pairing[i][j] = pairing[j][i] = -lcm(d[i], d[j])
    cartan = tuple(
        tuple(2 * pairing[i][j] // pairing[i][i] for j in range(rank))
        for i in range(rank)
    )
    pairing = tuple(tuple(row) for row in pairing)

    if orientation is None:
        orientation = tuple(edges)
    else:
        orientation = tuple(tuple(e) for e in orientation)
        seen = {frozenset(e) for e in orientation}
        if seen != {frozenset(e) for e in edges} or len(orientation) != len(edges):
            raise ValueError("orientation must cover each diagram edge exactly once")

    roots = _positive_roots(rank, pairing, d)
    expected = _ROOT_COUNTS[series](rank)
    assert len(roots) == expected, (series, rank, len(roots), expected)

    return CartanDatum(
        series=series,
        rank=rank,
        labels=tuple(range(rank)),
        d=d,
        pairing=pairing,
        cartan=cartan,
        orientation=orientation,
        positive_roots=roots,
    )


def positive_roots(datum: CartanDatum) -> list[RootVector]:
    return list(datum.positive_roots)


def content(datum: CartanDatum, word) -> RootVector:
    """Letter-multiplicity vector of a word."""
    v = [0] * datum.rank
    for letter in word:
        if not 0 <= letter < datum.rank:
            raise ValueError(f"unknown letter {letter} for {datum}")
        v[letter] += 1
    return tuple(v)


def height(v: RootVector) -> int:
    return sum(v)


def datum_from_serialized(text: str) -> CartanDatum:
    payload = json.loads(text)
    orientation = tuple(tuple(e) for e in payload["orientation"])
    datum = build_cartan(payload["series"], payload["rank"], orientation)
    if [list(row) for row in datum.pairing] != payload["pairing"]:
        raise ValueError("serialized pairing does not match the reconstruction")
    return datum
