"""Lyndon-word combinatorics under the right-to-left order.

A word is Lyndon when it is strictly larger than every proper left factor.
Good Lyndon words biject with the positive roots; the table is computed by
height induction: the word of a non-simple root is the smallest
concatenation l(b1)l(b2) over root decompositions with l(b1) < l(b2).

The opposite-order ("left") variants mirror everything through word
reversal: left-Lyndon words are smaller than every proper right factor in
the reversed-alphabet, left-to-right order, and the table induction takes
the largest concatenation instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum, content, height
from .shuffle import Word, word_key, word_key_opposite


class WordOrder:
    """Bundles the comparison and factorization conventions of one reading."""

    def __init__(self, name, key, take_min, split_from_suffix):
        self.name = name
        self.key = key
        self.take_min = take_min  # table induction picks min (right) or max (left)
        self.split_from_suffix = split_from_suffix

    def lt(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)

    def is_lyndon(self, w: Word) -> bool:
        if not w:
            raise ValueError("the empty word is neither Lyndon nor not")
        if self.split_from_suffix:
            # larger than every proper left factor
            kw = self.key(w)
            return all(self.key(w[:j]) < kw for j in range(1, len(w)))
        # left reading: smaller than every proper right factor
        kw = self.key(w)
        return all(kw < self.key(w[j:]) for j in range(1, len(w)))

    def standard_factorization(self, w: Word):
        """Split l = l1 l2; the distinguished part is the longest Lyndon
        proper suffix (right reading) or prefix (left reading)."""
        if len(w) < 2:
            raise ValueError("letters do not factor")
        if not self.is_lyndon(w):
            raise ValueError(f"{w} is not Lyndon in the {self.name} reading")
        if self.split_from_suffix:
            for j in range(1, len(w)):
                if self.is_lyndon(w[j:]):
                    return w[:j], w[j:]
        else:
            for j in range(len(w) - 1, 0, -1):
                if self.is_lyndon(w[:j]):
                    return w[:j], w[j:]
        raise AssertionError("unreachable: single letters are Lyndon")

    def best(self, words):
        key = self.key
        return min(words, key=key) if self.take_min else max(words, key=key)


RIGHT = WordOrder("right", word_key, take_min=True, split_from_suffix=True)
LEFT = WordOrder("left", word_key_opposite, take_min=False, split_from_suffix=False)
# Left-to-right reading with the natural letter order; only used to check
# readings that are insensitive to the direction (G_2).
CLASSICAL_LEFT = WordOrder(
    "classical-left", lambda w: tuple(w), take_min=False, split_from_suffix=False
)


def is_lyndon(w: Word, order: WordOrder = RIGHT) -> bool:
    return order.is_lyndon(tuple(w))


def std_factorization(w: Word, order: WordOrder = RIGHT):
    return order.standard_factorization(tuple(w))


def canonical_factorization(w: Word, order: WordOrder = RIGHT) -> list[Word]:
    """The unique factorization into a non-increasing product of Lyndon words."""
    w = tuple(w)
    if not w:
        raise ValueError("empty word has no canonical factorization")

    @lru_cache(maxsize=None)
    def solve(rest: Word, bound):
        # bound: key of the previous factor; next factor must not exceed it
        if not rest:
            return ()
        for j in range(len(rest), 0, -1):
            head = rest[:j]
            if not order.is_lyndon(head):
                continue
            k = order.key(head)
            if bound is not None and k > bound:
                continue
            tail = solve(rest[j:], k)
            if tail is not None:
                return (head,) + tail
        return None

    out = solve(w, None)
    solve.cache_clear()
    if out is None:
        raise AssertionError(f"no Lyndon factorization found for {w}")
    return list(out)


def canonical_factorization_brute(w: Word, order: WordOrder = RIGHT) -> list[list[Word]]:
    """All non-increasing Lyndon factorizations, by exhaustive splitting."""
    w = tuple(w)

    def rec(rest, bound):
        if not rest:
            yield ()
            return
        for j in range(1, len(rest) + 1):
            head = rest[:j]
            if not order.is_lyndon(head):
                continue
            k = order.key(head)
            if bound is not None and k > bound:
                continue
            for tail in rec(rest[j:], k):
                yield (head,) + tail

    return [list(f) for f in rec(w, None)]


class LyndonTable:
    """The bijection positive roots <-> good Lyndon words for one reading."""

    def __init__(self, datum: CartanDatum, order_name: str, words: tuple[Word, ...]):
        self.datum = datum
        self.order_name = order_name
        self.words = words  # aligned with datum.positive_roots
        self._by_root = dict(zip(datum.positive_roots, words))
        self._by_word = {w: r for r, w in self._by_root.items()}

    def word_of(self, root) -> Word:
        return self._by_root[tuple(root)]

    def root_of(self, w: Word):
        return self._by_word[tuple(w)]

    def __contains__(self, w) -> bool:
        return tuple(w) in self._by_word

    def _key(self):
        return word_key if self.order_name == "right" else word_key_opposite

    def by_height(self) -> dict[int, list[Word]]:
        out: dict[int, list[Word]] = {}
        for w in self.words:
            out.setdefault(len(w), []).append(w)
        for h in out:
            out[h].sort(key=self._key())
        return out

    def root_order_position(self):
        """Total order on positive roots induced by the word order."""
        ranked = sorted(self.words, key=self._key())
        pos = {w: n for n, w in enumerate(ranked)}
        return {root: pos[w] for root, w in self._by_root.items()}

    def __repr__(self):
        return f"LyndonTable({self.datum}, {self.order_name}, {len(self.words)} words)"


def _table(datum: CartanDatum, order: WordOrder) -> LyndonTable:
    roots = datum.positive_roots
    by_height: dict[int, list] = {}
    for r in roots:
        by_height.setdefault(height(r), []).append(r)
    word_of: dict[tuple, Word] = {}
    for h in sorted(by_height):
        for beta in by_height[h]:
            if h == 1:
                word_of[beta] = (beta.index(1),)
                continue
            candidates = []
            for b1 in roots:
                if height(b1) >= h:
                    continue
                b2 = tuple(x - y for x, y in zip(beta, b1))
                if any(c < 0 for c in b2) or b2 not in datum._root_set:
                    continue
                w1, w2 = word_of[b1], word_of[tuple(b2)]
                if order.lt(w1, w2):
                    candidates.append(w1 + w2)
            if not candidates:
                raise AssertionError(f"no admissible decomposition for root {beta}")
            word_of[beta] = order.best(candidates)
    words = tuple(word_of[r] for r in roots)
    if len(set(words)) != len(words):
        raise AssertionError("table words are not pairwise distinct")
    for r, w in zip(roots, words):
        if content(datum, w) != r:
            raise AssertionError(f"word {w} has wrong content for {r}")
    return LyndonTable(datum=datum, order_name=order.name, words=words)


@lru_cache(maxsize=None)
def good_lyndon_table(datum: CartanDatum) -> LyndonTable:
    return _table(datum, RIGHT)


@lru_cache(maxsize=None)
def opposite_table(datum: CartanDatum) -> LyndonTable:
    return _table(datum, LEFT)


def table_for_order(datum: CartanDatum, order: WordOrder) -> LyndonTable:
    return _table(datum, order)


def is_good(datum: CartanDatum, w: Word, opposite: bool = False) -> bool:
    """Good = every canonical Lyndon factor lies in the table."""
    table = opposite_table(datum) if opposite else good_lyndon_table(datum)
    order = LEFT if opposite else RIGHT
    try:
        factors = canonical_factorization(w, order)
    except ValueError:
        return False
    return all(f in table for f in factors)


def good_words(datum: CartanDatum, nu, opposite: bool = False) -> list[Word]:
    """All non-increasing products of good Lyndon words of total content nu."""
    nu = tuple(nu)
    table = opposite_table(datum) if opposite else good_lyndon_table(datum)
    order = LEFT if opposite else RIGHT
    entries = sorted(table.words, key=order.key, reverse=True)
    croots = [content(datum, w) for w in entries]
    out = []

    def rec(idx, remaining, acc):
        if not any(remaining):
            out.append(tuple(x for part in acc for x in part))
            return
        for k in range(idx, len(entries)):
            c = croots[k]
            if all(r >= ci for r, ci in zip(remaining, c)):
                rec(k, tuple(r - ci for r, ci in zip(remaining, c)), acc + [entries[k]])

    rec(0, nu, [])
    out.sort(key=word_key if not opposite else word_key_opposite)
    return out


def kostant_partition_count(datum: CartanDatum, nu) -> int:
    """Number of multisets of positive roots summing to nu (brute force)."""
    roots = sorted(datum.positive_roots)

    def rec(idx, remaining):
        if not any(remaining):
            return 1
        total = 0
        for k in range(idx, len(roots)):
            c = roots[k]
            if all(r >= ci for r, ci in zip(remaining, c)):
                total += rec(k, tuple(r - ci for r, ci in zip(remaining, c)))
        return total

    return rec(0, tuple(nu))
