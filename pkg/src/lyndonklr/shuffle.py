"""Words over the node alphabet and the quantum shuffle product.

Words compare right to left: the last letters are compared first, and a
word is smaller than every proper right factor of itself (so the longer
word wins a tie going left).  ``word_key`` realizes this as a sortable key.

The shuffle product is computed by the defining two-term recursion on the
last letters; the closed interleaving formula is kept alongside as an
independent cross-check (see ``shuffle_words_closed``).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .cartan import CartanDatum, content
from .errors import ResourceCapError
from .qlaurent import LaurentPoly

Word = tuple  # tuple of int letters

_SENTINEL = 1 << 30  # larger than any node label

DEFAULT_HEIGHT_CAP = 14


def word_key(w: Word):
    """Sort key for the right-to-left order."""
    return tuple(reversed(w)) + (_SENTINEL,)


def word_cmp(a: Word, b: Word) -> int:
    ka, kb = word_key(a), word_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


def word_key_opposite(w: Word):
    """Sort key for the opposite-order reading (left to right, letters reversed)."""
    return tuple(-x for x in w)


def parse_word(text: str) -> Word:
    """CLI literal: comma-free digits for single-digit alphabets, else commas."""
    text = text.strip().strip("[]")
    if not text:
        return ()
    if "," in text or "." in text:
        sep = "," if "," in text else "."
        return tuple(int(p) for p in text.split(sep) if p != "")
    return tuple(int(ch) for ch in text)


def word_str(w: Word) -> str:
    if any(x > 9 for x in w):
        return "[" + ",".join(str(x) for x in w) + "]"
    return "[" + "".join(str(x) for x in w) + "]"


_SHUFFLE_CACHE: dict = {}


def _shuffle_words(datum: CartanDatum, u: Word, v: Word) -> dict:
    """Shuffle of two monomials: dict word -> LaurentPoly.

    Recursion on the last letters: with u = x.[a], v = y.[b],
      u * v = (x * v).[a] + q^{-(|x| + alpha_a, alpha_b)} (u * y).[b]
    and the empty word is the unit.
    """
    key = (datum.key, u, v)
    hit = _SHUFFLE_CACHE.get(key)
    if hit is not None:
        return hit
    if not u:
        out = {v: LaurentPoly.one()}
    elif not v:
        out = {u: LaurentPoly.one()}
    else:
        x, a = u[:-1], u[-1]
        y, b = v[:-1], v[-1]
        out = {}
        for w, c in _shuffle_words(datum, x, v).items():
            key2 = w + (a,)
            prev = out.get(key2)
            out[key2] = c if prev is None else prev + c
        pair = datum.pairing
        exp = -(
            sum(pair[letter][b] for letter in x) + pair[a][b]
        )
        qshift = LaurentPoly.q(exp)
        for w, c in _shuffle_words(datum, u, y).items():
            key2 = w + (b,)
            add = c * qshift
            prev = out.get(key2)
            out[key2] = add if prev is None else prev + add
    _SHUFFLE_CACHE[key] = out
    return out


def shuffle_words_closed(datum: CartanDatum, u: Word, v: Word) -> dict:
    """Independent closed form: sum over interleavings with crossing exponents.

    For each placement of the letters of u (kept in order) among those of v,
    the coefficient is q^{-e} where e sums the pairings (alpha_{u_s}, alpha_{v_t})
    over pairs that stay uncrossed (u_s placed before v_t).
    """
    n = len(u) + len(v)
    pair = datum.pairing
    out = {}
    for positions in combinations(range(n), len(u)):
        posset = set(positions)
        word = [None] * n
        for idx, p in enumerate(positions):
            word[p] = u[idx]
        vi = iter(v)
        vpos = []
        for p in range(n):
            if p not in posset:
                word[p] = next(vi)
                vpos.append(p)
        e = 0
        for s, ps in enumerate(positions):
            for t, pt in enumerate(vpos):
                if ps < pt:
                    e += pair[u[s]][v[t]]
        w = tuple(word)
        c = LaurentPoly.q(-e)
        prev = out.get(w)
        out[w] = c if prev is None else prev + c
    return out


class ShuffleElement:
    """Finite formal sum of words with LaurentPoly coefficients."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: CartanDatum, terms=None):
        self.datum = datum
        t = {}
        if terms:
            for w, c in terms.items():
                c = LaurentPoly.coerce(c)
                if c:
                    t[tuple(w)] = c
        self.terms = t

    # -- constructors ---------------------------------------------------

    @staticmethod
    def monomial(datum, w, coeff=1) -> "ShuffleElement":
        return ShuffleElement(datum, {tuple(w): LaurentPoly.coerce(coeff)})

    @staticmethod
    def letter(datum, i) -> "ShuffleElement":
        return ShuffleElement.monomial(datum, (i,))

    @staticmethod
    def zero(datum) -> "ShuffleElement":
        return ShuffleElement(datum)

    @staticmethod
    def unit(datum) -> "ShuffleElement":
        return ShuffleElement.monomial(datum, ())

    # -- structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self.datum.key == other.datum.key and self.terms == other.terms

    def __hash__(self):
        return hash((self.datum.key, frozenset(self.terms.items())))

    def coefficient_of(self, w) -> LaurentPoly:
        return self.terms.get(tuple(w), LaurentPoly.zero())

    def sorted_terms(self):
        return [(w, self.terms[w]) for w in sorted(self.terms, key=word_key)]

    def contents(self):
        return {content(self.datum, w) for w in self.terms}

    def homogeneous_content(self):
        cs = self.contents()
        if len(cs) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(cs))

    def min_word(self):
        """Smallest word with its coefficient; errors on the zero element."""
        if not self.terms:
            raise ValueError("zero element has no minimal word")
        w = min(self.terms, key=word_key)
        return w, self.terms[w]

    def max_word_opposite(self):
        if not self.terms:
            raise ValueError("zero element has no maximal word")
        w = max(self.terms, key=word_key_opposite)
        return w, self.terms[w]

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        out = ShuffleElement(self.datum)
        out.terms = t
        return out

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, scalar):
        if isinstance(scalar, ShuffleElement):
            return self.shuffle(scalar)
        scalar = LaurentPoly.coerce(scalar)
        if not scalar:
            return ShuffleElement(self.datum)
        out = ShuffleElement(self.datum)
        out.terms = {w: c * scalar for w, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def scale_exact_div(self, scalar: LaurentPoly) -> "ShuffleElement":
        out = ShuffleElement(self.datum)
        out.terms = {w: c.divexact(scalar) for w, c in self.terms.items()}
        return out

    def map_coeffs(self, fn) -> "ShuffleElement":
        return ShuffleElement(self.datum, {w: fn(c) for w, c in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, ShuffleElement) or other.datum.key != self.datum.key:
            raise ValueError("operands live over different Cartan data")

    # -- products ---------------------------------------------------------

    def shuffle(self, other: "ShuffleElement", cap: int = DEFAULT_HEIGHT_CAP) -> "ShuffleElement":
        self._check(other)
        if self.terms and other.terms:
            h = max(len(w) for w in self.terms) + max(len(w) for w in other.terms)
            if cap is not None and h > cap:
                raise ResourceCapError(
                    f"shuffle of height {h} exceeds the cap {cap}; raise --max-height"
                )
        out = ShuffleElement(self.datum)
        t = out.terms
        for wu, cu in self.terms.items():
            for wv, cv in other.terms.items():
                c = cu * cv
                for w, qc in _shuffle_words(self.datum, wu, wv).items():
                    add = qc * c
                    prev = t.get(w)
                    s = add if prev is None else prev + add
                    if s:
                        t[w] = s
                    else:
                        t.pop(w, None)
        return out

    def concat(self, other: "ShuffleElement") -> "ShuffleElement":
        self._check(other)
        out = ShuffleElement(self.datum)
        t = out.terms
        for wu, cu in self.terms.items():
            for wv, cv in other.terms.items():
                w = wu + wv
                add = cu * cv
                prev = t.get(w)
                s = add if prev is None else prev + add
                if s:
                    t[w] = s
                else:
                    t.pop(w, None)
        return out

    # -- involutions ------------------------------------------------------

    def tau(self) -> "ShuffleElement":
        """Reverse every word (coefficients untouched)."""
        out = ShuffleElement(self.datum)
        for w, c in self.terms.items():
            rw = tuple(reversed(w))
            prev = out.terms.get(rw)
            out.terms[rw] = c if prev is None else prev + c
        return out

    def bar(self) -> "ShuffleElement":
        """q -> q^{-1} on coefficients, reverse words, twist by q^{-N(content)}.

        The sign of the twist is pinned by multiplicativity over the shuffle
        product (bar(x * y) = bar(x) * bar(y)), which the tests exercise.
        """
        nu = self.homogeneous_content()
        n = self.datum.twist_number(nu)
        shift = LaurentPoly.q(-n)
        out = ShuffleElement(self.datum)
        for w, c in self.terms.items():
            rw = tuple(reversed(w))
            add = c.bar() * shift
            prev = out.terms.get(rw)
            out.terms[rw] = add if prev is None else prev + add
        return out

    def sigma(self) -> "ShuffleElement":
        """bar composed with tau: coefficients conjugated, words kept, q^{-N} twist."""
        nu = self.homogeneous_content()
        n = self.datum.twist_number(nu)
        shift = LaurentPoly.q(-n)
        return self.map_coeffs(lambda c: c.bar() * shift)

    def char_dual(self) -> "ShuffleElement":
        """Coefficient-wise q -> q^{-1}; the involution fixing cuspidal characters."""
        return self.map_coeffs(lambda c: c.bar())

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            if c == LaurentPoly.one():
                parts.append(word_str(w))
            elif len(c._t) == 1:
                parts.append(f"{c.render()}*{word_str(w)}")
            else:
                parts.append(f"({c.render()})*{word_str(w)}")
        return " + ".join(parts)

    def structured(self) -> list:
        return [
            {"word": list(w), "coeff": c.structured()} for w, c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"ShuffleElement({self.render()})"


def shuffle(x: ShuffleElement, y: ShuffleElement, cap: int = DEFAULT_HEIGHT_CAP) -> ShuffleElement:
    return x.shuffle(y, cap=cap)


def shuffle_bar(x: ShuffleElement, y: ShuffleElement) -> ShuffleElement:
    """The shuffle with q replaced by q^{-1} in the structure constants."""
    out = ShuffleElement(x.datum)
    t = out.terms
    for wu, cu in x.terms.items():
        for wv, cv in y.terms.items():
            c = cu * cv
            for w, qc in _shuffle_words(x.datum, wu, wv).items():
                add = qc.bar() * c
                prev = t.get(w)
                s = add if prev is None else prev + add
                if s:
                    t[w] = s
                else:
                    t.pop(w, None)
    return out


def concat(x: ShuffleElement, y: ShuffleElement) -> ShuffleElement:
    return x.concat(y)


def qbracket(x: ShuffleElement, y: ShuffleElement) -> ShuffleElement:
    """[x, y]_q = xy - q^{(|x|,|y|)} yx in the concatenation algebra."""
    cx = x.homogeneous_content()
    cy = y.homogeneous_content()
    exp = x.datum.form(cx, cy)
    return x.concat(y) - y.concat(x) * LaurentPoly.q(exp)


def qbracket_shuffle(x: ShuffleElement, y: ShuffleElement) -> ShuffleElement:
    """Same bracket with the shuffle product in place of concatenation."""
    cx = x.homogeneous_content()
    cy = y.homogeneous_content()
    exp = x.datum.form(cx, cy)
    return x.shuffle(y) - y.shuffle(x) * LaurentPoly.q(exp)


def tau_elem(x: ShuffleElement) -> ShuffleElement:
    return x.tau()


def bar_elem(x: ShuffleElement) -> ShuffleElement:
    return x.bar()


def sigma_elem(x: ShuffleElement) -> ShuffleElement:
    return x.sigma()


def min_word(x: ShuffleElement):
    return x.min_word()
