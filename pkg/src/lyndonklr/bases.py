"""Root vectors: bracketings, the r-basis, and dual PBW elements.

For a Lyndon word l with standard factorization l = l1 l2, the bracketed
element is built recursively with the q-bracket, and its shuffle image
r_l is computed by the same recursion carried out directly in the shuffle
algebra (the two agree because letterwise shuffling is an algebra map from
the concatenation product).

The dual PBW element of a good Lyndon word is the rescaling of r_l whose
coefficient on l is the normalization scalar kappa_l; kappa itself is
recovered by a square-root extraction from the leading coefficient of r_l
and the diagonal norm of the root.  For a general good word the dual PBW
element is a q-shifted shuffle product of the Lyndon ones, smallest factor
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, content, height
from .errors import NotAPerfectSquareError
from .lyndon import (
    LEFT,
    RIGHT,
    WordOrder,
    canonical_factorization,
    good_lyndon_table,
    is_good,
    opposite_table,
)
from .qlaurent import LaurentPoly, RatFunc, laurent_sqrt, q_factorial
from .shuffle import (
    DEFAULT_HEIGHT_CAP,
    ShuffleElement,
    Word,
    qbracket,
    qbracket_shuffle,
)


@dataclass(frozen=True)
class BasisElement:
    label: Word
    kind: str  # lyndon_r | dual_pbw | dual_canonical
    value: ShuffleElement


def _order(opposite: bool) -> WordOrder:
    return LEFT if opposite else RIGHT


def _lyndon_words(datum, opposite):
    return opposite_table(datum) if opposite else good_lyndon_table(datum)


def bracket(datum: CartanDatum, l: Word, opposite: bool = False) -> ShuffleElement:
    """Iterated q-bracketing of a Lyndon word in the concatenation algebra."""
    l = tuple(l)
    order = _order(opposite)
    if not order.is_lyndon(l):
        raise ValueError(f"{l} is not Lyndon in the {order.name} reading")
    if len(l) == 1:
        return ShuffleElement.monomial(datum, l)
    l1, l2 = order.standard_factorization(l)
    return qbracket(bracket(datum, l1, opposite), bracket(datum, l2, opposite))


_R_CACHE: dict = {}


def r_lyndon(datum: CartanDatum, l: Word, opposite: bool = False) -> ShuffleElement:
    """Shuffle image of the bracketing, computed by the bracket recursion."""
    l = tuple(l)
    key = (datum.key, l, opposite)
    hit = _R_CACHE.get(key)
    if hit is not None:
        return hit
    order = _order(opposite)
    if len(l) == 1:
        out = ShuffleElement.monomial(datum, l)
    else:
        l1, l2 = order.standard_factorization(l)
        out = qbracket_shuffle(
            r_lyndon(datum, l1, opposite), r_lyndon(datum, l2, opposite)
        )
    _R_CACHE[key] = out
    return out


def r_basis(datum: CartanDatum, g: Word, opposite: bool = False) -> ShuffleElement:
    """r_g: shuffle product of the Lyndon r's along the canonical factorization."""
    g = tuple(g)
    order = _order(opposite)
    table = _lyndon_words(datum, opposite)
    factors = canonical_factorization(g, order)
    if any(f not in table for f in factors):
        raise ValueError(f"{g} is not a good word")
    out = None
    for f in factors:
        rf = r_lyndon(datum, f, opposite)
        out = rf if out is None else out.shuffle(rf)
    return out


def form_norm(datum: CartanDatum, beta) -> RatFunc:
    """Diagonal norm of a root: prod_i (1-q^{(a_i,a_i)})^{c_i} / (1-q^{(b,b)})."""
    beta = tuple(beta)
    if beta not in datum._root_set:
        raise ValueError(f"{beta} is not a positive root")
    num = LaurentPoly.one()
    for i, c in enumerate(beta):
        if c:
            num = num * (LaurentPoly.one() - LaurentPoly.q(datum.pairing[i][i])) ** c
    den = LaurentPoly.one() - LaurentPoly.q(datum.form(beta, beta))
    return RatFunc(num, den)


def _kappa_square(datum: CartanDatum, l: Word, opposite: bool) -> LaurentPoly:
    """(-1)^{len-1} rho_l / (q^{N(beta)} (E,E)); must be a perfect square."""
    l = tuple(l)
    r = r_lyndon(datum, l, opposite)
    if opposite:
        lead_word, rho = r.max_word_opposite()
    else:
        lead_word, rho = r.min_word()
    if lead_word != l:
        raise AssertionError(f"distinguished word of r_{l} is {lead_word}")
    beta = content(datum, l)
    n = datum.twist_number(beta)
    norm = form_norm(datum, beta)
    sign = -1 if (len(l) - 1) % 2 else 1
    num = rho * sign * norm.den
    den = norm.num.shifted(n)
    return num.divexact(den)


def kappa_lyndon(datum: CartanDatum, l: Word, opposite: bool = False) -> LaurentPoly:
    """The coefficient of l in its dual canonical element, a bar-symmetric
    Laurent polynomial positive at q = 1."""
    sq = _kappa_square(datum, l, opposite)
    try:
        return laurent_sqrt(sq)
    except NotAPerfectSquareError as exc:
        raise NotAPerfectSquareError(
            f"kappa extraction failed for {l}: {exc}", witness=exc.witness
        ) from exc


def dual_pbw_lyndon(datum: CartanDatum, l: Word, opposite: bool = False) -> ShuffleElement:
    """The dual PBW (= dual canonical) element of a good Lyndon word."""
    l = tuple(l)
    table = _lyndon_words(datum, opposite)
    if l not in table:
        raise ValueError(f"{l} is not a good Lyndon word")
    r = r_lyndon(datum, l, opposite)
    if opposite:
        _, rho = r.max_word_opposite()
    else:
        _, rho = r.min_word()
    kappa = kappa_lyndon(datum, l, opposite)
    return (r * kappa).scale_exact_div(rho)


def factor_multiplicities(datum: CartanDatum, g: Word, opposite: bool = False):
    """Canonical factorization grouped as (word, multiplicity), largest first."""
    order = _order(opposite)
    factors = canonical_factorization(tuple(g), order)
    grouped: list[list] = []
    for f in factors:
        if grouped and grouped[-1][0] == f:
            grouped[-1][1] += 1
        else:
            grouped.append([f, 1])
    return [(f, m) for f, m in grouped]


def d_of_lyndon(datum: CartanDatum, l: Word) -> int:
    """Half the norm of the root of l (the q-power attached to its letter class)."""
    beta = content(datum, l)
    return datum.form(beta, beta) // 2


def c_shift(datum: CartanDatum, g: Word, opposite: bool = False) -> int:
    """Grading shift: sum of binom(a,2) d_l over the grouped factorization."""
    total = 0
    for f, a in factor_multiplicities(datum, g, opposite):
        total += (a * (a - 1) // 2) * d_of_lyndon(datum, f)
    return total


def kappa_g(datum: CartanDatum, g: Word, opposite: bool = False) -> LaurentPoly:
    """prod kappa_l^a [a]_l! over the grouped canonical factorization."""
    out = LaurentPoly.one()
    for f, a in factor_multiplicities(datum, g, opposite):
        out = out * kappa_lyndon(datum, f, opposite) ** a
        out = out * q_factorial(a, d_of_lyndon(datum, f))
    return out


def dual_pbw(
    datum: CartanDatum, g: Word, opposite: bool = False, cap: int = DEFAULT_HEIGHT_CAP
) -> ShuffleElement:
    """Dual PBW element of a good word: q^{c_g} times the shuffle product of
    the Lyndon dual PBW elements, smallest Lyndon factor first."""
    g = tuple(g)
    if not is_good(datum, g, opposite):
        raise ValueError(f"{g} is not a good word")
    grouped = factor_multiplicities(datum, g, opposite)
    out = None
    for f, a in reversed(grouped):
        piece = dual_pbw_lyndon(datum, f, opposite)
        for _ in range(a):
            out = piece if out is None else out.shuffle(piece, cap=cap)
    return out * LaurentPoly.q(c_shift(datum, g, opposite))
