"""The quiver Hecke algebra: generators, straightening, and relation checks.

Elements are kept in the normal form

    phi_w  y_1^{m_1} ... y_d^{m_d}  e(i)

where each permutation w carries one fixed reduced word: the lexicographically
smallest one, built by repeatedly taking the smallest left descent.  Stripping
its first letter yields the canonical word of the shorter permutation, so
left multiplication can peel one crossing at a time.

Left multiplication by a crossing phi_r either extends the canonical word
directly, or forces a rewrite of one reduced word into another.  Any two
reduced words are connected by commutation moves (free) and braid moves;
each braid move on strands carrying equal outer letters emits a correction
term with the crossing triple replaced by a divided-difference polynomial
in the dots.  Corrections are strictly shorter, so the recursion grounds.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import combinations

from .cartan import CartanDatum
from .linalg import Mat

sys.setrecursionlimit(100000)

Gen = tuple  # ('e', word) | ('y', r) | ('phi', r)


# --------------------------------------------------------------------------
# permutations (image tuples, 0-indexed positions)
# --------------------------------------------------------------------------


def identity_perm(d: int) -> tuple:
    return tuple(range(d))


def perm_inverse(w: tuple) -> tuple:
    inv = [0] * len(w)
    for p, v in enumerate(w):
        inv[v] = p
    return tuple(inv)


def perm_length(w: tuple) -> int:
    n = len(w)
    return sum(1 for a, b in combinations(range(n), 2) if w[a] > w[b])


def swap_values(w: tuple, r: int) -> tuple:
    """Left multiplication by the transposition of values r-1, r (1-based r)."""
    a, b = r - 1, r
    return tuple(b if v == a else (a if v == b else v) for v in w)


def place_act(w: tuple, i: tuple) -> tuple:
    """Place permutation on words: position p of i moves to position w[p]."""
    out = [None] * len(i)
    for p, v in enumerate(w):
        out[v] = i[p]
    return tuple(out)


_CW_CACHE: dict = {}


def canonical_word(w: tuple) -> tuple:
    """Lexicographically smallest reduced word (1-based letters)."""
    out = _CW_CACHE.get(w)
    if out is not None:
        return out
    letters = []
    cur = w
    inv = perm_inverse(cur)
    while True:
        r = None
        for k in range(1, len(cur)):
            if inv[k - 1] > inv[k]:
                r = k
                break
        if r is None:
            break
        letters.append(r)
        cur = swap_values(cur, r)
        inv = perm_inverse(cur)
    out = tuple(letters)
    _CW_CACHE[w] = out
    return out


def perm_of_word(d: int, letters) -> tuple:
    w = list(range(d))
    for k in reversed(letters):
        # compose on the left: w := s_k o w  means swapping values; but the
        # product phi_{k1}..phi_{kt} corresponds to s_{k1} o ... o s_{kt},
        # so folding right to left multiplies each new letter on the left.
        w = [k if v == k - 1 else (k - 1 if v == k else v) for v in w]
    return tuple(w)


def transport_word(i: tuple, letters) -> tuple:
    """Apply the place action of a crossing word to the right idempotent."""
    j = list(i)
    for k in reversed(letters):
        j[k - 1], j[k] = j[k], j[k - 1]
    return tuple(j)


# --------------------------------------------------------------------------
# reduced-word rewriting paths
# --------------------------------------------------------------------------


def word_path(src, dst):
    """Elementary moves turning reduced word src into dst (same permutation).

    Returns [(kind, pos)] with kind 'c' (commutation swap at pos) or 'b'
    (braid replacing (a,b,a) by (b,a,b) at pos).
    """
    a = list(src)
    moves = []
    for p in range(len(dst)):
        if a[p] != dst[p]:
            _move_to_front(a, p, dst[p], moves)
    if a != list(dst):
        raise AssertionError(f"rewrite failed: {src} -> {dst}")
    return moves


def _move_to_front(a, p, b, moves):
    """Bring letter b to position p by moves inside a[p:].

    Requires b to be a left descent of the product of a[p:]; the recursion
    mirrors the two dihedral cases (commuting or braiding with a[p]).
    """
    x = a[p]
    if x == b:
        return
    if abs(x - b) > 1:
        _move_to_front(a, p + 1, b, moves)
        moves.append(("c", p))
        a[p], a[p + 1] = a[p + 1], a[p]
    else:
        _move_to_front(a, p + 1, b, moves)
        _move_to_front(a, p + 2, x, moves)
        moves.append(("b", p))
        a[p], a[p + 1], a[p + 2] = a[p + 1], a[p], a[p + 1]


# --------------------------------------------------------------------------
# local polynomial data
# --------------------------------------------------------------------------


def q_ij(datum: CartanDatum, i: int, j: int) -> dict:
    """Crossing polynomial as {(u_exp, v_exp): int}; orientation-driven."""
    if i == j:
        return {}
    a_ij = datum.cartan[i][j]
    if a_ij == 0:
        return {(0, 0): 1}
    a_ji = datum.cartan[j][i]
    if (i, j) in datum.orientation:
        return {(-a_ij, 0): 1, (0, -a_ji): -1}
    return {(0, -a_ji): 1, (-a_ij, 0): -1}


def divided_difference(q: dict) -> list:
    """[(e_r, e_{r+1}, e_{r+2}, coeff)] for (Q(u, v) - Q(w, v)) / (w - u).

    This is the braid defect of phi_r phi_{r+1} phi_r - phi_{r+1} phi_r phi_{r+1}
    on strands with equal outer letters (u, v, w = dots r, r+1, r+2).  The sign
    is forced by the dot-slide and quadratic relations: the opposite choice
    collapses the algebra below its normal-form basis (checked in the tests
    against the polynomial representation).
    """
    out = []
    for (eu, ev), c in q.items():
        for t in range(eu):
            out.append((t, ev, eu - 1 - t, -c))
    return out


def gen_degree(datum: CartanDatum, gen: Gen, i: tuple) -> int:
    kind = gen[0]
    if kind == "e":
        return 0
    if kind == "y":
        r = gen[1]
        if not 1 <= r <= len(i):
            raise IndexError(f"y_{r} out of range for {len(i)} strands")
        return datum.pairing[i[r - 1]][i[r - 1]]
    if kind == "phi":
        r = gen[1]
        if not 1 <= r <= len(i) - 1:
            raise IndexError(f"phi_{r} out of range for {len(i)} strands")
        return -datum.pairing[i[r - 1]][i[r]]
    raise ValueError(f"unknown generator {gen}")


# --------------------------------------------------------------------------
# the straightening engine
# --------------------------------------------------------------------------


class _Engine:
    """Normal-form arithmetic for one Cartan datum."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self._phi_cache: dict = {}
        self._y_cache: dict = {}
        self._word_cache: dict = {}

    # elements are dicts {(w, m, i): Fraction}

    def _add_into(self, acc, terms, scale=Fraction(1)):
        for key, c in terms.items():
            s = acc.get(key, Fraction(0)) + c * scale
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)

    def mul_y(self, s, key):
        hit = self._y_cache.get((s,) + key)
        if hit is not None:
            return hit
        w, m, i = key
        cw = canonical_word(w)
        if not cw:
            m2 = list(m)
            m2[s - 1] += 1
            out = {(w, tuple(m2), i): Fraction(1)}
        else:
            k = cw[0]
            w1 = swap_values(w, k)
            inner = (w1, m, i)
            if s != k and s != k + 1:
                out = self.fold_phi(k, self.mul_y(s, inner))
            else:
                j = place_act(w1, i)
                delta = j[k - 1] == j[k]
                if s == k:
                    out = self.fold_phi(k, self.mul_y(k + 1, inner))
                    if delta:
                        out = dict(out)
                        self._add_into(out, {inner: Fraction(1)}, Fraction(-1))
                else:
                    out = self.fold_phi(k, self.mul_y(k, inner))
                    if delta:
                        out = dict(out)
                        self._add_into(out, {inner: Fraction(1)})
        self._y_cache[(s,) + key] = out
        return out

    def mul_phi(self, r, key):
        hit = self._phi_cache.get((r,) + key)
        if hit is not None:
            return hit
        w, m, i = key
        inv = perm_inverse(w)
        if inv[r - 1] < inv[r]:
            out = self._phi_up(r, key)
        else:
            out = self._phi_down(r, key)
        self._phi_cache[(r,) + key] = out
        return out

    def _phi_up(self, r, key):
        w, m, i = key
        v = swap_values(w, r)
        src = (r,) + canonical_word(w)
        dst = canonical_word(v)
        if src == dst:
            return {(v, m, i): Fraction(1)}
        out = {(v, m, i): Fraction(1)}
        self._apply_path_corrections(out, src, dst, m, i)
        return out

    def _phi_down(self, r, key):
        w, m, i = key
        w1 = swap_values(w, r)
        src = canonical_word(w)
        dst = (r,) + canonical_word(w1)
        out: dict = {}
        self._apply_path_corrections(out, src, dst, m, i, premultiply=r)
        # main term: phi_r phi_r on the shortened word -> crossing polynomial
        j = place_act(w1, i)
        q = q_ij(self.datum, j[r - 1], j[r])
        base = {(w1, m, i): Fraction(1)}
        for (eu, ev), c in q.items():
            piece = base
            for _ in range(eu):
                piece = self.fold_y(r, piece)
            for _ in range(ev):
                piece = self.fold_y(r + 1, piece)
            self._add_into(out, piece, Fraction(c))
        return out

    def _apply_path_corrections(self, out, src, dst, m, i, premultiply=None):
        """Accumulate braid-correction terms of rewriting src into dst.

        The main (coefficient 1) term along dst is handled by the caller;
        corrections may optionally be premultiplied by one more crossing.
        """
        moves = word_path(src, dst)
        cur = list(src)
        for kind, p in moves:
            if kind == "c":
                cur[p], cur[p + 1] = cur[p + 1], cur[p]
                continue
            a, b = cur[p], cur[p + 1]
            rr = min(a, b)
            sign = Fraction(1) if a < b else Fraction(-1)
            suffix = tuple(cur[p + 3 :])
            j = transport_word(i, suffix)
            if j[rr - 1] == j[rr + 1]:
                q = q_ij(self.datum, j[rr - 1], j[rr])
                piece0 = self.nf_word(suffix, m, i)
                corr: dict = {}
                for e1, e2, e3, c in divided_difference(q):
                    piece = piece0
                    for _ in range(e1):
                        piece = self.fold_y(rr, piece)
                    for _ in range(e2):
                        piece = self.fold_y(rr + 1, piece)
                    for _ in range(e3):
                        piece = self.fold_y(rr + 2, piece)
                    self._add_into(corr, piece, Fraction(c))
                for k in reversed(cur[:p]):
                    corr = self.fold_phi(k, corr)
                if premultiply is not None:
                    corr = self.fold_phi(premultiply, corr)
                self._add_into(out, corr, sign)
            cur[p], cur[p + 1], cur[p + 2] = cur[p + 1], cur[p], cur[p + 1]

    def fold_phi(self, k, terms):
        out: dict = {}
        for key, c in terms.items():
            self._add_into(out, self.mul_phi(k, key), c)
        return out

    def fold_y(self, s, terms):
        out: dict = {}
        for key, c in terms.items():
            self._add_into(out, self.mul_y(s, key), c)
        return out

    def nf_word(self, letters, m, i):
        """Normal form of phi_{letters} y^m e(i) for an arbitrary crossing word."""
        ck = (tuple(letters), m, i)
        hit = self._word_cache.get(ck)
        if hit is not None:
            return hit
        d = len(i)
        cur = {(identity_perm(d), m, i): Fraction(1)}
        for k in reversed(tuple(letters)):
            cur = self.fold_phi(k, cur)
        self._word_cache[ck] = cur
        return cur


_ENGINES: dict = {}


def engine_for(datum: CartanDatum) -> _Engine:
    eng = _ENGINES.get(datum.key)
    if eng is None:
        eng = _Engine(datum)
        _ENGINES[datum.key] = eng
    return eng


# --------------------------------------------------------------------------
# public element type
# --------------------------------------------------------------------------


class KlrElement:
    """Linear combination of normal-form basis elements for one weight nu."""

    __slots__ = ("datum", "strands", "terms")

    def __init__(self, datum: CartanDatum, strands: int, terms=None):
        self.datum = datum
        self.strands = strands
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[key] = c

    @staticmethod
    def basis(datum, w, m, i, coeff=1) -> "KlrElement":
        return KlrElement(datum, len(i), {(tuple(w), tuple(m), tuple(i)): coeff})

    @staticmethod
    def idempotent(datum, i) -> "KlrElement":
        d = len(i)
        return KlrElement.basis(datum, identity_perm(d), (0,) * d, tuple(i))

    @staticmethod
    def unit(datum, words) -> "KlrElement":
        """Sum of idempotents over the given weight words."""
        out = KlrElement(datum, len(next(iter(words))))
        for i in words:
            out = out + KlrElement.idempotent(datum, i)
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, KlrElement):
            return NotImplemented
        return (
            self.datum.key == other.datum.key
            and self.strands == other.strands
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = KlrElement(self.datum, self.strands, dict(self.terms))
        for key, c in other.terms.items():
            s = out.terms.get(key, Fraction(0)) + c
            if s:
                out.terms[key] = s
            else:
                out.terms.pop(key, None)
        return out

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, c):
        if isinstance(c, KlrElement):
            return mul(self, c)
        c = Fraction(c)
        return KlrElement(
            self.datum, self.strands, {k: v * c for k, v in self.terms.items()}
        )

    __rmul__ = __mul__

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (w, m, i) in sorted(self.terms):
            c = self.terms[(w, m, i)]
            word = canonical_word(w)
            phi = "".join(f"s{k}" for k in word) or ""
            ys = "".join(
                f"y{t+1}^{e}" if e > 1 else (f"y{t+1}" if e else "")
                for t, e in enumerate(m)
            )
            body = (phi + ys) or "1"
            bits.append(f"{c}*{body}*e({''.join(map(str, i))})")
        return " + ".join(bits)

    def __repr__(self):
        return f"KlrElement({self.render()})"


def mul_gen(g: Gen, x: KlrElement) -> KlrElement:
    """Left multiplication by a single generator."""
    eng = engine_for(x.datum)
    kind = g[0]
    out: dict = {}
    if kind == "e":
        j = tuple(g[1])
        for key, c in x.terms.items():
            w, m, i = key
            if place_act(w, i) == j:
                out[key] = out.get(key, Fraction(0)) + c
    elif kind == "y":
        for key, c in x.terms.items():
            eng._add_into(out, eng.mul_y(g[1], key), c)
    elif kind == "phi":
        for key, c in x.terms.items():
            eng._add_into(out, eng.mul_phi(g[1], key), c)
    else:
        raise ValueError(f"unknown generator {g}")
    return KlrElement(x.datum, x.strands, out)


def mul(x: KlrElement, y: KlrElement) -> KlrElement:
    """Product in normal form; factors the left operand into generators."""
    if x.datum.key != y.datum.key or x.strands != y.strands:
        raise ValueError("operands live in different algebras")
    out = KlrElement(x.datum, x.strands)
    for (w, m, i), c in x.terms.items():
        acc = mul_gen(("e", i), y)
        if not acc:
            continue
        for s, e in enumerate(m):
            for _ in range(e):
                acc = mul_gen(("y", s + 1), acc)
        for k in reversed(canonical_word(w)):
            acc = mul_gen(("phi", k), acc)
        out = out + acc * c
    return out


def psi(x: KlrElement) -> KlrElement:
    """Anti-automorphism fixing every generator."""
    eng = engine_for(x.datum)
    out = KlrElement(x.datum, x.strands)
    for (w, m, i), c in x.terms.items():
        j = place_act(w, i)
        rev = tuple(reversed(canonical_word(w)))
        acc = eng.nf_word(rev, (0,) * x.strands, j)
        terms = acc
        for s, e in enumerate(m):
            for _ in range(e):
                terms = eng.fold_y(s + 1, terms)
        kept = {
            key: v for key, v in terms.items() if place_act(key[0], key[2]) == i
        }
        out = out + KlrElement(x.datum, x.strands, kept) * c
    return out


def tau(x: KlrElement) -> KlrElement:
    """Automorphism reversing strands; crossings pick up a sign."""
    d = x.strands
    eng = engine_for(x.datum)
    out = KlrElement(x.datum, x.strands)
    for (w, m, i), c in x.terms.items():
        word = canonical_word(w)
        flipped = tuple(d - k for k in word)
        acc = eng.nf_word(flipped, tuple(reversed(m)), tuple(reversed(i)))
        sign = Fraction(-1) ** len(word)
        out = out + KlrElement(x.datum, x.strands, acc) * (c * sign)
    return out


def element_degree(datum: CartanDatum, key) -> int:
    """Degree of a normal-form basis element."""
    w, m, i = key
    deg = 0
    j = tuple(i)
    for k in reversed(canonical_word(w)):
        deg += -datum.pairing[j[k - 1]][j[k]]
        jl = list(j)
        jl[k - 1], jl[k] = jl[k], jl[k - 1]
        j = tuple(jl)
    for t, e in enumerate(m):
        deg += e * datum.pairing[i[t]][i[t]]
    return deg


def minimal_coset_reps(d: int, dp: int):
    """Minimal-length representatives of S_{d+dp} / (S_d x S_dp).

    Each is returned with its canonical reduced word, sorted by
    (length, word).
    """
    n = d + dp
    reps = []
    for subset in combinations(range(n), d):
        w = [None] * n
        for p, v in enumerate(subset):
            w[p] = v
        rest = sorted(set(range(n)) - set(subset))
        for q, v in enumerate(rest):
            w[d + q] = v
        w = tuple(w)
        reps.append((w, canonical_word(w)))
    reps.sort(key=lambda t: (len(t[1]), t[1]))
    return reps


def coset_split(w: tuple, d: int):
    """w = u o s with u a minimal coset representative and s block-preserving."""
    n = len(w)
    u = tuple(sorted(w[:d])) + tuple(sorted(w[d:]))
    uinv = perm_inverse(u)
    s = tuple(uinv[v] for v in w)
    return u, s


def parabolic_decompose(datum: CartanDatum, terms: dict, d: int):
    """Rewrite normal-form terms as sum of phi_u (coset rep) times a
    block-preserving element.

    Returns [(u, sigma, m, i, coeff)] meaning coeff * phi_u phi_sigma y^m e(i)
    with sigma fixing the blocks {1..d}, {d+1..}.  Greedy on the longest
    permutation; the residue of each rewrite is strictly shorter.
    """
    eng = engine_for(datum)
    out = []
    work = {k: Fraction(v) for k, v in terms.items() if v}
    while work:
        key = max(work, key=lambda k: (len(canonical_word(k[0])), k))
        c = work.pop(key)
        w, m, i = key
        u, sigma = coset_split(w, d)
        out.append((u, sigma, m, i, c))
        expand = eng.nf_word(canonical_word(u) + canonical_word(sigma), m, i)
        if expand.get(key) != 1:
            raise AssertionError("parabolic rewrite lost its leading term")
        for k2, c2 in expand.items():
            if k2 == key:
                continue
            s2 = work.get(k2, Fraction(0)) - c * c2
            if s2:
                work[k2] = s2
            else:
                work.pop(k2, None)
    return out


# --------------------------------------------------------------------------
# relation suite on matrix actions
# --------------------------------------------------------------------------

RELATIONS = (
    "idempotent-orthogonality",
    "y-preserves-weight",
    "phi-moves-weight",
    "y-commute",
    "phi-y-far-commute",
    "phi-far-commute",
    "dot-cross-slide",
    "cross-dot-slide",
    "quadratic",
    "braid",
    "grading",
    "nilpotency",
)


class RelationReport:
    """Per-instance pass/fail records with reproducible witnesses."""

    def __init__(self):
        self.failures: list[dict] = []
        self.checked = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **witness):
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    def structured(self) -> dict:
        def clean(x):
            if isinstance(x, Fraction):
                return [x.numerator, x.denominator]
            if isinstance(x, dict):
                return {str(k): clean(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [clean(v) for v in x]
            return x

        return {
            "ok": self.ok,
            "checked": self.checked,
            "failures": [clean(f) for f in self.failures],
        }

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"RelationReport({self.checked} checks, {state})"


def relation_suite(datum: CartanDatum, tags, y_mats, phi_mats, degrees=None) -> RelationReport:
    """Check the defining relations on explicit matrices.

    tags: weight word per basis vector; y_mats, phi_mats: Mat actions;
    degrees: optional degree tags enabling the grading check.
    """
    n = len(tags)
    d = len(tags[0]) if n else 0
    report = RelationReport()
    if n == 0:
        return report
    if len(y_mats) != d or len(phi_mats) != d - 1:
        raise ValueError("generator count does not match the strand number")

    blocks: dict[tuple, list[int]] = {}
    for idx, t in enumerate(tags):
        blocks.setdefault(tuple(t), []).append(idx)

    def unit(v):
        return {v: Fraction(1)}

    def swap_word(i, r):
        j = list(i)
        j[r - 1], j[r] = j[r], j[r - 1]
        return tuple(j)

    def supported_on(vec, word, base_deg=None, deg_shift=0):
        for r in vec:
            if tags[r] != word:
                return False
            if base_deg is not None and degrees[r] != base_deg + deg_shift:
                return False
        return True

    pairing = datum.pairing

    for i, idxs in blocks.items():
        for v in idxs:
            dv = degrees[v] if degrees is not None else None
            for r in range(1, d + 1):
                vec = y_mats[r - 1].apply(unit(v))
                ok = supported_on(
                    vec, i, dv, pairing[i[r - 1]][i[r - 1]] if degrees else 0
                )
                report.record(
                    ok, relation="y-preserves-weight", r=r, word=i, basis=v
                )
            for r in range(1, d):
                vec = phi_mats[r - 1].apply(unit(v))
                ok = supported_on(
                    vec, swap_word(i, r), dv, -pairing[i[r - 1]][i[r]] if degrees else 0
                )
                report.record(
                    ok, relation="phi-moves-weight", r=r, word=i, basis=v
                )

    # commutation relations, quadratic and braid relations, blockwise
    for i, idxs in blocks.items():
        def check_vec(name, r, s, v, lhs, rhs):
            report.record(
                lhs == rhs,
                relation=name,
                r=r,
                s=s,
                word=i,
                basis=v,
                lhs=sorted(lhs.items()),
                rhs=sorted(rhs.items()),
            )

        for v in idxs:
            uv = unit(v)
            for r in range(1, d + 1):
                for s in range(r + 1, d + 1):
                    lhs = y_mats[r - 1].apply(y_mats[s - 1].apply(uv))
                    rhs = y_mats[s - 1].apply(y_mats[r - 1].apply(uv))
                    check_vec("y-commute", r, s, v, lhs, rhs)
            for r in range(1, d):
                for s in range(1, d + 1):
                    if s in (r, r + 1):
                        continue
                    lhs = phi_mats[r - 1].apply(y_mats[s - 1].apply(uv))
                    rhs = y_mats[s - 1].apply(phi_mats[r - 1].apply(uv))
                    check_vec("phi-y-far-commute", r, s, v, lhs, rhs)
            for r in range(1, d):
                for s in range(r + 2, d):
                    lhs = phi_mats[r - 1].apply(phi_mats[s - 1].apply(uv))
                    rhs = phi_mats[s - 1].apply(phi_mats[r - 1].apply(uv))
                    check_vec("phi-far-commute", r, s, v, lhs, rhs)
            for r in range(1, d):
                same = i[r - 1] == i[r]
                # phi_r y_{r+1} e(i) = (y_r phi_r + [same]) e(i)
                lhs = phi_mats[r - 1].apply(y_mats[r].apply(uv))
                rhs = y_mats[r - 1].apply(phi_mats[r - 1].apply(uv))
                if same:
                    rhs = dict(rhs)
                    rhs[v] = rhs.get(v, Fraction(0)) + 1
                    rhs = {k: c for k, c in rhs.items() if c}
                check_vec("dot-cross-slide", r, None, v, lhs, rhs)
                # y_{r+1} phi_r e(i) = (phi_r y_r + [same]) e(i)
                lhs = y_mats[r].apply(phi_mats[r - 1].apply(uv))
                rhs = phi_mats[r - 1].apply(y_mats[r - 1].apply(uv))
                if same:
                    rhs = dict(rhs)
                    rhs[v] = rhs.get(v, Fraction(0)) + 1
                    rhs = {k: c for k, c in rhs.items() if c}
                check_vec("cross-dot-slide", r, None, v, lhs, rhs)
            for r in range(1, d):
                lhs = phi_mats[r - 1].apply(phi_mats[r - 1].apply(uv))
                rhs: dict = {}
                for (eu, ev), c in q_ij(datum, i[r - 1], i[r]).items():
                    vec = uv
                    for _ in range(eu):
                        vec = y_mats[r - 1].apply(vec)
                    for _ in range(ev):
                        vec = y_mats[r].apply(vec)
                    for k2, c2 in vec.items():
                        s2 = rhs.get(k2, Fraction(0)) + c * c2
                        if s2:
                            rhs[k2] = s2
                        else:
                            rhs.pop(k2, None)
                check_vec("quadratic", r, None, v, lhs, rhs)
            for r in range(1, d - 1):
                a = phi_mats[r - 1].apply(
                    phi_mats[r].apply(phi_mats[r - 1].apply(uv))
                )
                b = phi_mats[r].apply(
                    phi_mats[r - 1].apply(phi_mats[r].apply(uv))
                )
                lhs = {
                    k: c
                    for k, c in ((k, a.get(k, Fraction(0)) - b.get(k, Fraction(0)))
                                 for k in set(a) | set(b))
                    if c
                }
                rhs = {}
                if i[r - 1] == i[r + 1]:
                    for e1, e2, e3, c in divided_difference(
                        q_ij(datum, i[r - 1], i[r])
                    ):
                        vec = uv
                        for _ in range(e1):
                            vec = y_mats[r - 1].apply(vec)
                        for _ in range(e2):
                            vec = y_mats[r].apply(vec)
                        for _ in range(e3):
                            vec = y_mats[r + 1].apply(vec)
                        for k2, c2 in vec.items():
                            s2 = rhs.get(k2, Fraction(0)) + c * c2
                            if s2:
                                rhs[k2] = s2
                            else:
                                rhs.pop(k2, None)
                check_vec("braid", r, None, v, lhs, rhs)

    for r in range(1, d + 1):
        report.record(
            y_mats[r - 1].is_nilpotent(), relation="nilpotency", r=r, word=None
        )
    return report
