"""Minimal exact sparse linear algebra over Fraction.

Matrices are stored column-wise (dict col -> dict row -> Fraction), which
matches how module actions get applied to basis vectors.  Vectors are
dicts index -> Fraction with no explicit zeros.
"""

from __future__ import annotations

from fractions import Fraction


def vec_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, Fraction(0)) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


class Mat:
    """Square sparse matrix acting on column vectors."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols=None):
        self.n = n
        self.cols = {}
        if cols:
            for c, col in cols.items():
                col = {r: Fraction(v) for r, v in col.items() if v}
                if col:
                    self.cols[c] = col

    @staticmethod
    def zero(n: int) -> "Mat":
        return Mat(n)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, {i: {i: Fraction(1)} for i in range(n)})

    def set_entry(self, r: int, c: int, v) -> None:
        v = Fraction(v)
        col = self.cols.setdefault(c, {})
        if v:
            col[r] = v
        else:
            col.pop(r, None)
            if not col:
                self.cols.pop(c, None)

    def entry(self, r: int, c: int) -> Fraction:
        return self.cols.get(c, {}).get(r, Fraction(0))

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for c, v in vec.items():
            col = self.cols.get(c)
            if not col:
                continue
            for r, a in col.items():
                s = out.get(r, Fraction(0)) + a * v
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        out = Mat(self.n)
        for c, col in other.cols.items():
            new = self.apply(col)
            if new:
                out.cols[c] = new
        return out

    def __add__(self, other: "Mat") -> "Mat":
        out = Mat(self.n)
        for c in set(self.cols) | set(other.cols):
            col = vec_add(self.cols.get(c, {}), other.cols.get(c, {}))
            if col:
                out.cols[c] = col
        return out

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (other * Fraction(-1))

    def __mul__(self, c) -> "Mat":
        c = Fraction(c)
        out = Mat(self.n)
        if c:
            for k, col in self.cols.items():
                out.cols[k] = {r: v * c for r, v in col.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.n == other.n and self.cols == other.cols

    def is_zero(self) -> bool:
        return not self.cols

    def is_nilpotent(self) -> bool:
        a = self
        steps = 0
        while not a.is_zero():
            a = a @ a
            steps += 1
            if (1 << steps) > 2 * self.n:
                return False
        return True

    def entries(self):
        for c, col in self.cols.items():
            for r, v in col.items():
                yield r, c, v

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.n for _ in range(self.n)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def __repr__(self):
        return f"Mat({self.n}x{self.n}, {sum(len(c) for c in self.cols.values())} entries)"
