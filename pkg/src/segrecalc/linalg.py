"""Sparse exact linear algebra over the rationals and prime fields.

Matrices are stored column-wise: a matrix is a list of sparse columns,
each a dict mapping row index to a nonzero integer.  Rational
eliminations are integer-preserving (cross-multiply, divide by the
content), so results are exact.  A prime characteristic can be supplied
to run the same computations over F_p as a fast pre-check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Col = dict  # row index -> nonzero int


def combine(a: Col, b: Col, ca: int, cb: int, char: int = 0) -> Col:
    """Return ca*a + cb*b, dropping zeros (mod char when char > 0)."""
    out = {}
    for k, x in a.items():
        out[k] = ca * x
    for k, y in b.items():
        z = out.get(k, 0) + cb * y
        if z:
            out[k] = z
        elif k in out:
            del out[k]
    if char:
        for k in list(out):
            z = out[k] % char
            if z:
                out[k] = z
            else:
                del out[k]
    return out


def _content(*vecs: Col) -> int:
    g = 0
    for v in vecs:
        for x in v.values():
            if not isinstance(x, int):
                return 1
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


class Echelon:
    """Incremental column echelon form, pivots keyed by least row index.

    Each accepted column is stored reduced against the previous pivots;
    an inserted column that reduces to zero is linearly dependent, and
    its accumulated coordinates (when tracked) give a kernel vector.
    """

    def __init__(self, char: int = 0, track: bool = False):
        self.char = char
        self.track = track
        self.pivots: dict[int, tuple[Col, Col | None]] = {}
        self.kernel: list[Col] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, body: Col, aug: Col | None):
        char = self.char
        while body:
            r = min(body)
            hit = self.pivots.get(r)
            if hit is None:
                return body, aug
            pbody, paug = hit
            p, q = pbody[r], body[r]
            if char:
                factor = (q * pow(p, char - 2, char)) % char
                body = combine(body, pbody, 1, -factor, char)
                if aug is not None:
                    aug = combine(aug, paug, 1, -factor, char)
            else:
                if isinstance(p, int) and isinstance(q, int):
                    g = gcd(p, q)
                    cs, cp = p // g, -(q // g)
                else:
                    cs, cp = p, -q
                body = combine(body, pbody, cs, cp)
                if aug is not None:
                    aug = combine(aug, paug, cs, cp)
                c = _content(body, aug if aug is not None else {})
                if c > 1:
                    body = {k: v // c for k, v in body.items()}
                    if aug is not None:
                        aug = {k: v // c for k, v in aug.items()}
        return body, aug

    def add(self, body: Col, tag=None) -> bool:
        """Insert a column; return True when it enlarges the span."""
        if self.char:
            body = {k: v % self.char for k, v in body.items() if v % self.char}
        else:
            body = {k: v for k, v in body.items() if v}
        aug = {("c", tag if tag is not None else self.count): 1} if self.track else None
        self.count += 1
        body, aug = self._reduce(body, aug)
        if not body:
            if self.track:
                self.kernel.append(aug)
            return False
        self.pivots[min(body)] = (body, aug)
        return True

    def contains(self, body: Col) -> bool:
        body, _ = self._reduce(dict(body), None)
        return not body

    def residual(self, body: Col) -> Col:
        body, _ = self._reduce(dict(body), None)
        return body


def rank_of(cols: list[Col], char: int = 0) -> int:
    ech = Echelon(char)
    for c in cols:
        ech.add(c)
    return ech.rank


def kernel_of(cols: list[Col], char: int = 0) -> list[Col]:
    """Kernel basis of the matrix with the given columns.

    Vectors are dicts over column indices, integer and primitive over Q,
    deterministic (first nonzero coordinate positive).
    """
    ech = Echelon(char, track=True)
    for i, c in enumerate(cols):
        ech.add(c, tag=i)
    out = []
    for aug in ech.kernel:
        vec = {k[1]: v for k, v in aug.items()}
        out.append(_normalize_vec(vec, char))
    return out


def _normalize_vec(vec: Col, char: int = 0) -> Col:
    if not vec:
        return vec
    if char:
        lead = vec[min(vec)]
        inv = pow(lead, char - 2, char)
        return {k: (v * inv) % char for k, v in vec.items()}
    c = _content(vec)
    if c > 1:
        vec = {k: v // c for k, v in vec.items()}
    if vec[min(vec)] < 0:
        vec = {k: -v for k, v in vec.items()}
    return vec


class CoordSolver:
    """Express vectors in the span of a fixed list of integer columns."""

    def __init__(self, basis: list[Col], char: int = 0):
        self.char = char
        self.ech = Echelon(char, track=True)
        for i, b in enumerate(basis):
            if not self.ech.add(b, tag=i):
                raise ValueError("basis columns are dependent")
        self.size = len(basis)

    def solve(self, vec: Col) -> list | None:
        """Coordinates of vec in the basis, or None when not in the span."""
        char = self.char
        if char:
            body = {k: v % char for k, v in vec.items() if v % char}
        else:
            body = {k: v for k, v in vec.items() if v}
        aug = {("q", 0): 1}
        body, aug = self.ech._reduce(body, aug)
        if body:
            return None
        alpha = aug.pop(("q", 0))
        coords = [0] * self.size
        if char:
            inv = pow(alpha, char - 2, char)
            for k, v in aug.items():
                coords[k[1]] = (-v * inv) % char
        else:
            for k, v in aug.items():
                coords[k[1]] = Fraction(-v, alpha)
        return coords


def apply_columns(cols: list[Col], vec: Col, char: int = 0) -> Col:
    """Matrix times vector, the matrix given by its columns."""
    out: Col = {}
    for j, x in vec.items():
        col = cols[j]
        for r, y in col.items():
            z = out.get(r, 0) + x * y
            if z:
                out[r] = z
            elif r in out:
                del out[r]
    if char:
        for r in list(out):
            z = out[r] % char
            if z:
                out[r] = z
            else:
                del out[r]
    return out


def compose(colsA: list[Col], colsB: list[Col], char: int = 0) -> list[Col]:
    """Columns of A∘B for column-stored A and B."""
    return [apply_columns(colsA, b, char) for b in colsB]
