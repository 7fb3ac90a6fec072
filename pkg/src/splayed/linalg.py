"""Small exact linear algebra over the rationals.

Matrices are lists of rows of Fractions (ints are accepted and converted).
Sparse vectors are dicts mapping a hashable coordinate to a nonzero Fraction.
"""

from fractions import Fraction


def _frac_matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


def det(rows):
    a = _frac_matrix(rows)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] / p
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    row_r[c] -= factor * row_c[c]
    return sign * result


def rank(rows):
    return SparseEchelon.from_rows(
        {j: v for j, v in enumerate(row) if v != 0} for row in rows
    ).rank


class SparseEchelon:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Each stored row is keyed by its pivot coordinate; ``pivot_key`` picks the
    pivot among a row's coordinates (the minimum under that key).
    """

    def __init__(self, pivot_key=None):
        self.rows = {}
        self.pivot_key = pivot_key

    @classmethod
    def from_rows(cls, rows, pivot_key=None):
        ech = cls(pivot_key)
        for row in rows:
            ech.add(row)
        return ech

    @property
    def rank(self):
        return len(self.rows)

    def _pivot(self, vec):
        if self.pivot_key is None:
            return min(vec)
        return min(vec, key=self.pivot_key)

    def reduce(self, vec):
        """Return the remainder of ``vec`` after elimination (a new dict)."""
        vec = {k: Fraction(v) for k, v in vec.items() if v != 0}
        while vec:
            p = self._pivot(vec)
            row = self.rows.get(p)
            if row is None:
                return vec
            c = vec[p]
            for k, v in row.items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        """Insert ``vec``; return True iff it enlarged the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        p = self._pivot(vec)
        c = vec[p]
        self.rows[p] = {k: v / c for k, v in vec.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)
