"""
Integer matrices, Smith normal form and classification of finitely presented abelian groups.
"""

import json
import logging
from collections import namedtuple

from sympy import Matrix

from .errors import MatrixFormatError
from .lang import Z, cyclic, from_summands

log = logging.getLogger(__name__)


class IntMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        entries = [[int(v) for v in row] for row in entries]
        rows = len(entries) if rows is None else int(rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        cols = int(cols)
        if rows != len(entries) or any(len(row) != cols for row in entries):
            raise ValueError("Matrix entries do not match {}x{}.".format(rows, cols))
        if rows < 0 or cols < 0:
            raise ValueError("Matrix dimensions must be non-negative.")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(tuple(row) for row in entries))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def diagonal(cls, *values):
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except ValueError as e:
                raise MatrixFormatError("matrix is not valid JSON: {}".format(e))
        try:
            rows = data["rows"]
            cols = data["cols"]
            entries = data["entries"]
            if isinstance(rows, bool) or isinstance(cols, bool) or not isinstance(entries, list):
                raise TypeError()
            for row in entries:
                if not isinstance(row, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in row):
                    raise TypeError()
            return cls(entries, rows, cols)
        except (KeyError, TypeError, ValueError):
            raise MatrixFormatError('expected {"rows": r, "cols": c, "entries": [[int, ...], ...]}')

    @classmethod
    def load(cls, path):
        try:
            with open(path, "r") as matrix_file:
                return cls.from_json(matrix_file.read())
        except OSError as e:
            raise MatrixFormatError("could not read {}: {}".format(path, e))

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols, "entries": [list(row) for row in self.entries]}

    def __repr__(self):
        return "IntMatrix({})".format([list(row) for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("Cannot multiply {}x{} by {}x{}.".format(self.rows, self.cols, other.rows, other.cols))
        product = [
            [sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix(product, self.rows, other.cols)

    def transpose(self):
        return IntMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.cols, self.rows)

    def determinant(self):
        if self.rows != self.cols:
            raise ValueError("Determinant needs a square matrix.")
        if self.rows == 0:
            return 1
        return int(Matrix([list(row) for row in self.entries]).det())

    def diagonal_entries(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self):
        return all(self.entries[i][j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)


SnfResult = namedtuple("SnfResult", ("U", "D", "V"))


class SmithNormalForm:
    """
    Smith normal form D = U*A*V of an integer matrix A, with U and V unimodular and D diagonal
    with non-negative entries d_1 | d_2 | ... .

    Each step moves the smallest non-zero entry of the remaining block to the pivot (ties go to
    the lowest row, then column) and reduces its row and column by it, until the pivot divides
    the whole block.

    Usage
    -----
    snf = SmithNormalForm(matrix)
    snf.run()
    snf.U, snf.D, snf.V
    """

    def __init__(self, matrix):
        self._A = [list(row) for row in matrix.entries]
        self._rows = matrix.rows
        self._cols = matrix.cols
        self._U = [list(row) for row in IntMatrix.identity(self._rows).entries]
        self._V = [list(row) for row in IntMatrix.identity(self._cols).entries]
        self._t = 0

    def run(self):
        for _ in self:
            pass
        return self.result

    def __iter__(self):
        return self

    def __next__(self):
        if self._t >= min(self._rows, self._cols) or not self._step():
            raise StopIteration
        return self._t

    @property
    def U(self):
        return IntMatrix(self._U, self._rows, self._rows)

    @property
    def V(self):
        return IntMatrix(self._V, self._cols, self._cols)

    @property
    def D(self):
        return IntMatrix(self._A, self._rows, self._cols)

    @property
    def result(self):
        return SnfResult(self.U, self.D, self.V)

    def _step(self):
        """
        Finishes diagonal entry t; returns False once the remaining block is zero.
        """
        t = self._t
        A = self._A
        while True:
            pivot = self._find_pivot(t)
            if pivot is None:
                return False
            i, j = pivot
            self._swap_rows(t, i)
            self._swap_cols(t, j)
            log.debug("snf pivot %s at (%s, %s)", A[t][t], i, j)
            for i in range(t + 1, self._rows):
                if A[i][t]:
                    self._add_row(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, self._cols):
                if A[t][j]:
                    self._add_col(j, t, -(A[t][j] // A[t][t]))
            if any(A[i][t] for i in range(t + 1, self._rows)) or any(A[t][j] for j in range(t + 1, self._cols)):
                continue
            bad = self._find_nondivisible(t)
            if bad is None:
                break
            self._add_row(t, bad, 1)
        if A[t][t] < 0:
            self._negate_row(t)
        self._t += 1
        return True

    def _find_pivot(self, t):
        best = None
        for i in range(t, self._rows):
            for j in range(t, self._cols):
                v = abs(self._A[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return None if best is None else best[1:]

    def _find_nondivisible(self, t):
        d = self._A[t][t]
        for i in range(t + 1, self._rows):
            if any(self._A[i][j] % d for j in range(t + 1, self._cols)):
                return i
        return None

    def _swap_rows(self, a, b):
        if a != b:
            self._A[a], self._A[b] = self._A[b], self._A[a]
            self._U[a], self._U[b] = self._U[b], self._U[a]

    def _swap_cols(self, a, b):
        if a != b:
            for row in self._A:
                row[a], row[b] = row[b], row[a]
            for row in self._V:
                row[a], row[b] = row[b], row[a]

    def _add_row(self, target, source, q):
        # row_target += q * row_source
        for M in (self._A, self._U):
            M[target] = [x + q * y for x, y in zip(M[target], M[source])]

    def _add_col(self, target, source, q):
        for M in (self._A, self._V):
            for row in M:
                row[target] += q * row[source]

    def _negate_row(self, t):
        self._A[t] = [-x for x in self._A[t]]
        self._U[t] = [-x for x in self._U[t]]


def smith_normal_form(matrix):
    if not isinstance(matrix, IntMatrix):
        matrix = IntMatrix(matrix)
    return SmithNormalForm(matrix).run()


def invariant_factors(matrix):
    """
    The diagonal of the Smith normal form of a relation matrix, padded with zeros to one entry
    per generator (column).
    """
    D = smith_normal_form(matrix).D
    diagonal = D.diagonal_entries()
    return diagonal + [0] * (matrix.cols - len(diagonal))


def fp_classify(matrix):
    """
    Classifies the abelian group Z^cols / (row space of ``matrix``): columns are generators,
    rows are relations.
    """
    if not isinstance(matrix, IntMatrix):
        matrix = IntMatrix(matrix)
    factors = invariant_factors(matrix)
    free_rank = sum(1 for d in factors if d == 0)
    summands = [(Z, free_rank)]
    summands.extend((cyclic(d), 1) for d in factors if d > 1)
    return from_summands(summands)
