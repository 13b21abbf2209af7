"""
    Exact dense linear algebra over any field from kuperberg.scalars.
"""

from typing import Sequence, TypeAlias

from kuperberg.exceptions import DimensionMismatchError, NotInvertibleError
from kuperberg.scalars import FieldDescriptor, Scalar

Matrix: TypeAlias = list[list[Scalar]]
Vector: TypeAlias = list[Scalar]


def zero_matrix(rows: int, columns: int, field: FieldDescriptor) -> Matrix:
    zero: Scalar = field.zero()
    return [[zero] * columns for _ in range(rows)]


def identity_matrix(size: int, field: FieldDescriptor) -> Matrix:
    matrix: Matrix = zero_matrix(size, size, field)
    index: int
    for index in range(size):
        matrix[index][index] = field.one()
    return matrix


def matmul(left: Matrix, right: Matrix, field: FieldDescriptor) -> Matrix:
    if left and right and len(left[0]) != len(right):
        raise DimensionMismatchError(left_columns=len(left[0]), right_rows=len(right))

    columns: int = len(right[0]) if right else 0
    product: Matrix = zero_matrix(len(left), columns, field)
    i: int
    row: list[Scalar]
    for i, row in enumerate(left):
        k: int
        coefficient: Scalar
        for k, coefficient in enumerate(row):
            if coefficient.is_zero():
                continue
            j: int
            entry: Scalar
            for j, entry in enumerate(right[k]):
                if not entry.is_zero():
                    product[i][j] = product[i][j] + coefficient * entry
    return product


def matvec(matrix: Matrix, vector: Sequence[Scalar], field: FieldDescriptor) -> Vector:
    result: Vector = []
    row: list[Scalar]
    for row in matrix:
        total: Scalar = field.zero()
        coefficient: Scalar
        entry: Scalar
        for coefficient, entry in zip(row, vector):
            if not coefficient.is_zero() and not entry.is_zero():
                total = total + coefficient * entry
        result.append(total)
    return result


def trace(matrix: Matrix, field: FieldDescriptor) -> Scalar:
    total: Scalar = field.zero()
    index: int
    for index in range(len(matrix)):
        total = total + matrix[index][index]
    return total


def row_reduce(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """
        Returns the reduced row echelon form of a copy of the matrix together
        with its pivot columns.
    """

    reduced: Matrix = [list(row) for row in matrix]
    pivot_columns: list[int] = []
    if not reduced:
        return reduced, pivot_columns

    n_rows: int = len(reduced)
    n_columns: int = len(reduced[0])
    pivot_row: int = 0

    pivot_column: int
    for pivot_column in range(n_columns):
        if pivot_row >= n_rows:
            break

        i_row: int
        for i_row in range(pivot_row, n_rows):
            if not reduced[i_row][pivot_column].is_zero():
                break
        else:
            continue

        if i_row != pivot_row:
            reduced[pivot_row], reduced[i_row] = reduced[i_row], reduced[pivot_row]

        pivot_inverse: Scalar = reduced[pivot_row][pivot_column].inverse()
        reduced[pivot_row] = [entry * pivot_inverse for entry in reduced[pivot_row]]

        r: int
        for r in range(n_rows):
            if r == pivot_row:
                continue
            factor: Scalar = reduced[r][pivot_column]
            if factor.is_zero():
                continue
            reduced[r] = [
                entry - factor * pivot_entry if not pivot_entry.is_zero() else entry
                for entry, pivot_entry in zip(reduced[r], reduced[pivot_row])
            ]

        pivot_columns.append(pivot_column)
        pivot_row += 1

    return reduced, pivot_columns


def nullspace(matrix: Matrix, n_columns: int, field: FieldDescriptor) -> list[Vector]:
    """
        Returns a basis of {v : matrix·v = 0}. `n_columns` is needed for the
        matrix with no rows.
    """

    if not matrix:
        return [[field.one() if i == j else field.zero() for i in range(n_columns)] for j in range(n_columns)]

    reduced: Matrix
    pivot_columns: list[int]
    reduced, pivot_columns = row_reduce(matrix)
    free_columns: list[int] = [column for column in range(n_columns) if column not in pivot_columns]

    basis: list[Vector] = []
    free_column: int
    for free_column in free_columns:
        vector: Vector = [field.zero()] * n_columns
        vector[free_column] = field.one()
        row_index: int
        pivot_column: int
        for row_index, pivot_column in enumerate(pivot_columns):
            vector[pivot_column] = -reduced[row_index][free_column]
        basis.append(vector)
    return basis


def solve(matrix: Matrix, rhs: Sequence[Scalar], field: FieldDescriptor) -> Vector | None:
    """
        Returns one solution v of matrix·v = rhs (free variables set to zero)
        or None when the system is inconsistent.
    """

    n_columns: int = len(matrix[0]) if matrix else 0
    augmented: Matrix = [list(row) + [value] for row, value in zip(matrix, rhs)]

    reduced: Matrix
    pivot_columns: list[int]
    reduced, pivot_columns = row_reduce(augmented)
    if n_columns in pivot_columns:
        return None

    solution: Vector = [field.zero()] * n_columns
    row_index: int
    pivot_column: int
    for row_index, pivot_column in enumerate(pivot_columns):
        solution[pivot_column] = reduced[row_index][n_columns]
    return solution


def invert(matrix: Matrix, field: FieldDescriptor) -> Matrix:
    size: int = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DimensionMismatchError("Only square matrices can be inverted.", rows=size)

    augmented: Matrix = [list(row) + identity_row for row, identity_row in zip(matrix, identity_matrix(size, field))]
    reduced: Matrix
    pivot_columns: list[int]
    reduced, pivot_columns = row_reduce(augmented)
    if pivot_columns[:size] != list(range(size)):
        raise NotInvertibleError("Matrix is singular.", size=size)
    return [row[size:] for row in reduced]


def matrix_power(matrix: Matrix, exponent: int, field: FieldDescriptor) -> Matrix:
    if exponent < 0:
        return matrix_power(invert(matrix, field), -exponent, field)

    result: Matrix = identity_matrix(len(matrix), field)
    base: Matrix = matrix
    while exponent:
        if exponent & 1:
            result = matmul(result, base, field)
        base = matmul(base, base, field)
        exponent >>= 1
    return result
