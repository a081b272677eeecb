# coding: utf-8
'''
Exact matrix helpers.

Two layers live here:

 - matrices over an :mod:`slr.fields` field ``L`` stored as tuples of tuples
   of field elements (products, Kronecker products, Gauss-Jordan inversion);
 - linear systems over the prime field (``QQ`` or ``GF(p)``), solved with
   :class:`sympy.polys.matrices.DomainMatrix`.
'''
import logging

from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)


def as_matrix(rows):
    return tuple(tuple(row) for row in rows)


def identity(n, field):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def zeros(m, n, field):
    return tuple(tuple(field.zero for j in range(n)) for i in range(m))


def dimensions(A):
    return len(A), (len(A[0]) if A else 0)


def mat_mul(A, B):
    if not A or not B:
        return ()
    columns = list(zip(*B))
    result = []
    for row in A:
        result_row = []
        for column in columns:
            total = row[0] * column[0]
            for a, b in zip(row[1:], column[1:]):
                total = total + a * b
            result_row.append(total)
        result.append(tuple(result_row))
    return tuple(result)


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(row_a, row_b))
                 for row_a, row_b in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(row_a, row_b))
                 for row_a, row_b in zip(A, B))


def mat_scale(c, A):
    return tuple(tuple(c * a for a in row) for row in A)


def mat_map(function, A):
    '''Apply ``function`` entrywise (e.g., a Galois automorphism).'''
    return tuple(tuple(function(a) for a in row) for row in A)


def transpose(A):
    return tuple(zip(*A))


def trace(A):
    total = A[0][0]
    for i in range(1, len(A)):
        total = total + A[i][i]
    return total


def kron(A, B):
    '''Kronecker product, block ``(i, j)`` equal to ``A[i][j] * B``.'''
    rows = []
    for row_a in A:
        for row_b in B:
            rows.append(tuple(a * b for a in row_a for b in row_b))
    return tuple(rows)


def block_diag(A, B, field):
    m_a, n_a = dimensions(A)
    m_b, n_b = dimensions(B)
    rows = [tuple(row) + (field.zero, ) * n_b for row in A]
    rows += [(field.zero, ) * n_a + tuple(row) for row in B]
    return tuple(rows)


def block_matrix(blocks, field):
    '''
    Assemble a matrix from a square grid of equally sized blocks.

    ``blocks[j][i]`` is placed at block row ``j`` and block column ``i``.
    '''
    rows = []
    for block_row in blocks:
        for r in range(len(block_row[0])):
            rows.append(tuple(entry for block in block_row
                              for entry in block[r]))
    return tuple(rows)


def _row_reduce(M):
    '''
    In-place Gauss-Jordan elimination over an exact field.

    Returns
    -------
    list
        Pivot columns.
    '''
    n_rows = len(M)
    n_cols = len(M[0]) if n_rows else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if not M[i_row][piv_c].is_zero:
                break
        else:
            continue
        M[piv_r], M[i_row] = M[i_row], M[piv_r]
        fp = M[piv_r][piv_c].inverse()
        M[piv_r] = [v * fp for v in M[piv_r]]
        for r in range(n_rows):
            if r == piv_r or M[r][piv_c].is_zero:
                continue
            fr = M[r][piv_c]
            M[r] = [a - fr * b for a, b in zip(M[r], M[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return pivots


def rank(A):
    return len(_row_reduce([list(row) for row in A]))


def inverse(A, field):
    '''
    Invert a square matrix over ``field``.

    Raises
    ------
    ZeroDivisionError
        If ``A`` is singular.
    '''
    n = len(A)
    M = [list(row) + list(e_row) for row, e_row in zip(A, identity(n, field))]
    pivots = _row_reduce(M)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError('Singular matrix.')
    return tuple(tuple(row[n:]) for row in M)


def is_invertible(A):
    m, n = dimensions(A)
    return m == n and rank(A) == n


def prime_matrix(rows, ncols, domain):
    return DomainMatrix([list(row) for row in rows], (len(rows), ncols),
                        domain)


def prime_nullspace(rows, ncols, domain):
    '''
    Basis of ``{v : M v = 0}`` for the prime-field matrix with given rows.

    An empty system has the whole space as its kernel.
    '''
    if not rows:
        return [[domain.one if i == j else domain.zero for j in range(ncols)]
                for i in range(ncols)]
    kernel = prime_matrix(rows, ncols, domain).nullspace()
    return [list(row) for row in kernel.to_list()]


def prime_rank(rows, ncols, domain):
    if not rows:
        return 0
    return prime_matrix(rows, ncols, domain).rank()


def prime_rref(rows, ncols, domain):
    '''Reduced row echelon form as ``(nonzero rows, pivot columns)``.'''
    reduced, pivots = prime_matrix(rows, ncols, domain).rref()
    reduced_rows = reduced.to_list()
    return [list(reduced_rows[i]) for i in range(len(pivots))], list(pivots)


def nullspace(A, ncols, field):
    '''Basis of ``{v : A v = 0}`` over ``field`` (list of coordinate lists).'''
    M = [list(row) for row in A]
    pivots = _row_reduce(M) if M else []
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for r, p in enumerate(pivots):
            v[p] = -M[r][free]
        basis.append(v)
    return basis
