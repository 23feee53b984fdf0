# -*- coding: utf-8 -*-

__doc__ = """\
The small complex linear-algebra kernel everything else is built on.

Kets are one-dimensional complex :class:`numpy.ndarray` objects and operators
are two-dimensional ones.  Nothing here is bigger than 16x16 so dense storage
is used throughout.

Qubit ordering: in a multi-qubit ket the *first* factor of a tensor product
owns the most significant bit of the basis index.  For the four photons that
means photon ``a`` is bit 3 and photon ``d`` is bit 0, with ``|0>`` meaning H
and ``|1>`` meaning V.

Tolerances used by the whole package:

    * ``CONSTRUCTION_TOL`` (1e-12): normalization of constructed states.
    * ``UNITARY_TOL`` (1e-10): unitarity and Hermiticity checks.
    * ``PSD_TOL`` (1e-9): negative eigenvalues smaller than this are clipped.
    * ``RANK_TOL`` (1e-13): eigenvalues of a density matrix at or below this
      are roundoff; such a matrix counts as pure.
"""

# Import built-in modules
import logging
from functools import reduce

# Import 3rd party modules
import numpy as np
from scipy import linalg

# Import our own modules
from .exceptions import DimensionError, NotHermitianError, NotPhysicalError

logger = logging.getLogger(__name__)

CONSTRUCTION_TOL = 1e-12
UNITARY_TOL = 1e-10
PSD_TOL = 1e-9
RANK_TOL = 1e-13

# Pauli matrices
IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = {'I': IDENTITY, 'X': SIGMA_X, 'Y': SIGMA_Y, 'Z': SIGMA_Z}

def _is_ket(value):
    return np.ndim(value) == 1

def ket(amplitudes):
    """
    Returns *amplitudes* as a complex ket.  The length must be a power of two.
    """
    vec = np.array(amplitudes, dtype=complex).reshape(-1)
    dim = vec.shape[0]
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(
            "Ket dimension must be a power of two, got %d" % dim)
    if not np.all(np.isfinite(vec)):
        raise DimensionError("Ket contains NaN or Inf amplitudes")
    return vec

def basis_ket(bits):
    """
    Returns the computational basis ket for *bits*, either a string like
    ``'0101'`` or a sequence of 0/1 values (first entry = most significant).
    """
    bits = [int(b) for b in bits]
    index = 0
    for bit in bits:
        index = (index << 1) | bit
    vec = np.zeros(2 ** len(bits), dtype=complex)
    vec[index] = 1
    return vec

def norm(vec):
    return float(np.linalg.norm(vec))

def normalize(vec):
    """
    Returns *vec* scaled to unit norm.  Raises :class:`DimensionError` on the
    zero vector.
    """
    n = norm(vec)
    if n == 0:
        raise DimensionError("Can't normalize the zero vector")
    return vec / n

def inner(bra, vec):
    """Returns <bra|vec> (the first argument is conjugated)."""
    return complex(np.vdot(bra, vec))

def tensor(a, b):
    """
    Returns the Kronecker product of *a* and *b*.  Both must be kets or both
    must be operators; *a* owns the most significant index.
    """
    if _is_ket(a) != _is_ket(b):
        raise DimensionError(
            "Can't tensor a ket with an operator (got ndim %d and %d)"
            % (np.ndim(a), np.ndim(b)))
    return np.kron(a, b)

def tensor_all(factors):
    """Folds :func:`tensor` over *factors* from left to right."""
    factors = list(factors)
    if not factors:
        raise DimensionError("tensor_all() needs at least one factor")
    return reduce(tensor, factors)

def adjoint(m):
    """Returns the conjugate transpose of *m*."""
    return np.conjugate(np.transpose(m))

def projector(vec):
    """Returns |vec><vec|."""
    return np.outer(vec, np.conjugate(vec))

def is_unitary(m, tol=UNITARY_TOL):
    m = np.asarray(m)
    return bool(np.allclose(
        adjoint(m) @ m, np.eye(m.shape[0]), atol=tol, rtol=0))

def is_hermitian(m, tol=UNITARY_TOL):
    m = np.asarray(m)
    return bool(np.allclose(m, adjoint(m), atol=tol, rtol=0))

def herm_eig(m):
    """
    Eigendecomposition of a Hermitian matrix.  Returns ``(eigenvalues,
    eigenvectors)`` with real eigenvalues in ascending order and the
    orthonormal eigenvectors as the *columns* of the second array.

    Raises :class:`NotHermitianError` if *m* isn't Hermitian within 1e-10.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError("herm_eig() needs a square matrix")
    if not is_hermitian(m):
        raise NotHermitianError(
            "Matrix is not Hermitian (max |M - M^dag| = %.3g)"
            % np.max(np.abs(m - adjoint(m))))
    # Symmetrize so roundoff in the input can't leak into the eigenvectors
    values, vectors = linalg.eigh((m + adjoint(m)) / 2)
    return values, vectors

def matrix_sqrt_psd(m):
    """
    Returns the positive square root of a Hermitian positive-semidefinite
    matrix.  Eigenvalues in ``[-1e-9, 0)`` are clipped to zero; anything more
    negative raises :class:`NotPhysicalError`.
    """
    values, vectors = herm_eig(m)
    if values[0] < -PSD_TOL:
        raise NotPhysicalError(
            "Matrix is not positive semidefinite (smallest eigenvalue %.3g)"
            % values[0])
    roots = np.sqrt(np.clip(values, 0, None))
    return (vectors * roots) @ adjoint(vectors)
