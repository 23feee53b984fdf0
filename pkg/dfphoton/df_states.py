# -*- coding: utf-8 -*-

__doc__ = """\
The decoherence-free (DF) basis states of four photons and the logical qubit
encoded in them.

The two DF basis states are::

    |Phi0> = |psi->_ab (x) |psi->_cd
    |Phi1> = (2|0011> - |0101> - |0110> - |1001> - |1010> + 2|1100>) / (2*sqrt(3))

and a logical qubit ``c0|0> + c1|1>`` is stored as ``c0|Phi0> + c1|Phi1>``.
Both are invariant (up to a global phase) under any collective noise
``U (x) U (x) U (x) U``.

The two basis states can be told apart with local measurements only: measure
photons a and b in the computational basis and photons c and d in the Hadamard
basis (``|0~> = (|0>+|1>)/sqrt(2)``, ``|1~> = (|0>-|1>)/sqrt(2)``).  An outcome
with ``a != b`` and ``c != d`` can only come from ``|Phi0>``; the other twelve
outcomes can only come from ``|Phi1>``.
"""

# Import built-in modules
import logging
import itertools
from collections import namedtuple, OrderedDict

# Import 3rd party modules
import numpy as np

# Import our own modules
from . import tensor_core
from .tensor_core import CONSTRUCTION_TOL
from .exceptions import (
    NormalizationError, OutsideSubspaceError, SettingError, DimensionError)

logger = logging.getLogger(__name__)

PHI0_CONSISTENT = 'Phi0Consistent'
PHI1_CONSISTENT = 'Phi1Consistent'
MIXED_SETTING = ('Z', 'Z', 'X', 'X')
# Below this |c0| the global phase is fixed on c1 instead
PHASE_THRESHOLD = 1e-8

LogicalQubit = namedtuple('LogicalQubit', ['c0', 'c1'])

class FourfoldOutcome(namedtuple('FourfoldOutcome', ['a', 'b', 'c', 'd'])):
    """
    One bit per photon.  What a bit means depends on the basis it was measured
    in: 0/1 is H/V for Z, +/- for X and R/L for Y.
    """
    __slots__ = ()

    @property
    def index(self):
        """Position of this outcome in a 16-entry table (photon a = MSB)."""
        return (self.a << 3) | (self.b << 2) | (self.c << 1) | self.d

    @classmethod
    def from_index(cls, index):
        return cls(*((index >> shift) & 1 for shift in (3, 2, 1, 0)))

    @classmethod
    def from_bits(cls, bits):
        """*bits* may be a string like ``'0110'`` or any 4-item sequence."""
        bits = [int(b) for b in bits]
        if len(bits) != 4 or any(b not in (0, 1) for b in bits):
            raise SettingError(
                "A fourfold outcome needs exactly four binary entries")
        return cls(*bits)

    def __str__(self):
        return "%d%d%d%d" % self

def all_outcomes():
    """Returns the 16 outcomes in table order (0000, 0001, ..., 1111)."""
    return [FourfoldOutcome(*bits) for bits in itertools.product((0, 1), repeat=4)]

def singlet():
    """Returns |psi-> = (|01> - |10>)/sqrt(2)."""
    return tensor_core.ket([0, 1, -1, 0]) / np.sqrt(2)

def phi0():
    """Returns |Phi0> = |psi->_ab (x) |psi->_cd."""
    return tensor_core.tensor(singlet(), singlet())

def phi1():
    """Returns the second DF basis state |Phi1>."""
    amplitudes = np.zeros(16, dtype=complex)
    for bits, weight in (('0011', 2), ('0101', -1), ('0110', -1),
                         ('1001', -1), ('1010', -1), ('1100', 2)):
        amplitudes[int(bits, 2)] = weight
    return amplitudes / (2 * np.sqrt(3))

def psi_l():
    """Returns |Psi_L> = (sqrt(3)|Phi0> - |Phi1>)/2."""
    return encode_logical(LogicalQubit(np.sqrt(3) / 2, -0.5))

def _check_logical(q):
    weight = abs(q.c0) ** 2 + abs(q.c1) ** 2
    if abs(weight - 1) > CONSTRUCTION_TOL:
        raise NormalizationError(
            "Logical qubit is not normalized (|c0|^2 + |c1|^2 = %.15g)"
            % weight)

def encode_logical(q):
    """
    Returns the four-photon ket ``q.c0|Phi0> + q.c1|Phi1>`` for the
    :class:`LogicalQubit` *q*.
    """
    _check_logical(q)
    state = complex(q.c0) * phi0() + complex(q.c1) * phi1()
    return tensor_core.normalize(state)

def decode_logical(state):
    """
    Projects a normalized four-photon *state* onto the DF subspace.

    Returns ``(q, residual)`` where *q* is the renormalized
    :class:`LogicalQubit` with its global phase fixed (c0 real and
    nonnegative, or c1 when ``|c0| < 1e-8``) and *residual* is the weight
    outside the subspace.  Raises :class:`OutsideSubspaceError` when the state
    is orthogonal to the subspace.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (16,):
        raise DimensionError("decode_logical() needs a 16-dim ket")
    c0 = tensor_core.inner(phi0(), state)
    c1 = tensor_core.inner(phi1(), state)
    kept = abs(c0) ** 2 + abs(c1) ** 2
    residual = 1 - kept
    if residual > 1 - CONSTRUCTION_TOL:
        raise OutsideSubspaceError(
            "State is orthogonal to the decoherence-free subspace")
    if residual > CONSTRUCTION_TOL:
        logger.warning("decode_logical: residual weight %.3g", residual)
    scale = np.sqrt(kept)
    c0, c1 = c0 / scale, c1 / scale
    anchor = c0 if abs(c0) >= PHASE_THRESHOLD else c1
    phase = anchor / abs(anchor)
    return LogicalQubit(c0 / phase, c1 / phase), max(residual, 0.0)

def random_logical_qubit(rng):
    """
    Draws a logical qubit uniformly from the Bloch sphere using two uniform
    variates of the :class:`numpy.random.Generator` *rng*.
    """
    u, v = rng.random(2)
    theta = np.arccos(1 - 2 * u)
    phi = 2 * np.pi * v
    return LogicalQubit(np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2))

def logical_from_bloch(theta, phi):
    """Returns ``cos(theta/2)|0> + exp(i*phi) sin(theta/2)|1>`` (radians)."""
    return LogicalQubit(
        complex(np.cos(theta / 2)), complex(np.exp(1j * phi) * np.sin(theta / 2)))

def _hadamard():
    return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

def expand_mixed_basis(state):
    """
    Returns the coefficients of *state* in the product basis with photons a,b
    in the computational basis and c,d in the Hadamard basis, as an
    :class:`~collections.OrderedDict` mapping every :class:`FourfoldOutcome`
    (in table order) to its complex amplitude.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (16,):
        raise DimensionError("expand_mixed_basis() needs a 16-dim ket")
    # The Hadamard matrix is real and symmetric so it is its own bra matrix
    change = tensor_core.tensor_all(
        [tensor_core.IDENTITY, tensor_core.IDENTITY, _hadamard(), _hadamard()])
    coefficients = change @ state
    return OrderedDict(
        (outcome, complex(coefficients[outcome.index]))
        for outcome in all_outcomes())

def classify_outcome(outcome, setting=MIXED_SETTING):
    """
    Returns :data:`PHI0_CONSISTENT` if *outcome* (measured in the
    ``(Z, Z, X, X)`` setting) could have come from |Phi0>, otherwise
    :data:`PHI1_CONSISTENT`.
    """
    if tuple(setting) != MIXED_SETTING:
        raise SettingError(
            "classify_outcome() only works for the (Z, Z, X, X) setting, "
            "got %r" % (tuple(setting),))
    if not isinstance(outcome, FourfoldOutcome):
        outcome = FourfoldOutcome.from_bits(outcome)
    if outcome.a != outcome.b and outcome.c != outcome.d:
        return PHI0_CONSISTENT
    return PHI1_CONSISTENT

def support_phi0():
    """The four (Z, Z, X, X) outcomes consistent with |Phi0>."""
    return [o for o in all_outcomes() if classify_outcome(o) == PHI0_CONSISTENT]

def support_phi1():
    """The twelve (Z, Z, X, X) outcomes consistent with |Phi1>."""
    return [o for o in all_outcomes() if classify_outcome(o) == PHI1_CONSISTENT]
