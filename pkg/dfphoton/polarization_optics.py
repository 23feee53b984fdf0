# -*- coding: utf-8 -*-

__doc__ = """\
Jones calculus for the birefringent plates that simulate collective noise,
plus the helpers to build, decompose and apply such noise.

Conventions (fixed, everything downstream depends on them):

    * Angles are the fast-axis angle from horizontal in degrees.
    * A half-wave plate is ``[[cos 2t, sin 2t], [sin 2t, -cos 2t]]`` (det -1).
    * A quarter-wave plate gives the slow axis a phase of ``-i`` relative to
      the fast axis, so ``qwp(0) == diag(1, -i)`` (det -i).
    * A list of plates is traversed in order: the first plate acts first.

With these conventions ``waveplate_channel(DEFAULT_PLATES)`` (a HWP at 59
degrees followed by a QWP at 13.5 degrees) has, after :func:`align_phase`,
Pauli coefficients ``(-0.0124i, -0.332, -0.707, +0.624)`` on
``(1, sigma_z, sigma_y, sigma_x)``.
"""

# Import built-in modules
import logging
from collections import namedtuple

# Import 3rd party modules
import numpy as np
from scipy.stats import unitary_group

# Import our own modules
from . import tensor_core
from .tensor_core import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, UNITARY_TOL
from .exceptions import DimensionError, NormalizationError

logger = logging.getLogger(__name__)

HWP = 'HWP'
QWP = 'QWP'

class WaveplateSetting(namedtuple('WaveplateSetting', ['kind', 'angle'])):
    """A single plate: *kind* is ``'HWP'`` or ``'QWP'``, *angle* in degrees."""
    __slots__ = ()

    def __new__(cls, kind, angle):
        kind = str(kind).upper()
        if kind not in (HWP, QWP):
            raise ValueError("Unknown waveplate kind: %r" % kind)
        return super(WaveplateSetting, cls).__new__(
            cls, kind, float(angle) % 180.0)

    def __str__(self):
        return "%s:%g" % self

PauliCoefficients = namedtuple('PauliCoefficients', ['a_id', 'a_z', 'a_y', 'a_x'])

DEFAULT_PLATES = (WaveplateSetting(HWP, 59), WaveplateSetting(QWP, 13.5))
# As printed; the sign of the identity term can't be reproduced (see DESIGN.md)
DEFAULT_PAULI = PauliCoefficients(0.012j, -0.332, -0.707, 0.624)

def hwp(angle):
    """Jones matrix of a half-wave plate with its fast axis at *angle* degrees."""
    t = np.deg2rad(angle)
    c, s = np.cos(2 * t), np.sin(2 * t)
    return np.array([[c, s], [s, -c]], dtype=complex)

def qwp(angle):
    """Jones matrix of a quarter-wave plate with its fast axis at *angle* degrees."""
    t = np.deg2rad(angle)
    c, s = np.cos(t), np.sin(t)
    off = (1 + 1j) * s * c
    return np.array([
        [c ** 2 - 1j * s ** 2, off],
        [off, s ** 2 - 1j * c ** 2]
    ], dtype=complex)

def waveplate(setting):
    """Returns the Jones matrix for a :class:`WaveplateSetting`."""
    if setting.kind == HWP:
        return hwp(setting.angle)
    return qwp(setting.angle)

def parse_plates(text):
    """
    Parses a plate list like ``'HWP:59, QWP:13.5'`` into a tuple of
    :class:`WaveplateSetting`.
    """
    plates = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        kind, sep, angle = item.partition(':')
        if not sep:
            raise ValueError("Plate %r should look like 'HWP:59'" % item)
        plates.append(WaveplateSetting(kind.strip(), float(angle)))
    if not plates:
        raise ValueError("Empty plate list")
    return tuple(plates)

def waveplate_channel(plates):
    """
    Returns the 2x2 unitary of light passing through *plates* (an ordered
    sequence of :class:`WaveplateSetting`) in order.
    """
    plates = list(plates)
    if not plates:
        raise ValueError("waveplate_channel() needs at least one plate")
    u = IDENTITY
    for plate in plates:
        u = waveplate(plate) @ u # Later plates act after earlier ones
    return u

def pauli_decompose(u):
    """
    Returns the :class:`PauliCoefficients` of the 2x2 matrix *u* so that
    ``u = a_id*1 + a_z*sigma_z + a_y*sigma_y + a_x*sigma_x``.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise DimensionError("pauli_decompose() needs a 2x2 matrix")
    return PauliCoefficients(
        complex(np.trace(u)) / 2,
        complex(np.trace(SIGMA_Z @ u)) / 2,
        complex(np.trace(SIGMA_Y @ u)) / 2,
        complex(np.trace(SIGMA_X @ u)) / 2,
    )

def pauli_reconstruct(coefficients):
    """Inverse of :func:`pauli_decompose`."""
    a_id, a_z, a_y, a_x = coefficients
    return a_id * IDENTITY + a_z * SIGMA_Z + a_y * SIGMA_Y + a_x * SIGMA_X

def align_phase(coefficients):
    """
    Multiplies all of *coefficients* by the unit phase that makes the
    ``sigma_x`` coefficient real and positive.  Returns them unchanged if that
    coefficient vanishes.
    """
    a_x = coefficients.a_x
    if abs(a_x) < 1e-15:
        return coefficients
    phase = abs(a_x) / a_x
    return PauliCoefficients(*(phase * a for a in coefficients))

def noise_from_pauli(coefficients, tol=1e-3):
    """
    Builds a unitary from explicit Pauli *coefficients* (in ``a_id, a_z, a_y,
    a_x`` order).  Printed coefficients are rounded so they are renormalized
    first; if the result isn't unitary within *tol* before renormalizing
    :class:`NormalizationError` is raised.
    """
    u = pauli_reconstruct(PauliCoefficients(*(complex(a) for a in coefficients)))
    weight = sum(abs(complex(a)) ** 2 for a in coefficients)
    if weight == 0:
        raise NormalizationError("All Pauli coefficients are zero")
    if not tensor_core.is_unitary(u, tol=tol):
        raise NormalizationError(
            "Pauli coefficients %r don't describe a unitary" % (coefficients,))
    u = u / np.sqrt(weight)
    # Polar projection removes what's left of the rounding
    left, _, right = np.linalg.svd(u)
    return left @ right

def haar_su2(rng):
    """
    Draws a Haar-random element of SU(2) from the
    :class:`numpy.random.Generator` *rng*.

    Uses ``[[e^{i psi} cos t, e^{i chi} sin t], [-e^{-i chi} sin t,
    e^{-i psi} cos t]]`` with ``t = arcsin(sqrt(xi))`` for a uniform ``xi`` and
    uniform phases ``psi`` and ``chi``.
    """
    xi, psi, chi = rng.random(3)
    t = np.arcsin(np.sqrt(xi))
    psi, chi = 2 * np.pi * psi, 2 * np.pi * chi
    return np.array([
        [np.exp(1j * psi) * np.cos(t), np.exp(1j * chi) * np.sin(t)],
        [-np.exp(-1j * chi) * np.sin(t), np.exp(-1j * psi) * np.cos(t)]
    ], dtype=complex)

def haar_u2(rng):
    """Draws a Haar-random element of U(2) (det is a random phase)."""
    return unitary_group.rvs(2, random_state=rng)

def collective(u, n):
    """Returns the *n*-fold tensor power of *u* (the same noise on n photons)."""
    if n < 1:
        raise ValueError("collective() needs n >= 1, got %r" % n)
    if not tensor_core.is_unitary(u, tol=UNITARY_TOL):
        raise ValueError("collective() expects a unitary")
    return tensor_core.tensor_all([u] * n)

def apply(op, state):
    """
    Returns ``op|state>``.  The result is renormalized only when its norm has
    drifted by more than 1e-12.
    """
    op = np.asarray(op)
    state = np.asarray(state, dtype=complex)
    if op.shape[1] != state.shape[0]:
        raise DimensionError(
            "Operator of dim %d can't act on a ket of dim %d"
            % (op.shape[1], state.shape[0]))
    out = op @ state
    n = tensor_core.norm(out)
    if abs(n - tensor_core.norm(state)) > tensor_core.CONSTRUCTION_TOL and n:
        out = out / n
    return out

def apply_to_density(op, rho):
    """Returns ``op rho op^dag``."""
    op = np.asarray(op)
    rho = np.asarray(rho, dtype=complex)
    if op.shape[1] != rho.shape[0]:
        raise DimensionError(
            "Operator of dim %d can't act on a density matrix of dim %d"
            % (op.shape[1], rho.shape[0]))
    return op @ rho @ tensor_core.adjoint(op)
