# -*- coding: utf-8 -*-

__doc__ = """\
Tomography of the logical qubit using local measurements only.

Three four-photon observables are enough::

    Sigma_z = sz (x) sz (x) sx (x) sx
    Sigma_x = sz (x) sx (x) sz (x) sx
    Sigma_y = sy (x) sx (x) sz (x) 1

and the logical density matrix (in the ``{|Phi0>, |Phi1>}`` basis) follows
from their expectation values::

    rho_11    = (3<Sigma_z> + 1) / 4
    Re rho_12 = sqrt(3) (2<Sigma_x> + <Sigma_z> - 1) / 4
    Im rho_12 = sqrt(3) <Sigma_y> / 2

Each observable is a product of single-photon Paulis so it is measured by
analyzing every photon in the matching basis and multiplying the +/-1
outcomes.  The identity factor of ``Sigma_y`` means photon d may be analyzed
in any basis and ignored; Z is used unless told otherwise.
"""

# Import built-in modules
import logging
from collections import namedtuple, OrderedDict

# Import 3rd party modules
import numpy as np

# Import our own modules
from . import tensor_core, measurement, df_states
from .polarization_optics import apply, collective
from .tensor_core import PAULI, PSD_TOL, RANK_TOL
from .exceptions import NotPhysicalError, DimensionError

logger = logging.getLogger(__name__)

SigmaObservable = namedtuple('SigmaObservable', ['name', 'factors', 'matrix'])
TomographyResult = namedtuple(
    'TomographyResult', ['rho', 'expectations', 'residual', 'projected'])

SIGMA_FACTORS = OrderedDict([
    ('SigmaZ', ('Z', 'Z', 'X', 'X')),
    ('SigmaX', ('Z', 'X', 'Z', 'X')),
    ('SigmaY', ('Y', 'X', 'Z', 'I')),
])

def sigma_observables():
    """Returns the three :class:`SigmaObservable` in z, x, y order."""
    return [SigmaObservable(name, factors,
                            tensor_core.tensor_all(PAULI[f] for f in factors))
            for name, factors in SIGMA_FACTORS.items()]

def setting_for(observable, idle_basis='Z'):
    """
    Returns the :class:`~dfphoton.measurement.MeasurementSetting` that
    measures *observable*; photons with an identity factor use *idle_basis*.
    """
    return measurement.MeasurementSetting(*(
        idle_basis if f == 'I' else f for f in observable.factors))

def _active(observable):
    return [f != 'I' for f in observable.factors]

def expectation(state, observable):
    """
    Returns ``Tr(rho Sigma)`` for a 16-dim ket or density matrix *state*.
    An imaginary part above 1e-8 means something upstream is broken and raises
    :class:`NotPhysicalError`.
    """
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        value = np.vdot(state, observable.matrix @ state)
    else:
        value = np.trace(state @ observable.matrix)
    if abs(value.imag) > 1e-8:
        raise NotPhysicalError(
            "Expectation of %s has imaginary part %.3g"
            % (observable.name, value.imag))
    return float(value.real)

def expectation_from_counts(counts, observable):
    """
    Estimates ``<Sigma>`` from an outcome table measured with
    :func:`setting_for` *observable* (probabilities or raw counts).
    """
    return measurement.expectation_from_distribution(counts, _active(observable))

def reconstruct(ez, ex, ey):
    """
    Returns the 2x2 logical density matrix for the expectation values of
    ``Sigma_z``, ``Sigma_x`` and ``Sigma_y``.  The result may be unphysical
    when the inputs come from noisy data; see :func:`project_physical`.
    """
    rho11 = (3 * ez + 1) / 4.0
    rho12 = (np.sqrt(3) * (2 * ex + ez - 1) / 4.0
             + 1j * np.sqrt(3) * ey / 2.0)
    return np.array([
        [rho11, rho12],
        [np.conjugate(rho12), 1 - rho11]
    ], dtype=complex)

def forward(rho_logical):
    """
    The inverse of :func:`reconstruct`: returns ``(<Sigma_z>, <Sigma_x>,
    <Sigma_y>)`` of a 2x2 logical density matrix embedded in the DF subspace.
    """
    basis = np.column_stack([df_states.phi0(), df_states.phi1()])
    rho = basis @ np.asarray(rho_logical, dtype=complex) @ tensor_core.adjoint(basis)
    return tuple(expectation(rho, obs) for obs in sigma_observables())

def is_physical(rho, tol=PSD_TOL):
    """Hermitian, unit trace and no eigenvalue below ``-tol``."""
    rho = np.asarray(rho, dtype=complex)
    if not tensor_core.is_hermitian(rho):
        return False
    if abs(np.trace(rho) - 1) > tensor_core.UNITARY_TOL:
        return False
    values, _ = tensor_core.herm_eig(rho)
    return bool(values[0] >= -tol)

def project_physical(rho):
    """
    Clips negative eigenvalues of the Hermitian matrix *rho* to zero and
    rescales to unit trace.  Physical input comes back unchanged.
    """
    values, vectors = tensor_core.herm_eig(rho)
    clipped = np.clip(values, 0, None)
    if clipped.sum() <= 0:
        raise NotPhysicalError("No positive weight left after clipping")
    clipped = clipped / clipped.sum()
    return (vectors * clipped) @ tensor_core.adjoint(vectors)

def _check_physical(rho, what):
    if not is_physical(rho):
        raise NotPhysicalError("%s is not a physical density matrix" % what)

def _pure_vector(rho):
    """
    Returns the eigenvector of *rho* when its other eigenvalues are all at or
    below ``RANK_TOL``, else ``None``.
    """
    values, vectors = tensor_core.herm_eig(rho)
    if values[-2] <= RANK_TOL:
        return vectors[:, -1]
    return None

def fidelity(rho, sigma):
    """
    Returns ``Tr sqrt(sqrt(sigma) rho sqrt(sigma))``, clamped to ``[0, 1]``.

    When either argument is pure, ``|psi><psi|``, this is evaluated as
    ``sqrt(<psi|other|psi>)``: the square root of the rank-deficient product
    would turn eigenvalue roundoff into errors of order 1e-9.
    """
    _check_physical(rho, "First argument")
    _check_physical(sigma, "Second argument")
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise DimensionError("fidelity() needs matrices of the same shape")
    for pure, other in ((sigma, rho), (rho, sigma)):
        psi = _pure_vector(pure)
        if psi is not None:
            overlap = float(np.real(np.vdot(psi, other @ psi)))
            return min(float(np.sqrt(max(overlap, 0.0))), 1.0)
    root = tensor_core.matrix_sqrt_psd(sigma)
    inner = root @ rho @ root
    inner = (inner + tensor_core.adjoint(inner)) / 2
    value = float(np.real(np.trace(tensor_core.matrix_sqrt_psd(inner))))
    return min(max(value, 0.0), 1.0)

def trace_distance(rho, sigma):
    """Returns half the trace norm of ``rho - sigma``."""
    diff = np.asarray(rho, dtype=complex) - np.asarray(sigma, dtype=complex)
    values, _ = tensor_core.herm_eig((diff + tensor_core.adjoint(diff)) / 2)
    return float(np.sum(np.abs(values)) / 2)

def subspace_residual(state):
    """Weight of a four-photon ket or density matrix outside the DF subspace."""
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        state = tensor_core.projector(state)
    kept = sum(np.real(np.vdot(v, state @ v))
               for v in (df_states.phi0(), df_states.phi1()))
    return max(float(1 - kept), 0.0)

def tomography_pipeline(state, total_expected=None, seed=None, idle_basis='Z'):
    """
    Reconstructs the logical qubit carried by the four-photon *state* (ket or
    16x16 density matrix) from the three local measurement settings.

    With *total_expected* unset the exact outcome probabilities are used and
    the result must be physical (:class:`NotPhysicalError` otherwise).  With
    *total_expected* set each setting is sampled with
    :func:`~dfphoton.measurement.sample_counts` (seeds derived from *seed*)
    and the reconstruction is projected onto the physical states.

    Returns a :class:`TomographyResult`.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape not in ((16,), (16, 16)):
        raise DimensionError("tomography_pipeline() needs a four-photon state")
    observables = sigma_observables()
    sampled = bool(total_expected)
    if sampled:
        seeds = np.random.SeedSequence(seed).spawn(len(observables))
    expectations = []
    for i, obs in enumerate(observables):
        dist = measurement.outcome_probabilities(state, setting_for(obs, idle_basis))
        table = dist.probabilities
        if sampled:
            table = measurement.sample_counts(dist, total_expected, seeds[i]).counts
        expectations.append(expectation_from_counts(table, obs))
    rho = reconstruct(*expectations)
    residual = subspace_residual(state)
    if residual > 1e-10:
        logger.warning("tomography: %.3g of the weight is outside the DF subspace",
                     residual)
    projected = False
    if sampled:
        if not is_physical(rho):
            logger.warning("tomography: reconstruction needed physicality projection")
            projected = True
        rho = project_physical(rho)
    else:
        _check_physical(rho, "Exact reconstruction")
    return TomographyResult(rho, tuple(expectations), residual, projected)

def reference_frame_readout(q, u, total_expected=None, seed=None):
    """
    A receiver whose polarization frame differs from the sender's by *u* reads
    the logical qubit *q* with local measurements only.  Returns the fidelity
    between what was sent and what was reconstructed.
    """
    sent = df_states.encode_logical(q)
    received = apply(collective(u, 4), sent)
    result = tomography_pipeline(received, total_expected, seed)
    target = tensor_core.projector(np.array([q.c0, q.c1], dtype=complex))
    return fidelity(result.rho, target)
