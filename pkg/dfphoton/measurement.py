# -*- coding: utf-8 -*-

__doc__ = """\
Local polarization analysis of the four photons.

Each photon is measured in one of three bases.  Bit 0 is always the ``+1``
eigenvector of the matching Pauli matrix:

    ===== ================= ================== =======
    Basis bit 0             bit 1              Labels
    ===== ================= ================== =======
    Z     |0>               |1>                H / V
    X     (|0>+|1>)/sqrt2   (|0>-|1>)/sqrt2    + / -
    Y     (|0>+i|1>)/sqrt2  (|0>-i|1>)/sqrt2   R / L
    ===== ================= ================== =======

Imperfect experiments are emulated with a single knob, the visibility *v*,
which mixes the ideal state with white noise: ``v|psi><psi| + (1-v) 1/16``.
For a setting whose ideal outcomes fill ``n`` of the 16 bins the resulting
error rate is ``(1-v)(16-n)/16``; with four allowed outcomes that is
``(1-v)*3/4`` so a target QBER ``q`` needs ``v = 1 - 4q/3``.
"""

# Import built-in modules
import logging
from collections import namedtuple

# Import 3rd party modules
import numpy as np

# Import our own modules
from . import tensor_core
from .df_states import FourfoldOutcome, all_outcomes
from .exceptions import DimensionError, NotPhysicalError, SettingError

logger = logging.getLogger(__name__)

# Columns are the bit-0 and bit-1 eigenvectors
BASES = {
    'Z': np.eye(2, dtype=complex),
    'X': np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    'Y': np.array([[1, 1], [1j, -1j]], dtype=complex) / np.sqrt(2),
}
LABELS = {'Z': 'HV', 'X': '+-', 'Y': 'RL'}

# Experimental error rates quoted for the count histograms (panel -> QBER)
MEASURED_QBERS = {
    ('fig2', 'A'): 0.0391, ('fig2', 'B'): 0.0430,
    ('fig2', 'C'): 0.0711, ('fig2', 'D'): 0.0641,
    ('fig3', 'A'): 0.0523, ('fig3', 'B'): 0.0256,
    ('fig3', 'C'): 0.0682, ('fig3', 'D'): 0.0399,
}
MEASURED_QBER_ERRORS = {
    ('fig2', 'A'): 0.0044, ('fig2', 'B'): 0.0025,
    ('fig2', 'C'): 0.0050, ('fig2', 'D'): 0.0028,
    ('fig3', 'A'): 0.0046, ('fig3', 'B'): 0.0022,
    ('fig3', 'C'): 0.0075, ('fig3', 'D'): 0.0026,
}

class MeasurementSetting(namedtuple('MeasurementSetting', ['a', 'b', 'c', 'd'])):
    """The analysis basis (``'Z'``, ``'X'`` or ``'Y'``) of each photon."""
    __slots__ = ()

    def __new__(cls, a, b, c, d):
        bases = tuple(str(x).upper() for x in (a, b, c, d))
        for basis in bases:
            if basis not in BASES:
                raise SettingError("Unknown basis %r (use Z, X or Y)" % basis)
        return super(MeasurementSetting, cls).__new__(cls, *bases)

    @classmethod
    def parse(cls, text):
        """``'ZZXX'`` -> ``MeasurementSetting('Z', 'Z', 'X', 'X')``."""
        if isinstance(text, MeasurementSetting):
            return text
        text = "".join(text)
        if len(text) != 4:
            raise SettingError(
                "A measurement setting needs exactly four bases, got %r" % text)
        return cls(*text)

    def __str__(self):
        return "".join(self)

OutcomeDistribution = namedtuple('OutcomeDistribution', ['setting', 'probabilities'])
CountRecord = namedtuple(
    'CountRecord', ['setting', 'counts', 'total_expected', 'seed'])

def outcome_label(outcome, setting):
    """Returns the 4-character label of *outcome*, e.g. ``'HV+-'``."""
    setting = MeasurementSetting.parse(setting)
    return "".join(
        LABELS[basis][bit] for basis, bit in zip(setting, outcome))

def _as_density(state):
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        return tensor_core.projector(state)
    return state

def _measurement_basis(setting):
    """16x16 matrix whose columns are the product outcome vectors."""
    return tensor_core.tensor_all([BASES[basis] for basis in setting])

def outcome_probabilities(state, setting):
    """
    Returns the :class:`OutcomeDistribution` of the 16 fourfold outcomes when
    *state* (a 16-dim ket or density matrix) is measured in *setting*.
    """
    setting = MeasurementSetting.parse(setting)
    rho = _as_density(state)
    if rho.shape != (16, 16):
        raise DimensionError("outcome_probabilities() needs a four-photon state")
    basis = _measurement_basis(setting)
    probabilities = np.real(np.einsum(
        'ki,kl,li->i', np.conjugate(basis), rho, basis))
    probabilities = np.clip(probabilities, 0, None)
    total = probabilities.sum()
    if abs(total - 1) > 1e-10:
        raise NotPhysicalError(
            "Outcome probabilities sum to %.12g, is the state normalized?" % total)
    return OutcomeDistribution(setting, probabilities / total)

def support(distribution, tol=1e-12):
    """Returns the outcomes with nonzero probability."""
    return [o for o in all_outcomes()
            if distribution.probabilities[o.index] > tol]

def sample_counts(distribution, total_expected, seed):
    """
    Simulates a run with *total_expected* mean fourfold events: each of the 16
    bins is an independent Poisson draw with mean
    ``total_expected * probability``.  The same *seed* always gives the same
    :class:`CountRecord`.
    """
    if total_expected <= 0:
        raise ValueError("total_expected must be positive")
    rng = np.random.default_rng(seed)
    counts = rng.poisson(total_expected * np.asarray(distribution.probabilities))
    return CountRecord(distribution.setting, counts, float(total_expected), seed)

def qber(record, allowed):
    """
    Returns the fraction of counts in *record* that fall outside the *allowed*
    outcomes.
    """
    counts = np.asarray(record.counts)
    total = counts.sum()
    if total <= 0:
        raise ValueError("Can't compute a QBER from zero counts")
    allowed_idx = set(
        (o if isinstance(o, FourfoldOutcome) else FourfoldOutcome.from_bits(o)).index
        for o in allowed)
    false = sum(counts[i] for i in range(16) if i not in allowed_idx)
    return float(false) / float(total)

def visibility_from_qber(q):
    """``V = 1 - 2*QBER`` for ``0 <= QBER <= 1/2``."""
    if not 0 <= q <= 0.5:
        raise ValueError("QBER must lie in [0, 0.5], got %r" % q)
    return 1 - 2 * q

def visibility_for_qber(q, n_allowed=4):
    """
    Returns the white-noise visibility that produces error rate *q* in a
    setting whose ideal outcomes occupy *n_allowed* of the 16 bins.
    """
    if not 0 < n_allowed < 16:
        raise ValueError("n_allowed must be between 1 and 15")
    v = 1 - q * 16.0 / (16 - n_allowed)
    if not 0 <= v <= 1:
        raise ValueError(
            "QBER %r is not reachable with %d allowed outcomes" % (q, n_allowed))
    logger.debug("visibility_for_qber: qber=%g n_allowed=%d -> v=%g",
                 q, n_allowed, v)
    return v

def admix_visibility(state, v):
    """Returns ``v|state><state| + (1-v) 1/16`` as a 16x16 density matrix."""
    if not 0 <= v <= 1:
        raise ValueError("Visibility must lie in [0, 1], got %r" % v)
    rho = _as_density(state)
    if rho.shape != (16, 16):
        raise DimensionError("admix_visibility() needs a four-photon state")
    return v * rho + (1 - v) * np.eye(16) / 16

def sign_vector(active):
    """
    Returns the +/-1 eigenvalue of every outcome for the product of the Pauli
    observables on the *active* photons (booleans in a, b, c, d order).
    """
    signs = np.ones(16)
    for outcome in all_outcomes():
        parity = sum(bit for bit, on in zip(outcome, active) if on)
        signs[outcome.index] = -1 if parity % 2 else 1
    return signs

def expectation_from_distribution(probabilities, active):
    """
    Estimates a product-of-Paulis expectation from an outcome table (either
    probabilities or raw counts, which are normalized here).
    """
    probabilities = np.asarray(probabilities, dtype=float)
    total = probabilities.sum()
    if total <= 0:
        raise ValueError("Empty outcome table")
    return float(np.dot(sign_vector(active), probabilities) / total)
