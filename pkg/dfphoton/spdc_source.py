# -*- coding: utf-8 -*-

__doc__ = """\
A bosonic Fock-space model of the four-photon source.

Photon pairs are emitted into the spatial modes ``a0`` and ``b0`` in the
singlet state, i.e. by the pair creation operator::

    S^dag = a0H^dag b0V^dag - a0V^dag b0H^dag

Two 50:50 beam splitters then send ``a0`` to ``a``/``b`` and ``b0`` to
``c``/``d`` and only events with exactly one photon in each of ``a``, ``b``,
``c`` and ``d`` are kept.

Two sources of four photons are modelled:

    * **Second order emission** of a single pulse, ``tau^2 (S^dag)^2 / 2``.
      After post-selection this is exactly |Phi1>, and swapping modes
      ``b <-> c`` turns it into ``(sqrt(3)|Phi0> - |Phi1>)/2``.
    * **Two consecutive pulses**, each emitting one normalized singlet pair.
      Photons from different pulses are distinguishable so the post-selected
      result is an ensemble of four pairing configurations rather than one
      ket; :func:`two_pulse_product` returns them separately.

All amplitudes are reported relative to the pair amplitude *tau* (default 1),
so the ratio of the two fourfold rates, :func:`rate_ratio`, is 3 whatever
*tau* is.

.. note::

    The beam splitters are symmetric: ``in^dag -> (out1^dag + out2^dag)/sqrt(2)``
    with no relative phase on either output.
"""

# Import built-in modules
import logging
from collections import namedtuple, OrderedDict
from types import MappingProxyType

# Import 3rd party modules
import numpy as np
from scipy.special import comb, factorial

# Import our own modules
from .exceptions import (
    DimensionError, EmptyProjectionError, MixedStateError)

logger = logging.getLogger(__name__)

SPATIAL_MODES = ('a0', 'b0', 'a', 'b', 'c', 'd')
ARMS = ('a', 'b', 'c', 'd')
POLARIZATIONS = ('H', 'V')
# Amplitudes smaller than this are dropped (they are interference leftovers)
ZERO_TOL = 1e-13

class ModeLabel(namedtuple('ModeLabel', ['spatial', 'polarization', 'pulse'])):
    """One optical mode: spatial path, polarization (H/V) and pump pulse."""
    __slots__ = ()

    def __new__(cls, spatial, polarization, pulse=1):
        if spatial not in SPATIAL_MODES:
            raise ValueError("Unknown spatial mode: %r" % (spatial,))
        if polarization not in POLARIZATIONS:
            raise ValueError("Unknown polarization: %r" % (polarization,))
        if int(pulse) < 1:
            raise ValueError("Pulse index must be >= 1")
        return super(ModeLabel, cls).__new__(
            cls, spatial, polarization, int(pulse))

    def __str__(self):
        return "%s%s/%d" % self

PostselectionResult = namedtuple(
    'PostselectionResult', ['state', 'probability', 'weight'])
PairingConfiguration = namedtuple(
    'PairingConfiguration', ['label', 'pairs', 'probability', 'weight', 'state'])

def _key(occupation):
    """Turns a {mode: n} mapping into the canonical hashable term key."""
    return tuple(sorted((m, n) for m, n in occupation.items() if n))

class FockState(object):
    """
    An immutable sparse superposition of Fock basis states.

    :attr:`terms` maps each occupation (a sorted tuple of ``(ModeLabel, n)``
    pairs, zero occupations omitted) to its complex amplitude.  Zero
    amplitudes are never stored.
    """
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        combined = {}
        for key, amp in (terms or {}).items():
            key = _key(dict(key))
            combined[key] = combined.get(key, 0) + complex(amp)
        self._terms = MappingProxyType(OrderedDict(
            (key, amp) for key, amp in sorted(combined.items())
            if abs(amp) > ZERO_TOL))

    @property
    def terms(self):
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __repr__(self):
        parts = []
        for key, amp in self:
            label = " ".join("%s^%d" % (m, n) for m, n in key) or "vac"
            parts.append("(%.4g%+.4gj)|%s>" % (amp.real, amp.imag, label))
        return "FockState(%s)" % (" + ".join(parts) or "0")

    def amplitude(self, occupation):
        """Returns the amplitude of *occupation* (a {ModeLabel: n} mapping)."""
        return self._terms.get(_key(dict(occupation)), 0j)

    def norm_squared(self):
        return float(sum(abs(amp) ** 2 for amp in self._terms.values()))

    def photon_numbers(self):
        """Returns the set of total photon numbers present."""
        return set(sum(n for _, n in key) for key in self._terms)

    def scaled(self, factor):
        return FockState(dict((k, factor * a) for k, a in self._terms.items()))

def vacuum():
    """Returns the vacuum state with amplitude 1."""
    return FockState({(): 1})

def _add(*weighted):
    """Returns the linear combination of ``(coefficient, FockState)`` pairs."""
    terms = {}
    for coefficient, state in weighted:
        for key, amp in state:
            terms[key] = terms.get(key, 0) + coefficient * amp
    return FockState(terms)

def create(f, mode):
    """
    Applies the creation operator of *mode* to *f*:
    ``|..., n, ...> -> sqrt(n+1) |..., n+1, ...>``.
    """
    terms = {}
    for key, amp in f:
        occupation = dict(key)
        n = occupation.get(mode, 0)
        occupation[mode] = n + 1
        new_key = _key(occupation)
        terms[new_key] = terms.get(new_key, 0) + amp * np.sqrt(n + 1)
    return FockState(terms)

def pair_singlet(f, pulse=1, tau=1.0):
    """
    Applies ``tau * S^dag`` for the given *pulse* to *f*, where
    ``S^dag = a0H^dag b0V^dag - a0V^dag b0H^dag`` creates a singlet pair.
    """
    hv = create(create(f, ModeLabel('a0', 'H', pulse)), ModeLabel('b0', 'V', pulse))
    vh = create(create(f, ModeLabel('a0', 'V', pulse)), ModeLabel('b0', 'H', pulse))
    return _add((tau, hv), (-tau, vh))

def second_order_emission(tau=1.0):
    """
    Returns the four-photon term of a single pulse, ``tau^2 (S^dag)^2 |vac> / 2``.
    Its squared norm is ``3 tau^4``.
    """
    state = pair_singlet(pair_singlet(vacuum(), 1, tau), 1, tau)
    return state.scaled(0.5)

def beam_splitter(f, input, out1, out2):
    """
    Sends spatial mode *input* through a symmetric 50:50 beam splitter with
    outputs *out1* and *out2*, for both polarizations and every pulse.  The
    outputs must be empty beforehand.
    """
    for key, _ in f:
        for mode, _ in key:
            if mode.spatial in (out1, out2):
                raise DimensionError(
                    "Beam splitter output %r is already occupied" % mode.spatial)
    pieces = []
    for key, amp in f:
        rest = dict((m, n) for m, n in key if m.spatial != input)
        moved = [(m, n) for m, n in key if m.spatial == input]
        # |n> = (m^dag)^n |0> / sqrt(n!), so strip the input modes first
        scale = amp / np.prod([np.sqrt(factorial(n)) for _, n in moved])
        piece = FockState({_key(rest): scale})
        for mode, n in moved:
            o1 = ModeLabel(out1, mode.polarization, mode.pulse)
            o2 = ModeLabel(out2, mode.polarization, mode.pulse)
            expanded = []
            for k in range(n + 1):
                term = piece
                for _ in range(k):
                    term = create(term, o1)
                for _ in range(n - k):
                    term = create(term, o2)
                expanded.append((comb(n, k) / 2 ** (n / 2.0), term))
            piece = _add(*expanded)
        pieces.append((1, piece))
    return _add(*pieces)

def _one_per_arm(f):
    """
    Groups the terms of *f* with exactly one photon in each arm by their pulse
    pattern (the pulse index seen in arms a, b, c, d).  Each group becomes an
    unnormalized 16-dim polarization ket.
    """
    groups = OrderedDict()
    for key, amp in f:
        if sum(n for _, n in key) != 4:
            continue
        per_arm = dict((arm, []) for arm in ARMS)
        for mode, n in key:
            if mode.spatial not in per_arm:
                break
            per_arm[mode.spatial].extend([mode] * n)
        else:
            if all(len(per_arm[arm]) == 1 for arm in ARMS):
                modes = [per_arm[arm][0] for arm in ARMS]
                pattern = tuple(m.pulse for m in modes)
                index = 0
                for m in modes:
                    index = (index << 1) | POLARIZATIONS.index(m.polarization)
                vec = groups.setdefault(pattern, np.zeros(16, dtype=complex))
                vec[index] += amp
    return groups

def postselect_one_per_arm(f):
    """
    Keeps only the part of *f* with one photon in each of a, b, c and d and
    returns it as a :class:`PostselectionResult`: the normalized polarization
    ket (photon a = most significant qubit, H = 0), the probability of the
    fourfold event given *f*, and the unnormalized kept weight (the relative
    fourfold rate).

    Raises :class:`EmptyProjectionError` when nothing survives and
    :class:`MixedStateError` when the survivors come from distinguishable
    pulses (see :func:`two_pulse_product`).
    """
    total = f.norm_squared()
    groups = _one_per_arm(f)
    if not groups or total == 0:
        raise EmptyProjectionError(
            "No term has exactly one photon in each of the four arms")
    if len(groups) > 1:
        raise MixedStateError(
            "Post-selected photons come from %d distinguishable pulse patterns"
            % len(groups))
    vec = list(groups.values())[0]
    weight = float(np.vdot(vec, vec).real)
    logger.debug(
        "postselect: kept weight %.6g of %.6g", weight, total)
    return PostselectionResult(vec / np.sqrt(weight), weight / total, weight)

def swap_modes(value, m1, m2):
    """
    Swaps the spatial modes *m1* and *m2*.  *value* may be a
    :class:`FockState` or a 16-dim polarization ket over arms a, b, c, d.
    """
    if isinstance(value, FockState):
        swap = {m1: m2, m2: m1}
        terms = {}
        for key, amp in value:
            occupation = dict(
                (ModeLabel(swap.get(m.spatial, m.spatial), m.polarization,
                           m.pulse), n) for m, n in key)
            terms[_key(occupation)] = amp
        return FockState(terms)
    vec = np.asarray(value, dtype=complex)
    if vec.shape != (16,):
        raise DimensionError("swap_modes() needs a FockState or a 16-dim ket")
    if m1 not in ARMS or m2 not in ARMS:
        raise ValueError("Kets only carry the arms %s" % (ARMS,))
    axes = list(range(4))
    i, j = ARMS.index(m1), ARMS.index(m2)
    axes[i], axes[j] = axes[j], axes[i]
    return vec.reshape(2, 2, 2, 2).transpose(axes).reshape(16)

def _distribute(f):
    """The two beam splitters of the setup: a0 -> a, b and b0 -> c, d."""
    return beam_splitter(beam_splitter(f, 'a0', 'a', 'b'), 'b0', 'c', 'd')

def second_order_state(swap=False, tau=1.0):
    """
    Runs second-order emission through the beam splitters and post-selection
    (optionally swapping b and c first).  Returns a :class:`PostselectionResult`.
    """
    f = _distribute(second_order_emission(tau))
    if swap:
        f = swap_modes(f, 'b', 'c')
    return postselect_one_per_arm(f)

def _pairing_label(pattern):
    pairs = []
    for pulse in (1, 2):
        arms = [arm for arm, p in zip(ARMS, pattern) if p == pulse]
        pairs.append(tuple(arms))
    return "".join("(%s)" % ",".join(pair) for pair in pairs), tuple(pairs)

# Order in which pairing configurations are reported
PAIRING_ORDER = ('(a,c)(b,d)', '(a,d)(b,c)', '(b,c)(a,d)', '(b,d)(a,c)')

def two_pulse_product(tau=1.0):
    """
    Two consecutive pulses each emit one normalized singlet pair
    (``tau S^dag / sqrt(2)`` per pulse), the photons pass the beam splitters
    and are post-selected.

    Returns a list of :class:`PairingConfiguration`, one per way the two pairs
    can fill the four arms.  ``label`` names the arms holding pulse 1's pair
    then pulse 2's pair, ``probability`` is relative to the emitted two-pair
    state (1/16 each) and ``state`` is the conditional polarization ket.
    """
    emitted = pair_singlet(pair_singlet(vacuum(), 1, tau), 2, tau).scaled(0.5)
    f = _distribute(emitted)
    total = f.norm_squared()
    configurations = {}
    for pattern, vec in _one_per_arm(f).items():
        label, pairs = _pairing_label(pattern)
        weight = float(np.vdot(vec, vec).real)
        configurations[label] = PairingConfiguration(
            label, pairs, weight / total, weight, vec / np.sqrt(weight))
    return [configurations[label] for label in PAIRING_ORDER
            if label in configurations]

def phi0_from_two_pulses(tau=1.0):
    """
    The ``(a,c)(b,d)`` configuration of :func:`two_pulse_product` after
    swapping ``b <-> c``, which is |Phi0>.
    """
    for configuration in two_pulse_product(tau):
        if configuration.label == '(a,c)(b,d)':
            return swap_modes(configuration.state, 'b', 'c')
    raise EmptyProjectionError("The (a,c)(b,d) configuration is missing")

def rate_ratio(tau=1.0):
    """
    Returns the fourfold rate of second-order emission divided by the total
    fourfold rate of the two-pulse product, both at pair amplitude *tau*.
    """
    numerator = second_order_state(tau=tau).weight
    denominator = sum(c.weight for c in two_pulse_product(tau))
    logger.debug("rate_ratio: %.6g / %.6g", numerator, denominator)
    return numerator / denominator
