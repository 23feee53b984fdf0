# -*- coding: utf-8 -*-

__doc__ = """\
Run configuration for the command line.

Values come from three layers, later ones winning: the built-in defaults, an
optional flat ``key = value`` file given with ``--config``, and command line
flags.  Recognized keys (``#`` starts a comment)::

    plates      = HWP:59, QWP:13.5       # ordered waveplate list
    noise_hwp   = 59                     # shorthand: HWP then QWP
    noise_qwp   = 13.5
    noise_pauli = 0.012j, -0.332, -0.707, 0.624   # a_id, a_z, a_y, a_x
    haar_seed   = 7                      # Haar-random SU(2) noise
    visibility  = 0.95
    qber_target = 0.0391                 # or "measured" for per-panel targets
    total       = 1000                   # mean fourfold events, 0 = exact
    seed        = 1
    format      = csv                    # or json
    out         = results.csv
    draws       = 1000                   # sweep only
    repeats     = 1                      # fig4 only
    tau         = 1.0                    # spdc-verify only
    theta       = 60                     # frame only (Bloch angles, degrees)
    phi         = 0

Only one kind of noise (plates, Pauli coefficients or a Haar seed) may be
given per layer; with none a HWP at 59 degrees followed by a QWP at
13.5 degrees is used.
"""

# Import built-in modules
import io
import logging
import configparser
from collections import namedtuple

# Import 3rd party modules
import numpy as np

# Import our own modules
from . import polarization_optics
from .exceptions import ConfigError

logger = logging.getLogger(__name__)

_SECTION = 'dfphoton'

RunConfig = namedtuple('RunConfig', [
    'plates', 'pauli', 'haar_seed', 'visibility', 'qber_target', 'total',
    'seed', 'output_format', 'output_path', 'draws', 'repeats', 'tau',
    'theta', 'phi',
])

DEFAULTS = {
    'visibility': None,
    'qber_target': None,
    'total': 1000.0,
    'seed': 1,
    'format': 'csv',
    'out': None,
    'draws': 1000,
    'repeats': 1,
    'tau': 1.0,
    'theta': 60.0,
    'phi': 0.0,
}
NOISE_KEYS = ('plates', 'noise_hwp', 'noise_qwp', 'noise_pauli', 'haar_seed')
KNOWN_KEYS = set(DEFAULTS) | set(NOISE_KEYS)

def read_config_file(path):
    """
    Reads the flat key/value file at *path* and returns a dict of the raw
    (string) values.  Unknown keys raise :class:`ConfigError`.
    """
    try:
        with io.open(path, encoding='utf-8') as f:
            text = f.read()
    except (IOError, OSError) as err:
        raise ConfigError("Can't read config file %s: %s" % (path, err))
    parser = configparser.ConfigParser(
        interpolation=None, inline_comment_prefixes=('#',))
    try:
        parser.read_string(u"[%s]\n%s" % (_SECTION, text), source=path)
    except configparser.Error as err:
        raise ConfigError(
            "Malformed config file %s: %s" % (path, str(err).splitlines()[0]))
    values = dict(parser.items(_SECTION))
    unknown = sorted(set(values) - KNOWN_KEYS)
    if unknown:
        raise ConfigError(
            "Unknown key(s) in %s: %s" % (path, ", ".join(unknown)))
    return values

def _options_layer(options):
    """The values explicitly given on the command line."""
    layer = {}
    for key in KNOWN_KEYS:
        value = getattr(options, key, None)
        if value is not None:
            layer[key] = value
    return layer

def _noise_choice(layer, where):
    """Returns ``(kind, raw)`` for the noise in *layer* or None."""
    found = []
    if 'plates' in layer or 'noise_hwp' in layer or 'noise_qwp' in layer:
        found.append('plates')
    if 'noise_pauli' in layer:
        found.append('pauli')
    if 'haar_seed' in layer:
        found.append('haar')
    if len(found) > 1:
        raise ConfigError(
            "Give only one kind of noise %s (got %s)" % (where, " and ".join(found)))
    return found[0] if found else None

def _parse_plates(layer):
    if 'plates' in layer and ('noise_hwp' in layer or 'noise_qwp' in layer):
        raise ConfigError("Use either 'plates' or noise_hwp/noise_qwp, not both")
    if 'plates' in layer:
        return polarization_optics.parse_plates(str(layer['plates']))
    plates = []
    if 'noise_hwp' in layer:
        plates.append(polarization_optics.WaveplateSetting(
            polarization_optics.HWP, float(layer['noise_hwp'])))
    if 'noise_qwp' in layer:
        plates.append(polarization_optics.WaveplateSetting(
            polarization_optics.QWP, float(layer['noise_qwp'])))
    return tuple(plates)

def _parse_pauli(raw):
    if isinstance(raw, str):
        raw = [item.strip() for item in raw.split(',')]
    coefficients = tuple(complex(str(item).replace(' ', '')) for item in raw)
    if len(coefficients) != 4:
        raise ConfigError("noise_pauli needs four coefficients: a_id, a_z, a_y, a_x")
    return polarization_optics.PauliCoefficients(*coefficients)

def _parse_qber(raw):
    if raw is None:
        return None
    if str(raw).strip().lower() == 'measured':
        return 'measured'
    return float(raw)

def build_config(options):
    """
    Merges the defaults, the ``--config`` file (if any) and the command line
    *options* (an :class:`optparse.Values`) into a validated :class:`RunConfig`.
    """
    file_layer = {}
    if getattr(options, 'config', None):
        file_layer = read_config_file(options.config)
    cli_layer = _options_layer(options)
    # A noise given on the command line replaces the file's noise entirely
    noise_layer, where = {}, ''
    if _noise_choice(cli_layer, 'on the command line'):
        noise_layer, where = cli_layer, 'on the command line'
    elif _noise_choice(file_layer, 'in the config file'):
        noise_layer, where = file_layer, 'in the config file'
    # Same for the two ways of setting the visibility
    if 'visibility' in cli_layer or 'qber_target' in cli_layer:
        file_layer.pop('visibility', None)
        file_layer.pop('qber_target', None)
    values = dict(DEFAULTS)
    values.update((k, v) for k, v in file_layer.items() if k in DEFAULTS)
    values.update((k, v) for k, v in cli_layer.items() if k in DEFAULTS)
    if values['visibility'] is not None and values['qber_target'] is not None:
        raise ConfigError("--visibility and --qber-target are mutually exclusive")
    try:
        plates = pauli = haar_seed = None
        kind = _noise_choice(noise_layer, where)
        if kind == 'plates':
            plates = _parse_plates(noise_layer)
        elif kind == 'pauli':
            pauli = _parse_pauli(noise_layer['noise_pauli'])
        elif kind == 'haar':
            haar_seed = int(noise_layer['haar_seed'])
        else:
            plates = polarization_optics.DEFAULT_PLATES
        config = RunConfig(
            plates=plates,
            pauli=pauli,
            haar_seed=haar_seed,
            visibility=(None if values['visibility'] is None
                        else float(values['visibility'])),
            qber_target=_parse_qber(values['qber_target']),
            total=float(values['total']),
            seed=int(values['seed']),
            output_format=str(values['format']).strip().lower(),
            output_path=values['out'] or None,
            draws=int(values['draws']),
            repeats=int(values['repeats']),
            tau=float(values['tau']),
            theta=float(values['theta']),
            phi=float(values['phi']),
        )
    except ValueError as err:
        raise ConfigError("Invalid configuration value: %s" % err)
    _validate(config)
    logger.debug("Run configuration: %r", config)
    return config

def _validate(config):
    if config.visibility is not None and not 0 <= config.visibility <= 1:
        raise ConfigError("visibility must lie in [0, 1]")
    if config.qber_target not in (None, 'measured') and not 0 <= config.qber_target < 0.75:
        raise ConfigError("qber_target must lie in [0, 0.75)")
    if config.total < 0:
        raise ConfigError("total must be >= 0")
    if config.output_format not in ('csv', 'json'):
        raise ConfigError("format must be csv or json")
    if config.draws < 1:
        raise ConfigError("draws must be >= 1")
    if config.repeats < 1:
        raise ConfigError("repeats must be >= 1")
    if config.tau <= 0:
        raise ConfigError("tau must be positive")

def noise_operator(config):
    """
    Returns ``(u, description)``: the single-photon noise unitary of *config*
    and a one-line description of where it came from.
    """
    if config.pauli is not None:
        try:
            u = polarization_optics.noise_from_pauli(config.pauli)
        except ValueError as err:
            raise ConfigError(str(err))
        return u, "pauli %s" % ", ".join(
            "%g%+gj" % (a.real, a.imag) for a in config.pauli)
    if config.haar_seed is not None:
        rng = np.random.default_rng(config.haar_seed)
        return (polarization_optics.haar_su2(rng),
                "haar_su2 seed %d" % config.haar_seed)
    u = polarization_optics.waveplate_channel(config.plates)
    return u, "plates %s" % ", ".join(str(p) for p in config.plates)
