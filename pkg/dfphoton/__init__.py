# -*- coding: utf-8 -*-

# Meta
__version__ = '1.0'
__version_info__ = (1, 0)
__license__ = "GPLv3"
__author__ = 'The dfphoton developers'

__doc__ = """\
**dfphoton:**  Simulates decoherence-free (DF) quantum information processing
with four polarization-entangled photons.

Four photons can carry one logical qubit in a two-dimensional subspace that
is left untouched by *collective* noise, i.e. by the same unknown unitary
acting on every photon.  This package reproduces that at desk scale:

    * Builds the two DF basis states |Phi0> and |Phi1> and any logical qubit
      ``c0|Phi0> + c1|Phi1>`` (:mod:`dfphoton.df_states`).
    * Models collective noise with Jones matrices of half- and quarter-wave
      plates or Haar-random unitaries (:mod:`dfphoton.polarization_optics`).
    * Derives the states from a Fock-space model of parametric down-conversion
      with 50:50 beam splitters and one-photon-per-arm post-selection, including
      the expected factor of 3 between the two fourfold rates
      (:mod:`dfphoton.spdc_source`).
    * Computes and samples fourfold coincidence tables for any local
      measurement setting, QBERs, and a white-noise visibility model
      (:mod:`dfphoton.measurement`).
    * Reconstructs the logical qubit from three local four-photon observables
      and computes fidelities (:mod:`dfphoton.tomography`).

Everything is available from the ``dfphoton`` command:

.. code-block:: bash

    $ dfphoton fig3 --total 100000 --qber-target 0.0391
    $ dfphoton fig4 --format json --repeats 20
    $ dfphoton spdc-verify
    $ dfphoton sweep --draws 1000 --seed 7

Identical configurations and seeds always produce byte-identical output.
"""

# Import built-in modules
import sys
import logging

# Import our own modules
from . import config
from . import cli
from .exceptions import DFError
from .serialization import write_output

logger = logging.getLogger(__name__)

def run(options, args):
    """
    Given an *options* object (from `optparse.OptionParser` or similar), runs
    the command named by the first of *args* and writes its report to
    ``options.out`` (or stdout).

    All accepted options can be listed by running ``python -m dfphoton -h`` or
    examining the :py:func:`dfphoton.__main__.main` function.

    Raises :class:`~dfphoton.exceptions.DFError` for anything the user can
    fix (unknown command, bad configuration).
    """
    if len(args) != 1:
        raise DFError(
            "Expected exactly one command (one of: %s)"
            % ", ".join(sorted(cli.COMMANDS)))
    command = args[0]
    if command not in cli.COMMANDS:
        raise DFError(
            "Unknown command %r (one of: %s)"
            % (command, ", ".join(sorted(cli.COMMANDS))))
    run_config = config.build_config(options)
    logger.info("Running %s", command)
    text = cli.COMMANDS[command](run_config)
    write_output(text, run_config.output_path, stream=sys.stdout)
    return text
