from optparse import OptionParser
import logging
import sys

from . import run
from . import __version__
from .cli import COMMANDS
from .exceptions import DFError

def main(argv=None):
    """
    Sets up our command line options, prints the usage/help (if warranted), and
    runs :py:func:`dfphoton.run` with the given command line options.
    """
    usage = '%prog [options] <command>\n\nCommands: ' + ", ".join(sorted(COMMANDS))
    if '__main__.py' in sys.argv[0]: # python -m dfphoton
        usage = usage.replace('%prog', 'dfphoton')
    parser = OptionParser(usage=usage, version=__version__)
    parser.add_option(
        "-c", "--config",
        dest="config",
        default=None,
        help="Read settings from this flat 'key = value' file.",
        metavar="<file path>"
    )
    parser.add_option(
        "--seed",
        dest="seed",
        type="int",
        default=None,
        help="Seed for count sampling and random draws (default 1).",
        metavar="N"
    )
    parser.add_option(
        "--total",
        dest="total",
        type="float",
        default=None,
        help=("Mean number of fourfold events per table (default 1000).  "
              "0 gives exact probabilities only."),
        metavar="N"
    )
    parser.add_option(
        "--visibility",
        dest="visibility",
        type="float",
        default=None,
        help="White-noise visibility of the prepared states (default 1).",
        metavar="V"
    )
    parser.add_option(
        "--qber-target",
        dest="qber_target",
        default=None,
        help=("Pick the visibility that produces this QBER.  'measured' uses the "
              "experimental value of each panel."),
        metavar="Q"
    )
    parser.add_option(
        "--noise-hwp",
        dest="noise_hwp",
        type="float",
        default=None,
        help="Collective noise: half-wave plate at this angle (degrees).",
        metavar="DEG"
    )
    parser.add_option(
        "--noise-qwp",
        dest="noise_qwp",
        type="float",
        default=None,
        help=("Collective noise: quarter-wave plate at this angle (degrees), "
              "after the HWP.  Default noise is HWP 59, QWP 13.5."),
        metavar="DEG"
    )
    parser.add_option(
        "--plates",
        dest="plates",
        default=None,
        help="Collective noise as an ordered plate list, e.g. 'HWP:59, QWP:13.5'.",
        metavar="LIST"
    )
    parser.add_option(
        "--noise-pauli",
        dest="noise_pauli",
        default=None,
        help="Collective noise from Pauli coefficients 'a_id, a_z, a_y, a_x'.",
        metavar="LIST"
    )
    parser.add_option(
        "--haar-seed",
        dest="haar_seed",
        type="int",
        default=None,
        help="Collective noise: a Haar-random SU(2) element drawn with this seed.",
        metavar="N"
    )
    parser.add_option(
        "--format",
        dest="format",
        default=None,
        choices=['csv', 'json'],
        help="Output format: csv (default) or json.",
        metavar="csv|json"
    )
    parser.add_option(
        "-o", "--out",
        dest="out",
        default=None,
        help="Save output to the given file instead of printing it.",
        metavar="<file path>"
    )
    parser.add_option(
        "--draws",
        dest="draws",
        type="int",
        default=None,
        help="Number of Haar draws for 'sweep' (default 1000).",
        metavar="N"
    )
    parser.add_option(
        "--repeats",
        dest="repeats",
        type="int",
        default=None,
        help="Repeat sampled tomography in 'fig4' to report a spread.",
        metavar="N"
    )
    parser.add_option(
        "--tau",
        dest="tau",
        type="float",
        default=None,
        help="Pair emission amplitude for 'spdc-verify' (default 1).",
        metavar="T"
    )
    parser.add_option(
        "--theta",
        dest="theta",
        type="float",
        default=None,
        help="Polar Bloch angle of the logical qubit for 'frame' (degrees).",
        metavar="DEG"
    )
    parser.add_option(
        "--phi",
        dest="phi",
        type="float",
        default=None,
        help="Azimuthal Bloch angle of the logical qubit for 'frame' (degrees).",
        metavar="DEG"
    )
    parser.add_option(
        "-v", "--verbose",
        action="count",
        dest="verbose",
        default=0,
        help="Log progress to stderr (-vv for debug output).",
    )
    options, args = parser.parse_args(argv)
    if not args:
        parser.print_help()
        sys.exit(2)
    level = {0: logging.WARNING, 1: logging.INFO}.get(options.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s")
    try:
        run(options, args)
    except (DFError, ValueError) as err:
        sys.stderr.write("Error: %s\n" % str(err).splitlines()[0])
        sys.exit(2)


if __name__ == "__main__":
    main()
