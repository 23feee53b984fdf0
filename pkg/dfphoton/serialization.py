# -*- coding: utf-8 -*-

__doc__ = """\
A couple of functions for turning results into deterministic CSV and JSON
text.
"""

import io
import csv
import json

import numpy as np

# Anything smaller than this is written as 0 so roundoff can't leak into output
ZERO_CUTOFF = 1e-14

def format_float(value):
    """Formats *value* with 10 significant digits (``-0`` becomes ``0``)."""
    value = float(value)
    if abs(value) < ZERO_CUTOFF:
        value = 0.0
    return '%.10g' % value

def clean(value):
    """Rounds *value* the way :func:`format_float` would, as a float."""
    return float(format_float(value))

def csv_text(header, rows, comments=()):
    """
    Returns CSV text (LF line endings) with ``# `` prefixed *comments* first,
    then the *header* row, then *rows*.
    """
    out = io.StringIO()
    for comment in comments:
        out.write(u"# %s\n" % comment)
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return out.getvalue()

def complex_pairs(matrix):
    """Returns *matrix* as nested lists of ``[re, im]`` pairs."""
    matrix = np.asarray(matrix, dtype=complex)
    return [[[clean(z.real), clean(z.imag)] for z in row] for row in matrix]

def density_matrix_document(rho, fidelity_vs_input):
    """The JSON-ready document for a logical density matrix."""
    return {
        "basis": ["Phi0", "Phi1"],
        "rho": complex_pairs(rho),
        "fidelity_vs_input": clean(fidelity_vs_input),
    }

def json_text(document):
    """Serializes *document* with sorted keys so output is byte-stable."""
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

def write_output(text, path=None, stream=None):
    """
    Writes *text* to the file at *path* (UTF-8, LF) or to *stream* if no path
    is given.
    """
    if path:
        with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
    else:
        stream.write(text)
