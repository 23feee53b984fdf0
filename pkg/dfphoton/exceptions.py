# -*- coding: utf-8 -*-

__doc__ = """\
Exceptions raised by dfphoton.  Everything derives from :class:`DFError` so
the command line can report any of them as a single-line diagnostic.
"""

class DFError(Exception):
    """Base class for all dfphoton errors."""

class ConfigError(DFError):
    """A run configuration (file or command line) could not be used."""

class DimensionError(DFError, ValueError):
    """Operands have mismatched kinds or dimensions."""

class NotHermitianError(DFError, ValueError):
    """A matrix that must be Hermitian isn't (within tolerance)."""

class NotPhysicalError(DFError, ValueError):
    """A density matrix is not Hermitian, unit-trace and positive."""

class NormalizationError(DFError, ValueError):
    """A state or logical qubit that must be normalized isn't."""

class EmptyProjectionError(DFError):
    """Post-selection kept nothing."""

class OutsideSubspaceError(DFError):
    """A four-photon state has no weight in the decoherence-free subspace."""

class SettingError(DFError, ValueError):
    """A measurement setting or outcome is malformed or of the wrong kind."""

class MixedStateError(DFError):
    """
    A post-selected component mixes distinguishable photon origins and can't be
    described by a single ket.
    """
