"""Shared exception and warning types."""


class ValidityError(ValueError):
    """A parameter set violates a physical or numerical validity requirement."""


class ConfigError(ValueError):
    """A run-configuration file is malformed or contains unknown keys."""


class OffResonanceWarning(UserWarning):
    """The dot level is close enough to resonance that the single-visit
    truncation of the dot path starts to lose accuracy."""
