"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class LinsyzError(Exception):
    """Base class for all library errors."""


class InputError(LinsyzError, ValueError):
    """Malformed input: bad indices, non-permutations, bad file syntax."""


class PreconditionError(LinsyzError, ValueError):
    """An operation was called outside the hypotheses it is defined for."""


class ResourceError(LinsyzError, RuntimeError):
    """A configured size cap (variables, generators, faces) was exceeded."""


class GenerationError(LinsyzError, RuntimeError):
    """A seeded generator gave up after its retry budget."""
