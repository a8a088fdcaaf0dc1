"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or schema-violating input document."""


class DimensionError(ValueError):
    """Operand shapes, variable counts, or point counts do not match."""
