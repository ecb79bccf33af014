"""Error types shared across the package."""


class InputError(ValueError):
    """Raised for malformed user input: bad files, bad indices, bad flags.

    The CLI maps this to exit code 2; mathematical check failures are
    reported data (exit code 1), never exceptions.
    """
