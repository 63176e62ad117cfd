"""Exception hierarchy.

Everything raised on purpose by the library derives from
:class:`ContractError`, so callers (the CLI in particular) can separate
user-facing semantic failures from programming errors.
"""


class ContractError(Exception):
    """Base class of all library errors."""


class AlphabetError(ContractError):
    """Invalid port declaration or alphabet, or an unknown port name."""


class AlphabetMismatch(AlphabetError):
    """Two alphabets disagree on the domain of a shared port or on L."""


class UniverseTooLarge(ContractError):
    def __init__(self, size, cap):
        super().__init__(f"universe too large: {size} runs exceeds cap of {cap}")
        self.size = size
        self.cap = cap


class ProfileError(ContractError):
    """A profile does not partition its port set, or profiles disagree."""


class ReceptivenessError(ContractError):
    """An implementation behavior is not receptive on its uncontrolled ports."""


class CompositionError(ContractError):
    """A profiled composition is undefined (controlled or local clash)."""


class FusionError(ContractError):
    """Fusion could not be computed (cap exceeded, profile conflict)."""


class SpecError(ContractError):
    """Lexical, syntax, name or type error in an ``.hrc`` document."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
