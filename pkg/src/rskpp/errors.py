"""Exception types with stable machine-readable codes.

The CLI maps these to exit codes: configuration and input problems exit
with 2, runtime algorithmic failures (safety cap) with 3.
"""


class RskppError(Exception):
    """Base error. `code` identifies the failure independent of the message."""

    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class ConfigError(RskppError):
    """Invalid seeding configuration. Codes: K_TOO_LARGE, BAD_K, BAD_M, BAD_DELTA."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(message)


class NonFiniteInput(RskppError):
    code = "NONFINITE_INPUT"


class IndexOutOfRange(RskppError):
    code = "INDEX_OUT_OF_RANGE"


class ZeroMass(RskppError):
    code = "ZERO_MASS"


class ZeroDenominator(RskppError):
    code = "ZERO_DENOMINATOR"


class SafetyCapExceeded(RskppError):
    code = "SAFETY_CAP_EXCEEDED"


class BadProbability(RskppError):
    code = "BAD_PROBABILITY"


class EmptyDataset(RskppError):
    code = "EMPTY_DATASET"


class EmptyCenters(RskppError):
    code = "EMPTY_CENTERS"


class TooFewSamples(RskppError):
    code = "TOO_FEW_SAMPLES"


class ZeroCost(RskppError):
    code = "ZERO_COST"


class PartitionMismatch(RskppError):
    code = "PARTITION_MISMATCH"


class ParseError(RskppError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class RaggedRows(RskppError):
    code = "RAGGED_ROWS"


class EmptyFile(RskppError):
    code = "EMPTY_FILE"
