"""Exception hierarchy shared across the package."""


class CliqueLabError(Exception):
    """Base class for all package errors."""


class GraphFormatError(CliqueLabError):
    """Malformed graph construction input or graph file."""


class EngineError(CliqueLabError):
    """Violation of the execution model detected by the round engine."""


class BandwidthViolation(EngineError):
    """A drafted payload exceeds the per-link bit budget."""

    def __init__(self, round_no: int, src: int, dst: int, size: int, limit: int):
        self.round_no = round_no
        self.src = src
        self.dst = dst
        self.size = size
        self.limit = limit
        super().__init__(
            f"round {round_no}: payload {src}->{dst} has {size} bits, limit {limit}"
        )


class MultiplexingViolation(EngineError):
    """A node drafted two messages to the same destination in one round."""

    def __init__(self, round_no: int, src: int, dst: int):
        self.round_no = round_no
        self.src = src
        self.dst = dst
        super().__init__(f"round {round_no}: node {src} drafted two messages to {dst}")


class InvalidDraftError(EngineError):
    """A draft names an out-of-range destination or the sender itself."""


class TimeoutExceeded(EngineError):
    """The round budget of a program exceeds the caller's max_rounds cap.

    Carries the partial report for the rounds that did execute.
    """

    def __init__(self, max_rounds: int, partial_report):
        self.max_rounds = max_rounds
        self.partial_report = partial_report
        super().__init__(f"max_rounds={max_rounds} exhausted before the program finished")


class GuardError(CliqueLabError):
    """An enumeration would exceed the configured search-space guard."""


class CertificateFormatError(CliqueLabError):
    """A labelling violates its size bound or encoding."""


class ConfigError(CliqueLabError):
    """Invalid experiment or CLI configuration."""


class InternalError(CliqueLabError):
    """A structural guarantee of a construction was violated at run time."""
