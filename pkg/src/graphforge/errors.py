"""Exception types shared across the toolkit."""


class GraphForgeError(Exception):
    """Base class for all toolkit errors."""


class InvalidParams(GraphForgeError):
    """A parameter record violates its documented constraints."""


class InfeasibleParams(GraphForgeError):
    """Parameters are syntactically valid but cannot be realized."""


class GenerationFailed(GraphForgeError):
    """A stochastic construction exhausted its retry budget."""


class DegenerateSequence(GraphForgeError):
    """A statistic is undefined for this input sequence."""


class DegenerateGraph(GraphForgeError):
    """A graph-level statistic is undefined (e.g. the graph has no edges)."""


class DegenerateSample(GraphForgeError):
    """A sample has no spread, so a density estimate is undefined."""


class InfeasibleSplit(GraphForgeError):
    """A community is too small for the requested train/val split."""


class InvalidQuery(GraphForgeError):
    """Unknown metric or model name in an aggregation query."""


class UndefinedAuc(GraphForgeError):
    """No class had both positives and negatives in the evaluation set."""


class UndefinedAucWarning(UserWarning):
    """A class was skipped because its one-vs-rest AUC is undefined."""
