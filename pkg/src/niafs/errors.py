"""Exception types raised across the package."""


class ValidationError(ValueError):
    """Invalid argument, spec or configuration value."""


class DimensionError(ValidationError):
    """Vector or matrix shapes do not agree."""


class IngestionError(ValidationError):
    """A dataset or event log could not be read into the expected schema."""


class EvaluationError(RuntimeError):
    """An objective raised while being evaluated.

    Carries the offending position and the evaluation index so the failure
    can be reproduced.
    """

    def __init__(self, message, position=None, evaluation=None):
        super().__init__(message)
        self.position = position
        self.evaluation = evaluation
