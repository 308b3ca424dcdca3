"""Exception hierarchy shared by the library, CLI, and HTTP service.

Every error carries a stable ``code`` token (VALIDATION, NOT_FOUND, CATALOG,
INTERNAL) so delivery layers can map it to exit codes and API error bodies
without string matching.
"""

from __future__ import annotations


class CocoestError(Exception):
    """Base class for all cocoest errors."""

    code = "INTERNAL"


class ValidationError(CocoestError):
    """A caller-supplied value violates a documented precondition.

    ``field`` names the offending input when one can be identified.
    """

    code = "VALIDATION"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class RatingLookupError(ValidationError):
    """A driver or scale factor id/rating pair is not defined in the catalog."""


class NotFoundError(CocoestError):
    """A referenced record does not exist."""

    code = "NOT_FOUND"


class CatalogError(CocoestError):
    """The catalog document cannot be parsed or fails validation."""

    code = "CATALOG"


class StoreError(CocoestError):
    """Scenario storage I/O failed; the on-disk store is untouched."""

    code = "INTERNAL"


class EstimationWarning(UserWarning):
    """Base class for non-fatal conditions surfaced during estimation."""


class NominalDefaultWarning(EstimationWarning):
    """Ratings missing from the input were defaulted to nominal."""


class LargeProjectWarning(EstimationWarning):
    """Project size is beyond the range the model was calibrated on."""
