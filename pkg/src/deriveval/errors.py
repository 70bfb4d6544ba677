"""Exception hierarchy shared across the toolkit.

Input/schema problems derive from :class:`InputError` so the CLI can map
them to exit code 2; anything else is treated as an internal error.
"""


class DerivevalError(Exception):
    """Base class for all toolkit errors."""


class InputError(DerivevalError):
    """Bad input data or files (CLI exit code 2)."""


class EmptyDerivation(InputError):
    """A derivation with zero steps where at least one is required."""


class EmptyField(InputError):
    """A blank head/relation/tail in a derivation step."""

    def __init__(self, step_index, field):
        self.step_index = step_index
        self.field = field
        super().__init__(f"step {step_index}: empty {field}")


class ProvenanceOutOfBounds(InputError):
    """Step provenance points outside the owning instance's articles/sentences."""


class EmptyReferenceSet(InputError):
    """A reference set with zero golden derivations."""


class IndexOutOfBounds(DerivevalError):
    """Alignment pair index outside the score matrix."""


class DuplicateIndex(DerivevalError):
    """Alignment repeats a row or column index."""


class SizeLimitExceeded(DerivevalError):
    """Brute-force enumeration requested for too large a matrix."""


class EmptyMatrix(DerivevalError):
    """Optimal alignment requested for a matrix with no rows or no columns."""


class BadK(InputError):
    """Reference-ablation size k outside 1..n."""


class ParseError(InputError):
    """Malformed input file; message carries the locus."""


class DuplicateId(InputError):
    """The same question id appears twice in one file."""


class SchemaViolation(InputError):
    """Well-formed JSON that does not match the documented schema."""


class UnknownId(InputError):
    """A prediction for a question id absent from the references."""


class MissingVote(InputError):
    """A reference set id with no answerability vote."""


class NoJudgements(InputError):
    """Majority vote requested over zero judgements."""


class InsufficientData(InputError):
    """Agreement statistic requested with no pairable values."""


class MissingAnnotations(InputError):
    """A sentence locus with no parse annotation and fallback disabled."""


class MissingLocusComment(ParseError):
    """Annotation file sentence block without a locus comment."""
