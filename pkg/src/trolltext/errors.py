"""Exception types raised across the toolkit.

Everything user-facing derives from ToolkitError so the CLI can map
bad input to exit code 2 and keep genuine bugs at exit code 1.
"""


class ToolkitError(Exception):
    """Base class for all input/usage errors raised by this package."""


# corpus parsing
class MissingColumn(ToolkitError):
    pass


class MalformedRow(ToolkitError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MissingSection(ToolkitError):
    pass


class UnparseableMetric(ToolkitError):
    pass


class EmptyInput(ToolkitError):
    pass


class ConflictingLabels(ToolkitError):
    pass


# text preprocessing
class EmptyVocabulary(ToolkitError):
    pass


# topic modeling
class InvalidSpec(ToolkitError):
    pass


class EmptyMatrix(ToolkitError):
    pass


class InvalidHyperparameter(ToolkitError):
    pass


class TooLarge(ToolkitError):
    pass


class VocabMismatch(ToolkitError):
    pass


class InsufficientDocuments(ToolkitError):
    pass


# classifiers
class DimensionMismatch(ToolkitError):
    pass


class SingleClass(ToolkitError):
    pass


class ClassWithNoExamples(ToolkitError):
    pass


class UnsupportedKernel(ToolkitError):
    pass


class ZeroWeight(ToolkitError):
    pass


class EmptyNode(ToolkitError):
    pass


class EmptyData(ToolkitError):
    pass


# evaluation
class SampleTooLarge(ToolkitError):
    pass


class EmptyClass(ToolkitError):
    pass


class UnknownClass(ToolkitError):
    pass


# configuration
class InvalidConfigValue(ToolkitError):
    pass


class UnknownConfigKey(ToolkitError):
    pass


class ModelFormatError(ToolkitError):
    pass
