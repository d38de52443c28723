"""Exception hierarchy.

``ValidationError`` subclasses signal bad user input (CLI exit 1);
``ConsistencyFailure`` subclasses signal a broken internal identity (CLI exit 2).
"""


class DihedralStrataError(Exception):
    pass


class ValidationError(DihedralStrataError, ValueError):
    pass


class ParseError(ValidationError):
    pass


class InvalidVector(ValidationError):
    """A tuple that is not a generating vector of type (0; 2,2,2,2,n)."""


class WrongOrder(InvalidVector):
    def __init__(self, index, order, expected):
        self.index = index
        super().__init__(
            f"entry {index + 1} has order {order}; periods must be a permutation of {expected}"
        )


class ProductNotOne(InvalidVector):
    def __init__(self, product):
        super().__init__(f"product of the entries is {product}, not 1")


class NotGenerating(InvalidVector):
    def __init__(self, subgroup):
        super().__init__(f"entries generate only {subgroup}, not the whole group")


class NonIntegerGenus(ValidationError):
    pass


class InvalidLabel(ValidationError):
    pass


class InvalidParams(ValidationError):
    pass


class DegenerateBranching(ValidationError):
    pass


class ConsistencyFailure(DihedralStrataError):
    pass


class InconsistentGaloisOrbit(ConsistencyFailure):
    pass


class NonIntegerMultiplicity(ConsistencyFailure):
    pass


class DivisibilityFailure(ConsistencyFailure):
    pass
