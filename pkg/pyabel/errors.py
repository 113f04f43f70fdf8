class AbelError(Exception):
    kind = "AbelError"

    def __init__(self, message=None):
        super().__init__(message or self.kind)
        self.message = message or self.kind


class BoundExceeded(AbelError):
    kind = "BoundExceeded"

    def __init__(self, value, bound, what="value"):
        super().__init__("{} {} exceeds the configured bound {}".format(what, value, bound))
        self.value = value
        self.bound = bound


class ParentMismatch(AbelError):
    kind = "ParentMismatch"

    def __init__(self, left, right):
        super().__init__("elements live in different groups: {} and {}".format(left, right))


class NoSolution(AbelError):
    kind = "NoSolution"


class NotTorsionFree(AbelError):
    kind = "NotTorsionFree"


class InfiniteOrder(AbelError):
    kind = "InfiniteOrder"


class ParseError(AbelError):
    kind = "ParseError"

    def __init__(self, offset, expected, message=None):
        expected = tuple(sorted(set(expected)))
        if message is None:
            message = "expected {} at offset {}".format(" or ".join(repr(e) for e in expected), offset)
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class NotTorsion(AbelError):
    kind = "NotTorsion"

    def __init__(self, atom):
        super().__init__("{} is not a torsion group".format(atom))
        self.atom = atom


class NotFinitelyGenerated(AbelError):
    kind = "NotFinitelyGenerated"

    def __init__(self, atom):
        super().__init__("{} is not finitely generated".format(atom))
        self.atom = atom


class NotDivisible(AbelError):
    kind = "NotDivisible"

    def __init__(self, witness):
        atom, n = witness
        super().__init__("{} is not divisible: {}·A != A".format(atom, n))
        self.witness = witness


class DimensionMismatch(AbelError):
    kind = "DimensionMismatch"


class UnsupportedMix(AbelError):
    kind = "UnsupportedMix"


class NoElementModel(AbelError):
    kind = "NoElementModel"

    def __init__(self, atom):
        super().__init__("{} has no exact element model".format(atom))
        self.atom = atom


class ConfigError(AbelError):
    kind = "ConfigError"


class MatrixFormatError(AbelError):
    kind = "MatrixFormatError"
