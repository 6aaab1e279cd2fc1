"""Exception hierarchy shared by every module of the package."""


class CarterLabError(Exception):
    """Base class for all errors raised by carterlab."""


class MixedDegree(CarterLabError, ValueError):
    pass


class MalformedPermutation(CarterLabError, ValueError):
    pass


class NotAMember(CarterLabError, ValueError):
    pass


class NotASubgroup(CarterLabError, ValueError):
    pass


class NotNormal(CarterLabError, ValueError):
    pass


class GroupTooLarge(CarterLabError, ValueError):
    pass


class NontrivialCenter(CarterLabError, ValueError):
    pass


class NotMinimalNormal(CarterLabError, ValueError):
    pass


class AbelianFactor(CarterLabError, ValueError):
    pass


class NotCarter(CarterLabError, ValueError):
    """A precondition asked for a Carter subgroup and did not get one."""


class NotCentral(CarterLabError, ValueError):
    pass


class StarFails(CarterLabError, ValueError):
    """The group handed to a verifier does not satisfy condition (*)."""


class NotTransitive(CarterLabError, ValueError):
    pass


class CentralizerNotTrivial(CarterLabError, ValueError):
    pass


class NoBlockSystem(CarterLabError, ValueError):
    pass


class NotSupplemented(CarterLabError, ValueError):
    """``G = HB`` was required but ``HB`` is a proper subset of ``G``."""


class UnknownFamily(CarterLabError, KeyError):
    pass


class ParseError(CarterLabError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DegreeMismatch(ParseError):
    pass


class NotALatinSquare(ParseError):
    pass
