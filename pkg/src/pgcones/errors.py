"""Exception hierarchy shared by all modules."""


class PgconesError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeCharacteristic(PgconesError):
    pass


class OrderTooLarge(PgconesError):
    pass


class OddDegree(PgconesError):
    pass


class OddOrder(PgconesError):
    pass


class NonSquareOrder(PgconesError):
    pass


class GeometryTooLarge(PgconesError):
    pass


class WrongDimension(PgconesError):
    pass


class VertexBaseNotDisjoint(PgconesError):
    pass


class DegreeNotDividingOrder(PgconesError):
    pass


class DegenerateType(PgconesError):
    pass


class NotBlocking(PgconesError):
    pass


class HypothesisViolated(PgconesError):
    pass


class EmptyRange(PgconesError):
    pass
