"""Exception hierarchy shared by every module of the workbench."""


class WorkbenchError(Exception):
    """Base class; the CLI maps any of these to exit code 2."""


class CapacityExceeded(WorkbenchError):
    pass


class CarrierMismatch(WorkbenchError):
    pass


class MissingEmptySet(WorkbenchError):
    def __init__(self):
        super().__init__("family does not contain the empty set")


class NotUnionClosed(WorkbenchError):
    def __init__(self, u: int, v: int, n: int):
        from .setfam import elements

        self.u, self.v = u, v
        super().__init__(
            f"union of {elements(u)} and {elements(v)} is not a member"
        )


class NotSubfamily(WorkbenchError):
    pass


class EmptySubspace(WorkbenchError):
    pass


class PointNotInSet(WorkbenchError):
    pass


class MalformedTable(WorkbenchError):
    pass


class NotAssociative(WorkbenchError):
    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) for x={x}, y={y}, z={z}")


class NoIdentity(WorkbenchError):
    def __init__(self):
        super().__init__("table has no two-sided identity")


class NoInverse(WorkbenchError):
    def __init__(self, x: int):
        self.witness = x
        super().__init__(f"element {x} has no inverse")


class UnknownName(WorkbenchError):
    pass


class NotABase(WorkbenchError):
    pass


class NotASubgroup(WorkbenchError):
    pass


class IdentityNotInSet(WorkbenchError):
    pass


class KindMismatch(WorkbenchError):
    pass


class UnknownTheorem(WorkbenchError):
    pass


class PostconditionFailed(WorkbenchError):
    """A derived structure violated a property the theory guarantees.

    Raised by constructions whose result is asserted (closure of a subgroup,
    identity component, subgroup re-certification). ``detail`` carries the
    failing facts so theorem checkers can turn it into a witness.
    """

    def __init__(self, message: str, **detail):
        self.detail = detail
        super().__init__(message)


class InconsistentWitness(WorkbenchError):
    """The fast checker reported a failure the definitional path rejects.

    This always indicates a bug in one of the two paths, never a theorem
    counterexample.
    """
