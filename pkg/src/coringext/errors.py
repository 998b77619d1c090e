"""Exception hierarchy shared by all modules."""


class CoringError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(CoringError):
    """Operands have incompatible shapes."""


class SizeLimit(CoringError):
    """A computation would exceed the configured size guard."""


class NonFiniteField(CoringError):
    """An exhaustive enumeration was requested over the rationals."""


class SchemaError(CoringError):
    """A workspace file violates the JSON schema.

    Carries the JSON path of the offending element.
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class UnknownReference(CoringError):
    """A workspace object refers to a name that does not exist."""

    def __init__(self, path, name):
        super().__init__(f"{path}: unknown object {name!r}")
        self.path = path
        self.name = name


class AxiomViolation(CoringError):
    """A structure failed one of its defining axioms.

    ``kind`` names the violated axiom, ``witness`` the first basis tuple
    (in canonical order) at which it fails.
    """

    def __init__(self, kind, witness=None, detail=""):
        msg = kind if witness is None else f"{kind} at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.kind = kind
        self.witness = witness


class DualBasisInvalid(CoringError):
    """A supplied dual basis does not reproduce the identity."""

    def __init__(self, witness):
        super().__init__(f"dual basis fails at basis element {witness}")
        self.witness = witness


class NotCoringMorphism(CoringError):
    """A candidate coring morphism fails one of its identities."""

    def __init__(self, identity, witness=None):
        msg = f"not a coring morphism: {identity}"
        if witness is not None:
            msg += f" at {witness}"
        super().__init__(msg)
        self.identity = identity
        self.witness = witness


class NotColinear(CoringError):
    """A map expected to be colinear is not."""


class MiddleMismatch(CoringError):
    """Extensions being composed do not share the middle coring."""
