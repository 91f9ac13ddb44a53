"""Exception hierarchy shared by the whole package."""


class YBXError(Exception):
    pass


class FieldMismatch(YBXError):
    pass


class ZeroDivision(YBXError, ZeroDivisionError):
    pass


class NotPrime(YBXError, ValueError):
    pass


class DimensionMismatch(YBXError, ValueError):
    pass


class SingularMap(YBXError):
    pass


class InvalidGroupTable(YBXError, ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class DegenerateInput(YBXError):
    pass


class RackAxiomFailure(YBXError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class CapExceeded(YBXError):
    pass


class BraidFailure(YBXError):
    pass


class BraceInvalid(YBXError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class OperatorInvalid(YBXError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class CocycleInvalid(YBXError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class SingularG(SingularMap):
    pass


class SingularH(SingularMap):
    pass


class LeibnizIdentityFailure(YBXError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class AssociativityFailure(YBXError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotSetTheoretic(YBXError):
    pass


class SchemaError(YBXError, ValueError):
    """Malformed input document; ``path`` is a JSON pointer."""

    def __init__(self, path, msg):
        super().__init__(f"{path or '/'}: {msg}")
        self.path = path or "/"
