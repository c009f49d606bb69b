"""Custom exceptions for the project."""


class SetChromeBaseException(Exception):
    """Base class for exceptions."""


class ParameterError(SetChromeBaseException):
    """An argument lies outside the operation's precondition."""


class DomainError(ParameterError):
    """A closed-form quantity has no value at the given arguments."""


class InfeasibleError(ParameterError):
    """The constructive colouring does not fit into the graph."""


class OracleRefusal(ParameterError):
    pass


class ConfigError(ParameterError):
    pass


class ParseError(SetChromeBaseException):
    pass
