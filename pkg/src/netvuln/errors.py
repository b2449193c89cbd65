class NetVulnError(Exception):
    pass


class InvalidArgumentError(NetVulnError, ValueError):
    """Raised when an argument is outside the accepted set (unknown node, bad parameter)."""


class DomainError(NetVulnError, ValueError):
    """Raised when the input graph does not satisfy an operation's precondition."""


class ParseError(NetVulnError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
