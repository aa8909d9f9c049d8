"""Domain exceptions.

Bad input is a ``ValueError``; running out of a configured budget is a
``RuntimeError``. The CLI maps both families to exit codes in one place.
"""

from __future__ import annotations


class LiarlabError(Exception):
    """Base class for every error raised on purpose by liarlab."""


class NotAFormula(LiarlabError, ValueError):
    def __init__(self, expression: object):
        super().__init__(f"not a formula: {expression!r}")
        self.expression = expression


class NotASentence(LiarlabError, ValueError):
    def __init__(self, expression: object):
        super().__init__(f"not a sentence: {expression!r}")
        self.expression = expression


class NotAName(LiarlabError, ValueError):
    def __init__(self, name: object):
        super().__init__(f"not a name: {name!r}")
        self.name = name


class FormulaSyntaxError(LiarlabError, ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class FreeVariableError(LiarlabError, ValueError):
    def __init__(self, variable: str, position: int = -1):
        super().__init__(f"free variable {variable!r}: only 'x' may occur free")
        self.variable = variable
        self.position = position


class NameUnassigned(LiarlabError, LookupError):
    def __init__(self, name: object, limit: int | None = None):
        detail = f" within {limit} enumerated formulas" if limit is not None else ""
        super().__init__(f"name {name!r} is not assigned{detail}")
        self.name = name
        self.limit = limit


class BudgetExceeded(LiarlabError, RuntimeError):
    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} budget of {limit} exceeded")
        self.what = what
        self.limit = limit


class NoSelfRefCapability(LiarlabError, LookupError):
    def __init__(self, system: str, set_label: str):
        super().__init__(f"{system} declares no self-reference transform for {set_label}")
        self.system = system
        self.set_label = set_label
