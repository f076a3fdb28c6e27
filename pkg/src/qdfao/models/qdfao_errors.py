# qdfao/models/qdfao_errors.py
from __future__ import annotations

from pydantic import BaseModel

from qdfao.utils.log import log_w


class QdfaoError(Exception):
    """Base class for all qdfao errors."""


class QdfaoParseError(QdfaoError):
    """Raised when a text form (quadratic irrational, relation, regex, automaton file) cannot be parsed."""

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}" + (f" in '{text}'" if text is not None else ""))


class QdfaoInputError(QdfaoError):
    """Raised when a value is well-formed but outside what an operation accepts (rational input, d not square-free...)."""


class QdfaoRepresentationError(QdfaoError):
    """Raised when a digit string is not a valid representation in its numeration system."""


class QdfaoAlphabetError(QdfaoError):
    """Raised on a symbol outside an automaton alphabet, or when two automata have different alphabets."""


class QdfaoConstructionError(QdfaoError):
    """
    Raised when building a relation automaton exceeds its state cap.
    The relation text is kept so that the caller can report which relation blew up.
    """

    def __init__(self, message: str, relation: str | None = None):
        super().__init__(message if relation is None else f"{message} (relation: {relation})")
        self.relation = relation


class QdfaoOverlapError(QdfaoError):
    """Raised when two parts given to combine accept a common input."""

    def __init__(self, message: str, witness: list | None = None):
        super().__init__(message)
        self.witness = witness


class QdfaoUnsupportedError(QdfaoError):
    """Raised for α forms the pipeline has no construction for."""


class QdfaoVerificationError(QdfaoError):
    def __init__(self, message: str, index: int | None = None, expected=None, got=None):
        super().__init__(message)
        self.index = index
        self.expected = expected
        self.got = got


class SolverFailureModel(BaseModel):
    solver: str
    message: str
    returncode: int | None = None
    instance_path: str | None = None
    stderr: str | None = None


class QdfaoSolverError(QdfaoError):
    def __init__(self, model: SolverFailureModel):
        self.model = model
        super().__init__(str(self))

    @classmethod
    def from_process(
        cls,
        solver: str,
        returncode: int | None,
        instance_path: str | None = None,
        stderr: str | bytes | None = None,
        message: str | None = None,
    ):
        here = "from_process"
        if isinstance(stderr, bytes):
            stderr = stderr.decode("utf-8", errors="replace")
        if stderr and len(stderr) > 2000:
            stderr = stderr[-2000:]
        if message is None:
            message = f"solver exited with code {returncode}"
        log_w(here, message, instance_path)
        return cls(
            SolverFailureModel(
                solver=solver,
                message=message,
                returncode=returncode,
                instance_path=instance_path,
                stderr=stderr or None,
            )
        )

    def __str__(self):
        m = self.model
        where = f" (instance kept at {m.instance_path})" if m.instance_path else ""
        return f"{m.solver}: {m.message}{where}"
