"""
Exception hierarchy shared by the pipeline.

Every error carries a stable ``code`` string so callers (the CLI exit-code
mapping, the HTTP layer, the resolver stages) can branch without matching on
messages.
"""

from typing import List, Optional


class RossError(Exception):
    """Base class for all pipeline errors"""

    code = "E_FAILURE"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class PositionedError(RossError):
    """Error tied to a line/column in some source text"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


# --- ontology ---------------------------------------------------------------


class OntologyError(RossError):
    code = "E_ONTOLOGY"


class UnknownElement(PositionedError, OntologyError):
    code = "E_UNKNOWN_ELEMENT"


class UnboundSyntax(PositionedError, OntologyError):
    code = "E_UNBOUND_SYNTAX"


class UnresolvedRef(OntologyError):
    code = "E_UNRESOLVED_REF"

    def __init__(self, name: str, referrer: str):
        super().__init__(f"unresolved reference '{name}' in {referrer}")
        self.name = name
        self.referrer = referrer


class CycleDetected(OntologyError):
    code = "E_CYCLE"

    def __init__(self, path: List[str]):
        super().__init__("inheritance cycle: " + " -> ".join(path))
        self.path = path


class DuplicateAttributeType(OntologyError):
    code = "E_DUPLICATE_ATTRIBUTE_TYPE"

    def __init__(self, class_name: str, name: str):
        super().__init__(f"conflicting definitions of attribute type '{name}' in {class_name}")
        self.class_name = class_name
        self.name = name


class IllegalAttributeValue(OntologyError):
    code = "E_ILLEGAL_ATTRIBUTE_VALUE"


class UnboundSymbol(OntologyError):
    code = "E_UNBOUND_SYMBOL"


class OntologyLoadError(OntologyError):
    code = "E_ONTOLOGY_LOAD"


# --- SNF / front-end ----------------------------------------------------------


class SnfSyntaxError(PositionedError):
    code = "E_SNF_SYNTAX"


class FrontendError(RossError):
    code = "E_FRONTEND"


class UnsupportedConstruction(FrontendError):
    code = "E_UNSUPPORTED_CONSTRUCTION"

    def __init__(self, message: str, token_index: int):
        super().__init__(f"{message} (token {token_index})")
        self.token_index = token_index


class UnsupportedLabel(FrontendError):
    code = "E_UNSUPPORTED_LABEL"

    def __init__(self, label: str):
        super().__init__(f"unsupported tree label '{label}'")
        self.label = label


# --- instance model -----------------------------------------------------------


class ModelError(RossError):
    code = "E_MODEL"


class RoleMismatch(ModelError):
    code = "E_ROLE_MISMATCH"

    def __init__(self, role: str, class_name: str):
        super().__init__(f"class {class_name} cannot fill role {role}")
        self.role = role
        self.class_name = class_name


class MissingTimepoint(ModelError):
    code = "E_MISSING_TIMEPOINT"


class UnknownInstance(ModelError):
    code = "E_UNKNOWN_INSTANCE"


class IllegalValue(ModelError):
    code = "E_ILLEGAL_VALUE"


# --- resolution / reasoning -----------------------------------------------------


class NotFound(RossError):
    """Required item is absent; distinct from every other failure"""

    code = "E_NOTFOUND"


class NotFoundRequiredItem(RossError):
    code = "E_NOTFOUND_REQUIREDITEM"


class ResolutionFailed(RossError):
    code = "E_RESOLUTION_FAILED"

    def __init__(self, pronoun: str, token_index: Optional[int] = None):
        where = "" if token_index is None else f" at token {token_index}"
        super().__init__(f"could not resolve '{pronoun}'{where}")
        self.pronoun = pronoun
        self.token_index = token_index


class UnboundParameter(RossError):
    code = "E_UNBOUND_PARAMETER"

    def __init__(self, symbol: str):
        super().__init__(f"nested reference parameter symbol '{symbol}' is unbound")
        self.symbol = symbol


# --- api ----------------------------------------------------------------------


class QaError(RossError):
    code = "E_QA"


class NoModel(QaError):
    code = "E_NO_MODEL"


class NoAnswer(QaError):
    code = "E_NO_ANSWER"


class UnknownTask(RossError):
    code = "E_UNKNOWN_TASK"
