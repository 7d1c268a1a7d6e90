"""
Definitions produced by the Star parser.

These are plain data: the parser fills them in, the linker merges partial
object frame classes and checks references, and the rest of the pipeline only
reads them.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from src.snf.model import SemanticRole

IDENTITY_ATTRIBUTE = "UniqueIdentityAttributeType"


@dataclass
class Diagnostic:
    """A repair or remark recorded while reading a source file"""

    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


@dataclass
class AttributeValueDef:
    name: str
    dictionary: List[str] = field(default_factory=list)


@dataclass
class AttributeTypeDef:
    """One attribute type with its ordered value set; the first value is the negative one"""

    name: str
    super_type: str = "Qualitative"
    is_state: bool = False
    optional_causal_feature: bool = False
    values: List[AttributeValueDef] = field(default_factory=list)

    @property
    def value_names(self) -> List[str]:
        return [v.name for v in self.values]

    def value(self, name: str) -> Optional[AttributeValueDef]:
        for candidate in self.values:
            if candidate.name == name:
                return candidate
        return None

    def value_for_word(self, word: str) -> Optional[AttributeValueDef]:
        """Value whose dictionary lists the given word"""
        word = word.lower()
        for candidate in self.values:
            if word in candidate.dictionary:
                return candidate
        return None


@dataclass(frozen=True)
class NounForms:
    """One dictionary entry of a noun: the singular slot, then the plural slot"""

    singular: str
    plural: Optional[str] = None


def noun_forms(words: Sequence[str]) -> List[NounForms]:
    """Noun dictionaries list singular/plural pairs; a trailing word has no plural"""
    return [NounForms(*words[i : i + 2]) for i in range(0, len(words), 2)]


@dataclass
class DictionaryPriorWord:
    words: List[str] = field(default_factory=list)
    is_noun: bool = False


@dataclass
class ObjectFrameClassDef:
    """An object frame class, possibly one partial definition among several"""

    name: str
    structure_trait: Optional[str] = None
    dictionary: List[str] = field(default_factory=list)
    dictionary_prior_word: Optional[DictionaryPriorWord] = None
    higher_classes: List[str] = field(default_factory=list)
    structural_parent_bases: List[str] = field(default_factory=list)
    attribute_types: List[AttributeTypeDef] = field(default_factory=list)
    gender: Optional[str] = None
    dimension_systems: Optional[str] = None
    structure: Optional[str] = None
    line: int = field(default=0, compare=False)

    def attribute_type(self, name: str) -> Optional[AttributeTypeDef]:
        for attribute_type in self.attribute_types:
            if attribute_type.name == name:
                return attribute_type
        return None


class BindingMode(str, Enum):
    VAL = "val"
    VAR = "var"
    EXPR = "expr"


@dataclass
class AttributeBinding:
    """``<Attribute ref = X val|var|expr = ... />``"""

    attribute_type_ref: str
    mode: BindingMode
    value: Optional[str] = None
    symbol: Optional[str] = None
    offset: int = 0


@dataclass
class PopulatedObjectClassDef:
    """A role slot inside a behavior class"""

    role_label: str
    object_class_ref: str
    binder_source: bool = False
    passive_participant: bool = False
    extra_participant: bool = False
    multiple: bool = False
    dimension_system_ref: Optional[str] = None
    attribute_bindings: List[AttributeBinding] = field(default_factory=list)

    @property
    def role(self) -> SemanticRole:
        if self.extra_participant:
            return SemanticRole.EXTRA
        if self.passive_participant:
            return SemanticRole.ACTEE
        for role in (SemanticRole.ACTEE, SemanticRole.EXTRA):
            if self.role_label.endswith(role.value):
                return role
        return SemanticRole.ACTOR

    @property
    def identity_symbol(self) -> Optional[str]:
        for binding in self.attribute_bindings:
            if binding.attribute_type_ref == IDENTITY_ATTRIBUTE and binding.mode == BindingMode.VAR:
                return binding.symbol
        return None


@dataclass
class ParameterDef:
    class_ref: str
    identity_symbol: Optional[str] = None


@dataclass
class BehaviorClassReferenceDef:
    """A nested behavior: pointer to another rule plus its parameter slots"""

    behavior_ref: str
    probability: Optional[float] = None
    parameter_actor: Optional[ParameterDef] = None
    parameter_actee: Optional[ParameterDef] = None
    parameter_extra: Optional[ParameterDef] = None

    def parameters(self) -> List[Tuple[SemanticRole, ParameterDef]]:
        slots = [
            (SemanticRole.ACTOR, self.parameter_actor),
            (SemanticRole.ACTEE, self.parameter_actee),
            (SemanticRole.EXTRA, self.parameter_extra),
        ]
        return [(role, param) for role, param in slots if param is not None]

    def parameter_for_symbol(self, symbol: str) -> Optional[SemanticRole]:
        for role, param in self.parameters():
            if param.identity_symbol == symbol:
                return role
        return None

    @property
    def effective_probability(self) -> float:
        return 1.0 if self.probability is None else self.probability


StateItem = Union[PopulatedObjectClassDef, BehaviorClassReferenceDef]


@dataclass
class BehaviorClassDef:
    name: str
    causal_rule: bool = False
    negation: bool = False
    bridge_class: Optional[str] = None
    probability: Optional[float] = None
    verb_dictionary: List[str] = field(default_factory=list)
    prior_states: List[StateItem] = field(default_factory=list)
    post_states: List[StateItem] = field(default_factory=list)
    line: int = field(default=0, compare=False)

    @property
    def is_forward(self) -> bool:
        return any(isinstance(item, PopulatedObjectClassDef) for item in self.post_states)

    @property
    def effective_probability(self) -> float:
        return 1.0 if self.probability is None else self.probability

    def populated(self, section: str = "prior") -> List[PopulatedObjectClassDef]:
        items = self.prior_states if section == "prior" else self.post_states
        return [item for item in items if isinstance(item, PopulatedObjectClassDef)]

    def slot(self, role: SemanticRole, section: str = "prior") -> Optional[PopulatedObjectClassDef]:
        """First populated object class filling the role in the section"""
        for item in self.populated(section):
            if item.role == role:
                return item
        return None

    def references(self) -> List[BehaviorClassReferenceDef]:
        return [item for item in self.prior_states + self.post_states if isinstance(item, BehaviorClassReferenceDef)]

    def identity_role(self, symbol: str) -> Optional[SemanticRole]:
        """Role of the populated object class that declares the identity symbol"""
        for item in self.populated("prior") + self.populated("post"):
            if item.identity_symbol == symbol:
                return item.role
        return None


Definition = Union[ObjectFrameClassDef, BehaviorClassDef]


@dataclass
class StarDocument:
    source_name: str
    class_defs: List[Definition] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list, compare=False)
