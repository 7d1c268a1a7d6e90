"""
Resolution results
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.engine.spanning import ObjectInstanceSemanticWrapper, SpanningInformation
from src.instance.model import ObjectInstance


class Mechanism(str, Enum):
    WITHIN_UNIT = "WithinUnit"
    ADJECTIVE_CAUSAL = "AdjectiveCausal"
    VERB_NESTED_BEHAVIOR = "VerbNestedBehavior"
    GENERATE_AND_TEST = "GenerateAndTest"
    GENDER_NUMBER_FALLBACK = "GenderNumberFallback"


@dataclass
class CandidateMatch:
    """One candidate that passed a matcher inside one spanning information"""

    wrapper: ObjectInstanceSemanticWrapper
    mechanism: Mechanism
    probability: float = 1.0
    causal_feature: Optional[Tuple[str, str]] = None
    matched_behavior: Optional[str] = None
    matched_nested_behavior: Optional[str] = None
    info: Optional[SpanningInformation] = field(default=None, repr=False)
    warning: Optional[str] = None


@dataclass
class ResolutionResult:
    referent_instance: ObjectInstance
    antecedent_word: str
    pronoun_token_index: int
    mechanism: Mechanism
    causal_feature: Optional[Tuple[str, str]] = None
    matched_behavior: Optional[str] = None
    matched_nested_behavior: Optional[str] = None
    probability: float = 1.0
    pronoun_word: str = ""
    via_lookahead: bool = False
    warnings: List[str] = field(default_factory=list)

    @property
    def referent_class(self) -> str:
        return self.referent_instance.reference_class

    def describe(self) -> str:
        """One line for traces and the CLI"""
        text = f"{self.pronoun_word}({self.antecedent_word}) -> {self.referent_instance.unique_id} via {self.mechanism.value}"
        if self.causal_feature:
            text += f" [{self.causal_feature[0]}={self.causal_feature[1]}]"
        if self.matched_nested_behavior:
            text += f" [{self.matched_behavior} > {self.matched_nested_behavior}]"
        if self.via_lookahead:
            text += " (lookahead)"
        return text
