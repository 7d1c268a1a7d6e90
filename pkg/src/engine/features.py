"""
Pronoun feature sets
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence

from src.engine.spanning import ObjectInstanceSemanticWrapper
from src.frontend.lexicon import Lexicon, get_lexicon
from src.snf.model import (
    AttributiveRole,
    DiscourseContext,
    EntityArgumentSpecifier,
    PredicateExpression,
    PredicateSpecifierRole,
    SemanticRole,
    SyntacticRole,
)


class Gender(str, Enum):
    MALE = "Male"
    FEMALE = "Female"
    NONSPECIFIC = "Nonspecific"


class Cardinality(str, Enum):
    SINGULAR = "Singular"
    PLURAL = "Plural"
    NONSPECIFIC = "Nonspecific"


class TemporalOrder(str, Enum):
    FOLLOWING = "Following"
    PRECEDING = "Preceding"
    UNDETERMINED = "Undetermined"


class HypotheticalUsage(str, Enum):
    EXPLANATION_OF_CAUSE = "ExplanationOfCause"
    EXPLANATION_OF_EFFECT = "ExplanationOfEffect"
    EXPLANATION_OF_OBJECTIVE = "ExplanationOfObjective"
    NONE = "None"


CAUSAL_INTRODUCERS = {"because", "since"}
TEMPORAL_INTRODUCERS = {"after": TemporalOrder.PRECEDING, "before": TemporalOrder.FOLLOWING}


@dataclass
class PronounFeatureSet:
    pronoun_word: str
    gender: Gender = Gender.NONSPECIFIC
    cardinality: Cardinality = Cardinality.NONSPECIFIC
    animate: Optional[bool] = None
    active_or_passive: str = "Active"
    temporal_order_indicator: TemporalOrder = TemporalOrder.UNDETERMINED
    hypothetical_usage: HypotheticalUsage = HypotheticalUsage.NONE
    discourse_context: Optional[DiscourseContext] = None
    syntactic_role: SyntacticRole = SyntacticRole.SUBJECT
    semantic_role: SemanticRole = SemanticRole.ACTOR
    co_occurring_wrappers: List[ObjectInstanceSemanticWrapper] = field(default_factory=list)
    negation_of_search_key: bool = False
    predicate_specifier_role: Optional[PredicateSpecifierRole] = None
    search_key_adjective: Optional[str] = None
    search_key_verb: Optional[str] = None
    token_index: int = -1
    clause_start: int = 0

    @property
    def is_post_verb_object(self) -> bool:
        return self.syntactic_role in (SyntacticRole.DIRECT_OBJECT, SyntacticRole.INDIRECT_OBJECT)


def build_pronoun_feature_set(
    pe: PredicateExpression,
    pronoun_argument: EntityArgumentSpecifier,
    introducer: Optional[str] = None,
    co_occurring: Sequence[ObjectInstanceSemanticWrapper] = (),
    lexicon: Optional[Lexicon] = None,
) -> PronounFeatureSet:
    """
    Gather everything knowable about a pronoun argument and its clause.

    Args:
        pe: The clause holding the pronoun
        pronoun_argument: The entity argument whose head is the pronoun
        introducer: Subordinating word of the clause ("because", "after"); defaults to the PE's
        co_occurring: Already resolved non-pronoun wrappers of the same clause
    """
    lexicon = lexicon or get_lexicon()
    head = pronoun_argument.noun_phrases()[0].head
    word = head.word.lower()
    entry = lexicon.pronoun(word)
    introducer = (introducer or pe.introductory_word or "").lower()
    specifier = pe.main_specifier

    features = PronounFeatureSet(
        pronoun_word=word,
        gender=Gender(entry.gender) if entry else Gender.NONSPECIFIC,
        cardinality=Cardinality(entry.number) if entry else Cardinality.NONSPECIFIC,
        animate=entry.animate if entry else None,
        temporal_order_indicator=TEMPORAL_INTRODUCERS.get(introducer, TemporalOrder.UNDETERMINED),
        hypothetical_usage=HypotheticalUsage.EXPLANATION_OF_CAUSE if introducer in CAUSAL_INTRODUCERS else HypotheticalUsage.NONE,
        syntactic_role=pronoun_argument.syntactic_role,
        semantic_role=pronoun_argument.semantic_role,
        co_occurring_wrappers=list(co_occurring),
        negation_of_search_key=pe.is_negated(specifier.ordinal) if specifier else False,
        token_index=head.token_index,
        clause_start=pe.first_token_index,
    )
    if pronoun_argument.semantic_role == SemanticRole.ACTEE and pronoun_argument.syntactic_role == SyntacticRole.SUBJECT:
        features.active_or_passive = "Passive"

    if specifier is not None:
        features.discourse_context = specifier.discourse_context
        features.predicate_specifier_role = specifier.role
        if specifier.role == PredicateSpecifierRole.TO_BE_ATTRIBUTIVE:
            for argument in pe.attributive_arguments:
                if argument.role == AttributiveRole.ATTRIBUTE and argument.attribute_designators:
                    features.search_key_adjective = argument.attribute_designators[0].adjective_word.lower()
                    break
        elif specifier.role.takes_behavior:
            features.search_key_verb = specifier.main_verb_word.lower()
    return features
