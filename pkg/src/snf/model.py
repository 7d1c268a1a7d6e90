"""
Semantic Normal Form data types.

A PredicateExpression (PE) is the unit handed from the front-end to the
engine. PEs nest through entity arguments and modification specifiers; the
root PE's ``pe_pointer_order`` lists itself and every nested PE in the
original syntactic order of their clauses.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple


class GrammaticalMood(str, Enum):
    INDICATIVE = "Indicative"
    INTERROGATIVE = "Interrogative"
    IMPERATIVE = "Imperative"


class PredicateSpecifierRole(str, Enum):
    TO_BE_ATTRIBUTIVE = "PredicateToBeAttributive"
    TO_BE_IS_A = "PredicateToBeIsA"
    CAPABILITY = "PredicateCapability"
    HAS_A_VERB = "PredicateHasAVerb"
    TO_BE_TAKING_ENTITY_ARGUMENT = "PredicateToBeTakingEntityArgument"
    VERB_TAKING_ENTITY_ARGUMENT = "PredicateVerbTakingEntityArgument"

    @property
    def takes_behavior(self) -> bool:
        return self in (PredicateSpecifierRole.VERB_TAKING_ENTITY_ARGUMENT, PredicateSpecifierRole.CAPABILITY)


class DiscourseContext(str, Enum):
    DECLARATIVE_PAST_SIMPLE = "DeclarativePastSimple"
    DECLARATIVE_PAST_PERFECT = "DeclarativePastPerfect"
    DECLARATIVE_PAST_PROGRESSIVE = "DeclarativePastProgressive"
    DECLARATIVE_PAST_PERFECT_PROGRESSIVE = "DeclarativePastPerfectProgressive"
    DECLARATIVE_PRESENT_SIMPLE = "DeclarativePresentSimple"
    DECLARATIVE_PRESENT_PERFECT = "DeclarativePresentPerfect"
    DECLARATIVE_PRESENT_PROGRESSIVE = "DeclarativePresentProgressive"
    DECLARATIVE_PRESENT_PERFECT_PROGRESSIVE = "DeclarativePresentPerfectProgressive"
    DECLARATIVE_FUTURE_SIMPLE = "DeclarativeFutureSimple"
    DECLARATIVE_FUTURE_PERFECT = "DeclarativeFuturePerfect"
    DECLARATIVE_FUTURE_PROGRESSIVE = "DeclarativeFutureProgressive"
    DECLARATIVE_FUTURE_PERFECT_PROGRESSIVE = "DeclarativeFuturePerfectProgressive"
    INTERROGATIVE_PRESENT_SIMPLE = "InterrogativePresentSimple"
    INTERROGATIVE_PAST_SIMPLE = "InterrogativePastSimple"
    INTERROGATIVE_PAST_PERFECT = "InterrogativePastPerfect"
    INTERROGATIVE_PAST_PROGRESSIVE = "InterrogativePastProgressive"
    INTERROGATIVE_PAST_PERFECT_PROGRESSIVE = "InterrogativePastPerfectProgressive"
    IMPERATIVE = "Imperative"
    HYPOTHETICAL = "Hypothetical"

    @property
    def mood_and_tense(self) -> str:
        """Export label, e.g. 'Declarative-PastSimple'"""
        for mood in ("Declarative", "Interrogative"):
            if self.value.startswith(mood):
                return f"{mood}-{self.value[len(mood):]}"
        return self.value


class SemanticRole(str, Enum):
    ACTOR = "Actor"
    ACTEE = "Actee"
    EXTRA = "Extra"


class ExtraSubRole(str, Enum):
    INDIRECT_OBJECT = "IndirectObject"
    ABOUT = "About"
    ABOVE = "Above"
    AROUND = "Around"
    AT = "At"
    BEFORE = "Before"
    FROM = "From"
    INTO = "Into"
    OVER = "Over"
    UNDER = "Under"
    IN = "In"
    ON = "On"
    AFTER = "After"
    OF = "Of"
    WITH = "With"
    TO = "To"
    FOR = "For"
    BY = "By"
    NEAR = "Near"
    THROUGH = "Through"
    BEHIND = "Behind"

    @classmethod
    def from_preposition(cls, word: str) -> Optional["ExtraSubRole"]:
        for member in cls:
            if member.value.lower() == word.lower():
                return member
        return None


class SyntacticRole(str, Enum):
    SUBJECT = "Subject"
    DIRECT_OBJECT = "DirectObject"
    INDIRECT_OBJECT = "IndirectObject"
    OTHER = "Other"


class HeadWordKind(str, Enum):
    PRONOUN = "Pronoun"
    COMMON_NOUN = "CommonNoun"
    PROPER_NOUN = "ProperNoun"


class AttributiveRole(str, Enum):
    ATTRIBUTE = "Attribute"
    HIGHER_CLASS = "HigherClass"


class SyntacticPosition(str, Enum):
    LEADING = "Leading"
    PRE_VERB = "PreVerb"
    IN_VERB_SEQUENCE = "InVerbSequence"
    POST_VERB = "PostVerb"
    FINAL = "Final"


class CommunicationUnitKind(str, Enum):
    SENTENCE = "Sentence"
    URL = "URL"
    EMAIL_ADDRESS = "EmailAddress"
    SINGLE_WORD_ON_LINE = "SingleWordOnLine"
    TWO_WORD_PHRASE_ON_LINE = "TwoWordPhraseOnLine"
    AUTHOR_INFO = "AuthorInfo"


@dataclass
class HeadWord:
    word: str
    kind: HeadWordKind = HeadWordKind.COMMON_NOUN
    token_index: int = field(default=-1, compare=False)


@dataclass
class NounPhrase:
    head_words: List[HeadWord]
    specifiers: List[str] = field(default_factory=list)
    qualifiers: List[str] = field(default_factory=list)
    postnominal_modifiers: List["PrepositionalPhrase"] = field(default_factory=list)

    @property
    def head(self) -> HeadWord:
        return self.head_words[-1]

    @property
    def is_pronoun(self) -> bool:
        return bool(self.head_words) and self.head.kind == HeadWordKind.PRONOUN

    def text(self) -> str:
        words = self.specifiers + self.qualifiers + [h.word for h in self.head_words]
        for modifier in self.postnominal_modifiers:
            words.append(modifier.text())
        return " ".join(words)


@dataclass
class PrepositionalPhrase:
    preposition: str
    noun_phrase: NounPhrase
    nested_pe: Optional["PredicateExpression"] = None

    def text(self) -> str:
        return f"{self.preposition} {self.noun_phrase.text()}"


@dataclass
class EntityDesignator:
    noun_phrase: Optional[NounPhrase] = None
    prepositional_complement: Optional[PrepositionalPhrase] = None
    trailing_connective: Optional[str] = None

    @property
    def phrase(self) -> Optional[NounPhrase]:
        if self.noun_phrase is not None:
            return self.noun_phrase
        if self.prepositional_complement is not None:
            return self.prepositional_complement.noun_phrase
        return None


@dataclass
class EntityArgumentSpecifier:
    semantic_role: SemanticRole
    entity_designators: List[EntityDesignator] = field(default_factory=list)
    nested_pe: Optional["PredicateExpression"] = None
    extra_sub_role: Optional[ExtraSubRole] = None
    syntactic_role: SyntacticRole = SyntacticRole.OTHER
    predicate_ordinal: int = 0

    def noun_phrases(self) -> List[NounPhrase]:
        return [d.phrase for d in self.entity_designators if d.phrase is not None]

    @property
    def is_pronoun(self) -> bool:
        phrases = self.noun_phrases()
        return bool(phrases) and all(np.is_pronoun for np in phrases)


@dataclass
class AttributeDesignator:
    adjective_word: str
    degree_word: Optional[str] = None


@dataclass
class AttributiveArgumentSpecifier:
    role: AttributiveRole
    attribute_designators: List[AttributeDesignator] = field(default_factory=list)
    predicate_ordinal: int = 0


@dataclass
class AdverbialExpression:
    introducer: str
    predicate_expression: "PredicateExpression"


@dataclass
class ModificationSpecifier:
    syntactic_position: SyntacticPosition
    adverbial_phrase: Optional[str] = None
    adverbial_expression: Optional[AdverbialExpression] = None
    nested_pe: Optional["PredicateExpression"] = None
    predicate_ordinal: int = 0

    @property
    def nested(self) -> Optional["PredicateExpression"]:
        if self.adverbial_expression is not None:
            return self.adverbial_expression.predicate_expression
        return self.nested_pe


@dataclass
class PredicateSpecifier:
    ordinal: int
    main_verb_word: str
    role: PredicateSpecifierRole
    discourse_context: DiscourseContext
    trailing_connective: Optional[str] = None


@dataclass(eq=True)
class PredicateExpression:
    grammatical_mood: GrammaticalMood = GrammaticalMood.INDICATIVE
    introductory_word: Optional[str] = None
    predicate_specifiers: List[PredicateSpecifier] = field(default_factory=list)
    entity_arguments: List[EntityArgumentSpecifier] = field(default_factory=list)
    attributive_arguments: List[AttributiveArgumentSpecifier] = field(default_factory=list)
    modification_specifiers: List[ModificationSpecifier] = field(default_factory=list)
    pe_pointer_order: List["PredicateExpression"] = field(default_factory=list, compare=False, repr=False)
    first_token_index: int = field(default=0, compare=False)

    @property
    def main_specifier(self) -> Optional[PredicateSpecifier]:
        return self.predicate_specifiers[0] if self.predicate_specifiers else None

    def is_negated(self, ordinal: int = 0) -> bool:
        return any(
            m.adverbial_phrase in ("not", "never") and m.syntactic_position == SyntacticPosition.PRE_VERB and m.predicate_ordinal == ordinal
            for m in self.modification_specifiers
        )

    def arguments_for(self, ordinal: int) -> List[EntityArgumentSpecifier]:
        return [a for a in self.entity_arguments if a.predicate_ordinal == ordinal]

    def nested_pes(self) -> List["PredicateExpression"]:
        """Directly nested PEs in the order they are attached"""
        found: List[PredicateExpression] = []
        for modifier in self.modification_specifiers:
            if modifier.nested is not None:
                found.append(modifier.nested)
        for argument in self.entity_arguments:
            if argument.nested_pe is not None:
                found.append(argument.nested_pe)
        return found

    def walk(self) -> Iterator["PredicateExpression"]:
        """Self and every PE reachable below it, depth first"""
        yield self
        for nested in self.nested_pes():
            yield from nested.walk()


@dataclass
class Sentence:
    content: str
    discourse_context_major: Optional[DiscourseContext] = None
    paragraph_begin: bool = False
    paragraph_end: bool = False
    quotation_begin: bool = False
    quotation_end: bool = False
    semicolon_expressions: List[List[PredicateExpression]] = field(default_factory=list)
    predicate_expressions: List[PredicateExpression] = field(default_factory=list)

    def all_predicate_expressions(self) -> List[PredicateExpression]:
        if self.semicolon_expressions:
            return [pe for group in self.semicolon_expressions for pe in group]
        return list(self.predicate_expressions)


@dataclass
class CommunicationUnit:
    kind: CommunicationUnitKind
    token_span: Tuple[int, int]
    sentence: Optional[Sentence] = None
    text: str = ""


def flatten_pe_order(pe: PredicateExpression) -> List[PredicateExpression]:
    """
    Processing order for a root PE.

    Nested PEs below the first level are already linearized into the root's
    pointer list by the adapter, so this never recurses.
    """
    return list(pe.pe_pointer_order) if pe.pe_pointer_order else [pe]
