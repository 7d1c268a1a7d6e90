"""
Phrase-structure trees produced by the sentence grammar
"""

from dataclasses import dataclass, field
from typing import List, Optional

from src.snf.model import CommunicationUnitKind, HeadWordKind, PredicateSpecifierRole, SyntacticPosition


@dataclass
class WordNode:
    word: str
    index: int = -1


@dataclass
class NounPhraseNode:
    head_words: List[WordNode]
    specifiers: List[str] = field(default_factory=list)
    qualifiers: List[str] = field(default_factory=list)
    kind: HeadWordKind = HeadWordKind.COMMON_NOUN
    postnominal: List["PrepositionalPhraseNode"] = field(default_factory=list)
    question_word: bool = False

    @property
    def first_index(self) -> int:
        return self.head_words[0].index if self.head_words else -1


@dataclass
class PrepositionalPhraseNode:
    preposition: str
    noun_phrase: NounPhraseNode


@dataclass
class AdjectivePhraseNode:
    adjective: str
    degree: Optional[str] = None


@dataclass
class PredicatePhraseNode:
    role: PredicateSpecifierRole = PredicateSpecifierRole.VERB_TAKING_ENTITY_ARGUMENT
    main_verb: Optional[str] = None
    main_verb_index: int = -1
    aux_verb: Optional[str] = None
    tense: str = "Present"
    aspect: str = "Simple"
    passive: bool = False
    pre_verb_adverbs: List[str] = field(default_factory=list)
    post_verb_adverbs: List[str] = field(default_factory=list)
    adjective_phrase: Optional[AdjectivePhraseNode] = None
    direct_object: Optional[NounPhraseNode] = None
    indirect_object: Optional[NounPhraseNode] = None
    agent: Optional[NounPhraseNode] = None
    complements: List[PrepositionalPhraseNode] = field(default_factory=list)

    @property
    def verb_word(self) -> str:
        """Word stored as the predicate's main verb; the copula for attributive clauses"""
        return self.main_verb or self.aux_verb or ""


@dataclass
class AdverbialNode:
    position: SyntacticPosition
    introducer: Optional[str] = None
    clause: Optional["MeaningUnit"] = None
    adverb: Optional[str] = None


@dataclass
class MeaningUnit:
    subject: Optional[NounPhraseNode]
    predicate: PredicatePhraseNode
    introductory_word: Optional[str] = None
    leading: List[AdverbialNode] = field(default_factory=list)
    final: List[AdverbialNode] = field(default_factory=list)
    interrogative: bool = False
    first_index: int = 0


@dataclass
class SyntaxTree:
    unit_kind: CommunicationUnitKind
    content: str
    meaning_units: List[MeaningUnit] = field(default_factory=list)

    def render(self) -> str:
        """Indented phrase-structure printout for debugging"""
        out = _Printer()
        out.line(f"Communication unit type: {self.unit_kind.value}")
        out.line(f"Sentence contents: {self.content}")
        out.line("Syntax tree:")
        for unit in self.meaning_units:
            out.meaning_unit(unit)
        return "\n".join(out.lines)


class _Printer:
    def __init__(self) -> None:
        self.lines: List[str] = []
        self.depth = 0

    def line(self, text: str) -> None:
        self.lines.append("  " * self.depth + text)

    def noun_phrase(self, np: NounPhraseNode) -> None:
        self.line("NounPhrase:")
        self.depth += 1
        if np.specifiers:
            self.line("Specifier List: " + " ".join(np.specifiers))
        if np.qualifiers:
            self.line("Qualifier List:")
            self.depth += 1
            self.line("AdjectivePhrase:")
            self.depth += 1
            for word in np.qualifiers:
                self.line(f"Head word: {word}")
            self.depth -= 2
        for head in np.head_words:
            self.line(f"Head word: {head.word}")
        for phrase in np.postnominal:
            self.prepositional(phrase)
        self.depth -= 1

    def prepositional(self, phrase: PrepositionalPhraseNode) -> None:
        self.line("PrepositionalPhrase:")
        self.depth += 1
        self.line(f"Head word: {phrase.preposition}")
        self.noun_phrase(phrase.noun_phrase)
        self.depth -= 1

    def meaning_unit(self, unit: MeaningUnit) -> None:
        self.line("MeaningUnit")
        self.depth += 1
        for adverbial in unit.leading:
            self.line("Leading adverbial:")
            self.adverbial(adverbial)
        if unit.introductory_word:
            self.line(f"Introductory word: {unit.introductory_word}")
        if unit.subject is not None:
            self.line("SubjectPhrase:")
            self.noun_phrase(unit.subject)
        self.predicate(unit.predicate)
        if unit.final:
            self.line("Final adverbial phrase list:")
            for adverbial in unit.final:
                self.adverbial(adverbial)
        self.depth -= 1

    def predicate(self, predicate: PredicatePhraseNode) -> None:
        self.line("PredicatePhrase:")
        for adverb in predicate.pre_verb_adverbs:
            self.line(f"PreVerbAdverb: {adverb}")
        if predicate.aux_verb:
            self.line(f"AuxVerbWord: {predicate.aux_verb}")
        if predicate.main_verb:
            self.line(f"MainVerbWord: {predicate.main_verb}")
        for adverb in predicate.post_verb_adverbs:
            self.line(f"PostVerbAdverb: {adverb}")
        if predicate.adjective_phrase is not None:
            self.line("PostVerbAdjectivePhrase:")
            self.line("AdjectivePhrase:")
            self.line(f"Head word: {predicate.adjective_phrase.adjective}")
        for label, np in (
            ("Direct object:", predicate.direct_object),
            ("Indirect object:", predicate.indirect_object),
            ("Agent:", predicate.agent),
        ):
            if np is not None:
                self.line(label)
                self.noun_phrase(np)
        if predicate.complements:
            self.line("Prepositional phrase complement:")
            for phrase in predicate.complements:
                self.prepositional(phrase)

    def adverbial(self, adverbial: AdverbialNode) -> None:
        self.line("AdverbPhrase:")
        if adverbial.adverb:
            self.line(f"Head word: {adverbial.adverb}")
        if adverbial.clause is not None:
            self.meaning_unit(adverbial.clause)
