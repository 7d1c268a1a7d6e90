"""
Recursive-descent parser for the restricted sentence grammar.

    Sentence   := Unit (";" Unit)*
    Unit       := (Introducer Clause ",")* Clause
    Clause     := NounPhrase Predicate (Introducer Clause)*
    Predicate  := [not] ( do [not] Verb Objects
                        | Modal [not] Verb Objects
                        | have [not] Participle Objects | have Objects
                        | be [not] ( [Degree] Adjective | Participle [by NP] PP*
                                   | Gerund Objects | a NP | PP+ )
                        | Verb Objects )
    Objects    := [NP [NP]] PP*
    NounPhrase := Pronoun | WhWord | [Det|Possessive] Word+ ("of" NounPhrase)*

Anything outside the grammar raises UnsupportedConstruction at the
offending token.
"""

from typing import List, Optional, Sequence

from src.frontend.lexicon import Lexicon, VerbFormKind, get_lexicon
from src.frontend.segmenter import segment_communication_units, unit_tokens
from src.frontend.tokenizer import SENTENCE_FINAL, TokenNode, tokenize
from src.frontend.tree import (
    AdjectivePhraseNode,
    AdverbialNode,
    MeaningUnit,
    NounPhraseNode,
    PredicatePhraseNode,
    PrepositionalPhraseNode,
    SyntaxTree,
    WordNode,
)
from src.snf.model import (
    CommunicationUnit,
    CommunicationUnitKind,
    HeadWordKind,
    PredicateSpecifierRole,
    SyntacticPosition,
)
from src.utils.errors import UnsupportedConstruction


class _SentenceParser:
    def __init__(self, tokens: Sequence[TokenNode], lexicon: Lexicon):
        body = list(tokens)
        self.question = False
        while body and body[-1].kind == "punct" and body[-1].value in SENTENCE_FINAL:
            self.question = self.question or body[-1].value == "?"
            body.pop()
        self.tokens = body
        self.end_index = tokens[-1].index + 1 if tokens else 0
        self.lexicon = lexicon
        self.pos = 0

    # --- cursor ---------------------------------------------------------------

    def peek(self, offset: int = 0) -> Optional[TokenNode]:
        at = self.pos + offset
        return self.tokens[at] if at < len(self.tokens) else None

    def word(self, offset: int = 0) -> str:
        token = self.peek(offset)
        return token.value.lower() if token is not None else ""

    def advance(self) -> TokenNode:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str) -> UnsupportedConstruction:
        token = self.peek()
        return UnsupportedConstruction(message, token.index if token is not None else self.end_index)

    # --- sentence level -------------------------------------------------------

    def parse(self) -> List[MeaningUnit]:
        if not self.tokens:
            raise self.fail("empty sentence")
        units = [self.top_level()]
        while self.word() == ";":
            self.advance()
            units.append(self.top_level())
        if self.peek() is not None:
            raise self.fail(f"unexpected '{self.peek().value}'")
        return units

    def top_level(self) -> MeaningUnit:
        leading: List[AdverbialNode] = []
        while self.word() in self.lexicon.introducers:
            save = self.pos
            introducer = self.advance().value
            try:
                clause = self.clause(introducer)
            except UnsupportedConstruction:
                self.pos = save
                break
            if self.word() != ",":
                self.pos = save
                break
            self.advance()
            leading.append(AdverbialNode(SyntacticPosition.LEADING, introducer=introducer, clause=clause))
        unit = self.clause()
        unit.leading = leading
        return unit

    def clause(self, introducer: Optional[str] = None) -> MeaningUnit:
        start = self.peek()
        subject = self.noun_phrase()
        if subject is None:
            raise self.fail("expected a subject noun phrase")
        predicate = self.predicate()
        unit = MeaningUnit(
            subject=subject,
            predicate=predicate,
            introductory_word=introducer,
            interrogative=self.question,
            first_index=start.index if start is not None else 0,
        )
        while self.word() in self.lexicon.introducers:
            nested = self.try_subordinate()
            if nested is None:
                break
            unit.final.append(AdverbialNode(SyntacticPosition.FINAL, introducer=nested.introductory_word, clause=nested))
        return unit

    def try_subordinate(self) -> Optional[MeaningUnit]:
        save = self.pos
        introducer = self.advance().value
        try:
            return self.clause(introducer)
        except UnsupportedConstruction:
            self.pos = save
            return None

    def clause_follows(self) -> bool:
        save = self.pos
        found = self.try_subordinate() is not None
        self.pos = save
        return found

    # --- phrases --------------------------------------------------------------

    def starts_noun_phrase(self) -> bool:
        token = self.peek()
        if token is None:
            return False
        word = token.value.lower()
        return (
            word in self.lexicon.determiners
            or word in self.lexicon.possessives
            or self.lexicon.pronoun(word) is not None
            or self.lexicon.is_content_word(token.value)
        )

    def noun_phrase(self) -> Optional[NounPhraseNode]:
        token = self.peek()
        if token is None:
            return None
        word = token.value.lower()
        if word in self.lexicon.wh_words:
            self.advance()
            return NounPhraseNode([WordNode(token.value, token.index)], question_word=True)

        possessive_here = word in self.lexicon.possessives and self.lexicon.is_content_word(self.word(1))
        if self.lexicon.pronoun(word) is not None and not possessive_here:
            self.advance()
            return NounPhraseNode([WordNode(token.value, token.index)], kind=HeadWordKind.PRONOUN)

        specifiers: List[str] = []
        if word in self.lexicon.determiners or word in self.lexicon.possessives:
            specifiers.append(self.advance().value)
        words: List[TokenNode] = []
        while self.peek() is not None and self.lexicon.is_content_word(self.peek().value):
            words.append(self.advance())
        if not words:
            if specifiers:
                raise self.fail(f"'{specifiers[-1]}' is not followed by a noun")
            return None

        head = words[-1]
        kind = HeadWordKind.COMMON_NOUN
        if len(words) == 1 and not specifiers and head.value[:1].isupper():
            kind = HeadWordKind.PROPER_NOUN
        phrase = NounPhraseNode(
            head_words=[WordNode(head.value, head.index)],
            specifiers=specifiers,
            qualifiers=[w.value for w in words[:-1]],
            kind=kind,
        )
        while self.word() == "of":
            phrase.postnominal.append(self.prepositional_phrase())
        return phrase

    def prepositional_phrase(self) -> PrepositionalPhraseNode:
        preposition = self.advance().value
        phrase = self.noun_phrase()
        if phrase is None:
            raise self.fail(f"preposition '{preposition}' without an object")
        return PrepositionalPhraseNode(preposition, phrase)

    def negation(self, adverbs: List[str]) -> None:
        while self.word() in self.lexicon.negators:
            adverbs.append(self.advance().value)

    def verb(self, *kinds: VerbFormKind) -> TokenNode:
        token = self.peek()
        if token is None or not self.lexicon.is_verb(token.value):
            raise self.fail("expected a verb")
        if kinds and not set(kinds) & set(self.lexicon.verb_kinds(token.value)):
            raise self.fail(f"'{token.value}' is not a {'/'.join(k.value for k in kinds)} form")
        return self.advance()

    def predicate(self) -> PredicatePhraseNode:
        node = PredicatePhraseNode()
        self.negation(node.pre_verb_adverbs)
        word = self.word()
        lexicon = self.lexicon

        if word in lexicon.do_forms:
            node.aux_verb = self.advance().value
            node.tense = lexicon.do_forms[word]
            self.negation(node.pre_verb_adverbs)
            self.set_main_verb(node, self.verb(VerbFormKind.BASE))
            self.objects(node)
        elif word in lexicon.modals:
            modal = lexicon.modals[word]
            node.aux_verb = self.advance().value
            node.tense = modal.tense
            if modal.capability:
                node.role = PredicateSpecifierRole.CAPABILITY
            self.negation(node.pre_verb_adverbs)
            self.set_main_verb(node, self.verb(VerbFormKind.BASE))
            self.objects(node)
        elif word in lexicon.have_forms:
            have = self.advance()
            node.tense = lexicon.have_forms[word]
            self.negation(node.pre_verb_adverbs)
            if VerbFormKind.PARTICIPLE in lexicon.verb_kinds(self.word()):
                node.aux_verb = have.value
                node.aspect = "Perfect"
                self.set_main_verb(node, self.advance())
            else:
                node.role = PredicateSpecifierRole.HAS_A_VERB
                self.set_main_verb(node, have)
            self.objects(node)
        elif word in lexicon.be_forms:
            self.copula(node)
        elif lexicon.is_verb(word):
            verb = self.advance()
            kinds = lexicon.verb_kinds(verb.value)
            node.tense = "Past" if VerbFormKind.PAST in kinds else "Present"
            self.set_main_verb(node, verb)
            self.objects(node)
        else:
            raise self.fail("expected a verb")
        return node

    def copula(self, node: PredicatePhraseNode) -> None:
        lexicon = self.lexicon
        be = self.advance()
        node.aux_verb = be.value
        node.tense = lexicon.be_forms[be.value.lower()]
        self.negation(node.pre_verb_adverbs)
        word = self.word()
        kinds = lexicon.verb_kinds(word)

        if word in lexicon.degree_words or lexicon.is_content_word(self.peek().value if self.peek() else ""):
            node.role = PredicateSpecifierRole.TO_BE_ATTRIBUTIVE
            degree = self.advance().value if word in lexicon.degree_words else None
            if degree:
                node.post_verb_adverbs.append(degree)
            adjective = self.peek()
            if adjective is None or not lexicon.is_content_word(adjective.value):
                raise self.fail("expected an adjective")
            self.advance()
            node.adjective_phrase = AdjectivePhraseNode(adjective.value, degree)
        elif VerbFormKind.PARTICIPLE in kinds:
            node.passive = True
            self.set_main_verb(node, self.advance())
            if self.word() == "by":
                self.advance()
                node.agent = self.noun_phrase()
                if node.agent is None:
                    raise self.fail("'by' without an agent")
            self.complements(node, None)
        elif VerbFormKind.GERUND in kinds:
            node.aspect = "Progressive"
            self.set_main_verb(node, self.advance())
            self.objects(node)
        elif word in ("a", "an"):
            node.role = PredicateSpecifierRole.TO_BE_IS_A
            node.direct_object = self.noun_phrase()
        elif word in lexicon.prepositions:
            node.role = PredicateSpecifierRole.TO_BE_TAKING_ENTITY_ARGUMENT
            self.complements(node, None)
        else:
            raise self.fail(f"cannot continue after '{be.value}'")

    @staticmethod
    def set_main_verb(node: PredicatePhraseNode, token: TokenNode) -> None:
        node.main_verb = token.value
        node.main_verb_index = token.index

    def objects(self, node: PredicatePhraseNode) -> None:
        if self.starts_noun_phrase():
            node.direct_object = self.noun_phrase()
            if self.starts_noun_phrase():
                node.indirect_object = self.noun_phrase()
        self.complements(node, node.indirect_object or node.direct_object)

    def complements(self, node: PredicatePhraseNode, attach_to: Optional[NounPhraseNode]) -> None:
        """PPs after an object modify that object; PPs straight after the verb complement it"""
        while self.word() in self.lexicon.prepositions:
            if self.word() in self.lexicon.introducers and self.clause_follows():
                break
            phrase = self.prepositional_phrase()
            if attach_to is not None:
                attach_to.postnominal.append(phrase)
            else:
                node.complements.append(phrase)


def parse_sentence(unit: CommunicationUnit, tokens: Sequence[TokenNode], lexicon: Optional[Lexicon] = None) -> SyntaxTree:
    """
    Parse one Sentence unit.

    Args:
        unit: The communication unit to parse
        tokens: The master token list the unit's span indexes into

    Raises:
        UnsupportedConstruction: the sentence is outside the grammar
    """
    if unit.kind != CommunicationUnitKind.SENTENCE:
        raise UnsupportedConstruction(f"{unit.kind.value} units carry no sentence", unit.token_span[0])
    span = unit_tokens(tokens, unit)
    units = _SentenceParser(span, lexicon or get_lexicon()).parse()
    return SyntaxTree(unit_kind=unit.kind, content=unit.text, meaning_units=units)


def parse_text(text: str, lexicon: Optional[Lexicon] = None) -> SyntaxTree:
    """Tokenize and parse the first sentence of a text"""
    lexicon = lexicon or get_lexicon()
    tokens = tokenize(text, lexicon)
    for unit in segment_communication_units(tokens):
        if unit.kind == CommunicationUnitKind.SENTENCE:
            return parse_sentence(unit, tokens, lexicon)
    raise UnsupportedConstruction("no sentence in input", 0)
