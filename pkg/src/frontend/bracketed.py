"""
Reader for externally produced bracketed constituency trees.

The tree is mapped onto the same MeaningUnit structure the sentence grammar
builds, so both inputs share one SNF converter.
"""

from typing import Iterator, List, Optional, Tuple

from nltk import Tree

from src.frontend.adapter import _root
from src.frontend.lexicon import Lexicon, get_lexicon
from src.frontend.tree import (
    AdjectivePhraseNode,
    AdverbialNode,
    MeaningUnit,
    NounPhraseNode,
    PredicatePhraseNode,
    PrepositionalPhraseNode,
    WordNode,
)
from src.snf.model import HeadWordKind, PredicateExpression, PredicateSpecifierRole, SyntacticPosition
from src.utils.errors import UnsupportedConstruction, UnsupportedLabel

PHRASE_LABELS = {"ROOT", "S", "NP", "VP", "PP", "SBAR", "ADJP"}
WORD_LABELS = {
    "DT", "NN", "NNS", "NNP", "NNPS", "JJ", "RB", "PRP", "PRP$", "IN", "MD",
    "VB", "VBD", "VBZ", "VBP", "VBN", "VBG", ".", ",",
}  # fmt: skip
NOUN_LABELS = {"NN", "NNS", "NNP", "NNPS"}


def _check_labels(tree: Tree) -> None:
    for subtree in tree.subtrees():
        label = subtree.label()
        if label not in PHRASE_LABELS and label not in WORD_LABELS:
            raise UnsupportedLabel(label)


class _TreeReader:
    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon
        self.next_index = 0
        self.question = False

    def leaf(self, node: Tree) -> WordNode:
        raw = node[0]
        word = self.lexicon.clitics.get(raw.replace("’", "'").lower(), raw)
        found = WordNode(word, self.next_index)
        self.next_index += 1
        return found

    def words(self, node: Tree) -> Iterator[Tuple[str, WordNode]]:
        for child in node:
            if isinstance(child, Tree) and child.label() in WORD_LABELS:
                yield child.label(), self.leaf(child)

    def sentence(self, node: Tree, introducer: Optional[str] = None) -> MeaningUnit:
        subject: Optional[NounPhraseNode] = None
        predicate: Optional[PredicatePhraseNode] = None
        leading: List[AdverbialNode] = []
        final: List[AdverbialNode] = []
        first_index = self.next_index
        for child in node:
            label = child.label()
            if label == "NP" and subject is None and predicate is None:
                subject = self.noun_phrase(child)
            elif label == "VP":
                predicate = PredicatePhraseNode()
                self.verb_phrase(child, predicate, final)
            elif label == "SBAR":
                target = leading if predicate is None else final
                target.append(self.subordinate(child, SyntacticPosition.LEADING if predicate is None else SyntacticPosition.FINAL))
            elif label in (".", ","):
                word = self.leaf(child)
                self.question = self.question or word.word == "?"
            elif label == "S":
                return self.sentence(child, introducer)
            else:
                raise UnsupportedConstruction(f"{label} directly under S", self.next_index)
        if subject is None or predicate is None:
            raise UnsupportedConstruction("S without subject and predicate", first_index)
        return MeaningUnit(subject, predicate, introducer, leading, final, first_index=first_index)

    def subordinate(self, node: Tree, position: SyntacticPosition) -> AdverbialNode:
        introducer: Optional[str] = None
        clause: Optional[MeaningUnit] = None
        for child in node:
            if child.label() == "IN":
                introducer = self.leaf(child).word
            elif child.label() == "S":
                clause = self.sentence(child, introducer)
        if clause is None:
            raise UnsupportedConstruction("SBAR without a clause", self.next_index)
        return AdverbialNode(position, introducer=introducer, clause=clause)

    def noun_phrase(self, node: Tree) -> NounPhraseNode:
        phrase: Optional[NounPhraseNode] = None
        specifiers: List[str] = []
        words: List[Tuple[str, WordNode]] = []
        for child in node:
            label = child.label()
            if label == "NP" and phrase is None:
                phrase = self.noun_phrase(child)
            elif label == "PP" and phrase is not None:
                phrase.postnominal.append(self.prepositional(child))
            elif label in ("DT", "PRP$"):
                specifiers.append(self.leaf(child).word)
            elif label in NOUN_LABELS or label in ("JJ", "PRP"):
                words.append((label, self.leaf(child)))
            else:
                raise UnsupportedConstruction(f"{label} inside NP", self.next_index)
        if phrase is not None:
            return phrase
        if not words:
            raise UnsupportedConstruction("NP without a head", self.next_index)
        head_label, head = words[-1]
        kind = {"PRP": HeadWordKind.PRONOUN, "NNP": HeadWordKind.PROPER_NOUN, "NNPS": HeadWordKind.PROPER_NOUN}.get(
            head_label, HeadWordKind.COMMON_NOUN
        )
        return NounPhraseNode([head], specifiers, [w.word for _, w in words[:-1]], kind)

    def prepositional(self, node: Tree) -> PrepositionalPhraseNode:
        preposition = None
        phrase = None
        for child in node:
            if child.label() == "IN":
                preposition = self.leaf(child).word
            elif child.label() == "NP":
                phrase = self.noun_phrase(child)
        if preposition is None or phrase is None:
            raise UnsupportedConstruction("PP needs IN and NP", self.next_index)
        return PrepositionalPhraseNode(preposition, phrase)

    def verb_phrase(self, node: Tree, predicate: PredicatePhraseNode, final: List[AdverbialNode]) -> None:
        lexicon = self.lexicon
        objects: List[NounPhraseNode] = []
        for child in node:
            label = child.label()
            if label.startswith("VB") or label == "MD":
                self.verb(child, predicate, has_inner_vp=any(c.label() == "VP" for c in node))
            elif label == "RB":
                word = self.leaf(child).word
                if word.lower() in lexicon.negators:
                    predicate.pre_verb_adverbs.append(word)
                else:
                    predicate.post_verb_adverbs.append(word)
            elif label == "VP":
                self.verb_phrase(child, predicate, final)
            elif label == "ADJP":
                self.adjective_phrase(child, predicate)
            elif label == "NP":
                objects.append(self.noun_phrase(child))
            elif label == "PP":
                phrase = self.prepositional(child)
                if phrase.preposition.lower() == "by" and predicate.passive and predicate.agent is None:
                    predicate.agent = phrase.noun_phrase
                elif objects:
                    objects[-1].postnominal.append(phrase)
                else:
                    predicate.complements.append(phrase)
            elif label == "SBAR":
                final.append(self.subordinate(child, SyntacticPosition.FINAL))
            else:
                raise UnsupportedConstruction(f"{label} inside VP", self.next_index)
        if objects:
            predicate.direct_object = objects[0]
        if len(objects) > 1:
            predicate.indirect_object = objects[1]

    def verb(self, node: Tree, predicate: PredicatePhraseNode, has_inner_vp: bool) -> None:
        lexicon = self.lexicon
        label = node.label()
        word = self.leaf(node)
        lowered = word.word.lower()
        if has_inner_vp:
            predicate.aux_verb = word.word
            for table in (lexicon.do_forms, lexicon.be_forms, lexicon.have_forms):
                if lowered in table:
                    predicate.tense = table[lowered]
            if lowered in lexicon.modals:
                predicate.tense = lexicon.modals[lowered].tense
                if lexicon.modals[lowered].capability:
                    predicate.role = PredicateSpecifierRole.CAPABILITY
            if lowered in lexicon.have_forms:
                predicate.aspect = "Perfect"
            return
        if lowered in lexicon.be_forms:
            predicate.aux_verb = word.word
            predicate.tense = lexicon.be_forms[lowered]
            predicate.role = PredicateSpecifierRole.TO_BE_ATTRIBUTIVE
            return
        predicate.main_verb = word.word
        predicate.main_verb_index = word.index
        if label == "VBN" and predicate.aux_verb and predicate.aux_verb.lower() in lexicon.be_forms:
            predicate.passive = True
        elif label == "VBG":
            predicate.aspect = "Progressive"
        elif label == "VBD" and predicate.aux_verb is None:
            predicate.tense = "Past"

    def adjective_phrase(self, node: Tree, predicate: PredicatePhraseNode) -> None:
        degree = None
        adjective = None
        for label, word in self.words(node):
            if label == "RB":
                degree = word.word
            elif label == "JJ":
                adjective = word.word
        if adjective is None:
            raise UnsupportedConstruction("ADJP without an adjective", self.next_index)
        predicate.role = PredicateSpecifierRole.TO_BE_ATTRIBUTIVE
        if degree:
            predicate.post_verb_adverbs.append(degree)
        predicate.adjective_phrase = AdjectivePhraseNode(adjective, degree)


def read_bracketed_tree(text: str, lexicon: Optional[Lexicon] = None) -> MeaningUnit:
    """
    Parse bracketed text into a meaning unit.

    Raises:
        UnsupportedLabel: the tree uses a label outside the supported set
        UnsupportedConstruction: the labels are known but arranged unexpectedly
    """
    try:
        tree = Tree.fromstring(text)
    except ValueError as e:
        raise UnsupportedConstruction(f"malformed bracketed tree: {e}", 0) from e
    _check_labels(tree)
    reader = _TreeReader(lexicon or get_lexicon())
    top = tree[0] if tree.label() == "ROOT" else tree
    unit = reader.sentence(top)
    if reader.question:
        _mark_interrogative(unit)
    return unit


def _mark_interrogative(unit: MeaningUnit) -> None:
    unit.interrogative = True
    for adverbial in unit.leading + unit.final:
        if adverbial.clause is not None:
            _mark_interrogative(adverbial.clause)


def bracketed_tree_to_snf(text: str, lexicon: Optional[Lexicon] = None) -> PredicateExpression:
    """Root PE of a single-sentence bracketed tree"""
    return _root(read_bracketed_tree(text, lexicon))
