"""
Syntax tree to Semantic Normal Form converter
"""

import logging
from typing import List, Optional

from src.frontend.tree import MeaningUnit, NounPhraseNode, PredicatePhraseNode, PrepositionalPhraseNode, SyntaxTree
from src.snf.model import (
    AdverbialExpression,
    AttributeDesignator,
    AttributiveArgumentSpecifier,
    AttributiveRole,
    DiscourseContext,
    EntityArgumentSpecifier,
    EntityDesignator,
    ExtraSubRole,
    GrammaticalMood,
    HeadWord,
    ModificationSpecifier,
    NounPhrase,
    PredicateExpression,
    PredicateSpecifier,
    PredicateSpecifierRole,
    PrepositionalPhrase,
    SemanticRole,
    Sentence,
    SyntacticPosition,
    SyntacticRole,
)

logger = logging.getLogger(__name__)


def discourse_context(predicate: PredicatePhraseNode, interrogative: bool = False) -> DiscourseContext:
    aspect = "" if predicate.aspect == "Simple" else predicate.aspect
    simple = f"{predicate.tense}Simple" if not aspect else f"{predicate.tense}{aspect}"
    if interrogative:
        try:
            return DiscourseContext(f"Interrogative{simple}")
        except ValueError:
            pass
    try:
        return DiscourseContext(f"Declarative{simple}")
    except ValueError:
        return DiscourseContext.DECLARATIVE_PRESENT_SIMPLE


def convert_noun_phrase(node: NounPhraseNode) -> NounPhrase:
    return NounPhrase(
        head_words=[HeadWord(head.word, node.kind, head.index) for head in node.head_words],
        specifiers=list(node.specifiers),
        qualifiers=list(node.qualifiers),
        postnominal_modifiers=[convert_prepositional(pp) for pp in node.postnominal],
    )


def convert_prepositional(node: PrepositionalPhraseNode) -> PrepositionalPhrase:
    return PrepositionalPhrase(node.preposition, convert_noun_phrase(node.noun_phrase))


def _argument(
    node: NounPhraseNode,
    role: SemanticRole,
    syntactic_role: SyntacticRole,
    sub_role: Optional[ExtraSubRole] = None,
) -> EntityArgumentSpecifier:
    return EntityArgumentSpecifier(
        semantic_role=role,
        entity_designators=[EntityDesignator(noun_phrase=convert_noun_phrase(node))],
        extra_sub_role=sub_role,
        syntactic_role=syntactic_role,
    )


def _complement(node: PrepositionalPhraseNode) -> EntityArgumentSpecifier:
    sub_role = ExtraSubRole.from_preposition(node.preposition)
    if sub_role is None:
        logger.debug("No extra sub-role for preposition '%s'", node.preposition)
    return EntityArgumentSpecifier(
        semantic_role=SemanticRole.EXTRA,
        entity_designators=[EntityDesignator(prepositional_complement=convert_prepositional(node))],
        extra_sub_role=sub_role,
        syntactic_role=SyntacticRole.OTHER,
    )


def convert_meaning_unit(unit: MeaningUnit) -> PredicateExpression:
    """One meaning unit (and everything nested in it) as a PE, without pointer order"""
    predicate = unit.predicate
    pe = PredicateExpression(
        grammatical_mood=GrammaticalMood.INTERROGATIVE if unit.interrogative else GrammaticalMood.INDICATIVE,
        introductory_word=unit.introductory_word,
        first_token_index=unit.first_index,
    )
    pe.predicate_specifiers.append(
        PredicateSpecifier(
            ordinal=0,
            main_verb_word=predicate.verb_word,
            role=predicate.role,
            discourse_context=discourse_context(predicate, unit.interrogative),
        )
    )

    if unit.subject is not None:
        role = SemanticRole.ACTEE if predicate.passive else SemanticRole.ACTOR
        pe.entity_arguments.append(_argument(unit.subject, role, SyntacticRole.SUBJECT))
    if predicate.agent is not None:
        pe.entity_arguments.append(_argument(predicate.agent, SemanticRole.ACTOR, SyntacticRole.OTHER))

    if predicate.role == PredicateSpecifierRole.TO_BE_IS_A and predicate.direct_object is not None:
        pe.attributive_arguments.append(
            AttributiveArgumentSpecifier(
                role=AttributiveRole.HIGHER_CLASS,
                attribute_designators=[AttributeDesignator(predicate.direct_object.head_words[-1].word)],
            )
        )
    elif predicate.direct_object is not None:
        pe.entity_arguments.append(_argument(predicate.direct_object, SemanticRole.ACTEE, SyntacticRole.DIRECT_OBJECT))
    if predicate.indirect_object is not None:
        pe.entity_arguments.append(
            _argument(predicate.indirect_object, SemanticRole.EXTRA, SyntacticRole.INDIRECT_OBJECT, ExtraSubRole.INDIRECT_OBJECT)
        )
    for complement in predicate.complements:
        pe.entity_arguments.append(_complement(complement))

    if predicate.adjective_phrase is not None:
        pe.attributive_arguments.append(
            AttributiveArgumentSpecifier(
                role=AttributiveRole.ATTRIBUTE,
                attribute_designators=[AttributeDesignator(predicate.adjective_phrase.adjective, predicate.adjective_phrase.degree)],
            )
        )

    for adverb in predicate.pre_verb_adverbs:
        pe.modification_specifiers.append(ModificationSpecifier(SyntacticPosition.PRE_VERB, adverbial_phrase=adverb.lower()))
    for adverbial in unit.leading + unit.final:
        if adverbial.clause is not None:
            nested = convert_meaning_unit(adverbial.clause)
            pe.modification_specifiers.append(
                ModificationSpecifier(
                    adverbial.position,
                    adverbial_expression=AdverbialExpression(adverbial.introducer or "", nested),
                )
            )
        elif adverbial.adverb:
            pe.modification_specifiers.append(ModificationSpecifier(adverbial.position, adverbial_phrase=adverbial.adverb))
    return pe


def syntactic_order(pe: PredicateExpression) -> List[PredicateExpression]:
    """Leading clauses, then the PE itself, then its final clauses, recursively"""
    before: List[PredicateExpression] = []
    after: List[PredicateExpression] = []
    for modifier in pe.modification_specifiers:
        if modifier.nested is None:
            continue
        target = before if modifier.syntactic_position == SyntacticPosition.LEADING else after
        target.extend(syntactic_order(modifier.nested))
    for argument in pe.entity_arguments:
        if argument.nested_pe is not None:
            after.extend(syntactic_order(argument.nested_pe))
    return before + [pe] + after


def _root(unit: MeaningUnit) -> PredicateExpression:
    pe = convert_meaning_unit(unit)
    pe.pe_pointer_order = syntactic_order(pe)
    return pe


def tree_to_snf(tree: SyntaxTree) -> PredicateExpression:
    """Root PE of the tree's first meaning unit, pointer order filled in"""
    if not tree.meaning_units:
        raise ValueError("syntax tree holds no meaning unit")
    return _root(tree.meaning_units[0])


def tree_to_sentence(tree: SyntaxTree) -> Sentence:
    """All meaning units of a tree; semicolon-separated units are kept as groups"""
    roots = [_root(unit) for unit in tree.meaning_units]
    sentence = Sentence(content=tree.content)
    if roots:
        sentence.discourse_context_major = roots[0].predicate_specifiers[0].discourse_context
    if len(roots) > 1:
        sentence.semicolon_expressions = [[root] for root in roots]
    else:
        sentence.predicate_expressions = roots
    return sentence
