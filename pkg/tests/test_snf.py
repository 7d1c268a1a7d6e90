"""
Semantic Normal Form tests.
"""

import unittest

from src.frontend.adapter import tree_to_snf
from src.frontend.grammar import parse_text
from src.snf.model import (
    AttributiveRole,
    ExtraSubRole,
    ModificationSpecifier,
    PredicateSpecifierRole,
    SemanticRole,
    SyntacticPosition,
    SyntacticRole,
    flatten_pe_order,
)
from src.snf.notation import parse_snf, serialize_snf
from src.snf.validate import validate_pe
from src.utils.errors import SnfSyntaxError
from tests.helpers import COUNCIL_FEARED, TROPHY_BIG, engine_lexicon


def parse_pe(sentence: str):
    return tree_to_snf(parse_text(sentence, engine_lexicon()))


class SnfStructureTester(unittest.TestCase):
    """PEs built from schema sentences."""

    def test_councilmen_roles(self) -> None:
        """Actor, actee and indirect-object extra of the refusal clause."""
        pe = parse_pe(COUNCIL_FEARED)
        self.assertEqual(pe.main_specifier.main_verb_word, "refused")
        actor, actee, extra = pe.entity_arguments[:3]
        self.assertEqual(actor.semantic_role, SemanticRole.ACTOR)
        self.assertEqual(actor.noun_phrases()[0].qualifiers, ["city"])
        self.assertEqual(actor.noun_phrases()[0].head.word, "councilmen")
        self.assertEqual(actee.noun_phrases()[0].head.word, "demonstrators")
        self.assertEqual(extra.semantic_role, SemanticRole.EXTRA)
        self.assertEqual(extra.extra_sub_role, ExtraSubRole.INDIRECT_OBJECT)
        self.assertEqual(extra.noun_phrases()[0].head.word, "permit")

    def test_nested_cause_clause(self) -> None:
        """The because-clause hangs under a final modification specifier."""
        pe = parse_pe(COUNCIL_FEARED)
        finals = [m for m in pe.modification_specifiers if m.syntactic_position == SyntacticPosition.FINAL]
        self.assertEqual(len(finals), 1)
        self.assertEqual(finals[0].adverbial_expression.introducer, "because")
        nested = finals[0].nested
        self.assertEqual(nested.main_specifier.main_verb_word, "feared")
        self.assertTrue(nested.entity_arguments[0].is_pronoun)

    def test_attributive_clause(self) -> None:
        """'it is too big' is a to-be-attributive clause with a degree word."""
        nested = flatten_pe_order(parse_pe(TROPHY_BIG))[-1]
        self.assertEqual(nested.main_specifier.role, PredicateSpecifierRole.TO_BE_ATTRIBUTIVE)
        attribute = nested.attributive_arguments[0]
        self.assertEqual(attribute.role, AttributiveRole.ATTRIBUTE)
        self.assertEqual(attribute.attribute_designators[0].adjective_word, "big")
        self.assertEqual(attribute.attribute_designators[0].degree_word, "too")

    def test_negation(self) -> None:
        """'does not fit' negates the main specifier only."""
        order = flatten_pe_order(parse_pe(TROPHY_BIG))
        self.assertTrue(order[0].is_negated(0))
        self.assertFalse(order[1].is_negated(0))

    def test_pointer_order(self) -> None:
        """Main clause first, then its final clause."""
        pe = parse_pe(TROPHY_BIG)
        order = flatten_pe_order(pe)
        self.assertIs(order[0], pe)
        self.assertEqual(order[1].introductory_word, "because")


class SnfNotationTester(unittest.TestCase):
    """Block notation."""

    def test_parses_back_to_equal_pe(self) -> None:
        """Serialized PEs parse back to equal PEs with the same pointer order."""
        pe = parse_pe(COUNCIL_FEARED)
        reparsed = parse_snf(serialize_snf(pe))
        self.assertEqual(reparsed, pe)
        self.assertEqual(len(reparsed.pe_pointer_order), len(pe.pe_pointer_order))
        self.assertEqual(serialize_snf(reparsed), serialize_snf(pe))

    def test_malformed_text(self) -> None:
        """Unbalanced blocks raise SnfSyntaxError."""
        with self.assertRaises(SnfSyntaxError):
            parse_snf("PredicateExpression (\n  GrammaticalMood (Indicative)\n")


class SnfValidateTester(unittest.TestCase):
    """Structural diagnostics."""

    def test_parsed_sentence_is_clean(self) -> None:
        """PEs from the front-end carry no diagnostics."""
        self.assertEqual(validate_pe(parse_pe(COUNCIL_FEARED)), [])

    def test_auxiliary_as_main_verb(self) -> None:
        """A to-be form stored as the main verb of a verb specifier is reported."""
        pe = parse_pe(COUNCIL_FEARED)
        pe.main_specifier.main_verb_word = "was"
        self.assertTrue(any("auxiliary 'was'" in d for d in validate_pe(pe)))

    def test_extra_sub_role_on_actor(self) -> None:
        """Sub-roles belong to extras only."""
        pe = parse_pe(COUNCIL_FEARED)
        pe.entity_arguments[0].extra_sub_role = ExtraSubRole.WITH
        self.assertTrue(any("extra sub-role on a Actor argument" in d for d in validate_pe(pe)))

    def test_modifier_without_payload(self) -> None:
        """Modification specifiers need an adverb or a nested clause."""
        pe = parse_pe(TROPHY_BIG)
        pe.modification_specifiers.append(ModificationSpecifier(SyntacticPosition.PRE_VERB))
        self.assertTrue(any("no payload" in d for d in validate_pe(pe)))

    def test_subject_syntactic_role(self) -> None:
        """Subjects are marked as such."""
        pe = parse_pe(TROPHY_BIG)
        self.assertEqual(pe.entity_arguments[0].syntactic_role, SyntacticRole.SUBJECT)


if __name__ == "__main__":
    unittest.main()
