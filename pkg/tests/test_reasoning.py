"""
Generate-and-test tests.
"""

import unittest

from src.engine.spanning import ObjectInstanceSemanticWrapper
from src.reasoning.generate_and_test import generate_and_test
from src.reasoning.sandbox import SandboxContext, Side, placeholder_word
from src.snf.model import SemanticRole, SyntacticRole
from src.utils.errors import NotFound
from tests.helpers import COUNCIL_ADVOCATED, bundled_ontology, make_engine, pronoun_features, split_schema


def advocated_setup():
    """Main-clause run, its spanning information and the pronoun's features"""
    main_text, clause = split_schema(COUNCIL_ADVOCATED)
    output = make_engine().run(main_text)
    violence = ObjectInstanceSemanticWrapper(
        output.model.instantiate("ViolenceObjectFrameClass", "violence"),
        SemanticRole.ACTEE,
        syntactic_role=SyntacticRole.DIRECT_OBJECT,
    )
    features = pronoun_features(clause, co_occurring=[violence])
    return output, output.stack.top(), features


class GenerateAndTestTester(unittest.TestCase):
    """Candidates of the advocated-violence schema."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.output, cls.info, cls.features = advocated_setup()
        cls.ontology = bundled_ontology()

    def candidate(self, word: str) -> ObjectInstanceSemanticWrapper:
        return next(w for w in self.info.wrappers if w.instance.content_string == word)

    def test_demonstrators_match(self) -> None:
        """Advocating violence makes the listeners anticipate harm, which explains the refusal."""
        report = generate_and_test(self.features, self.candidate("demonstrators"), self.info, self.ontology, master=self.output.model)
        self.assertTrue(report.matched)
        self.assertEqual(report.nested_behavior, "AnticipateHarmfulEventBehaviorClass")
        self.assertEqual(report.main_behavior, "RefusingSomethingDueToFearBehaviorClass")

    def test_councilmen_do_not_match(self) -> None:
        """The refusers advocating violence would not make themselves afraid."""
        report = generate_and_test(self.features, self.candidate("councilmen"), self.info, self.ontology, master=self.output.model)
        self.assertFalse(report.matched)

    def test_no_forward_rule(self) -> None:
        """A permit cannot advocate anything."""
        with self.assertRaises(NotFound):
            generate_and_test(self.features, self.candidate("permit"), self.info, self.ontology, master=self.output.model)

    def test_master_model_untouched(self) -> None:
        """Sandboxes never write into the master model."""
        before = self.output.model.dump()
        generate_and_test(self.features, self.candidate("demonstrators"), self.info, self.ontology, master=self.output.model)
        self.assertEqual(self.output.model.dump(), before)


class SandboxTester(unittest.TestCase):
    """Sandbox helpers."""

    def test_placeholder_word(self) -> None:
        """Class names become lower-case words without the class suffix."""
        self.assertEqual(placeholder_word("CognitiveRepresentationOfHarmfulEvent"), "cognitive representation of harmful event")
        self.assertEqual(placeholder_word("ViolenceObjectFrameClass"), "violence")

    def test_place_clones(self) -> None:
        """Instances placed in a sandbox are copies."""
        output = make_engine().run("The trophy does not fit in the brown suitcase.")
        sandbox = SandboxContext.create(Side.WEST, output.model)
        trophy = output.model.contexts[0].at("T01").components[0]
        placed = sandbox.place(trophy)
        self.assertIsNot(placed, trophy)
        self.assertEqual(placed.unique_id, trophy.unique_id)

    def test_fresh_ids_continue_master(self) -> None:
        """Made-up instances never reuse an id from the master model."""
        output = make_engine().run("The trophy does not fit in the brown suitcase.")
        sandbox = SandboxContext.create(Side.EAST, output.model)
        self.assertEqual(sandbox.fresh("TrophyObjectFrameClass").unique_id, "TrophyObjectFrameClass-2")


if __name__ == "__main__":
    unittest.main()
