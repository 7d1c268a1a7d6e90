"""
Semantic engine tests.
"""

import unittest
from pathlib import Path

from lxml import etree

from src.utils.errors import UnsupportedConstruction
from tests.helpers import COUNCIL_FEARED, LIFT_WEAK, PAY_DELIVERED, PAY_RECEIVED, TROPHY_BIG, make_engine

DATA_DIR = Path(__file__).parent / "data"

TROPHY_TREE = (
    "(ROOT (S (NP (DT The) (NN trophy))"
    " (VP (VBZ does) (RB not)"
    " (VP (VB fit) (PP (IN in) (NP (DT the) (JJ brown) (NN suitcase)))"
    " (SBAR (IN because) (S (NP (PRP it)) (VP (VBZ is) (ADJP (RB too) (JJ big)))))))"
    " (. .)))"
)


def exported(output) -> etree._Element:
    return etree.fromstring(output.export_xml().split("\n", 1)[1].encode("ascii"))


def attribute_lines(root: etree._Element, timepoint: str, word: str):
    for point in root.iterfind("ConceptualModel/LocalContext/TimelineTimePoint"):
        if point.get("value") != timepoint:
            continue
        for component in point.iterfind("InstanceStructure/Component"):
            if component.text.strip().endswith(f"({word})"):
                return [a.text.strip().split(".", 1)[1] for a in component.iter("Attribute")]
    return None


class EngineRunTester(unittest.TestCase):
    """Whole-document runs."""

    def setUp(self) -> None:
        self.engine = make_engine()

    def test_non_sentences_are_skipped(self) -> None:
        """A document with only a URL yields an empty model."""
        output = self.engine.run("https://example.org/schemas")
        self.assertTrue(output.model.is_empty())
        self.assertEqual(output.results, [])
        self.assertTrue(any("skip URL" in line for line in output.trace))

    def test_deterministic(self) -> None:
        """Two runs over the same text export the same model."""
        self.assertEqual(self.engine.run(COUNCIL_FEARED).export_xml(), self.engine.run(COUNCIL_FEARED).export_xml())

    def test_trace(self) -> None:
        """The trace names the engine's sub-tasks."""
        trace = "\n".join(self.engine.run(TROPHY_BIG).trace)
        self.assertIn("ProcessCommunicationUnit", trace)
        self.assertIn("SelectBehaviorClasses fit (negated)", trace)
        self.assertIn("ApplyBehaviorClass NotFit_Big_BehaviorClass T01->T02", trace)
        self.assertIn("PushSpanningInfo", trace)

    def test_one_context_per_sentence(self) -> None:
        """Each sentence gets its own local context."""
        output = self.engine.run(TROPHY_BIG + " " + LIFT_WEAK)
        self.assertEqual([c.unique_id for c in output.model.contexts], ["1", "2"])
        self.assertEqual([r.antecedent_word for r in output.results], ["trophy", "man"])

    def test_clause_records(self) -> None:
        """Behavior clauses are remembered with their actors."""
        output = self.engine.run(PAY_RECEIVED)
        paid = output.clauses[0]
        self.assertEqual(paid.base, "pay")
        self.assertEqual(paid.actor_phrase, "Joe")
        self.assertFalse(paid.negated)

    def test_pronouns_resolved_last(self) -> None:
        """A clause selects its behaviors before its pronoun is resolved, and records the referent as actor."""
        output = self.engine.run(PAY_DELIVERED)
        trace = output.trace
        select = next(i for i, line in enumerate(trace) if line.startswith("[trace] SelectBehaviorClasses delivered"))
        resolve = next(i for i, line in enumerate(trace) if line.startswith("[trace] ResolvePronoun 'he'"))
        self.assertLess(select, resolve)
        referent = output.results[0].referent_instance.unique_id
        self.assertEqual(output.clauses[1].actor_ids, [referent])

    def test_outside_grammar(self) -> None:
        """Sentences the grammar cannot parse are raised."""
        with self.assertRaises(UnsupportedConstruction):
            self.engine.run("The trophy the suitcase.")


class EngineExportTester(unittest.TestCase):
    """Instance model exports of the schema runs."""

    def setUp(self) -> None:
        self.engine = make_engine()

    def test_timeline_name(self) -> None:
        """The structural parent's dimension system names the timeline."""
        root = exported(self.engine.run(TROPHY_BIG))
        timeline = root.find("ConceptualModel/LocalContext/StructuralParent/Timeline")
        self.assertEqual(timeline.get("name"), "EverydayObjectStructuralParentClass.EverydayObjectDimensionSystem")
        mood = root.findtext("ConceptualModel/LocalContext/MoodAndTense").strip()
        self.assertEqual(mood, "Declarative-PresentSimple")

    def test_trophy_export(self) -> None:
        """Too big: the causal feature sits on the trophy at T01 only."""
        root = exported(self.engine.run(TROPHY_BIG))
        self.assertEqual(
            attribute_lines(root, "T01", "trophy"), ["FittingState = NotFitting", "FunctionalAttributeType1 = TooBig"]
        )
        self.assertEqual(attribute_lines(root, "T01", "suitcase"), ["PassiveIsFittedState = NotFitted"])
        self.assertEqual(attribute_lines(root, "T02", "trophy"), ["FittingState = NotFitting"])
        self.assertEqual(attribute_lines(root, "T02", "suitcase"), ["PassiveIsFittedState = NotFitted"])

    def test_lift_export(self) -> None:
        """Too weak: the causal feature sits on the man at T01."""
        root = exported(self.engine.run(LIFT_WEAK))
        self.assertEqual(attribute_lines(root, "T01", "man"), ["LiftingState = NotLifting", "FunctionalAttributeType1 = TooWeak"])
        self.assertEqual(attribute_lines(root, "T01", "son"), ["PassiveIsLiftedState = NotLifted"])
        self.assertEqual(attribute_lines(root, "T02", "man"), ["LiftingState = NotLifting"])
        self.assertEqual(attribute_lines(root, "T02", "son"), ["PassiveIsLiftedState = NotLifted"])

    def test_golden_exports(self) -> None:
        """The trophy and lift exports match the pinned files byte for byte."""
        for sentence, golden in ((TROPHY_BIG, "trophy_big.xml"), (LIFT_WEAK, "lift_weak.xml")):
            with self.subTest(golden=golden):
                expected = (DATA_DIR / golden).read_bytes()
                self.assertEqual(self.engine.run(sentence).export_xml().encode("ascii"), expected)

    def test_text_source(self) -> None:
        """The export names where the text came from."""
        root = exported(self.engine.run(TROPHY_BIG, text_source="DocumentFile", document_file="schemas.txt"))
        self.assertEqual(root.find("TranscriptHeader/TextSource").get("value"), "DocumentFile")
        self.assertEqual(root.find("TranscriptHeader/DocumentFile").get("name"), "schemas.txt")


class BracketedRunTester(unittest.TestCase):
    """Runs over constituency trees."""

    def test_bracketed_matches_text(self) -> None:
        """A bracketed tree resolves like the plain sentence."""
        engine = make_engine()
        from_tree = engine.run_bracketed(TROPHY_TREE)
        self.assertEqual(from_tree.results[0].antecedent_word, "trophy")
        self.assertEqual(from_tree.annotated_text(), engine.run(TROPHY_BIG).annotated_text())


if __name__ == "__main__":
    unittest.main()
