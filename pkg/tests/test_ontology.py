"""
Star ontology tests.
"""

import unittest

from src.ontology.linker import consequent_reference, link_ontology, nested_reference
from src.ontology.loader import load_ontology
from src.ontology.parser import parse_star
from src.ontology.printer import pretty_print
from src.snf.model import SemanticRole
from src.utils.errors import CycleDetected, NotFound, OntologyLoadError, UnboundSymbol, UnknownElement, UnresolvedRef
from tests.helpers import ONTOLOGY_DIR, bundled_ontology

CYCLE_SOURCE = """
ObjectFrameClass "AlphaObjectFrameClass"
(
  HigherClasses ( { "BetaObjectFrameClass" } );
);

ObjectFrameClass "BetaObjectFrameClass"
(
  HigherClasses ( { "AlphaObjectFrameClass" } );
);
"""

DANGLING_SOURCE = """
ObjectFrameClass "LonelyObjectFrameClass"
(
  HigherClasses ( { "MissingObjectFrameClass" } );
);
"""

UNKNOWN_SOURCE = """
ObjectFrameClass "OddObjectFrameClass"
(
  Flavour ( { "sweet" } );
);
"""

TRIANGLE_SOURCE = """
ObjectFrameClass "AlphaObjectFrameClass"
(
  HigherClasses ( { "GammaObjectFrameClass" } );
);

ObjectFrameClass "BetaObjectFrameClass"
(
  HigherClasses ( { "AlphaObjectFrameClass" } );
);

ObjectFrameClass "GammaObjectFrameClass"
(
  HigherClasses ( { "BetaObjectFrameClass" } );
);
"""

SELF_SOURCE = """
ObjectFrameClass "OuroborosObjectFrameClass"
(
  HigherClasses ( { "OuroborosObjectFrameClass" } );
);
"""

TICK_SOURCE = """
ObjectFrameClass "ClockObjectFrameClass"
(
  Dictionary ( English ( { "clock", "clocks" } ) );
  AttributeType "RelativeTime"
  (
    <SuperType val = "Quantitative"/>
    "Values" ( { "Unspecified" } );
  );
);

BehaviorClass "TickBehaviorClass"
(
  Dictionary ( English ( { "tick", "ticked", "ticked", "ticks", "ticking" } ) );
  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = ClockObjectFrameClass />
      <Attribute ref = RelativeTime PRIOR_BINDING />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = ClockObjectFrameClass />
      <Attribute ref = RelativeTime POST_BINDING />
    );
  );
);
"""


def tick_source(prior: str, post: str) -> str:
    return TICK_SOURCE.replace("PRIOR_BINDING", prior).replace("POST_BINDING", post)


class StarParserTester(unittest.TestCase):
    """Parsing and printing single Star files."""

    def test_trophy_file_definitions(self) -> None:
        """The trophy file yields its classes and behaviors in file order."""
        with open(ONTOLOGY_DIR / "trophy_suitcase.star", encoding="utf-8") as f:
            document = parse_star(f.read(), "trophy_suitcase.star")
        names = [d.name for d in document.class_defs]
        self.assertEqual(names[0], "ContainerObjectObjectFrameClass")
        self.assertIn("NotFit_Big_BehaviorClass", names)
        self.assertLess(names.index("TrophyObjectFrameClass"), names.index("FitsBehaviorClass"))

    def test_pretty_print_parses_back(self) -> None:
        """Printed Star text parses to equal definitions."""
        with open(ONTOLOGY_DIR / "trophy_suitcase.star", encoding="utf-8") as f:
            document = parse_star(f.read(), "trophy_suitcase.star")
        reparsed = parse_star(pretty_print(document), "printed")
        self.assertEqual(reparsed.class_defs, document.class_defs)

    def test_unknown_element(self) -> None:
        """Unknown child elements are rejected."""
        with self.assertRaises(UnknownElement):
            parse_star(UNKNOWN_SOURCE)


class OntologyLinkTester(unittest.TestCase):
    """Linking the bundled ontology."""

    def setUp(self) -> None:
        self.ontology = bundled_ontology()

    def test_partial_person_classes_merge(self) -> None:
        """Every partial PersonObjectFrameClass contributes its attribute types."""
        person = self.ontology.object_class("PersonObjectFrameClass")
        names = {a.name for a in person.attribute_types}
        for expected in ("FunctionalAttributeType1", "FunctionalAttributeType2", "LiftingState", "PassiveIsLiftedState"):
            self.assertIn(expected, names)

    def test_ancestors(self) -> None:
        """Ancestors are the transitive higher classes."""
        ancestors = self.ontology.ancestors("TrophyObjectFrameClass")
        self.assertIn("EnclosableObjectObjectFrameClass", ancestors)
        self.assertIn("EverydayObjectFrameClass", ancestors)
        self.assertTrue(self.ontology.is_a("TrophyObjectFrameClass", "EverydayObjectFrameClass"))
        self.assertFalse(self.ontology.is_a("SuitcaseObjectFrameClass", "EnclosableObjectObjectFrameClass"))

    def test_inherited_attribute_type(self) -> None:
        """Attribute types are found on the declaring ancestor."""
        declared = self.ontology.attribute_type("TrophyObjectFrameClass", "FunctionalAttributeType1")
        self.assertIsNotNone(declared)
        self.assertEqual(declared[0], "EnclosableObjectObjectFrameClass")
        self.assertTrue(declared[1].optional_causal_feature)
        self.assertEqual(declared[1].value_for_word("big").name, "TooBig")

    def test_behavior_names_are_trimmed(self) -> None:
        """Quoted names with stray spaces are stored trimmed."""
        self.assertIn("NotLift_Heavy_BehaviorClass", self.ontology.behaviors)

    def test_missing_behavior(self) -> None:
        """Looking up an undefined behavior raises NotFound."""
        with self.assertRaises(NotFound):
            self.ontology.behavior("NoSuchBehaviorClass")

    def test_lookup_noun(self) -> None:
        """Nouns map to their classes; prior words pick the two-word class."""
        self.assertEqual([c.name for c in self.ontology.lookup_noun("trophys")], ["TrophyObjectFrameClass"])
        self.assertEqual([c.name for c in self.ontology.lookup_noun("suitcase", "brown")], ["SuitcaseObjectFrameClass"])
        self.assertEqual(
            [c.name for c in self.ontology.lookup_noun("councilmen", "city")], ["CityCouncilmanObjectFrameClass"]
        )
        self.assertEqual(self.ontology.lookup_noun("unicorn"), [])

    def test_plural_forms(self) -> None:
        """The second slot of each noun entry is the plural."""
        self.assertTrue(self.ontology.is_plural_form("CityCouncilmanObjectFrameClass", "councilmen"))
        self.assertFalse(self.ontology.is_plural_form("TrophyObjectFrameClass", "trophy"))
        self.assertTrue(self.ontology.is_plural_form("ManObjectFrameClass", "men"))
        self.assertFalse(self.ontology.is_plural_form("ManObjectFrameClass", "man"))
        self.assertFalse(self.ontology.is_plural_form("ManObjectFrameClass", "boy"))

    def test_ancestors_closed_and_acyclic(self) -> None:
        """No class is its own ancestor and every ancestor's ancestors are inherited."""
        for name in self.ontology.classes:
            ancestors = self.ontology.ancestors(name)
            with self.subTest(name=name):
                self.assertNotIn(name, ancestors)
                for ancestor in ancestors:
                    self.assertTrue(set(self.ontology.ancestors(ancestor)) <= set(ancestors))

    def test_noun_index_complete(self) -> None:
        """Every dictionary word finds its class, alone and after each prior word."""
        for name, definition in self.ontology.classes.items():
            prior = definition.dictionary_prior_word
            for word in definition.dictionary:
                with self.subTest(name=name, word=word):
                    self.assertIn(name, [c.name for c in self.ontology.lookup_noun(word)])
                    for prior_word in prior.words if prior is not None else []:
                        self.assertIn(name, [c.name for c in self.ontology.lookup_noun(word, prior_word)])
            if prior is not None and prior.is_noun:
                for word in prior.words:
                    self.assertIn(name, [c.name for c in self.ontology.lookup_noun(word)])

    def test_verb_index_complete(self) -> None:
        """Every verb form finds the behavior class that lists it."""
        for name, behavior in self.ontology.behaviors.items():
            for form in behavior.verb_dictionary:
                with self.subTest(name=name, form=form):
                    self.assertIn(name, [b.name for b in self.ontology.verb_behaviors(form)])

    def test_unconstrained_search(self) -> None:
        """With no role classes the search is the verb index filtered by negation."""
        forms = {form for behavior in self.ontology.behaviors.values() for form in behavior.verb_dictionary}
        for form in sorted(forms):
            for negation in (False, True):
                with self.subTest(form=form, negation=negation):
                    expected = [b.name for b in self.ontology.verb_behaviors(form) if b.negation == negation]
                    found = [b.name for b in self.ontology.search_behavior_classes(form, negation)]
                    self.assertEqual(found, expected)

    def test_search_behavior_classes(self) -> None:
        """Verb, negation and role classes select behavior classes."""
        lift = self.ontology.search_behavior_classes(
            "lift", True, actor_classes=["ManObjectFrameClass"], actee_classes=["SonObjectFrameClass"]
        )
        self.assertEqual([b.name for b in lift], ["NotLift_Weak_BehaviorClass", "NotLift_Heavy_BehaviorClass"])
        fit = self.ontology.search_behavior_classes(
            "fit", True, actor_classes=["TrophyObjectFrameClass"], actee_classes=["SuitcaseObjectFrameClass"]
        )
        self.assertEqual([b.name for b in fit], ["NotFit_Big_BehaviorClass", "NotFit_Small_BehaviorClass"])
        reversed_roles = self.ontology.search_behavior_classes(
            "fit", False, actor_classes=["SuitcaseObjectFrameClass"], actee_classes=["TrophyObjectFrameClass"]
        )
        self.assertEqual(reversed_roles, [])

    def test_search_requires_result(self) -> None:
        """require=True turns an empty search into NotFound."""
        with self.assertRaises(NotFound):
            self.ontology.search_behavior_classes("juggle", require=True)

    def test_nested_reference(self) -> None:
        """Causal rules point at their nested behavior; simple rules have none."""
        feared = self.ontology.behavior("RefusingSomethingDueToFearBehaviorClass")
        reference = self.ontology.nested_reference(feared)
        self.assertEqual(reference.behavior_ref, "AnticipateHarmfulEventBehaviorClass")
        self.assertAlmostEqual(reference.effective_probability, 0.9)
        self.assertIsNone(self.ontology.nested_reference(self.ontology.behavior("NotLift_Weak_BehaviorClass")))

    def test_consequent_reference(self) -> None:
        """A forward rule's nested behavior sits in its consequent, not its antecedent."""
        advocates = self.ontology.behavior("TalkerAdvocatesActionWithListenersWhoAnticipateSomething")
        self.assertIsNone(nested_reference(advocates))
        self.assertEqual(consequent_reference(advocates).behavior_ref, "AnticipateHarmfulEventBehaviorClass")
        self.assertIsNone(consequent_reference(self.ontology.behavior("RefusingSomethingDueToFearBehaviorClass")))

    def test_passive_participant_slot(self) -> None:
        """The passive participant fills the actee role."""
        heavy = self.ontology.behavior("NotLift_Heavy_BehaviorClass")
        slot = heavy.slot(SemanticRole.ACTEE)
        self.assertTrue(slot.passive_participant)
        self.assertIn("FunctionalAttributeType2", [b.attribute_type_ref for b in slot.attribute_bindings])


class OntologyErrorTester(unittest.TestCase):
    """Link and load failures."""

    def test_inheritance_cycle(self) -> None:
        """A higher-class cycle is reported with its path."""
        with self.assertRaises(CycleDetected):
            link_ontology([parse_star(CYCLE_SOURCE, "cycle.star")])

    def test_longer_inheritance_cycles(self) -> None:
        """Three-class and self cycles are rejected too."""
        for source in (TRIANGLE_SOURCE, SELF_SOURCE):
            with self.subTest(source=source):
                with self.assertRaises(CycleDetected):
                    link_ontology([parse_star(source, "cycle.star")])

    def test_expr_before_var(self) -> None:
        """An attribute expression needs a var bound earlier in the rule."""
        with self.assertRaises(UnboundSymbol):
            link_ontology([parse_star(tick_source("expr = (t1$+1)", "var = t1$"), "tick.star")])
        ontology = link_ontology([parse_star(tick_source("var = t1$", "expr = (t1$+1)"), "tick.star")])
        self.assertIn("TickBehaviorClass", ontology.behaviors)

    def test_dangling_higher_class(self) -> None:
        """A higher class that is never defined is an unresolved reference."""
        with self.assertRaises(UnresolvedRef):
            link_ontology([parse_star(DANGLING_SOURCE, "dangling.star")])

    def test_missing_manifest(self) -> None:
        """A directory without the manifest cannot be loaded."""
        with self.assertRaises(OntologyLoadError):
            load_ontology(ONTOLOGY_DIR, "no_such_manifest.txt")


if __name__ == "__main__":
    unittest.main()
