"""
Pronoun resolution tests over the schema sentences.
"""

import unittest
from typing import Dict
from unittest.mock import patch

from src.engine.features import Cardinality, Gender, PronounFeatureSet
from src.engine.spanning import ObjectInstanceSemanticWrapper, SpanningInformation, SpanningInfoStack
from src.instance.model import InstanceModel
from src.ontology.model import BehaviorClassReferenceDef
from src.resolution.resolver import PronounResolver
from src.resolution.result import Mechanism
from src.snf.model import SemanticRole
from src.utils.errors import NotFound
from tests.helpers import (
    COUNCIL_ADVOCATED,
    COUNCIL_FEARED,
    LIFT_HEAVY,
    LIFT_WEAK,
    PAY_DELIVERED,
    PAY_RECEIVED,
    SCHEMA_RESOLUTIONS,
    TROPHY_BIG,
    TROPHY_SMALL,
    bundled_ontology,
    make_engine,
)


class SchemaResolutionTester(unittest.TestCase):
    """Each schema sentence resolves its pronoun to the expected antecedent."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.engine = make_engine()

    def test_schema_sentences(self) -> None:
        """Antecedent word and mechanism for every schema sentence."""
        for sentence, (pronoun, antecedent, mechanism) in SCHEMA_RESOLUTIONS.items():
            with self.subTest(sentence=sentence):
                output = self.engine.run(sentence)
                self.assertEqual(len(output.results), 1)
                result = output.results[0]
                self.assertEqual(result.pronoun_word, pronoun)
                self.assertEqual(result.antecedent_word, antecedent)
                self.assertEqual(result.mechanism.value, mechanism)
                self.assertFalse(result.via_lookahead)

    def test_annotated_text(self) -> None:
        """The resolved antecedent is written next to the pronoun."""
        expected = {
            TROPHY_BIG: "The trophy does not fit in the brown suitcase because it(trophy) is too big .",
            TROPHY_SMALL: "The trophy does not fit in the brown suitcase because it(suitcase) is too small .",
            LIFT_WEAK: "The man did not lift his son because he(man) was too weak .",
            LIFT_HEAVY: "The man did not lift his son because he(son) was too heavy .",
            PAY_RECEIVED: "Joe paid the detective after he(Joe) received the final report on the case .",
            PAY_DELIVERED: "Joe paid the detective after he(detective) delivered the final report on the case .",
            COUNCIL_FEARED: "The city councilmen refused the demonstrators a permit because they(councilmen) feared violence .",
            COUNCIL_ADVOCATED: (
                "The city councilmen refused the demonstrators a permit because they(demonstrators) advocated violence ."
            ),
        }
        self.assertEqual(set(expected), set(SCHEMA_RESOLUTIONS))
        for sentence, annotated in expected.items():
            with self.subTest(sentence=sentence):
                self.assertEqual(self.engine.run(sentence).annotated_text(), annotated)

    def test_negated_adjective(self) -> None:
        """'wasn't too small' explains nothing, so agreement alone picks the actor."""
        output = self.engine.run("The trophy does not fit in the brown suitcase because it wasn't too small.")
        result = output.results[0]
        self.assertEqual(result.antecedent_word, "trophy")
        self.assertEqual(result.mechanism, Mechanism.GENDER_NUMBER_FALLBACK)
        self.assertIsNone(result.causal_feature)

    def test_causal_feature_written_before_rule(self) -> None:
        """'too big' becomes TooBig on the trophy at T01 only."""
        output = self.engine.run(TROPHY_BIG)
        result = output.results[0]
        self.assertEqual(result.causal_feature, ("FunctionalAttributeType1", "TooBig"))
        self.assertEqual(result.matched_behavior, "NotFit_Big_BehaviorClass")
        context = output.model.contexts[0]
        trophy_id = result.referent_instance.unique_id
        self.assertEqual(context.at("T01").component(trophy_id).attributes["FunctionalAttributeType1"], "TooBig")
        self.assertNotIn("FunctionalAttributeType1", context.at("T02").component(trophy_id).attributes)

    def test_nested_behavior_probability(self) -> None:
        """Fear explains the refusal with the reference's probability."""
        result = make_engine().run(COUNCIL_FEARED).results[0]
        self.assertEqual(result.matched_behavior, "RefusingSomethingDueToFearBehaviorClass")
        self.assertEqual(result.matched_nested_behavior, "AnticipateHarmfulEventBehaviorClass")
        self.assertAlmostEqual(result.probability, 0.9)

    def test_cataphora(self) -> None:
        """A pronoun in a leading clause is resolved by looking ahead."""
        output = self.engine.run("Because it was too big, the trophy did not fit in the suitcase.")
        result = output.results[0]
        self.assertTrue(result.via_lookahead)
        self.assertEqual(result.antecedent_word, "trophy")
        self.assertEqual(result.mechanism, Mechanism.ADJECTIVE_CAUSAL)
        self.assertIn("(lookahead)", result.describe())

    def test_within_unit(self) -> None:
        """An object pronoun refers to the of-phrase in its own subject."""
        output = self.engine.run("The owners of the house sold it.")
        result = output.results[0]
        self.assertEqual(result.antecedent_word, "house")
        self.assertEqual(result.mechanism, Mechanism.WITHIN_UNIT)

    def test_gender_number_fallback(self) -> None:
        """Without a rule to explain the clause, the most recent agreeing actor wins."""
        output = self.engine.run("The man lifted his son. He was tired.")
        result = output.results[0]
        self.assertEqual(result.antecedent_word, "man")
        self.assertEqual(result.mechanism, Mechanism.GENDER_NUMBER_FALLBACK)

    def test_unresolved_pronoun_warns(self) -> None:
        """A pronoun with nothing before or after it is reported, not raised."""
        output = self.engine.run("He was tired.")
        self.assertEqual(output.results, [])
        self.assertTrue(any("could not resolve 'he'" in w for w in output.warnings))


class ResolverFallbackTester(unittest.TestCase):
    """Gender and number agreement without a search key."""

    def setUp(self) -> None:
        self.model = InstanceModel()
        self.resolver = PronounResolver(bundled_ontology())

    def stack_of(self, *wrappers: ObjectInstanceSemanticWrapper) -> SpanningInfoStack:
        stack = SpanningInfoStack()
        stack.push(SpanningInformation(wrappers=list(wrappers)))
        return stack

    def wrapper(self, class_name: str, word: str, role: SemanticRole) -> ObjectInstanceSemanticWrapper:
        return ObjectInstanceSemanticWrapper(self.model.instantiate(class_name, word), role)

    def test_tie_is_reported(self) -> None:
        """Two equally ranked candidates resolve to the first with a warning."""
        stack = self.stack_of(
            self.wrapper("ManObjectFrameClass", "man", SemanticRole.ACTOR),
            self.wrapper("SonObjectFrameClass", "son", SemanticRole.ACTOR),
        )
        features = PronounFeatureSet("he", gender=Gender.MALE, cardinality=Cardinality.SINGULAR)
        result = self.resolver.resolve(stack, features, self.model)
        self.assertEqual(result.antecedent_word, "man")
        self.assertEqual(result.mechanism, Mechanism.GENDER_NUMBER_FALLBACK)
        self.assertEqual(len(result.warnings), 1)
        self.assertIn("ambiguous fallback", result.warnings[0])

    def test_role_outranks_recency(self) -> None:
        """An older actor beats a newer actee."""
        stack = self.stack_of(self.wrapper("ManObjectFrameClass", "man", SemanticRole.ACTOR))
        stack.push(SpanningInformation(wrappers=[self.wrapper("SonObjectFrameClass", "son", SemanticRole.ACTEE)]))
        features = PronounFeatureSet("he", gender=Gender.MALE, cardinality=Cardinality.SINGULAR)
        result = self.resolver.resolve(stack, features, self.model)
        self.assertEqual(result.antecedent_word, "man")
        self.assertEqual(result.mechanism, Mechanism.GENDER_NUMBER_FALLBACK)
        self.assertEqual(result.warnings, [])

    def test_recency_breaks_role_ties(self) -> None:
        """Between two actors the newer one wins."""
        stack = self.stack_of(self.wrapper("ManObjectFrameClass", "man", SemanticRole.ACTOR))
        stack.push(SpanningInformation(wrappers=[self.wrapper("SonObjectFrameClass", "son", SemanticRole.ACTOR)]))
        features = PronounFeatureSet("he", gender=Gender.MALE, cardinality=Cardinality.SINGULAR)
        self.assertEqual(self.resolver.resolve(stack, features, self.model).antecedent_word, "son")

    def test_gender_excludes(self) -> None:
        """'she' does not agree with a man."""
        stack = self.stack_of(
            self.wrapper("ManObjectFrameClass", "man", SemanticRole.ACTOR),
            self.wrapper("WomanObjectFrameClass", "woman", SemanticRole.ACTEE),
        )
        features = PronounFeatureSet("she", gender=Gender.FEMALE, cardinality=Cardinality.SINGULAR)
        self.assertEqual(self.resolver.resolve(stack, features, self.model).antecedent_word, "woman")

    def test_nothing_agrees(self) -> None:
        """An inanimate pronoun cannot refer to people."""
        stack = self.stack_of(self.wrapper("ManObjectFrameClass", "man", SemanticRole.ACTOR))
        features = PronounFeatureSet("it", cardinality=Cardinality.SINGULAR, animate=False)
        with self.assertRaises(NotFound):
            self.resolver.resolve(stack, features, self.model)

class ExploratorySearchTester(unittest.TestCase):
    """Choosing among the matches of one spanning information, and walking the stack."""

    def setUp(self) -> None:
        self.model = InstanceModel()
        self.ontology = bundled_ontology()
        self.resolver = PronounResolver(self.ontology)
        self.behavior = self.ontology.behavior("RefusingSomethingDueToFearBehaviorClass")
        self.man = ObjectInstanceSemanticWrapper(self.model.instantiate("ManObjectFrameClass", "man"), SemanticRole.ACTOR)
        self.son = ObjectInstanceSemanticWrapper(self.model.instantiate("SonObjectFrameClass", "son"), SemanticRole.ACTEE)
        self.features = PronounFeatureSet(
            "he", gender=Gender.MALE, cardinality=Cardinality.SINGULAR, search_key_verb="feared"
        )

    def nested_matcher(self, probabilities: Dict[str, float]):
        """Stand-in for the nested-behavior predicate: matches the named words with the given probabilities"""

        def match(wrapper, features, info, ontology):
            probability = probabilities.get(wrapper.instance.content_string)
            if probability is None:
                return None
            return self.behavior, BehaviorClassReferenceDef("AnticipateHarmfulEventBehaviorClass", probability)

        return match

    def test_highest_probability_wins(self) -> None:
        """A later candidate at 0.9 beats an earlier one at 0.4."""
        info = SpanningInformation(wrappers=[self.man, self.son])
        with patch("src.resolution.resolver.match_verb_nested_behavior", self.nested_matcher({"man": 0.4, "son": 0.9})):
            match = self.resolver.exploratory_search_one_info(info, self.features)
        self.assertIs(match.wrapper, self.son)
        self.assertAlmostEqual(match.probability, 0.9)
        self.assertEqual(match.mechanism, Mechanism.VERB_NESTED_BEHAVIOR)

    def test_choice_survives_uniform_scaling(self) -> None:
        """Scaling every probability by the same factor never changes the choice."""
        for man, son in ((0.4, 0.9), (0.9, 0.4), (0.5, 0.5)):
            info = SpanningInformation(wrappers=[self.man, self.son])
            with patch("src.resolution.resolver.match_verb_nested_behavior", self.nested_matcher({"man": man, "son": son})):
                baseline = self.resolver.exploratory_search_one_info(info, self.features).wrapper
            for factor in (1.0, 0.5, 0.1, 0.01):
                with self.subTest(man=man, son=son, factor=factor):
                    scaled = {"man": man * factor, "son": son * factor}
                    with patch("src.resolution.resolver.match_verb_nested_behavior", self.nested_matcher(scaled)):
                        chosen = self.resolver.exploratory_search_one_info(info, self.features).wrapper
                    self.assertIs(chosen, baseline)

    def test_ties_keep_candidate_order(self) -> None:
        """Equal probabilities resolve to the earlier candidate."""
        info = SpanningInformation(wrappers=[self.man, self.son])
        with patch("src.resolution.resolver.match_verb_nested_behavior", self.nested_matcher({"man": 0.5, "son": 0.5})):
            self.assertIs(self.resolver.exploratory_search_one_info(info, self.features).wrapper, self.man)

    def test_match_in_older_information(self) -> None:
        """When the newest information has no match, the one below it is searched."""
        older = SpanningInformation(wrappers=[self.man])
        newer = SpanningInformation(wrappers=[self.son])
        stack = SpanningInfoStack()
        stack.push(older)
        stack.push(newer)
        with patch("src.resolution.resolver.match_verb_nested_behavior", self.nested_matcher({"man": 0.7})):
            match = self.resolver.exploratory_search_stack(stack, self.features)
        self.assertIs(match.wrapper, self.man)
        self.assertIs(match.info, older)
        self.assertIs(stack.current(), newer)



if __name__ == "__main__":
    unittest.main()
