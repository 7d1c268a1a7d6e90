"""
Oracle cross-check tests.
"""

import unittest

from src.engine.spanning import ObjectInstanceSemanticWrapper
from src.resolution.oracle import oracle_ranking, oracle_referent
from src.snf.model import SemanticRole, SyntacticRole
from tests.helpers import COUNCIL_ADVOCATED, SCHEMA_RESOLUTIONS, TROPHY_BIG, bundled_ontology, make_engine, pronoun_features, split_schema


def oracle_answer(sentence: str) -> str:
    """Antecedent word the oracle picks for the schema's pronoun"""
    main_text, clause = split_schema(sentence)
    output = make_engine().run(main_text)
    co_occurring = []
    if sentence == COUNCIL_ADVOCATED:
        violence = output.model.instantiate("ViolenceObjectFrameClass", "violence")
        co_occurring.append(ObjectInstanceSemanticWrapper(violence, SemanticRole.ACTEE, syntactic_role=SyntacticRole.DIRECT_OBJECT))
    features = pronoun_features(clause, co_occurring)
    match = oracle_referent(output.stack, features, bundled_ontology(), model=output.model)
    return match.wrapper.instance.content_string


class OracleTester(unittest.TestCase):
    """The brute-force oracle agrees with the staged resolver."""

    def test_agrees_with_engine(self) -> None:
        """Oracle and engine pick the same antecedent on every schema sentence."""
        engine = make_engine()
        for sentence, (_, antecedent, _) in SCHEMA_RESOLUTIONS.items():
            with self.subTest(sentence=sentence):
                self.assertEqual(oracle_answer(sentence), antecedent)
                self.assertEqual(engine.run(sentence).results[0].antecedent_word, antecedent)

    def test_agrees_on_variants(self) -> None:
        """Tense, contraction and modifier variants keep oracle and engine in step."""
        variants = {}
        for verb in ("does not fit", "doesn't fit", "did not fit"):
            for container in ("the brown suitcase", "the suitcase"):
                for copula in ("is", "was"):
                    for adjective, antecedent in (("big", "trophy"), ("small", "suitcase")):
                        sentence = f"The trophy {verb} in {container} because it {copula} too {adjective}."
                        variants[sentence] = antecedent
        for verb in ("did not lift", "didn't lift"):
            for adjective, antecedent in (("weak", "man"), ("heavy", "son")):
                variants[f"The man {verb} his son because he was too {adjective}."] = antecedent
        self.assertGreaterEqual(len(variants), 20)

        engine = make_engine()
        for sentence, antecedent in variants.items():
            with self.subTest(sentence=sentence):
                self.assertEqual(oracle_answer(sentence), antecedent)
                self.assertEqual(engine.run(sentence).results[0].antecedent_word, antecedent)

    def test_ranking(self) -> None:
        """Only the trophy explains 'too big'."""
        main_text, clause = split_schema(TROPHY_BIG)
        output = make_engine().run(main_text)
        ranking = oracle_ranking(output.stack, pronoun_features(clause), bundled_ontology())
        self.assertEqual([uid for uid, _ in ranking], ["TrophyObjectFrameClass-1"])


if __name__ == "__main__":
    unittest.main()
