"""
Question answering tests.
"""

import unittest

from src.api.qa import answer_question
from src.utils.errors import NoAnswer, NoModel
from tests.helpers import PAY_RECEIVED, TROPHY_BIG, TROPHY_SMALL, bundled_ontology, make_engine


class AnswerQuestionTester(unittest.TestCase):
    """Answers drawn from the instance model of the last text."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.engine = make_engine()
        cls.ontology = bundled_ontology()

    def ask(self, text: str, question: str) -> str:
        return answer_question(question, self.engine.run(text), self.ontology, self.engine.lexicon)

    def test_too_big(self) -> None:
        """The causal feature answers the adjective question."""
        self.assertEqual(self.ask(TROPHY_BIG, "What is too big?"), "The trophy is too big.")

    def test_too_small(self) -> None:
        """The other schema sentence moves the answer to the suitcase."""
        self.assertEqual(self.ask(TROPHY_SMALL, "What is too small?"), "The suitcase is too small.")

    def test_who_verb(self) -> None:
        """'Who paid ...?' names the actor of the paying clause."""
        answer = self.ask(PAY_RECEIVED, "Who paid the detective?")
        self.assertTrue(answer.startswith("Joe paid"), answer)

    def test_nothing_matches(self) -> None:
        """Adjectives with no instance in the model have no answer."""
        with self.assertRaises(NoAnswer):
            self.ask(TROPHY_BIG, "What is too heavy?")

    def test_unknown_shape(self) -> None:
        """Only the supported question shapes are answered."""
        with self.assertRaises(NoAnswer):
            self.ask(TROPHY_BIG, "Why did the trophy not fit?")

    def test_no_model(self) -> None:
        """Questions before any disambiguation fail with NoModel."""
        with self.assertRaises(NoModel):
            answer_question("What is too big?", None, self.ontology)


if __name__ == "__main__":
    unittest.main()
