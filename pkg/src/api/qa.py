"""
Question answering over a disambiguated text's instance model.

Two question shapes are understood:

    What/Who is/was [too|so|very] ADJ?   -> the instance holding a value named by ADJ
    Who VERB ...?                        -> the actor of that verb's clause
"""

import logging
import re
from typing import Optional

from src.engine.driver import ClauseRecord, EngineOutput
from src.frontend.lexicon import Lexicon, get_lexicon
from src.instance.model import ObjectInstance
from src.ontology.linker import Ontology
from src.utils.errors import NoAnswer, NoModel

logger = logging.getLogger(__name__)

ADJECTIVE_QUESTION = re.compile(r"^(?:what|who)\s+(is|was)\s+(?:(too|so|very)\s+)?([a-z-]+)\s*\??$", re.IGNORECASE)
VERB_QUESTION = re.compile(r"^who\s+([a-z-]+)\b(.*?)\s*\??$", re.IGNORECASE)


def _noun_phrase(instance: ObjectInstance) -> str:
    word = instance.content_string
    return word if word[:1].isupper() else f"The {word}"


def _sentence(text: str) -> str:
    return text[:1].upper() + text[1:] + "."


def find_instance_for_adjective(output: EngineOutput, ontology: Ontology, adjective: str) -> Optional[ObjectInstance]:
    """
    First instance carrying a value whose dictionary lists the adjective.

    Causal features are preferred over other attributes.
    """
    fallback = None
    for context in output.model.contexts:
        for parent in context.timepoints.values():
            for instance in parent.components:
                for name, value in instance.attributes.items():
                    declared = ontology.attribute_type(instance.reference_class, name)
                    if declared is None:
                        continue
                    definition = declared[1].value(value)
                    if definition is None or adjective not in definition.dictionary:
                        continue
                    if declared[1].optional_causal_feature:
                        return instance
                    fallback = fallback or instance
    return fallback


def find_clause_for_verb(output: EngineOutput, verb: str, lexicon: Lexicon) -> Optional[ClauseRecord]:
    base = lexicon.verb_base(verb) or verb
    for clause in output.clauses:
        if clause.actor_phrase and not clause.negated and (clause.base == base or clause.verb.lower() == verb):
            return clause
    return None


def answer_question(
    question: str,
    output: Optional[EngineOutput],
    ontology: Ontology,
    lexicon: Optional[Lexicon] = None,
) -> str:
    """
    Answer a question about the last disambiguated text.

    Raises:
        NoModel: nothing has been disambiguated yet
        NoAnswer: the question has an unknown shape or nothing in the model answers it
    """
    if output is None or output.model.is_empty():
        raise NoModel("no instance model to answer from; disambiguate a text first")
    lexicon = lexicon or get_lexicon()
    text = question.strip()

    match = ADJECTIVE_QUESTION.match(text)
    if match:
        copula, degree, adjective = match.group(1).lower(), match.group(2), match.group(3).lower()
        instance = find_instance_for_adjective(output, ontology, adjective)
        if instance is None:
            raise NoAnswer(f"nothing in the model is {adjective}")
        words = [_noun_phrase(instance), copula] + ([degree.lower()] if degree else []) + [adjective]
        return " ".join(words) + "."

    match = VERB_QUESTION.match(text)
    if match:
        clause = find_clause_for_verb(output, match.group(1).lower(), lexicon)
        if clause is None:
            raise NoAnswer(f"no clause in the model answers '{question}'")
        return _sentence(f"{clause.actor_phrase} {clause.verb_phrase}")

    raise NoAnswer(f"cannot answer '{question}'")
