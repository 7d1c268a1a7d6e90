"""
Shared fixtures for the test modules.
"""

from functools import lru_cache
from typing import List, Tuple

from src.engine.driver import SemanticEngine
from src.engine.features import PronounFeatureSet, build_pronoun_feature_set
from src.frontend.adapter import tree_to_snf
from src.frontend.grammar import parse_text
from src.frontend.lexicon import Lexicon
from src.ontology.linker import Ontology
from src.ontology.loader import load_ontology
from src.snf.model import PredicateExpression, flatten_pe_order
from src.utils.config import PROJECT_ROOT, EngineSettings

ONTOLOGY_DIR = PROJECT_ROOT / "data" / "ontology"

TROPHY_BIG = "The trophy does not fit in the brown suitcase because it is too big."
TROPHY_SMALL = "The trophy does not fit in the brown suitcase because it is too small."
LIFT_WEAK = "The man did not lift his son because he was too weak."
LIFT_HEAVY = "The man did not lift his son because he was too heavy."
PAY_RECEIVED = "Joe paid the detective after he received the final report on the case."
PAY_DELIVERED = "Joe paid the detective after he delivered the final report on the case."
COUNCIL_FEARED = "The city councilmen refused the demonstrators a permit because they feared violence."
COUNCIL_ADVOCATED = "The city councilmen refused the demonstrators a permit because they advocated violence."

# sentence -> (pronoun, antecedent word, mechanism)
SCHEMA_RESOLUTIONS = {
    TROPHY_BIG: ("it", "trophy", "AdjectiveCausal"),
    TROPHY_SMALL: ("it", "suitcase", "AdjectiveCausal"),
    LIFT_WEAK: ("he", "man", "AdjectiveCausal"),
    LIFT_HEAVY: ("he", "son", "AdjectiveCausal"),
    PAY_RECEIVED: ("he", "Joe", "VerbNestedBehavior"),
    PAY_DELIVERED: ("he", "detective", "VerbNestedBehavior"),
    COUNCIL_FEARED: ("they", "councilmen", "VerbNestedBehavior"),
    COUNCIL_ADVOCATED: ("they", "demonstrators", "GenerateAndTest"),
}


@lru_cache(maxsize=None)
def bundled_ontology() -> Ontology:
    """The ontology under data/ontology, parsed once per test run"""
    return load_ontology(ONTOLOGY_DIR)


def make_engine(**settings) -> SemanticEngine:
    return SemanticEngine(bundled_ontology(), EngineSettings(**settings))


def engine_lexicon() -> Lexicon:
    return make_engine().lexicon


def split_schema(sentence: str) -> Tuple[str, PredicateExpression]:
    """
    Main clause text of a two-clause schema sentence, and the parsed
    subordinate clause holding the pronoun.
    """
    lexicon = engine_lexicon()
    order: List[PredicateExpression] = flatten_pe_order(tree_to_snf(parse_text(sentence, lexicon)))
    subordinate = order[-1]
    introducer = f" {subordinate.introductory_word} "
    main_text = sentence.split(introducer, 1)[0] + "."
    return main_text, subordinate


def pronoun_features(pe: PredicateExpression, co_occurring=()) -> PronounFeatureSet:
    argument = next(a for a in pe.entity_arguments if a.is_pronoun)
    return build_pronoun_feature_set(pe, argument, co_occurring=list(co_occurring), lexicon=engine_lexicon())
