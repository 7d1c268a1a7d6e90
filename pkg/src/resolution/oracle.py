"""
Brute-force referent oracle.

Enumerates every spanning information, every compatible candidate, every
behavior recorded for the main verb and the role the candidate filled in
that behavior's application, and applies the same adjective and nested-verb
predicates as the staged resolver. Used to cross-check the resolver on the
schema sentences.
"""

import logging
from typing import Iterator, List, Optional, Tuple

from src.engine.features import HypotheticalUsage, PronounFeatureSet, TemporalOrder
from src.engine.spanning import ObjectInstanceSemanticWrapper, SpanningInformation, SpanningInfoStack
from src.instance.model import InstanceModel
from src.ontology.linker import Ontology, nested_reference
from src.ontology.model import BehaviorClassDef, BindingMode
from src.reasoning.generate_and_test import generate_and_test
from src.resolution.matchers import compatible_candidates
from src.resolution.result import CandidateMatch, Mechanism
from src.snf.model import SemanticRole
from src.utils.errors import NotFound

logger = logging.getLogger(__name__)


def _role_in(info: SpanningInformation, behavior: BehaviorClassDef, wrapper: ObjectInstanceSemanticWrapper) -> SemanticRole:
    for record in info.applications:
        if record.behavior == behavior.name:
            role = record.role_of(wrapper.instance.unique_id)
            if role is not None:
                return role
    return wrapper.effective_role


def _adjective_match(
    wrapper: ObjectInstanceSemanticWrapper,
    role: SemanticRole,
    behavior: BehaviorClassDef,
    features: PronounFeatureSet,
    ontology: Ontology,
) -> Optional[CandidateMatch]:
    if features.negation_of_search_key:
        return None
    section = "post" if features.temporal_order_indicator == TemporalOrder.FOLLOWING else "prior"
    slot = behavior.slot(role, section)
    if slot is None:
        return None
    for binding in slot.attribute_bindings:
        if binding.mode != BindingMode.VAL:
            continue
        declared = ontology.attribute_type(wrapper.instance.reference_class, binding.attribute_type_ref)
        if declared is None or not declared[1].optional_causal_feature:
            continue
        value = declared[1].value(binding.value)
        if value is not None and features.search_key_adjective in value.dictionary:
            return CandidateMatch(
                wrapper,
                Mechanism.ADJECTIVE_CAUSAL,
                behavior.effective_probability,
                causal_feature=(binding.attribute_type_ref, value.name),
                matched_behavior=behavior.name,
            )
    return None


def _nested_match(
    wrapper: ObjectInstanceSemanticWrapper,
    role: SemanticRole,
    behavior: BehaviorClassDef,
    features: PronounFeatureSet,
    ontology: Ontology,
) -> Optional[CandidateMatch]:
    reference = nested_reference(behavior)
    if reference is None:
        return None
    if reference.behavior_ref not in {b.name for b in ontology.verb_behaviors(features.search_key_verb)}:
        return None
    for _, parameter in reference.parameters():
        symbol = parameter.identity_symbol
        if symbol and behavior.identity_role(symbol) == role and reference.parameter_for_symbol(symbol) == features.semantic_role:
            return CandidateMatch(
                wrapper,
                Mechanism.VERB_NESTED_BEHAVIOR,
                reference.effective_probability,
                matched_behavior=behavior.name,
                matched_nested_behavior=reference.behavior_ref,
            )
    return None


def enumerate_matches(
    info: SpanningInformation,
    features: PronounFeatureSet,
    ontology: Ontology,
    person_class: str = "PersonObjectFrameClass",
) -> Iterator[CandidateMatch]:
    for wrapper in compatible_candidates(info, features, ontology, person_class):
        for behavior in info.main_behaviors():
            role = _role_in(info, behavior, wrapper)
            if features.search_key_adjective:
                match = _adjective_match(wrapper, role, behavior, features, ontology)
            elif features.search_key_verb:
                match = _nested_match(wrapper, role, behavior, features, ontology)
            else:
                match = None
            if match is not None:
                match.info = info
                yield match


def oracle_referent(
    stack: SpanningInfoStack,
    features: PronounFeatureSet,
    ontology: Ontology,
    model: Optional[InstanceModel] = None,
    person_class: str = "PersonObjectFrameClass",
) -> CandidateMatch:
    """
    Highest-probability match in the newest spanning information that has any.

    Raises:
        NotFound: no information on the stack yields a match
    """
    for info in stack:
        matches: List[CandidateMatch] = list(enumerate_matches(info, features, ontology, person_class))
        if not matches and features.search_key_verb and features.hypothetical_usage == HypotheticalUsage.EXPLANATION_OF_CAUSE:
            matches = list(_generate_and_test_matches(info, features, ontology, model, person_class))
        if matches:
            best = max(matches, key=lambda match: match.probability)
            logger.debug("Oracle chose %s among %d match(es)", best.wrapper.instance.unique_id, len(matches))
            return best
    raise NotFound(f"oracle found no referent for '{features.pronoun_word}'")


def _generate_and_test_matches(
    info: SpanningInformation,
    features: PronounFeatureSet,
    ontology: Ontology,
    model: Optional[InstanceModel],
    person_class: str,
) -> Iterator[CandidateMatch]:
    for wrapper in compatible_candidates(info, features, ontology, person_class):
        try:
            report = generate_and_test(features, wrapper, info, ontology, master=model, person_class=person_class)
        except NotFound:
            continue
        if report.matched:
            yield CandidateMatch(
                wrapper,
                Mechanism.GENERATE_AND_TEST,
                report.probability,
                matched_behavior=report.main_behavior,
                matched_nested_behavior=report.nested_behavior,
                info=info,
            )


def oracle_ranking(
    stack: SpanningInfoStack,
    features: PronounFeatureSet,
    ontology: Ontology,
    person_class: str = "PersonObjectFrameClass",
) -> List[Tuple[str, float]]:
    """Every (instance id, probability) the oracle considers, newest information first"""
    ranking = []
    for info in stack:
        for match in enumerate_matches(info, features, ontology, person_class):
            ranking.append((match.wrapper.instance.unique_id, match.probability))
    return ranking
