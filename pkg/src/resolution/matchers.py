"""
Match predicates shared by the staged resolver and the brute-force oracle.

Each predicate looks at one candidate wrapper inside one spanning information
and answers whether the pronoun's features are explained by a behavior class
recorded for that information's main verb.
"""

from typing import List, Optional, Tuple

from src.engine.features import Cardinality, Gender, PronounFeatureSet, TemporalOrder
from src.engine.spanning import ObjectInstanceSemanticWrapper, SpanningInformation
from src.ontology.linker import Ontology, nested_reference
from src.ontology.model import BehaviorClassDef, BehaviorClassReferenceDef, BindingMode

AdjectiveMatch = Tuple[str, str, BehaviorClassDef]
NestedMatch = Tuple[BehaviorClassDef, BehaviorClassReferenceDef]


def is_pronoun_compatible(
    wrapper: ObjectInstanceSemanticWrapper,
    features: PronounFeatureSet,
    ontology: Ontology,
    person_class: str = "PersonObjectFrameClass",
) -> bool:
    """Number, animacy and gender agreement between the pronoun and an instance"""
    instance = wrapper.instance
    if features.cardinality == Cardinality.PLURAL and not instance.multiple:
        return False
    if features.cardinality == Cardinality.SINGULAR and instance.multiple and len(instance.member_ids) != 1:
        return False

    is_person = instance.reference_class in ontology.classes and ontology.is_a(instance.reference_class, person_class)
    if features.animate is False and is_person:
        return False
    if features.animate is True and not is_person:
        return False

    if features.gender != Gender.NONSPECIFIC and instance.reference_class in ontology.classes:
        declared = ontology.gender_of(instance.reference_class)
        if declared and declared != features.gender.value:
            return False
    return True


def compatible_candidates(
    info: SpanningInformation,
    features: PronounFeatureSet,
    ontology: Ontology,
    person_class: str = "PersonObjectFrameClass",
) -> List[ObjectInstanceSemanticWrapper]:
    return [w for w in info.candidates() if is_pronoun_compatible(w, features, ontology, person_class)]


def match_adjective_causal_feature(
    wrapper: ObjectInstanceSemanticWrapper,
    features: PronounFeatureSet,
    info: SpanningInformation,
    ontology: Ontology,
) -> Optional[AdjectiveMatch]:
    """
    Causal feature explaining the adjective for the role the candidate filled.

    The antecedent section is searched unless the clause is introduced by
    "before", in which case the consequent section is. A negated adjective
    ("it wasn't too small") denies the feature and never matches.

    Returns:
        (attribute type, value, behavior class) or None
    """
    adjective = (features.search_key_adjective or "").lower()
    if not adjective or features.negation_of_search_key:
        return None
    section = "post" if features.temporal_order_indicator == TemporalOrder.FOLLOWING else "prior"
    class_name = wrapper.instance.reference_class

    for behavior in info.main_behaviors():
        slot = behavior.slot(wrapper.effective_role, section)
        if slot is None:
            continue
        for binding in slot.attribute_bindings:
            if binding.mode != BindingMode.VAL:
                continue
            declared = ontology.attribute_type(class_name, binding.attribute_type_ref)
            if declared is None or not declared[1].optional_causal_feature:
                continue
            value = declared[1].value(binding.value)
            if value is not None and adjective in value.dictionary:
                return binding.attribute_type_ref, value.name, behavior
    return None


def match_verb_nested_behavior(
    wrapper: ObjectInstanceSemanticWrapper,
    features: PronounFeatureSet,
    info: SpanningInformation,
    ontology: Ontology,
) -> Optional[NestedMatch]:
    """
    Main-verb behavior whose nested behavior is the current clause's verb, with
    the identity symbol tying the candidate's role to the pronoun's role.
    """
    if not features.search_key_verb:
        return None
    current = {behavior.name for behavior in ontology.verb_behaviors(features.search_key_verb)}
    if not current:
        return None

    for behavior in info.main_behaviors():
        reference = nested_reference(behavior)
        if reference is None or reference.behavior_ref not in current:
            continue
        for _, parameter in reference.parameters():
            symbol = parameter.identity_symbol
            if not symbol:
                continue
            if behavior.identity_role(symbol) != wrapper.effective_role:
                continue
            if reference.parameter_for_symbol(symbol) == features.semantic_role:
                return behavior, reference
    return None
