"""
Canonical Star text for parsed definitions
"""

from typing import Iterable, List, Union

from src.ontology.model import (
    AttributeBinding,
    AttributeTypeDef,
    BehaviorClassDef,
    BehaviorClassReferenceDef,
    BindingMode,
    Definition,
    ObjectFrameClassDef,
    PopulatedObjectClassDef,
    StarDocument,
    StateItem,
)

INDENT = "  "


def _quoted_list(words: Iterable[str]) -> str:
    return "{ " + ", ".join(f'"{w}"' for w in words) + " }"


def _flag(key: str, value: bool) -> str:
    return f'<{key} val = "{"true" if value else "false"}" />'


def _probability(value: float) -> str:
    return f"<Probability expr = {value:g} />"


class _Writer:
    def __init__(self) -> None:
        self.lines: List[str] = []
        self.depth = 0

    def line(self, text: str = "") -> None:
        self.lines.append(INDENT * self.depth + text if text else "")

    def open(self, head: str) -> None:
        self.line(head)
        self.line("(")
        self.depth += 1

    def close(self) -> None:
        self.depth -= 1
        self.line(");")


def _binding(binding: AttributeBinding) -> str:
    if binding.mode == BindingMode.VAL:
        return f'<Attribute ref = {binding.attribute_type_ref} val = "{binding.value}" />'
    if binding.mode == BindingMode.VAR:
        return f"<Attribute ref = {binding.attribute_type_ref} var = {binding.symbol} />"
    if binding.offset:
        sign = "+" if binding.offset > 0 else "-"
        return f"<Attribute ref = {binding.attribute_type_ref} expr = ({binding.symbol}{sign}{abs(binding.offset)}) />"
    return f"<Attribute ref = {binding.attribute_type_ref} expr = {binding.symbol} />"


def _attribute_type(out: _Writer, attribute_type: AttributeTypeDef) -> None:
    out.open(f'AttributeType "{attribute_type.name}"')
    out.line(f'<SuperType val = "{attribute_type.super_type}" />')
    if attribute_type.is_state:
        out.line(_flag("StateAttributeType", True))
    if attribute_type.optional_causal_feature:
        out.line(_flag("OptionalCausalFeature", True))
    out.open('"Values"')
    entries = []
    for value in attribute_type.values:
        if value.dictionary:
            entries.append(f'"{value.name}" : Dictionary ( English ( {_quoted_list(value.dictionary)} ) )')
        else:
            entries.append(f'"{value.name}"')
    out.line("{ " + ", ".join(entries) + " }")
    out.close()
    out.close()


def _object_frame_class(out: _Writer, definition: ObjectFrameClassDef) -> None:
    out.open(f'ObjectFrameClass "{definition.name}"')
    if definition.structure_trait:
        out.line(f'<StructureTrait val = "{definition.structure_trait}" />')
    if definition.gender:
        out.line(f'<Gender val = "{definition.gender}" />')
    if definition.dictionary_prior_word is not None:
        out.open("DictionaryPriorWord")
        if definition.dictionary_prior_word.is_noun:
            out.line(_flag("DictionaryWordIsNoun", True))
        out.line(f"English ( {_quoted_list(definition.dictionary_prior_word.words)} );")
        out.close()
    if definition.dictionary:
        out.line(f"Dictionary ( English ( {_quoted_list(definition.dictionary)} ) );")
    if definition.higher_classes:
        out.line(f"HigherClasses ( {_quoted_list(definition.higher_classes)} );")
    if definition.structural_parent_bases:
        out.line(f"StructuralParentClassesBase ( {_quoted_list(definition.structural_parent_bases)} );")
    if definition.attribute_types:
        out.open("AttributeTypes")
        for attribute_type in definition.attribute_types:
            _attribute_type(out, attribute_type)
        out.close()
    if definition.dimension_systems is not None:
        out.line(f"DimensionSystems ( {definition.dimension_systems} );")
    if definition.structure is not None:
        out.line(f"Structure ( {definition.structure} );")
    out.close()


def _populated(out: _Writer, slot: PopulatedObjectClassDef) -> None:
    out.open(f'PopulatedObjectClass "{slot.role_label}"')
    out.line(f"<ObjectFrameClass ref = {slot.object_class_ref} />")
    for key, value in (
        ("BinderSourceFlag", slot.binder_source),
        ("PassiveParticipant", slot.passive_participant),
        ("ExtraParticipant", slot.extra_participant),
        ("Multiple", slot.multiple),
    ):
        if value:
            out.line(_flag(key, True))
    if slot.dimension_system_ref:
        out.line(f"<DimensionSystem ref = {slot.dimension_system_ref} />")
    for binding in slot.attribute_bindings:
        out.line(_binding(binding))
    out.close()


def _reference(out: _Writer, reference: BehaviorClassReferenceDef) -> None:
    out.open("BehaviorClassReference")
    if reference.probability is not None:
        out.line(_probability(reference.probability))
    out.line(f"<BehaviorClass ref = {reference.behavior_ref} />")
    for role, parameter in reference.parameters():
        symbol = f" expr = {parameter.identity_symbol}" if parameter.identity_symbol else ""
        out.line(f"<Parameter{role.value} ref = {parameter.class_ref}{symbol} />")
    out.close()


def _states(out: _Writer, keyword: str, items: List[StateItem]) -> None:
    out.open(keyword)
    for item in items:
        if isinstance(item, PopulatedObjectClassDef):
            _populated(out, item)
        else:
            _reference(out, item)
    out.close()


def _behavior_class(out: _Writer, behavior: BehaviorClassDef) -> None:
    out.open(f'BehaviorClass "{behavior.name}"')
    if behavior.causal_rule:
        out.line(_flag("CausalRule", True))
    if behavior.bridge_class:
        out.line(f"<BridgeObjectFrameClass ref = {behavior.bridge_class} />")
    if behavior.negation:
        out.line(_flag("Negation", True))
    if behavior.probability is not None:
        out.line(_probability(behavior.probability))
    out.line(f"Dictionary ( English ( {_quoted_list(behavior.verb_dictionary)} ) );")
    if behavior.prior_states:
        _states(out, "PriorStates", behavior.prior_states)
    if behavior.post_states:
        _states(out, "PostStates", behavior.post_states)
    out.close()


def pretty_print(source: Union[StarDocument, Iterable[Definition]]) -> str:
    """Render definitions as Star text that parses back to equal definitions"""
    definitions = source.class_defs if isinstance(source, StarDocument) else list(source)
    out = _Writer()
    for index, definition in enumerate(definitions):
        if index:
            out.line()
        if isinstance(definition, ObjectFrameClassDef):
            _object_frame_class(out, definition)
        else:
            _behavior_class(out, definition)
    return "\n".join(out.lines) + "\n"
