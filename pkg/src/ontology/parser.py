"""
Star source text to class definitions
"""

import logging
from typing import Callable, Dict, List, Optional

import pyparsing as pp

from src.ontology.grammar import ExprToken, StarNode, StarProperty, Token, render_body, scan
from src.ontology.model import (
    AttributeBinding,
    AttributeTypeDef,
    AttributeValueDef,
    BehaviorClassDef,
    BehaviorClassReferenceDef,
    BindingMode,
    Definition,
    Diagnostic,
    DictionaryPriorWord,
    ObjectFrameClassDef,
    ParameterDef,
    PopulatedObjectClassDef,
    StarDocument,
    StateItem,
)
from src.utils.errors import UnboundSyntax, UnknownElement

logger = logging.getLogger(__name__)

VERB_FORM_SLOTS = 5


def _name(label: Optional[str], node: StarNode) -> str:
    name = (label or "").strip()
    if not name:
        raise UnboundSyntax(f"{node.keyword} without a name", node.line, node.column)
    return name


def _text(token: Optional[Token]) -> Optional[str]:
    if token is None:
        return None
    if isinstance(token, ExprToken):
        return token.symbol
    if isinstance(token, float):
        return f"{token:g}"
    return token.strip()


def _flag(prop: StarProperty) -> bool:
    return (_text(prop.get("val")) or "").lower() == "true"


def _number(prop: StarProperty) -> Optional[float]:
    raw = prop.get("val")
    if raw is None:
        raw = prop.get("expr")
    if isinstance(raw, float):
        return raw
    try:
        return float(_text(raw) or "")
    except ValueError as e:
        raise UnboundSyntax(f"{prop.key} expects a number", prop.line, prop.column) from e


def _words(node: StarNode) -> List[str]:
    return [v.text.strip() for v in node.all_values()]


def _unknown_property(owner: str, prop: StarProperty) -> UnknownElement:
    return UnknownElement(f"unknown property '{prop.key}' in {owner}", prop.line, prop.column)


def _unknown_element(owner: str, node: StarNode) -> UnknownElement:
    return UnknownElement(f"unknown element '{node.keyword}' in {owner}", node.line, node.column)


class StarBuilder:
    """Turns generic grammar nodes into typed definitions"""

    def __init__(self, source_name: str):
        self.source_name = source_name
        self.diagnostics: List[Diagnostic] = []

    def build(self, node: StarNode) -> Definition:
        if node.keyword == "ObjectFrameClass":
            return self.object_frame_class(node)
        if node.keyword == "BehaviorClass":
            return self.behavior_class(node)
        raise UnknownElement(f"unknown top-level element '{node.keyword}'", node.line, node.column)

    # --- object frame classes -------------------------------------------------

    def object_frame_class(self, node: StarNode) -> ObjectFrameClassDef:
        definition = ObjectFrameClassDef(name=_name(node.label, node), line=node.line)
        for prop in node.properties:
            if prop.key == "StructureTrait":
                definition.structure_trait = _text(prop.get("val"))
            elif prop.key == "Gender":
                definition.gender = _text(prop.get("val"))
            else:
                raise _unknown_property("ObjectFrameClass", prop)

        handlers: Dict[str, Callable[[StarNode], None]] = {
            "DictionaryPriorWord": lambda child: setattr(definition, "dictionary_prior_word", self.prior_word(child)),
            "Dictionary": lambda child: definition.dictionary.extend(_words(child)),
            "HigherClasses": lambda child: definition.higher_classes.extend(_words(child)),
            "StructuralParentClassesBase": lambda child: definition.structural_parent_bases.extend(_words(child)),
            "AttributeTypes": lambda child: definition.attribute_types.extend(self.attribute_types(child)),
            "AttributeType": lambda child: definition.attribute_types.append(self.attribute_type(child)),
            "DimensionSystems": lambda child: setattr(definition, "dimension_systems", render_body(child)),
            "Structure": lambda child: setattr(definition, "structure", render_body(child)),
        }
        for child in node.children:
            handler = handlers.get(child.keyword)
            if handler is None:
                raise _unknown_element("ObjectFrameClass", child)
            handler(child)
        return definition

    def prior_word(self, node: StarNode) -> DictionaryPriorWord:
        is_noun = False
        for prop in node.properties:
            if prop.key != "DictionaryWordIsNoun":
                raise _unknown_property("DictionaryPriorWord", prop)
            is_noun = _flag(prop)
        return DictionaryPriorWord(words=_words(node), is_noun=is_noun)

    def attribute_types(self, node: StarNode) -> List[AttributeTypeDef]:
        found = []
        for child in node.children:
            if child.keyword != "AttributeType":
                raise _unknown_element("AttributeTypes", child)
            found.append(self.attribute_type(child))
        return found

    def attribute_type(self, node: StarNode) -> AttributeTypeDef:
        attribute_type = AttributeTypeDef(name=_name(node.label, node))
        for prop in node.properties:
            if prop.key == "SuperType":
                attribute_type.super_type = _text(prop.get("val")) or attribute_type.super_type
            elif prop.key == "StateAttributeType":
                attribute_type.is_state = _flag(prop)
            elif prop.key == "OptionalCausalFeature":
                attribute_type.optional_causal_feature = _flag(prop)
            else:
                raise _unknown_property("AttributeType", prop)
        for child in node.children:
            if child.keyword != "Values":
                raise _unknown_element("AttributeType", child)
            for value in child.all_values():
                words = _words(value.dictionary) if value.dictionary is not None else []
                attribute_type.values.append(AttributeValueDef(value.text.strip(), [w.lower() for w in words]))
        return attribute_type

    # --- behavior classes -----------------------------------------------------

    def behavior_class(self, node: StarNode) -> BehaviorClassDef:
        behavior = BehaviorClassDef(name=_name(node.label, node), line=node.line)
        for prop in node.properties:
            if prop.key == "CausalRule":
                behavior.causal_rule = _flag(prop)
            elif prop.key == "Negation":
                behavior.negation = _flag(prop)
            elif prop.key == "BridgeObjectFrameClass":
                behavior.bridge_class = _text(prop.get("ref"))
            elif prop.key == "Probability":
                behavior.probability = _number(prop)
            else:
                raise _unknown_property("BehaviorClass", prop)
        for child in node.children:
            if child.keyword == "Dictionary":
                behavior.verb_dictionary.extend(w.lower() for w in _words(child))
            elif child.keyword == "PriorStates":
                behavior.prior_states.extend(self.states(child))
            elif child.keyword == "PostStates":
                behavior.post_states.extend(self.states(child))
            else:
                raise _unknown_element("BehaviorClass", child)

        if not behavior.verb_dictionary:
            raise UnboundSyntax(f"behavior class {behavior.name} has no verb dictionary", node.line, node.column)
        if len(behavior.verb_dictionary) != VERB_FORM_SLOTS:
            self.diagnostics.append(
                Diagnostic(node.line, node.column, f"{behavior.name}: expected {VERB_FORM_SLOTS} verb forms, found {len(behavior.verb_dictionary)}")
            )
        return behavior

    def states(self, node: StarNode) -> List[StateItem]:
        items: List[StateItem] = []
        for child in node.children:
            if child.keyword == "PopulatedObjectClass":
                items.append(self.populated_object_class(child))
            elif child.keyword == "BehaviorClassReference":
                items.append(self.behavior_reference(child))
            else:
                raise _unknown_element(node.keyword, child)
        return items

    def populated_object_class(self, node: StarNode) -> PopulatedObjectClassDef:
        slot = PopulatedObjectClassDef(role_label=_name(node.label, node), object_class_ref="")
        for prop in node.properties:
            if prop.key == "ObjectFrameClass":
                slot.object_class_ref = _text(prop.get("ref")) or ""
            elif prop.key == "BinderSourceFlag":
                slot.binder_source = _flag(prop)
            elif prop.key == "PassiveParticipant":
                slot.passive_participant = _flag(prop)
            elif prop.key == "ExtraParticipant":
                slot.extra_participant = _flag(prop)
            elif prop.key == "Multiple":
                slot.multiple = _flag(prop)
            elif prop.key == "DimensionSystem":
                slot.dimension_system_ref = _text(prop.get("ref"))
            elif prop.key == "Attribute":
                slot.attribute_bindings.append(self.binding(prop))
            else:
                raise _unknown_property("PopulatedObjectClass", prop)
        if node.children:
            raise _unknown_element("PopulatedObjectClass", node.children[0])
        if not slot.object_class_ref:
            raise UnboundSyntax(f"populated object class {slot.role_label} has no ObjectFrameClass", node.line, node.column)
        return slot

    def binding(self, prop: StarProperty) -> AttributeBinding:
        ref = _text(prop.get("ref"))
        if not ref:
            raise UnboundSyntax("Attribute without ref", prop.line, prop.column)
        if prop.get("val") is not None:
            return AttributeBinding(ref, BindingMode.VAL, value=_text(prop.get("val")))
        if prop.get("var") is not None:
            return AttributeBinding(ref, BindingMode.VAR, symbol=_text(prop.get("var")))
        expr = prop.get("expr")
        if expr is not None:
            offset = expr.offset if isinstance(expr, ExprToken) else 0
            return AttributeBinding(ref, BindingMode.EXPR, symbol=_text(expr), offset=offset)
        raise UnboundSyntax(f"Attribute {ref} needs val, var or expr", prop.line, prop.column)

    def behavior_reference(self, node: StarNode) -> BehaviorClassReferenceDef:
        reference = BehaviorClassReferenceDef(behavior_ref="")
        for prop in node.properties:
            if prop.key == "BehaviorClass":
                reference.behavior_ref = _text(prop.get("ref")) or ""
            elif prop.key == "Probability":
                reference.probability = _number(prop)
            elif prop.key in ("ParameterActor", "ParameterActee", "ParameterExtra"):
                symbol = prop.get("expr") if prop.get("expr") is not None else prop.get("var")
                parameter = ParameterDef(_text(prop.get("ref")) or "", _text(symbol))
                setattr(reference, "parameter_" + prop.key[len("Parameter"):].lower(), parameter)
            else:
                raise _unknown_property("BehaviorClassReference", prop)
        if not reference.behavior_ref:
            raise UnboundSyntax("BehaviorClassReference without BehaviorClass ref", node.line, node.column)
        return reference


def parse_star(source: str, source_name: str = "<string>") -> StarDocument:
    """
    Parse Star source text.

    Args:
        source: Star text, possibly with ``//`` comments
        source_name: Name used in diagnostics and error messages

    Returns:
        StarDocument with every definition in file order

    Raises:
        UnknownElement: unrecognized keyword or property
        UnboundSyntax: structure the parser cannot recover from
    """
    try:
        nodes, diagnostics = scan(source)
    except pp.ParseBaseException as e:
        raise UnboundSyntax(f"{source_name}: unexpected input", e.lineno, e.col) from e

    builder = StarBuilder(source_name)
    definitions = [builder.build(node) for node in nodes]
    document = StarDocument(source_name, definitions, diagnostics + builder.diagnostics)
    for diagnostic in document.diagnostics:
        logger.debug("%s:%s", source_name, diagnostic)
    return document
