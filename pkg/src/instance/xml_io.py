"""
XML form of the instance model.

The layout is line oriented: leaf text (mood and tense, attribute lines, the
component label) sits on its own line, indented two spaces per level.
"""

import re
from typing import Optional

from lxml import etree

from src.instance.model import Context, InstanceModel, ObjectInstance, StructuralParentInstance
from src.ontology.linker import Ontology
from src.snf.model import DiscourseContext
from src.utils.errors import IllegalValue, ModelError

XML_HEADER = '<?xml version="1.0" encoding="US-ASCII" standalone="yes"?>'
INDENT = "  "
TEXT_SOURCES = ("SubmittedFromWebClient", "DocumentFile", "CommandLine")
TEXT_LINE_TAGS = {"MoodAndTense", "Attribute"}

COMPONENT_PATTERN = re.compile(r"^(?P<cls>[^.\s]+)\.(?P<id>\S+) \((?P<word>.*)\)$")
ATTRIBUTE_PATTERN = re.compile(r"^(?P<decl>[^.\s]+)\.(?P<type>\S+) = (?P<value>\S+)$")


def _layout(element: etree._Element, depth: int, label: Optional[str] = None) -> None:
    inner = "\n" + INDENT * (depth + 1)
    closing = "\n" + INDENT * depth
    children = list(element)
    if element.tag in TEXT_LINE_TAGS:
        element.text = inner + (element.text or "").strip() + closing
        return
    if label is not None:
        element.text = inner + label + (inner if children else closing)
    elif children:
        element.text = inner
    for position, child in enumerate(children):
        _layout(child, depth + 1, child.attrib.pop("_label", None))
        child.tail = inner if position < len(children) - 1 else closing


def _component(parent: etree._Element, instance: ObjectInstance) -> None:
    component = etree.SubElement(parent, "Component", _label=instance.label)
    written = instance.written_attributes()
    if not written:
        return
    attributes = etree.SubElement(component, "Attributes")
    for name, value in written:
        line = etree.SubElement(attributes, "Attribute")
        line.text = f"{instance.declared_in.get(name, instance.reference_class)}.{name} = {value}"


def _context(parent: etree._Element, context: Context) -> None:
    local = etree.SubElement(parent, "LocalContext", contextId=context.unique_id)
    if context.discourse_context is not None:
        etree.SubElement(local, "MoodAndTense").text = context.discourse_context.mood_and_tense
    structural = etree.SubElement(local, "StructuralParent", name=context.leading_class_name)
    etree.SubElement(structural, "Timeline", name=context.timeline_name)
    for label, holder in context.timepoints.items():
        timepoint = etree.SubElement(local, "TimelineTimePoint", value=label)
        structure = etree.SubElement(timepoint, "InstanceStructure")
        for instance in holder.components:
            _component(structure, instance)


def export_xml(model: InstanceModel) -> str:
    """
    Serialize the model.

    Only attributes written at a timepoint appear under that timepoint, each
    prefixed with the class declaring its type.
    """
    root = etree.Element("InstanceModel")
    header = etree.SubElement(root, "TranscriptHeader")
    source = etree.SubElement(header, "TextSource", value=model.text_source)
    source.text = ""
    if model.document_file:
        etree.SubElement(header, "DocumentFile", name=model.document_file).text = ""
    conceptual = etree.SubElement(root, "ConceptualModel")
    for context in model.contexts:
        _context(conceptual, context)
    _layout(root, 0)
    body = etree.tostring(root, encoding="US-ASCII", xml_declaration=False).decode("ascii")
    return f"{XML_HEADER}\n{body}\n"


def _text(element: etree._Element) -> str:
    return (element.text or "").strip()


def _read_component(element: etree._Element, ontology: Optional[Ontology]) -> ObjectInstance:
    match = COMPONENT_PATTERN.match(_text(element))
    if not match:
        raise ModelError(f"malformed component label '{_text(element)}'")
    instance = ObjectInstance(match.group("cls"), match.group("word"), match.group("id"))
    for line in element.iterfind("Attributes/Attribute"):
        parsed = ATTRIBUTE_PATTERN.match(_text(line))
        if not parsed:
            raise ModelError(f"malformed attribute line '{_text(line)}'")
        name, value = parsed.group("type"), parsed.group("value")
        if ontology is not None:
            declared = ontology.attribute_type(instance.reference_class, name)
            if declared is None or value not in declared[1].value_names:
                raise IllegalValue(f"'{value}' is not a value of {instance.reference_class}.{name}")
        instance.attributes[name] = value
        instance.declared_in[name] = parsed.group("decl")
        instance.written.append(name)
    return instance


def _seed_counter(model: InstanceModel, instance: ObjectInstance) -> None:
    prefix, _, number = instance.unique_id.rpartition("-")
    if prefix == instance.reference_class and number.isdigit():
        model.counters[prefix] = max(model.counters.get(prefix, 0), int(number))


def read_xml(text: str, ontology: Optional[Ontology] = None) -> InstanceModel:
    """
    Rebuild a model from its export.

    Attributes that were not written at a timepoint are not in the export, so
    each copy carries only its written attributes.

    Raises:
        ModelError: the document does not follow the export layout
        IllegalValue: with an ontology, an attribute value is not legal
    """
    try:
        root = etree.fromstring(text.encode("ascii", errors="xmlcharrefreplace"))
    except etree.XMLSyntaxError as e:
        raise ModelError(f"instance model XML is not well formed: {e}") from e
    if root.tag != "InstanceModel":
        raise ModelError(f"expected <InstanceModel>, found <{root.tag}>")

    model = InstanceModel(contexts=[])
    source = root.find("TranscriptHeader/TextSource")
    if source is not None:
        model.text_source = source.get("value", model.text_source)
    document = root.find("TranscriptHeader/DocumentFile")
    if document is not None:
        model.document_file = document.get("name")

    for local in root.iterfind("ConceptualModel/LocalContext"):
        mood = local.find("MoodAndTense")
        discourse = DiscourseContext(_text(mood).replace("-", "")) if mood is not None else None
        structural = local.find("StructuralParent")
        parent_class = structural.get("name") if structural is not None else "EverydayObjectStructuralParentClass"
        timeline = structural.find("Timeline") if structural is not None else None
        dimension = None
        if timeline is not None and timeline.get("name", "").startswith(parent_class + "."):
            dimension = timeline.get("name")[len(parent_class) + 1:]
        context = Context(local.get("contextId", str(len(model.contexts) + 1)), discourse, parent_class, dimension)
        for timepoint in local.iterfind("TimelineTimePoint"):
            holder = StructuralParentInstance(parent_class)
            for element in timepoint.iterfind("InstanceStructure/Component"):
                instance = _read_component(element, ontology)
                holder.components.append(instance)
                _seed_counter(model, instance)
            context.timepoints[timepoint.get("value")] = holder
        model.contexts.append(context)
    return model
