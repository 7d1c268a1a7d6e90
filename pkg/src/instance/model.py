"""
Instance model: contexts holding one structural parent per timepoint, each
holding attributed object instances.

An instance keeps its unique id across timepoints; every timepoint holds its
own copy so earlier states are never disturbed by later writes.
"""

import copy
import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from src.snf.model import DiscourseContext
from src.utils.errors import MissingTimepoint, UnknownInstance

TIMEPOINT_PATTERN = re.compile(r"^T(\d{2})$")
MAX_TIMEPOINT = 99


def timepoint_label(ordinal: int) -> str:
    if not 1 <= ordinal <= MAX_TIMEPOINT:
        raise MissingTimepoint(f"timepoint ordinal {ordinal} is outside T01..T{MAX_TIMEPOINT}")
    return f"T{ordinal:02d}"


def timepoint_ordinal(label: str) -> int:
    match = TIMEPOINT_PATTERN.match(label)
    if not match:
        raise MissingTimepoint(f"'{label}' is not a timepoint label")
    return int(match.group(1))


@dataclass
class ObjectInstance:
    reference_class: str
    content_string: str
    unique_id: str
    multiple: bool = False
    attributes: Dict[str, str] = field(default_factory=dict)
    declared_in: Dict[str, str] = field(default_factory=dict)
    written: List[str] = field(default_factory=list)
    identity_symbol: Optional[str] = None
    member_ids: List[str] = field(default_factory=list)
    positional: Dict[str, int] = field(default_factory=dict)
    relationship_to_parent: Optional[str] = None
    behavior_list: List[str] = field(default_factory=list)

    def clone(self) -> "ObjectInstance":
        """Copy for the next timepoint: same identity and state, nothing written yet"""
        twin = copy.deepcopy(self)
        twin.written = []
        return twin

    def written_attributes(self) -> List[Tuple[str, str]]:
        return [(name, self.attributes[name]) for name in self.written]

    @property
    def label(self) -> str:
        return f"{self.reference_class}.{self.unique_id} ({self.content_string})"


@dataclass
class StructuralParentInstance:
    parent_class: str
    components: List[ObjectInstance] = field(default_factory=list)

    def component(self, unique_id: str) -> Optional[ObjectInstance]:
        for instance in self.components:
            if instance.unique_id == unique_id:
                return instance
        return None

    def add(self, instance: ObjectInstance) -> ObjectInstance:
        existing = self.component(instance.unique_id)
        if existing is not None:
            return existing
        self.components.append(instance)
        return instance


@dataclass
class Context:
    unique_id: str
    discourse_context: Optional[DiscourseContext] = None
    leading_class_name: str = "EverydayObjectStructuralParentClass"
    dimension_system: Optional[str] = None
    timepoints: Dict[str, StructuralParentInstance] = field(default_factory=dict)

    @property
    def timeline_name(self) -> str:
        if self.dimension_system:
            return f"{self.leading_class_name}.{self.dimension_system}"
        return self.leading_class_name

    @property
    def latest_label(self) -> Optional[str]:
        return next(reversed(self.timepoints), None) if self.timepoints else None

    def latest(self) -> StructuralParentInstance:
        """Structural parent of the newest timepoint, creating T01 on first use"""
        if not self.timepoints:
            self.timepoints[timepoint_label(1)] = StructuralParentInstance(self.leading_class_name)
        return self.timepoints[self.latest_label]

    def at(self, label: str) -> StructuralParentInstance:
        try:
            return self.timepoints[label]
        except KeyError as e:
            raise MissingTimepoint(f"context {self.unique_id} has no timepoint {label}") from e

    def add_timepoint(self, parent: StructuralParentInstance) -> str:
        """Append a structural parent as the next timepoint and return its label"""
        latest = self.latest_label
        label = timepoint_label(timepoint_ordinal(latest) + 1 if latest else 1)
        self.timepoints[label] = parent
        return label

    def instances(self, unique_id: str) -> List[Tuple[str, ObjectInstance]]:
        found = []
        for label, parent in self.timepoints.items():
            instance = parent.component(unique_id)
            if instance is not None:
                found.append((label, instance))
        return found


@dataclass
class InstanceModel:
    contexts: List[Context] = field(default_factory=list)
    counters: Dict[str, int] = field(default_factory=dict)
    text_source: str = "SubmittedFromWebClient"
    document_file: Optional[str] = None

    def new_context(
        self,
        discourse_context: Optional[DiscourseContext] = None,
        parent_class: str = "EverydayObjectStructuralParentClass",
        dimension_system: Optional[str] = None,
    ) -> Context:
        context = Context(str(len(self.contexts) + 1), discourse_context, parent_class, dimension_system)
        self.contexts.append(context)
        return context

    def context(self, unique_id: str) -> Context:
        for context in self.contexts:
            if context.unique_id == unique_id:
                return context
        raise UnknownInstance(f"no context {unique_id}")

    def next_id(self, class_name: str) -> str:
        self.counters[class_name] = self.counters.get(class_name, 0) + 1
        return f"{class_name}-{self.counters[class_name]}"

    def instantiate(self, class_name: str, word: str, multiple: bool = False) -> ObjectInstance:
        return ObjectInstance(class_name, word, self.next_id(class_name), multiple=multiple)

    def occurrences(self, unique_id: str) -> Iterator[Tuple[Context, str, ObjectInstance]]:
        for context in self.contexts:
            for label, instance in context.instances(unique_id):
                yield context, label, instance

    def latest_instance(self, unique_id: str) -> ObjectInstance:
        found = list(self.occurrences(unique_id))
        if not found:
            raise UnknownInstance(f"no instance {unique_id} in the model")
        return found[-1][2]

    def is_empty(self) -> bool:
        return not any(context.timepoints for context in self.contexts)

    def dump(self) -> str:
        """Canonical text form: every context, timepoint and full instance state"""
        lines = [f"source {self.text_source}"]
        for context in self.contexts:
            tense = context.discourse_context.mood_and_tense if context.discourse_context else "-"
            lines.append(f"context {context.unique_id} {tense} {context.timeline_name}")
            for label, parent in context.timepoints.items():
                lines.append(f"  {label}")
                for instance in parent.components:
                    state = ", ".join(f"{name}={value}" for name, value in instance.attributes.items())
                    extras = " multiple" if instance.multiple else ""
                    if instance.member_ids:
                        extras += " members=" + "|".join(instance.member_ids)
                    lines.append(f"    {instance.label}{extras} {{{state}}}")
        return "\n".join(lines)


def instantiate_object(model: InstanceModel, class_name: str, word: str, multiple: bool = False) -> ObjectInstance:
    """Fresh instance of a class with an id unique within the model and no attributes"""
    return model.instantiate(class_name, word, multiple)
