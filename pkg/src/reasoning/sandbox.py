"""
Sandbox contexts for generate-and-test.

A sandbox owns a private instance model with one context. Instances enter it
only as clones, so nothing done inside a sandbox reaches the master model.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from src.instance.application import AppliedRule, RoleBindings, apply_behavior_class
from src.instance.model import Context, InstanceModel, ObjectInstance, StructuralParentInstance
from src.ontology.linker import Ontology
from src.ontology.model import BehaviorClassDef

CLASS_SUFFIX = "ObjectFrameClass"
WORD_PATTERN = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z0-9]*|[a-z0-9]+")


class Side(str, Enum):
    WEST = "WEST"
    EAST = "EAST"


def placeholder_word(class_name: str) -> str:
    """
    Content string for an instance the reasoner makes up.

    >>> placeholder_word("CognitiveRepresentationOfHarmfulEvent")
    'cognitive representation of harmful event'
    """
    stem = class_name[: -len(CLASS_SUFFIX)] if class_name.endswith(CLASS_SUFFIX) and class_name != CLASS_SUFFIX else class_name
    return " ".join(word.lower() for word in WORD_PATTERN.findall(stem)) or class_name


@dataclass
class SandboxContext:
    side: Side
    model: InstanceModel
    context: Context
    identity: Dict[str, List[str]] = field(default_factory=dict)

    @classmethod
    def create(
        cls,
        side: Side,
        master: Optional[InstanceModel] = None,
        parent_class: str = "EverydayObjectStructuralParentClass",
        dimension_system: Optional[str] = None,
    ) -> "SandboxContext":
        """Empty sandbox whose fresh ids continue the master model's counters"""
        model = InstanceModel(counters=dict(master.counters) if master is not None else {})
        context = model.new_context(parent_class=parent_class, dimension_system=dimension_system)
        return cls(side, model, context)

    def latest(self) -> StructuralParentInstance:
        return self.context.latest()

    def place(self, instance: ObjectInstance) -> ObjectInstance:
        """Clone an outside instance into the newest timepoint"""
        return self.latest().add(instance.clone())

    def fresh(self, class_name: str, word: Optional[str] = None, multiple: bool = False) -> ObjectInstance:
        return self.model.instantiate(class_name, word or placeholder_word(class_name), multiple)

    def apply(self, behavior: BehaviorClassDef, bindings: RoleBindings, ontology: Ontology) -> AppliedRule:
        record = apply_behavior_class(self.context, behavior, bindings, ontology)
        for symbol, ids in record.identity.items():
            known = self.identity.setdefault(symbol, [])
            known.extend(i for i in ids if i not in known)
        return record

    def dump(self) -> str:
        """Structural-parent tables, one line per written attribute"""
        lines = []
        for label, parent in self.context.timepoints.items():
            for instance in parent.components:
                prefix = f"{self.side.value} {label} | {instance.unique_id} ({instance.content_string})"
                written = instance.written_attributes()
                if not written:
                    lines.append(prefix)
                for name, value in written:
                    lines.append(f'{prefix} | Attr:{name} = "{value}"')
        return "\n".join(lines)


@dataclass
class MatchReport:
    matched: bool = False
    main_behavior: Optional[str] = None
    nested_behavior: Optional[str] = None
    west_instance: Optional[str] = None
    east_instance: Optional[str] = None
    probability: float = 1.0


def match_states(
    west_parent: StructuralParentInstance,
    east_parent: StructuralParentInstance,
    ontology: Ontology,
    east_ids: Optional[List[str]] = None,
) -> MatchReport:
    """
    Do the generated earlier states meet the derived later ones?

    An East instance matches a West instance when their classes are related,
    every attribute newly written on the East instance holds the same value on
    the West one, and, when the West instance is a collection with known
    members, the East instance is one of them.

    Args:
        east_ids: Only these East instances are tried (all when None)
    """
    for east in east_parent.components:
        if east_ids is not None and east.unique_id not in east_ids:
            continue
        written = east.written_attributes()
        if not written:
            continue
        for west in west_parent.components:
            if not ontology.related(west.reference_class, east.reference_class):
                continue
            if any(west.attributes.get(name) != value for name, value in written):
                continue
            if west.multiple and west.member_ids and east.unique_id not in west.member_ids:
                continue
            return MatchReport(matched=True, west_instance=west.unique_id, east_instance=east.unique_id)
    return MatchReport(matched=False)
