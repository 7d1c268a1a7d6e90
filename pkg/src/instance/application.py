"""
Behavior class application.

Applying a rule writes its antecedent values onto the bound instances at the
context's latest timepoint, then opens the next timepoint with clones of every
component and writes the consequent values there.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.instance.model import (
    Context,
    InstanceModel,
    ObjectInstance,
    StructuralParentInstance,
    timepoint_ordinal,
)
from src.ontology.linker import Ontology
from src.ontology.model import (
    IDENTITY_ATTRIBUTE,
    AttributeBinding,
    BehaviorClassDef,
    BindingMode,
    PopulatedObjectClassDef,
)
from src.snf.model import SemanticRole
from src.utils.errors import IllegalValue, MissingTimepoint, RoleMismatch, UnknownInstance

logger = logging.getLogger(__name__)

POSITIONAL_ATTRIBUTES = {"RelativeLocation", "RelativeTime"}


@dataclass
class RoleBindings:
    actor: List[ObjectInstance] = field(default_factory=list)
    actee: List[ObjectInstance] = field(default_factory=list)
    extra: List[ObjectInstance] = field(default_factory=list)

    def for_role(self, role: SemanticRole) -> List[ObjectInstance]:
        return {SemanticRole.ACTOR: self.actor, SemanticRole.ACTEE: self.actee, SemanticRole.EXTRA: self.extra}[role]

    def items(self) -> List[Tuple[SemanticRole, List[ObjectInstance]]]:
        return [(SemanticRole.ACTOR, self.actor), (SemanticRole.ACTEE, self.actee), (SemanticRole.EXTRA, self.extra)]

    def is_empty(self) -> bool:
        return not (self.actor or self.actee or self.extra)


@dataclass
class AttributeWrite:
    timepoint: str
    unique_id: str
    attribute_type: str
    value: str


@dataclass
class AppliedRule:
    """What one application did; kept on the spanning information"""

    behavior: str
    context_id: str
    prior_label: str
    post_label: str
    roles: Dict[str, SemanticRole] = field(default_factory=dict)
    identity: Dict[str, List[str]] = field(default_factory=dict)
    writes: List[AttributeWrite] = field(default_factory=list)

    def role_of(self, unique_id: str) -> Optional[SemanticRole]:
        return self.roles.get(unique_id)


def write_attribute(instance: ObjectInstance, attribute_type: str, value: str, ontology: Ontology) -> None:
    """
    Store one attribute value after checking it against the instance's class.

    Raises:
        IllegalValue: the type is not declared for the class, or the value is not in its value set
    """
    declared = ontology.attribute_type(instance.reference_class, attribute_type)
    if declared is None:
        raise IllegalValue(f"{instance.reference_class} has no attribute type {attribute_type}")
    declaring_class, definition = declared
    if value not in definition.value_names:
        raise IllegalValue(f"'{value}' is not a value of {declaring_class}.{attribute_type}")
    instance.attributes[attribute_type] = value
    instance.declared_in[attribute_type] = declaring_class
    if attribute_type not in instance.written:
        instance.written.append(attribute_type)


class _Application:
    def __init__(self, context: Context, behavior: BehaviorClassDef, bindings: RoleBindings, ontology: Ontology):
        self.context = context
        self.behavior = behavior
        self.bindings = bindings
        self.ontology = ontology
        self.symbols: Dict[str, int] = {}

    def check_roles(self) -> None:
        for role, instances in self.bindings.items():
            if not instances:
                continue
            slot = self.behavior.slot(role, "prior") or self.behavior.slot(role, "post")
            for instance in instances:
                if slot is None or not self.ontology.is_a(instance.reference_class, slot.object_class_ref):
                    raise RoleMismatch(role.value, instance.reference_class)

    def run(self, at: Optional[str]) -> AppliedRule:
        self.check_roles()
        parent = self.context.latest()
        label = self.context.latest_label
        if at is not None and at != label:
            raise MissingTimepoint(f"rules apply at the latest timepoint {label}, not {at}")

        record = AppliedRule(self.behavior.name, self.context.unique_id, label, label)
        bound = RoleBindings()
        for role, instances in self.bindings.items():
            for instance in instances:
                placed = parent.add(instance)
                bound.for_role(role).append(placed)
                record.roles.setdefault(placed.unique_id, role)

        self.write_section("prior", bound, label, parent, record)

        successor = StructuralParentInstance(parent.parent_class, [c.clone() for c in parent.components])
        record.post_label = self.context.add_timepoint(successor)
        cloned = RoleBindings()
        for role, instances in bound.items():
            cloned.for_role(role).extend(successor.component(i.unique_id) for i in instances)
        self.write_section("post", cloned, record.post_label, successor, record)

        logger.debug("Applied %s: %s -> %s", self.behavior.name, record.prior_label, record.post_label)
        return record

    def write_section(
        self,
        section: str,
        bound: RoleBindings,
        label: str,
        parent: StructuralParentInstance,
        record: AppliedRule,
    ) -> None:
        for slot in self.behavior.populated(section):
            for instance in bound.for_role(slot.role):
                for binding in slot.attribute_bindings:
                    self.apply_binding(slot, binding, instance, section, label, parent, record)

    def apply_binding(
        self,
        slot: PopulatedObjectClassDef,
        binding: AttributeBinding,
        instance: ObjectInstance,
        section: str,
        label: str,
        parent: StructuralParentInstance,
        record: AppliedRule,
    ) -> None:
        name = binding.attribute_type_ref
        if binding.mode == BindingMode.VAL:
            definition = self.ontology.attribute_type(instance.reference_class, name)
            if definition is None:
                raise IllegalValue(f"{instance.reference_class} has no attribute type {name}")
            if definition[1].optional_causal_feature:
                return
            value = binding.value
            if section == "post" and self.behavior.negation and definition[1].is_state:
                value = definition[1].value_names[0]
            write_attribute(instance, name, value, self.ontology)
            record.writes.append(AttributeWrite(label, instance.unique_id, name, value))
        elif binding.mode == BindingMode.VAR:
            if name == IDENTITY_ATTRIBUTE:
                ids = record.identity.setdefault(binding.symbol, [])
                if instance.unique_id not in ids:
                    ids.append(instance.unique_id)
                instance.identity_symbol = binding.symbol
                return
            value = timepoint_ordinal(label) if name == "RelativeTime" else parent.components.index(instance) + 1
            self.symbols[binding.symbol] = value
            instance.positional[name] = value
        elif binding.symbol in self.symbols:
            instance.positional[name] = self.symbols[binding.symbol] + binding.offset


def apply_behavior_class(
    context: Context,
    behavior: BehaviorClassDef,
    bindings: RoleBindings,
    ontology: Ontology,
    at: Optional[str] = None,
) -> AppliedRule:
    """
    Apply a rule to bound instances at the context's latest timepoint.

    Antecedent values are written at ``at``; the consequent is written on clones
    at the following timepoint. With the rule's Negation flag set, consequent
    state attributes take the first ("Not...") value of their value set.
    Optional causal features are never written here: the resolver sets them.

    Raises:
        RoleMismatch: an instance cannot fill the slot it is bound to
        MissingTimepoint: ``at`` is not the latest timepoint
    """
    return _Application(context, behavior, bindings, ontology).run(at)


def set_attribute(
    model: InstanceModel,
    instance_id: str,
    attribute_type: str,
    value: str,
    ontology: Ontology,
    up_to: Optional[str] = None,
    context_id: Optional[str] = None,
) -> ObjectInstance:
    """
    Upsert an attribute on every copy of an instance up to a timepoint.

    Args:
        up_to: Last timepoint written (inclusive); None writes every copy
        context_id: Restrict the write to one context

    Raises:
        UnknownInstance: no copy of the instance exists
        IllegalValue: the value is not legal for the attribute type
    """
    limit = timepoint_ordinal(up_to) if up_to else None
    updated: Optional[ObjectInstance] = None
    for context, label, instance in model.occurrences(instance_id):
        if context_id is not None and context.unique_id != context_id:
            continue
        if limit is not None and timepoint_ordinal(label) > limit:
            continue
        write_attribute(instance, attribute_type, value, ontology)
        updated = instance
    if updated is None:
        raise UnknownInstance(f"no instance {instance_id} at or before {up_to or 'the latest timepoint'}")
    return updated
