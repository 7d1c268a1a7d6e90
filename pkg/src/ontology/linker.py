"""
Linking parsed Star documents into a queryable ontology.

Partial object frame class definitions merge by name, every reference is
checked, the inheritance graph is verified acyclic and the noun and verb
indexes are built. The resulting Ontology is read-only.
"""

import copy
import logging
from collections import deque
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.ontology.model import (
    BehaviorClassDef,
    BehaviorClassReferenceDef,
    BindingMode,
    AttributeTypeDef,
    ObjectFrameClassDef,
    PopulatedObjectClassDef,
    StarDocument,
    noun_forms,
)
from src.snf.model import SemanticRole
from src.utils.errors import (
    CycleDetected,
    DuplicateAttributeType,
    IllegalAttributeValue,
    NotFound,
    OntologyError,
    UnboundSymbol,
    UnresolvedRef,
)

logger = logging.getLogger(__name__)


class RuleDirection(str, Enum):
    UNSPECIFIED = "Unspecified"
    FORWARD = "Forward"


def _union(target: List[str], extra: Iterable[str]) -> None:
    for item in extra:
        if item not in target:
            target.append(item)


def _merge_into(merged: ObjectFrameClassDef, partial: ObjectFrameClassDef) -> None:
    for attribute_type in partial.attribute_types:
        existing = merged.attribute_type(attribute_type.name)
        if existing is None:
            merged.attribute_types.append(copy.deepcopy(attribute_type))
            continue
        if existing.value_names != attribute_type.value_names:
            raise DuplicateAttributeType(merged.name, attribute_type.name)
        for value in attribute_type.values:
            _union(existing.value(value.name).dictionary, value.dictionary)
    _union(merged.dictionary, partial.dictionary)
    _union(merged.higher_classes, partial.higher_classes)
    _union(merged.structural_parent_bases, partial.structural_parent_bases)
    if merged.dictionary_prior_word is None:
        merged.dictionary_prior_word = copy.deepcopy(partial.dictionary_prior_word)
    elif partial.dictionary_prior_word is not None:
        _union(merged.dictionary_prior_word.words, partial.dictionary_prior_word.words)
    for name in ("structure_trait", "gender", "dimension_systems", "structure"):
        if getattr(merged, name) is None:
            setattr(merged, name, getattr(partial, name))


class Ontology:
    """Merged classes, inheritance closure and word indexes"""

    def __init__(self, classes: Dict[str, ObjectFrameClassDef], behaviors: Dict[str, BehaviorClassDef]):
        self.classes = classes
        self.behaviors = behaviors
        self._ancestors: Dict[str, List[str]] = {}
        self._noun_index: Dict[str, List[str]] = {}
        self._pair_index: Dict[Tuple[str, str], List[str]] = {}
        self._verb_index: Dict[str, List[str]] = {}

    # --- structure ------------------------------------------------------------

    def object_class(self, name: str) -> ObjectFrameClassDef:
        try:
            return self.classes[name]
        except KeyError as e:
            raise NotFound(f"object frame class {name} is not defined") from e

    def behavior(self, name: str) -> BehaviorClassDef:
        try:
            return self.behaviors[name]
        except KeyError as e:
            raise NotFound(f"behavior class {name} is not defined") from e

    def ancestors(self, name: str) -> List[str]:
        """Proper ancestors in breadth-first order"""
        return list(self._ancestors.get(name, []))

    def is_a(self, name: str, other: str) -> bool:
        return name == other or other in self._ancestors.get(name, [])

    def related(self, first: str, second: str) -> bool:
        """Equal or one is an ancestor of the other"""
        return self.is_a(first, second) or self.is_a(second, first)

    def effective_attribute_types(self, name: str) -> Dict[str, Tuple[str, AttributeTypeDef]]:
        """Attribute type name -> (declaring class, definition), nearest declaration first"""
        found: Dict[str, Tuple[str, AttributeTypeDef]] = {}
        for class_name in [name] + self.ancestors(name):
            for attribute_type in self.classes[class_name].attribute_types:
                found.setdefault(attribute_type.name, (class_name, attribute_type))
        return found

    def attribute_type(self, class_name: str, type_name: str) -> Optional[Tuple[str, AttributeTypeDef]]:
        return self.effective_attribute_types(class_name).get(type_name)

    def gender_of(self, name: str) -> Optional[str]:
        for class_name in [name] + self.ancestors(name):
            gender = self.classes[class_name].gender
            if gender:
                return gender
        return None

    def is_plural_form(self, name: str, word: str) -> bool:
        """True when the word sits in a plural slot, and in no singular slot, of the class's noun dictionaries"""
        definition = self.classes[name]
        word_lists = [definition.dictionary]
        if definition.dictionary_prior_word is not None and definition.dictionary_prior_word.is_noun:
            word_lists.append(definition.dictionary_prior_word.words)
        word = word.lower()
        forms = [entry for words in word_lists for entry in noun_forms([w.lower() for w in words])]
        if any(entry.singular == word for entry in forms):
            return False
        return any(entry.plural == word for entry in forms)

    # --- queries --------------------------------------------------------------

    def lookup_noun(self, word: str, prior: Optional[str] = None) -> List[ObjectFrameClassDef]:
        """
        Classes whose dictionary holds the word.

        When the preceding token matches a class's prior-word dictionary, that
        two-word match is more specific and is returned alone.
        """
        word = word.lower()
        if prior:
            paired = self._pair_index.get((prior.lower(), word))
            if paired:
                return [self.classes[name] for name in paired]
        return [self.classes[name] for name in self._noun_index.get(word, [])]

    def verb_behaviors(self, verb: str) -> List[BehaviorClassDef]:
        return [self.behaviors[name] for name in self._verb_index.get(verb.lower(), [])]

    def search_behavior_classes(
        self,
        verb: str,
        negation: bool = False,
        actor_classes: Sequence[str] = (),
        actee_classes: Sequence[str] = (),
        extra_classes: Sequence[str] = (),
        direction: RuleDirection = RuleDirection.UNSPECIFIED,
        require: bool = False,
    ) -> List[BehaviorClassDef]:
        """
        Behavior classes for a verb whose prior-state role classes accept the given classes.

        Args:
            verb: Any of the five verb forms
            negation: Must equal the rule's Negation flag
            actor_classes: Instance classes that will fill the actor slot (empty = unconstrained)
            actee_classes: Same for the actee slot
            extra_classes: Same for the extra slot
            direction: FORWARD keeps only rules with consequent object classes
            require: Raise NotFound instead of returning an empty list

        Returns:
            Matching behavior classes in ontology file order
        """
        constraints = [
            (SemanticRole.ACTOR, actor_classes),
            (SemanticRole.ACTEE, actee_classes),
            (SemanticRole.EXTRA, extra_classes),
        ]
        found = []
        for behavior in self.verb_behaviors(verb):
            if behavior.negation != negation:
                continue
            if direction == RuleDirection.FORWARD and not behavior.is_forward:
                continue
            if all(self._slot_accepts(behavior, role, classes) for role, classes in constraints):
                found.append(behavior)
        if require and not found:
            raise NotFound(f"no behavior class for verb '{verb}'")
        return found

    def _slot_accepts(self, behavior: BehaviorClassDef, role: SemanticRole, classes: Sequence[str]) -> bool:
        if not classes:
            return True
        slot = behavior.slot(role, "prior")
        if slot is None:
            return False
        return all(self.is_a(name, slot.object_class_ref) for name in classes)

    def nested_reference(self, behavior: BehaviorClassDef) -> Optional[BehaviorClassReferenceDef]:
        return nested_reference(behavior)


def _first_reference(section: Iterable[object]) -> Optional[BehaviorClassReferenceDef]:
    for item in section:
        if isinstance(item, BehaviorClassReferenceDef):
            return item
    return None


def nested_reference(behavior: BehaviorClassDef) -> Optional[BehaviorClassReferenceDef]:
    """First nested behavior reference in the antecedent"""
    return _first_reference(behavior.prior_states)


def consequent_reference(behavior: BehaviorClassDef) -> Optional[BehaviorClassReferenceDef]:
    """First nested behavior reference in the consequent, the one a forward rule triggers"""
    return _first_reference(behavior.post_states)


class _Linker:
    def __init__(self, docs: Sequence[StarDocument]):
        self.docs = docs
        self.classes: Dict[str, ObjectFrameClassDef] = {}
        self.behaviors: Dict[str, BehaviorClassDef] = {}

    def run(self) -> Ontology:
        self.merge()
        self.check_class_refs()
        ontology = Ontology(self.classes, self.behaviors)
        self.check_cycles()
        ontology._ancestors = {name: self.closure(name) for name in self.classes}
        for behavior in self.behaviors.values():
            self.check_behavior(ontology, behavior)
        self.build_indexes(ontology)
        logger.info("Linked ontology: %d object frame classes, %d behavior classes", len(self.classes), len(self.behaviors))
        return ontology

    def merge(self) -> None:
        for doc in self.docs:
            for definition in doc.class_defs:
                if isinstance(definition, ObjectFrameClassDef):
                    if definition.name in self.behaviors:
                        raise OntologyError(f"{definition.name} is defined both as object frame class and behavior class")
                    merged = self.classes.get(definition.name)
                    if merged is None:
                        self.classes[definition.name] = copy.deepcopy(definition)
                    else:
                        _merge_into(merged, definition)
                else:
                    if definition.name in self.behaviors or definition.name in self.classes:
                        raise OntologyError(f"duplicate definition of behavior class {definition.name} in {doc.source_name}")
                    self.behaviors[definition.name] = definition

    def check_class_refs(self) -> None:
        for definition in self.classes.values():
            for name in definition.higher_classes + definition.structural_parent_bases:
                if name not in self.classes:
                    raise UnresolvedRef(name, definition.name)

    def check_cycles(self) -> None:
        state: Dict[str, int] = {}  # 1 = on the current path, 2 = done

        def visit(name: str, path: List[str]) -> None:
            state[name] = 1
            for parent in self.classes[name].higher_classes:
                if state.get(parent) == 1:
                    raise CycleDetected(path[path.index(parent):] + [parent])
                if parent not in state:
                    visit(parent, path + [parent])
            state[name] = 2

        for name in self.classes:
            if name not in state:
                visit(name, [name])

    def closure(self, name: str) -> List[str]:
        seen: List[str] = []
        queue = deque(self.classes[name].higher_classes)
        while queue:
            current = queue.popleft()
            if current in seen:
                continue
            seen.append(current)
            queue.extend(self.classes[current].higher_classes)
        return seen

    def check_behavior(self, ontology: Ontology, behavior: BehaviorClassDef) -> None:
        if behavior.bridge_class and behavior.bridge_class not in self.classes:
            raise UnresolvedRef(behavior.bridge_class, behavior.name)

        # attribute exprs need an earlier var; identity parameters a var anywhere in the rule
        bound: Set[str] = set()
        identities: List[str] = []
        for item in behavior.prior_states + behavior.post_states:
            if isinstance(item, PopulatedObjectClassDef):
                self.check_slot(ontology, behavior, item)
                for binding in item.attribute_bindings:
                    if binding.mode == BindingMode.VAR and binding.symbol:
                        bound.add(binding.symbol)
                    elif binding.mode == BindingMode.EXPR and binding.symbol and binding.symbol not in bound:
                        raise UnboundSymbol(f"symbol {binding.symbol} in {behavior.name} is used before a var binds it")
            else:
                if item.behavior_ref not in self.behaviors:
                    raise UnresolvedRef(item.behavior_ref, behavior.name)
                for _, parameter in item.parameters():
                    if parameter.class_ref not in self.classes:
                        raise UnresolvedRef(parameter.class_ref, f"{behavior.name} -> {item.behavior_ref}")
                    if parameter.identity_symbol:
                        identities.append(parameter.identity_symbol)
        for symbol in identities:
            if symbol not in bound:
                raise UnboundSymbol(f"symbol {symbol} in {behavior.name} is never bound by a var")

    def check_slot(self, ontology: Ontology, behavior: BehaviorClassDef, slot: PopulatedObjectClassDef) -> None:
        referrer = f"{behavior.name}.{slot.role_label}"
        if slot.object_class_ref not in self.classes:
            raise UnresolvedRef(slot.object_class_ref, referrer)
        effective = ontology.effective_attribute_types(slot.object_class_ref)
        for binding in slot.attribute_bindings:
            declared = effective.get(binding.attribute_type_ref)
            if declared is None:
                raise UnresolvedRef(binding.attribute_type_ref, referrer)
            if binding.mode == BindingMode.VAL and binding.value not in declared[1].value_names:
                raise IllegalAttributeValue(
                    f"{referrer}: '{binding.value}' is not a value of {declared[0]}.{binding.attribute_type_ref}"
                )

    def build_indexes(self, ontology: Ontology) -> None:
        for name, definition in self.classes.items():
            prior = definition.dictionary_prior_word
            if prior is not None and prior.is_noun:
                for word in prior.words:
                    _union(ontology._noun_index.setdefault(word.lower(), []), [name])
            for word in definition.dictionary:
                _union(ontology._noun_index.setdefault(word.lower(), []), [name])
                if definition.dictionary_prior_word is not None:
                    for prior in definition.dictionary_prior_word.words:
                        _union(ontology._pair_index.setdefault((prior.lower(), word.lower()), []), [name])
        for name, behavior in self.behaviors.items():
            for form in behavior.verb_dictionary:
                _union(ontology._verb_index.setdefault(form.lower(), []), [name])


def link_ontology(docs: Sequence[StarDocument]) -> Ontology:
    """
    Merge and check parsed documents.

    Raises:
        UnresolvedRef, CycleDetected, DuplicateAttributeType,
        IllegalAttributeValue, UnboundSymbol, OntologyError
    """
    return _Linker(docs).run()


def lookup_noun(ontology: Ontology, word: str, prior: Optional[str] = None) -> List[ObjectFrameClassDef]:
    return ontology.lookup_noun(word, prior)


def search_behavior_classes(ontology: Ontology, verb: str, negation: bool = False, **kwargs) -> List[BehaviorClassDef]:
    return ontology.search_behavior_classes(verb, negation, **kwargs)
