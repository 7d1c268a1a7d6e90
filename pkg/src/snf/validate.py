"""
Structural checks on predicate expressions
"""

from typing import List

from src.snf.model import (
    AttributiveRole,
    PredicateExpression,
    PredicateSpecifierRole,
    SemanticRole,
)

TO_BE_FORMS = {"be", "is", "are", "was", "were", "been", "being", "am"}


def validate_pe(pe: PredicateExpression) -> List[str]:
    """
    Check the invariants of a PE and everything nested below it.

    Returns:
        Human-readable diagnostics; empty when the PE is well formed
    """
    diagnostics: List[str] = []
    _check_one(pe, diagnostics, path="pe")
    _check_pointer_order(pe, diagnostics)
    return diagnostics


def _check_one(pe: PredicateExpression, diagnostics: List[str], path: str) -> None:
    ordinals = {spec.ordinal for spec in pe.predicate_specifiers}

    for spec in pe.predicate_specifiers:
        if spec.role == PredicateSpecifierRole.VERB_TAKING_ENTITY_ARGUMENT and spec.main_verb_word.lower() in TO_BE_FORMS:
            diagnostics.append(f"{path}: auxiliary '{spec.main_verb_word}' stored as main verb of specifier {spec.ordinal}")

    for index, argument in enumerate(pe.entity_arguments):
        where = f"{path}.entity_arguments[{index}]"
        if not argument.entity_designators and argument.nested_pe is None:
            diagnostics.append(f"{where}: neither designators nor nested PE")
        if argument.extra_sub_role is not None and argument.semantic_role != SemanticRole.EXTRA:
            diagnostics.append(f"{where}: extra sub-role on a {argument.semantic_role.value} argument")
        if argument.predicate_ordinal not in ordinals:
            diagnostics.append(f"{where}: predicate ordinal {argument.predicate_ordinal} names no specifier")
        for designator in argument.entity_designators:
            phrase = designator.phrase
            if phrase is not None and not phrase.head_words:
                diagnostics.append(f"{where}: noun phrase without head word")
        if argument.nested_pe is not None:
            _check_one(argument.nested_pe, diagnostics, f"{where}.nested")

    for index, attributive in enumerate(pe.attributive_arguments):
        where = f"{path}.attributive_arguments[{index}]"
        if attributive.role == AttributiveRole.ATTRIBUTE and not attributive.attribute_designators:
            diagnostics.append(f"{where}: attribute role without designators")
        if attributive.predicate_ordinal not in ordinals:
            diagnostics.append(f"{where}: predicate ordinal {attributive.predicate_ordinal} names no specifier")

    for index, modifier in enumerate(pe.modification_specifiers):
        where = f"{path}.modification_specifiers[{index}]"
        if modifier.adverbial_phrase is None and modifier.adverbial_expression is None and modifier.nested_pe is None:
            diagnostics.append(f"{where}: no payload")
        if modifier.predicate_ordinal not in ordinals:
            diagnostics.append(f"{where}: predicate ordinal {modifier.predicate_ordinal} names no specifier")
        if modifier.nested is not None:
            _check_one(modifier.nested, diagnostics, f"{where}.nested")


def _check_pointer_order(root: PredicateExpression, diagnostics: List[str]) -> None:
    if not root.pe_pointer_order:
        return
    listed = [id(pe) for pe in root.pe_pointer_order]
    if listed.count(id(root)) != 1:
        diagnostics.append("pe: pointer order must contain the root exactly once")
    reachable = [id(pe) for pe in root.walk()]
    for pe_id in reachable:
        if listed.count(pe_id) != 1:
            diagnostics.append("pe: a nested PE is missing from the pointer order or listed twice")
            break
    if len(listed) != len(set(listed)) or set(listed) - set(reachable):
        diagnostics.append("pe: pointer order lists PEs that are not reachable from the root")
