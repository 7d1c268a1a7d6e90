"""
Semantic engine driver.

Processes a document one communication unit at a time. Every indicative
predicate expression, in flattened order, goes through the same sub-tasks:
non-pronoun arguments are classified and instantiated, a behavior class is
selected for the verb and applied to the instance model, pronoun arguments
are resolved against the spanning stack (retrying once with the following
expression for cataphora), and the clause is pushed as spanning information
for later pronouns.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import List, Optional, Set, Tuple

from nltk import Tree

from src.engine.features import build_pronoun_feature_set
from src.engine.spanning import (
    ObjectInstanceSemanticWrapper,
    SpanningInformation,
    SpanningInfoStack,
    push_spanning_info,
)
from src.frontend.adapter import tree_to_sentence
from src.frontend.bracketed import read_bracketed_tree
from src.frontend.grammar import parse_sentence
from src.frontend.lexicon import Lexicon, get_lexicon
from src.frontend.segmenter import segment_communication_units
from src.frontend.tokenizer import TokenNode, render_tokens, tokenize
from src.frontend.tree import SyntaxTree
from src.instance.application import AppliedRule, RoleBindings, apply_behavior_class, write_attribute
from src.instance.model import Context, InstanceModel, ObjectInstance
from src.instance.xml_io import export_xml
from src.ontology.linker import Ontology
from src.ontology.model import BehaviorClassDef
from src.resolution.resolver import PronounResolver
from src.resolution.result import ResolutionResult
from src.snf.model import (
    AttributiveRole,
    CommunicationUnit,
    CommunicationUnitKind,
    DiscourseContext,
    EntityArgumentSpecifier,
    ExtraSubRole,
    GrammaticalMood,
    HeadWordKind,
    NounPhrase,
    PredicateExpression,
    PredicateSpecifierRole,
    SemanticRole,
    SyntacticRole,
    flatten_pe_order,
)
from src.utils.config import EngineSettings
from src.utils.errors import ModelError, NotFound, NotFoundRequiredItem, ResolutionFailed

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"\s*(\w+)")


@dataclass
class ClauseRecord:
    """What a behavior clause said, kept for question answering"""

    verb: str
    base: str
    actor_ids: List[str] = field(default_factory=list)
    actor_phrase: str = ""
    verb_phrase: str = ""
    negated: bool = False


@dataclass
class EngineOutput:
    tokens: List[TokenNode]
    model: InstanceModel
    results: List[ResolutionResult] = field(default_factory=list)
    units: List[CommunicationUnit] = field(default_factory=list)
    clauses: List[ClauseRecord] = field(default_factory=list)
    trace: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    stack: Optional[SpanningInfoStack] = field(default=None, repr=False)

    def annotated_text(self) -> str:
        return render_tokens(self.tokens)

    def export_xml(self) -> str:
        return export_xml(self.model)


def _designator_text(argument: EntityArgumentSpecifier) -> str:
    parts = []
    for designator in argument.entity_designators:
        if designator.prepositional_complement is not None:
            parts.append(designator.prepositional_complement.text())
        elif designator.noun_phrase is not None:
            parts.append(designator.noun_phrase.text())
    return " and ".join(parts)


class _EngineRun:
    """State owned by one pass over one document"""

    def __init__(
        self,
        tokens: List[TokenNode],
        ontology: Ontology,
        settings: EngineSettings,
        lexicon: Lexicon,
        text_source: Optional[str] = None,
        document_file: Optional[str] = None,
    ):
        self.tokens = tokens
        self.ontology = ontology
        self.settings = settings
        self.lexicon = lexicon
        self.model = InstanceModel(text_source=text_source or settings.text_source, document_file=document_file)
        self.stack = SpanningInfoStack(settings.stack_low_water, settings.stack_high_water)
        self.output = EngineOutput(tokens, self.model, stack=self.stack)
        self.resolver = PronounResolver(ontology, settings.person_class, trace=self.trace)
        self.context: Optional[Context] = None
        self.discourse: Optional[DiscourseContext] = None
        self.done: Set[int] = set()

    def trace(self, line: str) -> None:
        self.output.trace.append(line)
        logger.debug(line)

    # --- units ------------------------------------------------------------------

    def run(self, units: List[CommunicationUnit]) -> EngineOutput:
        for unit in units:
            self.output.units.append(unit)
            if unit.kind != CommunicationUnitKind.SENTENCE:
                self.trace(f"[trace] skip {unit.kind.value} unit '{unit.text}'")
                continue
            if unit.sentence is None:
                unit.sentence = tree_to_sentence(parse_sentence(unit, self.tokens, self.lexicon))
            self.process_sentence(unit)
        return self.output

    def process_sentence(self, unit: CommunicationUnit) -> None:
        self.trace(f"[trace] ProcessCommunicationUnit '{unit.text}'")
        self.context = None
        self.discourse = unit.sentence.discourse_context_major
        order = [pe for root in unit.sentence.all_predicate_expressions() for pe in flatten_pe_order(root)]
        for position, pe in enumerate(order):
            if id(pe) in self.done:
                continue
            following = order[position + 1] if position + 1 < len(order) else None
            self.process_pe(pe, unit, following)

    def process_pe(
        self,
        pe: PredicateExpression,
        unit: CommunicationUnit,
        following: Optional[PredicateExpression],
        allow_lookahead: bool = True,
    ) -> Optional[SpanningInformation]:
        self.done.add(id(pe))
        if pe.grammatical_mood != GrammaticalMood.INDICATIVE:
            self.trace(f"[trace] skip {pe.grammatical_mood.value} clause")
            return None
        return self.process_predicate_unit_indicative(pe, unit, following, allow_lookahead)

    # --- one predicate expression ---------------------------------------------

    def process_predicate_unit_indicative(
        self,
        pe: PredicateExpression,
        unit: CommunicationUnit,
        following: Optional[PredicateExpression] = None,
        allow_lookahead: bool = True,
    ) -> SpanningInformation:
        specifier = pe.main_specifier
        verb = specifier.main_verb_word if specifier else ""
        self.trace(f"[trace] ProcessMeaningUnitIndicative introducer={pe.introductory_word or '-'} verb={verb or '-'}")
        info = SpanningInformation(saved_discourse_context=specifier.discourse_context if specifier else None, pe=pe)
        bindings = RoleBindings()

        # 1. non-pronoun arguments
        pronouns = []
        for argument in pe.entity_arguments:
            if argument.is_pronoun:
                pronouns.append(argument)
                continue
            for wrapper in self.instantiate_argument(argument):
                info.wrappers.append(wrapper)
                if not wrapper.nominal_modifier:
                    bindings.for_role(wrapper.semantic_role).append(wrapper.instance)

        # 2-3. behavior selection and application; unfilled pronoun roles are unconstrained
        takes_behavior = specifier is not None and specifier.role.takes_behavior
        negated = takes_behavior and pe.is_negated(specifier.ordinal)
        if specifier is not None and specifier.role == PredicateSpecifierRole.TO_BE_ATTRIBUTIVE:
            self.write_attributive(pe, info)
        elif takes_behavior:
            found, bindings = self.select_behaviors(verb, negated, bindings)
            info.behavior_classes_per_verb.append((verb, found))
            if found and not bindings.is_empty():
                record = self.apply(found[0], bindings)
                if record is not None:
                    info.applications.append(record)
                    for wrapper in info.wrappers:
                        wrapper.applied_role = record.role_of(wrapper.instance.unique_id) or wrapper.applied_role

        # 4. pronoun arguments last
        for argument in pronouns:
            result = self.resolve_argument(pe, argument, info, unit, following, allow_lookahead)
            if result is None:
                continue
            instance = self.place(result.referent_instance)
            info.wrappers.append(
                ObjectInstanceSemanticWrapper(
                    instance,
                    argument.semantic_role,
                    argument.extra_sub_role,
                    argument.syntactic_role,
                    argument.predicate_ordinal,
                    phrase_text=self.phrase_for(instance),
                )
            )

        if takes_behavior:
            self.record_clause(pe, verb, negated, info)

        if self.context is not None:
            info.most_recent_context = self.context
            info.structural_parent_class = self.context.leading_class_name
            info.structural_parent = self.context.latest()
        push_spanning_info(self.stack, info)
        self.trace(f"[trace] PushSpanningInfo wrappers={[w.instance.unique_id for w in info.wrappers]}")
        return info

    # --- entities ---------------------------------------------------------------

    def instantiate_argument(self, argument: EntityArgumentSpecifier) -> List[ObjectInstanceSemanticWrapper]:
        """One wrapper per noun phrase, plus one per of-phrase nested in it"""
        wrappers = []
        for designator in argument.entity_designators:
            phrase = designator.phrase
            if phrase is None or phrase.is_pronoun:
                continue
            instance = self.instantiate_phrase(phrase)
            if instance is None:
                continue
            wrappers.append(
                ObjectInstanceSemanticWrapper(
                    instance,
                    argument.semantic_role,
                    argument.extra_sub_role,
                    argument.syntactic_role,
                    argument.predicate_ordinal,
                    phrase_text=phrase.text(),
                )
            )
            for modifier in phrase.postnominal_modifiers:
                if modifier.preposition.lower() != "of" or modifier.noun_phrase.is_pronoun:
                    continue
                inner = self.instantiate_phrase(modifier.noun_phrase)
                if inner is None:
                    continue
                wrappers.append(
                    ObjectInstanceSemanticWrapper(
                        inner,
                        SemanticRole.EXTRA,
                        ExtraSubRole.OF,
                        SyntacticRole.OTHER,
                        argument.predicate_ordinal,
                        phrase_text=modifier.noun_phrase.text(),
                        nominal_modifier=True,
                        pre_verb=argument.syntactic_role == SyntacticRole.SUBJECT,
                    )
                )
        return wrappers

    def classify(self, phrase: NounPhrase) -> Optional[str]:
        head = phrase.head
        prior = phrase.qualifiers[-1] if phrase.qualifiers else None
        matches = self.ontology.lookup_noun(head.word, prior)
        if matches:
            return matches[0].name
        if head.kind == HeadWordKind.PROPER_NOUN:
            return self.settings.proper_noun_class
        return self.settings.fallback_noun_class

    def instantiate_phrase(self, phrase: NounPhrase) -> Optional[ObjectInstance]:
        class_name = self.classify(phrase)
        if class_name is None:
            self.trace(f"[trace] no object frame class for '{phrase.head.word}'")
            return None
        context = self.ensure_context(class_name)
        multiple = class_name in self.ontology.classes and self.ontology.is_plural_form(class_name, phrase.head.word)
        instance = context.latest().add(self.model.instantiate(class_name, phrase.head.word, multiple))
        self.trace(f"[trace] instantiate {instance.label}")
        return instance

    def ensure_context(self, class_name: str) -> Context:
        """The sentence's context, created for the first instance placed in it"""
        if self.context is None:
            parent_class = self.structural_parent_for(class_name)
            self.context = self.model.new_context(self.discourse, parent_class, self.dimension_system_for(parent_class))
            self.trace(f"[trace] new context {self.context.unique_id} {self.context.timeline_name}")
        return self.context

    def structural_parent_for(self, class_name: str) -> str:
        if class_name in self.ontology.classes:
            for name in [class_name] + self.ontology.ancestors(class_name):
                bases = self.ontology.classes[name].structural_parent_bases
                if bases:
                    return bases[0]
        return self.settings.default_structural_parent

    def dimension_system_for(self, parent_class: str) -> Optional[str]:
        definition = self.ontology.classes.get(parent_class)
        if definition is None or not definition.dimension_systems:
            return None
        match = IDENTIFIER.match(definition.dimension_systems)
        return match.group(1) if match else None

    def place(self, instance: ObjectInstance) -> ObjectInstance:
        """The instance's copy at the current latest timepoint"""
        parent = self.ensure_context(instance.reference_class).latest()
        return parent.component(instance.unique_id) or parent.add(instance.clone())

    def phrase_for(self, instance: ObjectInstance) -> str:
        for info in self.stack:
            wrapper = info.wrapper_for(instance.unique_id)
            if wrapper is not None and wrapper.phrase_text:
                return wrapper.phrase_text
        return instance.content_string

    # --- pronouns ---------------------------------------------------------------

    def resolve_argument(
        self,
        pe: PredicateExpression,
        argument: EntityArgumentSpecifier,
        info: SpanningInformation,
        unit: CommunicationUnit,
        following: Optional[PredicateExpression],
        allow_lookahead: bool,
    ) -> Optional[ResolutionResult]:
        features = build_pronoun_feature_set(pe, argument, co_occurring=list(info.wrappers), lexicon=self.lexicon)
        start = max(pe.first_token_index, unit.token_span[0])
        self.trace(f"[trace] ResolvePronoun '{features.pronoun_word}' at token {features.token_index}")
        try:
            return self.record(self.resolver.resolve(self.stack, features, self.model, self.tokens, start))
        except NotFound:
            pass
        except NotFoundRequiredItem as e:
            self.warn(str(e))
            return None

        if allow_lookahead and following is not None and id(following) not in self.done:
            self.trace("[trace] Lookahead: possibly a cataphoric pronoun")
            ahead = self.process_pe(following, unit, None, allow_lookahead=False)
            if ahead is not None:
                temporary = SpanningInfoStack(self.settings.stack_low_water, self.settings.stack_high_water)
                temporary.push(ahead)
                try:
                    result = self.resolver.resolve(temporary, features, self.model, self.tokens, start)
                except NotFound:
                    pass
                except NotFoundRequiredItem as e:
                    self.warn(str(e))
                    return None
                else:
                    result.via_lookahead = True
                    return self.record(result)

        self.warn(str(ResolutionFailed(features.pronoun_word, features.token_index)))
        return None

    def record(self, result: ResolutionResult) -> ResolutionResult:
        self.output.results.append(result)
        self.output.warnings.extend(result.warnings)
        self.trace(f"[trace] resolved {result.describe()}")
        return result

    def warn(self, message: str) -> None:
        logger.warning(message)
        self.output.warnings.append(message)
        self.trace(f"[trace] warning: {message}")

    # --- behaviors --------------------------------------------------------------

    def select_behaviors(
        self,
        verb: str,
        negated: bool,
        bindings: RoleBindings,
    ) -> Tuple[List[BehaviorClassDef], RoleBindings]:
        """
        Behavior classes for the verb and the bound classes. With no actee and
        a single extra, an empty result is retried with the extra in the actee slot.
        """

        def classes(instances: List[ObjectInstance]) -> List[str]:
            return [i.reference_class for i in instances]

        found = self.ontology.search_behavior_classes(
            verb,
            negated,
            actor_classes=classes(bindings.actor),
            actee_classes=classes(bindings.actee),
            extra_classes=classes(bindings.extra),
        )
        if not found and not bindings.actee and len(bindings.extra) == 1:
            promoted = RoleBindings(actor=list(bindings.actor), actee=list(bindings.extra))
            found = self.ontology.search_behavior_classes(
                verb, negated, actor_classes=classes(promoted.actor), actee_classes=classes(promoted.actee)
            )
            if found:
                self.trace(f"[trace] extra {bindings.extra[0].unique_id} fills the passive participant slot")
                bindings = promoted
        self.trace(f"[trace] SelectBehaviorClasses {verb}{' (negated)' if negated else ''}: {[b.name for b in found]}")
        return found, bindings

    def apply(self, behavior: BehaviorClassDef, bindings: RoleBindings) -> Optional[AppliedRule]:
        context = self.ensure_context((bindings.actor or bindings.actee or bindings.extra)[0].reference_class)
        placed = RoleBindings()
        for role, instances in bindings.items():
            placed.for_role(role).extend(self.place(i) for i in instances)
        try:
            record = apply_behavior_class(context, behavior, placed, self.ontology)
        except ModelError as e:
            self.warn(f"{behavior.name} not applied: {e}")
            return None
        self.trace(f"[trace] ApplyBehaviorClass {behavior.name} {record.prior_label}->{record.post_label}")
        return record

    def write_attributive(self, pe: PredicateExpression, info: SpanningInformation) -> None:
        """'The trophy is big.': store the value naming the adjective on the subject"""
        adjective = next(
            (
                a.attribute_designators[0].adjective_word.lower()
                for a in pe.attributive_arguments
                if a.role == AttributiveRole.ATTRIBUTE and a.attribute_designators
            ),
            None,
        )
        if adjective is None:
            return
        for wrapper in info.wrappers:
            if wrapper.syntactic_role != SyntacticRole.SUBJECT or wrapper.nominal_modifier:
                continue
            instance = wrapper.instance
            if instance.reference_class not in self.ontology.classes:
                continue
            declared = sorted(
                self.ontology.effective_attribute_types(instance.reference_class).items(),
                key=lambda item: item[1][1].optional_causal_feature,
            )
            for name, (_, definition) in declared:
                value = definition.value_for_word(adjective)
                if value is not None:
                    write_attribute(self.place(instance), name, value.name, self.ontology)
                    self.trace(f"[trace] attribute {instance.unique_id} {name}={value.name}")
                    break

    def record_clause(self, pe: PredicateExpression, verb: str, negated: bool, info: SpanningInformation) -> None:
        actors = [w for w in info.wrappers if w.effective_role == SemanticRole.ACTOR and not w.nominal_modifier]
        base = self.lexicon.verb_base(verb) or verb.lower()
        words = [f"did not {base}" if negated else verb]
        words.extend(
            _designator_text(a) for a in pe.entity_arguments if a.syntactic_role != SyntacticRole.SUBJECT and _designator_text(a)
        )
        self.output.clauses.append(
            ClauseRecord(
                verb=verb,
                base=base,
                actor_ids=[w.instance.unique_id for w in actors],
                actor_phrase=" and ".join(w.phrase_text for w in actors),
                verb_phrase=" ".join(words),
                negated=negated,
            )
        )


def engine_driver(
    units: List[CommunicationUnit],
    tokens: List[TokenNode],
    ontology: Ontology,
    settings: Optional[EngineSettings] = None,
    lexicon: Optional[Lexicon] = None,
    text_source: Optional[str] = None,
    document_file: Optional[str] = None,
) -> EngineOutput:
    """
    Run the engine over segmented units of a token list.

    Sentence units without a parsed sentence are parsed on the way.

    Raises:
        UnsupportedConstruction: a sentence is outside the grammar
    """
    settings = settings or EngineSettings()
    return _EngineRun(tokens, ontology, settings, lexicon or get_lexicon(), text_source, document_file).run(units)


class SemanticEngine:
    """Front end plus driver over one linked ontology"""

    def __init__(self, ontology: Ontology, settings: Optional[EngineSettings] = None, lexicon: Optional[Lexicon] = None):
        self.ontology = ontology
        self.settings = settings or EngineSettings()
        self.lexicon = (lexicon or get_lexicon()).with_verbs(b.verb_dictionary for b in ontology.behaviors.values())

    def run(self, text: str, text_source: Optional[str] = None, document_file: Optional[str] = None) -> EngineOutput:
        """
        Disambiguate a text.

        Raises:
            UnsupportedConstruction: a sentence is outside the grammar
        """
        tokens = tokenize(text, self.lexicon)
        units = segment_communication_units(tokens)
        for unit in units:
            if unit.kind == CommunicationUnitKind.SENTENCE:
                unit.sentence = tree_to_sentence(parse_sentence(unit, tokens, self.lexicon))
        return engine_driver(units, tokens, self.ontology, self.settings, self.lexicon, text_source, document_file)

    def run_bracketed(self, text: str, text_source: Optional[str] = None) -> EngineOutput:
        """
        Disambiguate one sentence given as a bracketed constituency tree.

        Raises:
            UnsupportedLabel: the tree uses an unsupported label
            UnsupportedConstruction: the tree is malformed
        """
        meaning_unit = read_bracketed_tree(text, self.lexicon)
        leaves = " ".join(Tree.fromstring(text).leaves())
        tokens = tokenize(leaves, self.lexicon)
        unit = CommunicationUnit(CommunicationUnitKind.SENTENCE, (0, len(tokens)), text=leaves)
        unit.sentence = tree_to_sentence(SyntaxTree(unit_kind=unit.kind, content=leaves, meaning_units=[meaning_unit]))
        return engine_driver([unit], tokens, self.ontology, self.settings, self.lexicon, text_source)
