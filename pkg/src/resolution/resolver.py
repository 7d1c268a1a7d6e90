"""
Staged pronoun resolution.

Stages run in order and the first one that succeeds decides:

    0. within the clause: a post-verb object pronoun may refer to an
       of-phrase inside the clause's own subject
    1. exploratory search of the spanning stack, newest entry first, using
       the adjective key or the verb key of the pronoun's clause
    2. gender and number agreement alone

A successful adjective match writes its causal feature into the instance
model, and every success is written into the master token list.
"""

import logging
from typing import Callable, List, Optional, Sequence

from src.engine.features import HypotheticalUsage, PronounFeatureSet
from src.engine.spanning import ObjectInstanceSemanticWrapper, SpanningInformation, SpanningInfoStack
from src.frontend.tokenizer import TokenNode
from src.instance.application import set_attribute
from src.instance.model import InstanceModel
from src.ontology.linker import Ontology
from src.reasoning.generate_and_test import generate_and_test
from src.resolution.matchers import (
    compatible_candidates,
    is_pronoun_compatible,
    match_adjective_causal_feature,
    match_verb_nested_behavior,
)
from src.resolution.result import CandidateMatch, Mechanism, ResolutionResult
from src.resolution.tokens import write_resolution_to_tokens
from src.snf.model import SemanticRole
from src.utils.errors import NotFound

logger = logging.getLogger(__name__)

ROLE_RANK = {SemanticRole.ACTOR: 0, SemanticRole.ACTEE: 1, SemanticRole.EXTRA: 2}


def _no_trace(_: str) -> None:
    pass


class PronounResolver:
    """Resolve pronouns against one engine run's spanning stack"""

    def __init__(
        self,
        ontology: Ontology,
        person_class: str = "PersonObjectFrameClass",
        trace: Optional[Callable[[str], None]] = None,
    ):
        self.ontology = ontology
        self.person_class = person_class
        self.trace = trace or _no_trace

    # --- stages ---------------------------------------------------------------

    def within_unit(self, features: PronounFeatureSet) -> Optional[CandidateMatch]:
        """Post-verb object pronoun -> of-phrase in the same clause's subject"""
        if not features.is_post_verb_object:
            return None
        for wrapper in features.co_occurring_wrappers:
            if wrapper.nominal_modifier and wrapper.pre_verb and self.compatible(wrapper, features):
                return CandidateMatch(wrapper, Mechanism.WITHIN_UNIT)
        return None

    def exploratory_search_one_info(
        self,
        info: SpanningInformation,
        features: PronounFeatureSet,
        model: Optional[InstanceModel] = None,
    ) -> CandidateMatch:
        """
        Every compatible candidate of one spanning information is tested; the
        success with the highest probability wins, earlier candidates on ties.

        Raises:
            NotFound: no candidate matched
        """
        candidates = compatible_candidates(info, features, self.ontology, self.person_class)
        successes: List[CandidateMatch] = []

        if features.search_key_adjective:
            for wrapper in candidates:
                found = match_adjective_causal_feature(wrapper, features, info, self.ontology)
                if found is not None:
                    name, value, behavior = found
                    successes.append(
                        CandidateMatch(
                            wrapper,
                            Mechanism.ADJECTIVE_CAUSAL,
                            behavior.effective_probability,
                            causal_feature=(name, value),
                            matched_behavior=behavior.name,
                            info=info,
                        )
                    )
        elif features.search_key_verb:
            for wrapper in candidates:
                found = match_verb_nested_behavior(wrapper, features, info, self.ontology)
                if found is not None:
                    behavior, reference = found
                    successes.append(
                        CandidateMatch(
                            wrapper,
                            Mechanism.VERB_NESTED_BEHAVIOR,
                            reference.effective_probability,
                            matched_behavior=behavior.name,
                            matched_nested_behavior=reference.behavior_ref,
                            info=info,
                        )
                    )
            if not successes and features.hypothetical_usage == HypotheticalUsage.EXPLANATION_OF_CAUSE:
                successes = self.generate_and_test_all(info, features, candidates, model)

        if not successes:
            raise NotFound("no candidate in this spanning information matches")
        best = max(successes, key=lambda match: match.probability)
        self.trace(
            f"[resolve] {features.pronoun_word}: {len(successes)} match(es), chose "
            f"{best.wrapper.instance.unique_id} ({best.mechanism.value}, p={best.probability:g})"
        )
        return best

    def generate_and_test_all(
        self,
        info: SpanningInformation,
        features: PronounFeatureSet,
        candidates: Sequence[ObjectInstanceSemanticWrapper],
        model: Optional[InstanceModel],
    ) -> List[CandidateMatch]:
        successes = []
        for wrapper in candidates:
            try:
                report = generate_and_test(
                    features, wrapper, info, self.ontology, master=model, person_class=self.person_class, trace=self.trace
                )
            except NotFound as e:
                self.trace(f"[reasoning] {wrapper.instance.unique_id}: {e}")
                continue
            if report.matched:
                successes.append(
                    CandidateMatch(
                        wrapper,
                        Mechanism.GENERATE_AND_TEST,
                        report.probability,
                        matched_behavior=report.main_behavior,
                        matched_nested_behavior=report.nested_behavior,
                        info=info,
                    )
                )
        return successes

    def exploratory_search_stack(
        self,
        stack: SpanningInfoStack,
        features: PronounFeatureSet,
        model: Optional[InstanceModel] = None,
    ) -> CandidateMatch:
        """
        Raises:
            NotFound: no spanning information yields a match
        """
        stack.reset_current_to_top()
        try:
            info = stack.current()
            while info is not None:
                try:
                    return self.exploratory_search_one_info(info, features, model)
                except NotFound:
                    info = stack.current()
        finally:
            stack.reset_current_to_top()
        raise NotFound(f"exploratory search found no referent for '{features.pronoun_word}'")

    def gender_number_fallback(self, stack: SpanningInfoStack, features: PronounFeatureSet) -> CandidateMatch:
        """
        Compatible wrappers ranked by role first (actor, actee, extra), then by
        recency. Ties within one information keep document order.

        Raises:
            NotFound: nothing on the stack agrees with the pronoun
        """
        ranked = []
        for depth, info in enumerate(stack):
            for wrapper in compatible_candidates(info, features, self.ontology, self.person_class):
                ranked.append(((ROLE_RANK[wrapper.effective_role], depth), wrapper, info))
        if not ranked:
            raise NotFound(f"no instance agrees with '{features.pronoun_word}' in gender and number")
        best_rank = min(rank for rank, _, _ in ranked)
        tied = [(wrapper, info) for rank, wrapper, info in ranked if rank == best_rank]
        match = CandidateMatch(tied[0][0], Mechanism.GENDER_NUMBER_FALLBACK, info=tied[0][1])
        if len(tied) > 1:
            names = ", ".join(w.instance.unique_id for w, _ in tied)
            match.warning = f"ambiguous fallback for '{features.pronoun_word}' among {names}; chose {tied[0][0].instance.unique_id}"
        return match

    def compatible(self, wrapper: ObjectInstanceSemanticWrapper, features: PronounFeatureSet) -> bool:
        return is_pronoun_compatible(wrapper, features, self.ontology, self.person_class)

    # --- driver -----------------------------------------------------------------

    def find(self, stack: SpanningInfoStack, features: PronounFeatureSet, model: Optional[InstanceModel] = None) -> CandidateMatch:
        """
        Run the stages without touching the model or the tokens.

        Raises:
            NotFound: every stage failed
        """
        match = self.within_unit(features)
        if match is not None:
            return match
        try:
            return self.exploratory_search_stack(stack, features, model)
        except NotFound:
            self.trace(f"[resolve] {features.pronoun_word}: exploratory search failed, trying gender/number")
        return self.gender_number_fallback(stack, features)

    def resolve(
        self,
        stack: SpanningInfoStack,
        features: PronounFeatureSet,
        model: InstanceModel,
        tokens: Optional[Sequence[TokenNode]] = None,
        token_start: Optional[int] = None,
    ) -> ResolutionResult:
        """
        Find the referent and record it.

        Raises:
            NotFound: every stage failed; the caller may retry with lookahead
            NotFoundRequiredItem: the pronoun's token is missing from the unit
        """
        match = self.find(stack, features, model)
        instance = match.wrapper.instance
        result = ResolutionResult(
            referent_instance=instance,
            antecedent_word=instance.content_string,
            pronoun_token_index=features.token_index,
            mechanism=match.mechanism,
            causal_feature=match.causal_feature,
            matched_behavior=match.matched_behavior,
            matched_nested_behavior=match.matched_nested_behavior,
            probability=match.probability,
            pronoun_word=features.pronoun_word,
        )
        if match.warning:
            result.warnings.append(match.warning)
            logger.warning(match.warning)

        if match.causal_feature is not None:
            applications = match.info.applications if match.info is not None else []
            up_to = applications[0].prior_label if applications else None
            context_id = applications[0].context_id if applications else None
            name, value = match.causal_feature
            set_attribute(model, instance.unique_id, name, value, self.ontology, up_to=up_to, context_id=context_id)

        if tokens is not None:
            start = features.clause_start if token_start is None else token_start
            token = write_resolution_to_tokens(tokens, features, result.antecedent_word, start)
            result.pronoun_token_index = token.index
        logger.debug("Resolved %s", result.describe())
        return result


def resolve_pronoun(
    stack: SpanningInfoStack,
    features: PronounFeatureSet,
    model: InstanceModel,
    ontology: Ontology,
    tokens: Optional[Sequence[TokenNode]] = None,
    person_class: str = "PersonObjectFrameClass",
) -> ResolutionResult:
    return PronounResolver(ontology, person_class).resolve(stack, features, model, tokens)


def exploratory_search_stack(
    stack: SpanningInfoStack,
    features: PronounFeatureSet,
    ontology: Ontology,
    model: Optional[InstanceModel] = None,
) -> CandidateMatch:
    return PronounResolver(ontology).exploratory_search_stack(stack, features, model)


def exploratory_search_one_info(
    info: SpanningInformation,
    features: PronounFeatureSet,
    ontology: Ontology,
    model: Optional[InstanceModel] = None,
) -> CandidateMatch:
    return PronounResolver(ontology).exploratory_search_one_info(info, features, model)
