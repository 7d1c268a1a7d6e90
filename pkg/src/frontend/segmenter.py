"""
Communication unit segmentation
"""

from itertools import groupby
from typing import List, Sequence

from src.frontend.tokenizer import SENTENCE_FINAL, TokenMarker, TokenNode
from src.snf.model import CommunicationUnit, CommunicationUnitKind

AUTHOR_LEADS = {"by", "author"}


def _classify_line(line_tokens: Sequence[TokenNode]) -> CommunicationUnitKind:
    """Kind of a line that holds no sentence-final punctuation"""
    if len(line_tokens) == 1 and line_tokens[0].kind == "url":
        return CommunicationUnitKind.URL
    if len(line_tokens) == 1 and line_tokens[0].kind == "email":
        return CommunicationUnitKind.EMAIL_ADDRESS
    if line_tokens[0].value.lower().rstrip(":") in AUTHOR_LEADS and len(line_tokens) > 1:
        return CommunicationUnitKind.AUTHOR_INFO
    if len(line_tokens) == 1:
        return CommunicationUnitKind.SINGLE_WORD_ON_LINE
    if len(line_tokens) == 2:
        return CommunicationUnitKind.TWO_WORD_PHRASE_ON_LINE
    return CommunicationUnitKind.SENTENCE


def _unit(kind: CommunicationUnitKind, tokens: Sequence[TokenNode]) -> CommunicationUnit:
    tokens[0].markers.add(TokenMarker.COMM_UNIT_BEGIN)
    tokens[-1].markers.add(TokenMarker.COMM_UNIT_END)
    return CommunicationUnit(
        kind=kind,
        token_span=(tokens[0].index, tokens[-1].index + 1),
        text=" ".join(t.value for t in tokens),
    )


def segment_communication_units(tokens: Sequence[TokenNode]) -> List[CommunicationUnit]:
    """
    Split the token list into communication units.

    Sentences end at full stops. A line that stands alone without sentence
    punctuation is classified by pattern (URL, e-mail, author line, one or
    two words); a longer unpunctuated line runs on into the next sentence.
    """
    units: List[CommunicationUnit] = []
    pending: List[TokenNode] = []

    for _, grouped in groupby(tokens, key=lambda t: t.line):
        line_tokens = list(grouped)
        has_final = any(t.value in SENTENCE_FINAL and t.kind == "punct" for t in line_tokens)
        if not pending and not has_final:
            kind = _classify_line(line_tokens)
            if kind != CommunicationUnitKind.SENTENCE:
                units.append(_unit(kind, line_tokens))
                continue

        for token in line_tokens:
            pending.append(token)
            if TokenMarker.COMM_UNIT_END in token.markers:
                units.append(_unit(CommunicationUnitKind.SENTENCE, pending))
                pending = []

    if pending:
        units.append(_unit(CommunicationUnitKind.SENTENCE, pending))
    return units


def unit_tokens(tokens: Sequence[TokenNode], unit: CommunicationUnit) -> List[TokenNode]:
    start, end = unit.token_span
    return list(tokens[start:end])
