"""
Lexical analysis: words, punctuation, URLs and e-mail addresses become the
master token list.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Set

from src.frontend.lexicon import Lexicon, get_lexicon


class TokenMarker(str, Enum):
    COMM_UNIT_BEGIN = "CommUnitBegin"
    COMM_UNIT_END = "CommUnitEnd"
    PARAGRAPH_BEGIN = "ParagraphBegin"
    PARAGRAPH_END = "ParagraphEnd"


SENTENCE_FINAL = {".", "!", "?"}

TOKEN_PATTERN = re.compile(
    r"""
    (?P<url>(?:https?://|www\.)[^\s]+?)(?=[.,;:!?]*(?:\s|$))
    |(?P<email>[\w.+-]+(?:@|\(at\))[\w-]+(?:\.[\w-]+)+)
    |(?P<word>[^\W_]+(?:[-'’][^\W_]+)*)
    |(?P<clitic>['’](?:s|re)\b)
    |(?P<punct>[.,;:!?"()])
    """,
    re.VERBOSE | re.UNICODE,
)


@dataclass
class TokenNode:
    value: str
    index: int
    line: int = 1
    markers: Set[TokenMarker] = field(default_factory=set)
    resolved_word: Optional[str] = None
    kind: str = "word"

    def render(self) -> str:
        """``value`` or ``value(resolved)`` for resolved pronouns"""
        if self.resolved_word:
            return f"{self.value}({self.resolved_word})"
        return self.value


def _match_case(template: str, word: str) -> str:
    return word[:1].upper() + word[1:] if template[:1].isupper() else word


def expand_contraction(word: str, lexicon: Lexicon) -> List[str]:
    """
    Expand one surface word. Already-expanded words come back unchanged.

    >>> expand_contraction("doesn't", get_lexicon())
    ['does', 'not']
    """
    key = word.replace("’", "'").lower()
    if key in lexicon.clitics:
        return [lexicon.clitics[key]]
    expansion = lexicon.contractions.get(key)
    if expansion:
        return [_match_case(word, expansion[0])] + list(expansion[1:])
    if key.endswith("n't") and len(key) > 3:
        return [word[:-3], "not"]
    return [word]


def tokenize(text: str, lexicon: Optional[Lexicon] = None) -> List[TokenNode]:
    """
    Split text into the master token list.

    Contractions are expanded, punctuation stands alone, and sentence-final
    punctuation carries CommUnitEnd. Blank lines delimit paragraphs.
    """
    lexicon = lexicon or get_lexicon()
    tokens: List[TokenNode] = []
    paragraph_open = False
    begin_next = True

    for line_number, line in enumerate(text.splitlines() or [text], start=1):
        if not line.strip():
            if tokens and paragraph_open:
                tokens[-1].markers.add(TokenMarker.PARAGRAPH_END)
            paragraph_open = False
            continue

        for match in TOKEN_PATTERN.finditer(line):
            kind = match.lastgroup or "word"
            raw = match.group(0)
            if kind == "clitic":
                values = [lexicon.clitics.get(raw.replace("’", "'").lower(), raw)]
                kind = "word"
            elif kind == "word":
                values = expand_contraction(raw, lexicon)
            else:
                values = [raw]

            for value in values:
                token = TokenNode(value=value, index=len(tokens), line=line_number, kind=kind)
                if not paragraph_open:
                    token.markers.add(TokenMarker.PARAGRAPH_BEGIN)
                    paragraph_open = True
                if begin_next:
                    token.markers.add(TokenMarker.COMM_UNIT_BEGIN)
                    begin_next = False
                if kind == "punct" and value in SENTENCE_FINAL:
                    token.markers.add(TokenMarker.COMM_UNIT_END)
                    begin_next = True
                tokens.append(token)

    if tokens and paragraph_open:
        tokens[-1].markers.add(TokenMarker.PARAGRAPH_END)
    return tokens


def render_tokens(tokens: List[TokenNode]) -> str:
    """Annotated text: tokens joined by single spaces"""
    return " ".join(token.render() for token in tokens)


def dump_tokens(tokens: List[TokenNode]) -> str:
    """Debug form, one ``value[/resolved]`` per token"""
    return " ".join(token.value + (f"/{token.resolved_word}" if token.resolved_word else "") for token in tokens)
