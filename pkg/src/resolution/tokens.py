"""
Writing a resolution back into the master token list
"""

from typing import Sequence

from src.engine.features import PronounFeatureSet
from src.frontend.tokenizer import TokenMarker, TokenNode
from src.utils.errors import NotFoundRequiredItem


def write_resolution_to_tokens(
    tokens: Sequence[TokenNode],
    features: PronounFeatureSet,
    antecedent_word: str,
    start: int = 0,
) -> TokenNode:
    """
    Set ``resolved_word`` on the pronoun's token.

    Scans forward from ``start`` for the first still unresolved token equal to
    the pronoun and stops at the end of the communication unit.

    Raises:
        NotFoundRequiredItem: empty antecedent, or no such token before the unit ends
    """
    if not antecedent_word:
        raise NotFoundRequiredItem(f"no antecedent word for '{features.pronoun_word}'")
    for token in tokens[max(start, 0):]:
        if token.value.lower() == features.pronoun_word and token.resolved_word is None:
            token.resolved_word = antecedent_word
            return token
        if TokenMarker.COMM_UNIT_END in token.markers:
            break
    raise NotFoundRequiredItem(f"pronoun '{features.pronoun_word}' not found in the unit starting at token {start}")
