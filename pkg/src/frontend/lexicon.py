"""
Closed-class vocabulary and verb form tables
"""

import copy
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

import yaml

from src.utils.config import PROJECT_ROOT

logger = logging.getLogger(__name__)

DEFAULT_LEXICON = PROJECT_ROOT / "data" / "lexicon.yaml"


class VerbFormKind(str, Enum):
    BASE = "Base"
    PAST = "Past"
    PARTICIPLE = "Participle"
    THIRD_PERSON = "ThirdPerson"
    GERUND = "Gerund"


FORM_ORDER = [
    VerbFormKind.BASE,
    VerbFormKind.PAST,
    VerbFormKind.PARTICIPLE,
    VerbFormKind.THIRD_PERSON,
    VerbFormKind.GERUND,
]


@dataclass
class PronounEntry:
    gender: str
    number: str
    case: str = "any"
    animate: Optional[bool] = None


@dataclass
class ModalEntry:
    tense: str
    capability: bool = False


@dataclass
class Lexicon:
    determiners: List[str] = field(default_factory=list)
    possessives: List[str] = field(default_factory=list)
    pronouns: Dict[str, PronounEntry] = field(default_factory=dict)
    do_forms: Dict[str, str] = field(default_factory=dict)
    be_forms: Dict[str, str] = field(default_factory=dict)
    have_forms: Dict[str, str] = field(default_factory=dict)
    modals: Dict[str, ModalEntry] = field(default_factory=dict)
    negators: List[str] = field(default_factory=list)
    degree_words: List[str] = field(default_factory=list)
    prepositions: List[str] = field(default_factory=list)
    introducers: List[str] = field(default_factory=list)
    wh_words: List[str] = field(default_factory=list)
    contractions: Dict[str, List[str]] = field(default_factory=dict)
    clitics: Dict[str, str] = field(default_factory=dict)
    # word form -> (base, kinds it can stand for, in table order)
    verb_forms: Dict[str, Dict[str, List[VerbFormKind]]] = field(default_factory=dict)

    def add_verb(self, forms: Sequence[str]) -> None:
        """Register one five-slot verb table; earlier registrations win on conflicts"""
        if len(forms) != len(FORM_ORDER):
            logger.debug("Skipping verb table with %d forms: %s", len(forms), list(forms))
            return
        base = forms[0].lower()
        for kind, form in zip(FORM_ORDER, forms):
            entry = self.verb_forms.setdefault(form.lower(), {})
            if entry and base not in entry:
                continue
            kinds = entry.setdefault(base, [])
            if kind not in kinds:
                kinds.append(kind)

    def add_verbs(self, tables: Iterable[Sequence[str]]) -> None:
        for forms in tables:
            self.add_verb(forms)

    def with_verbs(self, tables: Iterable[Sequence[str]]) -> "Lexicon":
        """Copy of this lexicon extended with more verb tables"""
        extended = copy.deepcopy(self)
        extended.add_verbs(tables)
        return extended

    # --- classification -------------------------------------------------------

    def is_verb(self, word: str) -> bool:
        return word.lower() in self.verb_forms

    def verb_kinds(self, word: str) -> List[VerbFormKind]:
        kinds: List[VerbFormKind] = []
        for found in self.verb_forms.get(word.lower(), {}).values():
            kinds.extend(k for k in found if k not in kinds)
        return kinds

    def verb_base(self, word: str) -> Optional[str]:
        entry = self.verb_forms.get(word.lower())
        return next(iter(entry)) if entry else None

    def pronoun(self, word: str) -> Optional[PronounEntry]:
        return self.pronouns.get(word.lower())

    def is_closed_class(self, word: str) -> bool:
        lowered = word.lower()
        return (
            lowered in self.determiners
            or lowered in self.possessives
            or lowered in self.pronouns
            or lowered in self.do_forms
            or lowered in self.be_forms
            or lowered in self.have_forms
            or lowered in self.modals
            or lowered in self.negators
            or lowered in self.degree_words
            or lowered in self.prepositions
            or lowered in self.introducers
            or lowered in self.wh_words
        )

    def is_content_word(self, word: str) -> bool:
        """Open-class word: alphabetic, not closed class and not a known verb form"""
        stripped = word.replace("-", "").replace("'", "")
        return bool(stripped) and stripped.isalnum() and not self.is_closed_class(word) and not self.is_verb(word)


def _lower_list(values: Optional[Iterable[str]]) -> List[str]:
    return [str(v).lower() for v in values or []]


def load_lexicon(path: Union[str, Path, None] = None) -> Lexicon:
    """
    Read the closed-class tables from YAML.

    Args:
        path: Lexicon file; defaults to data/lexicon.yaml beside the package
    """
    path = Path(path) if path else DEFAULT_LEXICON
    with open(path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    lexicon = Lexicon(
        determiners=_lower_list(raw.get("determiners")),
        possessives=_lower_list(raw.get("possessives")),
        pronouns={word.lower(): PronounEntry(**entry) for word, entry in (raw.get("pronouns") or {}).items()},
        do_forms={k.lower(): v for k, v in (raw.get("do_forms") or {}).items()},
        be_forms={k.lower(): v for k, v in (raw.get("be_forms") or {}).items()},
        have_forms={k.lower(): v for k, v in (raw.get("have_forms") or {}).items()},
        modals={k.lower(): ModalEntry(**v) for k, v in (raw.get("modals") or {}).items()},
        negators=_lower_list(raw.get("negators")),
        degree_words=_lower_list(raw.get("degree_words")),
        prepositions=_lower_list(raw.get("prepositions")),
        introducers=_lower_list(raw.get("introducers")),
        wh_words=_lower_list(raw.get("wh_words")),
        contractions={k.lower(): list(v) for k, v in (raw.get("contractions") or {}).items()},
        clitics={k.lower(): v for k, v in (raw.get("clitics") or {}).items()},
    )
    lexicon.add_verbs(raw.get("verbs") or [])
    logger.debug("Loaded lexicon from %s (%d verb forms)", path, len(lexicon.verb_forms))
    return lexicon


_default_lexicon: Optional[Lexicon] = None


def get_lexicon() -> Lexicon:
    """Shared lexicon read from the default file"""
    global _default_lexicon  # pylint: disable=global-statement
    if _default_lexicon is None:
        _default_lexicon = load_lexicon()
    return _default_lexicon
