"""
Spanning information: what the engine remembers about recently processed
predicate expressions so a later pronoun can be linked back to them.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from src.instance.application import AppliedRule
from src.instance.model import Context, ObjectInstance, StructuralParentInstance
from src.ontology.model import BehaviorClassDef
from src.snf.model import DiscourseContext, ExtraSubRole, PredicateExpression, SemanticRole, SyntacticRole

DEFAULT_LOW_WATER = 10
DEFAULT_HIGH_WATER = 15


@dataclass
class ObjectInstanceSemanticWrapper:
    """An instance together with the role it played in one predicate expression"""

    instance: ObjectInstance
    semantic_role: SemanticRole
    extra_sub_role: Optional[ExtraSubRole] = None
    syntactic_role: SyntacticRole = SyntacticRole.OTHER
    predicate_ordinal: int = 0
    applied_role: Optional[SemanticRole] = None
    phrase_text: str = ""
    nominal_modifier: bool = False
    pre_verb: bool = False

    @property
    def effective_role(self) -> SemanticRole:
        """Role filled during behavior application, else the syntactic one"""
        return self.applied_role or self.semantic_role


@dataclass
class SpanningInformation:
    saved_discourse_context: Optional[DiscourseContext] = None
    most_recent_context: Optional[Context] = None
    structural_parent_class: str = "EverydayObjectStructuralParentClass"
    structural_parent: Optional[StructuralParentInstance] = None
    wrappers: List[ObjectInstanceSemanticWrapper] = field(default_factory=list)
    behavior_classes_per_verb: List[Tuple[str, List[BehaviorClassDef]]] = field(default_factory=list)
    applications: List[AppliedRule] = field(default_factory=list)
    pe: Optional[PredicateExpression] = field(default=None, compare=False, repr=False)

    def behaviors_for(self, verb: str) -> List[BehaviorClassDef]:
        for word, behaviors in self.behavior_classes_per_verb:
            if word.lower() == verb.lower():
                return behaviors
        return []

    def main_behaviors(self) -> List[BehaviorClassDef]:
        return self.behavior_classes_per_verb[0][1] if self.behavior_classes_per_verb else []

    @property
    def main_verb(self) -> Optional[str]:
        return self.behavior_classes_per_verb[0][0] if self.behavior_classes_per_verb else None

    def candidates(self) -> List[ObjectInstanceSemanticWrapper]:
        """Actors, then actees, then extras; document order within each role"""
        ordered: List[ObjectInstanceSemanticWrapper] = []
        for role in (SemanticRole.ACTOR, SemanticRole.ACTEE, SemanticRole.EXTRA):
            ordered.extend(w for w in self.wrappers if w.effective_role == role)
        return ordered

    def wrapper_for(self, unique_id: str) -> Optional[ObjectInstanceSemanticWrapper]:
        for wrapper in self.wrappers:
            if wrapper.instance.unique_id == unique_id:
                return wrapper
        return None


class SpanningInfoStack:
    """
    LIFO stack of spanning information with a read cursor.

    Pushing beyond the high-water mark discards the oldest entries down to the
    low-water mark.
    """

    def __init__(self, low_water: int = DEFAULT_LOW_WATER, high_water: int = DEFAULT_HIGH_WATER):
        if low_water > high_water:
            raise ValueError("low water mark must not exceed the high water mark")
        self.low_water = low_water
        self.high_water = high_water
        self._items: List[SpanningInformation] = []
        self._cursor = -1

    def push(self, info: SpanningInformation) -> None:
        self._items.append(info)
        self.trim()
        self.reset_current_to_top()

    def pop(self) -> Optional[SpanningInformation]:
        """Remove and return the newest entry, None when empty"""
        if not self._items:
            return None
        info = self._items.pop()
        self.reset_current_to_top()
        return info

    def top(self) -> Optional[SpanningInformation]:
        return self._items[-1] if self._items else None

    def trim(self) -> None:
        if len(self._items) > self.high_water:
            del self._items[: len(self._items) - self.low_water]

    def reset_current_to_top(self) -> None:
        self._cursor = len(self._items) - 1

    def current(self) -> Optional[SpanningInformation]:
        """Entry under the cursor, moving the cursor one step toward the oldest"""
        if self._cursor < 0:
            return None
        info = self._items[self._cursor]
        self._cursor -= 1
        return info

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[SpanningInformation]:
        """Newest first"""
        return iter(reversed(self._items))


def push_spanning_info(stack: SpanningInfoStack, info: SpanningInformation) -> None:
    stack.push(info)


def trim(stack: SpanningInfoStack) -> None:
    stack.trim()
