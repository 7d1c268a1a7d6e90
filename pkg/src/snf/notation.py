"""
Block notation for predicate expressions.

One construct per line: ``Field (value ...)`` leaves and ``Block { ... }``
interiors, ``//`` comments allowed. A root PE closes with a
``PointerOrder (...)`` leaf listing its processing order as paths such as
``Self`` or ``Modifier[0]``.
"""

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Union

import pyparsing as pp

from src.snf.model import (
    AdverbialExpression,
    AttributeDesignator,
    AttributiveArgumentSpecifier,
    AttributiveRole,
    DiscourseContext,
    EntityArgumentSpecifier,
    EntityDesignator,
    ExtraSubRole,
    GrammaticalMood,
    HeadWord,
    HeadWordKind,
    ModificationSpecifier,
    NounPhrase,
    PredicateExpression,
    PredicateSpecifier,
    PredicateSpecifierRole,
    PrepositionalPhrase,
    SemanticRole,
    SyntacticPosition,
    SyntacticRole,
)
from src.utils.errors import SnfSyntaxError

INDENT = "  "
PATH_STEP = re.compile(r"(Modifier|Argument)\[(\d+)\]")

Atom = Union[str, int, "PathRef"]


@dataclass
class PathRef:
    """A pointer-order entry, e.g. ``Modifier[0].Argument[1]``"""

    text: str


@dataclass
class Leaf:
    name: str
    values: List[Atom]
    line: int
    column: int


@dataclass
class Block:
    name: str
    line: int
    column: int
    items: List[Union["Block", Leaf]] = field(default_factory=list)


# --- serialization ------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


class _Emitter:
    def __init__(self) -> None:
        self.lines: List[str] = []
        self.depth = 0

    def leaf(self, name: str, *values: str) -> None:
        self.lines.append(f"{INDENT * self.depth}{name} ({' '.join(values)})")

    def open(self, name: str) -> None:
        self.lines.append(f"{INDENT * self.depth}{name}")
        self.lines.append(f"{INDENT * self.depth}{{")
        self.depth += 1

    def close(self) -> None:
        self.depth -= 1
        self.lines.append(f"{INDENT * self.depth}}}")


def _emit_noun_phrase(out: _Emitter, np: NounPhrase) -> None:
    out.open("NounPhrase")
    for word in np.specifiers:
        out.leaf("Specifier", _quote(word))
    for word in np.qualifiers:
        out.leaf("Qualifier", _quote(word))
    for head in np.head_words:
        out.leaf("NounHeadWord", _quote(head.word), head.kind.value)
    for modifier in np.postnominal_modifiers:
        _emit_prepositional(out, "PostnominalModifier", modifier)
    out.close()


def _emit_prepositional(out: _Emitter, name: str, phrase: PrepositionalPhrase) -> None:
    out.open(name)
    out.leaf("Preposition", _quote(phrase.preposition))
    _emit_noun_phrase(out, phrase.noun_phrase)
    if phrase.nested_pe is not None:
        _emit_pe(out, phrase.nested_pe)
    out.close()


def _emit_pe(out: _Emitter, pe: PredicateExpression, root: bool = False) -> None:
    out.open("PredicateExpression")
    out.leaf("GrammaticalMood", pe.grammatical_mood.value)
    if pe.introductory_word:
        out.leaf("IntroductoryWord", _quote(pe.introductory_word))

    for spec in pe.predicate_specifiers:
        out.open("PredicateSpecifier")
        out.leaf("Ordinal", str(spec.ordinal))
        out.leaf("MainVerbWord", _quote(spec.main_verb_word))
        out.leaf("MainVerbSemanticRole", spec.role.value)
        out.leaf("DiscourseContext", spec.discourse_context.value)
        if spec.trailing_connective:
            out.leaf("TrailingConnectiveWord", _quote(spec.trailing_connective))
        out.close()

    for argument in pe.entity_arguments:
        out.open("EntityArgumentSpecifier")
        for designator in argument.entity_designators:
            out.open("EntityDesignator")
            if designator.noun_phrase is not None:
                _emit_noun_phrase(out, designator.noun_phrase)
            if designator.prepositional_complement is not None:
                _emit_prepositional(out, "PrepositionalPhraseComplement", designator.prepositional_complement)
            if designator.trailing_connective:
                out.leaf("TrailingConnectiveWord", _quote(designator.trailing_connective))
            out.close()
        if argument.nested_pe is not None:
            _emit_pe(out, argument.nested_pe)
        out.leaf("EntityArgumentSemanticRole", argument.semantic_role.value)
        if argument.extra_sub_role is not None:
            out.leaf("ExtraSubRole", argument.extra_sub_role.value)
        out.leaf("SyntacticRole", argument.syntactic_role.value)
        out.leaf("PredicateOrdinal", str(argument.predicate_ordinal))
        out.close()

    for attributive in pe.attributive_arguments:
        out.open("AttributiveArgumentSpecifier")
        out.leaf("AttributiveRole", attributive.role.value)
        for designator in attributive.attribute_designators:
            out.open("AttributeDesignator")
            if designator.degree_word:
                out.leaf("DegreeWord", _quote(designator.degree_word))
            out.leaf("AdjectiveWord", _quote(designator.adjective_word))
            out.close()
        out.leaf("PredicateOrdinal", str(attributive.predicate_ordinal))
        out.close()

    for modifier in pe.modification_specifiers:
        out.open("ModificationSpecifier")
        if modifier.adverbial_phrase:
            out.leaf("AdverbialPhrase", _quote(modifier.adverbial_phrase))
        if modifier.adverbial_expression is not None:
            out.open("AdverbialExpression")
            out.leaf("AdverbPhraseIntroductoryWord", _quote(modifier.adverbial_expression.introducer))
            _emit_pe(out, modifier.adverbial_expression.predicate_expression)
            out.close()
        if modifier.nested_pe is not None:
            _emit_pe(out, modifier.nested_pe)
        out.leaf("SyntacticPosition", modifier.syntactic_position.value)
        out.leaf("PredicateOrdinal", str(modifier.predicate_ordinal))
        out.close()

    if root and pe.pe_pointer_order:
        paths = _paths_by_id(pe)
        out.leaf("PointerOrder", *(paths.get(id(item), "Self") for item in pe.pe_pointer_order))
    out.close()


def _paths_by_id(root: PredicateExpression) -> Dict[int, str]:
    paths = {id(root): "Self"}

    def visit(pe: PredicateExpression, prefix: str) -> None:
        for index, modifier in enumerate(pe.modification_specifiers):
            if modifier.nested is not None:
                path = f"{prefix}Modifier[{index}]"
                paths[id(modifier.nested)] = path
                visit(modifier.nested, path + ".")
        for index, argument in enumerate(pe.entity_arguments):
            if argument.nested_pe is not None:
                path = f"{prefix}Argument[{index}]"
                paths[id(argument.nested_pe)] = path
                visit(argument.nested_pe, path + ".")

    visit(root, "")
    return paths


def serialize_snf(pe: PredicateExpression) -> str:
    """Render a root PE (and its nested PEs) in block notation"""
    out = _Emitter()
    _emit_pe(out, pe, root=True)
    return "\n".join(out.lines) + "\n"


# --- parsing ------------------------------------------------------------------


def _build_grammar() -> pp.ParserElement:
    lbrace, rbrace = pp.Suppress("{"), pp.Suppress("}")
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    name = pp.Word(pp.alphas, pp.alphanums + "_")
    string = pp.QuotedString('"', esc_char="\\")
    integer = pp.Regex(r"-?\d+").set_parse_action(lambda t: int(t[0]))
    path = pp.Regex(r"(Self|(Modifier|Argument)\[\d+\](\.(Modifier|Argument)\[\d+\])*)(?![\w\[])")
    path.set_parse_action(lambda t: PathRef(t[0]))
    atom = string | integer | path | name

    def make_leaf(source: str, loc: int, toks: pp.ParseResults) -> Leaf:
        return Leaf(toks[0], list(toks[1:]), pp.lineno(loc, source), pp.col(loc, source))

    def make_block(source: str, loc: int, toks: pp.ParseResults) -> Block:
        block = Block(toks[0], pp.lineno(loc, source), pp.col(loc, source))
        block.items.extend(toks[1:])
        return block

    block = pp.Forward()
    leaf = (name + lpar + pp.ZeroOrMore(atom) + rpar).set_parse_action(make_leaf)
    block <<= (name + lbrace + pp.ZeroOrMore(leaf | block) + rbrace).set_parse_action(make_block)
    block.ignore(pp.dbl_slash_comment)
    return block


SNF_GRAMMAR = _build_grammar()


def _error(node: Union[Block, Leaf], message: str) -> SnfSyntaxError:
    return SnfSyntaxError(message, node.line, node.column)


def _one(leaf: Leaf, kind: type) -> Union[str, int]:
    if len(leaf.values) != 1 or not isinstance(leaf.values[0], kind):
        raise _error(leaf, f"{leaf.name} expects one {kind.__name__} value")
    return leaf.values[0]


def _enum(leaf: Leaf, enum_type: type):
    raw = _one(leaf, str)
    try:
        return enum_type(raw)
    except ValueError as e:
        raise _error(leaf, f"'{raw}' is not a {enum_type.__name__}") from e


def _dispatch(block: Block, handlers: Dict[str, Callable]) -> None:
    for item in block.items:
        handler = handlers.get(item.name)
        if handler is None:
            raise _error(item, f"unexpected '{item.name}' inside {block.name}")
        handler(item)


def _expect_block(item: Union[Block, Leaf]) -> Block:
    if not isinstance(item, Block):
        raise _error(item, f"{item.name} must be a block")
    return item


def _expect_leaf(item: Union[Block, Leaf]) -> Leaf:
    if not isinstance(item, Leaf):
        raise _error(item, f"{item.name} must be a leaf")
    return item


class _SnfBuilder:
    def noun_phrase(self, block: Block) -> NounPhrase:
        np = NounPhrase(head_words=[])

        def head(item):
            leaf = _expect_leaf(item)
            if not leaf.values or not isinstance(leaf.values[0], str):
                raise _error(leaf, "NounHeadWord expects a word")
            kind = HeadWordKind(leaf.values[1]) if len(leaf.values) > 1 else HeadWordKind.COMMON_NOUN
            np.head_words.append(HeadWord(leaf.values[0], kind))

        _dispatch(
            block,
            {
                "Specifier": lambda item: np.specifiers.append(_one(_expect_leaf(item), str)),
                "Qualifier": lambda item: np.qualifiers.append(_one(_expect_leaf(item), str)),
                "NounHeadWord": head,
                "PostnominalModifier": lambda item: np.postnominal_modifiers.append(self.prepositional(_expect_block(item))),
            },
        )
        if not np.head_words:
            raise _error(block, "NounPhrase needs a NounHeadWord")
        return np

    def prepositional(self, block: Block) -> PrepositionalPhrase:
        parts: Dict[str, object] = {}
        _dispatch(
            block,
            {
                "Preposition": lambda item: parts.__setitem__("preposition", _one(_expect_leaf(item), str)),
                "NounPhrase": lambda item: parts.__setitem__("np", self.noun_phrase(_expect_block(item))),
                "PredicateExpression": lambda item: parts.__setitem__("pe", self.predicate_expression(_expect_block(item))),
            },
        )
        if "preposition" not in parts or "np" not in parts:
            raise _error(block, f"{block.name} needs Preposition and NounPhrase")
        return PrepositionalPhrase(parts["preposition"], parts["np"], parts.get("pe"))

    def designator(self, block: Block) -> EntityDesignator:
        designator = EntityDesignator()
        _dispatch(
            block,
            {
                "NounPhrase": lambda item: setattr(designator, "noun_phrase", self.noun_phrase(_expect_block(item))),
                "PrepositionalPhraseComplement": lambda item: setattr(
                    designator, "prepositional_complement", self.prepositional(_expect_block(item))
                ),
                "TrailingConnectiveWord": lambda item: setattr(designator, "trailing_connective", _one(_expect_leaf(item), str)),
            },
        )
        return designator

    def entity_argument(self, block: Block) -> EntityArgumentSpecifier:
        argument = EntityArgumentSpecifier(semantic_role=SemanticRole.ACTOR)
        _dispatch(
            block,
            {
                "EntityDesignator": lambda item: argument.entity_designators.append(self.designator(_expect_block(item))),
                "PredicateExpression": lambda item: setattr(argument, "nested_pe", self.predicate_expression(_expect_block(item))),
                "EntityArgumentSemanticRole": lambda item: setattr(argument, "semantic_role", _enum(_expect_leaf(item), SemanticRole)),
                "ExtraSubRole": lambda item: setattr(argument, "extra_sub_role", _enum(_expect_leaf(item), ExtraSubRole)),
                "SyntacticRole": lambda item: setattr(argument, "syntactic_role", _enum(_expect_leaf(item), SyntacticRole)),
                "PredicateOrdinal": lambda item: setattr(argument, "predicate_ordinal", _one(_expect_leaf(item), int)),
            },
        )
        return argument

    def attributive(self, block: Block) -> AttributiveArgumentSpecifier:
        attributive = AttributiveArgumentSpecifier(role=AttributiveRole.ATTRIBUTE)

        def designator(item):
            inner = _expect_block(item)
            parts: Dict[str, str] = {}
            _dispatch(
                inner,
                {
                    "DegreeWord": lambda leaf: parts.__setitem__("degree", _one(_expect_leaf(leaf), str)),
                    "AdjectiveWord": lambda leaf: parts.__setitem__("adjective", _one(_expect_leaf(leaf), str)),
                },
            )
            if "adjective" not in parts:
                raise _error(inner, "AttributeDesignator needs an AdjectiveWord")
            attributive.attribute_designators.append(AttributeDesignator(parts["adjective"], parts.get("degree")))

        _dispatch(
            block,
            {
                "AttributiveRole": lambda item: setattr(attributive, "role", _enum(_expect_leaf(item), AttributiveRole)),
                "AttributeDesignator": designator,
                "PredicateOrdinal": lambda item: setattr(attributive, "predicate_ordinal", _one(_expect_leaf(item), int)),
            },
        )
        return attributive

    def modifier(self, block: Block) -> ModificationSpecifier:
        modifier = ModificationSpecifier(syntactic_position=SyntacticPosition.FINAL)

        def expression(item):
            inner = _expect_block(item)
            parts: Dict[str, object] = {}
            _dispatch(
                inner,
                {
                    "AdverbPhraseIntroductoryWord": lambda leaf: parts.__setitem__("introducer", _one(_expect_leaf(leaf), str)),
                    "PredicateExpression": lambda pe: parts.__setitem__("pe", self.predicate_expression(_expect_block(pe))),
                },
            )
            if "introducer" not in parts or "pe" not in parts:
                raise _error(inner, "AdverbialExpression needs an introducer and a PredicateExpression")
            modifier.adverbial_expression = AdverbialExpression(parts["introducer"], parts["pe"])

        _dispatch(
            block,
            {
                "AdverbialPhrase": lambda item: setattr(modifier, "adverbial_phrase", _one(_expect_leaf(item), str)),
                "AdverbialExpression": expression,
                "PredicateExpression": lambda item: setattr(modifier, "nested_pe", self.predicate_expression(_expect_block(item))),
                "SyntacticPosition": lambda item: setattr(modifier, "syntactic_position", _enum(_expect_leaf(item), SyntacticPosition)),
                "PredicateOrdinal": lambda item: setattr(modifier, "predicate_ordinal", _one(_expect_leaf(item), int)),
            },
        )
        return modifier

    def specifier(self, block: Block) -> PredicateSpecifier:
        fields: Dict[str, object] = {}
        _dispatch(
            block,
            {
                "Ordinal": lambda item: fields.__setitem__("ordinal", _one(_expect_leaf(item), int)),
                "MainVerbWord": lambda item: fields.__setitem__("main_verb_word", _one(_expect_leaf(item), str)),
                "MainVerbSemanticRole": lambda item: fields.__setitem__("role", _enum(_expect_leaf(item), PredicateSpecifierRole)),
                "DiscourseContext": lambda item: fields.__setitem__("discourse_context", _enum(_expect_leaf(item), DiscourseContext)),
                "TrailingConnectiveWord": lambda item: fields.__setitem__("trailing_connective", _one(_expect_leaf(item), str)),
            },
        )
        missing = {"main_verb_word", "role", "discourse_context"} - set(fields)
        if missing:
            raise _error(block, f"PredicateSpecifier missing {', '.join(sorted(missing))}")
        fields.setdefault("ordinal", 0)
        return PredicateSpecifier(**fields)

    def predicate_expression(self, block: Block) -> PredicateExpression:
        if block.name != "PredicateExpression":
            raise _error(block, f"expected PredicateExpression, found {block.name}")
        pe = PredicateExpression()
        pointer_paths: List[PathRef] = []

        def pointer_order(item):
            leaf = _expect_leaf(item)
            for value in leaf.values:
                if not isinstance(value, PathRef):
                    raise _error(leaf, f"'{value}' is not a pointer path")
                pointer_paths.append(value)

        _dispatch(
            block,
            {
                "GrammaticalMood": lambda item: setattr(pe, "grammatical_mood", _enum(_expect_leaf(item), GrammaticalMood)),
                "IntroductoryWord": lambda item: setattr(pe, "introductory_word", _one(_expect_leaf(item), str)),
                "PredicateSpecifier": lambda item: pe.predicate_specifiers.append(self.specifier(_expect_block(item))),
                "EntityArgumentSpecifier": lambda item: pe.entity_arguments.append(self.entity_argument(_expect_block(item))),
                "AttributiveArgumentSpecifier": lambda item: pe.attributive_arguments.append(self.attributive(_expect_block(item))),
                "ModificationSpecifier": lambda item: pe.modification_specifiers.append(self.modifier(_expect_block(item))),
                "PointerOrder": pointer_order,
            },
        )
        if pointer_paths:
            pe.pe_pointer_order = [_follow(pe, ref, block) for ref in pointer_paths]
        return pe


def _follow(root: PredicateExpression, ref: PathRef, block: Block) -> PredicateExpression:
    if ref.text == "Self":
        return root
    current = root
    for kind, index in PATH_STEP.findall(ref.text):
        position = int(index)
        try:
            if kind == "Modifier":
                target = current.modification_specifiers[position].nested
            else:
                target = current.entity_arguments[position].nested_pe
        except IndexError:
            target = None
        if target is None:
            raise _error(block, f"pointer path {ref.text} does not name a nested PE")
        current = target
    return current


def parse_snf(text: str) -> PredicateExpression:
    """
    Parse block notation back into a PredicateExpression.

    Raises:
        SnfSyntaxError: malformed text, with line and column
    """
    try:
        root = SNF_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise SnfSyntaxError(f"malformed SNF: {e.msg}", e.lineno, e.col) from e
    return _SnfBuilder().predicate_expression(root)


def load_snf(path: str) -> Optional[PredicateExpression]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_snf(f.read())
