"""
pyparsing grammar for Star source text.

The grammar is generic: every construct becomes a ``StarNode`` (keyword,
optional label, properties, child nodes, value lists). Deciding which
keywords are meaningful is left to ``src.ontology.parser``.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import pyparsing as pp

from src.ontology.model import Diagnostic


@dataclass
class ExprToken:
    """``(a$+1)`` or a bare symbol used in expr position"""

    symbol: str
    offset: int = 0


Token = Union[str, float, ExprToken]


@dataclass
class StrayRun:
    """A run of closing brackets or semicolons between definitions"""

    text: str
    line: int
    column: int


@dataclass
class StarProperty:
    """``<Key attr = token ... />``"""

    key: str
    attrs: List[Tuple[str, Token]]
    line: int
    column: int

    def get(self, name: str) -> Optional[Token]:
        for attr, value in self.attrs:
            if attr == name:
                return value
        return None


@dataclass
class StarValue:
    """One entry of a ``{ ... }`` list, optionally carrying a dictionary element"""

    text: str
    dictionary: Optional["StarNode"] = None


@dataclass
class StarNode:
    keyword: str
    label: Optional[str]
    line: int
    column: int
    properties: List[StarProperty] = field(default_factory=list)
    children: List["StarNode"] = field(default_factory=list)
    values: List[StarValue] = field(default_factory=list)

    def child(self, keyword: str) -> Optional["StarNode"]:
        for node in self.children:
            if node.keyword == keyword:
                return node
        return None

    def property(self, key: str) -> Optional[StarProperty]:
        for prop in self.properties:
            if prop.key == key:
                return prop
        return None

    def all_values(self) -> List[StarValue]:
        """Values of this node and of every descendant, in document order"""
        found = list(self.values)
        for node in self.children:
            found.extend(node.all_values())
        return found


def _position(source: str, loc: int) -> Tuple[int, int]:
    return pp.lineno(loc, source), pp.col(loc, source)


def _build_grammar() -> pp.ParserElement:
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    lbrace, rbrace = pp.Suppress("{"), pp.Suppress("}")
    semi, comma = pp.Literal(";"), pp.Literal(",")

    string = pp.QuotedString('"', esc_char="\\")
    ident = pp.Word(pp.alphas + "_", pp.alphanums + "_$")
    number = pp.Regex(r"[+-]?\d+(\.\d+)?").set_parse_action(lambda t: float(t[0]))

    expr = (lpar + ident + pp.one_of("+ -") + pp.Regex(r"\d+") + rpar).set_parse_action(
        lambda t: ExprToken(t[0], int(t[2]) * (1 if t[1] == "+" else -1))
    )
    token = string | expr | number | ident
    attr = pp.Group(ident + pp.Suppress("=") + token)

    def make_property(source: str, loc: int, toks: pp.ParseResults) -> StarProperty:
        line, column = _position(source, loc)
        return StarProperty(toks[0], [(a[0], a[1]) for a in toks[1:]], line, column)

    prop = (pp.Suppress("<") + ident + pp.OneOrMore(attr) + pp.Suppress("/>")).set_parse_action(make_property)

    element = pp.Forward()
    value = pp.Group(string("text") + pp.Optional(pp.Suppress(":") + element("dictionary")))
    value.set_parse_action(lambda t: StarValue(t[0].text, t[0].get("dictionary")))
    value_list = pp.Group(lbrace + pp.ZeroOrMore(value | pp.Suppress(semi | comma)) + rbrace)

    body = pp.ZeroOrMore(prop | element | value_list | pp.Suppress(semi | comma))

    def make_element(source: str, loc: int, toks: pp.ParseResults) -> StarNode:
        line, column = _position(source, loc)
        node = StarNode(toks.keyword, toks.get("label"), line, column)
        for item in toks.body:
            if isinstance(item, StarProperty):
                node.properties.append(item)
            elif isinstance(item, StarNode):
                node.children.append(item)
            else:
                node.values.extend(item)
        return node

    element <<= (
        (ident | string)("keyword") + pp.Optional(string)("label") + lpar + pp.Group(body)("body") + rpar
    ).set_parse_action(make_element)

    def make_stray(source: str, loc: int, toks: pp.ParseResults) -> StrayRun:
        line, column = _position(source, loc)
        return StrayRun("".join(toks[0].split()), line, column)

    stray = pp.Regex(r"[);](?:[\s);]*[);])?").set_parse_action(make_stray)
    grammar = pp.ZeroOrMore(element | stray)
    grammar.ignore(pp.dbl_slash_comment)
    return grammar


STAR_GRAMMAR = _build_grammar()


def scan(source: str) -> Tuple[List[StarNode], List[Diagnostic]]:
    """
    Parse source text into top-level nodes.

    A single ``;`` after a definition is the normal terminator. Any other run of
    ``)``/``;`` between definitions is absorbed and reported as a diagnostic.

    Raises:
        pyparsing.ParseException: on structure the grammar cannot absorb
    """
    nodes: List[StarNode] = []
    diagnostics: List[Diagnostic] = []
    previous_was_node = False
    for item in STAR_GRAMMAR.parse_string(source, parse_all=True):
        if isinstance(item, StarNode):
            nodes.append(item)
            previous_was_node = True
            continue
        if not (previous_was_node and item.text == ";"):
            diagnostics.append(Diagnostic(item.line, item.column, f"absorbed unbalanced '{item.text}' between definitions"))
        previous_was_node = False
    return nodes, diagnostics


def render_token(token: Token) -> str:
    if isinstance(token, ExprToken):
        if token.offset == 0:
            return token.symbol
        sign = "+" if token.offset > 0 else "-"
        return f"({token.symbol}{sign}{abs(token.offset)})"
    if isinstance(token, float):
        return f"{token:g}"
    return f'"{token}"'


def render_body(node: StarNode) -> str:
    """Canonical one-line text of a node body; stable under re-parsing"""
    parts: List[str] = []
    for prop in node.properties:
        attrs = " ".join(f"{name} = {render_token(value)}" for name, value in prop.attrs)
        parts.append(f"<{prop.key} {attrs} />")
    for child in node.children:
        label = f' "{child.label}"' if child.label else ""
        keyword = child.keyword if child.keyword.isidentifier() else f'"{child.keyword}"'
        parts.append(f"{keyword}{label} ( {render_body(child)} );")
    if node.values:
        parts.append("{ " + ", ".join(_render_value(v) for v in node.values) + " }")
    return " ".join(parts)


def _render_value(value: StarValue) -> str:
    if value.dictionary is None:
        return f'"{value.text}"'
    return f'"{value.text}" : {value.dictionary.keyword} ( {render_body(value.dictionary)} )'
