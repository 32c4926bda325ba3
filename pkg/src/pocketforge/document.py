"""Single-page HTML artifact model: parse, serialize, validate.

The grammar is a deliberately small HTML subset: elements, attributes,
text, comments, an optional doctype, and only the five named character
references (&amp; &lt; &gt; &quot; &apos;). ``script`` and ``style``
contents are opaque raw text. Input outside the subset never raises;
it falls back to the raw text so downstream feedback keeps working
mid-edit.

Serialization has one canonical normal form: lowercase tag and attribute
names, double-quoted attribute values, and no self-closing slash on void
elements. Parsing the serializer's output and serializing again is
byte-identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

VOID_ELEMENTS = frozenset({
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
})

RAW_TEXT_ELEMENTS = frozenset({"script", "style"})

_NAMED_ENTITIES = {"amp": "&", "lt": "<", "gt": ">", "quot": '"', "apos": "'"}

_ENTITY_RE = re.compile(r"&(amp|lt|gt|quot|apos);")
_TAG_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9-]*")
_ATTR_NAME_RE = re.compile(r"[a-zA-Z_:][a-zA-Z0-9_:.-]*")
_UNQUOTED_VALUE_RE = re.compile(r"[^\s\"'=<>`]+")
_DOCTYPE_RE = re.compile(r"<!DOCTYPE\s+([a-zA-Z][a-zA-Z0-9]*)\s*>", re.IGNORECASE)
_CLOSE_TAG_RE = re.compile(r"</([a-zA-Z][a-zA-Z0-9-]*)\s*>")


@dataclass
class Text:
    text: str


@dataclass
class Comment:
    text: str


@dataclass
class Element:
    tag: str
    attrs: list[tuple[str, str]] = field(default_factory=list)
    children: list["Node"] = field(default_factory=list)

    def attr(self, name: str) -> str | None:
        for key, value in self.attrs:
            if key == name:
                return value
        return None

    def find(self, tag: str) -> "Element | None":
        """First element with the given tag, depth-first, self included."""
        for element in self.iter_elements():
            if element.tag == tag:
                return element
        return None

    def iter_elements(self) -> Iterator["Element"]:
        yield self
        for child in self.children:
            if isinstance(child, Element):
                yield from child.iter_elements()

    def text_content(self) -> str:
        parts = []
        for child in self.children:
            if isinstance(child, Text):
                parts.append(child.text)
            elif isinstance(child, Element):
                parts.append(child.text_content())
        return "".join(parts)


Node = Union[Element, Text, Comment]


@dataclass
class Document:
    children: list[Node] = field(default_factory=list)
    doctype: str | None = None

    @property
    def root(self) -> Element | None:
        """The single top-level element, if there is exactly one."""
        elements = [c for c in self.children if isinstance(c, Element)]
        return elements[0] if len(elements) == 1 else None

    def iter_elements(self) -> Iterator[Element]:
        for child in self.children:
            if isinstance(child, Element):
                yield from child.iter_elements()

    def find(self, tag: str) -> Element | None:
        for element in self.iter_elements():
            if element.tag == tag:
                return element
        return None


@dataclass
class Diagnostic:
    position: int
    message: str


@dataclass
class ParseResult:
    document: Document | None
    raw: str | None
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return self.document is not None


class _ParseError(Exception):
    def __init__(self, position: int, message: str):
        super().__init__(message)
        self.position = position
        self.message = message


def parse_html(text: str) -> ParseResult:
    """Parse ``text`` against the HTML subset.

    Never raises: malformed input yields a ``raw_fallback`` result that
    preserves the input byte-for-byte, with at least one diagnostic.
    """
    try:
        document = _Parser(text).parse()
    except _ParseError as err:
        return ParseResult(None, text, [Diagnostic(err.position, err.message)])
    return ParseResult(document, None, [])


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.n = len(text)

    def parse(self) -> Document:
        doctype: str | None = None
        top: list[Node] = []
        # Open-element stack: (element, children list it will receive).
        stack: list[Element] = []
        seen_content = False

        while self.pos < self.n:
            if self.text[self.pos] != "<":
                node = self._read_text()
                if node.text.strip():
                    seen_content = True
                self._append(top, stack, node)
                continue

            if self.text.startswith("<!--", self.pos):
                self._append(top, stack, self._read_comment())
                seen_content = True
            elif self.text.startswith("<!", self.pos):
                if seen_content or doctype is not None or stack:
                    raise _ParseError(self.pos, "doctype allowed only at document start")
                doctype = self._read_doctype()
            elif self.text.startswith("</", self.pos):
                self._read_close_tag(stack)
            else:
                element, closed = self._read_open_tag()
                seen_content = True
                self._append(top, stack, element)
                if element.tag in RAW_TEXT_ELEMENTS:
                    self._read_raw_content(element)
                elif not closed:
                    stack.append(element)

        if stack:
            raise _ParseError(self.n, f"unclosed element <{stack[-1].tag}>")
        return Document(children=top, doctype=doctype)

    @staticmethod
    def _append(top: list[Node], stack: list[Element], node: Node) -> None:
        if stack:
            stack[-1].children.append(node)
        else:
            top.append(node)

    def _read_text(self) -> Text:
        start = self.pos
        end = self.text.find("<", self.pos)
        if end == -1:
            end = self.n
        raw = self.text[start:end]
        self.pos = end
        return Text(self._decode(raw, start))

    def _decode(self, raw: str, base: int) -> str:
        if "&" not in raw:
            return raw
        out = []
        i = 0
        while True:
            j = raw.find("&", i)
            if j == -1:
                out.append(raw[i:])
                return "".join(out)
            out.append(raw[i:j])
            match = _ENTITY_RE.match(raw, j)
            if not match:
                raise _ParseError(base + j, "bare '&' is not part of a named character reference")
            out.append(_NAMED_ENTITIES[match.group(1)])
            i = match.end()

    def _read_comment(self) -> Comment:
        start = self.pos
        end = self.text.find("-->", self.pos + 4)
        if end == -1:
            raise _ParseError(start, "unterminated comment")
        body = self.text[self.pos + 4 : end]
        self.pos = end + 3
        return Comment(body)

    def _read_doctype(self) -> str:
        match = _DOCTYPE_RE.match(self.text, self.pos)
        if not match:
            raise _ParseError(self.pos, "malformed markup declaration")
        self.pos = match.end()
        return match.group(1).lower()

    def _read_close_tag(self, stack: list[Element]) -> None:
        start = self.pos
        match = _CLOSE_TAG_RE.match(self.text, self.pos)
        if not match:
            raise _ParseError(start, "malformed close tag")
        tag = match.group(1).lower()
        if not stack:
            raise _ParseError(start, f"close tag </{tag}> without open element")
        if stack[-1].tag != tag:
            raise _ParseError(start, f"close tag </{tag}> does not match open <{stack[-1].tag}>")
        stack.pop()
        self.pos = match.end()

    def _read_open_tag(self) -> tuple[Element, bool]:
        start = self.pos
        match = _TAG_NAME_RE.match(self.text, self.pos + 1)
        if not match:
            raise _ParseError(start, "'<' does not start a valid tag")
        tag = match.group(0).lower()
        self.pos = match.end()

        attrs: list[tuple[str, str]] = []
        names: set[str] = set()
        self_closed = False
        while True:
            self._skip_ws()
            if self.pos >= self.n:
                raise _ParseError(start, f"unterminated open tag <{tag}>")
            ch = self.text[self.pos]
            if ch == ">":
                self.pos += 1
                break
            if ch == "/":
                if not self.text.startswith("/>", self.pos):
                    raise _ParseError(self.pos, "stray '/' in open tag")
                if tag not in VOID_ELEMENTS:
                    raise _ParseError(self.pos, f"self-closing syntax on non-void element <{tag}>")
                self.pos += 2
                self_closed = True
                break
            name, value = self._read_attr()
            if name in names:
                raise _ParseError(self.pos, f"duplicate attribute '{name}' on <{tag}>")
            names.add(name)
            attrs.append((name, value))

        return Element(tag, attrs), self_closed or tag in VOID_ELEMENTS

    def _read_attr(self) -> tuple[str, str]:
        match = _ATTR_NAME_RE.match(self.text, self.pos)
        if not match:
            raise _ParseError(self.pos, "malformed attribute name")
        name = match.group(0).lower()
        self.pos = match.end()
        self._skip_ws()
        if self.pos >= self.n or self.text[self.pos] != "=":
            return name, ""
        self.pos += 1
        self._skip_ws()
        if self.pos >= self.n:
            raise _ParseError(self.pos, f"missing value for attribute '{name}'")
        quote = self.text[self.pos]
        if quote in ('"', "'"):
            end = self.text.find(quote, self.pos + 1)
            if end == -1:
                raise _ParseError(self.pos, f"unterminated attribute value for '{name}'")
            raw = self.text[self.pos + 1 : end]
            value = self._decode(raw, self.pos + 1)
            self.pos = end + 1
            return name, value
        match = _UNQUOTED_VALUE_RE.match(self.text, self.pos)
        if not match:
            raise _ParseError(self.pos, f"malformed value for attribute '{name}'")
        value = self._decode(match.group(0), self.pos)
        self.pos = match.end()
        return name, value

    def _read_raw_content(self, element: Element) -> None:
        close = re.compile(rf"</{element.tag}\s*>", re.IGNORECASE)
        match = close.search(self.text, self.pos)
        if not match:
            raise _ParseError(self.pos, f"unclosed raw-text element <{element.tag}>")
        raw = self.text[self.pos : match.start()]
        if raw:
            element.children.append(Text(raw))
        self.pos = match.end()

    def _skip_ws(self) -> None:
        while self.pos < self.n and self.text[self.pos] in " \t\r\n\f":
            self.pos += 1


_TEXT_ESCAPES = str.maketrans({"&": "&amp;", "<": "&lt;", ">": "&gt;"})
_ATTR_ESCAPES = str.maketrans({"&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;"})


def serialize(doc: Document) -> str:
    """Render ``doc`` in the canonical normal form.

    Raises ValueError for trees the normal form cannot represent
    losslessly (children on void elements, markup-like raw text).
    """
    out: list[str] = []
    if doc.doctype is not None:
        out.append(f"<!DOCTYPE {doc.doctype}>")
    for node in doc.children:
        _serialize_node(node, out)
    return "".join(out)


def _serialize_node(node: Node, out: list[str]) -> None:
    if isinstance(node, Text):
        out.append(node.text.translate(_TEXT_ESCAPES))
        return
    if isinstance(node, Comment):
        if "-->" in node.text:
            raise ValueError("comment text may not contain '-->'")
        out.append(f"<!--{node.text}-->")
        return
    tag = node.tag
    if not tag or not _TAG_NAME_RE.fullmatch(tag) or tag != tag.lower():
        raise ValueError(f"invalid tag name {tag!r}")
    out.append(f"<{tag}")
    seen: set[str] = set()
    for name, value in node.attrs:
        if not _ATTR_NAME_RE.fullmatch(name) or name != name.lower():
            raise ValueError(f"invalid attribute name {name!r}")
        if name in seen:
            raise ValueError(f"duplicate attribute {name!r} on <{tag}>")
        seen.add(name)
        out.append(f' {name}="{value.translate(_ATTR_ESCAPES)}"')
    out.append(">")
    if tag in VOID_ELEMENTS:
        if node.children:
            raise ValueError(f"void element <{tag}> may not have children")
        return
    if tag in RAW_TEXT_ELEMENTS:
        for child in node.children:
            if not isinstance(child, Text):
                raise ValueError(f"<{tag}> may contain only raw text")
            if re.search(rf"</{tag}\s*>", child.text, re.IGNORECASE):
                raise ValueError(f"raw text inside <{tag}> may not contain its close tag")
            out.append(child.text)
    else:
        for child in node.children:
            _serialize_node(child, out)
    out.append(f"</{tag}>")


_EMBEDDING_TAGS = frozenset({"frame", "frameset", "iframe"})


def validate_document(doc: Document) -> list[Diagnostic]:
    """Check the single-page constraint.

    One page per project: at most one html root and no frame elements
    embedding other pages. An empty list means compliant.
    """
    diagnostics: list[Diagnostic] = []
    html_count = sum(1 for el in doc.iter_elements() if el.tag == "html")
    if html_count > 1:
        diagnostics.append(Diagnostic(0, f"multiple html roots ({html_count}); a project is one page"))
    for element in doc.iter_elements():
        if element.tag in _EMBEDDING_TAGS:
            diagnostics.append(Diagnostic(0, f"<{element.tag}> embeds another page"))
    return diagnostics
