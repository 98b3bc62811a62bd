"""Parse Python 2.7 source into syntax trees and compare trees.

The concrete syntax comes from the tree-sitter Python grammar; this module
lowers it into :mod:`nodes` trees with comments and surface formatting
dropped. Constructs that only exist in Python 3 are rejected.
"""

import io
import logging
import re
import tokenize
import unicodedata
from typing import List, Optional, Tuple, Union

import tree_sitter_python as tspython
from tree_sitter import Language, Node, Parser

from .errors import ParseFailure
from .nodes import (
    OMITTED,
    ExpressionNode,
    ModuleTree,
    StatementNode,
    literal_node,
    name_node,
)
from .unparse import render_source, unparse_canonical, unparse_expression, unparse_header

logger = logging.getLogger(__name__)

PY_LANGUAGE = Language(tspython.language())

_EXTRAS = frozenset({"comment", "line_continuation"})

_PY3_ONLY = {
    "nonlocal_statement": "nonlocal statement",
    "match_statement": "match statement",
    "type_alias_statement": "type alias",
    "await": "await expression",
    "named_expression": "assignment expression",
    "typed_parameter": "parameter annotation",
    "typed_default_parameter": "parameter annotation",
    "keyword_separator": "keyword-only parameter marker",
    "positional_separator": "positional-only parameter marker",
    "list_splat_pattern": "starred target",
    "list_splat": "unpacking in a display",
    "dictionary_splat": "unpacking in a display",
    "except_group_clause": "except* clause",
    "interpolation": "f-string",
    "type": "annotation",
}

_STRING_START = re.compile(r"([A-Za-z]*)('''|\"\"\"|'|\")")
_ESCAPE = re.compile(
    r"\\(x[0-9a-fA-F]{0,2}|u[0-9a-fA-F]{0,4}|U[0-9a-fA-F]{0,8}|N\{[^}]*\}|[0-7]{1,3}|.)",
    re.DOTALL,
)
_RAW_UNICODE_ESCAPE = re.compile(r"(\\+)(u[0-9a-fA-F]{4}|U[0-9a-fA-F]{8})")
_SIMPLE_ESCAPES = {
    "\n": "",
    "\\": "\\",
    "'": "'",
    '"': '"',
    "a": "\a",
    "b": "\b",
    "f": "\f",
    "n": "\n",
    "r": "\r",
    "t": "\t",
    "v": "\v",
}


def _text(node: Node) -> str:
    return node.text.decode("utf-8")


def _line(node: Node) -> int:
    return node.start_point[0] + 1


def _children(node: Node) -> List[Node]:
    return [child for child in node.children if child.type not in _EXTRAS]


def _named(node: Node) -> List[Node]:
    return [child for child in node.children if child.is_named and child.type not in _EXTRAS]


def _first_error(node: Node) -> Optional[Node]:
    if node.type == "ERROR" or node.is_missing:
        return node
    for child in node.children:
        if child.has_error or child.is_missing:
            found = _first_error(child)
            if found is not None:
                return found
    return None


def _decode_escapes(body: str, unicode: bool) -> Union[str, bytes]:
    """Python 2 escape processing for a non-raw literal body."""
    pieces: List[Union[str, bytes]] = []
    position = 0
    for match in _ESCAPE.finditer(body):
        pieces.append(body[position:match.start()])
        position = match.end()
        escape = match.group(1)
        head = escape[0]
        if escape in _SIMPLE_ESCAPES:
            pieces.append(_SIMPLE_ESCAPES[escape])
        elif head == "x":
            if len(escape) != 3:
                raise ValueError("invalid \\x escape")
            pieces.append(chr(int(escape[1:], 16)) if unicode else bytes([int(escape[1:], 16)]))
        elif head in "01234567":
            code = int(escape, 8)
            pieces.append(chr(code) if unicode else bytes([code & 0xFF]))
        elif unicode and head in "uU":
            width = 4 if head == "u" else 8
            if len(escape) != width + 1:
                raise ValueError(f"truncated \\{head} escape")
            code = int(escape[1:], 16)
            if code > 0x10FFFF:
                raise ValueError("illegal Unicode character")
            pieces.append(chr(code))
        elif unicode and head == "N":
            pieces.append(unicodedata.lookup(escape[2:-1]))
        else:
            pieces.append("\\" + escape)
    pieces.append(body[position:])
    if unicode:
        return "".join(pieces)
    return b"".join(p if isinstance(p, bytes) else p.encode("utf-8") for p in pieces)


def _raw_unicode(body: str) -> str:
    def replace(match: "re.Match[str]") -> str:
        slashes, escape = match.group(1), match.group(2)
        if len(slashes) % 2 == 0:
            return match.group(0)
        return slashes[:-1] + chr(int(escape[1:], 16))

    return _RAW_UNICODE_ESCAPE.sub(replace, body)


def decode_string_literal(text: str, unicode_literals: bool = False) -> Tuple[str, Union[str, bytes]]:
    """``(type, value)`` of one Python 2 string literal token.

    Plain and ``b`` literals are byte strings; ``u`` literals are unicode,
    including the ``ur`` prefix, which still expands ``\\u`` escapes.
    Under ``unicode_literals`` every literal without ``b`` is unicode.
    """
    match = _STRING_START.match(text)
    if match is None:
        raise ValueError("not a string literal")
    prefix, quote = match.group(1).lower(), match.group(2)
    if "f" in prefix:
        raise ValueError("f-string")
    if not set(prefix) <= {"u", "b", "r"} or ("u" in prefix and "b" in prefix):
        raise ValueError(f"invalid string prefix {match.group(1)!r}")
    body = text[match.end():len(text) - len(quote)]
    raw = "r" in prefix
    unicode = "u" in prefix or (unicode_literals and "b" not in prefix)
    if unicode:
        return "unicode", _raw_unicode(body) if raw else _decode_escapes(body, True)
    return "bytes", body.encode("utf-8") if raw else _decode_escapes(body, False)


def _number(text: str) -> ExpressionNode:
    lowered = text.lower()
    if "_" in lowered:
        raise ValueError("digit separators")
    if lowered.endswith("j"):
        return literal_node("imag", float(lowered[:-1]))
    if "." in lowered or ("e" in lowered and not lowered.startswith("0x")):
        return literal_node("float", float(lowered))
    type_name = "int"
    if lowered.endswith("l"):
        type_name, lowered = "long", lowered[:-1]
    if lowered.startswith("0x"):
        value = int(lowered[2:], 16)
    elif lowered.startswith("0o"):
        value = int(lowered[2:], 8)
    elif lowered.startswith("0b"):
        value = int(lowered[2:], 2)
    elif len(lowered) > 1 and lowered.startswith("0"):
        value = int(lowered, 8)
    else:
        value = int(lowered)
    return literal_node(type_name, value)


def _is_print_call(node: ExpressionNode) -> bool:
    if node.kind != "call" or len(node.operands) < 2:
        return False
    func, args = node.operands[0], node.operands[1:]
    if func != name_node("print"):
        return False
    return all(arg.kind not in ("keyword", "star-arg", "double-star-arg") for arg in args)


def _print_value(call: ExpressionNode, trailing_comma: bool) -> ExpressionNode:
    args = call.operands[1:]
    if len(args) == 1 and not trailing_comma:
        return args[0]
    return ExpressionNode("tuple", tuple(args))


def _is_exec_call(node: ExpressionNode) -> bool:
    if node.kind != "call" or not 2 <= len(node.operands) <= 4:
        return False
    func, args = node.operands[0], node.operands[1:]
    if func != name_node("exec"):
        return False
    return all(arg.kind not in ("keyword", "star-arg", "double-star-arg", "generator") for arg in args)


def _exec_operands(call: ExpressionNode) -> Tuple[ExpressionNode, ...]:
    args = call.operands[1:]
    # exec (code, globals) is the same statement as exec code in globals
    if len(args) == 1 and args[0].kind == "tuple" and len(args[0].operands) in (2, 3):
        return args[0].operands
    return args


def _call_trailing_comma(node: Node) -> bool:
    if node.type != "call":
        return False
    arguments = node.child_by_field_name("arguments")
    if arguments is None or arguments.type != "argument_list":
        return False
    parts = _children(arguments)
    return len(parts) >= 2 and parts[-2].type == ","


_EXEC_WORD = re.compile(r"\bexec\b")
_OPENERS = frozenset("([{")
_CLOSERS = frozenset(")]}")
_STATEMENT_ENDS = frozenset({tokenize.NEWLINE, tokenize.ENDMARKER})
_LAYOUT_TOKENS = frozenset({tokenize.NEWLINE, tokenize.INDENT, tokenize.DEDENT})


def _exec_as_calls(text: str) -> str:
    """Rewrite ``exec code in g, l`` statements as ``exec(code, g, l)``.

    The grammar only takes a string or a name after ``exec``; the call form
    takes any expression and lowers to the same exec statement. Sources the
    tokenizer rejects are returned unchanged.
    """
    if not _EXEC_WORD.search(text):
        return text
    try:
        tokens = [
            token
            for token in tokenize.generate_tokens(io.StringIO(text).readline)
            if token.type not in (tokenize.COMMENT, tokenize.NL)
        ]
    except (tokenize.TokenError, SyntaxError) as exc:
        logger.debug("exec statements left as written: %s", exc)
        return text
    offsets = [0]
    for line in io.StringIO(text).readlines():
        offsets.append(offsets[-1] + len(line))

    def offset(position: Tuple[int, int]) -> int:
        row, col = position
        return offsets[min(row, len(offsets)) - 1] + col

    edits: List[Tuple[int, int, str]] = []
    depth = 0
    starts_statement = True
    index = 0
    while index < len(tokens):
        token = tokens[index]
        if starts_statement and depth == 0 and token.type == tokenize.NAME and token.string == "exec":
            edits.append((offset(token.end), offset(token.end), "("))
            inner, separated, last = 0, False, token
            index += 1
            while index < len(tokens):
                current = tokens[index]
                if current.type in _STATEMENT_ENDS:
                    break
                if current.type == tokenize.OP:
                    if current.string in _OPENERS:
                        inner += 1
                    elif current.string in _CLOSERS:
                        inner -= 1
                    elif current.string == ";" and inner == 0:
                        break
                if inner == 0 and not separated and current.type == tokenize.NAME and current.string == "in":
                    edits.append((offset(current.start), offset(current.end), ","))
                    separated = True
                if current.type not in _LAYOUT_TOKENS:
                    last = current
                index += 1
            edits.append((offset(last.end), offset(last.end), ")"))
            starts_statement = False
            continue
        if token.type == tokenize.OP:
            if token.string in _OPENERS:
                depth += 1
            elif token.string in _CLOSERS:
                depth = max(depth - 1, 0)
        starts_statement = token.type in _LAYOUT_TOKENS or (
            token.type == tokenize.OP and token.string in (";", ":") and depth == 0
        )
        index += 1
    for start, end, replacement in sorted(edits, reverse=True):
        text = text[:start] + replacement + text[end:]
    return text


class _TreeBuilder:
    """Lowers one tree-sitter parse into a :class:`ModuleTree`.

    Statement node types dispatch to ``_stmt_<type>``, expression node types
    to ``_expr_<type>``.
    """

    def __init__(self, source_path: str):
        self.source_path = source_path
        self.unicode_literals = False

    def failure(self, node: Node, reason: str) -> ParseFailure:
        return ParseFailure(self.source_path, _line(node), reason)

    def module(self, root: Node) -> ModuleTree:
        body = tuple(self.statement(child, 0) for child in _named(root))
        return ModuleTree(body=body, source_path=self.source_path)

    # Statements

    def statement(self, node: Node, level: int) -> StatementNode:
        if node.type in _PY3_ONLY:
            raise self.failure(node, f"{_PY3_ONLY[node.type]} is not Python 2.7")
        method = getattr(self, "_stmt_" + node.type, None)
        if method is None:
            raise self.failure(node, f"unsupported statement {node.type}")
        return method(node, level)

    def block(self, node: Optional[Node], level: int) -> Tuple[StatementNode, ...]:
        if node is None:
            raise ParseFailure(self.source_path, 0, "missing block")
        statements = tuple(self.statement(child, level) for child in _named(node))
        if not statements:
            raise self.failure(node, "empty block")
        return statements

    def _clause_block(self, node: Node) -> Optional[Node]:
        for field_name in ("body", "consequence"):
            found = node.child_by_field_name(field_name)
            if found is not None:
                return found
        blocks = [child for child in _named(node) if child.type == "block"]
        return blocks[-1] if blocks else None

    def _simple(self, kind: str, node: Node, level: int, expressions=(), **extra) -> StatementNode:
        return StatementNode(
            kind=kind,
            expressions=tuple(expressions),
            indent_level=level,
            line=_line(node),
            **extra,
        )

    def _stmt_expression_statement(self, node: Node, level: int) -> StatementNode:
        parts = _children(node)
        named = [child for child in parts if child.is_named]
        if len(named) == 1 and named[0].type == "assignment":
            return self._assignment(named[0], level)
        if len(named) == 1 and named[0].type == "augmented_assignment":
            return self._augmented_assignment(named[0], level)
        values = [self.expr(child) for child in named]
        trailing_comma = parts[-1].type == ","
        if len(values) == 1 and not trailing_comma:
            value = values[0]
            if _is_print_call(value):
                printed = _print_value(value, _call_trailing_comma(named[0]))
                return self._simple("print", node, level, (OMITTED, printed), detail=False)
            if _is_exec_call(value):
                return self._simple("exec", node, level, _exec_operands(value))
            return self._simple("expression-statement", node, level, (value,))
        if _is_print_call(values[0]):
            # the grammar reads "print (a), b" as a tuple led by a call
            printed = [_print_value(values[0], _call_trailing_comma(named[0]))] + values[1:]
            return self._simple("print", node, level, [OMITTED] + printed, detail=trailing_comma)
        return self._simple("expression-statement", node, level, (ExpressionNode("tuple", tuple(values)),))

    def _assignment(self, node: Node, level: int) -> StatementNode:
        targets = []
        current = node
        while True:
            if current.child_by_field_name("type") is not None:
                raise self.failure(current, "variable annotation is not Python 2.7")
            left, right = current.child_by_field_name("left"), current.child_by_field_name("right")
            if left is None or right is None:
                raise self.failure(current, "incomplete assignment")
            targets.append(self.expr(left))
            if right.type == "assignment":
                current = right
                continue
            if right.type == "augmented_assignment":
                raise self.failure(right, "augmented assignment inside assignment")
            value = self.expr(right)
            break
        return self._simple("assignment", node, level, targets + [value])

    def _augmented_assignment(self, node: Node, level: int) -> StatementNode:
        operator = node.child_by_field_name("operator").type
        if operator == "@=":
            raise self.failure(node, "matrix multiplication is not Python 2.7")
        expressions = (self.expr(node.child_by_field_name("left")), self.expr(node.child_by_field_name("right")))
        return self._simple("augmented-assignment", node, level, expressions, detail=operator)

    def _stmt_print_statement(self, node: Node, level: int) -> StatementNode:
        parts = _children(node)
        dest = OMITTED
        values = []
        for child in parts[1:]:
            if child.type == "chevron":
                dest = self.expr(_named(child)[0])
            elif child.is_named:
                values.append(self.expr(child))
        if dest == name_node("None"):
            dest = OMITTED
        return self._simple("print", node, level, [dest] + values, detail=parts[-1].type == ",")

    def _stmt_exec_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("exec", node, level, [self.expr(child) for child in _named(node)])

    def _stmt_return_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("return", node, level, [self.expr(child) for child in _named(node)])

    def _expression_items(self, node: Node) -> List[ExpressionNode]:
        items = []
        for child in _named(node):
            if child.type == "expression_list":
                items.extend(self.expr(item) for item in _named(child))
            else:
                items.append(self.expr(child))
        return items

    def _stmt_delete_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("delete", node, level, self._expression_items(node))

    def _stmt_raise_statement(self, node: Node, level: int) -> StatementNode:
        if any(child.type == "from" for child in _children(node)):
            raise self.failure(node, "raise ... from is not Python 2.7")
        return self._simple("raise", node, level, self._expression_items(node))

    def _stmt_assert_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("assert", node, level, [self.expr(child) for child in _named(node)])

    def _stmt_pass_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("pass", node, level)

    def _stmt_break_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("break", node, level)

    def _stmt_continue_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("continue", node, level)

    def _stmt_global_statement(self, node: Node, level: int) -> StatementNode:
        names = tuple(_text(child) for child in _named(node))
        return self._simple("global", node, level, detail=names)

    def _dotted(self, node: Node) -> str:
        if node.type == "dotted_name":
            return ".".join(_text(part) for part in _named(node))
        return _text(node)

    def _alias(self, node: Node) -> ExpressionNode:
        if node.type == "aliased_import":
            name = self._dotted(node.child_by_field_name("name"))
            alias = _text(node.child_by_field_name("alias"))
            return ExpressionNode("alias", literal_value=(name, alias))
        if node.type == "wildcard_import":
            return ExpressionNode("wildcard")
        return ExpressionNode("alias", literal_value=(self._dotted(node), None))

    def _imported_names(self, node: Node) -> List[ExpressionNode]:
        names = []
        seen_import = False
        for child in _children(node):
            if child.type == "import":
                seen_import = True
            elif seen_import and child.is_named:
                names.append(self._alias(child))
        return names

    def _stmt_import_statement(self, node: Node, level: int) -> StatementNode:
        return self._simple("import", node, level, [self._alias(child) for child in _named(node)])

    def _stmt_import_from_statement(self, node: Node, level: int) -> StatementNode:
        module_node = node.child_by_field_name("module_name")
        dots, module = 0, ""
        if module_node.type == "relative_import":
            for part in _named(module_node):
                if part.type == "import_prefix":
                    dots = _text(part).count(".")
                else:
                    module = self._dotted(part)
        else:
            module = self._dotted(module_node)
        return self._simple("import-from", node, level, self._imported_names(node), name=module, detail=dots)

    def _stmt_future_import_statement(self, node: Node, level: int) -> StatementNode:
        names = self._imported_names(node)
        if any(alias.kind == "alias" and alias.literal_value[0] == "unicode_literals" for alias in names):
            self.unicode_literals = True
        return self._simple("import-from", node, level, names, name="__future__", detail=0)

    def _compound(self, kind: str, node: Node, level: int, expressions, body: Node, clauses=()) -> StatementNode:
        return StatementNode(
            kind=kind,
            expressions=tuple(expressions),
            children=self.block(body, level + 1),
            clauses=tuple(clauses),
            indent_level=level,
            line=_line(node),
        )

    def _else(self, node: Node, level: int) -> StatementNode:
        return self._compound("else", node, level, (), self._clause_block(node))

    def _stmt_if_statement(self, node: Node, level: int) -> StatementNode:
        clauses = []
        for alternative in node.children_by_field_name("alternative"):
            if alternative.type == "elif_clause":
                condition = self.expr(alternative.child_by_field_name("condition"))
                clauses.append(self._compound("elif", alternative, level, (condition,), self._clause_block(alternative)))
            else:
                clauses.append(self._else(alternative, level))
        condition = self.expr(node.child_by_field_name("condition"))
        return self._compound("if", node, level, (condition,), node.child_by_field_name("consequence"), clauses)

    def _reject_async(self, node: Node) -> None:
        if any(child.type == "async" for child in _children(node)):
            raise self.failure(node, "async is not Python 2.7")

    def _else_clauses(self, node: Node, level: int) -> List[StatementNode]:
        return [self._else(child, level) for child in _named(node) if child.type == "else_clause"]

    def _stmt_for_statement(self, node: Node, level: int) -> StatementNode:
        self._reject_async(node)
        target = self.expr(node.child_by_field_name("left"))
        iterable = self.expr(node.child_by_field_name("right"))
        return self._compound(
            "for", node, level, (target, iterable), node.child_by_field_name("body"), self._else_clauses(node, level)
        )

    def _stmt_while_statement(self, node: Node, level: int) -> StatementNode:
        condition = self.expr(node.child_by_field_name("condition"))
        return self._compound(
            "while", node, level, (condition,), node.child_by_field_name("body"), self._else_clauses(node, level)
        )

    def _except(self, node: Node, level: int) -> StatementNode:
        named = _named(node)
        expressions = [child for child in named if child.type != "block"]
        if len(expressions) == 1 and expressions[0].type == "as_pattern":
            converted = self._as_pattern(expressions[0])
        else:
            converted = tuple(self.expr(child) for child in expressions)
        if len(converted) > 2:
            raise self.failure(node, "malformed except clause")
        return self._compound("except", node, level, converted, self._clause_block(node))

    def _stmt_try_statement(self, node: Node, level: int) -> StatementNode:
        clauses = []
        for child in _named(node):
            if child.type == "except_clause":
                clauses.append(self._except(child, level))
            elif child.type == "else_clause":
                clauses.append(self._else(child, level))
            elif child.type == "finally_clause":
                clauses.append(self._compound("finally", child, level, (), self._clause_block(child)))
            elif child.type in _PY3_ONLY:
                raise self.failure(child, f"{_PY3_ONLY[child.type]} is not Python 2.7")
        return self._compound("try", node, level, (), node.child_by_field_name("body"), clauses)

    def _as_pattern(self, node: Node) -> Tuple[ExpressionNode, ExpressionNode]:
        named = _named(node)
        return self.expr(named[0]), self._as_target(named[-1])

    def _as_target(self, node: Node) -> ExpressionNode:
        if node.type != "as_pattern_target":
            return self.expr(node)
        inner = _named(node)
        if len(inner) == 1 and inner[0].start_byte == node.start_byte and inner[0].end_byte == node.end_byte:
            return self.expr(inner[0])
        if not inner:
            return name_node(_text(node))
        return self._reparse_expression(node)

    def _reparse_expression(self, node: Node) -> ExpressionNode:
        """Lower an aliased node by parsing its text as a standalone expression."""
        tree = Parser(PY_LANGUAGE).parse(node.text + b"\n")
        statements = _named(tree.root_node)
        if tree.root_node.has_error or len(statements) != 1 or statements[0].type != "expression_statement":
            raise self.failure(node, "unsupported target")
        return self.expr(_named(statements[0])[0])

    def _with_item(self, node: Node) -> ExpressionNode:
        named = _named(node)
        if len(named) == 1 and named[0].type == "as_pattern":
            return ExpressionNode("with-item", self._as_pattern(named[0]))
        if len(named) == 2:
            return ExpressionNode("with-item", (self.expr(named[0]), self._as_target(named[1])))
        return ExpressionNode("with-item", (self.expr(named[0]),))

    def _stmt_with_statement(self, node: Node, level: int) -> StatementNode:
        self._reject_async(node)
        items = []
        for clause in _named(node):
            if clause.type == "with_clause":
                if _children(clause)[0].type == "(":
                    raise self.failure(clause, "parenthesized context managers are not Python 2.7")
                items.extend(self._with_item(item) for item in _named(clause) if item.type == "with_item")
        return self._compound("with", node, level, items, node.child_by_field_name("body"))

    def _definition(self, node: Node, level: int, decorators: Tuple[ExpressionNode, ...]) -> StatementNode:
        self._reject_async(node)
        if node.child_by_field_name("type_parameters") is not None:
            raise self.failure(node, "type parameters are not Python 2.7")
        name = _text(node.child_by_field_name("name"))
        if node.type == "function_definition":
            if node.child_by_field_name("return_type") is not None:
                raise self.failure(node, "return annotation is not Python 2.7")
            kind = "function-def"
            expressions: Tuple[ExpressionNode, ...] = (self.parameters(node.child_by_field_name("parameters")),)
        else:
            kind = "class-def"
            expressions = self._bases(node.child_by_field_name("superclasses"))
        return StatementNode(
            kind=kind,
            expressions=expressions,
            children=self.block(node.child_by_field_name("body"), level + 1),
            indent_level=level,
            name=name,
            decorators=decorators,
            line=_line(node),
        )

    def _bases(self, node: Optional[Node]) -> Tuple[ExpressionNode, ...]:
        if node is None:
            return ()
        bases = []
        for child in _named(node):
            if child.type in ("keyword_argument", "list_splat", "dictionary_splat"):
                raise self.failure(child, "class keywords or unpacking are not Python 2.7")
            bases.append(self.expr(child))
        return tuple(bases)

    def _stmt_function_definition(self, node: Node, level: int) -> StatementNode:
        return self._definition(node, level, ())

    _stmt_class_definition = _stmt_function_definition

    def _stmt_decorated_definition(self, node: Node, level: int) -> StatementNode:
        decorators = tuple(
            self.expr(_named(child)[0]) for child in _named(node) if child.type == "decorator"
        )
        return self._definition(node.child_by_field_name("definition"), level, decorators)

    # Parameters

    def parameters(self, node: Optional[Node]) -> ExpressionNode:
        if node is None:
            return ExpressionNode("parameters")
        return ExpressionNode("parameters", tuple(self._parameter(child) for child in _named(node)))

    def _parameter(self, node: Node) -> ExpressionNode:
        if node.type in ("identifier", "keyword_identifier", "tuple_pattern"):
            return self._parameter_target(node)
        if node.type == "default_parameter":
            target = self._parameter_target(node.child_by_field_name("name"))
            return ExpressionNode("param-default", (target, self.expr(node.child_by_field_name("value"))))
        if node.type in ("list_splat_pattern", "dictionary_splat_pattern"):
            inner = _named(node)
            if len(inner) != 1 or inner[0].type != "identifier":
                raise self.failure(node, "malformed star parameter")
            kind = "vararg" if node.type == "list_splat_pattern" else "kwarg"
            return ExpressionNode(kind, literal_value=_text(inner[0]))
        if node.type in _PY3_ONLY:
            raise self.failure(node, f"{_PY3_ONLY[node.type]} is not Python 2.7")
        raise self.failure(node, f"unsupported parameter {node.type}")

    def _parameter_target(self, node: Node) -> ExpressionNode:
        if node.type in ("identifier", "keyword_identifier"):
            return ExpressionNode("param", literal_value=_text(node))
        if node.type in ("tuple_pattern", "parenthesized_expression", "tuple"):
            return ExpressionNode("param-tuple", tuple(self._parameter_target(child) for child in _named(node)))
        raise self.failure(node, f"unsupported parameter {node.type}")

    # Expressions

    def expr(self, node: Optional[Node]) -> ExpressionNode:
        if node is None:
            raise ParseFailure(self.source_path, 0, "missing expression")
        if node.type in _PY3_ONLY:
            raise self.failure(node, f"{_PY3_ONLY[node.type]} is not Python 2.7")
        method = getattr(self, "_expr_" + node.type, None)
        if method is None:
            raise self.failure(node, f"unsupported expression {node.type}")
        return method(node)

    def _expr_identifier(self, node: Node) -> ExpressionNode:
        return name_node(_text(node))

    _expr_keyword_identifier = _expr_identifier
    _expr_true = _expr_identifier
    _expr_false = _expr_identifier
    _expr_none = _expr_identifier

    def _expr_integer(self, node: Node) -> ExpressionNode:
        try:
            return _number(_text(node))
        except ValueError as exc:
            raise self.failure(node, f"invalid number literal: {exc}") from exc

    _expr_float = _expr_integer

    def _expr_string(self, node: Node) -> ExpressionNode:
        if any(child.type == "interpolation" for child in node.children):
            raise self.failure(node, "f-string is not Python 2.7")
        try:
            type_name, value = decode_string_literal(_text(node), self.unicode_literals)
        except (ValueError, KeyError) as exc:
            raise self.failure(node, f"invalid string literal: {exc}") from exc
        return literal_node(type_name, value)

    def _expr_concatenated_string(self, node: Node) -> ExpressionNode:
        parts = [self._expr_string(child).literal_value for child in _named(node)]
        if all(type_name == "bytes" for type_name, _ in parts):
            return literal_node("bytes", b"".join(value for _, value in parts))
        try:
            text = "".join(value if isinstance(value, str) else value.decode("utf-8") for _, value in parts)
        except UnicodeDecodeError as exc:
            raise self.failure(node, "byte string joined to unicode is not UTF-8") from exc
        return literal_node("unicode", text)

    def _expr_ellipsis(self, node: Node) -> ExpressionNode:
        raise self.failure(node, "ellipsis outside a subscript is not Python 2.7")

    def _expr_parenthesized_expression(self, node: Node) -> ExpressionNode:
        inner = _named(node)
        if len(inner) != 1:
            raise self.failure(node, "malformed parenthesized expression")
        return self.expr(inner[0])

    def _sequence(self, kind: str, node: Node) -> ExpressionNode:
        return ExpressionNode(kind, tuple(self.expr(child) for child in _named(node)))

    def _expr_tuple(self, node: Node) -> ExpressionNode:
        return self._sequence("tuple", node)

    _expr_expression_list = _expr_tuple
    _expr_pattern_list = _expr_tuple
    _expr_tuple_pattern = _expr_tuple

    def _expr_list(self, node: Node) -> ExpressionNode:
        return self._sequence("list", node)

    _expr_list_pattern = _expr_list

    def _expr_set(self, node: Node) -> ExpressionNode:
        return self._sequence("set", node)

    def _expr_dictionary(self, node: Node) -> ExpressionNode:
        return self._sequence("dict", node)

    def _expr_pair(self, node: Node) -> ExpressionNode:
        key, value = node.child_by_field_name("key"), node.child_by_field_name("value")
        return ExpressionNode("pair", (self.expr(key), self.expr(value)))

    def _comprehension(self, kind: str, node: Node) -> ExpressionNode:
        named = _named(node)
        element = self.expr(named[0])
        generators: List[List[ExpressionNode]] = []
        for clause in named[1:]:
            if clause.type == "for_in_clause":
                generators.append(list(self._for_in_clause(clause)))
            elif clause.type == "if_clause" and generators:
                generators[-1].append(self.expr(_named(clause)[0]))
            else:
                raise self.failure(clause, f"unsupported comprehension clause {clause.type}")
        return ExpressionNode(kind, (element,) + tuple(ExpressionNode("comp-for", tuple(g)) for g in generators))

    def _for_in_clause(self, node: Node) -> Tuple[ExpressionNode, ExpressionNode]:
        self._reject_async(node)
        target = node.child_by_field_name("left")
        # the right field also holds the commas of a bare tuple
        iterables = [
            child
            for child in node.children_by_field_name("right")
            if child.is_named and child.type not in _EXTRAS
        ]
        if target is None or not iterables:
            named = _named(node)
            target, iterables = named[0], named[1:]
        trailing_comma = _children(node)[-1].type == ","
        if len(iterables) == 1 and not trailing_comma:
            iterable = self.expr(iterables[0])
        else:
            iterable = ExpressionNode("tuple", tuple(self.expr(child) for child in iterables))
        return self.expr(target), iterable

    def _expr_list_comprehension(self, node: Node) -> ExpressionNode:
        return self._comprehension("list-comp", node)

    def _expr_set_comprehension(self, node: Node) -> ExpressionNode:
        return self._comprehension("set-comp", node)

    def _expr_dictionary_comprehension(self, node: Node) -> ExpressionNode:
        return self._comprehension("dict-comp", node)

    def _expr_generator_expression(self, node: Node) -> ExpressionNode:
        return self._comprehension("generator", node)

    def _expr_attribute(self, node: Node) -> ExpressionNode:
        target = self.expr(node.child_by_field_name("object"))
        return ExpressionNode("attribute", (target,), literal_value=_text(node.child_by_field_name("attribute")))

    def _expr_subscript(self, node: Node) -> ExpressionNode:
        value = self.expr(node.child_by_field_name("value"))
        items = [self._subscript_item(child) for child in node.children_by_field_name("subscript")]
        parts = _children(node)
        trailing_comma = len(parts) >= 2 and parts[-2].type == ","
        if len(items) == 1 and not trailing_comma:
            index = items[0]
        else:
            index = ExpressionNode("tuple", tuple(items))
        return ExpressionNode("subscript", (value, index))

    def _subscript_item(self, node: Node) -> ExpressionNode:
        if node.type == "ellipsis":
            return ExpressionNode("ellipsis")
        if node.type == "slice":
            return self._slice(node)
        return self.expr(node)

    def _slice(self, node: Node) -> ExpressionNode:
        segments: List[ExpressionNode] = [OMITTED]
        for child in _children(node):
            if child.type == ":":
                segments.append(OMITTED)
            elif child.is_named:
                segments[-1] = self.expr(child)
        if len(segments) > 3:
            raise self.failure(node, "malformed slice")
        segments.extend([OMITTED] * (3 - len(segments)))
        return ExpressionNode("slice", tuple(segments))

    def _expr_call(self, node: Node) -> ExpressionNode:
        function = self.expr(node.child_by_field_name("function"))
        arguments = node.child_by_field_name("arguments")
        if arguments.type == "generator_expression":
            return ExpressionNode("call", (function, self.expr(arguments)))
        args = [function]
        for child in _named(arguments):
            if child.type == "keyword_argument":
                value = self.expr(child.child_by_field_name("value"))
                name = _text(child.child_by_field_name("name"))
                args.append(ExpressionNode("keyword", (value,), literal_value=name))
            elif child.type == "list_splat":
                args.append(ExpressionNode("star-arg", (self.expr(_named(child)[0]),)))
            elif child.type == "dictionary_splat":
                args.append(ExpressionNode("double-star-arg", (self.expr(_named(child)[0]),)))
            else:
                args.append(self.expr(child))
        return ExpressionNode("call", tuple(args))

    def _expr_lambda(self, node: Node) -> ExpressionNode:
        parameters = self.parameters(node.child_by_field_name("parameters"))
        return ExpressionNode("lambda", (parameters, self.expr(node.child_by_field_name("body"))))

    def _expr_conditional_expression(self, node: Node) -> ExpressionNode:
        body, test, orelse = (self.expr(child) for child in _named(node))
        return ExpressionNode("if-exp", (body, test, orelse))

    def _binary(self, kind: str, node: Node) -> ExpressionNode:
        operator = node.child_by_field_name("operator").type
        if operator == "@":
            raise self.failure(node, "matrix multiplication is not Python 2.7")
        left = self.expr(node.child_by_field_name("left"))
        right = self.expr(node.child_by_field_name("right"))
        return ExpressionNode(kind, (left, right), op=operator)

    def _expr_binary_operator(self, node: Node) -> ExpressionNode:
        return self._binary("binary-op", node)

    def _expr_boolean_operator(self, node: Node) -> ExpressionNode:
        return self._binary("bool-op", node)

    def _expr_unary_operator(self, node: Node) -> ExpressionNode:
        operator = node.child_by_field_name("operator").type
        return ExpressionNode("unary-op", (self.expr(node.child_by_field_name("argument")),), op=operator)

    def _expr_not_operator(self, node: Node) -> ExpressionNode:
        return ExpressionNode("unary-op", (self.expr(_named(node)[0]),), op="not")

    def _expr_comparison_operator(self, node: Node) -> ExpressionNode:
        operands: List[ExpressionNode] = []
        operators: List[str] = []
        pending: List[str] = []
        for child in _children(node):
            if child.is_named:
                if operands:
                    operators.append(" ".join(pending))
                operands.append(self.expr(child))
                pending = []
            else:
                pending.append(child.type)
        operators = ["!=" if op == "<>" else op for op in operators]
        return ExpressionNode("compare", tuple(operands), literal_value=tuple(operators))

    def _expr_yield(self, node: Node) -> ExpressionNode:
        if any(child.type == "from" for child in _children(node)):
            raise self.failure(node, "yield from is not Python 2.7")
        return ExpressionNode("yield", tuple(self.expr(child) for child in _named(node)))


def _decode_source(source_text: Union[str, bytes], source_path: str) -> str:
    if isinstance(source_text, bytes):
        try:
            source_text = source_text.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = source_text.count(b"\n", 0, exc.start) + 1
            raise ParseFailure(source_path, line, "source is not valid UTF-8") from exc
    if source_text.startswith("\ufeff"):
        source_text = source_text[1:]
    return source_text.replace("\r\n", "\n").replace("\r", "\n")


def parse_module(source_text: Union[str, bytes], source_path: str = "") -> ModuleTree:
    """Parse Python 2.7 source into a comment-free :class:`ModuleTree`.

    Raises :class:`ParseFailure` on syntax errors, Python 3 only constructs
    and undecodable bytes.
    """
    text = _exec_as_calls(_decode_source(source_text, source_path))
    tree = Parser(PY_LANGUAGE).parse(text.encode("utf-8"))
    root = tree.root_node
    if root.has_error:
        error = _first_error(root) or root
        reason = f"missing {error.type}" if error.is_missing else "syntax error"
        logger.debug("%s: %s at byte %d", source_path, error.type, error.start_byte)
        raise ParseFailure(source_path, _line(error), reason)
    try:
        return _TreeBuilder(source_path).module(root)
    except RecursionError as exc:
        raise ParseFailure(source_path, 1, "nesting too deep") from exc


def tree_equal(a: ModuleTree, b: ModuleTree) -> bool:
    """Structural equality ignoring paths, line numbers and surface formatting."""
    try:
        return a.body == b.body
    except RecursionError:
        return unparse_canonical(a) == unparse_canonical(b)


def normalize_source(source_text: Union[str, bytes], source_path: str = "") -> str:
    """Parse and canonically unparse a whole module."""
    return render_source(unparse_canonical(parse_module(source_text, source_path)))


__all__ = [
    "ParseFailure",
    "decode_string_literal",
    "normalize_source",
    "parse_module",
    "render_source",
    "tree_equal",
    "unparse_canonical",
    "unparse_expression",
    "unparse_header",
]
