"""Syntax tree types produced by the Python 2.7 parser.

Nodes are frozen dataclasses so that structural equality is plain ``==``.
Provenance (source lines and paths) is excluded from comparison.
"""

from dataclasses import dataclass, field
from typing import Any, Optional, Tuple, Union


@dataclass(frozen=True)
class ExpressionNode:
    """One expression.

    ``kind`` names the category (``name``, ``literal``, ``binary-op``,
    ``call``, ...). ``op`` holds the operator symbol for operator kinds and
    ``literal_value`` holds names, literal ``(type, value)`` pairs and other
    atomic payloads.
    """
    kind: str
    operands: Tuple["ExpressionNode", ...] = ()
    literal_value: Any = None
    op: Optional[str] = None


OMITTED = ExpressionNode("omitted")


def name_node(name: str) -> ExpressionNode:
    return ExpressionNode("name", literal_value=name)


def literal_node(type_name: str, value: Any) -> ExpressionNode:
    """Literal with its Python 2 type tag: int, long, float, imag, bytes or unicode."""
    return ExpressionNode("literal", literal_value=(type_name, value))


def is_string_literal(node: ExpressionNode) -> bool:
    return node.kind == "literal" and node.literal_value[0] in ("bytes", "unicode")


@dataclass(frozen=True)
class StatementNode:
    """One statement, or one clause (elif/else/except/finally) of a compound statement.

    ``children`` is the nested block at ``indent_level + 1``; ``clauses`` are
    the continuation headers of a compound statement, at the same level.
    """
    kind: str
    expressions: Tuple[ExpressionNode, ...] = ()
    children: Tuple["StatementNode", ...] = ()
    clauses: Tuple["StatementNode", ...] = ()
    indent_level: int = 0
    name: Optional[str] = None
    decorators: Tuple[ExpressionNode, ...] = ()
    detail: Any = None
    line: int = field(default=0, compare=False)

    @property
    def parameters(self) -> ExpressionNode:
        """Parameter list of a function-def."""
        return self.expressions[0]

    @property
    def docstring_node(self) -> Optional["StatementNode"]:
        if self.kind not in ("function-def", "class-def") or not self.children:
            return None
        first = self.children[0]
        if first.kind == "expression-statement" and is_string_literal(first.expressions[0]):
            return first
        return None

    @property
    def docstring(self) -> Optional[Union[str, bytes]]:
        node = self.docstring_node
        if node is None:
            return None
        return node.expressions[0].literal_value[1]

    @property
    def body(self) -> Tuple["StatementNode", ...]:
        """Block statements after the docstring, if any."""
        if self.docstring_node is not None:
            return self.children[1:]
        return self.children


@dataclass(frozen=True)
class ModuleTree:
    body: Tuple[StatementNode, ...]
    source_path: str = field(default="", compare=False)
