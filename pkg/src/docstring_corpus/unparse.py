"""Canonical unparsing of Python 2.7 syntax trees.

Every operator application is parenthesized, floats use their shortest
round-trip form, strings are single-quoted with escapes, and one statement
occupies one line.
"""

import math
import sys
from typing import Iterable, List, Sequence, Tuple, Union

from .nodes import OMITTED, ExpressionNode, ModuleTree, StatementNode

Line = Tuple[int, str]

# Float literals that overflow are parsed as infinities; they are written
# back as a literal that overflows again.
INFSTR = "1e" + repr(sys.float_info.max_10_exp + 1)

INDENT = "    "

_BYTE_ESCAPES = {0x5C: "\\\\", 0x27: "\\'", 0x0A: "\\n", 0x0D: "\\r", 0x09: "\\t"}
_CHAR_ESCAPES = {"\\": "\\\\", "'": "\\'", "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _float_repr(value: float) -> str:
    if math.isinf(value):
        return INFSTR
    return repr(value)


def bytes_literal(value: bytes, prefix: str = "") -> str:
    out = [prefix + "'"]
    for byte in value:
        if byte in _BYTE_ESCAPES:
            out.append(_BYTE_ESCAPES[byte])
        elif 0x20 <= byte < 0x7F:
            out.append(chr(byte))
        else:
            out.append(f"\\x{byte:02x}")
    out.append("'")
    return "".join(out)


def unicode_literal(value: str) -> str:
    out = ["u'"]
    for char in value:
        if char in _CHAR_ESCAPES:
            out.append(_CHAR_ESCAPES[char])
        elif char.isprintable():
            out.append(char)
        else:
            code = ord(char)
            if code < 0x100:
                out.append(f"\\x{code:02x}")
            elif code < 0x10000:
                out.append(f"\\u{code:04x}")
            else:
                out.append(f"\\U{code:08x}")
    out.append("'")
    return "".join(out)


def _is_number(node: ExpressionNode) -> bool:
    return node.kind == "literal" and node.literal_value[0] in ("int", "long", "float", "imag")


_PARENTHESIZED_KINDS = frozenset(
    {"binary-op", "bool-op", "compare", "unary-op", "if-exp", "lambda", "yield", "generator"}
)


def _reads_as_print_call(value: ExpressionNode) -> bool:
    """Whether ``print <value>`` parses back to the same print statement.

    The grammar reads ``print (...)`` as a call; the parser folds such calls
    back into print statements, which is exact only when the parenthesized
    group is the whole value.
    """
    if value.kind == "tuple":
        return len(value.operands) >= 2
    return value.kind in _PARENTHESIZED_KINDS


class CanonicalUnparser:
    """Renders statements and expressions in the canonical surface form.

    Dispatch follows the node kind: ``binary-op`` is handled by
    ``_x_binary_op``, ``function-def`` by ``_s_function_def``.
    Byte strings carry a ``b`` prefix only when ``bytes_prefix`` is set,
    which modules importing ``unicode_literals`` need.
    """

    def __init__(self, bytes_prefix: bool = False):
        self.bytes_prefix = bytes_prefix

    def statement(self, node: StatementNode) -> List[Line]:
        method = getattr(self, "_s_" + node.kind.replace("-", "_"), None)
        if method is None:
            raise TypeError(f"cannot unparse statement kind {node.kind!r}")
        return method(node)

    def expr(self, node: ExpressionNode) -> str:
        method = getattr(self, "_x_" + node.kind.replace("-", "_"), None)
        if method is None:
            raise TypeError(f"cannot unparse expression kind {node.kind!r}")
        return method(node)

    def _join(self, nodes: Iterable[ExpressionNode]) -> str:
        return ", ".join(self.expr(node) for node in nodes)

    def _block(self, node: StatementNode, header: str) -> List[Line]:
        lines = [(node.indent_level, header)]
        for child in node.children:
            lines.extend(self.statement(child))
        for clause in node.clauses:
            lines.extend(self.statement(clause))
        return lines

    # Simple statements

    def _s_expression_statement(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, self.expr(node.expressions[0]))]

    def _s_assignment(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, " = ".join(self.expr(e) for e in node.expressions))]

    def _s_augmented_assignment(self, node: StatementNode) -> List[Line]:
        target, value = node.expressions
        return [(node.indent_level, f"{self.expr(target)} {node.detail} {self.expr(value)}")]

    def _s_print(self, node: StatementNode) -> List[Line]:
        dest, values = node.expressions[0], node.expressions[1:]
        rendered = [self.expr(value) for value in values]
        if dest is OMITTED and rendered and rendered[0].startswith("(") and not _reads_as_print_call(values[0]):
            # "print >>None" prints to stdout like a bare print
            dest = ExpressionNode("name", literal_value="None")
        if dest is OMITTED:
            text = "print " + ", ".join(rendered) if rendered else "print"
        else:
            text = ", ".join([f"print >>{self.expr(dest)}"] + rendered)
        if node.detail:
            text += ","
        return [(node.indent_level, text)]

    def _s_exec(self, node: StatementNode) -> List[Line]:
        code, namespaces = node.expressions[0], node.expressions[1:]
        text = "exec " + self.expr(code)
        if namespaces:
            text += " in " + self._join(namespaces)
        return [(node.indent_level, text)]

    def _s_return(self, node: StatementNode) -> List[Line]:
        if not node.expressions:
            return [(node.indent_level, "return")]
        return [(node.indent_level, "return " + self.expr(node.expressions[0]))]

    def _s_delete(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "del " + self._join(node.expressions))]

    def _s_raise(self, node: StatementNode) -> List[Line]:
        if not node.expressions:
            return [(node.indent_level, "raise")]
        return [(node.indent_level, "raise " + self._join(node.expressions))]

    def _s_assert(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "assert " + self._join(node.expressions))]

    def _s_pass(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "pass")]

    def _s_break(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "break")]

    def _s_continue(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "continue")]

    def _s_global(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "global " + ", ".join(node.detail))]

    def _s_import(self, node: StatementNode) -> List[Line]:
        return [(node.indent_level, "import " + self._join(node.expressions))]

    def _s_import_from(self, node: StatementNode) -> List[Line]:
        module = "." * node.detail + (node.name or "")
        return [(node.indent_level, f"from {module} import {self._join(node.expressions)}")]

    # Compound statements and their clauses

    def _s_if(self, node: StatementNode) -> List[Line]:
        return self._block(node, f"if {self.expr(node.expressions[0])}:")

    def _s_elif(self, node: StatementNode) -> List[Line]:
        return self._block(node, f"elif {self.expr(node.expressions[0])}:")

    def _s_else(self, node: StatementNode) -> List[Line]:
        return self._block(node, "else:")

    def _s_for(self, node: StatementNode) -> List[Line]:
        target, iterable = node.expressions
        return self._block(node, f"for {self.expr(target)} in {self.expr(iterable)}:")

    def _s_while(self, node: StatementNode) -> List[Line]:
        return self._block(node, f"while {self.expr(node.expressions[0])}:")

    def _s_try(self, node: StatementNode) -> List[Line]:
        return self._block(node, "try:")

    def _s_except(self, node: StatementNode) -> List[Line]:
        if not node.expressions:
            return self._block(node, "except:")
        if len(node.expressions) == 1:
            return self._block(node, f"except {self.expr(node.expressions[0])}:")
        kind, target = node.expressions
        return self._block(node, f"except {self.expr(kind)} as {self.expr(target)}:")

    def _s_finally(self, node: StatementNode) -> List[Line]:
        return self._block(node, "finally:")

    def _s_with(self, node: StatementNode) -> List[Line]:
        return self._block(node, f"with {self._join(node.expressions)}:")

    def header(self, node: StatementNode) -> List[Line]:
        """Decorator lines followed by the def/class line."""
        lines = [(node.indent_level, "@" + self.expr(d)) for d in node.decorators]
        if node.kind == "function-def":
            lines.append((node.indent_level, f"def {node.name}({self.expr(node.parameters)}):"))
        elif node.expressions:
            lines.append((node.indent_level, f"class {node.name}({self._join(node.expressions)}):"))
        else:
            lines.append((node.indent_level, f"class {node.name}:"))
        return lines

    def _s_function_def(self, node: StatementNode) -> List[Line]:
        lines = self.header(node)
        for child in node.children:
            lines.extend(self.statement(child))
        return lines

    _s_class_def = _s_function_def

    # Expressions

    def _x_omitted(self, node: ExpressionNode) -> str:
        return ""

    def _x_name(self, node: ExpressionNode) -> str:
        return node.literal_value

    def _x_literal(self, node: ExpressionNode) -> str:
        type_name, value = node.literal_value
        if type_name == "int":
            return str(value)
        if type_name == "long":
            return f"{value}L"
        if type_name == "float":
            return _float_repr(value)
        if type_name == "imag":
            return _float_repr(value) + "j"
        if type_name == "bytes":
            return bytes_literal(value, "b" if self.bytes_prefix else "")
        return unicode_literal(value)

    def _x_ellipsis(self, node: ExpressionNode) -> str:
        return "..."

    def _x_tuple(self, node: ExpressionNode) -> str:
        if len(node.operands) == 1:
            return f"({self.expr(node.operands[0])},)"
        return f"({self._join(node.operands)})"

    def _x_list(self, node: ExpressionNode) -> str:
        return f"[{self._join(node.operands)}]"

    def _x_set(self, node: ExpressionNode) -> str:
        return "{" + self._join(node.operands) + "}"

    def _x_dict(self, node: ExpressionNode) -> str:
        return "{" + self._join(node.operands) + "}"

    def _x_pair(self, node: ExpressionNode) -> str:
        key, value = node.operands
        return f"{self.expr(key)}: {self.expr(value)}"

    def _x_binary_op(self, node: ExpressionNode) -> str:
        left, right = node.operands
        return f"({self.expr(left)} {node.op} {self.expr(right)})"

    _x_bool_op = _x_binary_op

    def _x_unary_op(self, node: ExpressionNode) -> str:
        operand = self.expr(node.operands[0])
        if node.op == "not":
            return f"(not {operand})"
        return f"({node.op}{operand})"

    def _x_compare(self, node: ExpressionNode) -> str:
        parts = [self.expr(node.operands[0])]
        for op, operand in zip(node.literal_value, node.operands[1:]):
            parts.append(op)
            parts.append(self.expr(operand))
        return "(" + " ".join(parts) + ")"

    def _x_if_exp(self, node: ExpressionNode) -> str:
        body, test, orelse = node.operands
        return f"({self.expr(body)} if {self.expr(test)} else {self.expr(orelse)})"

    def _x_lambda(self, node: ExpressionNode) -> str:
        parameters, body = node.operands
        params = self.expr(parameters)
        if params:
            return f"(lambda {params}: {self.expr(body)})"
        return f"(lambda: {self.expr(body)})"

    def _x_yield(self, node: ExpressionNode) -> str:
        if not node.operands:
            return "(yield)"
        return f"(yield {self.expr(node.operands[0])})"

    def _primary(self, node: ExpressionNode) -> str:
        text = self.expr(node)
        return f"({text})" if _is_number(node) else text

    def _x_attribute(self, node: ExpressionNode) -> str:
        return f"{self._primary(node.operands[0])}.{node.literal_value}"

    def _x_call(self, node: ExpressionNode) -> str:
        func, args = node.operands[0], node.operands[1:]
        return f"{self._primary(func)}({self._join(args)})"

    def _x_keyword(self, node: ExpressionNode) -> str:
        return f"{node.literal_value}={self.expr(node.operands[0])}"

    def _x_star_arg(self, node: ExpressionNode) -> str:
        return "*" + self.expr(node.operands[0])

    def _x_double_star_arg(self, node: ExpressionNode) -> str:
        return "**" + self.expr(node.operands[0])

    def _x_subscript(self, node: ExpressionNode) -> str:
        value, index = node.operands
        return f"{self._primary(value)}[{self._index(index)}]"

    def _index(self, index: ExpressionNode) -> str:
        if index.kind == "tuple" and any(op.kind in ("slice", "ellipsis") for op in index.operands):
            if len(index.operands) == 1:
                return self.expr(index.operands[0]) + ","
            return self._join(index.operands)
        return self.expr(index)

    def _x_slice(self, node: ExpressionNode) -> str:
        lower, upper, step = node.operands
        text = f"{self.expr(lower)}:{self.expr(upper)}"
        if step is not OMITTED:
            text += ":" + self.expr(step)
        return text

    def _x_alias(self, node: ExpressionNode) -> str:
        name, asname = node.literal_value
        return f"{name} as {asname}" if asname else name

    def _x_wildcard(self, node: ExpressionNode) -> str:
        return "*"

    def _x_with_item(self, node: ExpressionNode) -> str:
        if len(node.operands) == 1:
            return self.expr(node.operands[0])
        context, target = node.operands
        return f"{self.expr(context)} as {self.expr(target)}"

    def _comprehension(self, generators: Sequence[ExpressionNode]) -> str:
        parts = []
        for generator in generators:
            target, iterable, conditions = generator.operands[0], generator.operands[1], generator.operands[2:]
            parts.append(f" for {self.expr(target)} in {self.expr(iterable)}")
            parts.extend(f" if {self.expr(condition)}" for condition in conditions)
        return "".join(parts)

    def _x_list_comp(self, node: ExpressionNode) -> str:
        return f"[{self.expr(node.operands[0])}{self._comprehension(node.operands[1:])}]"

    def _x_generator(self, node: ExpressionNode) -> str:
        return f"({self.expr(node.operands[0])}{self._comprehension(node.operands[1:])})"

    def _x_set_comp(self, node: ExpressionNode) -> str:
        return "{" + self.expr(node.operands[0]) + self._comprehension(node.operands[1:]) + "}"

    _x_dict_comp = _x_set_comp

    # Parameters

    def _x_parameters(self, node: ExpressionNode) -> str:
        return self._join(node.operands)

    def _x_param(self, node: ExpressionNode) -> str:
        return node.literal_value

    def _x_param_default(self, node: ExpressionNode) -> str:
        target, default = node.operands
        return f"{self.expr(target)}={self.expr(default)}"

    def _x_param_tuple(self, node: ExpressionNode) -> str:
        if len(node.operands) == 1:
            return f"({self.expr(node.operands[0])},)"
        return f"({self._join(node.operands)})"

    def _x_vararg(self, node: ExpressionNode) -> str:
        return "*" + node.literal_value

    def _x_kwarg(self, node: ExpressionNode) -> str:
        return "**" + node.literal_value


_UNPARSER = CanonicalUnparser()
_PREFIXED_UNPARSER = CanonicalUnparser(bytes_prefix=True)


def imports_unicode_literals(tree: ModuleTree) -> bool:
    return any(
        statement.kind == "import-from"
        and statement.name == "__future__"
        and any(alias.kind == "alias" and alias.literal_value[0] == "unicode_literals" for alias in statement.expressions)
        for statement in tree.body
    )


def unparse_canonical(node: Union[StatementNode, ModuleTree]) -> List[Line]:
    """Canonical ``(indent_level, text)`` lines for a statement or a whole module."""
    if isinstance(node, ModuleTree):
        unparser = _PREFIXED_UNPARSER if imports_unicode_literals(node) else _UNPARSER
        lines: List[Line] = []
        for statement in node.body:
            lines.extend(unparser.statement(statement))
        return lines
    return _UNPARSER.statement(node)


def unparse_header(node: StatementNode) -> List[Line]:
    """Declaration lines of a function or class: decorators, then the def/class line."""
    return _UNPARSER.header(node)


def unparse_expression(node: ExpressionNode) -> str:
    return _UNPARSER.expr(node)


def render_source(lines: Iterable[Line]) -> str:
    """Source text for canonical lines, four spaces per indentation level."""
    return "".join(INDENT * level + text + "\n" for level, text in lines)
