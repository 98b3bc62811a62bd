"""Command registry: builds the command line from command signatures and docstrings."""

import argparse
import inspect
from typing import Any, Callable, Dict, List, Union, get_args, get_origin, get_type_hints

COMMAND_PREFIX = "cmd_"


class FunctionRegistry:
    """Registry for commands with their metadata and parameter specifications.

    A command documents its options with ``:param name:`` lines and restricts
    values with ``:enum name: a,b,c`` lines.
    """

    @staticmethod
    def get_param_type(annotation: Any) -> Dict[str, Any]:
        """Convert a parameter's type annotation to argparse keyword arguments."""
        if get_origin(annotation) is Union:
            members = [arg for arg in get_args(annotation) if arg is not type(None)]
            annotation = members[0] if len(members) == 1 else str
        type_map = {
            str: {"type": str},
            int: {"type": int},
            float: {"type": float},
            bool: {"action": argparse.BooleanOptionalAction},
        }
        if annotation is inspect.Parameter.empty:
            return {"type": str}  # default to string if no type hint
        return dict(type_map.get(annotation, {"type": str}))

    @staticmethod
    def command_name(function_name: str) -> str:
        """``cmd_learn_bpe`` becomes ``learn-bpe``."""
        if function_name.startswith(COMMAND_PREFIX):
            function_name = function_name[len(COMMAND_PREFIX):]
        return function_name.replace("_", "-")

    @classmethod
    def extract_function_metadata(cls, func: Callable) -> Dict:
        """Extract function metadata including description and parameters."""
        sig = inspect.signature(func)
        hints = get_type_hints(func)
        doc = inspect.getdoc(func) or ""
        doc_lines = doc.split("\n")

        parameters = {}
        for name, param in sig.parameters.items():
            if name == "self":
                continue

            param_desc = ""
            for line in doc_lines:
                if f":param {name}:" in line:
                    param_desc = line.split(f":param {name}:")[1].strip()
                    break

            spec = {
                **cls.get_param_type(hints.get(name, param.annotation)),
                "description": param_desc or f"The {name.replace('_', ' ')}.",
                "required": param.default is inspect.Parameter.empty,
                "default": None if param.default is inspect.Parameter.empty else param.default,
            }

            enum_line = [line for line in doc_lines if f":enum {name}:" in line]
            if enum_line:
                enum_values = enum_line[0].split(f":enum {name}:")[1].strip().split(",")
                spec["enum"] = [v.strip() for v in enum_values]

            parameters[name] = spec

        return {
            "description": doc_lines[0],
            "parameters": parameters,
        }

    @classmethod
    def add_command(cls, subparsers: Any, name: str, func: Callable) -> argparse.ArgumentParser:
        metadata = cls.extract_function_metadata(func)
        parser = subparsers.add_parser(
            cls.command_name(name),
            help=metadata["description"],
            description=metadata["description"],
        )
        for param_name, spec in metadata["parameters"].items():
            kwargs: Dict[str, Any] = {"help": spec["description"]}
            if "action" in spec:
                kwargs["action"] = spec["action"]
            else:
                kwargs["type"] = spec["type"]
            if "enum" in spec:
                kwargs["choices"] = [spec.get("type", str)(value) for value in spec["enum"]]
            if spec["required"] and "action" not in spec:
                kwargs["metavar"] = param_name.upper()
                parser.add_argument(param_name, **kwargs)
            else:
                kwargs["default"] = spec["default"]
                parser.add_argument("--" + param_name.replace("_", "-"), dest=param_name, **kwargs)
        parser.set_defaults(command=name)
        return parser

    @classmethod
    def build_parser(cls, functions: Dict[str, Callable], parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        """Add one sub-command per registered function."""
        subparsers = parser.add_subparsers(dest="command_name", metavar="COMMAND", required=True)
        for name, func in functions.items():
            cls.add_command(subparsers, name, func)
        parser.epilog = "commands:\n" + cls.generate_functions_description(functions)
        return parser

    @classmethod
    def generate_functions_description(cls, functions: Dict[str, Callable]) -> str:
        """One line per command: its name and the first line of its docstring."""
        descriptions: List[str] = []
        for name, func in functions.items():
            doc = inspect.getdoc(func)
            if doc:
                first_line = doc.split("\n")[0]
                descriptions.append(f"    - {cls.command_name(name)}: {first_line}")
        return "\n".join(descriptions)
