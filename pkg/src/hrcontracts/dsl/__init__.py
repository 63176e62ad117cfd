"""The ``.hrc`` contract language."""
from .evaluate import Model, eval_expr
from .parser import parse, parse_file, tokenize
from .printer import formula, print_assertion, print_document, print_expr

__all__ = ["Model", "eval_expr", "parse", "parse_file", "tokenize",
           "formula", "print_assertion", "print_document", "print_expr"]
