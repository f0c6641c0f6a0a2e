"""
Finite-state rewrite engine
"""
from src.domain.fst.algorithms import determinize, is_functional, minimize, optimize, rmepsilon, trim
from src.domain.fst.fst import (
    BOS,
    EOS,
    EPSILON,
    OTHER,
    Arc,
    Fst,
    accepts,
    any_scalar,
    apply,
    boundary,
    char_class,
    compose,
    concat,
    cross,
    empty,
    harmonize,
    literal,
    optional,
    project,
    sigma_star,
    star,
    union,
    union_all,
)
from src.domain.fst.rewrite import RewriteRule, compile_rewrite
from src.domain.fst.rule_parser import parse_rule, parse_rules

__all__ = [
    "BOS", "EOS", "EPSILON", "OTHER", "Arc", "Fst", "RewriteRule",
    "accepts", "any_scalar", "apply", "boundary", "char_class", "compile_rewrite", "compose",
    "concat", "cross", "determinize", "empty", "harmonize", "is_functional", "literal",
    "minimize", "optimize", "optional", "parse_rule", "parse_rules", "project", "rmepsilon",
    "sigma_star", "star", "trim", "union", "union_all",
]
