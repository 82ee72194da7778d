"""Rewriting system: rules, weights, normalization, exact digit arithmetic."""

from .normalize import (
    AdditionTrace,
    SubtractionStep,
    TraceStep,
    ViolationWitness,
    add,
    add_with_trace,
    borrow_representation,
    find_violation,
    normalize,
    subtract,
    subtract_with_trace,
)
from .rules import RewriteRule, RuleSet, build_rules, check_gfs, type1_rule, type2_rule
from .weights import WeightConstruction, WeightFunction, build_weight, weight_of

__all__ = [
    "AdditionTrace",
    "RewriteRule",
    "RuleSet",
    "SubtractionStep",
    "TraceStep",
    "ViolationWitness",
    "WeightConstruction",
    "WeightFunction",
    "add",
    "add_with_trace",
    "borrow_representation",
    "build_rules",
    "build_weight",
    "check_gfs",
    "find_violation",
    "normalize",
    "subtract",
    "subtract_with_trace",
    "type1_rule",
    "type2_rule",
    "weight_of",
]
