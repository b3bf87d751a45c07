"""Shared helpers for the test suite."""

from chardeg.constructions import BuiltGroup, build, parse_group_spec
from chardeg.groups import PermGroup


def built_of(spec: str) -> BuiltGroup:
    return build(parse_group_spec(spec))


def group_of(spec: str) -> PermGroup:
    return built_of(spec).group
