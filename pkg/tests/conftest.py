import pytest

from matgroups import chartab, ff, matgrp


@pytest.fixture(scope="session")
def group():
    """Session-wide cache of built groups, keyed by (kind, n, q)."""
    built: dict[tuple[str, int, int], matgrp.GroupContext] = {}

    def get(kind: str, n: int, q: int) -> matgrp.GroupContext:
        key = (kind, n, q)
        if key not in built:
            built[key] = matgrp.group_build(kind, n, ff.field_make_q(q))
        return built[key]

    return get


@pytest.fixture(scope="session")
def table(group):
    """Session-wide cache of character tables, keyed by (kind, n, q)."""
    built: dict[tuple[str, int, int], chartab.CharacterTable] = {}

    def get(kind: str, n: int, q: int) -> chartab.CharacterTable:
        key = (kind, n, q)
        if key not in built:
            built[key] = chartab.character_table(group(kind, n, q), seed=0)
        return built[key]

    return get
