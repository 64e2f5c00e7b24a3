import io
import json

import pytest
from hypothesis import given, strategies as st

from hugheslab.catalog import (
    CatalogError,
    GroupRecord,
    builtin_group,
    builtin_names,
    parse_record,
    read_catalog,
    record_from_group,
    resolve_group,
    write_catalog,
)
from hugheslab.perm import Permutation


def test_parse_good_record():
    rec = parse_record('{"name": "C3", "degree": 3, "generators": [[1, 2, 0]], "tags": ["cyclic"]}')
    assert rec.to_group().order == 3 and rec.tags == ["cyclic"]


@pytest.mark.parametrize(
    "line",
    [
        "not json",
        "[1, 2]",
        '{"name": "x", "degree": 3}',
        '{"name": "x", "degree": 3, "generators": [[0, 0, 1]]}',
        '{"name": "x", "degree": 3, "generators": [[0, 1]]}',
        '{"name": "x", "degree": 0, "generators": []}',
        '{"name": 5, "degree": 3, "generators": []}',
        '{"name": "x", "degree": 3, "generators": [["a", 1, 2]]}',
    ],
)
def test_parse_bad_records(line):
    with pytest.raises(CatalogError):
        parse_record(line)


def test_read_catalog_skips_blank_and_flags_duplicates():
    text = (
        '{"name": "C2", "degree": 2, "generators": [[1, 0]]}\n'
        "\n"
        '{"name": "C2", "degree": 2, "generators": [[1, 0]]}\n'
    )
    items = list(read_catalog(io.StringIO(text)))
    assert [n for n, _ in items] == [1, 3]
    assert isinstance(items[0][1], GroupRecord)
    assert isinstance(items[1][1], CatalogError)


@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_record_roundtrip(a, b):
    from hugheslab.group import PermGroup

    G = PermGroup([Permutation(a), Permutation(b)], name="G")
    buf = io.StringIO()
    write_catalog([record_from_group(G, "G", ["t"])], buf)
    ((_, rec),) = list(read_catalog(io.StringIO(buf.getvalue())))
    H = rec.to_group()
    assert H.order == G.order
    assert all(g in H for g in G.generators)


def test_builtin_lookup_and_aliases():
    assert "gamma" in builtin_names() and len(builtin_names()) == len(set(builtin_names()))
    assert builtin_group("GAMMA").order == 1053
    with pytest.raises(KeyError):
        builtin_group("nope")


def test_resolve_sources(tmp_path):
    assert resolve_group("builtin:S3").order == 6
    rec = '{"name": "C4", "degree": 4, "generators": [[1, 2, 3, 0]]}'
    assert resolve_group(rec).order == 4
    f = tmp_path / "one.jsonl"
    f.write_text(rec + "\n")
    assert resolve_group(str(f)).order == 4
    assert json.loads(record_from_group(resolve_group(str(f)), "C4").to_json())["degree"] == 4
