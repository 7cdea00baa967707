import json

import pytest

from strictcat import corpus, homotopy_group
from strictcat.groups import cyclic, find_isomorphism
from strictcat.serialize import (
    SchemaError,
    dumps,
    parse_category,
    parse_functor,
    parse_monoidal,
    serialize_category,
    serialize_functor,
    serialize_monoidal,
)


def test_category_documents_round_trip():
    for name, C in corpus.categories().items():
        doc = serialize_category(C)
        C2 = parse_category(doc)
        assert C2 == C, name
        assert dumps(serialize_category(C2)) == dumps(doc), name


def test_functor_and_monoidal_round_trip():
    for name, kind, obj in corpus.document_fixtures():
        if kind == "functor":
            doc = serialize_functor(obj)
            assert parse_functor(doc) == obj, name
            assert dumps(serialize_functor(parse_functor(doc))) == dumps(doc)
        elif kind == "monoidal":
            doc = serialize_monoidal(obj)
            assert parse_monoidal(doc) == obj, name


def test_shipped_files_round_trip_bit_exactly():
    data = corpus.data_dir()
    files = sorted(data.iterdir())
    assert len(files) >= 10
    for path in files:
        text = path.read_text()
        doc = json.loads(text)
        if path.suffix == ".cat":
            out = serialize_category(parse_category(doc))
        elif path.suffix == ".fun":
            out = serialize_functor(parse_functor(doc))
        else:
            out = serialize_monoidal(parse_monoidal(doc))
        assert dumps(out) == text, path.name


def test_deloop_z2_fixture_has_z2_pi3():
    doc = json.loads((corpus.data_dir() / "deloop_z2.cat").read_text())
    C = parse_category(doc)
    assert find_isomorphism(homotopy_group(C, 3, "x"), cyclic(2)) is not None


def test_dangling_id_error_names_path():
    doc = serialize_category(corpus.categories()["terminal-2"])
    doc["identities"]["*"] = "ghost"
    with pytest.raises(SchemaError) as exc:
        parse_category(doc)
    assert "category" in str(exc.value)


def test_missing_key_error_names_path():
    doc = serialize_category(corpus.categories()["deloop-z2"])
    del doc["homs"]["x|x"]["identities"]
    with pytest.raises(SchemaError) as exc:
        parse_category(doc)
    assert 'homs["x|x"]' in str(exc.value)


def test_bad_table_row_rejected():
    doc = serialize_category(corpus.categories()["terminal-2"])
    doc["compositions"]["*|*|*"][0][0] = ["*", "*"]
    with pytest.raises(SchemaError) as exc:
        parse_category(doc)
    assert "compositions" in str(exc.value)


def test_functor_totality_checked():
    name, kind, F = [d for d in corpus.document_fixtures() if d[0] == "id_deloop_z2.fun"][0]
    doc = serialize_functor(F)
    first_key = next(iter(doc["maps"][3]))
    del doc["maps"][3][first_key]
    with pytest.raises(SchemaError) as exc:
        parse_functor(doc)
    assert "maps[3]" in str(exc.value)
