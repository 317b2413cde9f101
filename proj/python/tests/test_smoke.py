from fractions import Fraction
import json

import pytest

import kneser


def test_type_spec():
    t = kneser.TypeSpec("2eI")
    assert t.label == "2eI"
    assert t.q == 2
    assert [t.nu(m, 8) for m in range(5)] == [254, 125, 59, 23, -1]
    assert kneser.TypeSpec("qH:q=4").alpha(0, 2) == Fraction(10)
    with pytest.raises(ValueError):
        kneser.TypeSpec("nonsense")


def test_classify_and_spectrum():
    db = kneser.classify("2eI", 16)
    assert len(db) == 7
    assert db.mass() == 3 * 5 * 9 * 17 * 33 * 65 * 129
    s = kneser.spectrum(db)
    assert s["table_row"] == [1, 2, 1, 2, 1]
    assert s["complete"] and s["orthogonal"] and s["mass_vector_ok"]
    t = kneser.hecke_matrix(db)
    assert all(sum(row[c] for row in t) == 254 for c in range(7))


def test_type_ii_and_json_roundtrip():
    db = kneser.classify("2eII", 16)
    assert kneser.spectrum(db)["table_row"] == [1, 0, 0, 1]
    text = db.to_json()
    assert json.loads(text)["length"] == 16
    back = kneser.database_from_json(text)
    assert back.to_json() == text
    assert back.fingerprints == db.fingerprints


def test_codes_and_enumerators():
    h8 = kneser.Code(2, 8, [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0, 0],
                            [0, 0, 0, 0, 1, 1, 1, 1], [0, 1, 0, 1, 0, 1, 0, 1]])
    assert h8.dimension == 4
    assert h8.is_member(kneser.TypeSpec("2eII"))
    cf = kneser.canonical_form(h8)
    assert cf["aut_order"] == 1344
    assert kneser.canonical_form(h8.permuted([7, 6, 5, 4, 3, 2, 1, 0]))["canon"] == cf["canon"]
    w = kneser.cwe(h8, 1)
    assert w == {((0, 8),): 1, ((0, 4), (1, 4)): 14, ((1, 8),): 1}
    assert len(kneser.neighbors(h8, kneser.TypeSpec("2eII"))) == 7


def test_other_types_and_verify():
    db = kneser.classify("qH:q=4", 6)
    assert len(db) == 11
    assert kneser.filtration_dims(db, 1)[0] == 1
    report = kneser.verify(db)
    assert "FAIL" not in report.values()
    assert report["self_adjoint"] == "PASS"
