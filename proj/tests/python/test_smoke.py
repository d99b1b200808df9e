import _klrcalc as k


def test_resolve_shapes():
    c = k.resolve(a=1, b=1, m=2)
    assert len(c["levels"]) == 3
    assert [s["shift"] for lev in c["levels"] for s in lev] == [-2, 0, 0]
    assert c["levels"][0][0]["idem"] == [[1, 2], [2, 2]]
    assert len(c["boundaries"]) == 2

    single = k.resolve(pi="[[2,2],1],[[1,1],1]")
    assert len(single["levels"]) == 1


def test_character():
    ch = k.character(a=1, b=1, m=1, cutoff=8)
    assert ch == [
        {"word": [1, 2], "degree": d, "dim": 1} for d in range(0, 9, 2)
    ]


def test_ext_and_oracle_agree():
    table = k.ext("[[1,2],1],[[1,1],1]", "[[1,2],1],[[1,1],1]", cutoff=6)
    ext0 = {e["degree"]: e["rank"] for e in table if e["n"] == 0}
    assert ext0 == {0: 1, 2: 2, 4: 3, 6: 4}
    assert k.direct_hom("[[1,2],1],[[1,1],1]", "[[1,2],1],[[1,1],1]", 6) == ext0


def test_integral_ext():
    table = k.ext("[[1,2],1]", "[[1,2],1]", cutoff=4, ring="Z")
    assert table == [
        {"n": 0, "degree": d, "rank": 1, "torsion": []} for d in (0, 2, 4)
    ]


def test_verify_small():
    assert k.verify(a=1, b=1, m=2, cutoff=8)


def test_lemma_suite():
    results = k.lemma_suite(3)
    assert len(results) == 18
    assert all(ok for _, ok, _ in results)


def test_bad_input():
    import pytest

    with pytest.raises(ValueError):
        k.ext("[[1,1],1]", "[[2,2],1]")
