import pytest

from hyperembed.corpus import (
    CatalogError,
    build_example_132,
    build_named,
    default_corpus,
    dump_catalog,
    load_catalog,
    parse_catalog,
    parse_group,
)
from hyperembed.lattice import all_subgroups, normal_subgroups
from hyperembed.permgroup import BudgetError, ValidationError, is_normal
from oracles import closure


@pytest.mark.parametrize("kind,params,order", [
    ("cyclic", (1,), 1), ("cyclic", (12,), 12), ("dihedral", (10,), 10), ("dihedral", (4,), 4),
    ("symmetric", (5,), 120), ("alternating", (4,), 12), ("alternating", (5,), 60),
    ("quaternion8", (), 8), ("elementary_abelian", (3, 2), 9), ("semidirect", (7, 3), 21),
])
def test_build_named(kind, params, order):
    assert build_named(kind, *params).order == order


def test_build_named_errors():
    with pytest.raises(ValidationError):
        build_named("cyclic", 0)
    with pytest.raises(ValidationError):
        build_named("dihedral", 7)
    with pytest.raises(ValidationError):
        build_named("nonsense", 3)
    with pytest.raises(ValidationError):
        build_named("semidirect", 7, 3, 3)


def test_semidirect_defining_relations():
    G = build_named("semidirect", 5, 4)
    a, b = G.generators
    assert a.order() == 5 and b.order() == 4
    assert b.inverse() * a * b == a ** 2 or b.inverse() * a * b == a ** 3
    assert not G.is_abelian()


def test_quaternion_relations(Q8):
    i, j = Q8.generators
    assert i ** 2 == j ** 2 and i ** 4 == i ** 0
    assert j.inverse() * i * j == i.inverse()


@pytest.mark.parametrize("expr,order", [("D8xC3", 24), ("S3xC5", 30), ("SL(2,3)", 24), ("GL(2,3)", 48),
                                        ("C3:C4", 12), ("E2^3", 8), ("C5:C4xC3", 60)])
def test_parse_group(expr, order):
    assert parse_group(expr).order == order


def test_parse_group_rejects():
    with pytest.raises(ValidationError):
        parse_group("Z9")


def test_example_group():
    ex = build_example_132(5, 2, 7, 3)
    G = ex.group
    assert (G.order, G.degree, ex.d) == (1680, 23, 4)
    assert ex.V.order == 80 and is_normal(G, ex.V)
    assert ex.Q.order == 16 and ex.Cr.order == 7
    assert (ex.A & ex.V).order == 1 and ex.T != ex.A and ex.B.order == 2
    # no proper nontrivial Cp-invariant subgroup of Q
    QCp = ex.V.group
    Qin = [N for N in normal_subgroups(QCp) if N.order in (2, 4, 8)]
    assert Qin == []


def test_example_group_constraints():
    with pytest.raises(ValidationError):
        build_example_132(3, 2, 7, 3)  # not distinct
    for t in (2, 3, 5, 11, 13):
        # t | 6 forces t in {2, 3}
        with pytest.raises(ValidationError):
            build_example_132(3, 2, 7, t)
    with pytest.raises(ValidationError):
        build_example_132(7, 2, 5, 3)  # 3 does not divide 4
    with pytest.raises(ValidationError):
        build_example_132(3, 5, 7, 2)  # 5 does not divide 2
    ex = build_example_132(3, 5, 7, 2, require_q_divides=False)
    assert ex.d == 2 and ex.group.order == 25 * 3 * 7 * 2
    with pytest.raises(BudgetError):
        build_example_132(7, 3, 5, 2)  # order 3^6 * 70


def test_catalog_roundtrip(tmp_path, S4):
    text = dump_catalog([("S4", S4)])
    path = tmp_path / "c.cat"
    path.write_text(text)
    [(entry, G)] = load_catalog(path)
    assert entry.name == "S4" and entry.expected_order == 24
    assert set(map(tuple, G.elements)) == set(map(tuple, S4.elements))


def test_catalog_parsing():
    text = "# comment\n\nA4; 4; (0 1 2), (0 1)(2 3); 12\nC2 ; 2 ; (0 1) ;  ; abelian small\n"
    a4, c2 = parse_catalog(text)
    assert a4.build().order == 12 and a4.line == 3
    assert c2.expected_order is None and c2.tags == ["abelian", "small"]
    assert parse_catalog("") == []


def test_catalog_errors(tmp_path):
    with pytest.raises(CatalogError) as exc:
        parse_catalog("ok; 2; (0 1)\nbad; 3; (0 1; 2\n")
    assert exc.value.line == 2
    with pytest.raises(CatalogError) as exc:
        parse_catalog("A4; 4; (0 1 2), (0 1)(2 3); 13")[0].build()
    assert "A4" in str(exc.value)
    p = tmp_path / "x.cat"
    p.write_text("G; 3; (0 5)\n")
    with pytest.raises(CatalogError):
        load_catalog(p)


def test_default_corpus_orders():
    corpus = default_corpus()
    names = [n for n, _ in corpus]
    assert len(names) == len(set(names))
    for needed in ("A4", "S4", "A5", "D8xC3", "S3xC5", "Q8", "SL(2,3)"):
        assert needed in names
    assert all(G.order <= 100 for _, G in corpus)
    for _, G in corpus[:40]:
        assert len(closure([g.images for g in G.generators], G.degree)) == G.order
