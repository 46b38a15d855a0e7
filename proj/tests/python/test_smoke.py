"""Smoke tests for the python bindings."""

import pytest

import finrel as fr


def atoms(*names):
    return [fr.atom(n) for n in names]


def test_values_and_sets():
    a, b = atoms("a", "b")
    s = fr.vset([b, a, a])
    assert repr(s) == "{a, b}"
    assert fr.member(a, s)
    assert fr.subset(fr.vset([]), s)
    p = fr.pair(a, fr.atom(1))
    assert p.first == a
    assert p.second == fr.atom(1)
    assert fr.pair(a, b) != fr.pair(b, a)


def test_relations():
    a, b = atoms("a", "b")
    one, two = fr.atom(1), fr.atom(2)
    r = fr.vset([fr.pair(a, one), fr.pair(b, two)])
    assert fr.dom(r) == fr.vset([a, b])
    assert fr.ran(r) == fr.vset([one, two])
    assert fr.converse(fr.converse(r)) == r
    assert fr.compose(r, fr.identity(fr.vset([a, b]))) == r
    assert fr.is_functional(r)
    assert fr.is_relation_from(r, fr.vset([a, b]), fr.vset([one, two]))


def test_functions_and_errors():
    a, b, u = atoms("a", "b", "u")
    f = fr.fun([(a, u), (b, u)])
    assert f(a) == u
    assert f.domain == fr.vset([a, b])
    assert not fr.is_injective(f)
    with pytest.raises(fr.KernelError):
        fr.inverse(f)
    with pytest.raises(fr.KernelError):
        f(fr.atom("z"))
    assert fr.fun_from_graph(fr.graph(f)) == f


def test_curry_worked_example():
    f = fr.fun(
        [
            (fr.pair(fr.atom(0), fr.atom(5)), fr.atom("p")),
            (fr.pair(fr.atom(3), fr.atom(1)), fr.atom("q")),
            (fr.pair(fr.atom(3), fr.atom(2)), fr.atom("r")),
        ]
    )
    fc = fr.curry(f)
    assert fc.domain == fr.vset([fr.atom(0), fr.atom(3)])
    inner = fc(fr.atom(3)).to_fun()
    assert inner.domain == fr.vset([fr.atom(1), fr.atom(2)])
    assert inner(fr.atom(2)) == fr.atom("r")
    assert fr.uncurry_family(fc) == f


def test_product_and_universal_property():
    i, j = atoms("i", "j")
    t = fr.fun(
        [
            (i, fr.vset([fr.atom(1), fr.atom(2)])),
            (j, fr.vset([fr.atom("u")])),
        ]
    )
    assert len(fr.product(t).elements()) == 2
    assert len(fr.disjoint_union(t).elements()) == 3
    report = fr.check_product_universal(t, fr.vset(atoms("s")))
    assert report["outcome"] == "pass"
    assert fr.transpose(fr.projections(t)) == fr.identity_fun(fr.product(t))


def test_law_engine():
    ids = fr.law_ids()
    assert len(ids) == len(fr.laws())
    assert "fam.product-universal" in ids
    rep = fr.run_law("rel.converse-involution")
    assert rep["outcome"] == "pass"
    assert rep["instances"] == 16
    refutation = fr.run_law("rel.codomain-not-attribute")
    assert refutation["outcome"] == "fail"
    assert "Y' = " in refutation["counterexample"]


def test_suite_is_deterministic_across_workers():
    a = fr.run_suite(["rel.compose-assoc"], jobs=1)
    b = fr.run_suite(["rel.compose-assoc"], jobs=4)
    assert a == b


def test_script_roundtrip_and_eval():
    text = "set X = {b, a};\nrel R = {(a, 1)};\neval dom R;\n"
    formatted = fr.format_script(text)
    assert "set X = {a, b};" in formatted
    assert fr.format_script(formatted) == formatted
    trace = fr.run_script(text)
    assert trace[-1]["output"] == "{a}"
    assert all(e["status"] == "ok" for e in trace)


def test_script_errors_carry_positions():
    trace = fr.run_script("rel R = {(a, 1), (a, 2)};\neval fun R;")
    assert trace[-1]["status"] == "error"
    assert trace[-1]["output"].startswith("2:1")
