import json

import pytest

import bindecomp as bd


def strs(ideals):
    return sorted(str(i) for i in ideals)


def test_two_components():
    I = bd.Ideal(["x", "y"], "x^2 - x*y, x*y - y^2")
    comps = bd.primary_decomposition(I)
    assert strs(c.ideal for c in comps) == ["ideal(x - y)", "ideal(x, y^2)"]
    embedded = [c for c in comps if c.embedded]
    assert len(embedded) == 1 and str(embedded[0].prime) == "ideal(y, x)"


def test_roots_of_unity():
    I = bd.Ideal(["x"], "x^3 - 1")
    comps = bd.primary_decomposition(I)
    assert len(comps) == 3
    assert bd.cyclotomic_order(comps) == 3
    assert all(bd.is_primary(c.ideal) for c in comps)
    assert not any(c.embedded for c in comps)


def test_large_exponent_split():
    I = bd.Ideal(["a", "b"], "a^10000*b - a^10000")
    assert strs(bd.cellular_decomposition(I)) == ["ideal(a^10000)", "ideal(b - 1)"]


def test_cellular_and_hull():
    I = bd.Ideal(["x", "b"], "x^2, x*b - x")
    assert bd.is_cellular(I) == ["b"]
    assert bd.is_cellular(bd.Ideal(["x", "y"], "x*y")) is None
    J = bd.Ideal(["x", "y"], "x^2, x*y^2 - x")
    H = bd.hull(J)
    assert H.contains(J)
    assert strs(bd.minimal_primes(H)) == strs(bd.minimal_primes(J))


def test_radical_and_primes():
    I = bd.Ideal(["x", "y"], "x^2 - x*y, x*y - y^2")
    assert str(bd.radical(I)) == "ideal(x - y)"
    assert len(bd.associated_primes(I)) == 2
    assert len(bd.minimal_primes(I)) == 1


def test_witness_search():
    I = bd.Ideal(["a", "b"], "a^100")
    lattices, stats = bd.witness_search(I, seed=3)
    assert len(lattices) == 1
    assert stats["todo_initial"] == 99
    assert stats["colon_computations"] < stats["todo_initial"]


def test_parse_and_errors():
    I = bd.Ideal.parse("ring: x, y\nI: x - y")
    assert I == bd.Ideal(["x", "y"], "y - x")
    assert I.variables == ["x", "y"]
    with pytest.raises(bd.ParseError):
        bd.Ideal(["x"], "x +* 1")
    with pytest.raises(bd.UnsupportedInputError):
        bd.primary_decomposition(bd.Ideal(["x"], "x - 2"))
    with pytest.raises(ValueError):
        bd.Ideal(["x"], "x - 2").generators


def test_cli_run():
    code, out, err = bd.run(["primary-decomposition", "--ring", "x, y", "--ideal",
                             "x^2 - x*y, x*y - y^2", "--format", "json", "--verify"])
    assert code == 0, err
    doc = json.loads(out)
    assert len(doc["components"]) == 2
    assert doc["verified"] is True
    assert bd.run(["radical", "--ring", "x", "--ideal", "x +"])[0] == 2
    assert bd.run(["radical", "--ring", "x", "--ideal", "2*x - 1"])[0] == 3


def test_intersection_against_sympy():
    sympy = pytest.importorskip("sympy")
    x, y = sympy.symbols("x y")
    I = bd.Ideal(["x", "y"], "x^2 - x*y, x*y - y^2")
    comps = bd.primary_decomposition(I)

    def polys(ideal):
        return [sympy.sympify(g.replace("^", "**"), locals={"x": x, "y": y}) for g in ideal.generators]

    # Intersection of two ideals by elimination with a tag variable t.
    t = sympy.Symbol("t")
    a, b = (polys(c.ideal) for c in comps)
    G = sympy.groebner([t * f for f in a] + [(1 - t) * g for g in b], t, x, y, order="lex")
    meet = [g for g in G.exprs if t not in g.free_symbols]
    original = sympy.groebner(polys(I), x, y, order="grevlex")
    combined = sympy.groebner(meet, x, y, order="grevlex")
    assert original.exprs == combined.exprs
