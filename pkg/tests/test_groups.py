import pytest

from cmkraft.groups import (
    GROUP_NAMES,
    GroupError,
    build_named_group,
    cyclic_subgroup,
    double_cosets,
    element_order,
    generated_subgroup,
    is_central,
    left_cosets,
    normalizer,
    subgroup,
)

ORDERS = {"C2": 2, "C4": 4, "D4": 8, "C6": 6, "C2xS3": 12, "E8semiC3": 24, "E8semiS3": 48}


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_named_groups_are_groups(name):
    G = build_named_group(name)
    assert G.order == ORDERS[name]
    assert G.is_associative()
    assert G.names[0] == "1" or G.names[0].endswith(";1)")
    for g in range(G.order):
        assert G.m(g, G.inv[g]) == 0


def test_unknown_group():
    with pytest.raises(GroupError, match="unknown group"):
        build_named_group("S4")


def test_d4_relations():
    G = build_named_group("D4")
    x, y = G.element("x"), G.element("y")
    assert element_order(G, y) == 4 and element_order(G, x) == 2
    assert G.m(x, y, x, y) == 0
    # canonical order x^i y^j
    assert G.names == ("1", "y", "y2", "y3", "x", "xy", "xy2", "xy3")
    assert G.element("yx") == G.element("xy3")
    assert G.element("y^3x") == G.element("xy")
    assert is_central(G, G.element("y2"))
    assert not is_central(G, y)


def test_cyclic_aliases():
    G = build_named_group("C6")
    assert G.element("x3") == G.element("g^3") == 3
    assert G.element("x^2") == 2


def test_s3_relations_in_semidirect():
    G = build_named_group("E8semiS3")
    s, t = G.element("(0,0,0;s)"), G.element("(0,0,0;t)")
    assert element_order(G, s) == 3 and element_order(G, t) == 2
    assert G.m(s, t) == G.m(t, s, s)
    assert G.m(t, s) == G.m(s, s, t)
    assert G.element("(0,0,0;st)") == G.element("(0,0,0;ts2)")
    assert G.element("(0,0,0;ts^2)") == G.element("(0,0,0;ts2)")


def test_semidirect_product_rule():
    G = build_named_group("E8semiS3")
    # (v; s)(w; 1) = (v + s.w; s) with s.(a1,a2,a3) = (a2,a3,a1)
    a = G.element("(0,0,0;s)")
    b = G.element("(1,0,0;1)")
    assert G.names[G.m(a, b)] == "(0,0,1;s)"
    t = G.element("(0,0,0;t)")
    assert G.names[G.m(t, b)] == "(0,1,0;t)"


def test_iota_central_in_threefold_groups():
    G = build_named_group("E8semiS3")
    assert is_central(G, G.element("(1,1,1;1)"))
    H = build_named_group("C2xS3")
    assert is_central(H, H.element("(1;1)"))


def test_bad_tokens():
    G = build_named_group("E8semiS3")
    for tok in ["(0,0;s)", "(0,0,2;1)", "(0,0,0;u)", "zz"]:
        with pytest.raises(GroupError):
            G.element(tok)


def test_subgroup_validation():
    G = build_named_group("D4")
    with pytest.raises(GroupError):
        subgroup(G, [0, G.element("y")])
    assert len(subgroup(G, [0, G.element("x")])) == 2


def test_cosets_partition():
    G = build_named_group("E8semiS3")
    D = generated_subgroup(G, [G.element(t) for t in ("(1,0,0;1)", "(0,1,0;1)", "(0,0,0;t)")])
    assert len(D) == 8
    cosets = left_cosets(G, D)
    assert len(cosets) == 6
    assert sorted(g for c in cosets for g in c.members) == list(range(48))


def test_double_cosets_order_three():
    G = build_named_group("E8semiS3")
    D = generated_subgroup(G, [G.element(t) for t in ("(1,0,0;1)", "(0,1,0;1)", "(0,0,0;t)")])
    S = cyclic_subgroup(G, G.element("(0,0,0;s)"))
    blocks = double_cosets(G, D, S)
    assert sorted(len(b) for b in blocks) == [24, 24]


def test_normalizer_of_d4_delta():
    G = build_named_group("D4")
    D = generated_subgroup(G, [G.element("x")])
    N = normalizer(G, D)
    assert {G.names[g] for g in N.members} == {"1", "x", "y2", "xy2"}
