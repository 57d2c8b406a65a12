import pytest

from cmkraft.cm import (
    CMError,
    all_cm_types,
    cm_type_classes,
    format_cm_type,
    is_primitive,
    labelled_cm_type_classes,
    make_cm_config,
    make_cm_type,
    parse_cm_type,
    standard_config,
)
from cmkraft.groups import Subgroup, build_named_group, generated_subgroup


def test_e8s3_classes_match_phi_list():
    cfg = standard_config("E8semiS3")
    G = cfg.G
    assert len(cfg.classes) == 6 and cfg.g == 3
    phi = {
        1: "(0,0,0;1)", 2: "(0,0,1;1)", 3: "(0,0,0;st)",
        4: "(0,0,0;ts)", 5: "(1,1,1;st)", 6: "(1,1,1;ts)",
    }
    idx = {k: cfg.class_of[G.element(v)] for k, v in phi.items()}
    assert len(set(idx.values())) == 6
    assert cfg.conj(idx[1]) == idx[2]
    assert cfg.conj(idx[3]) == idx[5]
    assert cfg.conj(idx[4]) == idx[6]


def test_type_counts():
    for name, g in [("C2", 1), ("C4", 2), ("D4", 2), ("C6", 3), ("E8semiS3", 3)]:
        assert len(all_cm_types(standard_config(name))) == 2 ** g


def test_e8s3_has_four_primitive_classes():
    cfg = standard_config("E8semiS3")
    classes = cm_type_classes(cfg)
    assert len(classes) == 4
    assert all(len(o) == 2 for o in classes)


def test_d4_all_primitive():
    cfg = standard_config("D4")
    assert all(is_primitive(cfg, t) for t in all_cm_types(cfg))


def test_c6_nonprimitive_type():
    cfg = standard_config("C6")
    t = parse_cm_type(cfg, "S1=[1,x2,x4]")
    assert not is_primitive(cfg, t)
    assert is_primitive(cfg, parse_cm_type(cfg, "S1=[1,x,x2]"))


def test_conjugate_type_is_equivalent():
    # iota is central, so right translation by iota maps a type to its conjugate
    for name in ("D4", "E8semiS3", "C2xS3"):
        cfg = standard_config(name)
        for orbit in cm_type_classes(cfg, primitive_only=False):
            s1s = {t.s1 for t in orbit}
            for t in orbit:
                assert t.s0 in s1s


def test_labels():
    cfg = standard_config("E8semiS3")
    labels = [label for label, _ in labelled_cm_type_classes(cfg)]
    assert labels == ["A", "B", "C", "D"]
    d = dict(labelled_cm_type_classes(cfg))["D"][0]
    assert format_cm_type(cfg, d) == "S1=[(0,0,0;1),(0,0,0;s),(0,0,0;s2)]"


def test_parse_cm_type():
    cfg = standard_config("D4")
    t = parse_cm_type(cfg, "S1=[1,y]")
    # any member names its class
    assert parse_cm_type(cfg, "S1=[x, yx]") == t
    with pytest.raises(CMError, match="unknown element"):
        parse_cm_type(cfg, "S1=[1,q]")
    with pytest.raises(CMError, match="exactly one"):
        parse_cm_type(cfg, "S1=[1,y2]")
    with pytest.raises(CMError, match="twice"):
        parse_cm_type(cfg, "S1=[1,x]")
    with pytest.raises(CMError, match="cannot parse"):
        parse_cm_type(cfg, "1,y")


def test_config_errors():
    G = build_named_group("D4")
    D = generated_subgroup(G, [G.element("x")])
    with pytest.raises(CMError, match="central"):
        make_cm_config(G, D, G.element("xy2"))
    with pytest.raises(CMError, match="order 2"):
        make_cm_config(G, D, G.element("y"))
    with pytest.raises(CMError, match="not a subgroup"):
        make_cm_config(G, Subgroup((0, G.element("y"))), G.element("y2"))
    with pytest.raises(CMError, match="in Delta"):
        H = generated_subgroup(G, [G.element("y2")])
        make_cm_config(G, H, G.element("y2"))
    with pytest.raises(CMError, match="out of range"):
        make_cm_config(G, D, 99)


def test_make_cm_type_rejects_bad_choice():
    cfg = standard_config("C4")
    with pytest.raises(CMError):
        make_cm_type(cfg, {0, 2})
