import xml.etree.ElementTree as ET
from collections import Counter
from pathlib import Path

import pytest
from hypothesis import given

from zebra.analysis import derive_counts, hides_ground_patch
from zebra.diagram import (
    Patch,
    ZebraDiagram,
    build_diagram,
    expand_joint,
    patch_totals,
    render_svg,
    render_text,
)
from zebra.model import Joint, Link, Mechanism, ground_joint_count, validate

from conftest import load
from test_analysis import TOPOLOGY
from test_model import mechanisms

FIXTURES = Path(__file__).parent / "fixtures"
SVG = "{http://www.w3.org/2000/svg}"


def check_ownership(vm):
    d = build_diagram(vm)
    owners = Counter(p.label for p in d.owned() if p.kind == "white")
    expected = {l.id for l in vm.moving_links}
    if not hides_ground_patch(vm.mclass, ground_joint_count(vm)):
        expected.add(vm.ground.id)
    assert set(owners) == expected
    assert all(v == 1 for v in owners.values())
    joints = Counter(p.label for p in d.owned() if p.kind == "black")
    assert joints == Counter({j.id: j.dof for j in vm.joints})


def test_expand_joint():
    kinds = [p.kind for p in expand_joint(Joint("j", 3, ("a", "b")))]
    assert kinds == ["black", "grey", "black", "grey", "black"]


def test_helical_single_column():
    d = build_diagram(load("helical"))
    assert d.columns == ((Patch("white", "l1", ground=True), Patch("black", "j1"), Patch("white", "l2")),)


def test_helical_text():
    lines = render_text(build_diagram(load("helical"))).splitlines()
    assert [l.split()[1] for l in lines[1:]] == ["l2", "j1", "l1"]


def test_four_bar_single_chain():
    d = build_diagram(load("four_bar"))
    assert len(d.columns) == 1
    assert patch_totals(d) == (4, 0, 4)
    top = d.columns[0][-1]
    assert top.ref and top.label == "l4"


def test_stewart_columns():
    d = build_diagram(load("stewart"))
    assert len(d.columns) == 6
    for col in d.columns:
        kinds = [p.kind for p in col]
        assert kinds == ["black", "grey", "black", "white", "black", "white",
                         "black", "grey", "black", "grey", "black", "white"]
        assert col[-1].label == "l14"
    assert sum(not col[-1].ref for col in d.columns) == 1


def test_totals_examples():
    assert patch_totals(build_diagram(load("orthoglide"))) == (21, 3, 13)
    solo = validate(Mechanism("solo", "open", (Link("l1", is_ground=True),)))
    assert patch_totals(build_diagram(solo)) == (0, 0, 1)


@pytest.mark.parametrize("name", TOPOLOGY)
def test_totals_match_census(name):
    vm = load(name)
    c = derive_counts(vm)
    assert patch_totals(build_diagram(vm)) == (c.black, c.grey, c.white)
    check_ownership(vm)


@given(mechanisms())
def test_totals_match_census_random(mech):
    vm = validate(mech)
    c = derive_counts(vm)
    d = build_diagram(vm)
    assert patch_totals(d) == (c.black, c.grey, c.white)
    assert build_diagram(vm) == d
    check_ownership(vm)


def test_grey_between_blacks():
    for name in ("stewart", "h4", "cartesian"):
        for col in build_diagram(load(name)).columns:
            for i, p in enumerate(col):
                if p.kind == "grey":
                    assert col[i - 1].kind == col[i + 1].kind == "black"
                    assert col[i - 1].label == col[i + 1].label == p.label


def test_four_bar_text_golden():
    text = render_text(build_diagram(load("four_bar")))
    assert text.encode() == (FIXTURES / "four_bar.zebra.txt").read_bytes()
    assert render_text(build_diagram(load("four_bar"))) == text


def test_four_bar_svg_golden():
    svg = render_svg(build_diagram(load("four_bar")))
    assert svg.encode() == (FIXTURES / "four_bar.zebra.svg").read_bytes()
    root = ET.fromstring(svg.encode())
    assert len(root.findall(f"{SVG}rect")) == 8
    assert len(root.findall(f"{SVG}text")) == 8


def test_stewart_svg():
    root = ET.fromstring(render_svg(build_diagram(load("stewart"))).encode())
    rects = root.findall(f"{SVG}rect")
    assert sum("black" in r.get("class").split() for r in rects) == 36
    xs = {r.get("x") for r in rects}
    assert len(xs) == 6


def test_empty_svg():
    root = ET.fromstring(render_svg(ZebraDiagram("empty", ())).encode())
    assert root.findall(f"{SVG}rect") == []
    assert render_text(ZebraDiagram("empty", ())) == "zebra: empty\n"


@pytest.mark.parametrize("name", TOPOLOGY)
def test_svg_well_formed(name):
    root = ET.fromstring(render_svg(build_diagram(load(name))).encode())
    assert root.tag == f"{SVG}svg"
