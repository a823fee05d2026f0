import pytest
from hypothesis import given, strategies as st

from zebra.analysis import (
    Branch,
    ZebraCounts,
    analyze,
    analyze_counts,
    classify,
    compare,
    derive_counts,
    dof_general,
    dof_open,
    dof_planar_grey,
    expected_loop_count,
    kutzbach_planar,
    kutzbach_spatial,
    loop_count,
)
from zebra.errors import MissingNs, OpenClassWithLoops
from zebra.model import cycle_rank, validate
from zebra.textfmt import CountsRecord

from conftest import load
from test_model import mechanisms


def counts(B=0, G=0, W=0, Nw=0, Ns=None, Jf=0):
    return ZebraCounts(B, G, W, Nw, Ns, Jf)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("four_bar", (4, 0, 4, 3, 2)),
        ("cartesian", (12, 3, 7, 8, 3)),
        ("stewart", (36, 18, 13, 17, 6)),
    ],
)
def test_derive_counts(name, expected):
    c = derive_counts(load(name))
    assert (c.black, c.grey, c.white, c.white_between, c.ground_joints) == expected
    assert c.patches_between == c.white_between + c.grey


def test_merge_and_weight_switches():
    six = load("six_bar")
    assert derive_counts(six, merge=False).white_between == 5
    stewart = load("stewart")
    assert derive_counts(stewart, platform_weights=False).white_between == 13


@pytest.mark.parametrize("B, W, G, L", [(4, 4, 0, 1), (1, 2, 0, 0), (21, 13, 3, 6)])
def test_loop_count(B, W, G, L):
    assert loop_count(counts(B=B, W=W, G=G)) == L


def test_classify_examples():
    assert classify("open", counts(B=1, W=2), 0) is Branch.OPEN_LOOP
    assert classify("planar", counts(B=4, W=4), 1) is Branch.PLANAR_BLACK_WHITE
    assert classify("planar", counts(B=5, G=1, W=4), 1) is Branch.PLANAR_WITH_GREY
    assert classify("spatial", derive_counts(load("stewart")), 6) is Branch.SPATIAL
    assert classify("planar_grey", counts(), 2) is Branch.PLANAR_WITH_GREY
    assert classify("planar_bw", counts(G=3), 2) is Branch.PLANAR_BLACK_WHITE


def test_classify_open_with_loops():
    with pytest.raises(OpenClassWithLoops):
        classify("open", counts(B=4, W=4), 1)


@pytest.mark.parametrize("B", [1, 0, 6])
def test_dof_open(B):
    assert dof_open(counts(B=B)) == B


@pytest.mark.parametrize("Ns, L, Jf, M", [(10, 1, 2, 5), (4, 1, 2, -1), (13, 2, 3, 3)])
def test_dof_planar_grey(Ns, L, Jf, M):
    assert dof_planar_grey(counts(Ns=Ns, Jf=Jf), L) == M


def test_dof_planar_grey_needs_ns():
    with pytest.raises(MissingNs):
        dof_planar_grey(counts(Jf=2), 1)


@pytest.mark.parametrize("Nw, L, Jf, M", [(17, 6, 6, 6), (4, 1, 2, 2), (3, 2, 2, 0)])
def test_dof_general(Nw, L, Jf, M):
    assert dof_general(counts(Nw=Nw, Jf=Jf), L) == M


@pytest.mark.parametrize("name, L, M", [("six_bar", 2, 1), ("delta", 6, 3), ("h4", 8, 4)])
def test_analyze_examples(name, L, M):
    r = analyze(load(name))
    assert (r.loops, r.mobility) == (L, M)
    assert r.kutzbach is not None


def test_analyze_is_deterministic():
    assert analyze(load("h4")) == analyze(load("h4"))


def test_analyze_counts_examples():
    r = analyze_counts(load("staircase"))
    assert (r.loops, r.mobility, r.branch) == (5, 1, Branch.PLANAR_BLACK_WHITE)
    r = analyze_counts(load("star"))
    assert (r.loops, r.mobility, r.branch) == (6, 3, Branch.SPATIAL)
    r = analyze_counts(CountsRecord("arm", "open", 3, 4, 3, 1))
    assert (r.loops, r.mobility, r.branch) == (0, 3, Branch.OPEN_LOOP)
    assert r.kutzbach is None


def test_analyze_counts_errors():
    with pytest.raises(MissingNs):
        analyze_counts(CountsRecord("g", "planar_grey", 5, 4, 3, 2, grey=1))
    with pytest.raises(OpenClassWithLoops):
        analyze_counts(CountsRecord("o", "open", 4, 4, 3, 2))
    r = analyze_counts(CountsRecord("g", "planar_grey", 5, 4, 3, 2, grey=1, patches_between=4))
    assert r.mobility == -1 and r.overconstrained


def test_overconstrained_flag():
    case2 = analyze(load("parallel_four_bar"))
    assert case2.mobility == 0 and case2.overconstrained
    assert not analyze(load("four_bar")).overconstrained
    assert not analyze(load("helical")).overconstrained


@pytest.mark.parametrize("n, j1, j2, M", [(4, 4, 0, 1), (5, 5, 0, 2), (5, 6, 0, 0)])
def test_kutzbach_planar(n, j1, j2, M):
    assert kutzbach_planar(n, j1, j2) == M


@pytest.mark.parametrize(
    "n, dofs, M",
    [(14, [2, 1, 3] * 6, 6), (4, [1, 3, 3, 1], 2), (11, [1] * 12, 0)],
)
def test_kutzbach_spatial(n, dofs, M):
    assert kutzbach_spatial(n, dofs) == M


def test_kutzbach_needs_a_link():
    with pytest.raises(ValueError):
        kutzbach_planar(0, 0, 0)
    with pytest.raises(ValueError):
        kutzbach_spatial(0, [])


def test_compare_examples():
    c = compare(load("four_bar"))
    assert (c.zebra, c.kutzbach.planar, c.baseline, c.agree) == (1, 1, "planar", True)
    c = compare(load("cartesian"))
    assert c.zebra == 3 and c.kutzbach.spatial <= 0 and not c.agree
    assert c.baseline == "spatial"
    c = compare(load("helical"))
    assert (c.zebra, c.kutzbach.spatial, c.agree) == (1, 1, True)


TOPOLOGY = ["helical", "four_bar", "six_bar", "five_bar", "four_bar_series", "crank_slider",
            "parallel_four_bar", "stewart", "cartesian", "orthoglide", "h4", "delta"]


@pytest.mark.parametrize("name", TOPOLOGY)
def test_census_invariants(name):
    vm = load(name)
    c = derive_counts(vm)
    assert c.black - c.grey == len(vm.joints)
    assert c.patches_between == c.white_between + c.grey
    assert loop_count(c) == expected_loop_count(vm)
    hidden = vm.mclass == "spatial" and c.ground_joints >= 3
    assert loop_count(c) == cycle_rank(vm) + (1 if hidden else 0)


@given(mechanisms())
def test_census_invariants_random(mech):
    vm = validate(mech)
    c = derive_counts(vm)
    assert c.black - c.grey == len(vm.joints)
    assert c.patches_between == c.white_between + c.grey
    assert loop_count(c) == expected_loop_count(vm)


@given(st.integers(3, 12))
def test_single_cycle_matches_kutzbach(n):
    from zebra.model import Joint, Link, Mechanism

    links = tuple(Link(f"l{i}", is_ground=i == 0) for i in range(n))
    joints = tuple(Joint(f"j{i}", 1, (f"l{i}", f"l{(i + 1) % n}")) for i in range(n))
    r = analyze(validate(Mechanism("ring", "planar", links, joints)))
    assert r.mobility == kutzbach_planar(n, n, 0) == n - 3
