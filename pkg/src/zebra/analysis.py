"""Patch census, loop count, branch selection and mobility formulas.

Every joint of dof ``f`` expands into ``f`` black patches with ``f - 1`` grey
patches between them; every link is a white patch. The loop count is
``B - (W + G) + 1`` and the mobility comes from one of three formulas
chosen by loop count and mechanism class. The Kutzbach-Grubler formula is
kept alongside as the classical baseline.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import MissingNs, OpenClassWithLoops
from .model import (
    ValidatedMechanism,
    cycle_rank,
    ground_flow,
    ground_joint_count,
    merge_partition,
)
from .textfmt import CountsRecord


class Branch(str, Enum):
    OPEN_LOOP = "open_loop"
    PLANAR_WITH_GREY = "planar_with_grey"
    PLANAR_BLACK_WHITE = "planar_black_white"
    SPATIAL = "spatial"


@dataclass(frozen=True)
class ZebraCounts:
    """Integer census of a zebra-crossing diagram.

    ``white_between`` and ``patches_between`` are the weighted counts of
    white (resp. white and grey) patches lying between black patches.
    ``patches_between`` is ``None`` when a counts record omits it.
    """

    black: int
    grey: int
    white: int
    white_between: int
    patches_between: int | None
    ground_joints: int

    def as_dict(self) -> dict[str, int | None]:
        return {
            "B": self.black,
            "G": self.grey,
            "W": self.white,
            "Nw": self.white_between,
            "Ns": self.patches_between,
            "Jf": self.ground_joints,
        }


@dataclass(frozen=True)
class ComparisonEntry:
    links: int
    j1: int
    j2: int
    j3: int
    planar: int
    spatial: int


@dataclass(frozen=True)
class MobilityReport:
    name: str
    mclass: str
    counts: ZebraCounts
    loops: int
    branch: Branch
    mobility: int
    kutzbach: ComparisonEntry | None = None

    @property
    def overconstrained(self) -> bool:
        """Closed chain whose formula mobility is zero or negative."""
        return self.loops > 0 and self.mobility <= 0


@dataclass(frozen=True)
class Comparison:
    name: str
    zebra: int
    kutzbach: ComparisonEntry
    baseline: str
    agree: bool

    @property
    def baseline_value(self) -> int:
        return self.kutzbach.planar if self.baseline == "planar" else self.kutzbach.spatial


def hides_ground_patch(mclass: str, ground_joints: int) -> bool:
    """Multi-legged spatial manipulators leave the ground patch undrawn."""
    return mclass == "spatial" and ground_joints >= 3


def derive_counts(
    vm: ValidatedMechanism, *, merge: bool = True, platform_weights: bool = True
) -> ZebraCounts:
    """Build the patch census of a validated topology.

    White patches between black patches are counted per merge group. A group
    weighs ``legs - 1`` when one of its links carries a platform override;
    otherwise, for a multi-legged spatial mechanism, a group that is not
    joined to the ground and is reached by ``k >= 3`` joint-disjoint paths
    from the ground is a platform and weighs ``k - 1``. Everything else
    weighs 1.
    """
    black = sum(j.dof for j in vm.joints)
    grey = sum(j.dof - 1 for j in vm.joints)
    jf = ground_joint_count(vm)
    hidden = hides_ground_patch(vm.mclass, jf)
    white = len(vm.moving_links) + (0 if hidden else 1)

    ground = vm.ground.id
    between = 0
    for group in merge_partition(vm, enabled=merge).groups:
        overrides = [vm.link(m).platform_legs for m in group.members if vm.link(m).platform_legs]
        if overrides:
            between += max(overrides) - 1
            continue
        rep = group.members[0]
        if platform_weights and hidden and ground not in vm.neighbors(rep):
            legs = ground_flow(vm, rep)
            if legs >= 3:
                between += legs - 1
                continue
        between += 1

    return ZebraCounts(black, grey, white, between, between + grey, jf)


def loop_count(c: ZebraCounts) -> int:
    return c.black - (c.white + c.grey) + 1


def classify(mclass: str, c: ZebraCounts, loops: int) -> Branch:
    """Pick the mobility formula.

    ``mclass`` may be a topology class (open/planar/spatial) or a counts
    class (planar_bw/planar_grey), which fixes the planar branch directly.
    """
    if loops == 0:
        return Branch.OPEN_LOOP
    if mclass == "open":
        raise OpenClassWithLoops(f"class is open but the census gives {loops} loop(s)")
    if mclass == "planar":
        return Branch.PLANAR_WITH_GREY if c.grey > 0 else Branch.PLANAR_BLACK_WHITE
    if mclass == "planar_grey":
        return Branch.PLANAR_WITH_GREY
    if mclass == "planar_bw":
        return Branch.PLANAR_BLACK_WHITE
    if mclass == "spatial":
        return Branch.SPATIAL
    raise ValueError(f"unknown class {mclass!r}")


def dof_open(c: ZebraCounts) -> int:
    return c.black


def dof_planar_grey(c: ZebraCounts, loops: int) -> int:
    if c.patches_between is None:
        raise MissingNs("the planar grey branch needs the Ns count")
    return c.patches_between - 4 * loops - c.ground_joints + 1


def dof_general(c: ZebraCounts, loops: int) -> int:
    return c.white_between - loops - c.ground_joints + 1


def _mobility(branch: Branch, c: ZebraCounts, loops: int) -> int:
    if branch is Branch.OPEN_LOOP:
        return dof_open(c)
    if branch is Branch.PLANAR_WITH_GREY:
        return dof_planar_grey(c, loops)
    return dof_general(c, loops)


def kutzbach_planar(n: int, j1: int, j2: int) -> int:
    """Planar Kutzbach-Grubler mobility ``3(n - 1) - 2 j1 - j2``."""
    if n < 1:
        raise ValueError("need at least one link")
    return 3 * (n - 1) - 2 * j1 - j2


def kutzbach_spatial(n: int, dofs: list[int] | tuple[int, ...]) -> int:
    """Spatial Kutzbach-Grubler mobility ``6(n - 1) - sum(6 - f)``."""
    if n < 1:
        raise ValueError("need at least one link")
    return 6 * (n - 1) - sum(6 - f for f in dofs)


def kutzbach_entry(vm: ValidatedMechanism) -> ComparisonEntry:
    dofs = [j.dof for j in vm.joints]
    n = len(vm.links)
    j1, j2, j3 = (dofs.count(k) for k in (1, 2, 3))
    # a 3-dof joint removes no planar freedom: 3(n-1) - sum(3 - f)
    return ComparisonEntry(n, j1, j2, j3, kutzbach_planar(n, j1, j2), kutzbach_spatial(n, dofs))


def analyze(vm: ValidatedMechanism, **count_options: bool) -> MobilityReport:
    """Run the full zebra-crossing pipeline on a validated topology."""
    c = derive_counts(vm, **count_options)
    loops = loop_count(c)
    branch = classify(vm.mclass, c, loops)
    return MobilityReport(vm.name, vm.mclass, c, loops, branch, _mobility(branch, c, loops), kutzbach_entry(vm))


def counts_from_record(r: CountsRecord) -> ZebraCounts:
    return ZebraCounts(r.black, r.grey, r.white, r.white_between, r.patches_between, r.ground_joints)


def analyze_counts(r: CountsRecord) -> MobilityReport:
    """Apply the loop formula and the class-selected branch to a supplied census."""
    c = counts_from_record(r)
    loops = loop_count(c)
    branch = classify(r.mclass, c, loops)
    return MobilityReport(r.name, r.mclass, c, loops, branch, _mobility(branch, c, loops))


def compare(vm: ValidatedMechanism) -> Comparison:
    """Zebra mobility against Kutzbach-Grubler (planar for planar class, spatial otherwise)."""
    report = analyze(vm)
    entry = report.kutzbach
    assert entry is not None
    baseline = "planar" if vm.mclass == "planar" else "spatial"
    value = entry.planar if baseline == "planar" else entry.spatial
    return Comparison(vm.name, report.mobility, entry, baseline, report.mobility == value)


def expected_loop_count(vm: ValidatedMechanism) -> int:
    """Loop count implied by the graph: cycle rank, plus one when the ground patch is hidden."""
    extra = 1 if hides_ground_patch(vm.mclass, ground_joint_count(vm)) else 0
    return cycle_rank(vm) + extra
