"""Mechanism data model, validation and link-joint graph utilities.

A mechanism is a connected multigraph: links are vertices, joints are
edges carrying a degree of freedom between 1 and 3. Exactly one link is the
ground (fixed) link.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import _graph
from .errors import Issue, LinkIsGround, TooLargeForExactSearch, ValidationError

MECHANISM_CLASSES = ("open", "planar", "spatial")

#: Largest link count accepted by the exact isomorphism search.
MAX_ISOMORPHISM_LINKS = 16

_DIGITS = re.compile(r"(\d+)")


def natural_key(ident: str) -> tuple:
    """Sort key that orders ``l2`` before ``l10``."""
    return tuple(int(p) if p.isdigit() else p for p in _DIGITS.split(ident))


@dataclass(frozen=True)
class Link:
    id: str
    is_ground: bool = False
    platform_legs: int | None = None
    parallel_group: str | None = None
    equal_lengths: bool = False


@dataclass(frozen=True)
class Joint:
    id: str
    dof: int
    endpoints: tuple[str, str]
    kind: str = "revolute"


@dataclass(frozen=True)
class Mechanism:
    """Unvalidated mechanism description.

    Links and joints are stored sorted by identifier, so two mechanisms built
    from the same parts in a different order compare equal.
    """

    name: str
    mclass: str
    links: tuple[Link, ...] = ()
    joints: tuple[Joint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "links", tuple(sorted(self.links, key=lambda x: natural_key(x.id))))
        object.__setattr__(self, "joints", tuple(sorted(self.joints, key=lambda x: natural_key(x.id))))


@dataclass(frozen=True)
class MergeGroup:
    members: tuple[str, ...]
    merged: bool


@dataclass(frozen=True)
class MergePartition:
    groups: tuple[MergeGroup, ...]

    def group_of(self, link_id: str) -> MergeGroup:
        for g in self.groups:
            if link_id in g.members:
                return g
        raise KeyError(link_id)


@dataclass(frozen=True, eq=False)
class ValidatedMechanism:
    """A mechanism known to satisfy every structural invariant.

    Only :func:`validate` should build these. Vertex indices follow the
    sorted link order of the wrapped mechanism.
    """

    mechanism: Mechanism
    index: dict[str, int] = field(repr=False)
    edges: tuple[tuple[int, int, int], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return self.mechanism.name

    @property
    def mclass(self) -> str:
        return self.mechanism.mclass

    @property
    def links(self) -> tuple[Link, ...]:
        return self.mechanism.links

    @property
    def joints(self) -> tuple[Joint, ...]:
        return self.mechanism.joints

    @property
    def ground(self) -> Link:
        return next(l for l in self.links if l.is_ground)

    @property
    def moving_links(self) -> tuple[Link, ...]:
        return tuple(l for l in self.links if not l.is_ground)

    def link(self, link_id: str) -> Link:
        return self.links[self.index[link_id]]

    def incident_joints(self, link_id: str) -> list[Joint]:
        return [j for j in self.joints if link_id in j.endpoints]

    def neighbors(self, link_id: str) -> list[str]:
        """Neighbour link ids, repeated once per connecting joint."""
        out = []
        for j in self.incident_joints(link_id):
            a, b = j.endpoints
            out.append(b if a == link_id else a)
        return out

    def degree(self, link_id: str) -> int:
        return len(self.incident_joints(link_id))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValidatedMechanism):
            return NotImplemented
        return self.mechanism == other.mechanism

    def __hash__(self) -> int:
        return hash(self.mechanism)


def validate(mech: Mechanism) -> ValidatedMechanism:
    """Check every invariant and wrap the mechanism.

    Raises :class:`ValidationError` listing all violations, not just the first.
    """
    issues: list[Issue] = []

    if mech.mclass not in MECHANISM_CLASSES:
        issues.append(Issue("BadClass", f"unknown mechanism class {mech.mclass!r}"))

    seen: set[str] = set()
    for ident in [l.id for l in mech.links] + [j.id for j in mech.joints]:
        if ident in seen:
            issues.append(Issue("DuplicateId", f"identifier {ident!r} used more than once", subject=ident))
        seen.add(ident)

    grounds = [l.id for l in mech.links if l.is_ground]
    if not grounds:
        issues.append(Issue("NoGroundLink", "no link is marked as ground"))
    elif len(grounds) > 1:
        issues.append(Issue("MultipleGroundLinks", f"several ground links: {', '.join(grounds)}"))

    for l in mech.links:
        if l.platform_legs is not None and l.platform_legs < 2:
            issues.append(
                Issue("BadPlatformLegs", f"link {l.id}: platform legs must be at least 2", subject=l.id)
            )
        if l.equal_lengths and l.parallel_group is None:
            issues.append(
                Issue("BadParallelGroup", f"link {l.id}: equal lengths need a parallel group", subject=l.id)
            )

    link_ids = {l.id for l in mech.links}
    dangling = False
    for j in mech.joints:
        if j.dof not in (1, 2, 3):
            issues.append(Issue("BadJointDof", f"joint {j.id}: dof {j.dof} not in 1..3", subject=j.id))
        a, b = j.endpoints
        for end in (a, b):
            if end not in link_ids:
                dangling = True
                issues.append(
                    Issue("DanglingJointEndpoint", f"joint {j.id} references unknown link {end!r}", subject=j.id)
                )
        if a == b:
            issues.append(Issue("SelfLoopJoint", f"joint {j.id} connects link {a} to itself", subject=j.id))

    index = {l.id: i for i, l in enumerate(mech.links)}
    edges = tuple(
        (index[j.endpoints[0]], index[j.endpoints[1]], j.dof)
        for j in mech.joints
        if j.endpoints[0] in index and j.endpoints[1] in index and j.endpoints[0] != j.endpoints[1]
    )
    if not dangling and not _graph.is_connected(len(mech.links), edges):
        issues.append(Issue("DisconnectedGraph", "links do not form a single connected assembly"))

    if mech.mclass == "open" and len(edges) - len(mech.links) + _graph.components(len(mech.links), edges) > 0:
        issues.append(Issue("OpenClassHasLoop", "class is open but the link-joint graph has a loop"))

    if issues:
        raise ValidationError(issues)
    return ValidatedMechanism(mech, index, edges)


def ground_joint_count(vm: ValidatedMechanism) -> int:
    return vm.degree(vm.ground.id)


def cycle_rank(vm: ValidatedMechanism) -> int:
    """Number of independent loops: joints - links + 1."""
    return len(vm.joints) - len(vm.links) + 1


def ground_flow(vm: ValidatedMechanism, link_id: str) -> int:
    """Maximum number of joint-disjoint paths from the ground link to ``link_id``."""
    if vm.link(link_id).is_ground:
        raise LinkIsGround(f"{link_id} is the ground link")
    return _graph.max_edge_disjoint_paths(
        len(vm.links), vm.edges, vm.index[vm.ground.id], vm.index[link_id]
    )


def merge_partition(vm: ValidatedMechanism, *, enabled: bool = True) -> MergePartition:
    """Group structurally parallel moving links that count as one white patch.

    Moving links merge when they have the same multiset of neighbour links,
    are pairwise non-adjacent, are not joined to the ground link, and none of
    them is annotated as part of an equal-length parallelogram group.
    """
    ground = vm.ground.id
    buckets: dict[tuple, list[str]] = {}
    for l in vm.moving_links:
        key = tuple(sorted(vm.neighbors(l.id), key=natural_key))
        buckets.setdefault(key, []).append(l.id)

    groups: list[MergeGroup] = []
    for key, members in buckets.items():
        mergeable = (
            enabled
            and len(members) >= 2
            and ground not in key
            and not any(m in key for m in members)
            and not any(vm.link(m).equal_lengths for m in members)
        )
        if mergeable:
            groups.append(MergeGroup(tuple(members), True))
        else:
            groups.extend(MergeGroup((m,), False) for m in members)
    groups.sort(key=lambda g: natural_key(g.members[0]))
    return MergePartition(tuple(groups))


def canonical_certificate(vm: ValidatedMechanism) -> tuple:
    """Certificate equal for two mechanisms iff they are isomorphic.

    Isomorphism preserves incidence, joint dof and the ground flag; link
    and joint names are ignored.
    """
    if len(vm.links) > MAX_ISOMORPHISM_LINKS:
        raise TooLargeForExactSearch(
            f"{vm.name} has {len(vm.links)} links; exact search is limited to {MAX_ISOMORPHISM_LINKS}"
        )
    cert, _ = _graph.canonical_form(len(vm.links), vm.edges, [l.is_ground for l in vm.links])
    return cert


def are_isomorphic(a: ValidatedMechanism, b: ValidatedMechanism) -> bool:
    if len(a.links) != len(b.links) or len(a.joints) != len(b.joints):
        return False
    return canonical_certificate(a) == canonical_certificate(b)
