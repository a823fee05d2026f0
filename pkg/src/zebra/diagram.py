"""Zebra-crossing diagram layout and renderers.

A diagram is a list of columns, each a bottom-up sequence of patches along
one serial chain. A link shared by several chains is owned by the first
column that reaches it; other columns end (or start) on a reference to it,
so totals over owned patches match the analysis census.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .analysis import hides_ground_patch
from .model import Joint, ValidatedMechanism, ground_joint_count, natural_key

BLACK, GREY, WHITE = "black", "grey", "white"


@dataclass(frozen=True)
class Patch:
    kind: str
    label: str
    ref: bool = False
    ground: bool = False


@dataclass(frozen=True)
class ZebraDiagram:
    name: str
    columns: tuple[tuple[Patch, ...], ...]

    def owned(self) -> list[Patch]:
        return [p for col in self.columns for p in col if not p.ref]


def expand_joint(joint: Joint) -> list[Patch]:
    """``dof`` black patches alternating with ``dof - 1`` grey ones."""
    out = [Patch(BLACK, joint.id)]
    for _ in range(joint.dof - 1):
        out += [Patch(GREY, joint.id), Patch(BLACK, joint.id)]
    return out


def build_diagram(vm: ValidatedMechanism) -> ZebraDiagram:
    """Lay out the diagram deterministically.

    Chains start at the ground joints (in id order). A chain keeps climbing
    while the link it reaches has exactly one undrawn joint; at a branching
    link it stops and each undrawn joint becomes a later chain starting from
    a reference to that link. Ground-joint chains always run first.
    """
    ground = vm.ground.id
    hidden = hides_ground_patch(vm.mclass, ground_joint_count(vm))
    by_id = sorted(vm.joints, key=lambda j: natural_key(j.id))
    incident = {l.id: [j for j in by_id if l.id in j.endpoints] for l in vm.links}

    drawn: set[str] = set()
    owned: set[str] = set()
    starts = deque((ground, j) for j in incident[ground])
    branches: deque[tuple[str, Joint]] = deque()
    columns: list[tuple[Patch, ...]] = []

    def white(link_id: str) -> Patch | None:
        is_ground = link_id == ground
        if is_ground and hidden:
            return None
        if link_id in owned:
            return Patch(WHITE, link_id, ref=True, ground=is_ground)
        owned.add(link_id)
        return Patch(WHITE, link_id, ground=is_ground)

    if not vm.joints:
        base = white(ground)
        return ZebraDiagram(vm.name, ((base,),) if base else ())

    while starts or branches:
        link_id, joint = starts.popleft() if starts else branches.popleft()
        if joint.id in drawn:
            continue
        col: list[Patch] = []
        base = white(link_id)
        if base:
            col.append(base)
        while True:
            drawn.add(joint.id)
            col += expand_joint(joint)
            a, b = joint.endpoints
            nxt = b if a == link_id else a
            reached_owned = nxt in owned or (nxt == ground and hidden)
            patch = white(nxt)
            if patch:
                col.append(patch)
            if reached_owned:
                break
            pending = [j for j in incident[nxt] if j.id not in drawn]
            if len(pending) != 1:
                branches.extend((nxt, j) for j in pending)
                break
            link_id, joint = nxt, pending[0]
        columns.append(tuple(col))
    return ZebraDiagram(vm.name, tuple(columns))


def patch_totals(d: ZebraDiagram) -> tuple[int, int, int]:
    """(black, grey, white) over owned patches; references are not counted."""
    owned = d.owned()
    return (
        sum(p.kind == BLACK for p in owned),
        sum(p.kind == GREY for p in owned),
        sum(p.kind == WHITE for p in owned),
    )


def _label(p: Patch) -> str:
    return p.label + ("^" if p.ref else "")


def _cell(p: Patch, width: int) -> str:
    text = f" {_label(p)} "
    if p.kind == BLACK:
        return text.center(width, "#")
    if p.kind == GREY:
        return text.center(width, ":")
    left, right = ("{", "}") if p.ground else ("[", "]")
    return left + text.center(width - 2, ".") + right


def render_text(d: ZebraDiagram) -> str:
    """Text art, top row first. ``#`` black, ``:`` grey, ``[..]`` white.

    The ground patch is framed with braces; ``^`` marks a reference to a
    link drawn in another column.
    """
    patches = [p for col in d.columns for p in col]
    width = max([6] + [len(_label(p)) + 4 for p in patches])
    width += width % 2
    height = max([0] + [len(col) for col in d.columns])
    lines = [f"zebra: {d.name}"]
    for row in range(height - 1, -1, -1):
        cells = [_cell(col[row], width) if row < len(col) else " " * width for col in d.columns]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


PATCH_W, PATCH_H, GAP, MARGIN = 60, 24, 20, 10
_FILL = {BLACK: "#000000", GREY: "#808080", WHITE: "#ffffff"}


def render_svg(d: ZebraDiagram) -> str:
    """Standalone SVG; owned patches become rects with a text label each."""
    height = max([0] + [len(col) for col in d.columns])
    w = 2 * MARGIN + len(d.columns) * PATCH_W + max(0, len(d.columns) - 1) * GAP
    h = 2 * MARGIN + height * PATCH_H
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<title>{escape(d.name)}</title>",
    ]
    for ci, col in enumerate(d.columns):
        x = MARGIN + ci * (PATCH_W + GAP)
        for k, p in enumerate(col):
            y = MARGIN + (height - 1 - k) * PATCH_H
            if p.ref:
                x2, y2 = x + PATCH_W, y + PATCH_H
                out.append(
                    f'<polyline class="ref" points="{x},{y} {x2},{y} {x2},{y2} {x},{y2} {x},{y}" '
                    f'fill="none" stroke="#000000" stroke-dasharray="4,3">'
                    f"<title>{escape(p.label)}</title></polyline>"
                )
                continue
            cls = f"patch {p.kind}" + (" ground" if p.ground else "")
            stroke = ' stroke-width="3"' if p.ground else ""
            out.append(
                f'<rect class="{cls}" x="{x}" y="{y}" width="{PATCH_W}" height="{PATCH_H}" '
                f'fill="{_FILL[p.kind]}" stroke="#000000"{stroke}/>'
            )
            ink = "#ffffff" if p.kind == BLACK else "#000000"
            out.append(
                f'<text x="{x + PATCH_W // 2}" y="{y + PATCH_H // 2 + 4}" text-anchor="middle" '
                f'font-family="monospace" font-size="11" fill="{ink}">{escape(p.label)}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
