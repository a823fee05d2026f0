"""The ``.mech`` text format.

One directive per line, tokens separated by blanks, ``#`` starts a comment::

    mechanism <id> [counts]
    class <open|planar|spatial|planar_bw|planar_grey>
    link <id> [ground] [platform legs=<k>] [group=<id> equal=<true|false>]
    joint <id> dof=<1|2|3> kind=<label> connects=<id>,<id>

A ``counts`` document carries a bare patch census instead of links and
joints, with the directives ``B``, ``G``, ``W``, ``Nw``, ``Ns`` and ``Jf``
followed by a non-negative integer. ``G`` defaults to 0 and ``Ns`` is
optional; the rest are required.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import Issue, ParseError
from .model import Joint, Link, Mechanism

TOPOLOGY_CLASSES = ("open", "planar", "spatial")
COUNTS_CLASSES = ("open", "planar_bw", "planar_grey", "spatial")

_IDENT = re.compile(r"[a-z][a-z0-9_]*\Z")
_INT = re.compile(r"(0|[1-9][0-9]*)\Z")
_TOKEN = re.compile(r"\S+")

# directive -> CountsRecord field, in canonical output order
_COUNT_FIELDS = {
    "B": "black",
    "G": "grey",
    "W": "white",
    "Nw": "white_between",
    "Ns": "patches_between",
    "Jf": "ground_joints",
}
_REQUIRED_COUNTS = ("B", "W", "Nw", "Jf")


@dataclass(frozen=True)
class CountsRecord:
    """A patch census supplied directly rather than derived from topology."""

    name: str
    mclass: str
    black: int
    white: int
    white_between: int
    ground_joints: int
    grey: int = 0
    patches_between: int | None = None


@dataclass
class _Tok:
    text: str
    col: int


def _tokens(line: str) -> list[_Tok]:
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return [_Tok(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


class _Parser:
    def __init__(self) -> None:
        self.issues: list[Issue] = []
        self.name: str | None = None
        self.mode: str | None = None
        self.header_line = 0
        self.mclass: tuple[str, int, int] | None = None
        self.links: list[Link] = []
        self.joints: list[Joint] = []
        self.counts: dict[str, tuple[int, int]] = {}
        self.ids: set[str] = set()

    def error(self, code: str, msg: str, line: int, col: int) -> None:
        self.issues.append(Issue(code, msg, line=line, col=col))

    def ident(self, tok: _Tok, line: int, what: str) -> bool:
        if not _IDENT.match(tok.text):
            self.error("SyntaxError", f"bad {what} {tok.text!r}", line, tok.col)
            return False
        return True

    def claim_id(self, tok: _Tok, line: int) -> bool:
        if tok.text in self.ids:
            self.error("DuplicateId", f"identifier {tok.text!r} already defined", line, tok.col)
            return False
        self.ids.add(tok.text)
        return True

    def feed(self, lineno: int, toks: list[_Tok]) -> None:
        head, args = toks[0], toks[1:]
        word = head.text
        if word == "mechanism":
            self.on_mechanism(lineno, head, args)
            return
        if word not in ("class", "link", "joint") and word not in _COUNT_FIELDS:
            self.error("UnknownDirective", f"unknown directive {word!r}", lineno, head.col)
            return
        if self.mode is None:
            if self.header_line == 0:
                self.error("MissingMechanismHeader", "document must start with 'mechanism'", lineno, head.col)
                self.header_line = -1
        if word == "class":
            self.on_class(lineno, head, args)
        elif word in ("link", "joint"):
            if self.mode == "counts":
                self.error("MixedModes", f"'{word}' is not allowed in a counts document", lineno, head.col)
            elif word == "link":
                self.on_link(lineno, head, args)
            else:
                self.on_joint(lineno, head, args)
        else:
            if self.mode == "topology":
                self.error("MixedModes", f"'{word}' is only allowed in a counts document", lineno, head.col)
            else:
                self.on_count(lineno, head, args)

    def on_mechanism(self, lineno: int, head: _Tok, args: list[_Tok]) -> None:
        if self.header_line != 0:
            self.error("SyntaxError", "mechanism header must appear once, first", lineno, head.col)
            return
        self.header_line = lineno
        if not args or len(args) > 2:
            self.error("SyntaxError", "expected 'mechanism <id> [counts]'", lineno, head.col)
            return
        if self.ident(args[0], lineno, "mechanism name"):
            self.name = args[0].text
        if len(args) == 2 and args[1].text != "counts":
            self.error("SyntaxError", f"expected 'counts', got {args[1].text!r}", lineno, args[1].col)
            return
        self.mode = "counts" if len(args) == 2 else "topology"

    def on_class(self, lineno: int, head: _Tok, args: list[_Tok]) -> None:
        if self.mclass is not None:
            self.error("SyntaxError", "class given twice", lineno, head.col)
            return
        if len(args) != 1:
            self.error("SyntaxError", "expected 'class <value>'", lineno, head.col)
            return
        allowed = COUNTS_CLASSES if self.mode == "counts" else TOPOLOGY_CLASSES
        if self.mode is None:
            allowed = TOPOLOGY_CLASSES + COUNTS_CLASSES
        if args[0].text not in allowed:
            self.error(
                "SyntaxError",
                f"class must be one of {', '.join(dict.fromkeys(allowed))}",
                lineno,
                args[0].col,
            )
            return
        self.mclass = (args[0].text, lineno, args[0].col)

    def on_link(self, lineno: int, head: _Tok, args: list[_Tok]) -> None:
        if not args:
            self.error("SyntaxError", "expected 'link <id> ...'", lineno, head.col)
            return
        ok = self.ident(args[0], lineno, "link id") and self.claim_id(args[0], lineno)
        ground = False
        legs: int | None = None
        group: str | None = None
        equal: bool | None = None
        seen: set[str] = set()
        rest = args[1:]
        i = 0
        while i < len(rest):
            tok = rest[i]
            key = tok.text.split("=", 1)[0]
            if key in seen:
                self.error("SyntaxError", f"option {key!r} repeated", lineno, tok.col)
                ok = False
            seen.add(key)
            if tok.text == "ground":
                ground = True
            elif tok.text == "platform":
                nxt = rest[i + 1] if i + 1 < len(rest) else None
                if nxt is None or not nxt.text.startswith("legs="):
                    self.error("SyntaxError", "expected 'legs=<k>' after 'platform'", lineno, tok.col)
                    ok = False
                else:
                    i += 1
                    value = nxt.text[len("legs="):]
                    if not _INT.match(value) or int(value) < 2:
                        self.error("SyntaxError", "platform legs must be an integer >= 2", lineno, nxt.col + 5)
                        ok = False
                    else:
                        legs = int(value)
            elif key == "group":
                value = tok.text[len("group="):]
                if not _IDENT.match(value):
                    self.error("SyntaxError", f"bad group id {value!r}", lineno, tok.col + 6)
                    ok = False
                group = value
            elif key == "equal":
                value = tok.text[len("equal="):]
                if value not in ("true", "false"):
                    self.error("SyntaxError", "equal must be true or false", lineno, tok.col + 6)
                    ok = False
                equal = value == "true"
            else:
                self.error("SyntaxError", f"unexpected link option {tok.text!r}", lineno, tok.col)
                ok = False
            i += 1
        if ("group" in seen) != ("equal" in seen):
            self.error("SyntaxError", "'group=' and 'equal=' must be given together", lineno, head.col)
            ok = False
        if ok:
            self.links.append(Link(args[0].text, ground, legs, group, bool(equal)))

    def on_joint(self, lineno: int, head: _Tok, args: list[_Tok]) -> None:
        if not args:
            self.error("SyntaxError", "expected 'joint <id> dof=.. kind=.. connects=..'", lineno, head.col)
            return
        ok = self.ident(args[0], lineno, "joint id") and self.claim_id(args[0], lineno)
        opts: dict[str, tuple[str, int]] = {}
        for tok in args[1:]:
            key, sep, value = tok.text.partition("=")
            if not sep or key not in ("dof", "kind", "connects"):
                self.error("SyntaxError", f"unexpected joint option {tok.text!r}", lineno, tok.col)
                ok = False
                continue
            if key in opts:
                self.error("SyntaxError", f"option {key!r} repeated", lineno, tok.col)
                ok = False
                continue
            opts[key] = (value, tok.col + len(key) + 1)
        for key in ("dof", "kind", "connects"):
            if key not in opts:
                self.error("SyntaxError", f"joint lacks '{key}='", lineno, head.col)
                ok = False
        dof = 0
        if "dof" in opts:
            value, col = opts["dof"]
            if value not in ("1", "2", "3"):
                self.error("SyntaxError", f"dof must be 1, 2 or 3, got {value!r}", lineno, col)
                ok = False
            else:
                dof = int(value)
        if "kind" in opts:
            value, col = opts["kind"]
            if not _IDENT.match(value):
                self.error("SyntaxError", f"bad joint kind {value!r}", lineno, col)
                ok = False
        ends: tuple[str, str] = ("", "")
        if "connects" in opts:
            value, col = opts["connects"]
            parts = value.split(",")
            if len(parts) != 2 or not all(_IDENT.match(p) for p in parts):
                self.error("SyntaxError", "connects must be '<id>,<id>'", lineno, col)
                ok = False
            else:
                ends = (parts[0], parts[1])
        if ok:
            self.joints.append(Joint(args[0].text, dof, ends, opts["kind"][0]))

    def on_count(self, lineno: int, head: _Tok, args: list[_Tok]) -> None:
        if head.text in self.counts:
            self.error("SyntaxError", f"{head.text} given twice", lineno, head.col)
            return
        if len(args) != 1 or not _INT.match(args[0].text):
            col = args[0].col if args else head.col
            self.error("SyntaxError", f"expected '{head.text} <non-negative integer>'", lineno, col)
            return
        self.counts[head.text] = (int(args[0].text), lineno)

    def finish(self, last_line: int) -> Mechanism | CountsRecord:
        if self.header_line == 0:
            self.error("MissingMechanismHeader", "document has no 'mechanism' header", max(last_line, 1), 1)
        at = max(self.header_line, 1)
        if self.mclass is None and self.header_line > 0:
            self.error("SyntaxError", "missing 'class' directive", at, 1)
        if self.mode == "counts":
            for key in _REQUIRED_COUNTS:
                if key not in self.counts:
                    self.error("SyntaxError", f"counts document lacks '{key}'", at, 1)
            if "B" in self.counts and "G" in self.counts and self.counts["G"][0] > self.counts["B"][0]:
                self.error("SyntaxError", "G cannot exceed B", self.counts["G"][1], 1)
        if self.issues:
            self.issues.sort(key=lambda i: (i.line or 0, i.col or 0))
            raise ParseError(self.issues)
        assert self.name is not None and self.mclass is not None
        if self.mode == "counts":
            values = {_COUNT_FIELDS[k]: v for k, (v, _) in self.counts.items()}
            return CountsRecord(name=self.name, mclass=self.mclass[0], **values)
        return Mechanism(self.name, self.mclass[0], tuple(self.links), tuple(self.joints))


def parse(text: str) -> Mechanism | CountsRecord:
    """Parse a ``.mech`` document.

    Raises :class:`ParseError` carrying every problem found, each with a
    1-based line and column.
    """
    p = _Parser()
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        toks = _tokens(raw)
        if toks:
            p.feed(lineno, toks)
    return p.finish(len(lines))


def parse_file(path: str | Path) -> Mechanism | CountsRecord:
    return parse(Path(path).read_text(encoding="latin-1"))


def _link_line(link: Link) -> str:
    parts = ["link", link.id]
    if link.is_ground:
        parts.append("ground")
    if link.platform_legs is not None:
        parts += ["platform", f"legs={link.platform_legs}"]
    if link.parallel_group is not None:
        parts += [f"group={link.parallel_group}", f"equal={'true' if link.equal_lengths else 'false'}"]
    return " ".join(parts)


def serialize(obj: Mechanism | CountsRecord) -> str:
    """Canonical text: links then joints sorted by id, single spaces, final newline."""
    if isinstance(obj, CountsRecord):
        lines = [f"mechanism {obj.name} counts", f"class {obj.mclass}"]
        for key, attr in _COUNT_FIELDS.items():
            value = getattr(obj, attr)
            if value is not None:
                lines.append(f"{key} {value}")
        return "\n".join(lines) + "\n"
    # Mechanism keeps its parts sorted by natural id order.
    lines = [f"mechanism {obj.name}", f"class {obj.mclass}"]
    lines += [_link_line(l) for l in obj.links]
    lines += [
        f"joint {j.id} dof={j.dof} kind={j.kind} connects={j.endpoints[0]},{j.endpoints[1]}"
        for j in obj.joints
    ]
    return "\n".join(lines) + "\n"
