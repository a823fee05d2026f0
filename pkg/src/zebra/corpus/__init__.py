"""Golden corpus of worked mechanisms and the check runner.

``manifest.txt`` holds one line per entry::

    name mode source B G W Nw Jf L M [options]

A ``-`` marks a value the corpus does not pin. The only option is
``equal=<id>,<id>,...``, which places the listed links in one equal-length
parallel group on top of the shared source file.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

from ..analysis import MobilityReport, analyze, analyze_counts
from ..model import Mechanism, validate
from ..textfmt import CountsRecord, parse

CORPUS_DIR = Path(__file__).resolve().parent
FIELDS = ("B", "G", "W", "Nw", "Jf", "L", "M")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    mode: str
    source_file: str
    source: str
    expected: dict[str, int | None]
    options: tuple[str, ...] = ()
    notes: str = ""

    def document(self) -> Mechanism | CountsRecord:
        doc = parse(self.source)
        for opt in self.options:
            key, _, value = opt.partition("=")
            if key == "equal" and isinstance(doc, Mechanism):
                doc = _mark_equal(doc, value.split(","))
            else:
                raise ValueError(f"{self.name}: unsupported option {opt!r}")
        return doc


def _mark_equal(mech: Mechanism, ids: list[str]) -> Mechanism:
    links = tuple(
        dataclasses.replace(l, parallel_group="equal", equal_lengths=True) if l.id in ids else l
        for l in mech.links
    )
    return dataclasses.replace(mech, links=links)


def _int_or_none(tok: str) -> int | None:
    return None if tok == "-" else int(tok)


def entries(corpus_dir: str | Path | None = None) -> list[CorpusEntry]:
    """Load the corpus in manifest order."""
    root = Path(corpus_dir) if corpus_dir is not None else CORPUS_DIR
    out = []
    for raw in (root / "manifest.txt").read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        name, mode, source_file, *rest = line
        values, options = rest[: len(FIELDS)], tuple(rest[len(FIELDS):])
        if len(values) != len(FIELDS):
            raise ValueError(f"manifest line for {name!r} needs {len(FIELDS)} values")
        text = (root / source_file).read_text(encoding="latin-1")
        notes = " ".join(
            l.lstrip("# ").strip() for l in text.splitlines() if l.startswith("#")
        )
        expected = dict(zip(FIELDS, map(_int_or_none, values)))
        out.append(CorpusEntry(name, mode, source_file, text, expected, options, notes))
    return out


@dataclass(frozen=True)
class EntryResult:
    name: str
    mismatches: tuple[tuple[str, int, int | None], ...] = ()
    error: str | None = None
    report: MobilityReport | None = field(default=None, compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.error is None


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[EntryResult, ...]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            if r.passed:
                out.append(f"PASS {r.name}")
            elif r.error:
                out.append(f"FAIL {r.name}: {r.error}")
            else:
                diffs = ", ".join(f"({f}, {e}, {g})" for f, e, g in r.mismatches)
                out.append(f"FAIL {r.name}: {diffs}")
        out.append(f"{self.passed}/{self.total} passed")
        return out


def observed(report: MobilityReport) -> dict[str, int | None]:
    c = report.counts
    return {
        "B": c.black,
        "G": c.grey,
        "W": c.white,
        "Nw": c.white_between,
        "Jf": c.ground_joints,
        "L": report.loops,
        "M": report.mobility,
    }


def run_entry(entry: CorpusEntry) -> MobilityReport:
    doc = entry.document()
    if isinstance(doc, CountsRecord):
        return analyze_counts(doc)
    return analyze(validate(doc))


def check_entry(entry: CorpusEntry) -> EntryResult:
    try:
        report = run_entry(entry)
    except Exception as exc:  # reported per entry, the runner keeps going
        return EntryResult(entry.name, error=f"{type(exc).__name__}: {exc}")
    got = observed(report)
    mismatches = tuple(
        (f, want, got[f]) for f, want in entry.expected.items() if want is not None and got[f] != want
    )
    return EntryResult(entry.name, mismatches, report=report)


def check_all(corpus: list[CorpusEntry] | str | Path | None = None) -> CorpusReport:
    """Check every entry; results keep manifest order."""
    if corpus is None or isinstance(corpus, (str, Path)):
        corpus = entries(corpus)
    return CorpusReport(tuple(check_entry(e) for e in corpus))
