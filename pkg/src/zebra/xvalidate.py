"""Exhaustive small-chain enumeration and zebra-vs-Kutzbach cross-validation.

Chains are planar, every joint is a 1-dof revolute and every link carries
at least two joints. A chain with cycle rank ``r >= 2`` is a subdivision of a
unique core multigraph of minimum degree 3 (loops allowed) with at most
``2(r - 1)`` vertices, so the enumerator builds all cores, subdivides their
edges in every admissible way and keeps one representative per
isomorphism class. Each class is then rooted at every non-equivalent
choice of ground link.
"""

from __future__ import annotations

import io
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from . import _graph
from .analysis import analyze, kutzbach_planar
from .errors import BoundsExceeded
from .model import Joint, Link, Mechanism, validate

MAX_LINKS = 8
MAX_LOOPS = 3


@dataclass(frozen=True)
class EnumerationSpec:
    max_links: int
    min_links: int = 2
    max_loops: int = 2
    single_cycle: bool = False
    multi_edges: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.max_links <= MAX_LINKS:
            raise BoundsExceeded(f"max_links must be in 1..{MAX_LINKS}, got {self.max_links}")
        if not 1 <= self.max_loops <= MAX_LOOPS:
            raise BoundsExceeded(f"max_loops must be in 1..{MAX_LOOPS}, got {self.max_loops}")
        if self.min_links < 1:
            raise BoundsExceeded("min_links must be positive")

    @property
    def loop_range(self) -> range:
        return range(1, (1 if self.single_cycle else self.max_loops) + 1)

    @property
    def max_multiplicity(self) -> int:
        return 2 if self.multi_edges else 1


@dataclass(frozen=True)
class Chain:
    """A rooted chain in canonical form; vertex 0 is the ground."""

    id: str
    n: int
    edges: tuple[tuple[int, int], ...]

    def mechanism(self) -> Mechanism:
        links = tuple(Link(f"l{v + 1}", is_ground=v == 0) for v in range(self.n))
        joints = tuple(
            Joint(f"j{k + 1}", 1, (f"l{u + 1}", f"l{v + 1}")) for k, (u, v) in enumerate(self.edges)
        )
        return Mechanism(self.id.replace(":", "_").replace("-", "_"), "planar", links, joints)


def _cores(loops: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...]]]:
    """Connected multigraphs with loops, min degree 3 and the given cycle rank."""
    if loops == 1:
        yield 1, ((0, 0),)
        return
    seen: set[tuple] = set()
    for k in range(1, 2 * (loops - 1) + 1):
        pairs = [(i, j) for i in range(k) for j in range(i, k)]
        for combo in combinations_with_replacement(pairs, k + loops - 1):
            deg = [0] * k
            for i, j in combo:
                deg[i] += 1
                deg[j] += 1
            if min(deg) < 3:
                continue
            plain = [(i, j, 0) for i, j in combo]
            if not _graph.is_connected(k, [e for e in plain if e[0] != e[1]]):
                continue
            cert, _ = _graph.canonical_form(k, plain, [0] * k)
            if cert not in seen:
                seen.add(cert)
                yield k, combo


def _subdivide(k: int, core: tuple[tuple[int, int], ...], splits: tuple[int, ...]) -> tuple[int, list]:
    n = k
    edges = []
    for (u, v), s in zip(core, splits):
        path = [u] + list(range(n, n + s)) + [v]
        n += s
        edges += [(a, b, 0) for a, b in zip(path, path[1:])]
    return n, edges


def _multiplicity_ok(edges: list, cap: int) -> bool:
    counts: dict[tuple[int, int], int] = {}
    for u, v, _ in edges:
        key = (min(u, v), max(u, v))
        counts[key] = counts.get(key, 0) + 1
        if counts[key] > cap:
            return False
    return True


def unrooted_chains(spec: EnumerationSpec) -> dict[tuple, tuple[int, list]]:
    """Certificate -> (n, edges) for every unrooted chain within the bounds."""
    found: dict[tuple, tuple[int, list]] = {}
    for loops in spec.loop_range:
        for k, core in _cores(loops):
            lower = [
                (1 if spec.multi_edges else 2) if u == v else 0 for u, v in core
            ]
            budget = spec.max_links - k
            if budget < sum(lower):
                continue
            for splits in product(*(range(lo, budget + 1) for lo in lower)):
                total = k + sum(splits)
                if total > spec.max_links or total < spec.min_links:
                    continue
                n, edges = _subdivide(k, core, splits)
                if not _multiplicity_ok(edges, spec.max_multiplicity):
                    continue
                cert, _ = _graph.canonical_form(n, edges, [0] * n)
                found.setdefault(cert, (n, edges))
    return found


def _rooted(n: int, edges: list, ground: int) -> Chain:
    cert, labels = _graph.canonical_form(n, edges, [0 if v == ground else 1 for v in range(n)])
    canon = tuple((u, v) for u, v, _ in cert[2])
    cid = f"n{n}j{len(canon)}:" + "-".join(f"{u}{v}" for u, v in canon)
    return Chain(cid, n, canon)


def enumerate_chains(spec: EnumerationSpec) -> Iterator[Mechanism]:
    """Yield every rooted chain within ``spec`` once, sorted by canonical id."""
    yield from (c.mechanism() for c in enumerate_rooted(spec))


def enumerate_rooted(spec: EnumerationSpec) -> list[Chain]:
    chains: dict[str, Chain] = {}
    for n, edges in unrooted_chains(spec).values():
        for g in range(n):
            c = _rooted(n, edges, g)
            chains.setdefault(c.id, c)
    return [chains[k] for k in sorted(chains)]


@dataclass(frozen=True)
class XvalRow:
    id: str
    n: int
    j: int
    zebra_m: int
    kutzbach_m: int

    @property
    def agree(self) -> bool:
        return self.zebra_m == self.kutzbach_m


@dataclass(frozen=True)
class XvalReport:
    rows: tuple[XvalRow, ...]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def agreeing(self) -> int:
        return sum(r.agree for r in self.rows)

    @property
    def disagreeing(self) -> int:
        return self.total - self.agreeing

    def csv_lines(self) -> Iterator[str]:
        yield "id,n,j,zebra_m,kutzbach_m,agree"
        for r in self.rows:
            yield f"{r.id},{r.n},{r.j},{r.zebra_m},{r.kutzbach_m},{'true' if r.agree else 'false'}"

    def summary_line(self) -> str:
        return f"# total={self.total} agree={self.agreeing} disagree={self.disagreeing}"

    def to_csv(self) -> str:
        buf = io.StringIO()
        for line in self.csv_lines():
            buf.write(line + "\n")
        buf.write(self.summary_line() + "\n")
        return buf.getvalue()


def row_for(chain: Chain) -> XvalRow:
    report = analyze(validate(chain.mechanism()))
    j = len(chain.edges)
    return XvalRow(chain.id, chain.n, j, report.mobility, kutzbach_planar(chain.n, j, 0))


def cross_validate(spec: EnumerationSpec) -> XvalReport:
    return XvalReport(tuple(row_for(c) for c in enumerate_rooted(spec)))
