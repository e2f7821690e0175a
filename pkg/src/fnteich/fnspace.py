"""Fenchel-Nielsen coordinate windows, the coordinate distance, the
sup-norm embedding, pants graphs, and the line-oriented file formats.

A hyperbolic structure relative to a fixed pants decomposition is
modelled purely by its per-curve (length, twist) data.  Twists follow the
angle convention: a full positive Dehn twist adds 2*pi, values are real
(never reduced mod 2*pi), and boundary curves carry no twist at all.
Infinite structures are represented by generators evaluated on finite
index windows; every supremum is reported together with an exactness
flag, so truncation is never silent.

File formats (version-tagged first line):

    fnstruct v1            one `index length twist` line per curve,
                           twist `-` for boundary curves, indices 1..N
    generator v1 kind=<kind> n=<integer>
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError, FormatError, UsageError
from .reports import VerificationReport

FULL_TWIST = 2.0 * math.pi

GENERATOR_KINDS = ("constant", "ex_fn1_x", "ex_fn1_y", "ex_fn2_x",
                   "ex_fn2_y", "table")


@dataclass(frozen=True)
class FNCoordinate:
    """Per-curve coordinates: geodesic length and, for interior curves
    only, the twist angle."""

    length: float
    twist: float | None

    def __post_init__(self):
        if not (math.isfinite(self.length) and self.length > 0.0):
            raise DomainError(f"curve length must be > 0, got {self.length}")
        if self.twist is not None and not math.isfinite(self.twist):
            raise DomainError(f"twist must be finite, got {self.twist}")

    @property
    def is_boundary(self) -> bool:
        return self.twist is None


@dataclass(frozen=True)
class StructureGenerator:
    """Closed-form rule producing the coordinate of every index.

    Kinds: `constant` repeats (length, twist); the built-in families
    `ex_fn1_x` / `ex_fn1_y` (unit lengths except 1/n at index n; twists 0,
    resp. a full twist at index n) and `ex_fn2_x` / `ex_fn2_y` (all twists
    0; length 1/n resp. 1/n^2 at index n, 1 elsewhere); `table` wraps an
    explicit finite tuple.
    """

    kind: str
    n: int | None = None
    length: float = 1.0
    twist: float | None = 0.0
    entries: tuple[FNCoordinate, ...] = ()

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise UsageError(f"unknown generator kind {self.kind!r}; "
                             f"expected one of {GENERATOR_KINDS}")
        if self.kind.startswith("ex_"):
            if not (isinstance(self.n, int) and self.n >= 1):
                raise UsageError(
                    f"generator {self.kind} needs an integer n >= 1, "
                    f"got {self.n}")
        if self.kind == "table" and not self.entries:
            raise UsageError("table generator needs entries")

    def coordinate(self, index: int) -> FNCoordinate:
        if index < 1:
            raise UsageError(f"indices are 1-based, got {index}")
        if self.kind == "constant":
            return FNCoordinate(self.length, self.twist)
        if self.kind == "table":
            if index > len(self.entries):
                raise UsageError(f"index {index} beyond table of "
                                 f"{len(self.entries)} entries")
            return self.entries[index - 1]
        if self.kind in ("ex_fn1_x", "ex_fn2_x"):
            return FNCoordinate(1.0 / self.n if index == self.n else 1.0, 0.0)
        if self.kind == "ex_fn1_y":
            return FNCoordinate(1.0 / self.n if index == self.n else 1.0,
                                FULL_TWIST if index == self.n else 0.0)
        # ex_fn2_y
        return FNCoordinate(
            1.0 / (self.n * self.n) if index == self.n else 1.0, 0.0)

    def settle_index(self) -> int | None:
        """Index beyond which every coordinate equals tail_coordinate();
        None when no tail rule is known (tables)."""
        if self.kind == "constant":
            return 1
        if self.kind == "table":
            return None
        return self.n

    def tail_coordinate(self) -> FNCoordinate | None:
        if self.kind == "constant":
            return FNCoordinate(self.length, self.twist)
        if self.kind == "table":
            return None
        return FNCoordinate(1.0, 0.0)

    def length_sup(self) -> float:
        """Supremum of the length coordinate over all indices."""
        if self.kind == "constant":
            return self.length
        if self.kind == "table":
            return max(e.length for e in self.entries)
        return 1.0  # families are 1 except a single smaller entry

    def first_length_exceeding(self, cap: float) -> int | None:
        """Smallest index whose length exceeds cap, in closed form."""
        if self.kind == "table":
            for i, e in enumerate(self.entries, start=1):
                if e.length > cap:
                    return i
            return None
        if self.kind == "constant":
            return 1 if self.length > cap else None
        if cap >= 1.0:
            return None
        if self.n == 1 and self.coordinate(1).length <= cap:
            return 2
        return 1

    def spec_line(self) -> str:
        if self.kind in ("constant", "table"):
            raise UsageError(
                f"generator kind {self.kind!r} has no single-line spec")
        return f"generator v1 kind={self.kind} n={self.n}"


@dataclass(frozen=True)
class StructureWindow:
    """Coordinates of curves 1..window_size, with an optional generator
    recording the tail rule of the infinite structure being truncated."""

    coords: tuple[FNCoordinate, ...]
    source: str = "table"
    generator: StructureGenerator | None = None

    def __post_init__(self):
        if not self.coords:
            raise UsageError("a window must contain at least one curve")

    @classmethod
    def from_table(cls, coords) -> "StructureWindow":
        return cls(coords=tuple(coords), source="table", generator=None)

    @classmethod
    def from_generator(cls, gen: StructureGenerator,
                       window: int) -> "StructureWindow":
        if window < 1:
            raise UsageError(f"window must be >= 1, got {window}")
        coords = tuple(gen.coordinate(i) for i in range(1, window + 1))
        return cls(coords=coords, source=gen.kind, generator=gen)

    @property
    def window_size(self) -> int:
        return len(self.coords)

    def boundary_pattern(self) -> tuple[bool, ...]:
        return tuple(c.is_boundary for c in self.coords)

    def truncated(self, window: int) -> "StructureWindow":
        if not 1 <= window <= self.window_size:
            raise UsageError(
                f"window {window} not in 1..{self.window_size}")
        return StructureWindow(self.coords[:window], self.source,
                               self.generator)


class FNDistanceResult(NamedTuple):
    value: float
    exactness: str          # "exact" or "window-truncated"
    attained_index: int


def _check_aligned(x: StructureWindow, y: StructureWindow):
    if x.window_size != y.window_size:
        raise UsageError(f"window sizes differ: {x.window_size} vs "
                         f"{y.window_size}")
    if x.boundary_pattern() != y.boundary_pattern():
        raise UsageError("boundary/interior patterns differ between windows")


def _pair_term(cx: FNCoordinate, cy: FNCoordinate, kind: str) -> float:
    # the length terms reuse the embedding arithmetic (log length and
    # length*twist) so the sup-norm identity of to_linf holds exactly
    log_term = abs(math.log(cx.length) - math.log(cy.length))
    if kind == "raw_length":
        len_term = abs(cx.length - cy.length)
    else:
        len_term = log_term
    if cx.is_boundary:
        return len_term
    if kind == "raw_twist":
        tw_term = abs(cx.twist - cy.twist)
    else:
        tw_term = abs(cx.length * cx.twist - cy.length * cy.twist)
    return max(len_term, tw_term)


def _exactness(x: StructureWindow, y: StructureWindow, window_sup: float,
               kind: str) -> str:
    if x.generator is None and y.generator is None:
        return "exact"
    gx, gy = x.generator, y.generator
    if gx is None or gy is None:
        return "window-truncated"
    sx, sy = gx.settle_index(), gy.settle_index()
    if sx is None or sy is None:
        return "window-truncated"
    if max(sx, sy) > x.window_size:
        return "window-truncated"
    tail = _pair_term(gx.tail_coordinate(), gy.tail_coordinate(), kind)
    return "exact" if tail <= window_sup else "window-truncated"


def fn_distance(x: StructureWindow, y: StructureWindow) -> FNDistanceResult:
    """Coordinate distance sup_i max(|log(l_x/l_y)|,
    |l_x theta_x - l_y theta_y|) over the window (length term only on
    boundary curves).  The flag is "exact" when the window provably
    attains the full supremum: both sources literal, or both generators
    with known tails settled inside the window."""
    return _distance(x, y, "fn")


def fn_distance_variant(x: StructureWindow, y: StructureWindow,
                        kind: str) -> FNDistanceResult:
    """Variant metrics kept for comparison: `raw_twist` replaces the
    weighted twist term by |theta_x - theta_y|; `raw_length` replaces the
    log-ratio term by |l_x - l_y|.  Both behave badly on the built-in
    families, which is the reason the weighted form is the metric."""
    if kind not in ("raw_twist", "raw_length"):
        raise UsageError(f"unknown variant {kind!r}; expected raw_twist "
                         "or raw_length")
    return _distance(x, y, kind)


def _distance(x, y, kind):
    _check_aligned(x, y)
    best = -1.0
    best_index = 1
    for i, (cx, cy) in enumerate(zip(x.coords, y.coords), start=1):
        term = _pair_term(cx, cy, kind)
        if term > best:
            best = term
            best_index = i
    return FNDistanceResult(best, _exactness(x, y, best, kind), best_index)


def to_linf(x: StructureWindow) -> tuple[tuple[float, float | None], ...]:
    """Embed a window into the sequence space: index i maps to
    (log length, length * twist), with no second component on boundary
    curves.  The sup-norm distance of two embedded windows equals
    fn_distance by construction (same arithmetic, term by term)."""
    out = []
    for c in x.coords:
        if c.is_boundary:
            out.append((math.log(c.length), None))
        else:
            out.append((math.log(c.length), c.length * c.twist))
    return tuple(out)


def supnorm_distance(ex, ey) -> float:
    """Sup-norm distance between two to_linf images."""
    if len(ex) != len(ey):
        raise UsageError("embedded sequences differ in length")
    best = 0.0
    for (lx, tx), (ly, ty) in zip(ex, ey):
        if (tx is None) != (ty is None):
            raise UsageError("boundary patterns differ")
        term = abs(lx - ly)
        if tx is not None:
            term = max(term, abs(tx - ty))
        best = max(best, term)
    return best


class UpperBoundResult(NamedTuple):
    bounded: bool
    witness_index: int | None    # first index with length > cap
    length_sup: float
    implies_complete: bool       # a bounded structure is complete


def is_upper_bounded(obj, cap: float) -> UpperBoundResult:
    """Whether every curve length is <= cap.  Windows are scanned
    exhaustively; generators answer in closed form over the whole
    infinite index set."""
    if not cap > 0.0:
        raise DomainError(f"cap must be > 0, got {cap}")
    if isinstance(obj, StructureWindow):
        sup = 0.0
        witness = None
        for i, c in enumerate(obj.coords, start=1):
            sup = max(sup, c.length)
            if witness is None and c.length > cap:
                witness = i
        return UpperBoundResult(witness is None, witness, sup,
                                implies_complete=witness is None)
    if isinstance(obj, StructureGenerator):
        witness = obj.first_length_exceeding(cap)
        return UpperBoundResult(witness is None, witness, obj.length_sup(),
                                implies_complete=witness is None)
    raise UsageError(f"expected a StructureWindow or StructureGenerator, "
                     f"got {type(obj).__name__}")


class WolpertResult(NamedTuple):
    passed: bool
    slack: float        # log K - |log(lx/ly)|


def wolpert_check(lx: float, ly: float, k: float) -> WolpertResult:
    """Wolpert's length distortion bound for a K-quasiconformal map,
    applied in both directions: passes iff ly <= K lx and lx <= K ly,
    equivalently |log(lx/ly)| <= log K."""
    if not k >= 1.0:
        raise DomainError(f"dilatation must be >= 1, got {k}")
    if not (lx > 0.0 and ly > 0.0):
        raise DomainError(f"lengths must be > 0, got {lx}, {ly}")
    passed = ly <= k * lx and lx <= k * ly
    slack = math.log(k) - abs(math.log(lx) - math.log(ly))
    return WolpertResult(passed, slack)


CUSP = None   # slot marker for a puncture


@dataclass(frozen=True)
class PantsGraph:
    """Combinatorial pants decomposition: each pants node has exactly
    three slots, each slot holding a curve id or the cusp marker (None).
    Interior curves occupy two slots, boundary curves one."""

    pants: tuple[tuple, ...]
    boundary_curves: frozenset = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "pants",
                           tuple(tuple(p) for p in self.pants))
        if self.boundary_curves is None:
            counts = {}
            for node in self.pants:
                for slot in node:
                    if slot is not CUSP:
                        counts[slot] = counts.get(slot, 0) + 1
            object.__setattr__(
                self, "boundary_curves",
                frozenset(c for c, k in counts.items() if k == 1))
        else:
            object.__setattr__(self, "boundary_curves",
                               frozenset(self.boundary_curves))

    def curve_slots(self) -> dict:
        """curve id -> tuple of (pants index, slot index) occurrences."""
        slots = {}
        for pi, node in enumerate(self.pants):
            for si, slot in enumerate(node):
                if slot is not CUSP:
                    slots.setdefault(slot, []).append((pi, si))
        return {c: tuple(v) for c, v in slots.items()}

    def curve_ids(self):
        return sorted(self.curve_slots(), key=str)


def validate_pants_graph(g: PantsGraph) -> VerificationReport:
    """Structural validation: three slots per pants, one or two slots per
    curve, boundary flags consistent with slot counts.  Failures name the
    offending pants or curve id."""
    report = VerificationReport("pants graph structure")
    for pi, node in enumerate(g.pants):
        ok = len(node) == 3
        report.add(f"pants[{pi}]_has_three_slots", (pi,),
                   -abs(float(len(node) - 3)), 0.0, tol=0.0,
                   note="" if ok else f"pants {pi} has {len(node)} slots")
        if not ok:
            return report
    slots = g.curve_slots()
    for curve in sorted(slots, key=str):
        n = len(slots[curve])
        report.add(f"curve[{curve}]_slot_count_in_1_2", (str(curve),),
                   float(min(n - 1, 2 - n)), 0.0, tol=0.0,
                   note="" if 1 <= n <= 2 else
                   f"curve {curve} referenced by {n} slots")
        expected = 1 if curve in g.boundary_curves else 2
        report.add(f"curve[{curve}]_boundary_flag_consistent",
                   (str(curve),), -abs(float(n - expected)), 0.0, tol=0.0,
                   note="" if n == expected else
                   f"curve {curve}: {n} slots but boundary flag expects "
                   f"{expected}")
    return report


# ---------------------------------------------------------------------
# file formats


def format_structure_file(w: StructureWindow) -> str:
    lines = ["fnstruct v1"]
    for i, c in enumerate(w.coords, start=1):
        tw = "-" if c.twist is None else repr(c.twist)
        lines.append(f"{i} {c.length!r} {tw}")
    return "\n".join(lines) + "\n"


def parse_structure_text(text: str, path=None) -> StructureWindow:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "fnstruct v1":
        raise FormatError("expected header 'fnstruct v1'", path, 1)
    coords = []
    prev_index = 0
    for ln, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(
                f"expected 'index length twist', got {line!r}", path, ln)
        try:
            index = int(parts[0])
        except ValueError:
            raise FormatError(f"bad index {parts[0]!r}", path, ln) from None
        if index != prev_index + 1:
            raise FormatError(
                f"indices must be consecutive from 1; got {index} after "
                f"{prev_index}", path, ln)
        prev_index = index
        try:
            length = float(parts[1])
        except ValueError:
            raise FormatError(f"bad length {parts[1]!r}", path, ln) from None
        if not length > 0.0:
            raise FormatError(f"length must be > 0, got {length}", path, ln)
        if parts[2] == "-":
            twist = None
        else:
            try:
                twist = float(parts[2])
            except ValueError:
                raise FormatError(f"bad twist {parts[2]!r}", path,
                                  ln) from None
        coords.append(FNCoordinate(length, twist))
    if not coords:
        raise FormatError("no coordinate lines", path, len(lines))
    return StructureWindow.from_table(coords)


def parse_structure_file(path) -> StructureWindow:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_structure_text(fh.read(), path=path)
    except OSError as exc:
        raise FormatError(f"cannot read: {exc}", path) from None


def parse_generator_line(line: str, path=None) -> StructureGenerator:
    parts = line.strip().split()
    if len(parts) != 4 or parts[0] != "generator" or parts[1] != "v1":
        raise FormatError(
            "expected 'generator v1 kind=<kind> n=<integer>'", path, 1)
    fields = {}
    for part in parts[2:]:
        if "=" not in part:
            raise FormatError(f"bad field {part!r}", path, 1)
        key, value = part.split("=", 1)
        fields[key] = value
    if set(fields) != {"kind", "n"}:
        raise FormatError(f"expected fields kind and n, got "
                          f"{sorted(fields)}", path, 1)
    try:
        n = int(fields["n"])
    except ValueError:
        raise FormatError(f"bad n {fields['n']!r}", path, 1) from None
    kind = fields["kind"]
    if kind == "table":
        raise FormatError("table generators have no line form", path, 1)
    if kind == "constant":
        return StructureGenerator(kind="constant")
    return StructureGenerator(kind=kind, n=n)
