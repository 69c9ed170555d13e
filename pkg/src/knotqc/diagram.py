"""Planar diagrams, Gauss codes, and intersection-sequence realizability.

A crossing stores its four incident arcs counterclockwise starting at
the incoming under-strand, plus a sign. Signs follow the braid picture
(braid running downward): in a positive crossing the over-strand runs
slot 1 -> slot 3, in a negative crossing slot 3 -> slot 1. Split
unknotted circles (no crossings) are tracked by a free-loop count so
smoothing can disconnect diagrams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .braid import BraidWord
from .errors import BudgetExceededError, ParseError

OVER = "O"
UNDER = "U"

_UNSIGNED_GUARD = 16


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError(f"crossing sign must be +-1, got {self.sign}")

    def in_slots(self) -> tuple[int, int]:
        return (0, 1) if self.sign > 0 else (0, 3)

    def exit_slot(self, in_slot: int) -> int:
        if in_slot == 0:
            return 2
        if self.sign > 0 and in_slot == 1:
            return 3
        if self.sign < 0 and in_slot == 3:
            return 1
        raise ValueError(f"slot {in_slot} is not an entry slot of this crossing")

    def reversed(self) -> "Crossing":
        # Orientation reversal keeps the plane orientation and the sign;
        # the outgoing under-arc becomes the incoming one.
        a, b, c, d = self.arcs
        return Crossing((c, d, a, b), self.sign)


@dataclass(frozen=True)
class PDDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")
        inflow: dict[int, tuple[int, int]] = {}
        outflow: dict[int, tuple[int, int]] = {}
        for ci, c in enumerate(self.crossings):
            for slot in range(4):
                arc = c.arcs[slot]
                table = inflow if slot in c.in_slots() else outflow
                if arc in table:
                    raise ValueError(f"arc {arc} flows the same way twice")
                table[arc] = (ci, slot)
        if set(inflow) != set(outflow):
            raise ValueError("every arc needs exactly one inflow and one outflow slot")

    def _inflow(self) -> dict[int, tuple[int, int]]:
        table = {}
        for ci, c in enumerate(self.crossings):
            for slot in c.in_slots():
                table[c.arcs[slot]] = (ci, slot)
        return table

    def arcs(self) -> list[int]:
        return sorted({a for c in self.crossings for a in c.arcs})

    def components(self) -> int:
        """Closed strand cycles, free loops included."""
        inflow = self._inflow()
        seen: set[int] = set()
        count = self.free_loops
        for arc in self.arcs():
            if arc in seen:
                continue
            count += 1
            a = arc
            while a not in seen:
                seen.add(a)
                ci, slot = inflow[a]
                c = self.crossings[ci]
                a = c.arcs[c.exit_slot(slot)]
        return count

    def switch_crossing(self, index: int) -> "PDDiagram":
        """Exchange over and under at one crossing; everything else unchanged."""
        c = self._get(index)
        a, b, cc, d = c.arcs
        if c.sign > 0:
            new = Crossing((b, cc, d, a), -1)
        else:
            new = Crossing((d, a, b, cc), +1)
        crossings = self.crossings[:index] + (new,) + self.crossings[index + 1 :]
        return PDDiagram(crossings, self.free_loops)

    def smooth_crossing(self, index: int) -> "PDDiagram":
        """Remove one crossing by the orientation-respecting reconnection."""
        c = self._get(index)
        a, b, cc, d = c.arcs
        # Each join glues an incoming arc to an outgoing arc into one arc.
        if c.sign > 0:
            joins = [(a, d), (b, cc)]
        else:
            joins = [(a, b), (d, cc)]
        rest = [x for i, x in enumerate(self.crossings) if i != index]
        loops = self.free_loops

        def rename(old: int, new: int):
            nonlocal rest
            rest = [
                Crossing(tuple(new if arc == old else arc for arc in x.arcs), x.sign)
                for x in rest
            ]

        (u1, v1), (u2, v2) = joins
        if u1 == v1:
            loops += 1
        else:
            rename(v1, u1)
            if u2 == v1:
                u2 = u1
            if v2 == v1:
                v2 = u1
        if u2 == v2:
            loops += 1
        else:
            rename(v2, u2)
        return PDDiagram(tuple(rest), loops)

    def relabel(self, mapping: dict[int, int]) -> "PDDiagram":
        return PDDiagram(
            tuple(
                Crossing(tuple(mapping[a] for a in c.arcs), c.sign)
                for c in self.crossings
            ),
            self.free_loops,
        )

    def reversed(self) -> "PDDiagram":
        return PDDiagram(tuple(c.reversed() for c in self.crossings), self.free_loops)

    def canonical_key(self) -> str:
        """Relabeling-invariant code, used to memoize skein recursion.

        Connected pieces are encoded by a deterministic traversal
        re-numbering of crossings and arcs, minimized over every starting
        pass and over global orientation reversal (which preserves the
        two-variable invariant), then sorted. Equal keys imply diagrams
        equal up to relabeling or full reversal of a split piece.
        """
        pieces = self._pieces()
        keys = []
        for piece in pieces:
            best = None
            for variant in (piece, piece.reversed()):
                inflow = variant._inflow()
                for ci in range(len(variant.crossings)):
                    for slot in variant.crossings[ci].in_slots():
                        code = _encode_traversal(variant, inflow, (ci, slot))
                        if best is None or code < best:
                            best = code
            keys.append(best or "")
        return f"L{self.free_loops}|" + "||".join(sorted(keys))

    def _pieces(self) -> list["PDDiagram"]:
        """Split into connected pieces (free loops stay on the parent)."""
        n = len(self.crossings)
        if n == 0:
            return []
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        by_arc: dict[int, int] = {}
        for ci, c in enumerate(self.crossings):
            for arc in c.arcs:
                if arc in by_arc:
                    ra, rb = find(by_arc[arc]), find(ci)
                    parent[ra] = rb
                else:
                    by_arc[arc] = ci
        groups: dict[int, list[Crossing]] = {}
        for ci, c in enumerate(self.crossings):
            groups.setdefault(find(ci), []).append(c)
        return [PDDiagram(tuple(cs), 0) for cs in groups.values()]

    def _get(self, index: int) -> Crossing:
        if not 0 <= index < len(self.crossings):
            raise ValueError(f"no crossing with index {index}")
        return self.crossings[index]

    def to_text(self) -> str:
        lines = [
            f"X {c.arcs[0]} {c.arcs[1]} {c.arcs[2]} {c.arcs[3]} {c.sign:+d}"
            for c in self.crossings
        ]
        lines.extend("loop" for _ in range(self.free_loops))
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> "PDDiagram":
        crossings = []
        loops = 0
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line == "loop":
                loops += 1
                continue
            parts = line.split()
            if parts[0] != "X" or len(parts) != 6:
                raise ParseError(f"bad diagram line {line!r}")
            try:
                a, b, c, d, s = (int(p) for p in parts[1:])
            except ValueError:
                raise ParseError(f"bad diagram line {line!r}") from None
            crossings.append(Crossing((a, b, c, d), s))
        try:
            return cls(tuple(crossings), loops)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def _encode_traversal(d: PDDiagram, inflow, start: tuple[int, int]) -> str:
    """Deterministic re-encoding of a connected diagram from one starting pass."""
    crossing_number: dict[int, int] = {}
    arc_number: dict[int, int] = {}
    visited: set[tuple[int, int]] = set()
    total = 2 * len(d.crossings)
    pos = start
    while len(visited) < total:
        if pos in visited or pos is None:
            pos = _next_start(d, crossing_number, visited)
        ci, slot = pos
        visited.add(pos)
        if ci not in crossing_number:
            crossing_number[ci] = len(crossing_number)
        arc_in = d.crossings[ci].arcs[slot]
        if arc_in not in arc_number:
            arc_number[arc_in] = len(arc_number)
        arc_out = d.crossings[ci].arcs[d.crossings[ci].exit_slot(slot)]
        pos = inflow[arc_out]
    order = sorted(crossing_number, key=crossing_number.get)
    parts = []
    for ci in order:
        c = d.crossings[ci]
        parts.append(
            ",".join(str(arc_number[a]) for a in c.arcs) + f":{'+' if c.sign > 0 else '-'}"
        )
    return ";".join(parts)


def _next_start(d: PDDiagram, crossing_number, visited):
    # Earliest-numbered crossing with an unvisited entry pass; in a
    # connected piece one always exists until the traversal is complete.
    for ci in sorted(crossing_number, key=crossing_number.get):
        for slot in d.crossings[ci].in_slots():
            if (ci, slot) not in visited:
                return (ci, slot)
    raise AssertionError("disconnected piece handed to traversal encoder")


def closure_to_diagram(b: BraidWord) -> PDDiagram:
    """Close a braid: one crossing per letter, strand ends glued around."""
    n = b.strands
    cur = list(range(1, n + 1))
    records: list[tuple[int, int, int, int, int]] = []
    next_arc = n + 1
    for e in b.letters:
        i = abs(e)
        left, right = cur[i - 1], cur[i]
        out_left, out_right = next_arc, next_arc + 1
        next_arc += 2
        if e > 0:
            records.append((right, left, out_left, out_right, +1))
        else:
            records.append((left, out_left, out_right, right, -1))
        cur[i - 1], cur[i] = out_left, out_right
    loops = 0
    rename: dict[int, int] = {}
    for p in range(n):
        top, bottom = p + 1, cur[p]
        if top == bottom:
            loops += 1
        else:
            rename[top] = bottom
    crossings = tuple(
        Crossing(tuple(rename.get(a, a) for a in (a0, a1, a2, a3)), s)
        for (a0, a1, a2, a3, s) in records
    )
    return PDDiagram(crossings, loops)


@dataclass(frozen=True)
class GaussCode:
    """Signed intersection sequence: (pass, label, sign) triples."""

    entries: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self):
        seen: dict[int, list[tuple[str, int]]] = {}
        for kind, label, sign in self.entries:
            if kind not in (OVER, UNDER):
                raise ValueError(f"pass must be O or U, got {kind!r}")
            if sign not in (-1, 1):
                raise ValueError(f"sign must be +-1, got {sign}")
            seen.setdefault(label, []).append((kind, sign))
        for label, passes in seen.items():
            if len(passes) != 2:
                raise ValueError(f"label {label} must occur exactly twice")
            kinds = {k for k, _ in passes}
            if kinds != {OVER, UNDER}:
                raise ValueError(f"label {label} must cross once over and once under")
            if passes[0][1] != passes[1][1]:
                raise ValueError(f"label {label} has conflicting signs")

    def labels(self) -> list[int]:
        return sorted({label for _, label, _ in self.entries})

    def to_text(self) -> str:
        return "".join(
            f"{kind}{label}{'+' if sign > 0 else '-'}"
            for kind, label, sign in self.entries
        )

    def __repr__(self) -> str:
        return f"GaussCode({self.to_text()})"


_GAUSS_TOKEN = re.compile(r"\s*([OUou])\s*(\d+)\s*([+-])")
_GAUSS_TOKEN_UNSIGNED = re.compile(r"\s*([OUou])\s*(\d+)")


def parse_gauss(text: str) -> GaussCode:
    """Parse tokens like "O1+U2-"; validation errors become ParseError."""
    entries = []
    pos = 0
    while pos < len(text):
        m = _GAUSS_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"bad Gauss code near {text[pos:pos+12]!r}")
            break
        kind, label, sign = m.group(1).upper(), int(m.group(2)), 1 if m.group(3) == "+" else -1
        entries.append((kind, label, sign))
        pos = m.end()
    try:
        return GaussCode(tuple(entries))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_unsigned_gauss(text: str) -> list[tuple[str, int]]:
    """Parse a sign-free sequence like "O1 U2 O3"."""
    out = []
    pos = 0
    while pos < len(text):
        m = _GAUSS_TOKEN_UNSIGNED.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"bad unsigned code near {text[pos:pos+12]!r}")
            break
        out.append((m.group(1).upper(), int(m.group(2))))
        pos = m.end()
    seen: dict[int, set[str]] = {}
    for kind, label in out:
        seen.setdefault(label, set())
        if kind in seen[label]:
            raise ParseError(f"label {label} crosses {kind} twice")
        seen[label].add(kind)
    for label, kinds in seen.items():
        if len(kinds) != 2:
            raise ParseError(f"label {label} must occur once over and once under")
    return out


def euler_characteristic(code: GaussCode) -> tuple[int, int, int, int]:
    """(vertices, edges, faces, chi) of the carrier surface of a signed code.

    The code's 4-valent graph is embedded on the closed surface spanned
    by its sign-determined rotation system; faces are orbits of the
    rotation composed with the edge-end involution.
    """
    m = len(code.entries)
    c = m // 2
    if m == 0:
        return (0, 0, 2, 2)
    pass_index: dict[tuple[str, int], int] = {}
    for idx, (kind, label, _) in enumerate(code.entries):
        pass_index[(kind, label)] = idx
    # Dart (j, 0) = tail of edge j at pass j; dart (j, 1) = head at pass j+1.
    rotation: dict[tuple[int, int], tuple[int, int]] = {}
    for label in code.labels():
        o = pass_index[(OVER, label)]
        u = pass_index[(UNDER, label)]
        sign = code.entries[o][2]
        u_in, u_out = ((u - 1) % m, 1), (u, 0)
        o_in, o_out = ((o - 1) % m, 1), (o, 0)
        if sign > 0:
            cycle = [u_in, o_in, u_out, o_out]
        else:
            cycle = [u_in, o_out, u_out, o_in]
        for k, dart in enumerate(cycle):
            rotation[dart] = cycle[(k + 1) % 4]
    faces = 0
    seen: set[tuple[int, int]] = set()
    for dart in rotation:
        if dart in seen:
            continue
        faces += 1
        cur = dart
        while cur not in seen:
            seen.add(cur)
            j, end = cur
            cur = rotation[(j, 1 - end)]
    return (c, m, faces, c - m + faces)


def realizable(code: GaussCode) -> bool:
    """True iff the code comes from an actual planar knot diagram (chi = 2)."""
    return euler_characteristic(code)[3] == 2


def realizable_unsigned(sequence: list[tuple[str, int]]) -> bool:
    """True iff some sign assignment makes the sequence realizable.

    Brute force over all sign patterns, guarded to 16 crossings.
    """
    labels = sorted({label for _, label in sequence})
    if len(labels) > _UNSIGNED_GUARD:
        raise BudgetExceededError(
            f"unsigned realizability is brute force; limit is {_UNSIGNED_GUARD} crossings"
        )
    if not sequence:
        return True
    for mask in range(1 << len(labels)):
        signs = {
            label: 1 if mask & (1 << k) else -1 for k, label in enumerate(labels)
        }
        code = GaussCode(
            tuple((kind, label, signs[label]) for kind, label in sequence)
        )
        if realizable(code):
            return True
    return False


def gauss_from_diagram(d: PDDiagram) -> GaussCode:
    """Traverse a one-component diagram, recording each pass."""
    if not d.crossings:
        if d.free_loops == 1:
            return GaussCode(())
        raise ValueError("Gauss codes require a single-component diagram")
    if d.free_loops or d.components() != 1:
        raise ValueError("Gauss codes require a single-component diagram")
    inflow = d._inflow()
    start_arc = min(inflow)
    labels: dict[int, int] = {}
    entries = []
    arc = start_arc
    while True:
        ci, slot = inflow[arc]
        c = d.crossings[ci]
        if ci not in labels:
            labels[ci] = len(labels) + 1
        entries.append((UNDER if slot == 0 else OVER, labels[ci], c.sign))
        arc = c.arcs[c.exit_slot(slot)]
        if arc == start_arc:
            break
    return GaussCode(tuple(entries))


def diagram_from_gauss(code: GaussCode) -> PDDiagram:
    """Rebuild the planar diagram a signed code describes.

    Arc j+1 runs from pass j to pass j+1 (cyclically), which fixes every
    crossing record once the sign places the over-strand's entry slot.
    """
    m = len(code.entries)
    if m == 0:
        return PDDiagram((), 1)
    pass_index: dict[tuple[str, int], int] = {}
    for idx, (kind, label, _) in enumerate(code.entries):
        pass_index[(kind, label)] = idx

    def arc_in(j: int) -> int:
        return (j - 1) % m + 1

    def arc_out(j: int) -> int:
        return j + 1

    crossings = []
    for label in code.labels():
        o = pass_index[(OVER, label)]
        u = pass_index[(UNDER, label)]
        sign = code.entries[o][2]
        if sign > 0:
            arcs = (arc_in(u), arc_in(o), arc_out(u), arc_out(o))
        else:
            arcs = (arc_in(u), arc_out(o), arc_out(u), arc_in(o))
        crossings.append(Crossing(arcs, sign))
    return PDDiagram(tuple(crossings), 0)
