"""Generate the PD fixture corpus from checkerboard-graph constructions.

Every 2-bridge knot has an alternating twist diagram whose checkerboard graph
is a two-terminal series-parallel network realizing the knot's continued
fraction, with the terminals identified by the closure.  Taking the medial of
that plane network yields the PD code directly, and the package's own
validator certifies each output (alternating, reduced, prime, connected,
spherical Euler count).  Invalid fixtures reuse the same machinery: a pendant
edge produces a kink, a wedge of two networks produces a connected sum, and a
disjoint union produces a split diagram.

Usage: python scripts/gen_fixtures.py [target-dir]
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from altcurves.diagram import build_diagram, parse_pd, validate

# name -> (continued fraction, comment)
KNOTS = {
    "k3_1": ([3], "trefoil"),
    "k4_1": ([2, 2], "figure-eight"),
    "k5_1": ([5], "(2,5) torus knot"),
    "k5_2": ([3, 2], "three-twist knot"),
    "k6_1": ([4, 2], "Stevedore knot"),
    "k6_2": ([3, 1, 2], ""),
    "k6_3": ([2, 1, 1, 2], ""),
    "k7_1": ([7], "(2,7) torus knot"),
    "k7_2": ([5, 2], ""),
    "k7_3": ([4, 3], ""),
    "k7_4": ([3, 1, 3], ""),
    "k7_5": ([3, 2, 2], ""),
    "k7_6": ([2, 1, 2, 2], ""),
    "k7_7": ([2, 1, 1, 1, 2], ""),
}


class PlaneGraph:
    """Mutable plane multigraph: rotations are ccw lists of edge ends."""

    def __init__(self):
        self.edge_count = 0
        self.rot: dict[int, list[tuple[int, int]]] = {}
        self._next_vertex = 0

    def new_vertex(self) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        self.rot[v] = []
        return v

    def new_edge(self) -> int:
        e = self.edge_count
        self.edge_count += 1
        return e


def leaf():
    return ("leaf",)


def series(children):
    return ("series", children)


def parallel(children):
    return ("parallel", children)


def cf_tree(terms: list[int]):
    """Two-terminal network whose resistance is the continued fraction."""

    def build(i: int):
        kind = series if i % 2 == 0 else parallel
        leaves = [leaf() for _ in range(terms[i])]
        if i == len(terms) - 1:
            return kind(leaves)
        return kind(leaves + [build(i + 1)])

    return build(0)


def resistance(tree) -> Fraction:
    kind = tree[0]
    if kind == "leaf":
        return Fraction(1)
    parts = [resistance(c) for c in tree[1]]
    if kind == "series":
        return sum(parts, Fraction(0))
    return 1 / sum((1 / p for p in parts), Fraction(0))


def realize(tree, g: PlaneGraph):
    """Embed the network in a strip; returns (fan_s, fan_t).

    fan_s lists the edge ends at the left terminal in ccw order (bottom to
    top); fan_t lists the right terminal's ends in ccw order (top to bottom).
    """
    kind = tree[0]
    if kind == "leaf":
        e = g.new_edge()
        return [(e, 0)], [(e, 1)]
    fans = [realize(c, g) for c in tree[1]]
    if kind == "series":
        for (_, left_t), (right_s, _) in zip(fans, fans[1:]):
            j = g.new_vertex()
            g.rot[j] = left_t + right_s
        return fans[0][0], fans[-1][1]
    # parallel: children stacked top to bottom
    fan_s = [end for f in reversed(fans) for end in f[0]]
    fan_t = [end for f in fans for end in f[1]]
    return fan_s, fan_t


def close(tree, g: PlaneGraph) -> int:
    """Numerator closure: identify the two terminals; returns the new vertex."""
    fan_s, fan_t = realize(tree, g)
    v = g.new_vertex()
    g.rot[v] = fan_s + fan_t
    return v


def medial_pd_rows(g: PlaneGraph) -> list[tuple[int, int, int, int]]:
    """PD rows of the medial diagram: one crossing per edge of g.

    Slots run counterclockwise with the under-strand in slots 0 and 2
    (checkerboard rule), then each row is rotated so slot 0 is the incoming
    under-strand end, and arcs are relabeled 1..2n along each link component.
    """
    pos: dict[tuple[int, int], tuple[int, int]] = {}
    for v, ends in g.rot.items():
        for p, end in enumerate(ends):
            pos[end] = (v, p)

    corner_id: dict[tuple[int, int], int] = {}
    for v in sorted(g.rot):
        for p in range(len(g.rot[v])):
            corner_id[(v, p)] = len(corner_id)

    def prev_corner(end):
        v, p = pos[end]
        return corner_id[(v, (p - 1) % len(g.rot[v]))]

    def next_corner(end):
        v, p = pos[end]
        return corner_id[(v, p)]

    # ccw slots [NE, NW, SW, SE] with end0 drawn west, end1 east
    slots = []
    for e in range(g.edge_count):
        west, east = (e, 0), (e, 1)
        slots.append(
            (prev_corner(east), next_corner(west), prev_corner(west), next_corner(east))
        )

    occurrences: dict[int, list[tuple[int, int]]] = {}
    for c, row in enumerate(slots):
        for s, arc in enumerate(row):
            occurrences.setdefault(arc, []).append((c, s))

    incoming: dict[tuple[int, int], bool] = {}
    label: dict[int, int] = {}
    next_label = 1
    for start_arc in sorted(occurrences):
        if start_arc in label:
            continue
        depart = occurrences[start_arc][0]
        arc = start_arc
        while arc not in label:
            label[arc] = next_label
            next_label += 1
            incoming[depart] = False
            a, b = occurrences[arc]
            arrive = b if depart == a else a
            incoming[arrive] = True
            depart = (arrive[0], (arrive[1] + 2) % 4)
            arc = slots[depart[0]][depart[1]]

    rows = []
    for c, row in enumerate(slots):
        shift = 0 if incoming[(c, 0)] else 2
        assert incoming[(c, shift)], f"crossing {c}: no incoming under-strand"
        rows.append(tuple(label[row[(shift + k) % 4]] for k in range(4)))
    return rows


def pd_from_tree(tree) -> str:
    g = PlaneGraph()
    close(tree, g)
    rows = medial_pd_rows(g)
    return "".join("X " + " ".join(map(str, row)) + "\n" for row in rows)


def borromean() -> str:
    """Medial of plane K4: the Borromean rings, six crossings, no bigons."""
    g = PlaneGraph()
    a, b, c, hub = (g.new_vertex() for _ in range(4))
    eab, ebc, eca, ead, ebd, ecd = (g.new_edge() for _ in range(6))
    g.rot[a] = [(eab, 0), (ead, 0), (eca, 1)]
    g.rot[b] = [(ebc, 0), (ebd, 0), (eab, 1)]
    g.rot[c] = [(eca, 0), (ecd, 0), (ebc, 1)]
    g.rot[hub] = [(ead, 1), (ebd, 1), (ecd, 1)]
    return "".join("X " + " ".join(map(str, row)) + "\n" for row in medial_pd_rows(g))


def kinked_trefoil() -> str:
    g = PlaneGraph()
    hub = close(cf_tree([3]), g)
    pendant = g.new_vertex()
    e = g.new_edge()
    g.rot[hub].append((e, 0))
    g.rot[pendant] = [(e, 1)]
    return "".join("X " + " ".join(map(str, row)) + "\n" for row in medial_pd_rows(g))


def granny() -> str:
    g = PlaneGraph()
    fan_s1, fan_t1 = realize(cf_tree([3]), g)
    fan_s2, fan_t2 = realize(cf_tree([3]), g)
    v = g.new_vertex()
    g.rot[v] = fan_s1 + fan_t1 + fan_s2 + fan_t2
    return "".join("X " + " ".join(map(str, row)) + "\n" for row in medial_pd_rows(g))


def split_two_trefoils() -> str:
    base = pd_from_tree(cf_tree([3]))
    rows = [line.split()[1:] for line in base.strip().splitlines()]
    shifted = [[str(int(x) + 6) for x in row] for row in rows]
    return base + "".join("X " + " ".join(row) + "\n" for row in shifted)


def check(name: str, text: str, expect_flags: dict[str, bool], expect_n: int) -> str:
    d = build_diagram(parse_pd(text))
    report = validate(d)
    assert d.n == expect_n, f"{name}: n={d.n}, expected {expect_n}"
    assert len(d.faces) == sum(1 for _ in d.faces)
    for flag, want in expect_flags.items():
        got = getattr(report, flag)
        assert got == want, f"{name}: {flag}={got}, expected {want} ({report.failures})"
    print(f"  {name}: n={d.n} faces={len(d.faces)} degrees={d.face_degrees()} ok={report.ok}")
    return text


def main() -> None:
    target = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    (target / "invalid").mkdir(parents=True, exist_ok=True)

    all_valid = {"alternating": True, "reduced": True, "prime": True, "connected": True}
    fractions_seen = set()
    for name, (terms, note) in KNOTS.items():
        frac = resistance(cf_tree(terms))
        assert frac not in fractions_seen, f"duplicate fraction {frac}"
        fractions_seen.add(frac)
        text = check(name, pd_from_tree(cf_tree(terms)), all_valid, sum(terms))
        head = f"# {name}" + (f" ({note})" if note else "")
        head += f": alternating twist diagram, continued fraction {terms}, fraction {frac}\n"
        (target / f"{name}.pd").write_text(head + text)

    text = check("hopf", pd_from_tree(cf_tree([2])), all_valid, 2)
    (target / "hopf.pd").write_text("# hopf link: two-crossing alternating diagram\n" + text)

    text = check("borromean", borromean(), all_valid, 6)
    (target / "borromean.pd").write_text(
        "# borromean rings: medial of plane K4, every face a triangle\n" + text)

    # the kink's two non-loop arcs also form a 2-edge cut, so prime fails too
    text = check(
        "kinked_trefoil",
        kinked_trefoil(),
        {"alternating": True, "reduced": False, "prime": False, "connected": True},
        4,
    )
    (target / "invalid" / "kinked_trefoil.pd").write_text(
        "# trefoil with one kink: fails the reduced check\n" + text
    )

    text = check(
        "granny",
        granny(),
        {"alternating": True, "reduced": True, "prime": False, "connected": True},
        6,
    )
    (target / "invalid" / "granny.pd").write_text(
        "# granny knot (trefoil connected sum): fails the prime check\n" + text
    )

    text = check(
        "split_two_trefoils",
        split_two_trefoils(),
        {"alternating": True, "reduced": True, "prime": False, "connected": False},
        6,
    )
    (target / "invalid" / "split_two_trefoils.pd").write_text(
        "# two disjoint trefoils: fails the connected check\n" + text
    )
    print(f"wrote corpus to {target}/")


if __name__ == "__main__":
    main()
