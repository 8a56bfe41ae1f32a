"""Write the bundled JSON fixtures from hand-entered data.

Networks are transcribed directly (never produced by ``construct``) so that
the construction can be checked against them. Run from the repository root:

    python3 scripts/build_fixtures.py
"""

from __future__ import annotations

from pathlib import Path

from polynet.coding import PolymatroidMapping, VectorLinearCode
from polynet.constructor import ChoiceScript
from polynet.ff import FqMatrix
from polynet.formats import emit
from polynet.matroid import Matroid
from polynet.network import Network
from polynet.polymatroid import RankTable
from polynet.representation import Representation

OUT = Path(__file__).resolve().parents[1] / "src" / "polynet" / "fixtures"


def cols(columns, rows):
    return FqMatrix.from_columns(columns, rows)


def unit_cols(*rows, dim=8):
    """Matrix whose columns are standard basis vectors (1-based row indices)."""
    return cols([tuple(int(r == x) for x in range(1, dim + 1)) for r in rows], dim)


def vec(n, **entries):
    u = [0] * n
    for key, val in entries.items():
        u[int(key[1:]) - 1] = val
    return tuple(u)


def table(n, fn):
    return RankTable.from_function(n, fn)


def main() -> None:
    docs = {}

    docs["example1"] = RankTable(2, [0, 3, 5, 5])
    # bitmask order: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
    docs["example2"] = RankTable(3, [0, 1, 2, 3, 2, 2, 4, 4])
    docs["example3"] = table(4, lambda x: 2 * len(x) if len(x) <= 2 else 4)

    docs["example4"] = Representation(2, [
        cols([(1, 0, 0, 0), (0, 1, 0, 0)], 4),
        cols([(0, 0, 1, 0), (0, 0, 0, 1)], 4),
        cols([(1, 0, 0, 1), (0, 1, 1, 0)], 4),
        cols([(1, 0, 1, 1), (0, 1, 0, 1)], 4),
    ], 4)
    docs["example5"] = Representation(3, [cols([c], 2) for c in [(1, 0), (0, 1), (1, 1), (1, 2)]], 2)
    docs["u24"] = Matroid(4, rank=table(4, lambda x: min(len(x), 2)))

    docs["example7"] = Representation(3, [cols(c, 6) for c in [
        [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)],
        [(1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1)],
        [(0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)],
        [(1, 0, 1, 0, 0, 2), (0, 1, 0, 2, 1, 1)],
        [(0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0)],
        [(1, 0, 2, 2, 0, 2), (0, 1, 1, 0, 1, 1)],
        [(1, 0, 0, 1, 0, 0), (0, 1, 1, 2, 0, 0)],
        [(1, 0, 1, 0, 1, 1), (0, 1, 0, 2, 1, 0)],
        [(0, 0, 1, 0, 1, 0), (0, 0, 0, 1, 0, 1)],
    ]], 6)
    lines = {frozenset(s) for s in [(1, 2, 3), (1, 5, 7), (1, 6, 8), (2, 4, 7),
                                    (2, 6, 9), (3, 4, 8), (3, 5, 9), (4, 5, 6)]}
    docs["non_pappus"] = Matroid(9, rank=table(
        9, lambda x: len(x) if len(x) <= 2 else (2 if x in lines else 3)))

    mnetwork_rep1 = [unit_cols(*r) for r in [(1, 2), (3, 4), (5, 6), (7, 8), (1, 4), (2, 3),
                                   (5, 8), (6, 7), (2, 5), (2, 8), (3, 5), (3, 8)]]
    mnetwork_rep2 = mnetwork_rep1 + [unit_cols(r) for r in (1, 1, 4, 4, 6, 7, 6, 7)]
    docs["mnetwork_rep1"] = Representation(2, mnetwork_rep1, 8)
    docs["mnetwork_rep2"] = Representation(2, mnetwork_rep2, 8)

    mnet = Network(
        ["s12", "s34", "c", "r5", "r8", "t13", "t14", "t23", "t24"],
        [(1, "s12", 1), (2, "s12", 2), (3, "s34", 3), (4, "s34", 4)],
        [(5, "s12", "r5"), (6, "s12", "c"), (7, "s34", "c"), (8, "s34", "r8"),
         (9, "c", "t13"), (10, "c", "t14"), (11, "c", "t23"), (12, "c", "t24"),
         (13, "r5", "t13"), (14, "r5", "t14"), (15, "r5", "t23"), (16, "r5", "t24"),
         (17, "r8", "t13"), (18, "r8", "t14"), (19, "r8", "t23"), (20, "r8", "t24")],
        [("t13", 1), ("t13", 3), ("t14", 1), ("t14", 4), ("t23", 2), ("t23", 3), ("t24", 2), ("t24", 4)],
    )
    docs["mnetwork"] = mnet
    f1 = {e: e if e <= 12 else (5 if e <= 16 else 8) for e in range(1, 21)}
    docs["mnetwork_f1"] = PolymatroidMapping(f1)
    docs["mnetwork_f2"] = PolymatroidMapping({e: e for e in range(1, 21)})
    docs["mnetwork_solution1"] = VectorLinearCode(2, 2, 4, {e: mnetwork_rep1[f1[e] - 1] for e in range(1, 21)})
    pad = lambda m: cols([m.column(0), (0,) * 8], 8)  # noqa: E731
    docs["mnetwork_solution2"] = VectorLinearCode(
        2, 2, 4, {e: mnetwork_rep2[e - 1] if e <= 12 else pad(mnetwork_rep2[e - 1]) for e in range(1, 21)})

    # Fig. 6: sources 1, 2; relays 3' -> 3 and 4' -> 4; six sinks
    fig6_sinks = [("5", 2, ("1", "3")), ("6", 1, ("2", "3")), ("7", 2, ("1", "4")),
                  ("8", 1, ("2", "4")), ("9", 1, ("3", "4")), ("10", 2, ("3", "4"))]
    edges = [("1", "3'"), ("2", "3'"), ("3'", "3"), ("1", "4'"), ("2", "4'"), ("4'", "4")]
    edges += [(a, s) for s, _, feed in fig6_sinks for a in feed]
    docs["fig6"] = Network(
        ["1", "2", "3'", "3", "4'", "4"] + [s for s, _, _ in fig6_sinks],
        [(1, "1", 1), (2, "2", 2)],
        [(j, t, h) for j, (t, h) in enumerate(edges, start=3)],
        [(s, msg) for s, msg, _ in fig6_sinks],
    )
    docs["fig6_script"] = ChoiceScript(
        (2, 2, 0, 0),
        [(3, (2, 2, 1, 0)), (4, (2, 2, 0, 1))],
        [(2, (2, 1, 2, 0)), (1, (1, 2, 2, 0)), (2, (2, 1, 0, 2)),
         (1, (1, 2, 0, 2)), (1, (1, 0, 2, 2)), (2, (0, 1, 2, 2))],
    )

    # Fig. 8: relays (element, feeding nodes) in the order they are added
    relays = [(5, (1, 2)), (7, (3, 4)), (8, (3, 4)), (9, (1, 7)),
              (10, (7, 9)), (6, (2, 9)), (11, (6, 9)), (12, (10, 11))]
    fig8_sinks = [(1, (5, 6)), (1, (5, 10)), (1, (5, 9)), (2, (5, 6)), (2, (5, 11)), (2, (5, 12)),
                  (4, (8, 12)), (3, (8, 11)), (3, (7, 8)), (4, (8, 10)), (3, (8, 9)), (4, (7, 8))]
    nodes = ["1", "2", "3", "4"]
    edges = []
    for i, feed in relays:
        nodes += [f"{i}'", str(i)]
        edges += [(str(j), f"{i}'") for j in feed] + [(f"{i}'", str(i))]
    demands = []
    for s, (msg, feed) in enumerate(fig8_sinks, start=13):
        nodes.append(str(s))
        edges += [(str(j), str(s)) for j in feed]
        demands.append((str(s), msg))
    docs["fig8"] = Network(nodes, [(j, str(j), j) for j in range(1, 5)],
                           [(j, t, h) for j, (t, h) in enumerate(edges, start=5)], demands)
    docs["fig8_script"] = ChoiceScript(
        vec(12, e1=2, e2=2, e3=2, e4=2),
        [(5, vec(12, e1=2, e2=2, e5=1)), (7, vec(12, e3=2, e4=2, e7=1)),
         (8, vec(12, e3=2, e4=2, e8=1)), (9, vec(12, e1=2, e7=2, e9=1)),
         (10, vec(12, e7=1, e9=2, e10=1)), (6, vec(12, e2=2, e6=1, e9=2)),
         (11, vec(12, e6=1, e9=2, e11=1)), (12, vec(12, e10=2, e11=2, e12=1))],
        [(1, vec(12, e1=1, e5=2, e6=2)), (1, vec(12, e1=1, e5=2, e10=2)), (1, vec(12, e1=1, e5=2, e9=2)),
         (2, vec(12, e2=1, e5=2, e6=2)), (2, vec(12, e2=1, e5=2, e11=2)), (2, vec(12, e2=1, e5=2, e12=2)),
         (4, vec(12, e4=1, e8=2, e12=2)), (3, vec(12, e3=1, e8=2, e11=2)), (3, vec(12, e3=1, e7=2, e8=2)),
         (4, vec(12, e4=1, e8=2, e10=2)), (3, vec(12, e3=1, e8=2, e9=2)), (4, vec(12, e4=1, e7=2, e8=2))],
    )

    OUT.mkdir(parents=True, exist_ok=True)
    for name, obj in docs.items():
        (OUT / f"{name}.json").write_text(emit(obj))
    print(f"wrote {len(docs)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
