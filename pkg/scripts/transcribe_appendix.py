"""Regenerate the n = 10 FULL relator fixture and its manifest.

Each block is one printed relation family; ``j`` ranges are expanded and
printed ellipses are written out.  Run once; the output is checked in.
"""

import json
from collections import Counter
from pathlib import Path

from zappatic.presentation import APPENDIX_FILE, MANIFEST_FILE, parse_blocks
from zappatic.words import Word, commutator, triple

DATA = Path(__file__).resolve().parents[1] / "src" / "zappatic" / "data"

X = "10 9 -10 8 10 -9 -10"
XM = "10 9 -10 -8 10 -9 -10"
XB = "10 9 -10 -8 8' 8 10 -9 -10"
P = "2' 2 1' -2 -2'"


def w(text: str) -> Word:
    return Word.parse(text)


def down(hi: int, lo: int) -> str:
    """hi' hi (hi-1)' (hi-1) ... lo' lo"""
    return " ".join(f"{k}' {k}" for k in range(hi, lo - 1, -1))


def conj(prefix: str, core: str) -> Word:
    return w(prefix) * w(core) * w(prefix).inverse()


def eq(lhs: str, rhs: str) -> Word:
    return w(lhs) * w(rhs).inverse()


def cusp(j: int) -> list[str]:
    return [f"{j}", f"{j}'", f"-{j} {j}' {j}"]


def pair(j: int) -> list[str]:
    return [f"{j}", f"{j}'"]


LOW = [s for j in (1, 2, 3, 4) for s in pair(j)]

BLOCKS: dict[str, list[Word]] = {}


def block(label: str, rels):
    BLOCKS[label] = list(rels)


# first part
block("p1-01", (triple(w(j), w("10")) for j in cusp(9)))
block("p1-02", (commutator(conj(down(8, int(j[0]) + 1), j), w("10")) for j in LOW))
block("p1-03", (commutator(conj(down(9, int(j[0]) + 1), j), w("-10 10' 10")) for j in LOW))
block("p1-04", (commutator(w(j), w("10")) for k in (6, 7, 8) for j in pair(k)))
block("p1-05", (commutator(w(j), w("10 -7 -7' -8 -8' -9 -9' -10 10' 10 9' 9 8' 8 7' 7 -10"))
                for j in pair(6)))
block("p1-06", (commutator(w(j), w("10 -8 -8' -9 -9' -10 10' 10 9' 9 8' 8 -10")) for j in pair(7)))
block("p1-07", (commutator(w(j), w("10 -9 -9' -10 10' 10 9' 9 -10")) for j in pair(8)))
block("p1-08", (triple(conj(down(8, 7), j), w("10")) for j in cusp(5)))
block("p1-09", [eq("10", "8' 8 7' 7 6' 6 -7 -7' -8 -8' -9 -9' -10 10' 10 9' 9 8' 8 7' 7 6' 6 "
                         "-7 -7' -8 -8'")])

# second part
Y = "10 9 -10"
block("p2-01", (triple(w(j), w(Y)) for j in cusp(8)))
block("p2-02", (commutator(conj(down(7, int(j[0]) + 1), j), w(Y)) for j in LOW))
block("p2-03", (commutator(conj(down(7, 7), j), w(Y)) for j in pair(6)))
block("p2-04", (commutator(w(j), w(Y)) for j in pair(6)))
block("p2-05", (commutator(conj(down(8, int(j[0]) + 1), j), w("10 -9 9' 9 -10"))
                for j in LOW + pair(6) + pair(7)))
block("p2-06", (triple(conj(down(8, 7), j), w(Y)) for j in cusp(5)))
block("p2-07", [eq(Y, "7' 7 6' 6 -5 -5' -6 -6' -7 -7' -8 -8' 10 -9 -9' 9 -10 8' 8 7' 7 6' 6 "
                      "5' 5 -6 -6' -7 -7'")])

# third part
Q = f"{P} -1' -2 -2'"  # 2'2 1' 2^-1 2'^-1 1'^-1 2^-1 2'^-1
block("p3-01", (triple(w("1'"), w(j)) for j in cusp(2)))
block("p3-02", (triple(w(j), w(X)) for j in cusp(7)))
block("p3-03", (commutator(conj(down(6, 2) + " 1'", j), w(X)) for j in pair(2)))
block("p3-04", (commutator(w(P), w(f"{X} {j} {XM}")) for j in pair(7)))
block("p3-05", (commutator(conj(down(6, 4), j), w(X)) for j in pair(3)))
block("p3-06", (commutator(w(P), w(j)) for j in pair(6)))
block("p3-07", (commutator(conj(down(6, 5), j), w(X)) for j in pair(4)))
block("p3-08", (commutator(w(P), w(j)) for j in pair(5)))
block("p3-09", [commutator(conj(down(6, 5), P), w(X))])
block("p3-10", (commutator(conj(down(7, 2) + " 1'", j), w(XB)) for j in pair(2)))
block("p3-11", (commutator(w("1"), w(f"{X} {j} {XM}")) for j in pair(7)))
block("p3-12", (commutator(conj(down(7, 4), j), w(XB)) for j in pair(3)))
block("p3-13", (commutator(w("1"), w(j)) for j in pair(6)))
block("p3-14", (commutator(conj(down(7, 5), j), w(XB)) for j in pair(4)))
block("p3-15", (commutator(w("1"), w(j)) for j in pair(5)))
block("p3-16", [commutator(conj(down(7, 5), P), w(XB))])
block("p3-17", [commutator(conj(down(6, 5), "1"), w(X))])
block("p3-18", [commutator(conj(down(7, 5), "1"), w(XB))])
block("p3-19", (triple(w(P), w(j)) for j in cusp(4)))
block("p3-20", (triple(conj(down(6, 6), j), w(X)) for j in cusp(5)))
block("p3-21", [eq("1", f"4' 4 {P} -4 -4'")])
block("p3-22", (commutator(w("1"), conj("2' 2 -1' -2 -2'", j)) for j in pair(3)))
block("p3-23", (commutator(w(P), w(j)) for j in pair(3)))
block("p3-24", [eq(f"6' 6 -5 -5' -6 -6' -7 -7' {XB} 7' 7 6' 6 5' 5 -6 -6'", X)])
block("p3-25", (commutator(w(j), w(X)) for j in pair(6)))
block("p3-26", (commutator(w(j), w(f"{X} -7 -7' {XB} 7' 7 {XM}")) for j in pair(6)))
block("p3-27", (commutator(w("3'"), w(j)) for j in pair(4)))
block("p3-28", (triple(w(j), conj("2' 2 -1' -2 -2'", "3")) for j in cusp(2)))
block("p3-29", (triple(conj("4' 4", "3'"), w(j)) for j in cusp(5)))
block("p3-30", [commutator(w("3'"), w("-4 -4' -5 -5' 4' 4 -4 5' 5 4' 4")),
                commutator(w("3'"), w("-4 -4' -5 -5' 4' 4 4' -4 -4' 5' 5 4' 4"))])
block("p3-31", [eq("3", f"{Q} -3 5' 5 4' 4 3' -4 -4' -5 -5' 3 2' 2 1' 2' 2 -1' -2 -2'")])
R5 = f"{Q} -3 -3' -4 -4' -5 -5'"
block("p3-32", (commutator(w("3"), w(R5) * w(j) * w(R5).inverse()) for j in pair(6)))
block("p3-33", (commutator(w("3'"), w("-4 -4' -5 -5'") * w(j) * w("5' 5 4' 4")) for j in pair(6)))
R6 = f"{R5} -6 -6'"
block("p3-34", (commutator(w("3"), w(R6) * w(f"{X} {j} {XM}") * w(R6).inverse())
                for j in pair(7)))
block("p3-35", (commutator(w("3'"), conj("-4 -4' -5 -5' -6 -6'", f"{X} {j} {XM}"))
                for j in pair(7)))
block("p3-36", [commutator(w("5"), w("6")), commutator(w("5'"), w("6"))])
block("p3-37", (triple(w("6'"), w(f"{X} {j} {XM}")) for j in cusp(7)))
block("p3-38", (triple(w(j), w("6")) for j in cusp(4)))
block("p3-39", (commutator(w(j), conj("-4 -4' -5 -5'", "6")) for j in pair(2)))
block("p3-40", [eq("6", f"-4 -4' -5 -5' -6 {X} 7' 7 {XM} 6' {X} -7 -7' {XM} 6 5' 5 4' 4")])
block("p3-41", (commutator(w(j), conj("2' 2 -1' -2 -2' -3", "6")) for j in pair(2)))
block("p3-42", (commutator(w(j), conj("2 -1' -2 -2' -3", f"{X} 7' 7 {XM} 6' {X} -7 -7' {XM}"))
                for j in pair(2)))
block("p3-43", (triple(w("2'"), conj("2 -1' -2 -2' -3", j)) for j in cusp(4)))
block("p3-44", (triple(w("2"), conj("2' 2 -1' -2 -2' -3", j)) for j in cusp(4)))
block("p3-45", (triple(w(j), conj("-6", f"{X} 7 {XM}")) for j in cusp(5)))
block("p3-46", (triple(w(j), conj("-6", f"{X} -7 7' 7 {XM}")) for j in cusp(5)))

# branch points and the projective relation
block("branch", (w(f"{j}' -{j}") for j in range(1, 11)))
block("projective", [w(down(10, 1))])


def main():
    lines = ["# n=10 stage=full\n"]
    for label, rels in BLOCKS.items():
        lines.append(f"# @block {label}\n")
        lines.extend(f"{r}\n" for r in rels)
    text = "".join(lines)
    (DATA / APPENDIX_FILE).write_text(text)
    manifest = dict(Counter(label for label, _ in parse_blocks(text)))
    (DATA / MANIFEST_FILE).write_text(json.dumps(manifest, indent=1) + "\n")
    print(f"{sum(manifest.values())} relators in {len(manifest)} blocks")


if __name__ == "__main__":
    main()
