"""Regenerate fixtures/abstract_example.json.

The space is written out from first principles: the listed parthood and
order pairs are transitively closed by computation, the partial join and
meet tables are set union/intersection restricted to the universe (with
the empty element excluded as an operand), and the lower/upper maps are
spelled out explicitly.  Running the script is idempotent.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from rif_forge.space import load_space, render_carrier, save_space, validate_space
from rif_forge.space import check_admissibility, classify_flavor, granular_lower, granular_upper

CARRIERS = {
    "bot": frozenset(),
    "a": frozenset("a"),
    "e": frozenset("e"),
    "ab": frozenset("ab"),
    "bc": frozenset("bc"),
    "be": frozenset("be"),
    "abe": frozenset("abe"),
    "bce": frozenset("bce"),
    "top": frozenset("abce"),
}
ORDERED_IDS = ["bot", "a", "e", "ab", "bc", "be", "abe", "bce", "top"]
GRANULES = ["be", "bc", "a", "e"]

# Parthood: every element is part of itself and of top, bottom is part of
# everything, plus the listed proper inclusions among the middle layer.
PART_BASE = [
    ("ab", "abe"),
    ("be", "bce"),
    ("a", "ab"),
    ("bc", "bce"),
    ("e", "be"),
    ("be", "abe"),
]

# Order: the comparability diagram, top above the two big elements; the
# bottom element is below nothing but itself.
ORDER_BASE = [
    ("abe", "top"),
    ("bce", "top"),
    ("ab", "abe"),
    ("be", "abe"),
    ("be", "bce"),
    ("bc", "bce"),
    ("a", "ab"),
    ("e", "be"),
]

LOWER = {
    "bot": "bot",
    "a": "a",
    "e": "e",
    "ab": "a",
    "bc": "bc",
    "be": "be",
    "abe": "abe",
    "bce": "bce",
    "top": "top",
}
UPPER = {
    "bot": "bot",
    "a": "a",
    "e": "be",
    "ab": "top",
    "bc": "bce",
    "be": "bce",
    "abe": "top",
    "bce": "bce",
    "top": "top",
}


def transitive_closure(pairs, ids):
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for x, y in list(closed):
            for y2, z in list(closed):
                if y == y2 and (x, z) not in closed:
                    closed.add((x, z))
                    changed = True
    return closed


def main():
    by_carrier = {c: i for i, c in CARRIERS.items()}

    part = {(x, x) for x in ORDERED_IDS}
    part |= {("bot", x) for x in ORDERED_IDS}
    part |= {(x, "top") for x in ORDERED_IDS}
    part |= transitive_closure(set(PART_BASE), ORDERED_IDS)
    part = transitive_closure(part, ORDERED_IDS)

    order = {(x, x) for x in ORDERED_IDS}
    order |= transitive_closure(set(ORDER_BASE), ORDERED_IDS)

    join, meet = [], []
    for x in ORDERED_IDS:
        if x == "bot":
            continue
        for w in ORDERED_IDS:
            if w == "bot":
                continue
            union = CARRIERS[x] | CARRIERS[w]
            if union in by_carrier:
                join.append([x, w, by_carrier[union]])
            inter = CARRIERS[x] & CARRIERS[w]
            if inter in by_carrier:
                meet.append([x, w, by_carrier[inter]])

    raw = {
        "flavor": "GGS",
        "bottom": "bot",
        "top": "top",
        "elements": [
            {"id": i, "carrier": sorted(CARRIERS[i])} for i in ORDERED_IDS
        ],
        "granulation": GRANULES,
        "parthood": sorted([list(p) for p in part]),
        "order": sorted([list(p) for p in order]),
        "join": join,
        "meet": meet,
        "lower": [[x, LOWER[x]] for x in ORDERED_IDS],
        "upper": [[x, UPPER[x]] for x in ORDERED_IDS],
    }

    space = load_space(raw)

    for report in validate_space(space) + check_admissibility(space):
        assert report.holds, (report.axiom, report.witnesses)
    assert classify_flavor(space) == "GGS"
    for x in ORDERED_IDS:
        assert granular_lower(space, x) == LOWER[x], x
        assert granular_upper(space, x) == UPPER[x], x
    assert len(part) == 33 and len(order) == 25

    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "rif_forge" / "fixtures"
    out.mkdir(exist_ok=True)
    save_space(space, out / "abstract_example.json")
    print(f"wrote {out / 'abstract_example.json'}")
    print("parthood pairs:", len(part), "order pairs:", len(order))
    print("rows:", [(render_carrier(CARRIERS[x]), LOWER[x], UPPER[x]) for x in ORDERED_IDS])


if __name__ == "__main__":
    main()
