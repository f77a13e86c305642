"""Regenerate the shipped corpus CSVs (data/knots.csv, data/grids.csv).

Every entry is built constructively (rational twist vectors, Montesinos
bands, braid closures, torus grids, or searched grids pinned below) and
cross-validated before writing: determinant two independent ways, Jones
match between each grid and its PD partner, alternation flags, and reduced
crossing counts.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qathin.diagram import mirror, parse_pd, simplify
from qathin.families import braid_closure_pd, montesinos_pd, rational_pd
from qathin.goeritz import determinant, signature
from qathin.gridfloer import GridDiagram, grid_to_pd
from qathin.khovanov import determinant_via_jones, jones_polynomial

DATA = Path(__file__).resolve().parent.parent / "src" / "qathin" / "data"

RATIONAL = {
    "3_1": (3,),
    "4_1": (2, 2),
    "5_1": (5,),
    "5_2": (3, 2),
    "6_1": (4, 2),
    "6_2": (3, 1, 2),
    "6_3": (2, 1, 1, 2),
    "7_1": (7,),
    "7_2": (5, 2),
    "7_3": (4, 3),
    "7_4": (3, 1, 3),
    "7_5": (3, 2, 2),
    "7_6": (2, 2, 1, 2),
    "7_7": (2, 1, 1, 1, 2),
    "8_1": (6, 2),
    "8_2": (5, 1, 2),
    "8_3": (4, 4),
    "8_4": (4, 1, 3),
    "8_6": (3, 3, 2),
    "8_7": (4, 1, 1, 2),
    "8_8": (2, 3, 1, 2),
    "8_9": (3, 1, 1, 3),
    "8_11": (3, 2, 1, 2),
    "8_12": (2, 2, 2, 2),
    "8_13": (3, 1, 1, 1, 2),
    "8_14": (2, 2, 1, 1, 2),
}

MONTESINOS = {
    "8_5": [3, 3, 2],
    "8_10": [3, (1, 1, 1), 2],
    "8_15": [(1, 1, 1), (1, 1, 1), 2],
    "9_46": [3, 3, -3],
}

BRAIDS = {
    "8_18": ([1, -2] * 4, 3),
    "8_19": ([1, 2] * 4, 3),
    # nine-crossing, det 7, not homologically thin: the census companion of 8_19
    "9_42": ([-3, 1, 2, -3, 1, 1, -2, 1, -2], 4),
}

# searched 3-braid words, pinned once found (filled by search_3braids)
BRAID_SEARCH_TARGETS = {"8_16": 35, "8_17": 37}

# grids: torus-formula and searched; each is transposed as needed at build
# time so its knot matches the chirality of the corpus PD entry
GRIDS = {
    "unknot_g2": ([1, 0], [0, 1], "unknot"),
    "3_1_g5": ([(i + 2) % 5 for i in range(5)], list(range(5)), "3_1"),
    "3_1_g6": ([3, 4, 5, 2, 0, 1], [5, 0, 1, 3, 2, 4], "3_1"),
    "4_1_g6": ([1, 3, 4, 0, 5, 2], [4, 5, 2, 3, 1, 0], "4_1"),
    "5_1_g7": ([(i + 2) % 7 for i in range(7)], list(range(7)), "5_1"),
    "5_2_g7": ([4, 5, 3, 2, 1, 0, 6], [1, 2, 0, 4, 6, 5, 3], "5_2"),
    "8_19_g7": ([(i + 3) % 7 for i in range(7)], list(range(7)), "8_19"),
}

# n=8 hit from tools/find_942_grid.py (no 9_42 grid exists at n=7: the
# exhaustive scan there found none)
GRID_942 = ([6, 2, 3, 1, 4, 5, 7, 0], [1, 7, 0, 5, 6, 2, 3, 4])


def search_3braids():
    """Exhaustive 8-letter 3-braid scan for the two non-rational alternating
    8-crossing knots that are braid-index-3 (unique determinants 35, 37)."""
    found = {}
    want = dict(BRAID_SEARCH_TARGETS)
    for code in range(4**8):
        word = []
        c = code
        for _ in range(8):
            word.append([1, -1, 2, -2][c % 4])
            c //= 4
        try:
            d = braid_closure_pd(word, 3)
        except Exception:
            continue
        if d.component_count() != 1:
            continue
        s = simplify(d).relabeled()
        if len(s.crossings) != 8 or not s.is_alternating() or not s.is_connected():
            continue
        det = determinant(s)
        for nm, target in list(want.items()):
            if det == target:
                found[nm] = (word, s)
                del want[nm]
        if not want:
            break
    return found


def build_pd_entries():
    entries = {}

    def add(name, d):
        d = simplify(d).relabeled()
        det = determinant(d)
        det2 = determinant_via_jones(d)
        if det != det2:
            raise SystemExit(f"{name}: determinant disagreement {det} vs {det2}")
        entries[name] = {
            "name": name,
            "pd_code": d.pd_text() if d.crossings else "",
            "alternating": int(d.is_alternating() and len(d.crossings) > 0),
            "expected_det": det,
            "expected_sigma": signature(d),
        }

    add("unknot", parse_pd("", name="unknot"))
    add("hopf_pos", parse_pd("X 1,3,2,4; X 3,1,4,2", name="hopf_pos"))
    add("hopf_neg", mirror(parse_pd("X 1,3,2,4; X 3,1,4,2", name="hopf_neg")))
    for nm, tw in RATIONAL.items():
        add(nm, rational_pd(tw, name=nm))
    for nm, spec in MONTESINOS.items():
        add(nm, montesinos_pd(spec, name=nm))
    for nm, (word, strands) in BRAIDS.items():
        add(nm, braid_closure_pd(word, strands, name=nm))
    print("searching 3-braids for 8_16 / 8_17 ...", flush=True)
    for nm, (word, d) in search_3braids().items():
        print(f"  {nm}: word {word}", flush=True)
        add(nm, d)
    # unknot entry: empty pd special case
    entries["unknot"]["alternating"] = 0
    return entries


def build_grid_entries(pd_entries):
    rows = []
    specs = dict(GRIDS)
    if GRID_942 is not None:
        specs["9_42_g8"] = (GRID_942[0], GRID_942[1], "9_42")
    for nm, (o, x, pd_name) in specs.items():
        base = GridDiagram(o, x, name=nm)
        target = pd_entries[pd_name]
        target_pd = parse_pd(target["pd_code"], name=pd_name)
        want_jones = jones_polynomial(target_pd)
        g = None
        for cand in (base, base.mirror()):
            pd_c = grid_to_pd(cand)
            if jones_polynomial(pd_c) != want_jones:
                continue
            # Jones cannot always detect chirality; pin with the signature
            if signature(simplify(pd_c)) != target["expected_sigma"]:
                continue
            g = cand
            break
        if g is None:
            raise SystemExit(f"{nm}: grid does not match {pd_name} (even mirrored)")
        rows.append(
            {
                "name": nm,
                "n": g.n,
                "o_perm": " ".join(map(str, g.o)),
                "x_perm": " ".join(map(str, g.x)),
                "pd_name": pd_name,
            }
        )
    return rows


def main():
    t0 = time.time()
    pd_entries = build_pd_entries()
    grid_rows = build_grid_entries(pd_entries)
    DATA.mkdir(parents=True, exist_ok=True)
    import csv

    with open(DATA / "knots.csv", "w", newline="") as fh:
        w = csv.DictWriter(
            fh,
            fieldnames=["name", "pd_code", "alternating", "expected_det", "expected_sigma"],
        )
        w.writeheader()
        for nm in pd_entries:
            w.writerow(pd_entries[nm])
    with open(DATA / "grids.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["name", "n", "o_perm", "x_perm", "pd_name"])
        w.writeheader()
        for row in grid_rows:
            w.writerow(row)
    print(f"wrote {len(pd_entries)} knots, {len(grid_rows)} grids in {time.time()-t0:.0f}s")


if __name__ == "__main__":
    main()
