#!/usr/bin/env python3
"""Builds the shipped tiling templates under catalog/.

Each tiling is a prototile, a translation lattice and a list of placements
(mirror flag, rotation in degrees, translation) that cover one period.
Placements for the non-trivial pentagon and hexagon tilings live in
tools/data/placements.json. This script checks every prototile against its
type conditions, resolves vertex orbits and flat vertices, and writes one JSON
template per tiling with the expected exact statistics attached.
"""

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
TOL = 1e-7

# Reference table rows: t_h, v_j and 2e. The remaining fields follow from these.
TABLE1 = {
    ("1e", "2e", "4", "6", "7", "8", "9"): ({5: "1"}, {3: "1", 4: "1/2"}, "5"),
    ("5",): ({5: "1"}, {3: "4/3", 6: "1/6"}, "5"),
    ("1", "2", "3", "12"): ({6: "1"}, {3: "2"}, "6"),
    ("10",): ({5: "2/3", 7: "1/3"}, {3: "5/3", 4: "1/6"}, "17/3"),
    ("11",): ({5: "1/2", 7: "1/2"}, {3: "2"}, "6"),
    ("13",): ({5: "1/2", 6: "1/2"}, {3: "3/2", 4: "1/4"}, "11/2"),
    ("14",): ({5: "1/3", 6: "1/3", 7: "1/3"}, {3: "2"}, "6"),
    ("15",): ({5: "2/3", 6: "1/3"}, {3: "4/3", 4: "1/3"}, "16/3"),
}


def close(x, y, tol=1e-7):
    return abs(x - y) <= tol


# Type conditions with angles in degrees. Pentagon sides: a=EA, b=AB, c=BC,
# d=CD, e=DE; hexagon sides a=FA, b=AB, ..., f=EF.
CONDITIONS = {
    "1": lambda A, s: close(A[0] + A[1] + A[2], 360),
    "1e": lambda A, s: close(A[0] + A[1] + A[2], 360),
    "2": lambda A, s: close(A[2] + A[4], 180) and close(s[0], s[3]),
    "2e": lambda A, s: close(A[2] + A[4], 180) and close(s[0], s[3]) and close(s[2], s[4]),
    "3": lambda A, s: all(close(A[i], 120) for i in (0, 2, 3)) and close(s[0], s[1])
    and close(s[3], s[2] + s[4]),
    "4": lambda A, s: close(A[0], 90) and close(A[2], 90) and close(s[0], s[1]) and close(s[2], s[3]),
    "5": lambda A, s: close(A[0], 60) and close(A[3], 120) and close(s[0], s[1]) and close(s[3], s[4]),
    "10": lambda A, s: close(A[4], 90) and close(A[0] + A[3], 180) and close(2 * A[1] - A[3], 180)
    and close(2 * A[2] + A[3], 360) and close(s[0], s[4]) and close(s[0], s[1] + s[3]),
    "11": lambda A, s: close(A[0], 90) and close(A[2] + A[4], 180) and close(2 * A[1] + A[2], 360)
    and close(s[3], s[4]) and close(s[3], 2 * s[0] + s[2]),
    "12": lambda A, s: close(A[0], 90) and close(A[2] + A[4], 180) and close(2 * A[1] + A[2], 360)
    and close(2 * s[0], s[2] + s[4]) and close(2 * s[0], s[3]),
    "13": lambda A, s: close(A[0], 90) and close(A[2], 90) and close(2 * A[1], 360 - A[3])
    and close(2 * A[4], 360 - A[3]) and close(s[2], s[3]) and close(2 * s[2], s[4]),
    "14": lambda A, s: close(A[0], 90) and close(2 * A[1] + A[2], 360) and close(A[2] + A[4], 180)
    and close(2 * s[0], 2 * s[2]) and close(2 * s[0], s[3]) and close(s[3], s[4])
    and close(math.cos(math.radians(A[2])), (3 * math.sqrt(57) - 17) / 16, 1e-9),
    "15": lambda A, s: all(close(x, y) for x, y in zip(A, (150, 60, 135, 105, 90)))
    and close(s[0], s[2]) and close(s[0], s[4]) and close(s[1], 2 * s[0]),
    "H1": lambda A, s: close(A[0] + A[1] + A[2], 360) and close(s[0], s[3]),
    "H2": lambda A, s: close(A[0] + A[1] + A[3], 360) and close(s[0], s[3]) and close(s[2], s[4]),
    "H3": lambda A, s: all(close(A[i], 120) for i in (0, 2, 4)) and close(s[0], s[1])
    and close(s[2], s[3]) and close(s[4], s[5]),
}


def interior_angles(poly):
    n = len(poly)
    out = []
    for i in range(n):
        u = poly[(i + 1) % n] - poly[i]
        v = poly[i - 1] - poly[i]
        out.append(math.degrees(math.atan2(u[0] * v[1] - u[1] * v[0], u @ v)) % 360.0)
    return out


def satisfies(label, poly):
    """True if some labelling of the corners meets the type conditions."""
    n = len(poly)
    angles = interior_angles(poly)
    # side i joins corner i-1 and corner i, so side 0 is the one ending at corner 0
    sides = [float(np.linalg.norm(poly[i] - poly[i - 1])) for i in range(n)]
    for start in range(n):
        for step in (1, -1):
            order = [(start + step * k) % n for k in range(n)]
            A = [angles[i] for i in order]
            if step == 1:
                s = [sides[i] for i in order]
            else:
                s = [sides[(i + 1) % n] for i in order]
            if CONDITIONS[label](A, s):
                return True
    return False


def ccw(poly):
    poly = np.asarray(poly, float)
    x, y = poly[:, 0], poly[:, 1]
    area = 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))
    return poly if area > 0 else poly[::-1].copy()


def place(proto, mirror, degrees, tx, ty):
    base = ccw(proto * np.array([1.0, -1.0])) if mirror else ccw(proto)
    t = math.radians(degrees)
    rot = np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    return base @ rot.T + np.array([tx, ty])


def on_side_interior(p, a, b):
    ab = b - a
    length = float(np.linalg.norm(ab))
    s = float((p - a) @ ab) / (length * length)
    if s * length <= TOL or (1 - s) * length <= TOL:
        return None
    dist = abs(ab[0] * (p - a)[1] - ab[1] * (p - a)[0]) / length
    return s if dist < TOL else None


def build_template(name, label, tiles, t1, t2):
    t1 = np.asarray(t1, float)
    t2 = np.asarray(t2, float)
    basis = np.column_stack([t1, t2])
    inverse = np.linalg.inv(basis)
    tiles = [ccw(t) for t in tiles]
    nearby = [
        t + m * t1 + n * t2 for t in tiles for m in range(-2, 3) for n in range(-2, 3)
    ]
    reps = []

    def vertex_ref(p):
        f = inverse @ p
        shift = np.floor(f + 1e-9)
        rep = p - basis @ shift
        for idx, r in enumerate(reps):
            d = inverse @ (rep - r)
            k = np.round(d)
            if np.abs(d - k).max() < TOL:
                total = shift + k
                return [idx, int(total[0]), int(total[1])]
        reps.append(rep)
        return [len(reps) - 1, int(shift[0]), int(shift[1])]

    cycles = []
    flat = []
    for ti, tile in enumerate(tiles):
        cycle = []
        for k in range(len(tile)):
            a, b = tile[k], tile[(k + 1) % len(tile)]
            cycle.append(vertex_ref(a))
            inner = []
            for other in nearby:
                for q in other:
                    s = on_side_interior(q, a, b)
                    if s is not None and not any(abs(s - x) * np.linalg.norm(b - a) < TOL for x, _ in inner):
                        inner.append((s, q))
            for _, q in sorted(inner, key=lambda item: item[0]):
                flat.append([ti, len(cycle)])
                cycle.append(vertex_ref(q))
        cycles.append(cycle)
    return {
        "name": name,
        "type_label": label,
        "lattice": [t1.tolist(), t2.tolist()],
        "vertices": [[float(x), float(y)] for x, y in reps],
        "tiles": cycles,
        "flat": flat,
    }


def stats(t, v, two_e, corners):
    t = {int(h): Fraction(x) for h, x in t.items()}
    v = {int(j): Fraction(x) for j, x in v.items()}
    vt = sum(v.values())
    e = Fraction(two_e) / 2
    return {
        "t": {str(h): str(x) for h, x in sorted(t.items())},
        "v": {str(j): str(x) for j, x in sorted(v.items())},
        "vertices_per_tile": str(vt),
        "edges_per_tile": str(e),
        "w": {str(j): str(x / vt) for j, x in sorted(v.items())},
        "corners": corners,
        "edge_to_edge": corners != 5 or vt == Fraction(3, 2),
    }


def table1_stats(label):
    for labels, (t, v, two_e) in TABLE1.items():
        if label in labels:
            return stats(t, v, two_e, 5)
    raise KeyError(label)


HEXAGON_STATS = stats({6: 1}, {3: 2}, 6, 6)


def regular_polygon(n, radius=1.0, phase=0.0):
    return np.array(
        [[radius * math.cos(phase + 2 * math.pi * k / n), radius * math.sin(phase + 2 * math.pi * k / n)] for k in range(n)]
    )


def sanity_tilings():
    out = []
    square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    out.append(("square", "square", [square], [1.0, 0.0], [0.0, 1.0], stats({4: 1}, {4: 1}, 4, 4)))
    h = math.sqrt(3) / 2
    up = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, h]])
    down = np.array([[1.0, 0.0], [1.5, h], [0.5, h]])
    out.append(("triangle", "triangle", [up, down], [1.0, 0.0], [0.5, h], stats({3: 1}, {6: "1/2"}, 3, 3)))
    hexagon = regular_polygon(6, 1.0, math.pi / 6)
    s3 = math.sqrt(3)
    out.append(("regular-hexagon", "hexagon", [hexagon], [s3, 0.0], [s3 / 2, 1.5], HEXAGON_STATS))
    return out


def placed_tilings():
    data = json.loads((ROOT / "tools" / "data" / "placements.json").read_text())
    out = []
    for name, entry in data.items():
        proto = np.asarray(entry["prototile"], float)
        if name.startswith("pentagon-type-"):
            label = name[len("pentagon-type-"):]
            expected = table1_stats(label)
        else:
            label = "H" + name[len("hexagon-type-"):]
            expected = HEXAGON_STATS
        if not satisfies(label, proto):
            raise SystemExit(f"{name}: prototile does not meet the type {label} conditions")
        tiles = [place(proto, *p) for p in entry["tiles"]]
        t1, t2 = entry["lattice"]
        out.append((name, label, tiles, t1, t2, expected))
    return out


def write_template(path, template):
    lines = ["{"]
    lines.append(f'  "name": {json.dumps(template["name"])},')
    lines.append(f'  "type_label": {json.dumps(template["type_label"])},')
    lines.append(f'  "lattice": {json.dumps(template["lattice"])},')
    lines.append('  "vertices": [')
    lines.append(",\n".join(f"    {json.dumps(v)}" for v in template["vertices"]))
    lines.append("  ],")
    lines.append('  "tiles": [')
    lines.append(",\n".join(f"    {json.dumps(t)}" for t in template["tiles"]))
    lines.append("  ],")
    lines.append(f'  "flat": {json.dumps(template["flat"])},')
    lines.append(f'  "expected": {json.dumps(template["expected"])}')
    lines.append("}")
    path.write_text("\n".join(lines) + "\n")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=ROOT / "catalog")
    args = parser.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    for name, label, tiles, t1, t2, expected in sanity_tilings() + placed_tilings():
        template = build_template(name, label, tiles, t1, t2)
        template["expected"] = expected
        write_template(args.out / f"{name}.json", template)
        print(f"{name}: {len(tiles)} tiles, {len(template['vertices'])} vertex orbits, {len(template['flat'])} flat marks")
    return 0


if __name__ == "__main__":
    sys.exit(main())
