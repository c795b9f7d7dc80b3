#!/usr/bin/env python3
"""Generate the unstructured 139-node Delaunay mesh of the unit square.

40 equispaced boundary nodes (10 per side) plus 99 interior nodes smoothed
by Lloyd iterations, triangulated with scipy. Writes data/delaunay139.{node,ele}.
Red refinement of this mesh gives 513, 1969, 7713, 30529, 121473 nodes.
"""
import argparse
import pathlib

import numpy as np
from scipy.spatial import Delaunay


def boundary_points(per_side):
    t = np.arange(per_side) / per_side
    pts = []
    pts += [(s, 0.0) for s in t]
    pts += [(1.0, s) for s in t]
    pts += [(1.0 - s, 1.0) for s in t]
    pts += [(0.0, 1.0 - s) for s in t]
    return np.array(pts)


def lloyd(interior, boundary, iterations, rng):
    samples = rng.random((200000, 2))
    for _ in range(iterations):
        allpts = np.vstack([boundary, interior])
        # nearest-generator assignment by brute force in chunks
        owner = np.empty(len(samples), dtype=int)
        for s in range(0, len(samples), 20000):
            chunk = samples[s:s + 20000]
            d = ((chunk[:, None, :] - allpts[None, :, :]) ** 2).sum(-1)
            owner[s:s + 20000] = d.argmin(1)
        nb = len(boundary)
        for i in range(len(interior)):
            mine = samples[owner == nb + i]
            if len(mine):
                interior[i] = mine.mean(0)
    return interior


def min_angle(points, tris):
    worst = np.pi
    for t in tris:
        p = points[t]
        for i in range(3):
            a = p[(i + 1) % 3] - p[i]
            b = p[(i + 2) % 3] - p[i]
            c = np.dot(a, b) / np.linalg.norm(a) / np.linalg.norm(b)
            worst = min(worst, np.arccos(np.clip(c, -1, 1)))
    return np.degrees(worst)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/delaunay139")
    ap.add_argument("--seed", type=int, default=20140101)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    boundary = boundary_points(10)
    interior = 0.05 + 0.9 * rng.random((99, 2))
    interior = lloyd(interior, boundary, 40, rng)
    points = np.vstack([boundary, interior])
    tri = Delaunay(points)
    tris = []
    for t in tri.simplices:
        p = points[t]
        area = 0.5 * ((p[1, 0] - p[0, 0]) * (p[2, 1] - p[0, 1]) -
                      (p[2, 0] - p[0, 0]) * (p[1, 1] - p[0, 1]))
        if area < 0:
            t = t[[0, 2, 1]]
        tris.append(t)
    tris = np.array(tris)
    print(f"nodes {len(points)} triangles {len(tris)} "
          f"min angle {min_angle(points, tris):.1f} deg")

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    nb = len(boundary)
    with open(out.with_suffix(".node"), "w") as f:
        f.write("# unstructured mesh of the unit square\n")
        f.write(f"{len(points)} 2 0 1\n")
        for i, (x, y) in enumerate(points):
            f.write(f"{i + 1} {x:.17g} {y:.17g} {1 if i < nb else 0}\n")
    with open(out.with_suffix(".ele"), "w") as f:
        f.write(f"{len(tris)} 3 0\n")
        for i, t in enumerate(tris):
            f.write(f"{i + 1} {t[0] + 1} {t[1] + 1} {t[2] + 1}\n")


if __name__ == "__main__":
    main()
