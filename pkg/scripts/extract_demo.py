"""Blow a triangulated grid up into a random graph, then pull an induced stone wall back out."""

import argparse

from holeforge.detectors import find_theta
from holeforge.forks import extract_induced_stone_wall, wall_shape_for
from holeforge.generators import random_uncontraction, triangulated_grid
from holeforge.walls import stone_wall_shape


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=32)
    ap.add_argument("--size", type=int, default=3, help="largest pre-image tree")
    ap.add_argument("--extra", type=float, default=0.3, help="chance of further edges per grid edge")
    ap.add_argument("--seeds", type=int, default=20)
    args = ap.parse_args()

    t = triangulated_grid(args.k, args.k)
    h = args.k // 8
    print(f"k={args.k}: expecting a {wall_shape_for(args.k)} stone wall")
    for seed in range(args.seeds):
        g, phi = random_uncontraction(t, args.size, seed, args.extra)
        sw = extract_induced_stone_wall(g, phi, h, args.k)
        induced = sw.graph == g.induced(sw.graph.vertices)
        shape = stone_wall_shape(sw.graph)
        theta = find_theta(sw.base.graph) is not None
        print(
            f"seed {seed:3d}: |V(G)|={g.n:5d}  wall on {sw.graph.n:4d} vertices, "
            f"{len(sw.replaced):2d} triangles, induced={induced}, recognized={shape is not None}, theta={theta}"
        )


if __name__ == "__main__":
    main()
