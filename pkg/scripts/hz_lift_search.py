"""Search tight lifts of a base (default: the HZ base) for empty simplices.

The HZ base has 5 vertices, so a 4-dimensional tight lift is a simplex; it
is empty when it has exactly 5 lattice points.  The search is bounded by
``--height-bound`` and makes no completeness claim beyond it.
"""
import argparse
import json

from latpoly.cli import load_polytope
from latpoly.config import LiftSearchConfig
from latpoly.lifts import enumerate_tight_lifts


def run(cfg: LiftSearchConfig):
    Q = load_polytope(cfg.base)
    found = []
    for c in enumerate_tight_lifts(Q, cfg.height_bound, cfg.size_bound):
        if c.dim == Q.ambient_dim + 1 and c.size == len(c.lift.total.vertices):
            found.append(c)
    return found


def main():
    d = LiftSearchConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base", default=d.base)
    ap.add_argument("--height-bound", type=int, default=d.height_bound)
    ap.add_argument("--size-bound", type=int, default=d.size_bound)
    a = ap.parse_args()
    cfg = LiftSearchConfig(a.base, a.height_bound, a.size_bound)
    found = run(cfg)
    for c in found:
        print(json.dumps(c.as_record(), sort_keys=True))
    print(f"# {len(found)} empty full-dimensional tight lifts of {cfg.base} with heights "
          f"in [-{cfg.height_bound}, {cfg.height_bound}]")


if __name__ == "__main__":
    main()
