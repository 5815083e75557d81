"""Run the width census for catalog seeds and write JSONL files.

    python3 scripts/run_census.py --min-width 2 --out-dir tests/golden
"""
import argparse
import json
import os
import time

from latpoly.config import CensusConfig
from latpoly.hollowlab import catalog, census_subpolytopes, write_census


def run(cfg: CensusConfig):
    os.makedirs(cfg.out_dir, exist_ok=True)
    counts = {}
    for name in cfg.seeds:
        t = time.perf_counter()
        recs = census_subpolytopes(catalog(name), cfg.min_width, threads=cfg.threads)
        write_census(recs, cfg.path_for(name))
        counts[name] = len(recs)
        print(f"{name}: {len(recs)} classes in {time.perf_counter() - t:.1f}s "
              f"-> {cfg.path_for(name)}")
    with open(os.path.join(cfg.out_dir, f"census_counts_w{cfg.min_width}.json"), "w") as fh:
        json.dump(counts, fh, indent=1, sort_keys=True)
        fh.write("\n")
    return counts


def main():
    d = CensusConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", default=",".join(d.seeds))
    ap.add_argument("--min-width", type=int, default=d.min_width)
    ap.add_argument("--out-dir", default=d.out_dir)
    ap.add_argument("--threads", type=int, default=d.threads)
    a = ap.parse_args()
    run(CensusConfig(tuple(a.seeds.split(",")), a.min_width, a.out_dir, a.threads))


if __name__ == "__main__":
    main()
