#!/usr/bin/env python3
"""Classify the generated corpus and print one row per ring.

Also reports which non-MTL rings satisfy the weaker (MTL)* condition
(I cap J = 0 implies I* + J* = R), since nothing forces the answer either way.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from mtlab.classify import check_equivalent_conditions, classify_ring
from mtlab.corpus import build_corpus, default_max_order, supplementary_rings
from mtlab.ideals import enumerate_ideals

COLUMNS = ("mtl", "bl", "mv", "godel", "arithmetical", "local", "chain")


@dataclass
class SurveyConfig:
    max_order: int
    supplementary: bool = False
    json: bool = False


def mark(v):
    return "-" if v is None else ("y" if v else ".")


def survey(cfg: SurveyConfig) -> dict:
    rings = [c.ring for c in build_corpus(cfg.max_order)]
    if cfg.supplementary:
        rings += supplementary_rings()
    rows, star_only = [], []
    for R in rings:
        L = enumerate_ideals(R)
        c = classify_ring(R, L)
        e = check_equivalent_conditions(R, L)
        rows.append({"ring": R.name, "order": R.order, "ideals": len(L),
                     **{k: getattr(c, k) for k in COLUMNS}, "mtl_star": e.mtl_star})
        if not c.mtl and e.mtl_star:
            star_only.append(R.name)
    return {"config": asdict(cfg), "rows": rows, "non_mtl_with_mtl_star": star_only}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=default_max_order())
    ap.add_argument("--supplementary", action="store_true",
                    help="include rings outside the constructor families")
    ap.add_argument("--json", action="store_true")
    cfg = SurveyConfig(**vars(ap.parse_args()))

    t = time.perf_counter()
    out = survey(cfg)
    if cfg.json:
        print(json.dumps(out, indent=2))
        return
    head = f"{'ring':<28}{'n':>4}{'#id':>5}  " + " ".join(f"{k[:5]:>5}" for k in COLUMNS + ("mtl_star",))
    print(head)
    for r in out["rows"]:
        cells = " ".join(f"{mark(r[k]):>5}" for k in COLUMNS + ("mtl_star",))
        print(f"{r['ring']:<28}{r['order']:>4}{r['ideals']:>5}  {cells}")
    n_mtl = sum(1 for r in out["rows"] if r["mtl"])
    print(f"\n{len(out['rows'])} rings, {n_mtl} MTL, {time.perf_counter() - t:.1f}s")
    print("non-MTL rings satisfying (MTL)*:", out["non_mtl_with_mtl_star"] or "none")


if __name__ == "__main__":
    main()
