#!/usr/bin/env python3
"""Axiom flags of the nilpotent-minimum chains for a range of sizes."""

import argparse

from mtlab.algebra import check_axioms, check_basic_properties, nm_chain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-min", type=int, default=2)
    ap.add_argument("--k-max", type=int, default=16)
    args = ap.parse_args()

    print(f"{'k':>3}  mtl  bl   mv   godel  props  bl witness")
    for k in range(args.k_min, args.k_max + 1):
        A = nm_chain(k)
        f = check_axioms(A)
        props = check_basic_properties(A).all_pass
        w = f.witnesses.get("is_bl", "")
        yn = lambda b: "yes" if b else "no "
        print(f"{k:>3}  {yn(f.is_mtl)}  {yn(f.is_bl)}  {yn(f.is_mv)}  {yn(f.is_godel)}    "
              f"{yn(props)}    {w}")


if __name__ == "__main__":
    main()
