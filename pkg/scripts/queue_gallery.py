#!/usr/bin/env python3
"""Show every multiline queue projecting to a given state, with its class
assignment and weight monomial.

Usage: python scripts/queue_gallery.py --state 1,3,2 [--limit K]
"""

import argparse

from ringtasep import mlq, perms
from ringtasep.poly import Poly


def render(pq):
    q = pq.queue
    lines = []
    for r in range(1, q.num_rows + 1):
        cells = []
        for p in range(q.n):
            c = pq.class_at(r, p)
            cells.append(str(c) if c is not None else ".")
        lines.append("".join(cells))
    return "\n".join(lines)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--state", required=True,
                    help="comma-separated one-line notation")
    ap.add_argument("--limit", type=int, default=0,
                    help="stop after this many queues (0 = no limit)")
    args = ap.parse_args()
    w = perms.parse_perm(args.state)
    n = len(w)

    shown = 0
    total = Poly.zero(n)
    for q in mlq.iter_queues(n):
        pq = mlq.bully_project(q)
        if mlq.queue_type(pq) != w:
            continue
        weight = Poly.monomial(n, mlq.queue_weight(pq))
        total = total + weight
        shown += 1
        if not args.limit or shown <= args.limit:
            print(render(pq))
            print(f"weight: {weight.to_text()}")
            print()
    print(f"{shown} queues of type {perms.perm_str(w)}")
    print(f"sum of weights: {total.to_text()}")


if __name__ == "__main__":
    main()
