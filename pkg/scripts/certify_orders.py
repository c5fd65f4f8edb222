"""Certify |G| = n! for a range of degrees and print one line per degree.

    python3 scripts/certify_orders.py 6 9 --method order
    python3 scripts/certify_orders.py 6 16 --method coset
"""

import argparse
import time

from zappatic.symverify import presentation_for, verify
from zappatic.todd_coxeter import DEFAULT_MAX_COSETS


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("lo", type=int)
    ap.add_argument("hi", type=int)
    ap.add_argument("--method", choices=["order", "coset"], default="order")
    ap.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")
    ap.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    args = ap.parse_args()
    for n in range(args.lo, args.hi + 1):
        t = time.perf_counter()
        v = verify(presentation_for(n), args.method, args.max_cosets, args.strategy)
        enum = v.enumeration
        print(f"n={n:<3} {v.certificate.value:<12} order={v.order} "
              f"max_live={enum.max_live if enum else '-'} "
              f"defined={enum.total_defined if enum else '-'} "
              f"{time.perf_counter() - t:.1f}s", flush=True)


if __name__ == "__main__":
    main()
