"""Which kind_n +/- 1 split completely into psi_d factors?

    python scripts/scan_splittings.py --kinds X Y --n-max 40
"""

import argparse
import time

from chebfactor.factor import psi_split, target


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kinds", nargs="+", default=["X", "Y"], choices=["U", "V", "W", "X", "Y"])
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--show-all", action="store_true", help="print incomplete rows too")
    args = ap.parse_args()

    start = time.perf_counter()
    for kind in args.kinds:
        for variant in ("plus", "minus"):
            hits = []
            for n in range(1, args.n_max + 1):
                p = target(kind, n, variant)
                if p.is_zero():
                    continue
                split = psi_split(p)
                if split.complete or args.show_all:
                    parts = " ".join(
                        f"Psi_{d}" + (f"^{k}" if k > 1 else "")
                        for d, k in zip(split.divisors, split.multiplicities) if k
                    )
                    print(f"{kind}_{n} {'+' if variant == 'plus' else '-'} 1: "
                          f"{'complete' if split.complete else 'partial '}  {parts or '-'}")
                if split.complete:
                    hits.append(n)
            print(f"# {kind} {variant}: complete for n in {hits}\n")
    print(f"# {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
