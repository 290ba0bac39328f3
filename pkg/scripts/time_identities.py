"""Time the identity families of ``chebfactor verify-identities`` at larger n."""

import sys
import time

from chebfactor.cli import IDENTITY_FAMILIES


def main(n_max: int = 200):
    for name, check in IDENTITY_FAMILIES:
        start = time.perf_counter()
        bad = next((n for n in range(1, n_max + 1) if not check(n)), None)
        elapsed = time.perf_counter() - start
        print(f"{name:<22} n<={n_max:<5} {'ok' if bad is None else f'FAIL at n={bad}'}  {elapsed:6.2f}s")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 200)
