"""Print the worked V/W factorizations and the fifth/sixth-kind tables."""

from chebfactor import factor_variant, gen_XY, psi, verify
from chebfactor.render import to_plain

CASES = [("V", 12, +1), ("V", 12, -1), ("W", 12, +1), ("W", 12, -1), ("W", 11, +1)]


def main():
    for kind, n, s in CASES:
        f = factor_variant(kind, n, s)
        status = "ok" if verify(f).ok else "FAILED"
        print(f"{kind}_{n}(x) {'+' if s > 0 else '-'} 1 = {f}   [{status}]")
        for fac in f.factors:
            print(f"    Psi_{fac.d} = {to_plain(fac.psi.poly)}")
    print()
    for kind in "XY":
        for n in range(7):
            print(f"{kind}_{n}(x) = {to_plain(gen_XY(kind, n))}")
        print()
    for d in (11, 22):
        print(f"Psi_{d}(x) = {to_plain(psi(d).poly)}")


if __name__ == "__main__":
    main()
