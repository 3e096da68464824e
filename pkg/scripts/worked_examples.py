"""Table of |sdim| for the trivial, natural and adjoint highest weights, 1 <= n <= m <= N."""
import argparse

from glsdim.superdim import superdimension
from glsdim.weights import SuperWeight


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("-N", type=int, default=6)
    args = p.parse_args()

    print(f"{'gl(m|n)':>8} {'trivial':>8} {'natural':>8} {'adjoint':>8}  s_Lambda(adj)")
    for m in range(1, args.N + 1):
        for n in range(1, m + 1):
            trivial = SuperWeight.zero(m, n)
            natural = SuperWeight((1,) + (0,) * (m - 1), (0,) * n)
            adjoint = SuperWeight((1,) + (0,) * (m - 1), (0,) * (n - 1) + (1,))
            adj = superdimension(adjoint)
            row = [superdimension(w).sdim_abs for w in (trivial, natural)] + [adj.sdim_abs]
            print(f"{f'({m}|{n})':>8} " + " ".join(f"{v:>8}" for v in row) + f"  {adj.s_lambda}")


if __name__ == "__main__":
    main()
