"""Compare the character engine with the closed formula over all small dominant weights.

    python3 scripts/engine_sweep.py --shapes 2x2 3x2 --bound 2
"""
import argparse
import time

from glsdim.charformula import engine_dimension
from glsdim.superdim import superdimension
from glsdim.verify import dominant_weights


def parse_shape(text):
    m, n = (int(x) for x in text.lower().split("x"))
    return m, n


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--shapes", nargs="+", type=parse_shape,
                   default=[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
    p.add_argument("--bound", type=int, default=2, help="entries range over [-bound, bound]")
    p.add_argument("--ordinary", action="store_true", help="also evaluate ch at 0 (the dimension)")
    args = p.parse_args()

    print(f"{'shape':>7} {'weights':>8} {'maximal':>9} {'nonzero':>8} {'mismatch':>9} {'seconds':>8}")
    for m, n in args.shapes:
        start = time.perf_counter()
        total = maximal = nonzero = bad = 0
        for w in dominant_weights(m, n, args.bound):
            rep = superdimension(w)
            got = abs(engine_dimension(w))
            total += 1
            maximal += rep.maximal
            nonzero += got != 0
            if got != rep.sdim_abs:
                bad += 1
                print(f"  mismatch at ({w}): engine {got}, formula {rep.sdim_abs}")
            if args.ordinary:
                engine_dimension(w, kind="ordinary")
        elapsed = time.perf_counter() - start
        print(f"{f'({m}|{n})':>7} {total:>8} {maximal:>9} {nonzero:>8} {bad:>9} {elapsed:>8.2f}")


if __name__ == "__main__":
    main()
