#!/usr/bin/env python3
"""Generate the bundled table of Riemann zeta zero ordinates.

Writes the imaginary parts of the first N non-trivial zeros (one decimal
per line, ascending) to src/spectral_forge/data/zeta_zeros_10k.txt.
Zeros are computed with mpmath.zetazero, which locates and verifies each
zero individually, so the table is ordering-safe by construction.

This is an offline build tool: the table ships with the package and the
library never regenerates it at runtime.
"""

import argparse
import multiprocessing as mp_proc
from pathlib import Path

import mpmath as mp

OUT = Path(__file__).resolve().parents[1] / "src" / "spectral_forge" / "data" / "zeta_zeros_10k.txt"


def _zero(n: int) -> str:
    mp.mp.dps = 20
    t = mp.zetazero(n).imag
    return mp.nstr(t, 17, strip_zeros=False)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=10001)
    ap.add_argument("--workers", type=int, default=mp_proc.cpu_count())
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()

    with mp_proc.Pool(args.workers) as pool:
        zeros = pool.map(_zero, range(1, args.count + 1), chunksize=50)

    vals = [float(z) for z in zeros]
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise SystemExit("generated table is not strictly increasing")

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(zeros) + "\n")
    print(f"wrote {len(zeros)} zeros to {args.out}")


if __name__ == "__main__":
    main()
