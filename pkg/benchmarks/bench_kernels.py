"""Compare the compiled and pure-Python term kernels.

Times the witness-ideal computation of the bundled quartic curve plus a
synthetic dense multiplication, once per available backend, and prints a
small table.  Run as: python3 benchmarks/bench_kernels.py
"""

import pathlib
import time

from hypercircle import kernel


def _build_quartic():
    from hypercircle.exprparse import build_problem, parse_curve_file
    here = pathlib.Path(__file__).resolve().parent.parent
    text = (here / "inputs" / "quartic.curve").read_text()
    return build_problem(parse_curve_file(text))


def bench_witness():
    from hypercircle.descent import witness_ideal
    phi, ext = _build_quartic()
    start = time.perf_counter()
    gens, _ = witness_ideal(phi, ext)
    elapsed = time.perf_counter() - start
    assert len(gens) == 3
    return elapsed


def bench_dense_mul():
    from fractions import Fraction

    from hypercircle.fields import QQ
    from hypercircle.mpoly import MultiPoly
    terms = {}
    for i in range(7):
        for j in range(7):
            for k in range(4):
                terms[(i, j, k)] = Fraction(i + 2 * j - k + 1, i + j + 1)
    p = MultiPoly(QQ, 3, terms)
    start = time.perf_counter()
    q = p * p * p
    elapsed = time.perf_counter() - start
    assert not q.is_zero()
    return elapsed


def main():
    rows = []
    for name in kernel.available_backends():
        kernel.set_backend(name)
        rows.append((name, bench_witness(), bench_dense_mul()))
    print(f"{'backend':<10} {'witness ideal':>14} {'dense product':>14}")
    for name, tw, tm in rows:
        print(f"{name:<10} {tw:>13.4f}s {tm:>13.4f}s")
    if len(rows) == 2:
        base = dict((r[0], r) for r in rows)
        if "python" in base and "cython" in base:
            sw = base["python"][1] / base["cython"][1]
            sm = base["python"][2] / base["cython"][2]
            print(f"cython speedup: witness x{sw:.2f}, product x{sm:.2f}")


if __name__ == "__main__":
    main()
