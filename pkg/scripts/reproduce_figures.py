#!/usr/bin/env python3
"""Write the error curves for the integral, average-integral and trapezoidal
normalizers as CSV files (one per figure) and print the worst case of each.

    python scripts/reproduce_figures.py --outdir figures/

Plotting is left to whatever tool reads the CSVs; pass --plot to draw them
with matplotlib if it is installed.
"""
import argparse
import csv
import os

from trunczeta import AVERAGE_INTEGRAL, INTEGRAL, SweepGrid, run_sweep, trapezoidal
from trunczeta.analysis import summarize

N_VALUES = (100, 1000, 10000)
TRAP_KS = (2, 3, 5, 10)


def write_csv(path, records):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["method", "k", "n", "alpha", "epsilon"])
        for r in records:
            w.writerow([r.method.name, "" if r.k is None else r.k, r.n, repr(r.alpha),
                        format(r.epsilon, ".17g")])


def plot(path, records, title):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    curves = {}
    for r in records:
        curves.setdefault((str(r.method), r.n), []).append((r.alpha, abs(r.epsilon)))
    for (label, n), pts in curves.items():
        xs, ys = zip(*pts)
        ax.plot(xs, ys, label=f"{label}, n={n}")
    ax.set_xlabel("alpha")
    ax.set_ylabel("|relative error|")
    ax.set_yscale("log")
    ax.set_title(title)
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--alpha-step", type=float, default=0.01)
    ap.add_argument("--plot", action="store_true")
    args = ap.parse_args()
    os.makedirs(args.outdir, exist_ok=True)

    figures = [("fig1_integral", "integral approximation", [INTEGRAL], N_VALUES)]
    figures.append(("fig2_avg_integral", "average integral approximation", [AVERAGE_INTEGRAL], N_VALUES))
    for n in N_VALUES:
        figures.append((f"fig_trap_n{n}", f"trapezoidal rule, n={n}",
                        [trapezoidal(k) for k in TRAP_KS], (n,)))

    for name, title, methods, ns in figures:
        grid = SweepGrid(alpha_step=args.alpha_step, n_values=ns, methods=tuple(methods))
        records = run_sweep(grid)
        write_csv(os.path.join(args.outdir, name + ".csv"), records)
        if args.plot:
            plot(os.path.join(args.outdir, name + ".png"), records, title)
        for label, s in summarize(records).items():
            print(f"{name:20s} {label:18s} max|eps|={s['max_abs_epsilon']:.4g} "
                  f"(alpha={s['alpha']}, n={s['n']})")


if __name__ == "__main__":
    main()
