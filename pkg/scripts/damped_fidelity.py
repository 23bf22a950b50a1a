"""Averaged fidelity after damping, with no recovery, versus eta for D in {2, 6, 18, 30}.

    python scripts/damped_fidelity.py [--out results/damped.csv] [--plot results/damped.png]
"""

import argparse
from pathlib import Path

from quditcode.channels import ChannelKind
from quditcode.cli import emit_csv
from quditcode.fidelity import default_eta_grid, run_sweep

DIMS = (2, 6, 18, 30)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/damped.csv")
    ap.add_argument("--plot", default=None, help="optional PNG path (needs matplotlib)")
    args = ap.parse_args()

    records = run_sweep(list(ChannelKind), DIMS, default_eta_grid(), include_repetition=False)
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    emit_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")

    if args.plot:
        import matplotlib.pyplot as plt

        fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
        for ax, kind in zip(axes, ChannelKind):
            for D in DIMS:
                rows = [r for r in records if r.channel_kind is kind and r.code_label == f"qudit-D{D}"]
                ax.plot([r.eta for r in rows], [r.f_damp for r in rows], label=f"D = {D}")
            ax.set_title(kind.value)
            ax.set_xlabel("eta")
        axes[0].set_ylabel("average fidelity, damped")
        axes[0].legend()
        fig.tight_layout()
        fig.savefig(args.plot, dpi=150)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
