#!/usr/bin/env python3
"""Run a small experiment grid and render the report tables.

One full pipeline run per (split method, series length, ablation) cell with
shared seeds. Cells are resumable: re-running skips finished cells, and a
failed cell records its error without stopping the rest. The tables mirror
the usual reporting layout (BLEU-1..4 | ROUGE-1 F/P/R, in percent).
"""

from pathlib import Path

import unicorn as U
from unicorn.evaluation import EvalReport, render_metric_table
from unicorn.training import PhaseConfig

OUT = Path(__file__).parent / "output" / "grid"


def main():
    spec = U.SyntheticSpec(n_subjects=2, n_stimuli=2, frames_per_stimulus=60, vocab_size=25)
    metas = U.generate_synthetic_corpus(spec, seed=1, out_dir=OUT / "corpus")

    phase_configs = {
        1: PhaseConfig(1, learning_rate=1e-3, batch_size=8, epochs=15),
        2: PhaseConfig(2, learning_rate=2e-3, batch_size=16, epochs=15),
        3: PhaseConfig(3, learning_rate=2e-3, batch_size=16, epochs=20),
    }
    results = U.run_experiment_grid(
        metas,
        OUT / "corpus",
        OUT,
        methods=["random_time", "consecutive_time"],
        series_lengths=[3, 5],
        ablations=["full", "wo_p1p2"],
        model_config={"signal": "fmri"},
        phase_configs=phase_configs,
        seed=0,
        eval_subset="test",
    )
    print(f"{len(results)} grid cells under {OUT} (re-run me: finished cells are skipped)\n")

    reports = [EvalReport.load(path) for path in results.values()]
    for ablation in ("full", "wo_p1p2"):
        rows = [r for r in reports if r.config["ablation"] == ablation]
        for r in rows:
            r.label = f"{r.config['method']} T={r.config['series_length']}"
        rows.sort(key=lambda r: r.label)
        print(f"[{ablation}] test-set scores")
        print(render_metric_table(rows, row_header="Cell"))
        print()


if __name__ == "__main__":
    main()
