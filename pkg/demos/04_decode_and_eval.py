#!/usr/bin/env python3
"""Decode brain windows back to text and score them with BLEU / ROUGE-1.

Loads the checkpoint written by 03_three_phase_training.py (run that first,
or this script trains it). Shows target/prediction pairs in T:/P: form,
compares teacher-forced, greedy, and beam decoding, and renders the metric
table layout used throughout the reports.
"""

import subprocess
import sys
from pathlib import Path

import unicorn as U
from unicorn.evaluation import render_case_lines, render_metric_table
from unicorn.training import WindowDataset

TRAIN_OUT = Path(__file__).parent / "output" / "training"


def main():
    ckpt = TRAIN_OUT / "checkpoint_phase3.bin"
    if not ckpt.exists():
        print("no checkpoint yet; running 03_three_phase_training.py first\n")
        subprocess.run([sys.executable, str(Path(__file__).parent / "03_three_phase_training.py")],
                       check=True)
    bundle, meta, _ = U.load_bundle(ckpt)
    print(f"loaded bundle: phases done {meta['phases_done']}")

    metas = U.read_manifest(TRAIN_OUT / "corpus" / "manifest.jsonl")
    windows = []
    for m in metas:
        alignment = U.align_words_to_frames(m)
        windows.extend(U.build_windows(m, alignment, 5, root=TRAIN_OUT / "corpus"))
    dataset = WindowDataset.from_windows(windows)

    reports = []
    for mode in ("teacher_forced", "greedy", "beam"):
        report = U.evaluate(bundle, dataset, mode, label=mode, beam_width=4)
        reports.append(report)
    print("\n" + render_metric_table(reports, row_header="Decode mode"))

    print("\ncases (teacher-forced):")
    for line in render_case_lines(reports[0], limit=3):
        print(line)
    print("\ncases (greedy, free-running):")
    for line in render_case_lines(reports[1], limit=3):
        print(line)


if __name__ == "__main__":
    main()
