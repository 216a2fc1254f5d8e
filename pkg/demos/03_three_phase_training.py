#!/usr/bin/env python3
"""Train the full pipeline: snapshot reconstruction, series reconstruction,
and text decoding, then checkpoint the result for the decoding demo.

Phase 1 fits the volume autoencoder (MAE). Phase 2 trains the series
transformer through the frozen snapshot decoder (MAE). Phase 3 swaps in the
text decoder and trains with teacher-forced cross-entropy, fine-tuning the
encoders. Losses are logged per epoch to a JSONL metrics file.
"""

import json
from pathlib import Path

import unicorn as U
from unicorn.training import MetricsLog, WindowDataset, desk_phase_config, run_phases

OUT = Path(__file__).parent / "output" / "training"


def spark(values, width=40):
    """Crude text sparkline for a loss curve."""
    if len(values) > width:
        values = values[:: max(1, len(values) // width)]
    lo, hi = min(values), max(values)
    marks = "▁▂▃▄▅▆▇"
    span = (hi - lo) or 1.0
    return "".join(marks[min(6, int(6 * (v - lo) / span))] for v in values)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    spec = U.SyntheticSpec(n_subjects=2, n_stimuli=1, frames_per_stimulus=80, vocab_size=30)
    metas = U.generate_synthetic_corpus(spec, seed=11, out_dir=OUT / "corpus")
    windows = []
    for meta in metas:
        alignment = U.align_words_to_frames(meta)
        windows.extend(U.build_windows(meta, alignment, 5, root=OUT / "corpus"))
    dataset = WindowDataset.from_windows(windows)
    vocab = U.Vocabulary.from_corpus(t for toks in dataset.token_lists for t in toks)
    print(f"{len(dataset)} windows of 5 frames, vocabulary {len(vocab)} tokens")

    bundle = U.build_bundle({"signal": "fmri"}, vocab, seed=0, ablation="full")
    print(f"snapshot encoder: {bundle.er.parameter_count():,} params; "
          f"decoder: {bundle.dr.parameter_count():,} (deliberately smaller)")

    log = MetricsLog(OUT / "metrics.jsonl")
    configs = {
        1: desk_phase_config(1, epochs=60),
        2: desk_phase_config(2, epochs=60),
        3: desk_phase_config(3, epochs=28),
    }
    run_phases(bundle, dataset, configs, log=log, checkpoint_dir=OUT)

    by_phase = {}
    for rec in log.records:
        if rec["split"] == "train":
            by_phase.setdefault(rec["phase"], []).append(rec["loss"])
    for phase, losses in sorted(by_phase.items()):
        print(f"phase {phase}: {losses[0]:.4f} -> {losses[-1]:.4f}  {spark(losses)}")

    from unicorn.training import teacher_forced_accuracy

    acc = teacher_forced_accuracy(bundle, dataset)
    print(f"\nteacher-forced token accuracy on the training windows: {acc:.1%}")
    print(f"checkpoints + metrics under {OUT}")
    print("first metrics line:", json.dumps(log.records[0]))


if __name__ == "__main__":
    main()
