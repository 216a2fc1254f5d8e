#!/usr/bin/env python3
"""The same pipeline on word-level EEG features instead of fMRI volumes.

Only the snapshot encoder/decoder pair changes: 840-dim word features are
split into 8 patches of 105, a small transformer mixes the patches, and an
affine head produces the snapshot embedding. Series encoding, projection,
and text decoding are untouched.
"""

import unicorn as U
from unicorn.training import (
    WindowDataset,
    desk_phase_config,
    run_phases,
    teacher_forced_accuracy,
)


def main():
    spec = U.SyntheticEegSpec(n_subjects=2, n_sentences=10, words_per_sentence=10,
                              vocab_size=25)
    sentences = U.generate_synthetic_eeg_corpus(spec, seed=4)
    dataset = WindowDataset.from_eeg_sentences(sentences, series_length=10)
    print(f"{len(dataset)} EEG word windows of length 10 "
          f"({dataset.frames.shape[2]}-dim features)")

    vocab = U.Vocabulary.from_corpus(t for toks in dataset.token_lists for t in toks)
    bundle = U.build_bundle({"signal": "eeg"}, vocab, seed=0)
    print(f"patch encoder: {bundle.er.n_patches} patches x {bundle.er.patch_size} features"
          f" -> {bundle.config['snap_dim']}-dim embedding")
    print(f"encoder params {bundle.er.parameter_count():,}, "
          f"decoder params {bundle.dr.parameter_count():,}")

    configs = {
        1: desk_phase_config(1, epochs=40, batch_size=16),
        2: desk_phase_config(2, epochs=40),
        3: desk_phase_config(3, epochs=40),
    }
    configs[2].series_length_phase2 = 10  # EEG reconstructs longer series
    run_phases(bundle, dataset, configs)

    acc = teacher_forced_accuracy(bundle, dataset)
    report = U.evaluate(bundle, dataset, "teacher_forced", label="eeg overfit")
    print(f"\nteacher-forced accuracy {acc:.1%}, BLEU-1 {100 * report.bleu[1]:.1f}%")
    gold = dataset.token_lists[0]
    _, predicted = bundle.decode_window(dataset.frames[0], gold_tokens=list(gold))
    print("T:", " ".join(gold))
    print("P:", " ".join(predicted))


if __name__ == "__main__":
    main()
