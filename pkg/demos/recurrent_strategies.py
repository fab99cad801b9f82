"""Next-word prediction with five ways of computing the recurrent errors.

A small vanilla RNN on the stand-in corpus (or Penn Treebank, if
HDFA_DATA_ROOT points at it). Compares BPTT, plain DFA, the triangular
feedback layout, its forward-weight initialisation, and a hybrid that takes
a BP step 20% of the time with binarized feedback otherwise.

Takes a few seconds.

    python demos/recurrent_strategies.py
"""
import tempfile

from hdfa.train import ExperimentConfig, run_experiment

base = ExperimentConfig(network="rnn", dataset="text", hidden=32, time_steps=8, subset_n=2000,
                        test_n=500, batch_size=20, epochs=5, lr=0.1)
tri = dict(strategy="DFA_rnn_triangular")
runs = {
    "BPTT": base,
    "DFA": base.replace(strategy="DFA_original"),
    "triangular": base.replace(**tri),
    "triangular + init": base.replace(bw_init=True, **tri),
    "hybrid p=0.2, binary": base.replace(optimizer="hdfa", bp_ratio=0.2, bw_init=True,
                                         binary=True, **tri),
}

with tempfile.TemporaryDirectory() as tmp:
    for i, (name, cfg) in enumerate(runs.items()):
        res = run_experiment(cfg.replace(out_dir=f"{tmp}/run{i}"))
        last = res.rows[-1]
        note = " (stand-in corpus)" if res.standin else ""
        print(f"{name:22s} train {last.train_acc:6.2f}%  test {last.test_acc:6.2f}%{note}")
