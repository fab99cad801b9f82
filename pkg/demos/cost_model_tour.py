"""How much memory and arithmetic does the error-propagation stage cost?

Walks through the analytic cost model: the word-level RNN baseline, what
replacing back-propagation with fixed random projections does to it, how a
small share of BP steps plus binarized sparse feedback pulls memory back
down, and the same story for CIFAR-scale CNNs.

    python demos/cost_model_tour.py
"""
from hdfa import cost
from hdfa.network import rnn_plan

net = cost.rnn_descriptor()
print(f"RNN: vocab {net.vocab}, hidden {net.hidden}, T={net.time_steps}\n")

bp, dfa, rev = cost.cost_bp(net), cost.cost_dfa_original(net), cost.cost_dfa_revised(net)
for name, rep in [("BP", bp), ("DFA", dfa), ("DFA, triangular", rev)]:
    print(f"  {name:16s} {rep.memory_mb:9.2f} MB  {rep.gop:6.2f} GOP")

# A projection per time step from a 33k-wide output is what makes plain DFA
# expensive; the triangular layout keeps one output projection and reuses it.
print(f"\n  DFA / BP memory: {dfa.memory_mb / bp.memory_mb:.0f}x")

print("\nMixing in BP steps with binarized sparse feedback (memory, MB):")
print("   p      0%     80%     95%     98% sparsity")
for p in (0.1, 0.2):
    cells = [cost.cost_hybrid(net, p, sparsity=s, binary=True).memory_mb
             for s in cost.RNN_SPARSITIES]
    print(f"  {p:.1f}" + "".join(f"{m:8.2f}" for m in cells))

print("\nEP latency with one worker per time step:")
for T in (1, 8, 35):
    print(f"  T={T:2d}: {cost.ep_speedup(rnn_plan(100, 16, T)):.0f}x shorter than BPTT")

print("\nCNN table (MiB, GOP):")
for strategy, groups, name, mib, gop in cost.cnn_cost_table():
    print(f"  {name:6s} {strategy:18s} G={groups:2s} {mib:8.2f} {gop:7.2f}")

print("\nConv feedback vs direct dense projection, 3x3 kernels, 64 channels:")
for classes in (10, 100, 1000):
    print(f"  {classes:5d} classes: {cost.feedback_ratio(32, 32, 3, classes, 64):8.1f}x fewer weights")
