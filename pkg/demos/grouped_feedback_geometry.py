"""What the grouped, dilated conv feedback looks like for MiniVGG.

For every conv layer the backward path from its module's top error is a
1x1 grouped conv, a channel shuffle, a resize, then a dilated grouped conv.
This prints the dilation and kernel chosen for each pair and how grouping
divides the multiply count.

    python demos/grouped_feedback_geometry.py
"""
import numpy as np

from hdfa.feedback import (EpStrategy, backward_kernel_size, compute_dilation,
                           conv_pair_feedback, receptive_field)
from hdfa.network import mini_vgg

plan = mini_vgg()
print("pair        RF  dilation  kernel")
for start, top in zip(plan.module_boundaries, plan.module_boundaries[1:]):
    for dst in range(max(start, 1), top):
        if plan.layers[dst].kind != "conv":
            continue
        d = compute_dilation(plan, top, dst)
        rf = receptive_field(plan, top, dst)
        print(f"{top}->{dst}  {rf:7d}  {d:8d}  {backward_kernel_size(plan, top, dst, d):6d}")

print("\nweights in the 4 -> 3 feedback path:")
for G in (1, 2, 4, 8):
    kind = "DFA_conv" if G == 1 else "DFA_groupconv"
    fw = conv_pair_feedback(plan, 4, 3, EpStrategy(kind, groups=G), np.random.default_rng(0))
    n = sum(np.asarray(a).size for a in fw.arrays.values())
    print(f"  G={G}: {n:6d}")
