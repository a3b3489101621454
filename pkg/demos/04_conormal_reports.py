"""Conormal root sets, smoothness, and the Schubert closure predicate.

Run with: python demos/04_conormal_reports.py
"""

import json

from cograss import build_context, closure_is_schubert, conormal_roots
from cograss.conormal import report_to_dict
from cograss.weyl import enumerate_min_reps

ctx = build_context("A", 3, 2)
group = ctx.group

# Sweep the whole quotient: six minimal representatives for A3, d=2.
reps = sorted(enumerate_min_reps(group, ctx.finite_nodes, ctx.levi_nodes),
              key=lambda w: (w.length(), w.reduced_word()))
print("w (word)     l  |R|  closure is Schubert")
for w in reps:
    report = closure_is_schubert(ctx, w)
    word = w.word_str() or "e"
    print(f"{word:<12} {w.length()}   {len(report.roots)}    "
          f"{report.closure_is_schubert}")

# The full JSON report for one element, fibre included.
w = reps[-1]
report = closure_is_schubert(ctx, w, with_fibre=True, full_fibre=True)
print("\nJSON report for the top representative:")
print(json.dumps(report_to_dict(ctx, report), indent=2, sort_keys=True))

# The identity's conormal directions fill the whole cotangent space.
print("\n|R(e)| == dim G/P:", len(conormal_roots(ctx, group.identity)) == ctx.dim_quotient)
