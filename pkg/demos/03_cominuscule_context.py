"""The validated bundle attached to a cominuscule node.

Run with: python demos/03_cominuscule_context.py
"""

from cograss import build_context, cominuscule_nodes

# Which nodes are cominuscule (coefficient 1 in delta)?
for series, rank in [("A", 4), ("B", 4), ("C", 4), ("D", 5), ("E", 6), ("E", 7)]:
    print(f"{series}{rank}: cominuscule nodes {cominuscule_nodes(series, rank)}")

# Build the full context for the Lagrangian-style type-D example.
ctx = build_context("D", 5, 5)
print("\nD5 with node 5 marked:")
print("  Levi nodes:", ctx.levi_nodes)
print("  diagram involution:", ctx.involution, " (node i -> 5 - i)")
print("  dim G/P:", ctx.dim_quotient)
print("  translation coweight q:", ctx.translation_coroot)
print("  l(tau_q) = 2 dim G/P:", ctx.translation_element.length())

# The involution conjugates Weyl elements letter by letter.
w0_twisted = ctx.iota_elem(ctx.w0)
print("  iota(w0) == longest affine Levi element:", w0_twisted == ctx.w_affine_levi)

# The two longest-root identities that anchor the whole setup.
print("  w_J(alpha_d) == theta_0:",
      ctx.w_levi.act(ctx.simple_root(5)) == ctx.highest_root_finite)
print("  w_J(alpha_0) == theta_d:",
      ctx.w_levi.act(ctx.simple_root(0)) == ctx.highest_root_affine_levi)
