"""Affine Weyl group arithmetic: translations, length, Bruhat, Demazure.

Run with: python demos/02_affine_weyl_arithmetic.py
"""

from cograss import build_diagram, bruhat_leq, demazure, longest_element, min_rep
from cograss.weyl import WeylGroup, theta_coroot

group = WeylGroup(build_diagram("A", 2, affine=True))
delta = group.diagram.delta

# A pure translation by the negated highest coroot.
tau = group.from_translation(tuple(-x for x in theta_coroot(group.finite_diagram)))
print("translation by -theta^vee:")
print("  reduced word:", tau.reduced_word())
print("  length:", tau.length(), " support:", sorted(tau.support()))
print("  fixes delta:", tau.act(delta) == delta)

# Its semidirect pair recovers the coweight exactly.
finite_part, coweight = tau.semidirect_pair()
print("  translation coweight:", coweight)

# tau_q(alpha) = alpha - <alpha, q> delta on a finite simple root.
a1 = group.diagram.simple_root(1)
print("  tau(alpha_1) =", tau.act(a1))

# Length is the number of descent strips; words round-trip exactly.
w = group.from_word((0, 1, 2, 0, 1))
print("\nw = s0 s1 s2 s0 s1 has length", w.length(), "and word", w.reduced_word())
print("w^{-1} w = identity:", (w.inverse() * w).is_identity())

# Minimal representatives and the Bruhat order.
finite_nodes = (1, 2)
rep = min_rep(w, finite_nodes)
print("minimal representative over the finite nodes:", rep.reduced_word())
print("rep <= w in Bruhat order:", bruhat_leq(rep, w))

# The Demazure product absorbs letters that would shorten the result.
w0 = longest_element(group, finite_nodes)
print("\nw0 * w0 (Demazure) == w0:", demazure(w0, w0) == w0)
print("l(w0 . w0) in the plain product:", (w0 * w0).length())
