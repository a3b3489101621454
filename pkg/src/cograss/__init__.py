"""Exact combinatorics of conormal varieties in cominuscule Grassmannians.

Pure-Python, integer/rational arithmetic only.  The layers are:

- ``rootsys``: Dynkin diagrams, roots, the invariant bilinear form;
- ``weyl``: finite and affine Weyl group arithmetic (length, Bruhat
  order, Demazure product, minimal coset representatives);
- ``cominuscule``: the validated context for one cominuscule node
  (diagram involution, longest elements, the translation element);
- ``conormal``: conormal root sets, smoothness criteria, the Schubert
  closure predicate and the fibre decomposition;
- ``detvar``: the type-D signed permutation calculus and the conormal
  fibre of skew-symmetric determinantal loci;
- ``checks`` / ``cli``: lemma verification sweeps and the command line.
"""

from .rootsys import (
    DynkinDiagram,
    build_diagram,
    fundamental_coweight,
    highest_root,
    inner_form,
    positive_roots,
)
from .weyl import (
    AffineWeylElement,
    WeylGroup,
    bruhat_leq,
    demazure,
    enumerate_min_reps,
    longest_element,
    min_rep,
    weyl_order,
)
from .cominuscule import CominusculeContext, build_context, cominuscule_nodes
from .conormal import (
    ConormalReport,
    SmoothnessReport,
    closure_is_schubert,
    conormal_roots,
    fibre_maximal,
    is_smooth,
    nilpotent_set_check,
    shift_check,
    twisted_dual,
)
from .detvar import (
    SignedPermutation,
    check_relations,
    chain_perm,
    fibre_rank,
    perm_to_word,
    skew_rank_element,
    word_to_perm,
)
from .checks import VerificationReport, run_suite

__all__ = [
    "DynkinDiagram", "build_diagram", "positive_roots", "highest_root",
    "inner_form", "fundamental_coweight",
    "AffineWeylElement", "WeylGroup", "bruhat_leq", "demazure",
    "enumerate_min_reps", "longest_element", "min_rep", "weyl_order",
    "CominusculeContext", "build_context", "cominuscule_nodes",
    "ConormalReport", "SmoothnessReport", "closure_is_schubert",
    "conormal_roots", "fibre_maximal", "is_smooth", "nilpotent_set_check",
    "shift_check", "twisted_dual",
    "SignedPermutation", "check_relations", "chain_perm", "fibre_rank",
    "perm_to_word", "skew_rank_element", "word_to_perm",
    "VerificationReport", "run_suite",
]

__version__ = "0.1.0"
