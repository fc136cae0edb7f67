"""Executable semantics and proof checking for paraconsistent propositional logics.

Engines: LP-> and its #f/#b enrichments, K3->, RM3, BL-> (``matrix``),
da Costa's Cn (``dacosta``), Jaskowski's D2 (``discussive``), annotated
P-tau (``annotated``) and the deontic DLP->,F (``deontic``).  ``hilbert``
checks proof scripts, ``translate`` holds the inter-logic definitions and
``props`` the seeded property suites.
"""

from .annotated import FOUR, Lattice, load_lattice, ptau_consequence, ptau_eval
from .dacosta import classical_neg_cn, cn_consequence
from .deontic import KripkeStructure3, deontic_inconsistency_formula, dlp_consequence_bounded, dlp_eval
from .discussive import DiscussiveStructure, d2_consequence, d2_eval
from .engines import check
from .formula import expand_abbreviation, parse_formula, render, subformula_closure
from .hilbert import load_proof, parse_proof, schema_table, verify_proof
from .matrix import TV, build_matrix, classify_function, consequence, synthesize_formula, truth_table
from .schema import match_schema

__version__ = "0.1.0"

__all__ = [
    "FOUR", "Lattice", "load_lattice", "ptau_consequence", "ptau_eval",
    "classical_neg_cn", "cn_consequence",
    "KripkeStructure3", "deontic_inconsistency_formula", "dlp_consequence_bounded", "dlp_eval",
    "DiscussiveStructure", "d2_consequence", "d2_eval",
    "check",
    "expand_abbreviation", "parse_formula", "render", "subformula_closure",
    "load_proof", "parse_proof", "schema_table", "verify_proof",
    "TV", "build_matrix", "classify_function", "consequence", "synthesize_formula", "truth_table",
    "match_schema",
]
