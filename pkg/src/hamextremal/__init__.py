"""Exact tools for extremal questions about hamiltonian and traceable graphs."""

from .canon import CanonicalForm, automorphism_orbits, canonical_form, canonical_relabeling, is_isomorphic
from .constructions import FAMILIES, DomainError, FamilySpec, cone
from .formulas import FormulaDomainError, FormulaRegime, f, g_formula, g_maximizers, g_via_max, ore_bound, phi
from .generation import GenFilter, ScaleError, count_graphs, generate_all
from .graph import CapacityError, DegreeSequence, Graph, complement, degree_sequence, disjoint_union, join
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .hamiltonicity import (
    ConditionNotApplicable,
    HamiltonicityResult,
    chvatal_condition,
    chvatal_erdos_condition,
    dirac_condition,
    is_hamiltonian,
    is_traceable,
    ota_condition,
)
from .invariants import (
    bondy_connectivity_condition,
    connectivity,
    independence_number,
    min_degree_sum_independent,
    sigma_s,
)

__version__ = "0.1.0"
