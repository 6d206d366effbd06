"""Berge paths and cycles in r-uniform hypergraphs."""
from .extract import Extraction, extract_long_cycle
from .extremal import (BlockTreePlan, ExtremalCertificate, Flavor, bound_value, certify_extremal,
                       generate_block_tree, theorem6_component_certify)
from .hypergraph import (BlockDecomposition, Hypergraph, HypergraphError, ShadowGraph, block_decomposition,
                         contract_set, cut_hyperedges, induced_sub, is_connected, parse_hypergraph, two_shadow)
from .injections import (DeficientSet, DenseTerminalSet, Injection, deficiency_delete, find_dense_terminal_set,
                         hall_injection)
from .kernels import BACKEND
from .lemmas import Mode, SaturatedSet, saturated_path, saturated_shadow_is_complete
from .search import (PairAssignment, SearchBudgetExceeded, find_berge_cycle_at_least, longest_berge_cycle,
                     longest_berge_path, sdr_assign)
from .witness import BergeCycle, BergePath, validate_berge_cycle, validate_berge_path

__version__ = "0.1.0"
