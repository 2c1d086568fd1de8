"""Clique covers of graphs: greedy partitions, constructive covers and exact checks."""

from .bounds import (appendix_a_g, appendix_b_h, erdos_h, k4_turan_identities, moon_moser_holds,
                     proof_chain_check)
from .certificate import CoverCertificate, validate_cover
from .cover import (ThreeCover, TripleHypergraph, build_3cover, build_4cover, build_triple_hypergraph,
                    find_k4_triples, refine_3cover)
from .exact import BudgetExceeded, cover_lower_bound, exact_min_cover
from .graph import (Graph, common_neighbors_in, count_cliques, enumerate_cliques, is_turan, max_clique,
                    read_edge_list, turan_graph)
from .partition import CliquePartition, greedy_partition, verify_partition
from .sequence import (GreedySequence, adjustment_bound, apply_operation, closed_form_f, key_lemma_bound,
                       reduce, sequence_of, value_f)

__version__ = "0.1.0"
