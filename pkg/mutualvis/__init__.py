from .graph import (Graph, VertexSet, build_complement, build_complete,
                    build_cycle, build_disjoint_union, build_hoffman_singleton,
                    build_line_graph, build_moore_graph, build_petersen,
                    common_neighbors)
from .solver import (max_dissociation, max_induced_matching, mu_exact,
                     verify_certificate)
from .visibility import (analyze_set, is_mv_set, is_mv_set_diam2,
                         is_mv_set_dissociation, is_mv_set_general,
                         visibility_polynomial)
