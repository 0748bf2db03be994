"""Exact counting of connected induced subgraphs on small graphs.

Bitset graphs up to 32 vertices, exact subset-sweep counting, extremal
family builders with closed-form evaluators, checkable transformation
lemmas, and isomorphism-free enumeration with exhaustive verification.
"""

from .counting import closed_form, count_cis, count_cis_rooted, count_cis_rooted2
from .enumeration import (
    GraphClass,
    THEOREM_IDS,
    canonical_form,
    canonical_relabel,
    class_members,
    connected_count,
    count_class,
    enumerate_connected,
    extremal_search,
    open_problem_scan,
    verify_theorem,
)
from .errors import (
    BadClass,
    BadEdge,
    BadInstance,
    BadOrder,
    CisGraphError,
    EmptyClass,
    NotConnected,
    OrderOutOfRange,
    ParseError,
    SameVertex,
    TrivialGraph,
    Unsatisfiable,
)
from .families import FamilySpec, build_family, parse_family_spec
from .graph import (
    MAX_VERTICES,
    Graph,
    from_edge_list,
    from_graph6,
    parse_edge_list,
    to_graph6,
)
from .transforms import (
    LEMMA_IDS,
    LemmaInstance,
    LemmaReport,
    apply,
    check,
    random_instance,
    validate_instance,
)

__version__ = "0.1.0"
