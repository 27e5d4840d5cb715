"""Knot cobordism workbench: Gordon-Litherland signatures, pinch moves and
realizable (e, h) pairs for T(2,n) torus knots."""

from .band import Attachment, H2MoveSite
from .cobordism import (
    PinchCertificate,
    SurfaceLedger,
    apply_h2,
    base_ledger,
    boundary_connect_sum,
    cobordism_sigma,
    glue_pinch,
    make_certificate,
    mobius_summand,
    reverse_certificate,
    seifert_ledger,
    verify_certificate,
)
from .diagram import (
    UNKNOT,
    Diagram,
    braid_closure,
    emit_pd,
    faces,
    mirror,
    orient,
    parse_pd,
    table_diagram,
    torus_2n_diagram,
    writhe,
)
from .goeritz import (
    checkerboard,
    euler_from_signatures,
    goeritz_matrix,
    knot_signature,
    matrix_signature,
    sigma_from_euler,
)
from .identify import fingerprint, identify, kauffman_bracket, simplify
from .realizability import (
    PairQuery,
    PairStatus,
    Verdict,
    grid,
    minimal_points,
    stabilize_closure,
    status_allen,
    status_post,
)
from .search import SearchOptions, enumerate_sites, find_paper_certificates, pinch_search

__version__ = "0.1.0"

__all__ = [
    "Attachment",
    "H2MoveSite",
    "PinchCertificate",
    "SurfaceLedger",
    "apply_h2",
    "base_ledger",
    "boundary_connect_sum",
    "cobordism_sigma",
    "glue_pinch",
    "make_certificate",
    "mobius_summand",
    "reverse_certificate",
    "seifert_ledger",
    "verify_certificate",
    "UNKNOT",
    "Diagram",
    "braid_closure",
    "emit_pd",
    "faces",
    "mirror",
    "orient",
    "parse_pd",
    "table_diagram",
    "torus_2n_diagram",
    "writhe",
    "checkerboard",
    "euler_from_signatures",
    "goeritz_matrix",
    "knot_signature",
    "matrix_signature",
    "sigma_from_euler",
    "fingerprint",
    "identify",
    "kauffman_bracket",
    "simplify",
    "PairQuery",
    "PairStatus",
    "Verdict",
    "grid",
    "minimal_points",
    "stabilize_closure",
    "status_allen",
    "status_post",
    "SearchOptions",
    "enumerate_sites",
    "find_paper_certificates",
    "pinch_search",
]
