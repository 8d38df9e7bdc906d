"""Integer flows, Z3-connectivity and triangle-tree certificates.

Graphs travel as plain dicts matching the JSON interchange schema:
{"vertices": [...], "edges": [[id, u, v], ...]}.
"""

from _triflow import (  # noqa: F401
    analyze,
    certify_s3,
    decide_3nzf,
    decide_z3,
    dot,
    find_spanning_tritree,
    fingerprint,
    flow_index_lt3,
    gen_book,
    gen_bullgrown,
    gen_crystal,
    gen_double2tree,
    gen_fan,
    gen_k4,
    gen_random2tree,
    gen_wheel,
    has_nzf,
    isomorphic,
    s3_member,
    triangularly_connected,
    verify_certificate,
    verify_z3proof,
    z3_connected,
    z3_prove,
)

__all__ = [
    "analyze",
    "certify_s3",
    "decide_3nzf",
    "decide_z3",
    "dot",
    "find_spanning_tritree",
    "fingerprint",
    "flow_index_lt3",
    "gen_book",
    "gen_bullgrown",
    "gen_crystal",
    "gen_double2tree",
    "gen_fan",
    "gen_k4",
    "gen_random2tree",
    "gen_wheel",
    "has_nzf",
    "isomorphic",
    "s3_member",
    "triangularly_connected",
    "verify_certificate",
    "verify_z3proof",
    "z3_connected",
    "z3_prove",
]
