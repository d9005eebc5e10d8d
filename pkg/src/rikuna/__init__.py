"""Generalized Rikuna polynomials: construction, indices, discriminants and
the dynamics of the Rikuna map over finite fields."""

__version__ = "0.1.0"

from .closed_forms import field_disc, ind3_closed, index_closed, indp_closed
from .core import RikunaMap, pq_pair, reduction_check, rikuna_z3
from .decomposition import PrimeSpec, decompose, irreducibility_certificate, observe_pattern, predict_pattern
from .dynamics import beta_map, build_graph, export_dot, graph_summary, nu_ell_pow, orbit_stats
from .finite_field import INF, FieldCtx, FqPoly, factor_fq, field_of_order, make_field
from .kernels import BACKEND
from .montes import index_p
from .zpoly import ZPoly

__all__ = [
    "BACKEND",
    "INF",
    "FieldCtx",
    "FqPoly",
    "PrimeSpec",
    "RikunaMap",
    "ZPoly",
    "beta_map",
    "build_graph",
    "decompose",
    "export_dot",
    "factor_fq",
    "field_disc",
    "field_of_order",
    "graph_summary",
    "ind3_closed",
    "index_closed",
    "index_p",
    "indp_closed",
    "irreducibility_certificate",
    "make_field",
    "nu_ell_pow",
    "observe_pattern",
    "orbit_stats",
    "pq_pair",
    "predict_pattern",
    "reduction_check",
    "rikuna_z3",
]
