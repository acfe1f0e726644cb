"""Exact verification toolkit for Poisson superalgebras, their bialgebras, Yang-Baxter
solutions, O-operators and post-Poisson structures."""
from .graded import (Element, GradedBasis, Tensor, Tensor2, Tensor3, cyclic, koszul_sign, pair_dual,
                     pairing_convention, permute_legs, tensor, to_scalar, twist, use_pairing)
from .report import PreconditionError, Report, Violation
from .structures import (BilinearLaw, PoissonSuper, check_admissible, check_comm_assoc, check_lie,
                         check_poisson, depolarize, polarize, transport)
from .representations import (PoissonRep, RepMap, adjoint_rep, check_assoc_rep, check_lie_rep,
                              check_poisson_rep, coadjoint_rep, dual_rep, right_action, right_mult,
                              semidirect_product)
from .coalgebra import (Cooperation, PoissonBialgebra, check_coassoc_cocomm, check_inf_superbialgebra,
                        check_lie_cocoalgebra, check_lie_superbialgebra, check_poisson_bialgebra,
                        dual_bialgebra, dualize)
from .matched import (BilinearForm, MatchedPairData, bialgebra_matched_pair, bowtie, check_manin_triple,
                      check_matched_pair_assoc, check_matched_pair_lie, check_matched_pair_poisson,
                      manin_report_for, standard_form)
from .coboundary import (aybe, canonical_r, coboundary_bialgebra, coboundary_conditions, cobracket_from_r,
                         coproduct_from_r, cybe, drinfeld_double, pybe_holds, r_as_map, symmetric_split,
                         w_obstruction, w_obstruction_direct)
from .post import (ModulePoissonData, OOperator, PostPoisson, associated_poisson, check_comm_dendriform_tri,
                   check_homomorphism, check_module_poisson, check_o_operator, check_post_lie,
                   check_post_poisson, check_rota_baxter, post_from_o_operator, post_from_quasitriangular,
                   regular_module)
from .fixtures import fixture_a, fixture_b, p2_algebra, p2_bialgebra
from .formats import Document, FormatError, parse, serialize
from .suites import GridSpec, SUITES, construct, grid_search, run_suite

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "BilinearLaw",
    "Cooperation",
    "Document",
    "Element",
    "FormatError",
    "GradedBasis",
    "GridSpec",
    "MatchedPairData",
    "ModulePoissonData",
    "OOperator",
    "PoissonBialgebra",
    "PoissonRep",
    "PoissonSuper",
    "PostPoisson",
    "PreconditionError",
    "RepMap",
    "Report",
    "SUITES",
    "Tensor",
    "Tensor2",
    "Tensor3",
    "Violation",
    "adjoint_rep",
    "associated_poisson",
    "aybe",
    "bialgebra_matched_pair",
    "bowtie",
    "canonical_r",
    "check_admissible",
    "check_assoc_rep",
    "check_coassoc_cocomm",
    "check_comm_assoc",
    "check_comm_dendriform_tri",
    "check_homomorphism",
    "check_inf_superbialgebra",
    "check_lie",
    "check_lie_cocoalgebra",
    "check_lie_rep",
    "check_lie_superbialgebra",
    "check_manin_triple",
    "check_matched_pair_assoc",
    "check_matched_pair_lie",
    "check_matched_pair_poisson",
    "check_module_poisson",
    "check_o_operator",
    "check_poisson",
    "check_poisson_bialgebra",
    "check_poisson_rep",
    "check_post_lie",
    "check_post_poisson",
    "check_rota_baxter",
    "coadjoint_rep",
    "coboundary_bialgebra",
    "coboundary_conditions",
    "cobracket_from_r",
    "construct",
    "coproduct_from_r",
    "cybe",
    "cyclic",
    "depolarize",
    "drinfeld_double",
    "dual_bialgebra",
    "dual_rep",
    "dualize",
    "fixture_a",
    "fixture_b",
    "grid_search",
    "koszul_sign",
    "manin_report_for",
    "p2_algebra",
    "p2_bialgebra",
    "pair_dual",
    "pairing_convention",
    "parse",
    "permute_legs",
    "polarize",
    "post_from_o_operator",
    "post_from_quasitriangular",
    "pybe_holds",
    "r_as_map",
    "regular_module",
    "right_action",
    "right_mult",
    "run_suite",
    "semidirect_product",
    "serialize",
    "standard_form",
    "symmetric_split",
    "tensor",
    "to_scalar",
    "transport",
    "twist",
    "use_pairing",
    "w_obstruction",
    "w_obstruction_direct",
]
