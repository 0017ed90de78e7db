"""Crystal combinatorics for Kirillov-Reshetikhin tensor products:
abstract crystals with the signature rule, Demazure-edge filtrations,
the quantum Bruhat graph, and the quantum alcove model with level-l
operators, plus named verifications of the structural theorems they
satisfy at desk scale."""

from .cartan import build_cartan, c_value, pairing, parse_type, positive_roots
from .weyl import (build_qbg, build_weyl_group, bruhat_leq, dominantize,
                   reflect)
from .crystals import (CrystalGraph, TensorProduct, components,
                       demazure_filter, demazure_subset, explore,
                       explore_tensor, ground_state, hw_census, hw_crystal,
                       iso_check, similarity_check, tensor_e, tensor_f,
                       weyl_action)
from .alcove import (AdmissibleSubset, LambdaChain, alcove_crystal, alcove_e,
                     alcove_f, build_lambda_chain, enumerate_admissible,
                     fold, g_graph, phi0)
from .kr import fixture_C2, kr_C_onebox, kr_typeA, promotion
from .experiments import (Report, check_alcove_correspondence, check_bmin,
                          check_character_qsystem, check_figure,
                          check_qsystem_typeA, check_reduction)

__version__ = "0.1.0"

__all__ = [
    "build_cartan", "c_value", "pairing", "parse_type", "positive_roots",
    "build_qbg", "build_weyl_group", "bruhat_leq", "dominantize", "reflect",
    "CrystalGraph", "TensorProduct", "components", "demazure_filter",
    "demazure_subset", "explore", "explore_tensor", "ground_state",
    "hw_census", "hw_crystal", "iso_check", "similarity_check", "tensor_e",
    "tensor_f", "weyl_action",
    "AdmissibleSubset", "LambdaChain", "alcove_crystal", "alcove_e",
    "alcove_f", "build_lambda_chain", "enumerate_admissible", "fold",
    "g_graph", "phi0",
    "fixture_C2", "kr_C_onebox", "kr_typeA", "promotion",
    "Report", "check_alcove_correspondence", "check_bmin",
    "check_character_qsystem", "check_figure", "check_qsystem_typeA",
    "check_reduction",
    "__version__",
]
