"""Exact and empirical densities of coprime-order reductions of
finitely generated subgroups of cyclotomic fields."""

from .config import Config, DEFAULT
from .density import (DensityBracket, DensityResult, MultiValuationResult,
                      density, density_bracket, density_closed_form,
                      density_multi_valuation, density_two_adic,
                      density_valuation_exact, special_case_density)
from .divisibility import (DivisibilityParameters, QuotientStructure,
                           decompose, extract_parameters,
                           is_strongly_indivisible, power_transform,
                           quotient_structure, split_torsion,
                           strong_independence_witness)
from .expr import format_element, parse_element
from .field import (CycElement, CyclotomicField, TorsionInfo,
                    as_root_of_unity, embed, extend_field, make_field,
                    torsion_info)
from .harness import (EmpiricalReport, PrimeIdeal, coprime_order_test,
                      estimate, prime_ideals_up_to, reduce_mod_prime)
from .kummer import (DegreeData, TowerData, brute_kummer_degree, e_factor,
                     kummer_valuation, prepare_degree_data, total_degree,
                     tower_data)
from .roots import all_lth_roots, is_power, lth_root, power_depth

__version__ = "0.1.0"

__all__ = [
    "Config", "DEFAULT",
    "CyclotomicField", "CycElement", "TorsionInfo",
    "make_field", "extend_field", "embed", "torsion_info", "as_root_of_unity",
    "parse_element", "format_element",
    "lth_root", "all_lth_roots", "is_power", "power_depth",
    "DivisibilityParameters", "QuotientStructure",
    "is_strongly_indivisible", "strong_independence_witness", "decompose",
    "extract_parameters", "quotient_structure", "power_transform",
    "split_torsion",
    "TowerData", "DegreeData", "tower_data", "kummer_valuation",
    "total_degree", "e_factor", "brute_kummer_degree", "prepare_degree_data",
    "DensityResult", "DensityBracket", "MultiValuationResult",
    "density", "density_closed_form", "density_two_adic",
    "special_case_density", "density_bracket", "density_valuation_exact",
    "density_multi_valuation",
    "PrimeIdeal", "EmpiricalReport", "prime_ideals_up_to",
    "reduce_mod_prime", "coprime_order_test", "estimate",
]
