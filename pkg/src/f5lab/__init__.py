"""Workbench for cancellative / F5-free 3-uniform hypergraphs: value types,
forbidden-pattern detectors, extremal constructions, exact matrix and
feasibility certificates, and small-n brute-force oracles."""

from .algebra import (CertificateReport, ExactMatrix, ExactScalar, adjacency,
                      all_ones_J, circulant_W, exact_sign, quadratic_form_gap,
                      verify_conjugation, verify_gamma_inverse,
                      verify_pentagon_identity)
from .construct import (balanced_turan, gamma_graph, tightness_witness,
                        uniform_blowup, wheel, wheel_blowup)
from .core import (DegreeProfile, Graph, ThreeGraph, Witness, build_graph,
                   build_three_graph, degree_profile, independence_number,
                   link, pair_neighborhood, read_3g, shadow, three_partition,
                   validate_witness, write_3g)
from .detect import (FactReport, audit_link_facts, find_clique, find_F5,
                     find_homomorphism, find_K4_3minus, is_cancellative,
                     link_restriction_bound)
from .feasibility import (ConstraintSystem, SlackScan, aes_parameter_check,
                          aes_section6_point, numeric_claim_audit,
                          opt1_certificate, opt2_certificate)
from .search import (SearchResult, SearchSpec, check_main_theorem,
                     enumerate_three_graphs, extremal_number, max_min_degree,
                     run_search)

__all__ = [name for name in dir() if not name.startswith("_")]
