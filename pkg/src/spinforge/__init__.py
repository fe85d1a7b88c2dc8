"""Exact-arithmetic toolkit for split Clifford algebras, spin double covers,
spin representations, orthogonal root data, and the prime/character
searches underpinning their residual torus data.

Everything computes over exact coefficient fields (rationals, the eighth
cyclotomic field, prime fields and their quadratic extensions); no floats,
no rounding, ever.
"""

from .coeff import (CYCLO8, QQ, Cyclo8, FpElem, InvalidModulusError,
                    PreconditionError, PrimeField, QuadraticField,
                    UnsupportedRingError, is_prime, legendre, mu_l_projection,
                    ring_from_name, sqrt_mod, sqrt_mod_int)
from .clifford import (MultiVector, clifford_norm, grade_parity, parse_text,
                       star, to_text, weyl_generator)
from .spingroup import (InfeasibleError, MembershipError, SOMatrix,
                        SpinElement, d_epsilon_matrix, element_order,
                        extension_splits, hyperbolic_torus_element, is_gspin,
                        lift_sign_change, project, weyl_section)
from .rootdata import (Cocharacter, RootDatum, TorusPoint, build_root_datum,
                       cartan_involution_check, check_simple_transitivity,
                       cochar_eval, d_orbit, lparam_descent, pairing,
                       parity_classify, rho_vee, sign_changes, spin_weights)
from .spinrep import (InvariantForm, ParityError, SpinMatrix,
                      cartan_fixed_space_report, classify_invariant_form,
                      clifford_action, invariant_form, spin_basis,
                      spin_matrix, torus_weight_diagnostics)
from .galois import (ExponentData, PrimeTower, SearchExhaustedError,
                     TripleCertificate, check_condition4, check_condition5,
                     find_generic_exponents, find_order_l_prime, find_pair,
                     find_regular_torus_point, prime_tower,
                     proposition_2_6_pipeline, verify_proposition_2_6_data)

__version__ = "0.1.0"
