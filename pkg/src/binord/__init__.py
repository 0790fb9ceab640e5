"""binord: high multiplicative-order elements in F_q[x]/(x^m - a).

Constructs the conjugate-binomial family of theta + b, counts the
selection-vector set that lower-bounds its multiplicative order, and
verifies every structural claim against exact brute-force and
factorization oracles at desk scale.
"""

from . import _kernels, errors
from .construction import (ConjugateBinomial, binomial_family, check_lemma6,
                           frobenius_orbit, linear_binomials,
                           product_for_vector, theorem7_distinct_count)
from .counting import (DEFAULT_ENUM_BUDGET, BoundReport, SelectionVector,
                       ceil_pow2_sqrt, count_S_dp, enumerate_S,
                       lemma8_constructive, theorem1_bound)
from .extension_field import ExtElement, ExtField
from .integers import (DEFAULT_FACTOR_CAP, Factorization, factorize, is_prime,
                       multiplicative_order_mod)
from .oracle import (CHECK_NAMES, CSV_COLUMNS, VerificationReport,
                     exact_element_order, scan, verify_instance,
                     verify_order_certificate)
from .parameters import (ExtensionSpec, binomial_exists, build_spec,
                         check_binomial_irreducible, construct_a, decompose,
                         spec_from_json_dict, verify_lemma3)
from .prime_field import (PrimeField, PrimeFieldElement, element_order,
                          find_primitive_element)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which coefficient kernel new rings will prefer: "compiled" or "python"."""
    return _kernels.active_backend()
