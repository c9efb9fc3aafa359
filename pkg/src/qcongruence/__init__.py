"""Exact q-binomial arithmetic and verification of congruences modulo powers of [p]_q."""

from .congruences import (
    CongruenceCase,
    VerificationReport,
    congruent,
    modulus_poly,
    pan_rhs,
    run_case,
    straub_rhs,
    verify_andrews,
    verify_classical,
    verify_pan,
    verify_q_lucas,
    verify_q_vandermonde,
    verify_shi_pan,
    verify_straub,
)
from .decomposition import proof_decomposition
from .polyring import (
    IntPoly,
    Modulus,
    eval_int,
    poly_exact_div,
    poly_rem,
    q_pochhammer,
    substitute_power,
)
from .primes import is_prime
from .qcombinatorics import (
    binomial_int,
    gaussian_binomial,
    gaussian_binomial_mod,
    gaussian_subset_oracle,
    q_factorial,
    q_integer,
)

__version__ = "0.1.0"
