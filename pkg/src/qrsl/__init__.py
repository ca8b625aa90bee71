"""qrsl: exact q-series identity verification and a partition laboratory.

The package expands q-hypergeometric sums and infinite products as exact
truncated power series, verifies a builtin registry of sum = product
identities to arbitrary order, parses a small text language for declaring
further identities of the same shape, and crosschecks the combinatorial
interpretation of each identity by brute-force enumeration.
"""

from .series import BiSeries, Coeff, Series
from .products import (
    QMonomial,
    bi_poch_finite,
    bi_poch_inf_recip,
    neg_qmono,
    poch_finite,
    poch_inf,
    poch_inf_recip,
    qmono,
    quintuple_product,
    quintuple_product_split,
    residue_product,
)
from .identities import (
    ConstAtom,
    IdentitySpec,
    LinExpr,
    MonomialAtom,
    PochFactorSpec,
    PochInfAtom,
    ProductSideSpec,
    QuadExpr,
    QuintupleAtom,
    ResidueAtom,
    SumSideSpec,
    VerificationReport,
    eval_product_side,
    eval_sum_side,
    verify_identity,
)
from .registry import (
    A1_SPECIALIZATIONS,
    BIVARIATE_NAMES,
    bivariate_sides,
    builtin,
    builtin_registry,
    verify_a1_specialization,
    verify_bivariate_relation,
    verify_combination,
)
from .partitions import (
    CrosscheckReport,
    Partition,
    SignedPartition,
    SIGNED_CLASSES,
    THEOREMS,
    count_andrews_lewis_9,
    count_gap2,
    count_residues,
    count_s,
    count_signed,
    count_t,
    crosscheck,
    iter_signed,
    signed_predicate,
)
from .idl import IdlValidationError, ParseError, parse_idl, print_idl

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "Coeff",
    "Series",
    "QMonomial",
    "qmono",
    "neg_qmono",
    "poch_finite",
    "poch_inf",
    "poch_inf_recip",
    "residue_product",
    "quintuple_product",
    "quintuple_product_split",
    "bi_poch_finite",
    "bi_poch_inf_recip",
    "LinExpr",
    "QuadExpr",
    "PochFactorSpec",
    "SumSideSpec",
    "PochInfAtom",
    "QuintupleAtom",
    "ResidueAtom",
    "MonomialAtom",
    "ConstAtom",
    "ProductSideSpec",
    "IdentitySpec",
    "VerificationReport",
    "eval_sum_side",
    "eval_product_side",
    "verify_identity",
    "builtin",
    "builtin_registry",
    "BIVARIATE_NAMES",
    "A1_SPECIALIZATIONS",
    "bivariate_sides",
    "verify_bivariate_relation",
    "verify_a1_specialization",
    "verify_combination",
    "Partition",
    "SignedPartition",
    "SIGNED_CLASSES",
    "THEOREMS",
    "CrosscheckReport",
    "count_residues",
    "count_gap2",
    "count_andrews_lewis_9",
    "count_s",
    "count_t",
    "count_signed",
    "iter_signed",
    "signed_predicate",
    "crosscheck",
    "ParseError",
    "IdlValidationError",
    "parse_idl",
    "print_idl",
]
