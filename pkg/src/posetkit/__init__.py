"""posetkit: minimum chain and antichain covers of finite posets, with certificates."""

from .core import (
    Antichain,
    AxiomViolation,
    Chain,
    DuplicateLabel,
    ElementNotInCarrier,
    ElementSubset,
    EmptyCarrier,
    EmptySubset,
    FinitePoset,
    HostMismatch,
    InstanceTooLarge,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    PosetError,
    SplitNotCovering,
    UnknownLabel,
    UpDownSplit,
    build_poset,
    comparable,
    induced_subposet,
    is_antichain,
    is_chain,
    maximal_above,
    maximal_elements,
    minimal_below,
    minimal_elements,
    up_down_split,
)
from .decomp import (
    Certificate,
    CertificateMismatch,
    CoverFamily,
    MirskyTrace,
    PerlesTrace,
    StitchFailure,
    antichain_cover_mirsky,
    chain_cover_perles,
    dilworth_certificate,
    disjointify_cover,
    height,
    largest_antichain,
    largest_chain,
    min_chain_cover_matching,
    mirsky_certificate,
    width,
)
from .kernels import BACKEND

__version__ = "0.1.0"
