"""Characteristic-core and geometric-phase analysis of Mueller matrices and qubit channels."""

from ._core import (  # noqa: F401
    PolarlabError,
    Tolerances,
    amplitude_damping,
    analyze,
    channel_core,
    characteristic_decompose,
    check_trace_preservation,
    choi_from_kraus,
    coherent_visibility,
    compute_ipp,
    cov_to_mueller,
    ensemble_to_mueller,
    ensemble_visibility,
    extract_amg,
    hermitian_eig,
    jones_to_mueller,
    mueller_to_cov,
    pancharatnam_phase,
    polar2,
    polar3,
    random_physical_mueller,
    sigma,
    so3_exp,
    so3_log,
    spinor_to_bloch,
    su2_rotation,
    su2_strip_phase,
    su2_to_so3,
    validate_mueller,
)

__version__ = "0.3.0"
