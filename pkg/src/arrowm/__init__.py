"""Time-ordering operator for quantum evolution on the energy half-line.

The package discretizes the positive, contractive operator obtained by
compressing the upper-half-plane Hardy projection onto the half-line, whose
expectation value decreases monotonically along every Schroedinger orbit
generated by multiplication by the energy.  Two independent realizations are
provided and cross-checked: a dense Hermitian matrix built from the singular
Cauchy kernel, and an FFT-diagonalized path that multiplies power-law mode
coefficients by the closed-form eigenvalue m(nu) = (1 + e^{2 pi nu})^{-1}.
On top of these sit trajectory diagnostics and the free-particle Gaussian
wave-packet scenarios exercised by the ``arrow-m`` command.
"""

from .dynamics import MONOTONE_TOL, Trajectory, evolve, expectation_m, trajectory
from .freeparticle import (
    CHANNELS,
    GaussianPacketParams,
    momentum_wavefunction,
    packet_tail_mass,
    position_density,
    position_spread,
    position_wavefunction,
    to_energy_state,
)
from .grid import (
    EnergyState,
    LogEnergyGrid,
    inner_product,
    make_log_grid,
    make_state,
    normalize_state,
    random_smooth_state,
    state_norm,
    zero_state,
)
from .mellin import (
    EigenvalueCoordinate,
    MellinSpectrum,
    apply_m_fast,
    completeness_kernel_check,
    completeness_kernel_quadrature,
    eigen_density,
    eigen_density_moments,
    eigenvalue_of_frequency,
    forward_mellin,
    frequency_grid,
    frequency_jacobian,
    frequency_of_eigenvalue,
    gaussian_window,
    inverse_mellin,
    sample_eigenfunction,
    tukey_window,
    windowed_eigenfunction,
)
from .operator import (
    DenseOperator,
    apply_m_direct,
    build_dense_m,
    cauchy_kernel,
    dense_spectrum,
    pv_cauchy_quadrature,
    subtraction_selfterm,
)

__version__ = "0.1.0"

__all__ = [
    "CHANNELS",
    "DenseOperator",
    "EigenvalueCoordinate",
    "EnergyState",
    "GaussianPacketParams",
    "LogEnergyGrid",
    "MONOTONE_TOL",
    "MellinSpectrum",
    "Trajectory",
    "apply_m_direct",
    "apply_m_fast",
    "build_dense_m",
    "cauchy_kernel",
    "completeness_kernel_check",
    "completeness_kernel_quadrature",
    "dense_spectrum",
    "eigen_density",
    "eigen_density_moments",
    "eigenvalue_of_frequency",
    "evolve",
    "expectation_m",
    "forward_mellin",
    "frequency_grid",
    "frequency_jacobian",
    "frequency_of_eigenvalue",
    "gaussian_window",
    "inner_product",
    "inverse_mellin",
    "make_log_grid",
    "make_state",
    "momentum_wavefunction",
    "normalize_state",
    "packet_tail_mass",
    "position_density",
    "position_spread",
    "position_wavefunction",
    "pv_cauchy_quadrature",
    "random_smooth_state",
    "sample_eigenfunction",
    "state_norm",
    "subtraction_selfterm",
    "to_energy_state",
    "trajectory",
    "tukey_window",
    "windowed_eigenfunction",
    "zero_state",
]
