"""Inelastic scattering on a lattice-trapped condensate.

Builds the fixed-number bosonic Hilbert space of a short Bose-Hubbard
chain, the transmission block of the probe-particle scattering matrix,
and the statistical machinery (unfolded matrix-element distributions,
cross-section autocorrelations, Lorentzian/exponential fits) used to
identify Ericson fluctuations.  A classical mean-field integrator gives
the independent semiclassical decay constant for comparison with the
quantum resonance width.
"""

from becscatter.fock import (
    BoseHubbardParams,
    FockBasis,
    bose_hubbard_hamiltonian,
    fock_basis,
    number_operator,
)
from becscatter.spectral import (
    Spectrum,
    UnfoldedElements,
    diagonalize,
    interaction_matrix,
    unfold,
)
from becscatter.scatter import (
    ChannelSet,
    ScatteringParams,
    TransmissionBlock,
    energy_scan,
    open_channels,
    partial_cross_section,
    total_inelastic,
    transmission,
    transmission_matrix,
)
from becscatter.fluct import (
    AutocorrResult,
    DecayFit,
    Histogram,
    autocorrelation,
    decay_autocorrelation,
    exponential_distribution_fit,
    fit_exponential_decay,
    fit_lorentzian,
    histogram,
)
from becscatter.meanfield import (
    ClassicalState,
    MeanfieldParams,
    Trajectory,
    decay_rate_scan,
    equations_of_motion,
    integrate,
    sample_energy_shell,
    survival_probability,
)

__version__ = "0.1.0"
