"""Fixed-number bosonic Fock basis and Bose-Hubbard Hamiltonian assembly.

The target is a short chain of L sites holding N interacting bosons,

    H = (U/2) sum_i n_i (n_i - 1) - K sum_<i,i+1> (b_i^dag b_{i+1} + h.c.),

with on-site interaction U and hopping K.  K is the unit of energy
throughout the package (K = 1 internally); the dimensionless control
parameter u = U*N/(2K) selects the dynamical regime.
"""

from dataclasses import dataclass, field
from math import comb, sqrt

import numpy as np

# Largest basis we allow; dense eigensolvers stop being sensible well below this.
_MAX_STATES = 200_000


@dataclass(frozen=True)
class FockBasis:
    """Occupation-number basis of N bosons on L sites, fixed canonical order.

    States are ordered lexicographically descending in (n_1, n_2, ...), so
    (N, 0, ..., 0) comes first and (0, ..., 0, N) last.  ``index`` maps an
    occupation tuple back to its position.
    """

    particle_count: int
    site_count: int
    states: tuple = field(repr=False)
    index: dict = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.states)

    def occupations(self) -> np.ndarray:
        """All occupation vectors as an integer array of shape (size, L)."""
        return np.array(self.states, dtype=np.int64)


def fock_basis(n_particles: int, n_sites: int) -> FockBasis:
    """Enumerate all occupation vectors with sum n_particles over n_sites.

    The count is binomial(N + L - 1, L - 1).  Raises for invalid shapes or
    when the state count would overflow sensible dense-matrix sizes.
    """
    if n_particles < 0:
        raise ValueError(f"particle number must be >= 0, got {n_particles}")
    if n_sites < 1:
        raise ValueError(f"site count must be >= 1, got {n_sites}")
    n_states = comb(n_particles + n_sites - 1, n_sites - 1)
    if n_states > _MAX_STATES:
        raise ValueError(
            f"basis of {n_states} states (N={n_particles}, L={n_sites}) "
            f"exceeds the supported maximum of {_MAX_STATES}"
        )

    states = []

    def fill(prefix, remaining, sites_left):
        if sites_left == 1:
            states.append(prefix + (remaining,))
            return
        for n in range(remaining, -1, -1):
            fill(prefix + (n,), remaining - n, sites_left - 1)

    fill((), n_particles, n_sites)
    index = {s: i for i, s in enumerate(states)}
    return FockBasis(n_particles, n_sites, tuple(states), index)


@dataclass(frozen=True)
class BoseHubbardParams:
    """On-site interaction U and hopping K, with u = U*N/(2K) kept consistent.

    Construct via :func:`from_u` (the usual entry point: the physics is
    parameterized by u) or directly with explicit U.  ``periodic`` selects
    ring versus open-chain bonds; the open chain is the package default
    (see :func:`bose_hubbard_hamiltonian`).
    """

    U: float
    K: float
    u: float
    periodic: bool = False

    def __post_init__(self):
        if self.K <= 0:
            raise ValueError(f"hopping K must be > 0, got {self.K}")

    @staticmethod
    def from_u(u: float, n_particles: int, K: float = 1.0,
               periodic: bool = False) -> "BoseHubbardParams":
        if n_particles <= 0:
            raise ValueError("u-parameterization requires N > 0")
        U = 2.0 * K * u / n_particles
        return BoseHubbardParams(U=U, K=K, u=u, periodic=periodic)

    @staticmethod
    def from_U(U: float, n_particles: int, K: float = 1.0,
               periodic: bool = False) -> "BoseHubbardParams":
        u = U * n_particles / (2.0 * K)
        return BoseHubbardParams(U=U, K=K, u=u, periodic=periodic)


def _bonds(n_sites: int, periodic: bool):
    bonds = [(i, i + 1) for i in range(n_sites - 1)]
    if periodic:
        if n_sites < 3:
            raise ValueError("periodic boundary needs at least 3 sites "
                             "(the wrap bond would duplicate an existing one)")
        bonds.append((n_sites - 1, 0))
    return bonds


def bose_hubbard_hamiltonian(basis: FockBasis, params: BoseHubbardParams) -> np.ndarray:
    """Dense real-symmetric Bose-Hubbard matrix in the given basis.

    Diagonal: (U/2) sum_i n_i (n_i - 1).  Hopping connects states that
    differ by moving one boson across one bond, with amplitude
    -K * sqrt(n_src * (n_dst + 1)).  Both (a,b) and (b,a) entries are
    assigned from the same product, so the matrix is bitwise symmetric.
    """
    U, K = params.U, params.K
    dim = basis.size
    H = np.zeros((dim, dim))
    bonds = _bonds(basis.site_count, params.periodic)
    for a, st in enumerate(basis.states):
        H[a, a] = 0.5 * U * sum(n * (n - 1) for n in st)
        for (i, j) in bonds:
            # move one boson i -> j; the reverse move is generated when the
            # loop reaches the target state, and lands on the same product
            if st[i] > 0:
                tgt = list(st)
                tgt[i] -= 1
                tgt[j] += 1
                b = basis.index[tuple(tgt)]
                amp = -K * sqrt(st[i] * (st[j] + 1))
                H[b, a] += amp
    return H


def number_operator(basis: FockBasis, site: int) -> np.ndarray:
    """Diagonal of the occupation operator for ``site`` (1-based), as a vector.

    Returned as a 1-D array of length basis.size; use np.diag for the full
    matrix.  Site 1 is the chain end closest to the probe contact.
    """
    if not 1 <= site <= basis.site_count:
        raise ValueError(f"site must be in 1..{basis.site_count}, got {site}")
    return np.array([st[site - 1] for st in basis.states], dtype=float)
