//! Extended potential, exceptional polynomials, bound states and numeric
//! checks of orthogonality and of the spectrum.

mod eop;
mod fd;
mod potential;
mod quadrature;
mod wavefunction;

pub use eop::{eop_residual, eop_solution_space, solve_eop, EopFamily};
pub use fd::{numeric_spectrum, NumericGrid, DEFAULT_X_MIN, GRID_TOLERANCE};
pub use potential::{build_potential, ExtendedPotential};
pub use quadrature::{
    gauss_legendre, max_off_diagonal, orthogonality_check, CompositeRule, CONVERGENCE_TOLERANCE,
    GAUSS_ORDER,
};
pub use wavefunction::{wavefunction, Wavefunction};
