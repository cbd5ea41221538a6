//! Simulation of a surface-plasmon-polariton quantum bus coupling distant
//! quantum-dot spin qubits.
//!
//! The crate covers the full chain from mode structure to protocol level:
//!
//! - [`specfun`]: modified Bessel functions `I_m`, `K_m` and derivatives,
//!   the numerical substrate for everything else.
//! - [`plasmon`]: quantized plasmon modes of a cylindrical metal nanowire
//!   (Drude inversion, dispersion relation, wave-vector root solving).
//! - [`coupling`]: QD-nanowire coupling strength and its R/d maps.
//! - [`dynamics`]: composite dot-plasmon Hilbert space, Hamiltonians,
//!   Lindblad integration, Uhlmann fidelity.
//! - [`gates`]: adiabatic CPHASE gate construction, phase extraction,
//!   open-system gate fidelity, detuning optimization and sweeps.
//! - [`network`]: state-vector EPR preparation and the measurement-based
//!   nonlocal CNOT protocol.
//! - [`config`]: run configuration with paper-parameter defaults.

pub mod config;
pub mod constants;
pub mod coupling;
pub mod dynamics;
pub mod gates;
pub mod network;
pub mod plasmon;
pub mod specfun;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
