//! Frequency-selective hybrid analog/digital precoding for wideband
//! mmWave MIMO-OFDM links.
//!
//! The library is organized in four layers:
//!
//! - [`channel`]: clustered geometric wideband channel generation for a
//!   ULA-to-ULA link, producing per-subcarrier channel matrices `H[k]`.
//! - [`codebook`]: quantized unit-modulus beamsteering codebooks from
//!   which all RF precoder columns are drawn.
//! - [`precoding`]: the mutual-information objective, the optimal
//!   per-subcarrier baseband precoder, and the precoder design
//!   algorithms (exhaustive search, direct greedy, Gram-Schmidt greedy,
//!   approximate Gram-Schmidt, unconstrained SVD bound).
//! - [`bench`]: a seeded Monte Carlo experiment runner with CSV and SVG
//!   output.
//!
//! All numerical code is deterministic given a seed, and everything
//! below the experiment runner is pure, so values can be shared freely
//! across threads.

pub mod bench;
pub mod channel;
pub mod codebook;
pub mod error;
pub mod precoding;

pub use error::Error;

/// Complex scalar used throughout.
pub type Cpx = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMat = nalgebra::DMatrix<Cpx>;
/// Dense complex vector.
pub type CVec = nalgebra::DVector<Cpx>;
