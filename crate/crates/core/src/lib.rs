//! Single-component DFT evaluation.
//!
//! Computes one bin `V_k` of an `N`-point DFT by Goertzel's second-order
//! recursion, by JCO (reducing the signal polynomial modulo the cyclotomic
//! polynomial `Φ_L` of the bin's order `L` and evaluating the remainder) and
//! by JCO-Goertzel (JCO followed by a Goertzel reduction of the remainder).
//! A streaming filter form of JCO, an operation-counting cost model and a
//! DTMF demo are included.
//!
//! ```
//! use sbdft::{algorithms, polynomial::ComplexPoly};
//!
//! let v = ComplexPoly::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
//! let bin = algorithms::jco_goertzel_bin(&v, 1).unwrap();
//! assert!((bin.value - num_complex::Complex64::new(-2.0, 2.0)).norm() < 1e-12);
//! ```

pub mod algorithms;
pub mod complexity;
pub mod cyclotomic;
pub mod dtmf;
pub mod error;
pub mod numtheory;
pub mod polynomial;
pub mod streaming;

pub use algorithms::{Algorithm, BinResult, BinSpec};
pub use complexity::{OpCounts, Tracked};
pub use error::{Error, Result};
pub use polynomial::{ComplexPoly, IntPoly};
pub use streaming::{design_filter, FilterSpec, FilterState};
