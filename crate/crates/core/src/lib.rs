//! Exact divisor theory on metric graphs: orders and divisors of
//! piecewise-linear functions, tropical Weil symbols and reciprocity, the
//! electrical-network solver for degree-zero divisors, the tropical Weil
//! pairing, and a classical reciprocity check on the projective line.

// Errors carry exact values for diagnostics; they are cold paths.
#![allow(clippy::result_large_err)]

pub mod curve;
pub mod exactnum;
pub mod p1oracle;
pub mod pairing;
pub mod plfun;
pub mod potential;
#[cfg(feature = "testgen")]
pub mod testgen;
pub mod weil;

pub use curve::{CurveError, CurvePoint, Direction, EdgeId, EdgeSpec, Heading, TropicalCurve, VertexId};
pub use exactnum::{NumError, Rat, RatMatrix};
pub use plfun::{Breakpoint, Divisor, FunctionError, PLFunction};
pub use p1oracle::{P1Point, SplitRationalFunction};
pub use pairing::{effective_resistance, tw_pairing, PairingError};
pub use potential::{is_principal, solve_divisor, PotentialError};
pub use weil::{reciprocity_sides, symbol_sum, weil_symbol};
