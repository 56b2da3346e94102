//! Exact arithmetic for the commutative local rings used throughout the
//! workspace: Z/p^k, Z localized at (p), F_p, dual numbers F_p[ε]/(ε²), the
//! quadratic extension F_{p²}, and a first-order jet ring for linearizing
//! matrix equations modulo the radical.
//!
//! ```
//! use chev_ring::Ring;
//! let r = Ring::parse("zmod:5^2", &[2, 3]).unwrap();
//! let two = r.from_i64(2);
//! assert_eq!(r.format(&r.inv(&two).unwrap()), "13");
//! assert!(!r.is_unit(&r.from_i64(5)));
//! ```

pub mod descriptor;
pub mod element;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod ring;

pub use descriptor::{RingDescriptor, RingKind};
pub use element::RingElement;
pub use error::{Result, RingError};
pub use matrix::Mat;
pub use ring::{make_ring, Jet, Ring, Value, Q};
