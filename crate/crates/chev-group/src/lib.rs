//! Adjoint elementary Chevalley groups of types B2 and G2 as exact matrices
//! over local rings: generators `x_α(t)`, `w_α(t)`, `h_α(t)`, torus elements,
//! word evaluation, the Steinberg relations and the congruence subgroup.
//!
//! ```
//! use chev_group::ChevalleyGroup;
//! use chev_ring::Ring;
//! use chev_roots::SystemType;
//!
//! let r = Ring::parse("zmod:5^2", &[2]).unwrap();
//! let g = ChevalleyGroup::new(SystemType::B2, &r).unwrap();
//! let a1 = g.sys.simple[0];
//! let h = g.h_gen(a1, &r.from_i64(-1)).unwrap();
//! assert!(h.is_diagonal());
//! ```

pub mod error;
pub mod frame;
pub mod group;
pub mod steinberg;
pub mod word;

pub use error::{GroupError, Result};
pub use frame::Frame;
pub use group::{frame_series, ChevalleyGroup, TorusCharacter};
pub use steinberg::{check_steinberg, commutator_terms, solve_commutator_constants, Exec, SteinbergReport};
pub use word::GroupWord;
