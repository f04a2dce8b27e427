//! Linear characters of SL2 over finite rings and over rings of integers of
//! number fields.
//!
//! The crate is organised bottom-up: [`finring`] supplies the coefficient
//! rings, [`sl2core`] the matrix group, [`chars`] the closed-form characters,
//! [`oracle`] brute-force group theory to check them against, and
//! [`numfield`] the prime-splitting computations that assemble the congruence
//! character group of `SL2(O_K)`.

pub mod chars;
pub mod datasets;
pub mod error;
pub mod finring;
pub mod numfield;
pub mod oracle;
pub mod sl2core;
pub mod verify;

pub use chars::{char_eval, CharKind, CharacterSpec, UnityRoot};
pub use error::{Error, Result};
pub use finring::{Ring, RingElement, RingHom};
pub use numfield::{CharGroupDescriptor, IntPoly, NumberField, OrderBasis, PrimePart, PrimeSplit};
pub use sl2core::{Mat2, QuadForm};
