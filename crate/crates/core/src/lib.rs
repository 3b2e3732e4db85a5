//! Alternating sign matrices, their southwest keys, key-avoidance of
//! permutation patterns, monotone triangles and exhaustive census.
//!
//! ```
//! use asmkey::{sw_key, Asm};
//!
//! let a = Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
//! assert_eq!(sw_key(&a).compact(), "231");
//! ```

pub mod asm;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod key;
pub mod patterns;
pub mod triangles;

pub use asm::{Asm, Permutation, Position};
pub use enumeration::{
    catalan_identity_check, count_avoiders, counts_by_key, generate_asms, generate_triangles, sweep, CountTable, Mode,
    SweepOptions,
};
pub use error::{Error, Result};
pub use key::{key_trace, remove_minus_one, sw_key, RemovalTrace};
pub use patterns::{classical_contains, conjugate, key_avoids, perm_contains, PatternSet};
pub use triangles::{asm_from_triangle, triangle_from_asm, MonotoneTriangle};
