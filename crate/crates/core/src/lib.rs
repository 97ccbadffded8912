//! Exact finite-field arithmetic, cyclic codes of length `2^n` over GF(q),
//! and quantum synchronizable codes built from nested dual-containing pairs.
//!
//! ```
//! use qsync::cyclic::{is_dual_containing, min_distance, DEFAULT_BUDGET};
//! use qsync::CodeFamily;
//!
//! let family = CodeFamily::new(5, 3)?;
//! let code = family.code_from_residues(&[1, 2]);
//! assert_eq!(code.dimension(), 5);
//! assert_eq!(min_distance(&code, DEFAULT_BUDGET)?.exact, Some(3));
//! assert!(is_dual_containing(&code, family.table())?.holds);
//! # Ok::<(), qsync::Error>(())
//! ```

pub mod arith;
pub mod cyclic;
pub mod cyclotomy;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod qsc;

pub use cyclic::{CodeFamily, CyclicCode};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement, Tower};
pub use poly::Polynomial;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/cosets.md")]
    mod cosets {}
    #[doc = include_str!("../../../book/src/cyclic-codes.md")]
    mod cyclic_codes {}
    #[doc = include_str!("../../../book/src/distance.md")]
    mod distance {}
    #[doc = include_str!("../../../book/src/qsc.md")]
    mod qsc {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
