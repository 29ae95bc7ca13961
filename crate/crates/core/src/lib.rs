//! Exact algebra for reflection-group invariants on the torus.
//!
//! The crate works over rationals and cyclotomic fields throughout. Modules,
//! roughly bottom-up:
//!
//! * [`arith`]: `Rational` and `CycloNum`;
//! * [`laurent`]: sparse Laurent polynomials;
//! * [`groups`]: `S_n`, `B_n`, `D_n` as signed permutations with linear and
//!   torus actions;
//! * [`invariants`]: generators, decomposition and discriminants for the
//!   torus invariants of `B_n` and `D_n`;
//! * [`weyl`]: differential operators with inverted coordinates;
//! * [`shift`]: shift operators and the isomorphism from [`weyl`];
//! * [`group_algebra`]: cyclic idempotents and symmetrizers;
//! * [`suites`]: the named verification suites behind the CLI.
//!
//! ```
//! use noncomm::invariants::{decompose, Basis};
//! use noncomm::laurent::LaurentPoly;
//!
//! let s = |i| &LaurentPoly::var(2, i) + &LaurentPoly::var_pow(2, i, -1);
//! let f = &s(0) * &s(1);
//! assert_eq!(decompose(&f, Basis::BPlus).unwrap().to_string(), "s2");
//! ```

pub mod arith;
pub mod error;
pub mod group_algebra;
pub mod groups;
pub mod invariants;
pub mod laurent;
pub mod random;
pub mod shift;
pub mod sign;
pub mod suites;
pub mod weyl;

// The guide's snippets run as doctests through these modules.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/shift.md")]
    mod shift {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
