//! Workbench for finite ternary semigroups, real semigroups and fans.
//!
//! The crate builds finite ternary semigroups (from Cayley tables or from
//! presentations), enumerates their characters into the three-element
//! structure `{1, 0, -1}`, induces representation relations from sets of
//! characters and checks the real-semigroup axioms on them.  On top of that
//! sit the fan constructions, the representation order, quotients and the
//! characterization of fans by zero-set conditions.
//!
//! Everything is finite and exhaustive: a check either holds on every tuple
//! or comes back with the first failing tuple as a witness.

pub mod characters;
pub mod charfan;
pub mod error;
pub mod examples;
pub mod fan;
pub mod format;
pub mod harness;
pub mod order;
pub mod presentation;
pub mod pring;
pub mod quotient;
pub mod report;
pub mod represent;
pub mod three;
pub mod ts_core;

pub use characters::{CharSet, Character};
pub use error::{Error, Result};
pub use fan::FanModel;
pub use order::Poset;
pub use presentation::{Monomial, Presentation};
pub use report::{Check, Report};
pub use represent::RsModel;
pub use three::Three;
pub use ts_core::{Elem, ElemSet, FiniteTs};
