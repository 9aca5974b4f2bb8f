// SPDX-License-Identifier: MIT OR Apache-2.0
//! Singularity strata of plane quartics in the space of Dixmier-Ohno
//! invariants, used to predict stable reduction at primes of bad reduction.
//!
//! Quick start:
//!
//! ```
//! use quartic_strata::forms::Form;
//! use quartic_strata::invariants::dixmier_ohno;
//!
//! let f = Form::parse("x*y*z*(x+y+z)").unwrap();
//! let v = dixmier_ohno(&f).unwrap();
//! assert_eq!(v.coords[0], quartic_strata::arith::rat(-1, 144));
//! ```

pub mod arith;
pub mod classify;
pub mod error;
pub mod forms;
pub mod huicatalog;
pub mod invariants;
pub mod linalg;
pub mod pipeline;
pub mod singclass;
pub mod strata;

pub use error::{Error, Result};
