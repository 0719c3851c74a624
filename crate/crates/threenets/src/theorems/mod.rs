//! Executable validators for the structure theorems: conic containment when
//! one component is collinear, its converse through involutory
//! perspectivities, the complete order-4 taxonomy, the small orders, and the
//! realizable point-count scan for non-singular cubics.
//!
//! A `TheoremViolated` error carries the offending net serialized as JSON;
//! it cannot fire on a valid input, so any occurrence is a reproducible
//! counterexample and the most valuable possible output of the crate.

mod converse;
mod n4;
mod perspectivity;
mod small_orders;
mod thm1;
mod waterhouse;

pub use converse::{check_converse, ConverseReport, Mechanism};
pub use n4::{check_n4, ClosedFormCheck, N4Case, N4Certificate, NonANonCCheck};
pub use perspectivity::{
    classify_group, perspectivity_from, ConicFrame, GroupClass, Perspectivity,
    PerspectivityGroup,
};
pub use small_orders::{check_n2, check_n3, pencil_cubic, N2Report, N3Report};
pub use thm1::{check_theorem1, Theorem1Certificate};
pub use waterhouse::{waterhouse_scan, weierstrass_cubic, weierstrass_discriminant, WaterhouseReport};

use std::fmt;

#[derive(Debug, Clone)]
pub enum TheoremsError {
    PreconditionFailed(String),
    TheoremViolated {
        message: String,
        counterexample: String,
    },
    OnConic,
    IsNucleus,
    NotOrder4,
    NotOrder2,
    NoEquivalence(String),
    CanonicalizationFailed(String),
    GroupTooLarge,
    Internal(String),
}

impl fmt::Display for TheoremsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremsError::PreconditionFailed(m) => write!(f, "precondition failed: {}", m),
            TheoremsError::TheoremViolated { message, .. } => {
                write!(f, "theorem violated: {}", message)
            }
            TheoremsError::OnConic => write!(f, "center lies on the conic"),
            TheoremsError::IsNucleus => write!(f, "center is the nucleus of the conic"),
            TheoremsError::NotOrder4 => write!(f, "net does not have order 4"),
            TheoremsError::NotOrder2 => write!(f, "net does not have order 2"),
            TheoremsError::NoEquivalence(m) => write!(f, "no projective equivalence found: {}", m),
            TheoremsError::CanonicalizationFailed(m) => {
                write!(f, "canonicalization failed: {}", m)
            }
            TheoremsError::GroupTooLarge => write!(f, "group closure exceeded the size cap"),
            TheoremsError::Internal(m) => write!(f, "internal error: {}", m),
        }
    }
}

impl std::error::Error for TheoremsError {}

impl TheoremsError {
    pub(crate) fn violated(message: impl Into<String>, net: &crate::nets::DualThreeNet) -> Self {
        TheoremsError::TheoremViolated {
            message: message.into(),
            counterexample: crate::io::net_to_string(net),
        }
    }
}
