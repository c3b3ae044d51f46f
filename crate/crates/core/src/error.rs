use alloc::boxed::Box;

use thiserror::Error;

use crate::finset::FinSet;
use crate::verdict::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("finite ground sets need 1..={max} elements, got {size}")]
    GroundSize { size: u32, max: u32 },
    #[error("horizon must lie in 2..={max}, got {horizon}")]
    HorizonSize { horizon: u32, max: u32 },
    #[error("set {set} has elements outside the ground set")]
    OutsideGround { set: FinSet },
    #[error("the Frechet ideal is only defined on the naturals")]
    FrechetOnFiniteGround,
    #[error("ideal description is not a proper ideal: {witness:?}")]
    InvalidIdeal { witness: Box<Witness> },
    #[error("radius {radius} is not a member of the ideal")]
    RadiusNotInIdeal { radius: FinSet },
    #[error("operation needs a finite ground set")]
    FiniteGroundRequired,
    #[error("ground window of {size} elements is too large to enumerate its powerset")]
    WindowTooLarge { size: u32 },
    #[error("the empty set is isolated in this flavor and cannot be compared")]
    EmptySetFlavorMismatch,
    #[error("method {method} is unavailable for this model")]
    MethodUnavailable { method: &'static str },
    #[error("ballean is bounded, so its satellite would be improper")]
    ImproperSatellite,
    #[error("the map sends the bounded set {set} to an unbounded set")]
    UnboundedImage { set: FinSet },
    #[error("window of {size} elements cannot host the required bijection")]
    WindowTooSmall { size: u32 },
    #[error("map is not injective on its support")]
    NotInjective,
    #[error("point {point} lies outside the support")]
    OutsideSupport { point: u32 },
}
