use alloc::string::String;

use crate::diagram::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(ValidationReport),
    #[error("projection is disconnected ({pieces} pieces); take the census per component")]
    DisconnectedProjection { pieces: usize },
    #[error("crossing index {index} out of range for a diagram with {count} crossings")]
    CrossingOutOfRange { index: usize, count: usize },
    #[error("expected a knot diagram, found {components} components")]
    NotAKnot { components: usize },
    #[error("arc {arc} is not an arc of this diagram")]
    NoSuchArc { arc: u32 },
    #[error("invalid construction parameters: {0}")]
    InvalidSpec(String),
    #[error("crossing {crossing} has no twist partner along the requested axis")]
    NoTwistPartner { crossing: usize },
    #[error("crossings {crossing} and {other} bound a bigon but do not form a twist")]
    NotATwist { crossing: usize, other: usize },
    #[error("skein budget exceeded: {0}")]
    BudgetExceeded(crate::homfly::SkeinStats),
    #[error("z-degree of the zero polynomial is undefined")]
    ZeroPolynomial,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
