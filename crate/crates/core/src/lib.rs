//! Classification of Legendrian cable links in the tight three-sphere and of
//! Legendrian torus knots in the one-jet space of the circle, by their
//! classical invariants (Thurston-Bennequin invariant and rotation number;
//! self-linking number in the transverse case).
//!
//! The crate has three layers:
//!
//! * exact combinatorics: polyline front diagrams over rational coordinates
//!   ([`front`]), and constructions realizing prescribed invariants
//!   ([`constructor`]);
//! * integer arithmetic: the complete realizability predicate, maximal-tb
//!   formulas, mountain-range enumeration ([`ranges`]), the isotopy decision
//!   procedure with destabilization witnesses ([`classifier`]), and the
//!   jet-space / transverse translations ([`jet`]);
//! * floating point: verification of the explicit contactomorphism between
//!   the jet space and the complement of a maximal unknot, and Gauss linking
//!   integrals ([`geometry`]).

pub mod classifier;
pub mod constructor;
pub mod front;
pub mod geometry;
pub mod jet;
pub mod ranges;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid diagram: {}", format_violations(.0))]
    InvalidDiagram(Vec<front::Violation>),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("p = {p} and q = {q} are not coprime")]
    NonCoprime { p: i64, q: i64 },
    #[error("invariants must be normalized (q >= 0) before use")]
    NotNormalized,
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("template mismatch: {0}")]
    TemplateMismatch(String),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("curves intersect or come closer than {min_distance}")]
    CurvesIntersect { min_distance: f64 },
    #[error("floor {floor} too shallow to decide transverse realizability")]
    FloorTooShallow { floor: i64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn format_violations(vs: &[front::Violation]) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    items.join("; ")
}

/// gcd with the convention gcd(p, 0) = |p|.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
