//! Error types, grouped by the operation family that raises them.

use thiserror::Error;

/// Rejections raised while assembling a graph from vertex cycles and a pairing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    /// The vertex list contains no darts at all.
    #[error("graph has no darts")]
    EmptyGraph,
    /// A dart name occurs twice across the vertex cycles.
    #[error("dart `{0}` occurs more than once in the vertex cycles")]
    DuplicateDart(String),
    /// A dart listed in a vertex cycle never appears in the pairing.
    #[error("dart `{0}` has no reversal partner")]
    UnpairedDart(String),
    /// The pairing maps a dart to itself.
    #[error("dart `{0}` is paired with itself")]
    FixedPointInPairing(String),
    /// The pairing mentions a dart that no vertex cycle contains.
    #[error("pairing names `{0}`, which is not a dart of any vertex")]
    UnknownDartInPairing(String),
    /// The pairing assigns two different partners to the same dart.
    #[error("dart `{0}` is assigned more than one reversal partner")]
    ConflictingPairing(String),
}

/// Rejections raised when relabelling darts by an explicit permutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelabelError {
    /// The supplied map is not a bijection on `0..dart_count`.
    #[error("relabelling is not a bijection on 0..{expected} darts")]
    NotABijection { expected: usize },
}

/// Rejections raised by the curve decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    /// Some vertex has odd degree or degree below four, so the
    /// straight-ahead successor rule is undefined there.
    #[error("vertex {vertex} has degree {degree}; curve traversal needs every degree even and at least 4")]
    NotDecorated { vertex: usize, degree: usize },
}

/// Rejections raised by canonical-form computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    /// Canonical codes are rooted traversals, so they only cover one component.
    #[error("graph is disconnected; canonical codes are defined per component")]
    Disconnected,
}

/// Rejections raised by the exhaustive census.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    /// The requested vertex count exceeds the configured ceiling.
    #[error("census over {vertices} vertices exceeds the limit of {limit} (set FATGRAPH_ENUM_LIMIT to raise it)")]
    TooLarge { vertices: usize, limit: usize },
    /// A census needs at least one vertex.
    #[error("census needs at least one vertex")]
    EmptyCensus,
}

/// Rejections raised by the named constructions and the connected sum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// The requested boundary count is below the family's minimum.
    #[error("family `{family}` needs k >= {min}, got {k}")]
    KTooSmall {
        family: &'static str,
        min: usize,
        k: usize,
    },
    /// Genus 2 with a single boundary component is not realizable here.
    #[error("no filling pair is constructed for genus 2 with one boundary component")]
    Excluded21,
    /// Even genus with one boundary component is outside the recursion's domain.
    #[error("no filling pair is constructed for even genus {genus} with one boundary component")]
    EvenGenusKOne { genus: usize },
    /// Filling pairs on a closed surface need genus at least 2.
    #[error("filling pairs need genus >= 2, got {genus}")]
    GenusTooSmall { genus: usize },
    /// The graph is not labelled the way the connected sum expects.
    #[error("graph is not normally labelled: {0}")]
    BadAnchor(String),
    /// The graph does not decompose into exactly two simple curves.
    #[error("graph is not a filling pair: {0}")]
    NotPair(String),
    /// A boundary walk does not match any rewrite rule at the anchor.
    #[error("boundary rewrite does not apply: {0}")]
    RuleNotApplicable(String),
}

/// Rejections raised while reading or writing graph JSON.
#[derive(Debug, Error)]
pub enum IoError {
    /// The input is not syntactically valid JSON of the expected shape.
    #[error("parse error: {0}")]
    ParseError(String),
    /// The JSON parsed but does not describe a valid graph.
    #[error("validation error: {0}")]
    ValidationError(#[from] BuildError),
    /// The graph's dart names do not fit the `stem+` / `stem-` format.
    #[error("cannot serialize: {0}")]
    Unrepresentable(String),
}

/// Umbrella error for the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Relabel(#[from] RelabelError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    File(String),
}

fn build_kind(e: &BuildError) -> &'static str {
    match e {
        BuildError::EmptyGraph => "EmptyGraph",
        BuildError::DuplicateDart(_) => "DuplicateDart",
        BuildError::UnpairedDart(_) => "UnpairedDart",
        BuildError::FixedPointInPairing(_) => "FixedPointInPairing",
        BuildError::UnknownDartInPairing(_) => "UnknownDartInPairing",
        BuildError::ConflictingPairing(_) => "ConflictingPairing",
    }
}

impl Error {
    /// Stable machine-readable tag for the concrete error variant. Wrappers
    /// are transparent: a validation failure inside a file read reports the
    /// underlying build diagnostic.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Build(e) => build_kind(e),
            Error::Relabel(RelabelError::NotABijection { .. }) => "NotABijection",
            Error::Curve(CurveError::NotDecorated { .. }) => "NotDecorated",
            Error::Iso(IsoError::Disconnected) => "Disconnected",
            Error::Census(e) => match e {
                CensusError::TooLarge { .. } => "TooLarge",
                CensusError::EmptyCensus => "EmptyCensus",
            },
            Error::Family(e) => match e {
                FamilyError::KTooSmall { .. } => "KTooSmall",
                FamilyError::Excluded21 => "Excluded21",
                FamilyError::EvenGenusKOne { .. } => "EvenGenusKOne",
                FamilyError::GenusTooSmall { .. } => "GenusTooSmall",
                FamilyError::BadAnchor(_) => "BadAnchor",
                FamilyError::NotPair(_) => "NotPair",
                FamilyError::RuleNotApplicable(_) => "RuleNotApplicable",
            },
            Error::Io(e) => match e {
                IoError::ParseError(_) => "ParseError",
                IoError::ValidationError(inner) => build_kind(inner),
                IoError::Unrepresentable(_) => "Unrepresentable",
            },
            Error::File(_) => "FileError",
        }
    }
}
