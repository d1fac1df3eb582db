use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("strand count must be at least 1")]
    EmptyDiagram,
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("fusion label {label} out of range for level {level}")]
    LabelOutOfRange { label: String, level: u32 },
    #[error("level must be positive")]
    InvalidLevel,
    #[error("inadmissible basis state encountered at site {site}")]
    InadmissibleState { site: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("site {site} outside lattice of {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },
    #[error("separation path of {distance} steps from site {site} wraps the chain")]
    WrapAround { site: usize, distance: usize },
    #[error("lattices differ")]
    LatticeMismatch,
    #[error("{0} Majoranas exceed the dense-oracle cap of {1}")]
    SizeCap(usize, usize),
    #[error("Majorana count must be even, got {0}")]
    OddMajoranaCount(usize),
    #[error("ground space is {0}-fold degenerate")]
    DegenerateGroundSpace(usize),
    #[error("zero mode in the single-particle spectrum")]
    ZeroMode,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
