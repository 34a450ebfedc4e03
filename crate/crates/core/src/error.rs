use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("submodule is not saturated at t (non-unit elementary divisor)")]
    NotSaturated,
    #[error("submodule does not lie in the radical of the form")]
    NotInRadical,
    #[error("complement does not split the lattice at t")]
    BadComplement,
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("imaginary root has no coroot")]
    ImaginaryRoot,
    #[error("weight is not at the critical level (level must equal -h^v = {crit})")]
    NotCritical { crit: String },
    #[error("root is not integral for this weight (pairing {0})")]
    NotIntegral(String),
    #[error("weight is not below the base weight")]
    NotBelow,
    #[error("weight lies outside the truncation box")]
    OutOfBox,
    #[error("weight classification is general: no formula in scope")]
    General,
    #[error("operation requires a subgeneric weight")]
    NotSubgeneric,
    #[error("oracle does not support series {0}")]
    UnsupportedSeries(String),
    #[error("weight is not an imaginary shift lambda - n*delta")]
    NotImaginaryShift,
    #[error("the restricted construction needs a deformation that vanishes on c and d")]
    DeformationNotRestricted,
    #[error("restricted form degenerates identically at weight {0}")]
    InfiniteOrder(String),
    #[error("down operator self-check failed: {0}")]
    DownMismatch(String),
    #[error("rank mismatch between {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
