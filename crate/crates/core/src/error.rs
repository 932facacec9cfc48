use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular (|det| = {det_abs:e})")]
    SingularMatrix { det_abs: f64 },

    #[error("matrix determinant {det_re} + {det_im}i is not 1")]
    NotUnimodular { det_re: f64, det_im: f64 },

    #[error("non-finite number in input")]
    NonFinite,

    #[error("operation not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("the identity fixes every point")]
    IdentityHasAllPoints,

    #[error("generator is parabolic or the identity")]
    ParabolicGenerator,

    #[error("generators share both fixed points")]
    SharedAxis,

    #[error("4γ/(β(f)β(g)) vanishes for distinct axes (a single shared fixed point)")]
    DegenerateParameters,

    #[error("geodesics share an endpoint")]
    SharedEndpoint,

    #[error("geodesic endpoints must be distinct")]
    DegenerateGeodesic,

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(&'static str),

    #[error("elliptic order must be at least 3, got {0}")]
    BadOrder(u32),

    #[error("no power m <= {cap} satisfies the bound")]
    CapExceeded { cap: u64 },
}

impl Error {
    /// Stable machine-readable name, used in the CLI's error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::NotUnimodular { .. } => "NotUnimodular",
            Error::NonFinite => "NonFinite",
            Error::NotApplicable(_) => "NotApplicable",
            Error::IdentityHasAllPoints => "IdentityHasAllPoints",
            Error::ParabolicGenerator => "ParabolicGenerator",
            Error::SharedAxis => "SharedAxis",
            Error::DegenerateParameters => "DegenerateParameters",
            Error::SharedEndpoint => "SharedEndpoint",
            Error::DegenerateGeodesic => "DegenerateGeodesic",
            Error::UnsupportedParameters(_) => "UnsupportedParameters",
            Error::BadOrder(_) => "BadOrder",
            Error::CapExceeded { .. } => "CapExceeded",
        }
    }
}
