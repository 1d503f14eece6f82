//! Crate-wide error type.

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The zero hypermatrix is representable but is not a projective state.
    #[error("the zero state does not belong to any orbit")]
    ZeroState,

    #[error(
        "unsupported shape {0:?}: classification covers 2x2x2, 2x2x3 and 2x3x3 \
         (dimension checks also accept 2x2x(n+1) for n >= 1)"
    )]
    UnsupportedShape([usize; 3]),

    #[error("{0}")]
    Dimension(String),

    #[error("unknown orbit label `{label}` for format {shape:?}")]
    UnknownLabel { shape: [usize; 3], label: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// Degree bound exceeded in a verification sweep; raised explicitly
    /// instead of silently truncating.
    #[error("degree {requested} exceeds the configured bound {bound}")]
    DegreeBound { requested: u32, bound: u32 },

    #[error("malformed transvection plan: {0}")]
    Plan(String),
}
