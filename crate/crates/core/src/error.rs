use thiserror::Error;

/// Errors raised by the library. Internal invariant violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("slot {slot} out of range for {arity} inputs at {path}")]
    SlotOutOfRange {
        slot: usize,
        arity: usize,
        path: String,
    },
    #[error("type mismatch at {path}: expected box size {expected}, found {found}")]
    TypeMismatch {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("type signatures differ: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("ill-formed generator {0}")]
    BadGenerator(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unknown relation family `{0}`")]
    UnknownFamily(String),
    #[error("backend `{0}` has no morphism-level evaluation")]
    NoMorphismEvaluation(String),
    #[error("fusion data: {0}")]
    FusionData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
