use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("malformed field selector `{0}` (expected `q` or `gf:<p>`)")]
    MalformedFieldSpec(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements of {0} and {1} cannot be combined")]
    FieldMismatch(String, String),

    // shapes
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("dimension {0} outside the supported range 1..=16")]
    DimOutOfRange(usize),
    #[error("index {index} outside 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("multi-index {0:?} is not strictly increasing")]
    NotIncreasing(Vec<usize>),
    #[error("cannot mix primal and dual multivectors")]
    DualMismatch,
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix rows")]
    RaggedMatrix,
    #[error("expected homogeneous grade {expected}, found {found:?}")]
    GradeMismatch { expected: usize, found: Option<usize> },
    #[error("multivector is not homogeneous")]
    NotHomogeneous,
    #[error("lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("empty input")]
    EmptyInput,

    // linear algebra
    #[error("singular matrix")]
    SingularMatrix,
    #[error("{cols} columns exceed ambient dimension {dim}")]
    TooManyColumns { cols: usize, dim: usize },
    #[error("vectors are not complementary (their union is not a basis)")]
    NotComplementary,

    // blades and duality
    #[error("cannot factor the zero multivector")]
    ZeroInput,
    #[error("multivector is not a blade")]
    NotABlade,
    #[error("multivector is already dual")]
    AlreadyDual,
    #[error("multivector is not dual")]
    NotDual,
    #[error("bracket needs grade {dim}, found grade {found:?}")]
    WrongGrade { dim: usize, found: Option<usize> },
    #[error("{have} factors cannot reach dimension {dim}")]
    TooFewVectors { have: usize, dim: usize },
    #[error("factor list is dependent")]
    DependentFactors,
    #[error("input vectors are dependent")]
    DependentInput,

    // affine
    #[error("total weight is zero")]
    ZeroWeight,
    #[error("vectors are not proportional")]
    NotProportional,
    #[error("ratio denominator is the zero vector")]
    ZeroDenominatorVector,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("degenerate line: the two points coincide")]
    DegenerateLine,

    // projective
    #[error("zero vector has no projective meaning")]
    ZeroVector,
    #[error("points do not form a projective frame")]
    NotAFrame,
    #[error("point lies in the projection center")]
    PointInCenter,
    #[error("configuration generator exhausted after {0} attempts")]
    GeneratorExhausted(usize),

    // metric
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is degenerate")]
    Degenerate,
    #[error("sign must be +1 or -1")]
    BadSign,
    #[error("star of a blade failed to be a blade")]
    StarNotBlade,
    #[error("operation requires dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },

    // text input
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
