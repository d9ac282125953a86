use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand dimensions do not agree.
    DimensionMismatch { expected: usize, found: usize },
    /// A matrix or vector length is not a power of two.
    NotPowerOfTwo(usize),
    /// A qubit position outside `1..=n`.
    QubitOutOfRange { qubit: usize, n: usize },
    DuplicateQubit(usize),
    NotHermitian { deviation: f64 },
    NotUnitary { deviation: f64 },
    NotNormalized { norm: f64 },
    /// A scalar parameter outside its admissible interval.
    OutOfRange { name: &'static str, value: f64 },
    TooFewQubits { n: usize, min: usize },
    TooManyQubits { n: usize, max: usize },
    /// Ancilla polarization too close to zero for the readout inversion.
    IllConditioned { p: f64 },
    /// The witness is non-negative on its own target, so no detection
    /// threshold exists.
    Undetectable { target_expectation: f64 },
    InvalidGate(String),
    /// A derived identity failed to hold within tolerance.
    IdentityViolation { what: &'static str, deviation: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotPowerOfTwo(d) => write!(f, "dimension {d} is not a power of two"),
            Error::QubitOutOfRange { qubit, n } => {
                write!(f, "qubit {qubit} out of range 1..={n}")
            }
            Error::DuplicateQubit(q) => write!(f, "qubit {q} listed more than once"),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (deviation {deviation:e})")
            }
            Error::NotUnitary { deviation } => {
                write!(f, "matrix is not unitary (deviation {deviation:e})")
            }
            Error::NotNormalized { norm } => write!(f, "state is not normalized (norm {norm})"),
            Error::OutOfRange { name, value } => write!(f, "{name} = {value} is out of range"),
            Error::TooFewQubits { n, min } => write!(f, "n = {n} qubits, need at least {min}"),
            Error::TooManyQubits { n, max } => write!(f, "n = {n} qubits, at most {max} supported"),
            Error::IllConditioned { p } => write!(
                f,
                "ancilla polarization p = {p} is too close to 1/2 for the readout to be inverted"
            ),
            Error::Undetectable { target_expectation } => write!(
                f,
                "witness expectation on its own target is {target_expectation}, not negative"
            ),
            Error::InvalidGate(msg) => write!(f, "invalid gate: {msg}"),
            Error::IdentityViolation { what, deviation } => {
                write!(f, "identity `{what}` violated by {deviation:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
