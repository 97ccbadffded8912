use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building fields, codes and QSC pairs.
///
/// Precondition failures (bad parameters, invalid selections) are ordinary
/// errors. [`Error::Verification`] is different: it means two independent
/// computations disagreed, which points at a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not a power of an odd prime")]
    NotPrimePower(u64),
    #[error("modulus must be monic with degree at least 1")]
    BadModulus,
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("coefficient {value} is out of range for GF({p})")]
    CoefficientRange { value: u64, p: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("reciprocal polynomial needs a nonzero constant term")]
    ZeroConstantTerm,
    #[error("{0}")]
    NotDivisor(String),
    #[error("no element of order {n}: {n} does not divide {group_order}")]
    NoRootOfUnity { n: u64, group_order: String },
    #[error("element is not in the embedded subfield")]
    NotInSubfield,
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("q = {0} is not congruent to 1 mod 4")]
    QNotOneModFour(u64),
    #[error("invalid length exponent n = {0}")]
    InvalidLength(u32),
    #[error("invalid selection: {0}")]
    InvalidSelection(String),
    #[error("invalid augmentation: {0}")]
    InvalidAugmentation(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("degenerate code [{n},{k}]")]
    DegenerateCode { n: usize, k: usize },
    #[error("chain condition fails: {0}")]
    ChainCondition(String),
    #[error("misalignment c_l + c_r = {total} must be below ord(f) = {order}")]
    Tolerance { total: u64, order: u64 },
    #[error("internal verification mismatch: {0}")]
    Verification(String),
}

impl Error {
    /// True when the error signals disagreement between independent checks.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Verification(_))
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotOddPrime(_) => "not_odd_prime",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::BadModulus => "bad_modulus",
            Error::ReducibleModulus(_) => "reducible_modulus",
            Error::CoefficientRange { .. } => "coefficient_range",
            Error::ZeroInverse => "zero_inverse",
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch => "field_mismatch",
            Error::ZeroConstantTerm => "zero_constant_term",
            Error::NotDivisor(_) => "not_divisor",
            Error::NoRootOfUnity { .. } => "no_root_of_unity",
            Error::NotInSubfield => "not_in_subfield",
            Error::FieldTooLarge(_) => "field_too_large",
            Error::QNotOneModFour(_) => "q_not_one_mod_four",
            Error::InvalidLength(_) => "invalid_length",
            Error::InvalidSelection(_) => "invalid_selection",
            Error::InvalidAugmentation(_) => "invalid_augmentation",
            Error::InvalidConfig(_) => "invalid_config",
            Error::DegenerateCode { .. } => "degenerate_code",
            Error::ChainCondition(_) => "chain_condition",
            Error::Tolerance { .. } => "tolerance",
            Error::Verification(_) => "verification",
        }
    }
}
