use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse cyclotomic value {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid representation {label}: {reason}")]
    InvalidRep { label: String, reason: String },
    #[error("multiplicity of {label} is not a nonnegative integer: {value}")]
    NonIntegerMultiplicity { label: String, value: String },
    #[error("representation {label} is not scalar on central element {element}")]
    NotScalarOnCenter { label: String, element: usize },
    #[error("unknown irreducible label {0}")]
    UnknownLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("invalid label {0}")]
    InvalidLabel(String),
    #[error("representation has no constituents")]
    EmptyRep,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("label set is not closed under fusion and conjugation: {0}")]
    NotClosed(String),
    #[error("chain product of classes {0} and {1} depends on the representatives")]
    IllDefinedProduct(usize, usize),
    #[error("unknown chain class {0}")]
    UnknownClass(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error("chain action has no permutation for class {0}")]
    MissingClass(String),
    #[error("permutation {index} is not a bijection of a {size}-point spectrum")]
    NotAPermutation { index: usize, size: usize },
    #[error("spectrum must have at least one point")]
    EmptySpectrum,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements belong to different families")]
    FamilyMismatch,
    #[error("generator index out of range: member {member}, index {index}")]
    IndexOutOfRange { member: usize, index: usize },
    #[error("family has no group matrices for the group action")]
    NoMatrixData,
    #[error("unknown isotypical class {0}")]
    UnknownClass(String),
    #[error("determinant of member {0} is not trivial")]
    DeterminantNotTrivial(String),
    #[error("no exact square root available for normalization constant {0}")]
    NormalizationNotRational(u64),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
}
