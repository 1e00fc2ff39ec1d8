//! Error types for the whole crate.
//!
//! Each layer has its own enum so callers can match on exactly the failures
//! that layer can produce. Everything converts into [`Error`] for code that
//! spans layers (the CLI, the sweep driver).

use thiserror::Error;

/// Construction and order-theory failures on lattices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cover relation has a cycle through `{element}`")]
    CycleDetected { element: String },
    #[error("no unique {which} element: candidates {candidates:?}")]
    NoUniqueBound {
        which: &'static str,
        candidates: Vec<String>,
    },
    #[error("not a lattice: `{x}` and `{y}` have no unique {op}")]
    NotALattice { x: String, y: String, op: &'static str },
    #[error("elements `{lo}` and `{hi}` are not comparable")]
    NotComparable { lo: String, hi: String },
    #[error("unknown element `{name}`")]
    UnknownElement { name: String },
    #[error("duplicate element `{name}`")]
    DuplicateElement { name: String },
    #[error("element list is empty")]
    NoElements,
    #[error("family for independence check contains bottom")]
    BottomInFamily,
    #[error("group order {order} exceeds bound {bound}")]
    OrderBound { order: u64, bound: u64 },
    #[error("factor {factor} is not a prime power")]
    NotPrimePower { factor: u64 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// Failures while validating or combining linear morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("zero fiber {fiber:?} has no maximum element")]
    NoKernel { fiber: Vec<String> },
    #[error("map is not constant on kernel cosets: f({x}) != f({x} v {kernel})")]
    NotConstantOnKernelCosets { x: String, kernel: String },
    #[error("map does not restrict to an interval isomorphism above the kernel ({reason})")]
    NotIntervalIso { reason: String },
    #[error("`{x}` and `{x_prime}` are not a complement pair")]
    NotComplementPair { x: String, x_prime: String },
    #[error("domain/codomain mismatch: {0}")]
    DomainMismatch(String),
    #[error("morphism does not map [{lo},{hi}] into the requested codomain")]
    NotInvariant { lo: String, hi: String },
    #[error("value {value} outside codomain interval")]
    ValueOutsideCodomain { value: String },
    #[error("map must assign every domain element (got {got}, need {need})")]
    WrongArity { got: usize, need: usize },
}

/// Failures in monoid construction, congruences and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("morphism is not an endomorphism of the ambient lattice")]
    NotAnEndomorphism,
    #[error("set is not closed under composition: {i} . {j} missing")]
    NotClosed { i: usize, j: usize },
    #[error("shortcut congruence disagrees with the definition-faithful one on pair ({i},{j})")]
    ShortcutMismatch { i: usize, j: usize },
    #[error("quotient composition ill-defined on classes ({a},{b})")]
    IllDefined { a: usize, b: usize },
    #[error("addition table is not a semiring: {0}")]
    NotASemiring(String),
    #[error("relation is not a congruence: {0}")]
    NotACongruence(String),
}

/// A theorem-backed cross-check failed while its hypotheses held.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("equivalence violated in `{context}`: {detail}")]
pub struct EquivalenceViolation {
    pub context: &'static str,
    pub detail: String,
}

/// Input-format problems, with 1-based line numbers where available.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
    #[error("line {line}: {source}")]
    Lattice { line: usize, source: LatticeError },
    #[error("line {line}: {source}")]
    Morphism { line: usize, source: MorphismError },
}

/// Crate-wide error, used by the sweep driver and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Equivalence(#[from] EquivalenceViolation),
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A registered claim failed with its hypotheses met. This is the
    /// headline failure mode of the whole toolkit and is never downgraded.
    #[error("claim `{claim}` failed on lattice `{lattice}` (monoid {monoid}): {witness}")]
    TheoremViolated {
        claim: String,
        lattice: String,
        monoid: String,
        witness: String,
    },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
