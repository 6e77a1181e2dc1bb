//! Omega-automata learning toolkit.
//!
//! This crate implements passive learning of omega-regular languages from
//! ultimately periodic examples, together with the supporting machinery:
//! acceptor semantics for the six classical acceptance conditions (Büchi,
//! coBüchi, Parity, Rabin, Streett, Muller), SCC decompositions and
//! decreasing forests, polynomial inclusion/equivalence deciders, right
//! congruence computation, membership tests for the informative classes
//! IB/IC/IP/IR/IS/IM, characteristic-sample construction, and the passive
//! learners themselves.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here can be shared freely between threads. With
//! the `parallel` feature (on by default) a few independent inner loops run
//! on rayon; [`set_parallel_enabled`] switches them back to sequential at
//! runtime, which the bench suite uses to compare both modes.

pub mod acceptor;
pub mod charsample;
pub mod congruence;
pub mod decide;
pub mod hard;
pub mod learner;
pub mod oracle;
mod par;
#[cfg(feature = "random")]
pub mod random;
pub mod scc;
pub mod words;

pub use acceptor::{AcceptanceCondition, Acceptor, AcceptorType, Automaton, StateId, StateSet};
pub use decide::{Equivalence, InclusionVerdict};
pub use learner::{AcceptorClass, LearnerOutput};
pub use par::{parallel_enabled, set_parallel_enabled};
pub use words::{Alphabet, FiniteWord, LabeledExample, Sample, UpWord};

use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("words belong to different alphabets")]
    AlphabetMismatch,
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("the period of an ultimately periodic word must be non-empty")]
    EmptyPeriod,
    #[error("alphabet must be non-empty and free of duplicate symbols")]
    InvalidAlphabet,
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("automaton is nondeterministic at state {state:?} on symbol {symbol:?}")]
    Nondeterministic { state: String, symbol: char },
    #[error("automaton is incomplete at state {state:?} on symbol {symbol:?}")]
    Incomplete { state: String, symbol: char },
    #[error("state {0:?} is unreachable")]
    UnreachableState(String),
    #[error("acceptance condition references state index {0} outside the automaton")]
    ConditionOutOfRange(usize),
    #[error("parity coloring must assign a color to every state")]
    PartialColoring,
    #[error("expected a {expected} acceptor, found {found}")]
    TypeMismatch { expected: &'static str, found: &'static str },
    #[error("no supported conversion from {from} to {to}")]
    UnsupportedConversion { from: &'static str, to: &'static str },
    #[error("inclusion between {left} and {right} is not supported")]
    UnsupportedTypeMix { left: &'static str, right: &'static str },
    #[error("example {0} already carries the opposite label")]
    InconsistentSample(String),
    #[error("{0:?} is not an SCC of the automaton")]
    NotAnScc(String),
    #[error("SCC {0:?} is not reachable")]
    SccUnreachable(String),
    #[error("state set is not a node of the forest")]
    NotAForestNode,
    #[error("cannot merge a root node of a forest")]
    MergeRoot,
    #[error("acceptor is not informative (its automaton is not the right congruence automaton)")]
    NotInformative,
    #[error("brute-force bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
