//! Linear and cyclic permutation statistics, shuffle and cyclic-shuffle
//! enumeration, brute-force shuffle-compatibility checkers, a formal
//! quasisymmetric-function engine and exact power-series identities.

pub mod compat;
pub mod cyc;
pub mod error;
pub mod perm;
pub mod qsym;
pub mod series;
pub mod shuffle;
pub mod util;
pub mod verify;

pub use compat::{CompatReport, EquivReport, Verdict};
pub use cyc::{CycComposition, CycPerm, CycStatId};
pub use error::{Error, Result};
pub use perm::{Composition, Multiset, Perm, StatId, StatValue, Symmetry};
pub use qsym::{PkAlgElem, PolyKVars, QSymElem, Rational};
pub use series::{PSeqElem, QPoly, SeriesElem};
pub use shuffle::Distribution;
pub use verify::{DimsReport, TheoremReport};
