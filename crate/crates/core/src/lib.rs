//! Generating functions of labeled binary trees by ascent/descent statistics,
//! their symmetric-function expansions and the combinatorics behind them.

pub mod arrangements;
pub mod combinatorics;
pub mod error;
pub mod gamma;
pub mod genfun;
pub mod nested;
pub mod pathtree;
pub mod symfunc;
pub mod trees;
pub mod verify;
pub mod weightpoly;

pub use combinatorics::{Composition, DyckPath, IntPartition, Permutation};
pub use arrangements::ArrangementKind;
pub use error::{Error, Result};
pub use gamma::GammaVector;
pub use symfunc::{Basis, PCombination, RibbonSum, SymFunc};
pub use pathtree::{LabeledLatticePath, OmegaTree, PathTreeSequence};
pub use trees::{LabeledTree, Step, TreeShape};
pub use weightpoly::{AbgdExpr, Gen, Monomial, RatPoly, WeightPoly};
