//! Numerical toolkit for de Rham-type conjugate equations between two
//! iterated function systems: given contraction families `{f_i}` on `X`
//! and `{g_i}` on `Y`, the unique bounded solution of
//! `φ(f_i(x)) = g_i(φ(x))` is constructed, validated, evaluated with
//! certified error bounds, and analyzed (invariant measures, Hölder
//! thresholds, dimension formulas, Hausdorff-distance stability).

pub mod config;
pub mod conjugate;
pub mod csv;
pub mod error;
pub mod ifs;
pub mod map;
pub mod measure;
pub mod point;
pub mod regularity;
pub mod stability;
pub mod word;
pub mod zoo;

pub use conjugate::{
    CompatStatus, CompatibilityReport, ConjugateSystem, GridRow, SystemKind, Witness,
};
pub use error::{Error, Result};
pub use ifs::{Domain, IfSystem};
pub use map::{MapForm, MapSpec};
pub use point::Point;
pub use word::Word;
