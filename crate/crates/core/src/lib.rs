//! Exact construction and verification of bent functions over GF(2^n).
//!
//! Field arithmetic lives in [`field`], truth tables and spectra in
//! [`boolfun`], the choice of inner product in [`pairing`]. Secondary
//! constructions `f + F(phi)` with their duals are in [`constructions`],
//! concrete Gold and Maiorana-McFarland instances in [`families`], and
//! parameter searches and oracles in [`search`].

pub mod boolfun;
pub mod constructions;
pub mod error;
pub mod families;
pub mod field;
pub mod format;
pub mod gf2;
pub mod pairing;
pub mod search;

pub use boolfun::{AnfForm, BooleanFunction, VectorialFunction, WalshSpectrum};
pub use constructions::{ConstructionReport, PrCertificate, SideCondition};
pub use error::{Error, Result};
pub use families::{GoldParams, MMParams, Permutation};
pub use field::{FieldElement, FieldSpec};
pub use pairing::Pairing;
pub use search::{EaFingerprint, MuMode, MuSearchSpec};
