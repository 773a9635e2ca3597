//! Étale cohomology with coefficients in the units sheaf of a toric variety,
//! computed exactly from its fan.
//!
//! The crate is layered bottom-up:
//!
//! * [`intlinalg`]: arbitrary-precision integer matrices, Smith normal form,
//!   kernels, saturations, cokernels and homology.
//! * [`fan`]: fans as primitive rays plus maximal cones, the JSON fan file
//!   format, structural validation, and a few standard fans.
//! * [`toric`]: the Čech complex of the support-function presheaf and the
//!   groups `H⁰`, `Cl`, `Pic`, `H²(K/X, G_m)`, `B(X̃)` and `H²(X, G_m)`.
//! * [`cli`]: the `toric-brauer` command-line front end.
//!
//! ```
//! use toric_brauer::fan::standard_fan;
//! use toric_brauer::toric::cohomological_brauer;
//!
//! let p2 = standard_fan("projective", &[2]).unwrap();
//! let report = cohomological_brauer(&p2).unwrap();
//! assert_eq!(report.picard.to_string(), "Z");
//! assert_eq!(report.h2.to_string(), "0");
//! ```

pub mod bigint_serde;
pub mod cli;
pub mod fan;
pub mod intlinalg;
pub mod toric;

pub use fan::{Cone, Fan, FanError, RayVector};
pub use intlinalg::{FinAbGroup, IntMatrix, LinalgError, SmithForm};
pub use num_bigint::BigInt;
pub use toric::{BrauerGroup, CohomologyReport, H2Group, ToricError};
