//! The non-commutative Gauss algorithm for groups given by consistent
//! polycyclic presentations, finite or infinite.
//!
//! Given generators of a subgroup `U` of a polycyclic group `G`, this crate
//! computes an induced generating sequence (igs) of `U`. From an igs one reads
//! off `|U|` and `[G:U]`, decides membership by sifting, and, after reducing to
//! the canonical igs, decides whether two subgroups are equal.
//!
//! Generator indices and depths are 1-based throughout, matching the usual
//! notation `g_1, ..., g_n` and the `.pcp` file format.
//!
//! ```
//! use std::sync::Arc;
//! use pcgauss::{igs_by_generators, Cardinal, Element, PcPresentation};
//!
//! let d8 = Arc::new(PcPresentation::parse("pcp 3\norders 2 2 2\nconj 2 1 2 3\npower 2 3\n").unwrap());
//! let g2 = Element::generator(&d8, 2).unwrap();
//! let igs = igs_by_generators(&d8, &[g2]).unwrap();
//! assert_eq!(igs.order(), Cardinal::from(4u32));
//! assert_eq!(igs.index(), Cardinal::from(2u32));
//! ```

pub mod cardinal;
pub mod cli;
pub mod collect;
pub mod error;
pub mod igs;
pub mod oracle;
pub mod pcpres;

pub use cardinal::Cardinal;
pub use collect::{collect, Element, ElementStats};
pub use error::Error;
pub use igs::{add_gen_to_pigs, igs_by_generators, subgroups_equal, verify_igs, Igs, PartialIgs};
pub use pcpres::{load_presentation, validate_inverse_tails, PcPresentation, Tail, Word};

pub type Result<T, E = Error> = std::result::Result<T, E>;
