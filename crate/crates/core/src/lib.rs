//! Exact computations on finite group presentations: Fox calculus, echelon
//! presentations, rational cup products of the presentation 2-complex,
//! integral first homology, and subgroup presentations coming from finite
//! quotients.
//!
//! ```
//! use fpcup::{cup_nullity, h1_integral, Presentation};
//!
//! let torus = Presentation::parse("gens: a b\nrel: abAB").unwrap();
//! let cup = cup_nullity(&torus).unwrap();
//! assert_eq!((cup.b, cup.rank, cup.nullity), (2, 1, 0));
//! assert_eq!(h1_integral(&torus).to_string(), "Z^2");
//! ```

pub mod cup;
pub mod echelon;
pub mod error;
pub mod group_ring;
pub mod homology;
pub mod intlinalg;
pub mod sunada;
pub mod word;

pub use cup::{cup_matrix, cup_nullity, CupMatrix, CupSummary};
pub use echelon::{echelon_presentation, fox_jacobian, EchelonPresentation};
pub use error::{Error, ParseError};
pub use group_ring::{augmented_fox, double_fox, fox_derivative, GroupRingElement};
pub use homology::{h1_integral, HomologyReport};
pub use intlinalg::{IntMatrix, RatMatrix};
pub use word::{parse_word, Alphabet, Letter, Presentation, Word};
