//! Exact cohomology computations for Bott towers and the combinatorics of
//! their Bott diagrams.
//!
//! A Bott tower is described by a strictly lower-triangular integer matrix
//! ([`BottMatrix`]). From it we get the cohomology ring presentation
//! ([`RingPresentation`]), the total Chern class, the Z-triviality test with
//! its normalized generators ([`ZBasis`]), and, for Z-trivial towers, the
//! Bott diagram: a rooted forest with positive edge labels
//! ([`BottDiagram`]). Two Z-trivial towers are biholomorphic exactly when
//! their diagrams are isomorphic, which [`CanonicalCode`] decides.
//!
//! The [`deck`] module rebuilds forests from their root-deleted cards, and
//! [`census`] lists all diagrams of a given size.

pub mod census;
pub mod cli;
pub mod coh_ring;
pub mod deck;
pub mod error;
pub mod forest;
pub mod text;
pub mod tower;

pub use census::{enumerate_labelled, enumerate_shapes};
pub use coh_ring::{Monomial, RawMonomial, RingElement, RingPresentation, MAX_GENERATORS};
pub use deck::{count_copies, make_deck, reconstruct, Card, Deck, Reconstruction};
pub use error::{Error, NotZTrivial, NotZTrivialReason, ParseError, Result};
pub use forest::{BottDiagram, CanonicalCode, Label};
pub use text::{format_diagram_stream, parse_diagram_stream};
pub use tower::{biholomorphic, product_chern, tower_of_diagram, BottMatrix, ZBasis};
