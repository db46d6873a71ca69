//! Rooted planar maps, plane bipolar orientations, transversal structures,
//! and the bijections linking them.
//!
//! The crate provides:
//!
//! - a rotation-system core for rooted planar maps with canonical forms and
//!   a line-oriented text format ([`map`], [`codec`]);
//! - isomorph-free exhaustive enumeration of several map families at small
//!   sizes ([`enumerate`]);
//! - plane bipolar orientations with their local characterization, partial
//!   orders, N-patterns, and minimal (left-oriented-piece-free) elements
//!   ([`bipolar`]);
//! - transversal structures on irreducible triangulations with alternating
//!   4-cycles and minimal elements ([`transversal`]);
//! - the bijections `phi`/`psi` between plane bipolar orientations and
//!   N-avoiding plane bipolar posets, `phi_prime`/`psi_prime` onward to
//!   N-avoiding transversal structures, and the induced map bijections `f1`
//!   (non-separable maps to irreducible triangulations) and the recursive
//!   `f2` (loopless maps to triangulations) ([`bijections`], [`decompose`]);
//! - exact counting formulas for the Baxter and related sequences
//!   ([`count`]), and a verification suite that checks every claimed
//!   identity exhaustively at desk scale ([`verify`]).

pub mod bijections;
pub mod bipolar;
pub mod codec;
pub mod count;
pub mod decompose;
pub mod enumerate;
pub mod fixtures;
pub mod map;
pub mod transversal;
pub mod verify;

pub use map::{alpha, darts_of_edge, edge_of, Dart, EdgeId, FaceId, MapError, RootedMap, VertexId};

// Run the guide's code blocks as doctests so the book stays in sync with
// the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(ch_intro, "../../../book/src/introduction.md");
    chapter!(ch_maps, "../../../book/src/rooted-maps.md");
    chapter!(ch_enumeration, "../../../book/src/enumeration.md");
    chapter!(ch_bipolar, "../../../book/src/bipolar-orientations.md");
    chapter!(ch_transversal, "../../../book/src/transversal-structures.md");
    chapter!(ch_bijections, "../../../book/src/bijections.md");
    chapter!(ch_map_bijections, "../../../book/src/map-bijections.md");
    chapter!(ch_counting, "../../../book/src/counting.md");
}
