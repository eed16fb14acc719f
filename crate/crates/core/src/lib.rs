//! Exact local reduction data for elliptic curves with complex
//! multiplication.
//!
//! The crate computes Kodaira types, minimal models, and component groups
//! of elliptic curves over Q and over completions of imaginary quadratic
//! fields, checks computed types against the CM classification tables,
//! instantiates the admissible genus-2 reduction types under CM
//! constraints, and evaluates exact local torsion bounds.
//!
//! Everything is exact: field elements are `(a + b*sqrt(D))/c` over big
//! integers, valuations are integers, residue fields are enumerated.
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! blocks compile and run as part of `cargo test --doc`.

pub mod cmclass;
pub mod corpus;
pub mod error;
pub mod field;
pub mod genus2;
pub mod kodaira;
pub mod place;
pub mod residue;
pub mod tate;
pub mod torsion;
pub mod weierstrass;

pub use error::{Error, Result};
pub use field::{FieldElement, QuadraticField};
pub use kodaira::{geometric_component_group, AbelianGroup, KodairaType};
pub use place::{LocalPlace, Splitting, Valuation};
pub use tate::{minimal_model, tate_algorithm, LocalData};
pub use weierstrass::{DerivedQuantities, Transform, WeierstrassModel};

// The book's code blocks double as doctests so the guide cannot drift from
// the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(fields_and_places, "../../../book/src/fields-and-places.md");
    chapter!(weierstrass_models, "../../../book/src/weierstrass-models.md");
    chapter!(reduction_types, "../../../book/src/reduction-types.md");
    chapter!(cm_tables, "../../../book/src/cm-tables.md");
    chapter!(genus2_types, "../../../book/src/genus2-types.md");
    chapter!(torsion_bounds, "../../../book/src/torsion-bounds.md");
}
