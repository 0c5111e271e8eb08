//! Formal automorphic calculus: cuspidal symbols on GL(2) and their
//! symmetric powers, isobaric sums, Rankin–Selberg expansion, pole orders
//! at `s = 1`, and the cuspidality decision for `π ⊠ sym²(π')`.
//!
//! Equivalences between symbols built on different base forms are not
//! computable from the symbols; they come from a [`FactLedger`] or from a
//! small set of structural rules, and anything else is reported as missing.

/// Symbols serialize as their rendered form, which is also what the text
/// output shows.
macro_rules! serialize_as_display {
    ($($t:ty),*) => {$(
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}
use serialize_as_display;

mod chars;
mod cuspidality;
mod engine;
mod facts;
mod symbols;

pub use chars::{CharGen, CharSymbol, Triviality};
pub use cuspidality::{
    both_routes, decide_cuspidality, decide_cuspidality_via_poles, galois_pole_check, scenario_matrix,
    sym_power_generators, type_template, verify_sym_power_generators, Generator, Scenario, Verdict, VerdictKind,
    MATRIX_TYPES,
};
pub use engine::{Engine, PoleOrder, Restriction};
pub use facts::{Fact, FactLedger, Missing, Truth};
pub use symbols::{base_change_name, induced_name, Atom, BaseForm, Constituent, Context, CuspType, IsobaricExpr};
