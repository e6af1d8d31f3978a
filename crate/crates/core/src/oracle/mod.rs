//! Independent checks on the enumerator: an exhaustive count over all
//! assignments, and coset enumeration of computed stabilizers.

mod brute;
mod todd_coxeter;

pub use brute::{brute_force_classes, BruteCounts, BRUTE_MAX_INDEX};
pub use todd_coxeter::{default_max_cosets, todd_coxeter, TcResult, TcStatus};

use serde::Serialize;

use crate::enumerator::{canonical_form, TransitiveRep};
use crate::error::Result;
use crate::stabilizer::{build_coset_table, schreier_generators};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase", tag = "verdict", content = "index")]
pub enum Verdict {
    /// Coset enumeration closed at the expected index and induced an
    /// equivalent representation.
    Verified,
    /// Enumeration closed, but at a different index or on an inequivalent
    /// representation.
    Refuted(usize),
    /// The coset budget ran out.
    Inconclusive,
}

/// Runs coset enumeration on the simplified stabilizer generators of `rep`.
pub fn verify_class(rep: &TransitiveRep<'_>, max_cosets: usize) -> Result<Verdict> {
    let pres = rep.presentation();
    let gens = schreier_generators(&build_coset_table(rep), pres);
    let result = todd_coxeter(pres, &gens.simplified, max_cosets);
    let Some(index) = result.index() else {
        return Ok(Verdict::Inconclusive);
    };
    if index != rep.degree() {
        return Ok(Verdict::Refuted(index));
    }
    let induced = result
        .induced_assignment()
        .expect("closed enumeration induces an assignment");
    if canonical_form(&induced)? == canonical_form(rep.assignment())? {
        Ok(Verdict::Verified)
    } else {
        Ok(Verdict::Refuted(index))
    }
}
