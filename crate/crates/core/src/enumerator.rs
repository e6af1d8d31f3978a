//! Enumeration of transitive permutation representations and their grouping
//! into conjugacy classes.
//!
//! An index-`n` subgroup corresponds to a transitive homomorphism into `S_n`
//! (the subgroup is the stabilizer of point 0), and conjugate subgroups
//! correspond to representations that differ by a relabeling of the points.
//! So counting index-`n` subgroups up to conjugacy is counting transitive,
//! relator-satisfying assignments up to simultaneous `S_n` conjugation.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::assignment::{
    check_generator_count, conjugate_assignment, evaluate_word, is_transitive, Assignment,
};
use crate::error::{Error, Result};
use crate::perm::{symmetric_group, Perm, MAX_DEGREE};
use crate::presentation::Presentation;

/// Largest index the exhaustive oracle cross-checks.
pub const ORACLE_MAX_INDEX: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    /// The raw product space `S_n^k`.
    All,
    /// Assignments killing every relator.
    RelatorFiltered,
    /// Relator-satisfying and transitive.
    Transitive,
}

/// A transitive homomorphism from the presented group into `S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitiveRep<'p> {
    pres: &'p Presentation,
    assignment: Assignment,
}

impl<'p> TransitiveRep<'p> {
    pub fn new(pres: &'p Presentation, assignment: Assignment) -> Result<TransitiveRep<'p>> {
        check_generator_count(pres, &assignment)?;
        for (r, word) in pres.power_relators().iter().zip(pres.relators()) {
            if !evaluate_word(&r.base, &assignment)?
                .pow(r.exponent)
                .is_identity()
            {
                return Err(Error::RelatorNotSatisfied(pres.format_word(word)));
            }
        }
        if !is_transitive(&assignment) {
            return Err(Error::NotTransitive);
        }
        Ok(TransitiveRep { pres, assignment })
    }

    pub fn presentation(&self) -> &'p Presentation {
        self.pres
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn degree(&self) -> usize {
        self.assignment.degree()
    }
}

/// Isomorphism type of the image `π(G) ≤ S_n` of a transitive representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ImageType {
    Trivial,
    S2,
    Z3,
    S3,
    /// Klein four-group.
    V4,
    Z4,
    D4,
    A4,
    S4,
    /// Degree above 4; only the order is reported.
    Other {
        order: u64,
    },
}

impl fmt::Display for ImageType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageType::Trivial => f.write_str("1"),
            ImageType::S2 => f.write_str("S2"),
            ImageType::Z3 => f.write_str("Z3"),
            ImageType::S3 => f.write_str("S3"),
            ImageType::V4 => f.write_str("V"),
            ImageType::Z4 => f.write_str("Z4"),
            ImageType::D4 => f.write_str("D4"),
            ImageType::A4 => f.write_str("A4"),
            ImageType::S4 => f.write_str("S4"),
            ImageType::Other { order } => write!(f, "order-{order}"),
        }
    }
}

impl Serialize for ImageType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One conjugacy class of index-`n` subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass<'p> {
    pub rep: TransitiveRep<'p>,
    pub index: usize,
    pub image_type: ImageType,
    /// Number of relator-satisfying assignments conjugate to `rep`.
    pub labeled_orbit_size: usize,
}

fn check_index(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeCap(n));
    }
    Ok(())
}

struct Search<'a> {
    pres: &'a Presentation,
    candidates: Vec<Perm>,
    /// Relator positions whose generators are all assigned once generator
    /// `k` is.
    check_after: Vec<Vec<usize>>,
    filter: bool,
}

impl<'a> Search<'a> {
    fn new(pres: &'a Presentation, n: usize, filter: bool) -> Result<Search<'a>> {
        let mut check_after = vec![Vec::new(); pres.generator_count()];
        for (i, r) in pres.power_relators().iter().enumerate() {
            if let Some(k) = r.base.max_gen() {
                check_after[k].push(i);
            }
        }
        Ok(Search {
            pres,
            candidates: symmetric_group(n)?,
            check_after,
            filter,
        })
    }

    fn consistent(&self, images: &[Perm], gen: usize) -> bool {
        if !self.filter {
            return true;
        }
        self.check_after[gen].iter().all(|&i| {
            let r = &self.pres.power_relators()[i];
            let mut base = Perm::identity(images[0].degree()).expect("degree checked");
            for l in r.base.letters() {
                let img = images[l.gen()];
                base = if l.inverse {
                    base * img.inverse()
                } else {
                    base * img
                };
            }
            base.pow(r.exponent).is_identity()
        })
    }

    fn extend(&self, images: &mut Vec<Perm>, out: &mut Vec<Assignment>) {
        let gen = images.len();
        if gen == self.pres.generator_count() {
            out.push(Assignment::new(images.clone()).expect("common degree"));
            return;
        }
        for &p in &self.candidates {
            images.push(p);
            if self.consistent(images, gen) {
                self.extend(images, out);
            }
            images.pop();
        }
    }

    /// Depth-first search, split across workers at the first generator's
    /// image. Branch results are concatenated in candidate order, so the
    /// output is lexicographic regardless of scheduling.
    fn run(&self) -> Vec<Assignment> {
        if self.pres.generator_count() == 0 {
            return vec![Assignment::new(Vec::new()).expect("empty")];
        }
        self.candidates
            .par_iter()
            .map(|&first| {
                let mut out = Vec::new();
                let mut images = vec![first];
                if self.consistent(&images, 0) {
                    self.extend(&mut images, &mut out);
                }
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }
}

/// Assignments of degree `n` at the requested filtering stage, in
/// lexicographic order.
pub fn enumerate_candidates(
    pres: &Presentation,
    n: usize,
    stage: Stage,
) -> Result<Vec<Assignment>> {
    check_index(n)?;
    let search = Search::new(pres, n, stage != Stage::All)?;
    let mut out = search.run();
    if stage == Stage::Transitive {
        out.retain(is_transitive);
    }
    Ok(out)
}

/// Minimum of the `S_n`-conjugation orbit of `a`.
pub fn canonical_form(a: &Assignment) -> Result<Assignment> {
    let mut best = a.clone();
    for sigma in symmetric_group(a.degree())? {
        let c = conjugate_assignment(a, &sigma)?;
        if c < best {
            best = c;
        }
    }
    Ok(best)
}

/// Minimum over conjugation by permutations fixing point 0 only.
fn point_stabilizer_canonical(a: &Assignment, fixing: &[Perm]) -> Assignment {
    fixing
        .iter()
        .map(|sigma| conjugate_assignment(a, sigma).expect("same degree"))
        .min()
        .unwrap_or_else(|| a.clone())
}

/// Conjugacy classes of index-`n` subgroups, one per `S_n` orbit of
/// transitive representations, sorted by canonical representative.
pub fn enumerate_classes(pres: &Presentation, n: usize) -> Result<Vec<SubgroupClass<'_>>> {
    let reps = enumerate_candidates(pres, n, Stage::Transitive)?;
    let group = symmetric_group(n)?;
    let mut seen: HashSet<Assignment> = HashSet::with_capacity(reps.len());
    let mut classes: Vec<(Assignment, usize)> = Vec::new();
    for a in reps {
        if seen.contains(&a) {
            continue;
        }
        let orbit: BTreeSet<Assignment> = group
            .iter()
            .map(|sigma| conjugate_assignment(&a, sigma))
            .collect::<Result<_>>()?;
        let canonical = orbit.first().cloned().expect("orbit contains a");
        let size = orbit.len();
        seen.extend(orbit);
        classes.push((canonical, size));
    }
    classes.sort();
    classes
        .into_iter()
        .map(|(canonical, labeled_orbit_size)| {
            let rep = TransitiveRep::new(pres, canonical)?;
            let image_type = classify_image(&rep);
            Ok(SubgroupClass {
                rep,
                index: n,
                image_type,
                labeled_orbit_size,
            })
        })
        .collect()
}

/// Number of index-`n` subgroups, not up to conjugacy: transitive
/// representations up to relabeling that keeps point 0 in place.
pub fn count_distinct_subgroups(pres: &Presentation, n: usize) -> Result<usize> {
    let reps = enumerate_candidates(pres, n, Stage::Transitive)?;
    let fixing: Vec<Perm> = symmetric_group(n)?
        .into_iter()
        .filter(|s| s.fixes(0))
        .collect();
    let distinct: HashSet<Assignment> = reps
        .iter()
        .map(|a| point_stabilizer_canonical(a, &fixing))
        .collect();
    Ok(distinct.len())
}

/// Precomposes a Kleinian assignment with the automorphism of `K` given by
/// conjugation with the reflection `Q`: `a ↦ a⁻¹, b ↦ b⁻¹, c ↦ b c⁻¹ b⁻¹`.
pub fn reflect_kleinian(a: &Assignment) -> Result<Assignment> {
    if a.generator_count() != 3 {
        return Err(Error::GeneratorCount {
            expected: 3,
            got: a.generator_count(),
        });
    }
    let (x, y, z) = (a.image(0), a.image(1), a.image(2));
    Assignment::new(vec![
        x.inverse(),
        y.inverse(),
        *y * z.inverse() * y.inverse(),
    ])
}

/// Classes of index-`n` subgroups of `K` up to conjugacy in the full group:
/// `K`-classes exchanged by a reflection are merged.
pub fn count_kleinian_classes_under_reflection(pres: &Presentation, n: usize) -> Result<usize> {
    let mut merged = BTreeSet::new();
    for class in enumerate_classes(pres, n)? {
        let own = class.rep.assignment().clone();
        let mirrored = canonical_form(&reflect_kleinian(&own)?)?;
        merged.insert(own.min(mirrored));
    }
    Ok(merged.len())
}

/// All elements of the subgroup of `S_n` generated by the assignment's images.
pub fn image_group(a: &Assignment) -> Vec<Perm> {
    let id = Perm::identity(a.degree()).expect("valid degree");
    let mut elements = vec![id];
    let mut index: HashMap<Perm, ()> = HashMap::from([(id, ())]);
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier];
        frontier += 1;
        for g in a.images() {
            let y = *g * x;
            if index.insert(y, ()).is_none() {
                elements.push(y);
            }
        }
    }
    elements.sort();
    elements
}

/// Identifies the image of the representation among the transitive groups of
/// degree at most 4 by order, element orders and commutativity.
pub fn classify_image(rep: &TransitiveRep<'_>) -> ImageType {
    let elements = image_group(rep.assignment());
    let order = elements.len() as u64;
    let has_order_four = elements.iter().any(|e| e.order() == 4);
    match (rep.degree(), order) {
        (1, 1) => ImageType::Trivial,
        (2, 2) => ImageType::S2,
        (3, 3) => ImageType::Z3,
        (3, 6) => ImageType::S3,
        (4, 4) if has_order_four => ImageType::Z4,
        (4, 4) => ImageType::V4,
        (4, 8) => ImageType::D4,
        (4, 12) => ImageType::A4,
        (4, 24) => ImageType::S4,
        (_, order) => ImageType::Other { order },
    }
}
