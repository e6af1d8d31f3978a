//! Generator assignments: a permutation image for every generator of a
//! presentation, i.e. a candidate homomorphism into `S_n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::word::Word;

/// Generator images indexed by generator position, all of one degree.
///
/// Ordering compares images in generator order, each by one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Assignment {
    images: Vec<Perm>,
}

impl Assignment {
    pub fn new(images: Vec<Perm>) -> Result<Assignment> {
        if let Some(first) = images.first() {
            for p in &images[1..] {
                if p.degree() != first.degree() {
                    return Err(Error::DegreeMismatch {
                        left: first.degree(),
                        right: p.degree(),
                    });
                }
            }
        }
        Ok(Assignment { images })
    }

    pub fn trivial(generators: usize, degree: usize) -> Result<Assignment> {
        Ok(Assignment {
            images: vec![Perm::identity(degree)?; generators],
        })
    }

    /// Parses one cycle-notation string per generator.
    pub fn parse<S: AsRef<str>>(cycles: &[S], degree: usize) -> Result<Assignment> {
        let images = cycles
            .iter()
            .map(|c| Perm::parse_cycles(c.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        Assignment::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.first().map_or(1, Perm::degree)
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &Perm {
        &self.images[gen]
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// True when every generator maps to the identity.
    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(Perm::is_identity)
    }

    /// Cycle notation per generator name, for export.
    pub fn to_named_cycles(&self, pres: &Presentation) -> BTreeMap<String, String> {
        pres.generator_names()
            .iter()
            .cloned()
            .zip(self.images.iter().map(Perm::to_string))
            .collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Image of a word: the product of its letters' images in word order.
pub fn evaluate_word(word: &Word, a: &Assignment) -> Result<Perm> {
    let mut acc = Perm::identity(a.degree())?;
    for l in word.letters() {
        let img = a
            .images
            .get(l.gen())
            .ok_or_else(|| Error::UnknownGenerator(format!("generator #{}", l.gen())))?;
        acc = if l.inverse {
            acc * img.inverse()
        } else {
            acc * *img
        };
    }
    Ok(acc)
}

/// Whether the assignment kills every relator of the presentation.
pub fn satisfies_relators(pres: &Presentation, a: &Assignment) -> Result<bool> {
    check_generator_count(pres, a)?;
    for r in pres.power_relators() {
        if !evaluate_word(&r.base, a)?.pow(r.exponent).is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_generator_count(pres: &Presentation, a: &Assignment) -> Result<()> {
    if pres.generator_count() != a.generator_count() {
        return Err(Error::GeneratorCount {
            expected: pres.generator_count(),
            got: a.generator_count(),
        });
    }
    Ok(())
}

/// Whether the orbit of point 0 under the generator images is everything.
pub fn is_transitive(a: &Assignment) -> bool {
    let n = a.degree();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in &a.images {
            let y = g.apply(x);
            if !reached[y] {
                reached[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// Simultaneous conjugation `g ↦ σ g σ⁻¹` of every generator image.
pub fn conjugate_assignment(a: &Assignment, sigma: &Perm) -> Result<Assignment> {
    let images = a
        .images
        .iter()
        .map(|g| g.conjugate_by(sigma))
        .collect::<Result<Vec<_>>>()?;
    Ok(Assignment { images })
}
