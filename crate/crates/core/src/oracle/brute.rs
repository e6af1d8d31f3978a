//! Exhaustive count over every generator assignment in `S_n^k`.
//!
//! Shares nothing with the enumerator beyond the `Perm` type: elements are
//! handled as indices into a locally built multiplication table, relators are
//! evaluated by table lookups, and classes are merged with a union-find.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{symmetric_group, Perm};
use crate::presentation::Presentation;

/// Largest degree the exhaustive count accepts.
pub const BRUTE_MAX_INDEX: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BruteCounts {
    /// Transitive relator-satisfying assignments.
    pub labeled: usize,
    /// Orbits under conjugation by `S_n`: conjugacy classes of subgroups.
    pub classes: usize,
    /// Orbits under conjugation fixing point 0: distinct subgroups.
    pub subgroups: usize,
}

struct Group {
    elements: Vec<Perm>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl Group {
    fn symmetric(n: usize) -> Result<Group> {
        let elements = symmetric_group(n)?;
        let index: HashMap<Vec<u8>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images().to_vec(), i))
            .collect();
        let lookup = |images: &[u8]| index[images];
        // (f·g)(x) = f(g(x))
        let mul = elements
            .iter()
            .map(|f| {
                elements
                    .iter()
                    .map(|g| {
                        let fg: Vec<u8> =
                            g.images().iter().map(|&x| f.images()[x as usize]).collect();
                        lookup(&fg)
                    })
                    .collect()
            })
            .collect();
        let inv = elements
            .iter()
            .map(|f| {
                let mut out = vec![0u8; n];
                for (x, &y) in f.images().iter().enumerate() {
                    out[y as usize] = x as u8;
                }
                lookup(&out)
            })
            .collect();
        let identity = lookup(&(0..n as u8).collect::<Vec<_>>());
        Ok(Group {
            elements,
            mul,
            inv,
            identity,
        })
    }

    fn transposition(&self, a: usize, b: usize) -> usize {
        self.elements
            .iter()
            .position(|p| {
                let im = p.images();
                (0..im.len()).all(|x| {
                    let want = if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    };
                    im[x] as usize == want
                })
            })
            .expect("S_n contains every transposition")
    }

    /// `τ e τ⁻¹` for every element `e`.
    fn conjugation_table(&self, tau: usize) -> Vec<usize> {
        (0..self.elements.len())
            .map(|e| self.mul[self.mul[tau][e]][self.inv[tau]])
            .collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut k = x;
        while self.0[k] != r {
            let next = self.0[k];
            self.0[k] = r;
            k = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

fn transitive(group: &Group, n: usize, choice: &[usize]) -> bool {
    let mut uf = UnionFind((0..n).collect());
    for &e in choice {
        for (x, &y) in group.elements[e].images().iter().enumerate() {
            uf.union(x, y as usize);
        }
    }
    uf.components() == 1
}

fn kills_relators(group: &Group, relators: &[Vec<(usize, bool)>], choice: &[usize]) -> bool {
    relators.iter().all(|r| {
        let mut acc = group.identity;
        for &(g, inverse) in r {
            let e = if inverse {
                group.inv[choice[g]]
            } else {
                choice[g]
            };
            acc = group.mul[acc][e];
        }
        acc == group.identity
    })
}

fn orbit_count(labeled: &[Vec<usize>], conjugations: &[Vec<usize>]) -> usize {
    let position: HashMap<&[usize], usize> = labeled
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let mut uf = UnionFind((0..labeled.len()).collect());
    for (i, choice) in labeled.iter().enumerate() {
        for table in conjugations {
            let image: Vec<usize> = choice.iter().map(|&e| table[e]).collect();
            let j = position[image.as_slice()];
            uf.union(i, j);
        }
    }
    uf.components()
}

/// Counts index-`n` subgroups by scanning all `(n!)^k` assignments.
pub fn brute_force_classes(pres: &Presentation, n: usize) -> Result<BruteCounts> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n > BRUTE_MAX_INDEX {
        return Err(Error::OracleDegree(n));
    }
    let group = Group::symmetric(n)?;
    let k = pres.generator_count();
    let size = group.elements.len();
    let relators: Vec<Vec<(usize, bool)>> = pres
        .relators()
        .iter()
        .map(|w| w.letters().iter().map(|l| (l.gen(), l.inverse)).collect())
        .collect();

    let total = size.pow(k as u32 - 1);
    let labeled: Vec<Vec<usize>> = (0..size)
        .into_par_iter()
        .flat_map_iter(|first| {
            let group = &group;
            let relators = &relators;
            (0..total).filter_map(move |mut code| {
                let mut choice = vec![first; k];
                for slot in choice.iter_mut().skip(1) {
                    *slot = code % size;
                    code /= size;
                }
                (kills_relators(group, relators, &choice) && transitive(group, n, &choice))
                    .then_some(choice)
            })
        })
        .collect();

    let adjacent: Vec<Vec<usize>> = (0..n.saturating_sub(1))
        .map(|i| group.conjugation_table(group.transposition(i, i + 1)))
        .collect();
    let classes = orbit_count(&labeled, &adjacent);
    // adjacent transpositions avoiding point 0 generate its stabilizer
    let subgroups = orbit_count(&labeled, adjacent.get(1..).unwrap_or(&[]));
    Ok(BruteCounts {
        labeled: labeled.len(),
        classes,
        subgroups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{full_presentation, kleinian_presentation, parse_symbol};

    #[test]
    fn t10_counts() {
        let sym = parse_symbol("3,3,6,2,2,2").unwrap();
        let h = full_presentation(sym);
        let k = kleinian_presentation(sym);
        assert_eq!(
            brute_force_classes(&h, 2).unwrap(),
            BruteCounts {
                labeled: 3,
                classes: 3,
                subgroups: 3
            }
        );
        assert_eq!(brute_force_classes(&h, 4).unwrap().classes, 2);
        let k4 = brute_force_classes(&k, 4).unwrap();
        assert_eq!((k4.labeled, k4.classes), (24, 1));
        assert_eq!(brute_force_classes(&h, 1).unwrap().classes, 1);
    }

    #[test]
    fn free_product_of_involutions() {
        // [2,2,2,2,2,2] is (Z2)^4; index-2 subgroups are the 15 nonzero
        // functionals, each normal.
        let h = full_presentation(parse_symbol("2,2,2,2,2,2").unwrap());
        let c = brute_force_classes(&h, 2).unwrap();
        assert_eq!((c.labeled, c.classes, c.subgroups), (15, 15, 15));
    }

    #[test]
    fn rejects_large_degree() {
        let h = full_presentation(parse_symbol("3,3,6,2,2,2").unwrap());
        assert!(matches!(
            brute_force_classes(&h, 5),
            Err(Error::OracleDegree(5))
        ));
        assert!(matches!(brute_force_classes(&h, 0), Err(Error::ZeroIndex)));
    }
}
