//! HLT coset enumeration with immediate coincidence processing.
//!
//! Columns are `2g` for generator `g` and `2g + 1` for its inverse. Cosets
//! are numbered in order of definition; coset 0 is the subgroup itself.

use std::collections::VecDeque;

use crate::assignment::Assignment;
use crate::perm::Perm;
use crate::presentation::Presentation;
use crate::word::Word;

const UNDEFINED: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TcStatus {
    Closed(usize),
    /// More than `max_cosets` live cosets were needed. Inconclusive.
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcResult {
    pub status: TcStatus,
    /// Right action on the compacted cosets, `table[i][col]`; empty on overflow.
    pub table: Vec<Vec<usize>>,
    generators: usize,
}

impl TcResult {
    pub fn index(&self) -> Option<usize> {
        match self.status {
            TcStatus::Closed(n) => Some(n),
            TcStatus::Overflow => None,
        }
    }

    /// The permutation representation on cosets, as a left action: generator
    /// `g` acts as `Hw ↦ Hw g⁻¹`, so words evaluate homomorphically and coset
    /// 0 is fixed exactly by the subgroup.
    pub fn induced_assignment(&self) -> Option<Assignment> {
        let n = self.index()?;
        let images = (0..self.generators)
            .map(|g| {
                let row: Vec<usize> = (0..n).map(|i| self.table[i][2 * g + 1]).collect();
                Perm::from_images(&row).ok()
            })
            .collect::<Option<Vec<_>>>()?;
        Assignment::new(images).ok()
    }
}

struct Enumeration {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
    live: usize,
    max_cosets: usize,
    columns: usize,
}

struct Overflow;

impl Enumeration {
    fn new(columns: usize, max_cosets: usize) -> Enumeration {
        Enumeration {
            table: vec![vec![UNDEFINED; columns]],
            parent: vec![0],
            queue: VecDeque::new(),
            live: 1,
            max_cosets,
            columns,
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Overflow> {
        if self.live >= self.max_cosets {
            return Err(Overflow);
        }
        let d = self.table.len();
        self.table.push(vec![UNDEFINED; self.columns]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][x] = d;
        self.table[d][x ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.live -= 1;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for x in 0..self.columns {
                let d = self.table[dead][x];
                if d == UNDEFINED {
                    continue;
                }
                self.table[d][x ^ 1] = UNDEFINED;
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEFINED {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][x ^ 1] != UNDEFINED {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
    }

    /// Scans `word` at coset `c`, defining cosets to complete the scan.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), Overflow> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len() - 1;
        loop {
            while i <= j && self.table[f][word[i]] != UNDEFINED {
                f = self.table[f][word[i]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][word[j] ^ 1] != UNDEFINED {
                b = self.table[b][word[j] ^ 1];
                if j == 0 {
                    // the backward scan consumed the whole word
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                self.table[f][word[i]] = b;
                self.table[b][word[i] ^ 1] = f;
                return Ok(());
            } else {
                self.define(f, word[i])?;
            }
        }
    }

    fn compact(&mut self) -> Vec<Vec<usize>> {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.alive(c)).collect();
        let mut renumber = vec![UNDEFINED; self.table.len()];
        for (k, &c) in live.iter().enumerate() {
            renumber[c] = k;
        }
        live.iter()
            .map(|&c| {
                (0..self.columns)
                    .map(|x| {
                        let d = self.table[c][x];
                        let d = self.rep(d);
                        renumber[d]
                    })
                    .collect()
            })
            .collect()
    }
}

fn columns_of(word: &Word) -> Vec<usize> {
    word.letters()
        .iter()
        .map(|l| 2 * l.gen() + usize::from(l.inverse))
        .collect()
}

/// Enumerates the cosets of `⟨subgroup_gens⟩` in the presented group.
pub fn todd_coxeter(pres: &Presentation, subgroup_gens: &[Word], max_cosets: usize) -> TcResult {
    let k = pres.generator_count();
    let relators: Vec<Vec<usize>> = pres.relators().iter().map(columns_of).collect();
    let subgroup: Vec<Vec<usize>> = subgroup_gens.iter().map(columns_of).collect();
    let overflow = TcResult {
        status: TcStatus::Overflow,
        table: Vec::new(),
        generators: k,
    };
    if max_cosets == 0 {
        return overflow;
    }

    let mut e = Enumeration::new(2 * k, max_cosets);
    for w in &subgroup {
        if e.scan_and_fill(0, w).is_err() {
            return overflow;
        }
    }
    let mut c = 0;
    while c < e.table.len() {
        if e.alive(c) {
            for r in &relators {
                if e.scan_and_fill(c, r).is_err() {
                    return overflow;
                }
                if !e.alive(c) {
                    break;
                }
            }
            if e.alive(c) {
                for x in 0..2 * k {
                    if e.table[c][x] == UNDEFINED && e.define(c, x).is_err() {
                        return overflow;
                    }
                }
            }
        }
        c += 1;
    }
    let table = e.compact();
    TcResult {
        status: TcStatus::Closed(table.len()),
        table,
        generators: k,
    }
}

/// Default coset budget: ten cosets per (index, generator) pair.
pub fn default_max_cosets(index: usize, generators: usize) -> usize {
    10 * index * generators
}
