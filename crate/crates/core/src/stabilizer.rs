//! Coset tables, Schreier transversals and Schreier generators for the
//! stabilizer of point 0 of a transitive representation, plus a conservative
//! word simplifier.
//!
//! Transversal words use the left action: `transversal[i]` evaluates to a
//! permutation sending point 0 to point `i`. For coset `i` and generator `g`
//! the Schreier generator is `transversal[i]⁻¹ · g · transversal[j]` with
//! `j = g⁻¹(i)`, which fixes point 0 by construction. Read with right cosets
//! and the inverse transversal this is the usual `m_i g m_{ig}⁻¹`.

use crate::assignment::{conjugate_assignment, evaluate_word};
use crate::enumerator::TransitiveRep;
use crate::error::{Error, Result};
use crate::perm::symmetric_group;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// `action[i][g]` is the image of point `i` under generator `g`.
    pub action: Vec<Vec<usize>>,
    /// `transversal[i]` maps point 0 to point `i`; `transversal[0]` is empty.
    pub transversal: Vec<Word>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.action.len()
    }

    pub fn generator_count(&self) -> usize {
        self.action.first().map_or(0, Vec::len)
    }
}

/// Builds the coset table of the point-0 stabilizer with a breadth-first
/// transversal. Each layer is extended generator by generator (declared
/// order), prepending the generator to words of the previous layer taken in
/// order, so every representative is shortest and ties go to the smaller
/// leading generator.
pub fn build_coset_table(rep: &TransitiveRep<'_>) -> CosetTable {
    let a = rep.assignment();
    let n = a.degree();
    let k = a.generator_count();
    let action: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..k).map(|g| a.image(g).apply(i)).collect())
        .collect();

    let mut transversal: Vec<Option<Word>> = vec![None; n];
    transversal[0] = Some(Word::empty());
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next = Vec::new();
        // generator-major within a layer
        #[allow(clippy::needless_range_loop)]
        for g in 0..k {
            for &i in &layer {
                let j = action[i][g];
                if transversal[j].is_none() {
                    let parent = transversal[i].as_ref().expect("layer points are reached");
                    transversal[j] = Some(Word::from_gens(&[g]).concat(parent));
                    next.push(j);
                }
            }
        }
        layer = next;
    }
    CosetTable {
        action,
        transversal: transversal
            .into_iter()
            .map(|w| w.expect("representation is transitive"))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGens {
    /// All `n·k` Schreier words before any reduction, coset-major.
    pub raw: Vec<Word>,
    /// Reduced, with trivial words and repeats (up to inversion) removed.
    pub generators: Vec<Word>,
    /// `generators` after [`simplify_word`], deduplicated again.
    pub simplified: Vec<Word>,
}

pub fn schreier_generators(table: &CosetTable, pres: &Presentation) -> StabilizerGens {
    let n = table.index();
    let k = table.generator_count();
    let mut inverse_action = vec![vec![0usize; k]; n];
    for (i, row) in table.action.iter().enumerate() {
        for (g, &j) in row.iter().enumerate() {
            inverse_action[j][g] = i;
        }
    }

    let mut raw = Vec::with_capacity(n * k);
    for (i, inverse_row) in inverse_action.iter().enumerate() {
        for (g, &j) in inverse_row.iter().enumerate() {
            let letters: Vec<Letter> = table.transversal[i]
                .inverse()
                .letters()
                .iter()
                .copied()
                .chain(std::iter::once(Letter::new(g)))
                .chain(table.transversal[j].letters().iter().copied())
                .collect();
            raw.push(Word::unreduced(letters));
        }
    }

    let generators = dedup_words(raw.iter().map(|w| pres.normalize(w)), pres);
    let simplified = dedup_words(generators.iter().map(|w| simplify_word(w, pres)), pres);
    StabilizerGens {
        raw,
        generators,
        simplified,
    }
}

/// Drops empty words and any word equal to an earlier one or its inverse.
fn dedup_words(words: impl Iterator<Item = Word>, pres: &Presentation) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for w in words {
        if w.is_empty() {
            continue;
        }
        let inv = pres.inverse(&w);
        if out.iter().any(|u| *u == w || *u == inv) {
            continue;
        }
        out.push(w);
    }
    out
}

/// Rewrites `word` with rules that hold in every quotient of the presented
/// group, until nothing applies:
///
/// - free reduction, and `xx → ε` for involutory generators;
/// - runs `x^m` shortened modulo a relator `x^e` (towards the shorter of
///   `x^(m mod e)` and `x^-(e - m mod e)`);
/// - `yxy → x` and `xyx → y` for involutions `x, y` with `(xy)²` a relator.
///
/// No rule lengthens the word.
pub fn simplify_word(word: &Word, pres: &Presentation) -> Word {
    let mut current = pres.normalize(word);
    loop {
        let next = pres.normalize(&reduce_powers(&current, pres));
        let next = pres.normalize(&reduce_commuting_involutions(&next, pres));
        if next == current {
            return current;
        }
        current = next;
    }
}

fn reduce_powers(word: &Word, pres: &Presentation) -> Word {
    let letters = word.letters();
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as u32;
        match pres.element_order(&Word::from_gens(&[l.gen()])) {
            Some(e) => {
                let m = run % e;
                if 2 * m > e {
                    out.extend(std::iter::repeat_n(l.inverted(), (e - m) as usize));
                } else {
                    out.extend(std::iter::repeat_n(l, m as usize));
                }
            }
            None => out.extend(std::iter::repeat_n(l, run as usize)),
        }
        i = j;
    }
    Word::new(out)
}

/// Pairs `(x, y)` of involutions whose product has order dividing 2.
fn commuting_involution_pairs(pres: &Presentation) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for r in pres.power_relators() {
        if r.exponent != 2 || r.base.len() != 2 {
            continue;
        }
        let [x, y] = [r.base.letters()[0], r.base.letters()[1]];
        if x.inverse || y.inverse || x.gen == y.gen {
            continue;
        }
        if pres.is_involution(x.gen()) && pres.is_involution(y.gen()) {
            pairs.push((x.gen(), y.gen()));
        }
    }
    pairs
}

fn reduce_commuting_involutions(word: &Word, pres: &Presentation) -> Word {
    let pairs = commuting_involution_pairs(pres);
    let mut letters = word.letters().to_vec();
    'scan: loop {
        for start in 0..letters.len().saturating_sub(2) {
            let (u, v, w) = (letters[start], letters[start + 1], letters[start + 2]);
            if u != w || u.inverse || v.inverse {
                continue;
            }
            let hit = pairs
                .iter()
                .any(|&(x, y)| (u.gen() == x && v.gen() == y) || (u.gen() == y && v.gen() == x));
            if hit {
                letters.splice(start..start + 3, [v]);
                continue 'scan;
            }
        }
        break;
    }
    Word::new(letters)
}

/// Whether the two representations have the same point-0 stabilizer, i.e.
/// differ by a relabeling that fixes point 0.
pub fn same_subgroup(rep1: &TransitiveRep<'_>, rep2: &TransitiveRep<'_>) -> Result<bool> {
    let (a, b) = (rep1.assignment(), rep2.assignment());
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    for sigma in symmetric_group(a.degree())? {
        if sigma.fixes(0) && conjugate_assignment(a, &sigma)? == *b {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether every word evaluates under `rep` to a permutation fixing point 0.
pub fn fixes_point_zero(words: &[Word], rep: &TransitiveRep<'_>) -> Result<bool> {
    for w in words {
        if !evaluate_word(w, rep.assignment())?.fixes(0) {
            return Ok(false);
        }
    }
    Ok(true)
}
