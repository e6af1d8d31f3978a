//! Coxeter symbols, the built-in tetrahedron catalog, and the finite
//! presentations of the reflection group `H = ⟨P, Q, R, S⟩` and its
//! orientation-preserving subgroup `K = ⟨a, b, c⟩` with `a = PQ`, `b = QR`,
//! `c = RS`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Dihedral-angle submultiples `[p, q, r, s, t, u]` of a Coxeter tetrahedron.
///
/// The entries are the exponents of `PQ, QR, RS, PR, PS, QS` respectively.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CoxeterSymbol([u32; 6]);

impl CoxeterSymbol {
    pub fn new(entries: [u32; 6]) -> Result<CoxeterSymbol> {
        for (position, &value) in entries.iter().enumerate() {
            if value < 2 {
                return Err(Error::EntryTooSmall { position, value });
            }
        }
        Ok(CoxeterSymbol(entries))
    }

    pub fn entries(&self) -> [u32; 6] {
        self.0
    }
}

impl FromStr for CoxeterSymbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<CoxeterSymbol> {
        let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::MalformedSymbol(text.to_string()));
        }
        let mut entries = [0u32; 6];
        for (slot, part) in entries.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| Error::MalformedSymbol(text.to_string()))?;
        }
        CoxeterSymbol::new(entries)
    }
}

impl fmt::Display for CoxeterSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r, s, t, u] = self.0;
        write!(f, "{p},{q},{r},{s},{t},{u}")
    }
}

impl Serialize for CoxeterSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CoxeterSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn parse_symbol(text: &str) -> Result<CoxeterSymbol> {
    text.parse()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Geometry {
    Spherical,
    Euclidean,
    HyperbolicCompact,
    HyperbolicNoncompact,
}

impl FromStr for Geometry {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Geometry, String> {
        match s {
            "spherical" => Ok(Geometry::Spherical),
            "euclidean" => Ok(Geometry::Euclidean),
            "hyperbolic-compact" => Ok(Geometry::HyperbolicCompact),
            "hyperbolic-noncompact" => Ok(Geometry::HyperbolicNoncompact),
            other => Err(format!("unknown geometry {other:?}")),
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Spherical => "spherical",
            Geometry::Euclidean => "euclidean",
            Geometry::HyperbolicCompact => "hyperbolic-compact",
            Geometry::HyperbolicNoncompact => "hyperbolic-noncompact",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub symbol: CoxeterSymbol,
    pub geometry: Geometry,
    pub ideal_vertices: u32,
}

const SPHERICAL: [(&str, [u32; 6]); 5] = [
    ("s1", [3, 3, 3, 2, 2, 2]),
    ("s2", [4, 3, 3, 2, 2, 2]),
    ("s3", [3, 4, 3, 2, 2, 2]),
    ("s4", [5, 3, 3, 2, 2, 2]),
    ("s5", [3, 3, 2, 3, 2, 2]),
];

const EUCLIDEAN: [(&str, [u32; 6]); 3] = [
    ("e1", [4, 3, 4, 2, 2, 2]),
    ("e2", [3, 4, 2, 3, 2, 2]),
    ("e3", [3, 3, 3, 2, 2, 3]),
];

// id, symbol, ideal vertices
const HYPERBOLIC: [(&str, [u32; 6], u32); 32] = [
    ("t1", [3, 5, 2, 3, 2, 2], 0),
    ("t2", [5, 3, 5, 2, 2, 2], 0),
    ("t3", [3, 5, 3, 2, 2, 3], 0),
    ("t4", [3, 5, 3, 2, 2, 2], 0),
    ("t5", [3, 4, 3, 2, 2, 3], 0),
    ("t6", [3, 5, 3, 2, 2, 4], 0),
    ("t7", [4, 3, 5, 2, 2, 2], 0),
    ("t8", [4, 3, 4, 2, 2, 3], 0),
    ("t9", [5, 3, 5, 2, 2, 3], 0),
    ("t10", [3, 3, 6, 2, 2, 2], 1),
    ("t11", [4, 4, 3, 2, 2, 2], 1),
    ("t12", [3, 3, 3, 3, 2, 2], 1),
    ("t13", [4, 3, 6, 2, 2, 2], 1),
    ("t14", [3, 4, 2, 4, 2, 2], 1),
    ("t15", [3, 6, 3, 2, 2, 2], 2),
    ("t16", [5, 3, 6, 2, 2, 2], 1),
    ("t17", [4, 3, 3, 3, 2, 2], 1),
    ("t18", [3, 6, 2, 3, 2, 2], 2),
    ("t19", [4, 4, 4, 2, 2, 2], 3),
    ("t20", [6, 3, 6, 2, 2, 2], 2),
    ("t21", [3, 4, 4, 2, 2, 3], 1),
    ("t22", [5, 3, 3, 3, 2, 2], 1),
    ("t23", [3, 3, 6, 2, 2, 3], 2),
    ("t24", [3, 3, 3, 3, 2, 3], 2),
    ("t25", [4, 4, 2, 4, 2, 2], 2),
    ("t26", [6, 3, 3, 3, 2, 2], 3),
    ("t27", [4, 3, 6, 2, 2, 3], 2),
    ("t28", [4, 4, 4, 2, 2, 3], 2),
    ("t29", [5, 3, 6, 2, 2, 3], 2),
    ("t30", [6, 3, 6, 2, 2, 3], 4),
    ("t31", [4, 4, 4, 2, 2, 4], 4),
    ("t32", [3, 3, 3, 3, 3, 3], 4),
];

/// All 40 built-in tetrahedra: spherical `s1..s5`, Euclidean `e1..e3`, and
/// the finite-volume hyperbolic ones `t1..t32` (compact `t1..t9`).
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::with_capacity(40);
    for (id, sym) in SPHERICAL {
        out.push(entry(id, sym, Geometry::Spherical, 0));
    }
    for (id, sym) in EUCLIDEAN {
        out.push(entry(id, sym, Geometry::Euclidean, 0));
    }
    for (id, sym, ideal) in HYPERBOLIC {
        let geometry = if ideal == 0 {
            Geometry::HyperbolicCompact
        } else {
            Geometry::HyperbolicNoncompact
        };
        out.push(entry(id, sym, geometry, ideal));
    }
    out
}

fn entry(id: &str, sym: [u32; 6], geometry: Geometry, ideal_vertices: u32) -> CatalogEntry {
    CatalogEntry {
        id: id.to_string(),
        symbol: CoxeterSymbol::new(sym).expect("catalog symbols are valid"),
        geometry,
        ideal_vertices,
    }
}

pub fn lookup(id: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// The reflection group on `P, Q, R, S`.
    Full,
    /// The orientation-preserving subgroup on `a = PQ, b = QR, c = RS`.
    Kleinian,
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<GroupKind, String> {
        match s {
            "full" | "H" => Ok(GroupKind::Full),
            "kleinian" | "K" => Ok(GroupKind::Kleinian),
            other => Err(format!("unknown group kind {other:?}")),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Full => "full",
            GroupKind::Kleinian => "kleinian",
        })
    }
}

/// A relator written as `base^exponent`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerRelator {
    pub base: Word,
    pub exponent: u32,
}

impl PowerRelator {
    pub fn word(&self) -> Word {
        self.base.pow(self.exponent)
    }
}

/// A finite presentation whose relators are all proper powers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    kind: GroupKind,
    symbol: CoxeterSymbol,
    names: Vec<String>,
    power_relators: Vec<PowerRelator>,
    relators: Vec<Word>,
    involutions: Vec<bool>,
}

impl Presentation {
    fn build(
        kind: GroupKind,
        symbol: CoxeterSymbol,
        names: &[&str],
        power_relators: Vec<PowerRelator>,
    ) -> Presentation {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let relators = power_relators.iter().map(PowerRelator::word).collect();
        let involutions = (0..names.len())
            .map(|g| {
                power_relators
                    .iter()
                    .any(|r| r.exponent == 2 && r.base == Word::from_gens(&[g]))
            })
            .collect();
        Presentation {
            kind,
            symbol,
            names,
            power_relators,
            relators,
            involutions,
        }
    }

    pub fn for_kind(kind: GroupKind, symbol: CoxeterSymbol) -> Presentation {
        match kind {
            GroupKind::Full => full_presentation(symbol),
            GroupKind::Kleinian => kleinian_presentation(symbol),
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn symbol(&self) -> CoxeterSymbol {
        self.symbol
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn power_relators(&self) -> &[PowerRelator] {
        &self.power_relators
    }

    /// Order bound forced on a word pattern: `w^e` is a relator, so the order
    /// of `w` divides `e`.
    pub fn element_order(&self, base: &Word) -> Option<u32> {
        self.power_relators
            .iter()
            .find(|r| &r.base == base)
            .map(|r| r.exponent)
    }

    /// Generators `x` for which `x²` is a relator.
    pub fn is_involution(&self, gen: usize) -> bool {
        self.involutions[gen]
    }

    /// Rewrites a word into normal letter form for this presentation:
    /// involutory generators lose their inverse marker and `x x` cancels for
    /// them, on top of free reduction.
    pub fn normalize(&self, word: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(word.len());
        for &l in word.letters() {
            let l = if self.involutions[l.gen()] {
                Letter::new(l.gen())
            } else {
                l
            };
            let cancels = match out.last() {
                Some(&last) => last == l.inverted() || (self.involutions[l.gen()] && last == l),
                None => false,
            };
            if cancels {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word::new(out)
    }

    /// Group inverse in normal letter form.
    pub fn inverse(&self, word: &Word) -> Word {
        self.normalize(&word.inverse())
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.format(&self.names)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.names).map(|w| self.normalize(&w))
    }

    /// Renders a relator as `(PQ)^3` / `P^2`.
    pub fn format_relator(&self, r: &PowerRelator) -> String {
        let base = self.format_word(&r.base);
        if r.base.len() == 1 {
            format!("{base}^{}", r.exponent)
        } else {
            format!("({base})^{}", r.exponent)
        }
    }
}

/// `P² = Q² = R² = S² = (PQ)^p = (QR)^q = (RS)^r = (PR)^s = (PS)^t = (QS)^u = e`.
pub fn full_presentation(symbol: CoxeterSymbol) -> Presentation {
    let [p, q, r, s, t, u] = symbol.entries();
    let (gp, gq, gr, gs) = (0, 1, 2, 3);
    let mut rels: Vec<PowerRelator> = (0..4)
        .map(|g| PowerRelator {
            base: Word::from_gens(&[g]),
            exponent: 2,
        })
        .collect();
    for (pair, exponent) in [
        ([gp, gq], p),
        ([gq, gr], q),
        ([gr, gs], r),
        ([gp, gr], s),
        ([gp, gs], t),
        ([gq, gs], u),
    ] {
        rels.push(PowerRelator {
            base: Word::from_gens(&pair),
            exponent,
        });
    }
    Presentation::build(GroupKind::Full, symbol, &["P", "Q", "R", "S"], rels)
}

/// With `a = PQ, b = QR, c = RS` one has `ab = PR`, `abc = PS`, `bc = QS`,
/// giving `a^p = b^q = c^r = (ab)^s = (abc)^t = (bc)^u = e`.
pub fn kleinian_presentation(symbol: CoxeterSymbol) -> Presentation {
    let [p, q, r, s, t, u] = symbol.entries();
    let rels = [
        (&[0][..], p),
        (&[1][..], q),
        (&[2][..], r),
        (&[0, 1][..], s),
        (&[0, 1, 2][..], t),
        (&[1, 2][..], u),
    ]
    .into_iter()
    .map(|(gens, exponent)| PowerRelator {
        base: Word::from_gens(gens),
        exponent,
    })
    .collect();
    Presentation::build(GroupKind::Kleinian, symbol, &["a", "b", "c"], rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relator_texts(p: &Presentation) -> Vec<String> {
        p.power_relators()
            .iter()
            .map(|r| p.format_relator(r))
            .collect()
    }

    #[test]
    fn parse_symbol_examples() {
        assert_eq!(
            parse_symbol("3,3,6,2,2,2").unwrap().entries(),
            [3, 3, 6, 2, 2, 2]
        );
        assert_eq!(
            parse_symbol("2,2,2,2,2,2").unwrap().entries(),
            [2, 2, 2, 2, 2, 2]
        );
        assert_eq!(
            parse_symbol("3,3,1,2,2,2").unwrap_err(),
            Error::EntryTooSmall {
                position: 2,
                value: 1
            }
        );
        assert!(matches!(
            parse_symbol("3,3,6,2,2"),
            Err(Error::MalformedSymbol(_))
        ));
        assert!(matches!(
            parse_symbol("3,x,6,2,2,2"),
            Err(Error::MalformedSymbol(_))
        ));
        assert_eq!(
            parse_symbol(" [3, 3, 6, 2, 2, 2] ").unwrap().to_string(),
            "3,3,6,2,2,2"
        );
    }

    #[test]
    fn full_presentation_relators() {
        let t10 = full_presentation(parse_symbol("3,3,6,2,2,2").unwrap());
        assert_eq!(
            relator_texts(&t10),
            [
                "P^2", "Q^2", "R^2", "S^2", "(PQ)^3", "(QR)^3", "(RS)^6", "(PR)^2", "(PS)^2",
                "(QS)^2"
            ]
        );
        assert_eq!(t10.relators().len(), 10);
        assert_eq!(t10.generator_count(), 4);

        let t1 = full_presentation(parse_symbol("3,5,2,3,2,2").unwrap());
        assert_eq!(
            &relator_texts(&t1)[4..],
            ["(PQ)^3", "(QR)^5", "(RS)^2", "(PR)^3", "(PS)^2", "(QS)^2"]
        );

        let flat = full_presentation(parse_symbol("2,2,2,2,2,2").unwrap());
        assert!(flat.power_relators().iter().all(|r| r.exponent == 2));
    }

    #[test]
    fn kleinian_presentation_relators() {
        let t10 = kleinian_presentation(parse_symbol("3,3,6,2,2,2").unwrap());
        assert_eq!(
            relator_texts(&t10),
            ["a^3", "b^3", "c^6", "(ab)^2", "(abc)^2", "(bc)^2"]
        );
        assert_eq!(t10.generator_count(), 3);
        let t32 = kleinian_presentation(parse_symbol("3,3,3,3,3,3").unwrap());
        assert_eq!(
            relator_texts(&t32),
            ["a^3", "b^3", "c^3", "(ab)^3", "(abc)^3", "(bc)^3"]
        );
        let flat = kleinian_presentation(parse_symbol("2,2,2,2,2,2").unwrap());
        assert!(flat.power_relators().iter().all(|r| r.exponent == 2));
        assert!((0..3).all(|g| flat.is_involution(g)));
        assert!(!t10.is_involution(0));
    }

    #[test]
    fn catalog_partition() {
        let cat = catalog();
        assert_eq!(cat.len(), 40);
        let count = |g: Geometry| cat.iter().filter(|e| e.geometry == g).count();
        assert_eq!(count(Geometry::Spherical), 5);
        assert_eq!(count(Geometry::Euclidean), 3);
        assert_eq!(count(Geometry::HyperbolicCompact), 9);
        assert_eq!(count(Geometry::HyperbolicNoncompact), 23);
        for e in &cat {
            if let Some(k) = e.id.strip_prefix('t') {
                let k: u32 = k.parse().unwrap();
                if k <= 9 {
                    assert_eq!(e.geometry, Geometry::HyperbolicCompact);
                } else {
                    assert_eq!(e.geometry, Geometry::HyperbolicNoncompact);
                    assert!(e.ideal_vertices >= 1);
                }
            } else {
                assert_eq!(e.ideal_vertices, 0);
            }
        }
    }

    #[test]
    fn catalog_lookups() {
        let t10 = lookup("t10").unwrap();
        assert_eq!(t10.symbol.entries(), [3, 3, 6, 2, 2, 2]);
        assert_eq!(t10.geometry, Geometry::HyperbolicNoncompact);
        assert_eq!(t10.ideal_vertices, 1);
        let t19 = lookup("t19").unwrap();
        assert_eq!(t19.symbol.entries(), [4, 4, 4, 2, 2, 2]);
        assert_eq!(t19.ideal_vertices, 3);
        assert!(lookup("t33").is_err());
    }

    #[test]
    fn normalize_uses_involutions() {
        let h = full_presentation(parse_symbol("3,3,6,2,2,2").unwrap());
        let w = Word::new([
            Letter::new(3),
            Letter::inv(2),
            Letter::new(2),
            Letter::new(2),
        ]);
        // S R⁻¹ R R -> S R (free) ; S S R R S -> ε
        assert_eq!(h.format_word(&h.normalize(&w)), "SR");
        assert!(h.parse_word("SSRRS S").unwrap().is_empty());
        assert_eq!(
            h.format_word(&h.inverse(&h.parse_word("SR").unwrap())),
            "RS"
        );

        let k = kleinian_presentation(parse_symbol("3,3,6,2,2,2").unwrap());
        let w = k.parse_word("ab^-1").unwrap();
        assert_eq!(k.format_word(&k.inverse(&w)), "ba⁻¹");
    }

    #[test]
    fn symbol_json_round_trip() {
        let s = parse_symbol("4,4,4,2,2,3").unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"4,4,4,2,2,3\"");
        let back: CoxeterSymbol = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
