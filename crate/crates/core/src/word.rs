//! Words over a finite generating set with formal inverses.

use std::fmt;

use crate::error::{Error, Result};

/// One generator occurrence, `gen` or `gen⁻¹`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Letter {
        Letter {
            gen: gen as u8,
            inverse: false,
        }
    }

    pub fn inv(gen: usize) -> Letter {
        Letter {
            gen: gen as u8,
            inverse: true,
        }
    }

    pub fn gen(self) -> usize {
        self.gen as usize
    }

    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word. Construction always cancels adjacent `x x⁻¹` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Word of positive letters.
    pub fn from_gens(gens: &[usize]) -> Word {
        Word::new(gens.iter().map(|&g| Letter::new(g)))
    }

    /// Builds a word without reducing it. Used for raw Schreier words whose
    /// reduction is itself the thing being measured.
    pub fn unreduced(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction of a word built with [`Word::unreduced`].
    pub fn reduced(&self) -> Word {
        Word::new(self.letters.iter().copied())
    }

    /// Formal inverse: reversed with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word::new(self.letters.iter().rev().map(|l| l.inverted()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, k: u32) -> Word {
        Word::new((0..k).flat_map(|_| self.letters.iter().copied()))
    }

    /// Highest generator index mentioned, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen()).max()
    }

    /// Renders with the given generator names; inverse letters get a `⁻¹`
    /// suffix. The empty word renders as the empty string.
    pub fn format(&self, names: &[String]) -> String {
        let mut out = String::new();
        for l in &self.letters {
            out.push_str(&names[l.gen()]);
            if l.inverse {
                out.push_str("⁻¹");
            }
        }
        out
    }

    /// Parses text such as `SRS`, `ab⁻¹c` or `a b^-1`. Generator names are
    /// matched greedily, longest first. `ε` and the empty string give the
    /// empty word.
    pub fn parse(text: &str, names: &[String]) -> Result<Word> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        if rest == "ε" {
            return Ok(Word::empty());
        }
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
        let mut letters = Vec::new();
        while !rest.is_empty() {
            let gen = order
                .iter()
                .copied()
                .find(|&i| rest.starts_with(names[i].as_str()))
                .ok_or_else(|| Error::MalformedWord(text.to_string()))?;
            rest = &rest[names[gen].len()..];
            let mut inverse = false;
            for marker in ["⁻¹", "^-1"] {
                if let Some(r) = rest.strip_prefix(marker) {
                    rest = r;
                    inverse = true;
                    break;
                }
            }
            letters.push(Letter {
                gen: gen as u8,
                inverse,
            });
        }
        Ok(Word::new(letters))
    }
}

impl fmt::Display for Word {
    /// Debug-style rendering with numeric generator ids; prefer [`Word::format`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.letters {
            write!(f, "g{}", l.gen)?;
            if l.inverse {
                f.write_str("⁻¹")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["P", "Q", "R", "S"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn free_reduction_on_construction() {
        let w = Word::new([
            Letter::new(0),
            Letter::new(1),
            Letter::inv(1),
            Letter::new(2),
        ]);
        assert_eq!(w, Word::from_gens(&[0, 2]));
        let w = Word::new([Letter::new(0), Letter::inv(0)]);
        assert!(w.is_empty());
        // positive squares are not cancelled by free reduction
        assert_eq!(Word::from_gens(&[3, 3]).len(), 2);
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let w = Word::from_gens(&[0, 1, 2]);
        assert_eq!(
            w.inverse().letters(),
            &[Letter::inv(2), Letter::inv(1), Letter::inv(0)]
        );
        assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn parse_and_format() {
        let n = names();
        let w = Word::parse("SRS", &n).unwrap();
        assert_eq!(w, Word::from_gens(&[3, 2, 3]));
        assert_eq!(w.format(&n), "SRS");
        let w = Word::parse("P Q^-1 R⁻¹", &n).unwrap();
        assert_eq!(w.format(&n), "PQ⁻¹R⁻¹");
        assert!(Word::parse("", &n).unwrap().is_empty());
        assert!(Word::parse("ε", &n).unwrap().is_empty());
        assert!(Word::parse("PX", &n).is_err());
    }

    #[test]
    fn unreduced_keeps_letters() {
        let raw = Word::unreduced(vec![Letter::new(3), Letter::inv(3)]);
        assert_eq!(raw.len(), 2);
        assert!(raw.reduced().is_empty());
    }
}
