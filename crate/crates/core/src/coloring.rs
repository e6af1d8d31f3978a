//! Export of a class as an n-coloring: colors are the points of the
//! representation, each labeled by a coset-representative word.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::assignment::Assignment;
use crate::enumerator::SubgroupClass;
use crate::error::Result;
use crate::perm::{factorial, Perm};
use crate::stabilizer::build_coset_table;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    names: Vec<String>,
    /// `coset_words[i]` carries color 1 to color `i + 1`.
    pub coset_words: Vec<Word>,
    /// Generator images on colors, in generator order.
    pub action: Vec<Perm>,
}

#[derive(Serialize)]
struct ColoringJson {
    index: usize,
    coset_words: Vec<String>,
    action: BTreeMap<String, String>,
}

#[derive(Serialize)]
struct ColoringRow<'a> {
    generator: &'a str,
    color: usize,
    image_color: usize,
}

impl Coloring {
    pub fn index(&self) -> usize {
        self.coset_words.len()
    }

    /// The action read back as an assignment.
    pub fn assignment(&self) -> Assignment {
        Assignment::new(self.action.clone()).expect("action images share one degree")
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = ColoringJson {
            index: self.index(),
            coset_words: self
                .coset_words
                .iter()
                .map(|w| w.format(&self.names))
                .collect(),
            action: self
                .names
                .iter()
                .cloned()
                .zip(self.action.iter().map(Perm::to_string))
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    /// One row per (generator, color), colors 1-based.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for (name, p) in self.names.iter().zip(&self.action) {
            for c in 0..self.index() {
                w.serialize(ColoringRow {
                    generator: name,
                    color: c + 1,
                    image_color: p.apply(c) + 1,
                })?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

pub fn coloring_of(class: &SubgroupClass<'_>) -> Coloring {
    let table = build_coset_table(&class.rep);
    Coloring {
        names: class.rep.presentation().generator_names().to_vec(),
        coset_words: table.transversal,
        action: class.rep.assignment().images().to_vec(),
    }
}

/// Colorings with the subgroup fixing color 1: the non-identity cosets may
/// be labeled in any order, giving `(n − 1)!`.
pub fn colorings_fixing_c1_count(class: &SubgroupClass<'_>) -> u64 {
    factorial(class.index - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::{evaluate_word, is_transitive};
    use crate::enumerator::{canonical_form, enumerate_classes};
    use crate::presentation::{full_presentation, kleinian_presentation, parse_symbol};

    fn t10() -> crate::presentation::CoxeterSymbol {
        parse_symbol("3,3,6,2,2,2").unwrap()
    }

    #[test]
    fn s_swap_class() {
        let h = full_presentation(t10());
        let classes = enumerate_classes(&h, 2).unwrap();
        let class = classes
            .iter()
            .find(|c| c.rep.assignment().to_string() == "(1) (1) (1) (12)")
            .unwrap();
        let col = coloring_of(class);
        let words: Vec<String> = col.coset_words.iter().map(|w| h.format_word(w)).collect();
        assert_eq!(words, ["", "S"]);
        assert_eq!(&col.assignment(), class.rep.assignment());
        assert_eq!(colorings_fixing_c1_count(class), 1);
    }

    #[test]
    fn single_color() {
        let h = full_presentation(t10());
        let class = &enumerate_classes(&h, 1).unwrap()[0];
        let col = coloring_of(class);
        assert_eq!(col.index(), 1);
        assert!(col.coset_words[0].is_empty());
        assert!(col.assignment().is_trivial());
        assert_eq!(colorings_fixing_c1_count(class), 1);
    }

    #[test]
    fn kleinian_index_three_matches_table_row() {
        let k = kleinian_presentation(t10());
        let classes = enumerate_classes(&k, 3).unwrap();
        assert_eq!(classes.len(), 1);
        let col = coloring_of(&classes[0]);
        let printed = Assignment::parse(&["(123)", "(132)", "(23)"], 3).unwrap();
        assert_eq!(
            canonical_form(&col.assignment()).unwrap(),
            canonical_form(&printed).unwrap()
        );
    }

    #[test]
    fn words_reach_their_colors() {
        let sym = t10();
        for pres in [full_presentation(sym), kleinian_presentation(sym)] {
            for n in 1..=4 {
                for class in enumerate_classes(&pres, n).unwrap() {
                    let col = coloring_of(&class);
                    let a = col.assignment();
                    assert!(is_transitive(&a));
                    for (c, w) in col.coset_words.iter().enumerate() {
                        assert_eq!(evaluate_word(w, &a).unwrap().apply(0), c);
                    }
                    assert_eq!(colorings_fixing_c1_count(&class), factorial(n - 1));
                }
            }
        }
    }

    #[test]
    fn exports() {
        let h = full_presentation(t10());
        let classes = enumerate_classes(&h, 2).unwrap();
        let col = coloring_of(&classes[0]);
        let json: serde_json::Value = serde_json::from_str(&col.to_json().unwrap()).unwrap();
        assert_eq!(json["index"], 2);
        assert_eq!(json["coset_words"][0], "");
        assert_eq!(json["action"].as_object().unwrap().len(), 4);

        let mut buf = Vec::new();
        col.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("generator,color,image_color"));
        assert_eq!(lines.count(), 8);
    }
}
