//! Index-2/3/4 class counts for every hyperbolic catalog entry, compared
//! against published reference values.

use rayon::prelude::*;

use crate::enumerator::{count_kleinian_classes_under_reflection, enumerate_classes, ImageType};
use crate::error::{Error, Result};
use crate::oracle::brute_force_classes;
use crate::presentation::{catalog, CatalogEntry, Geometry, GroupKind, Presentation};

const REFERENCE: &str = include_str!("../data/table7.tsv");

/// Column order of a row: H at index 2, 3, 4, then K at index 2, 3, 4.
pub const COLUMNS: [(GroupKind, usize); 6] = [
    (GroupKind::Full, 2),
    (GroupKind::Full, 3),
    (GroupKind::Full, 4),
    (GroupKind::Kleinian, 2),
    (GroupKind::Kleinian, 3),
    (GroupKind::Kleinian, 4),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub id: String,
    pub counts: [usize; 6],
}

/// The published values, in file order.
pub fn reference_rows() -> Result<Vec<ReferenceRow>> {
    parse_reference(REFERENCE)
}

pub fn parse_reference(text: &str) -> Result<Vec<ReferenceRow>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Io(format!("malformed reference row: {line}"));
        if fields.len() != 7 {
            return Err(bad());
        }
        let mut counts = [0usize; 6];
        for (c, f) in counts.iter_mut().zip(&fields[1..]) {
            *c = f.parse().map_err(|_| bad())?;
        }
        rows.push(ReferenceRow {
            id: fields[0].to_string(),
            counts,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cell {
    pub computed: usize,
    pub reference: Option<usize>,
    /// Class count from the exhaustive oracle, filled in for mismatching
    /// cells (or for every cell when requested).
    pub oracle: Option<usize>,
    /// Classes per image type, in image-type order.
    pub by_image: Vec<(ImageType, usize)>,
    /// Kleinian cells only: classes up to conjugacy in the full group.
    pub under_reflection: Option<usize>,
}

impl Cell {
    pub fn matches_reference(&self) -> bool {
        self.reference == Some(self.computed)
    }

    /// False only when the oracle ran and disagreed.
    pub fn consistent(&self) -> bool {
        self.oracle.is_none_or(|o| o == self.computed)
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub entry: CatalogEntry,
    pub cells: [Cell; 6],
}

/// Catalog entries with a reference row: the hyperbolic tetrahedra.
pub fn hyperbolic_entries() -> Vec<CatalogEntry> {
    catalog()
        .into_iter()
        .filter(|e| {
            matches!(
                e.geometry,
                Geometry::HyperbolicCompact | Geometry::HyperbolicNoncompact
            )
        })
        .collect()
}

fn compute_row(
    entry: &CatalogEntry,
    reference: Option<&ReferenceRow>,
    always_oracle: bool,
) -> Result<Row> {
    let full = Presentation::for_kind(GroupKind::Full, entry.symbol);
    let kleinian = Presentation::for_kind(GroupKind::Kleinian, entry.symbol);
    let mut cells: [Cell; 6] = Default::default();
    for (col, &(kind, n)) in COLUMNS.iter().enumerate() {
        let pres = match kind {
            GroupKind::Full => &full,
            GroupKind::Kleinian => &kleinian,
        };
        let classes = enumerate_classes(pres, n)?;
        let mut by_image: Vec<(ImageType, usize)> = Vec::new();
        for c in &classes {
            match by_image.iter_mut().find(|(t, _)| *t == c.image_type) {
                Some((_, k)) => *k += 1,
                None => by_image.push((c.image_type, 1)),
            }
        }
        by_image.sort();
        let computed = classes.len();
        let reference = reference.map(|r| r.counts[col]);
        let oracle = if always_oracle || reference != Some(computed) {
            Some(brute_force_classes(pres, n)?.classes)
        } else {
            None
        };
        let under_reflection = match kind {
            GroupKind::Kleinian => Some(count_kleinian_classes_under_reflection(pres, n)?),
            GroupKind::Full => None,
        };
        cells[col] = Cell {
            computed,
            reference,
            oracle,
            by_image,
            under_reflection,
        };
    }
    Ok(Row {
        entry: entry.clone(),
        cells,
    })
}

/// Computes every row in catalog order; mismatching cells are cross-checked
/// with the exhaustive oracle.
pub fn compute_table(always_oracle: bool) -> Result<Vec<Row>> {
    let reference = reference_rows()?;
    hyperbolic_entries()
        .par_iter()
        .map(|e| compute_row(e, reference.iter().find(|r| r.id == e.id), always_oracle))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_has_every_hyperbolic_entry() {
        let rows = reference_rows().unwrap();
        assert_eq!(rows.len(), 32);
        let ids: Vec<String> = hyperbolic_entries().into_iter().map(|e| e.id).collect();
        let listed: Vec<String> = rows.iter().map(|r| r.id.clone()).collect();
        assert_eq!(ids, listed);
        let t19 = rows.iter().find(|r| r.id == "t19").unwrap();
        assert_eq!(t19.counts, [15, 0, 35, 7, 0, 29]);
    }

    #[test]
    fn rejects_short_rows() {
        assert!(parse_reference("t1\t1\t2").is_err());
        assert!(parse_reference("t1 1 2 3 4 5 x").is_err());
        assert_eq!(parse_reference("# only a comment\n").unwrap(), vec![]);
    }

    #[test]
    fn t10_row() {
        let entry = crate::presentation::lookup("t10").unwrap();
        let row = compute_row(&entry, None, true).unwrap();
        let computed: Vec<usize> = row.cells.iter().map(|c| c.computed).collect();
        assert_eq!(computed, [3, 1, 2, 1, 1, 1]);
        assert!(row.cells.iter().all(Cell::consistent));
    }
}
