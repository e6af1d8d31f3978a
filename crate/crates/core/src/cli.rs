//! Command-line front end.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coloring::coloring_of;
use crate::enumerator::{enumerate_classes, SubgroupClass};
use crate::error::{Error, Result};
use crate::oracle::{
    brute_force_classes, default_max_cosets, verify_class, Verdict, BRUTE_MAX_INDEX,
};
use crate::presentation::{
    catalog, lookup, parse_symbol, CatalogEntry, CoxeterSymbol, Geometry, GroupKind, Presentation,
};
use crate::stabilizer::{build_coset_table, schreier_generators};
use crate::table7::{compute_table, COLUMNS};

#[derive(Parser, Debug)]
#[command(
    name = "tetrasub",
    version,
    about = "Low-index subgroups of Coxeter tetrahedron groups and their Kleinian subgroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the catalog of Coxeter tetrahedra.
    List {
        #[arg(long)]
        geometry: Option<Geometry>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Enumerate index-n subgroups up to conjugacy.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Confirm each class's stabilizer by coset enumeration.
    Verify {
        #[command(flatten)]
        target: Target,
        /// Live-coset budget; defaults to 10 per (index, generator) pair.
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Compare the exhaustive oracle's class count with the enumerator's.
    OracleDiff {
        #[command(flatten)]
        target: Target,
    },
    /// Index 2/3/4 counts for every hyperbolic tetrahedron.
    Table7 {
        /// Compare against the published values, cell by cell.
        #[arg(long)]
        diff: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Export one class as an n-coloring.
    Coloring {
        #[command(flatten)]
        target: Target,
        /// 1-based class number, in `enumerate` order.
        #[arg(long = "class", default_value_t = 1)]
        ordinal: usize,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
}

#[derive(Args, Debug)]
pub struct Target {
    /// Catalog id such as t10.
    #[arg(long, conflicts_with = "symbol", required_unless_present = "symbol")]
    pub id: Option<String>,
    /// Coxeter symbol p,q,r,s,t,u.
    #[arg(long)]
    pub symbol: Option<String>,
    #[arg(long, default_value = "full")]
    pub group: GroupKind,
    #[arg(long)]
    pub index: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
}

struct Resolved {
    label: String,
    presentation: Presentation,
    index: usize,
}

impl Target {
    fn resolve(&self) -> Result<Resolved> {
        let (label, symbol): (String, CoxeterSymbol) = match (&self.id, &self.symbol) {
            (Some(id), _) => {
                let e = lookup(id)?;
                (format!("{} = [{}]", e.id, e.symbol), e.symbol)
            }
            (None, Some(s)) => {
                let sym = parse_symbol(s)?;
                (format!("[{sym}]"), sym)
            }
            (None, None) => return Err(Error::MalformedSymbol(String::new())),
        };
        if self.index == 0 {
            return Err(Error::ZeroIndex);
        }
        if self.index > BRUTE_MAX_INDEX {
            eprintln!(
                "warning: index {} is beyond the exhaustive oracle's range (at most {BRUTE_MAX_INDEX}); results are not cross-checked",
                self.index
            );
        }
        Ok(Resolved {
            label,
            presentation: Presentation::for_kind(self.group, symbol),
            index: self.index,
        })
    }
}

/// Whether an error came from bad input rather than a failed computation.
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::MalformedSymbol(_)
            | Error::EntryTooSmall { .. }
            | Error::ZeroIndex
            | Error::DegreeCap(_)
            | Error::UnknownId(_)
            | Error::OrdinalOutOfRange { .. }
    )
}

/// Runs a parsed command, returning the process exit code.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<i32> {
    match &cli.command {
        Command::List { geometry, format } => list(*geometry, *format, out),
        Command::Enumerate { target, format } => enumerate(target, *format, out),
        Command::Verify { target, max_cosets } => verify(target, *max_cosets, out),
        Command::OracleDiff { target } => oracle_diff(target, out),
        Command::Table7 { diff, jobs } => table7(*diff, *jobs, out),
        Command::Coloring {
            target,
            ordinal,
            format,
        } => coloring(target, *ordinal, *format, out),
    }
}

fn list<W: Write>(geometry: Option<Geometry>, format: Format, out: &mut W) -> Result<i32> {
    let entries: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| geometry.is_none_or(|g| e.geometry == g))
        .collect();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&entries)?)?,
        Format::Table => {
            for e in &entries {
                writeln!(
                    out,
                    "{:<4} [{}]  {}  ideal vertices: {}",
                    e.id, e.symbol, e.geometry, e.ideal_vertices
                )?;
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ClassJson {
    assignment: BTreeMap<String, String>,
    image_type: String,
    labeled_orbit_size: usize,
    stabilizer_generators: Vec<String>,
}

#[derive(Serialize)]
struct EnumerateJson {
    symbol: CoxeterSymbol,
    group: GroupKind,
    index: usize,
    classes: Vec<ClassJson>,
}

fn classes_label(count: usize) -> String {
    if count == 1 {
        "1 class".to_string()
    } else {
        format!("{count} classes")
    }
}

fn stabilizer_words(class: &SubgroupClass<'_>) -> Vec<String> {
    let pres = class.rep.presentation();
    schreier_generators(&build_coset_table(&class.rep), pres)
        .simplified
        .iter()
        .map(|w| pres.format_word(w))
        .collect()
}

fn enumerate<W: Write>(target: &Target, format: Format, out: &mut W) -> Result<i32> {
    let t = target.resolve()?;
    let pres = &t.presentation;
    let classes = enumerate_classes(pres, t.index)?;
    match format {
        Format::Json => {
            let doc = EnumerateJson {
                symbol: pres.symbol(),
                group: pres.kind(),
                index: t.index,
                classes: classes
                    .iter()
                    .map(|c| ClassJson {
                        assignment: c.rep.assignment().to_named_cycles(pres),
                        image_type: c.image_type.to_string(),
                        labeled_orbit_size: c.labeled_orbit_size,
                        stabilizer_generators: stabilizer_words(c),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Table => {
            writeln!(
                out,
                "{} {} group, index {}: {}",
                t.label,
                pres.kind(),
                t.index,
                classes_label(classes.len())
            )?;
            for (i, c) in classes.iter().enumerate() {
                let images: Vec<String> = pres
                    .generator_names()
                    .iter()
                    .zip(c.rep.assignment().images())
                    .map(|(n, p)| format!("{n}={p}"))
                    .collect();
                writeln!(
                    out,
                    "{:>3}. {}  image {}  orbit {}",
                    i + 1,
                    images.join(" "),
                    c.image_type,
                    c.labeled_orbit_size
                )?;
                writeln!(out, "     stabilizer: {}", stabilizer_words(c).join(", "))?;
            }
        }
    }
    Ok(0)
}

fn verify<W: Write>(target: &Target, max_cosets: Option<usize>, out: &mut W) -> Result<i32> {
    let t = target.resolve()?;
    let pres = &t.presentation;
    let cap = max_cosets.unwrap_or_else(|| default_max_cosets(t.index, pres.generator_count()));
    let classes = enumerate_classes(pres, t.index)?;
    writeln!(
        out,
        "{} {} group, index {}: {}, coset budget {cap}",
        t.label,
        pres.kind(),
        t.index,
        classes_label(classes.len())
    )?;
    let mut refuted = false;
    for (i, c) in classes.iter().enumerate() {
        let verdict = match verify_class(&c.rep, cap)? {
            Verdict::Verified => format!("closed({})", t.index),
            Verdict::Inconclusive => "inconclusive (coset budget exhausted)".to_string(),
            Verdict::Refuted(m) => {
                refuted = true;
                format!("REFUTED: closed({m}) on an inequivalent action")
            }
        };
        writeln!(out, "{:>3}. {}  {verdict}", i + 1, c.rep.assignment())?;
    }
    Ok(i32::from(refuted))
}

fn oracle_diff<W: Write>(target: &Target, out: &mut W) -> Result<i32> {
    let t = target.resolve()?;
    let pres = &t.presentation;
    let classes = enumerate_classes(pres, t.index)?;
    let brute = brute_force_classes(pres, t.index)?;
    let labeled: usize = classes.iter().map(|c| c.labeled_orbit_size).sum();
    let agree = brute.classes == classes.len() && brute.labeled == labeled;
    writeln!(
        out,
        "{} {} group, index {}: enumerator {} classes ({labeled} labeled), oracle {} classes ({} labeled), {} subgroups: {}",
        t.label,
        pres.kind(),
        t.index,
        classes.len(),
        brute.classes,
        brute.labeled,
        brute.subgroups,
        if agree { "AGREE" } else { "DISAGREE" }
    )?;
    Ok(i32::from(!agree))
}

fn column_name(col: usize) -> String {
    let (kind, n) = COLUMNS[col];
    let letter = match kind {
        GroupKind::Full => 'H',
        GroupKind::Kleinian => 'K',
    };
    format!("{letter}{n}")
}

fn table7<W: Write>(diff: bool, jobs: Option<usize>, out: &mut W) -> Result<i32> {
    let rows = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(|| compute_table(false))?,
        None => compute_table(false)?,
    };
    let mut mismatches = 0;
    let mut inconsistent = 0;
    let mut cells = 0;
    if !diff {
        writeln!(out, "id   symbol          H2  H3  H4  K2  K3  K4")?;
    }
    for row in &rows {
        if !diff {
            let counts: Vec<String> = row
                .cells
                .iter()
                .map(|c| format!("{:>3}", c.computed))
                .collect();
            writeln!(
                out,
                "{:<4} {:<15} {}",
                row.entry.id,
                format!("[{}]", row.entry.symbol),
                counts.join(" ")
            )?;
        }
        for (col, cell) in row.cells.iter().enumerate() {
            cells += 1;
            if !cell.consistent() {
                inconsistent += 1;
            }
            if !diff {
                continue;
            }
            let published = cell.reference.map_or("-".to_string(), |r| r.to_string());
            if cell.matches_reference() {
                writeln!(
                    out,
                    "PASS     {} {} computed {} published {published}",
                    row.entry.id,
                    column_name(col),
                    cell.computed
                )?;
            } else {
                mismatches += 1;
                let check = match cell.oracle {
                    Some(o) if o == cell.computed => format!("oracle {o} agrees with enumerator"),
                    Some(o) => format!("oracle {o} DISAGREES with enumerator"),
                    None => "oracle not run".to_string(),
                };
                let images: Vec<String> = cell
                    .by_image
                    .iter()
                    .map(|(t, k)| format!("{t}:{k}"))
                    .collect();
                let mut detail = format!("by image [{}]", images.join(" "));
                if let Some(m) = cell.under_reflection {
                    detail.push_str(&format!(", up to conjugacy in the full group {m}"));
                }
                writeln!(
                    out,
                    "MISMATCH {} {} computed {} published {published}; {check}; {detail}",
                    row.entry.id,
                    column_name(col),
                    cell.computed
                )?;
            }
        }
    }
    if diff {
        writeln!(
            out,
            "published values: {} of {cells} cells match, {mismatches} differ (warnings only)",
            cells - mismatches
        )?;
    }
    writeln!(
        out,
        "internal consistency: {}",
        if inconsistent == 0 {
            "enumerator and oracle agree on every cross-checked cell".to_string()
        } else {
            format!("{inconsistent} cells where enumerator and oracle DISAGREE")
        }
    )?;
    Ok(i32::from(inconsistent > 0))
}

fn coloring<W: Write>(
    target: &Target,
    ordinal: usize,
    format: ExportFormat,
    out: &mut W,
) -> Result<i32> {
    let t = target.resolve()?;
    let classes = enumerate_classes(&t.presentation, t.index)?;
    if ordinal == 0 || ordinal > classes.len() {
        return Err(Error::OrdinalOutOfRange {
            ordinal,
            count: classes.len(),
        });
    }
    let col = coloring_of(&classes[ordinal - 1]);
    match format {
        ExportFormat::Json => writeln!(out, "{}", col.to_json()?)?,
        ExportFormat::Csv => col.write_csv(&mut *out)?,
    }
    Ok(0)
}
