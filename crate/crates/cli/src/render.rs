//! Text, JSON and CSV output.

use std::io::{self, Write};

use knotrep::repclassify::BoundEffect;
use knotrep::surfacescan::Scan;
use knotrep::{LemmaSolution, PdCode, PretzelTriple, RepReport, ScanRow, TorusKnot, Verdict};
use serde::Serialize;

/// One line of `classify --range`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RangeEntry {
    pub input: String,
    pub normalized: String,
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
    pub torus: Option<TorusKnot>,
}

impl From<&RepReport> for RangeEntry {
    fn from(r: &RepReport) -> Self {
        RangeEntry {
            input: r.input.clone(),
            normalized: r.normalized.clone(),
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            torus: r.torus,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Trace<'a> {
    input: String,
    pd: &'a [[u32; 4]],
    components: usize,
    is_knot: bool,
}

impl<'a> Trace<'a> {
    pub fn new(t: PretzelTriple, pd: &'a PdCode, components: usize) -> Self {
        Trace {
            input: t.to_string(),
            pd: &pd.crossings,
            components,
            is_knot: components == 1,
        }
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> serde_json::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out).map_err(serde_json::Error::io)
}

fn bounds(lower: i64, upper: i64, exact: Option<i64>) -> String {
    match exact {
        Some(n) => format!("r(K) = {n}"),
        None => format!("{lower} <= r(K) <= {upper}"),
    }
}

/// Writes rows with every column but the last padded to a common width.
fn table(rows: &[Vec<String>], out: &mut dyn Write) -> io::Result<()> {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.extend(std::iter::repeat_n(
                    ' ',
                    widths[c] - cell.chars().count() + 2,
                ));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

fn joined<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

struct RowCells {
    types: String,
    slopes: String,
    sum: String,
    arcs: String,
    sheets: String,
    longitudes: String,
    chi: String,
    genus: String,
    family: String,
    verdict: &'static str,
    reason: String,
}

impl RowCells {
    const HEADER: [&'static str; 11] = [
        "types",
        "slopes",
        "reciprocal_sum",
        "N",
        "sheets",
        "longitudes",
        "chi",
        "genus",
        "family",
        "verdict",
        "reason",
    ];

    fn new(row: &ScanRow, sep: &str) -> RowCells {
        let p = row.pattern.as_ref();
        let field = |f: &dyn Fn(&knotrep::SurfacePattern) -> String| p.map(f).unwrap_or_default();
        let (verdict, reason) = match row.verdict() {
            Verdict::Accepted => ("accepted", String::new()),
            Verdict::Rejected(reason) => ("rejected", reason),
        };
        RowCells {
            types: joined(&row.types, ""),
            slopes: joined(&row.slopes, sep),
            sum: row.reciprocal_sum.to_string(),
            arcs: field(&|p| p.arcs.to_string()),
            sheets: field(&|p| joined(&p.sheets, sep)),
            longitudes: field(&|p| p.longitudes.to_string()),
            chi: field(&|p| p.chi.to_string()),
            genus: field(&|p| p.genus.to_string()),
            family: p
                .and_then(|p| p.family)
                .map(|f| f.to_string())
                .unwrap_or_default(),
            verdict,
            reason,
        }
    }

    fn into_vec(self) -> Vec<String> {
        vec![
            self.types,
            self.slopes,
            self.sum,
            self.arcs,
            self.sheets,
            self.longitudes,
            self.chi,
            self.genus,
            self.family,
            self.verdict.to_string(),
            self.reason,
        ]
    }
}

fn placeholder(cells: Vec<String>) -> Vec<String> {
    cells
        .into_iter()
        .map(|c| if c.is_empty() { "-".to_string() } else { c })
        .collect()
}

fn surface_table(rows: &[ScanRow], indent: &str, out: &mut dyn Write) -> io::Result<()> {
    let mut cells = vec![RowCells::HEADER.map(String::from).to_vec()];
    cells.extend(
        rows.iter()
            .map(|row| placeholder(RowCells::new(row, ",").into_vec())),
    );
    let mut buf = Vec::new();
    table(&cells, &mut buf)?;
    for line in String::from_utf8_lossy(&buf).lines() {
        writeln!(out, "{indent}{line}")?;
    }
    Ok(())
}

pub fn surfaces_text(scan: &Scan, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "input: {}", scan.input)?;
    let mirror = if scan.normalized.mirror {
        " (mirror image)"
    } else {
        ""
    };
    writeln!(out, "normalized: {}{mirror}", scan.normalized.triple)?;
    let surviving = scan.patterns().count();
    let accepted = scan.patterns().filter(|p| p.verdict.is_accepted()).count();
    writeln!(
        out,
        "assignments: {} scanned, {surviving} structurally consistent, {accepted} accepted",
        scan.rows.len()
    )?;
    surface_table(&scan.rows, "", out)
}

pub fn surfaces_csv(rows: &[ScanRow], out: &mut dyn Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RowCells::HEADER)?;
    for row in rows {
        w.write_record(RowCells::new(row, " ").into_vec())?;
    }
    w.flush()?;
    Ok(())
}

pub fn report_text(r: &RepReport, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "input: {}", r.input)?;
    let mirror = if r.mirror == Some(true) {
        " (mirror image)"
    } else {
        ""
    };
    writeln!(out, "normalized: {}{mirror}", r.normalized)?;
    if let Some(knot) = r.is_knot {
        writeln!(out, "knot: {}", if knot { "yes" } else { "no" })?;
    }
    if let Some(b) = r.bridge_upper {
        writeln!(out, "bridge number: <= {b}")?;
    }
    if let Some(t) = r.torus {
        writeln!(out, "torus knot: {t}")?;
    }
    writeln!(
        out,
        "representativity: {}",
        bounds(r.lower, r.upper, r.exact)
    )?;
    writeln!(out, "rules:")?;
    for (i, rule) in r.rules.iter().enumerate() {
        let effect = match rule.effect {
            BoundEffect::Note => "note".to_string(),
            other => other.to_string(),
        };
        let conditional = if rule.conditional {
            ", conditional"
        } else {
            ""
        };
        writeln!(out, "  {}. {} [{effect}{conditional}]", i + 1, rule.name)?;
        writeln!(out, "     {}", rule.citation)?;
    }
    if !r.surfaces.is_empty() {
        writeln!(out, "surfaces:")?;
        surface_table(&r.surfaces, "  ", out)?;
    }
    Ok(())
}

pub fn range_text(entries: &[RangeEntry], out: &mut dyn Write) -> io::Result<()> {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            let mut row = vec![e.input.clone(), bounds(e.lower, e.upper, e.exact)];
            if let Some(t) = e.torus {
                row.push(t.to_string());
            }
            row
        })
        .collect();
    table(&rows, out)
}

pub fn lemma_text(solutions: &[LemmaSolution], out: &mut dyn Write) -> io::Result<()> {
    for s in solutions {
        writeln!(
            out,
            "{} {} {} | k={} l={} d={}",
            s.a, s.b, s.c, s.k, s.l, s.d
        )?;
    }
    Ok(())
}

pub fn trace_text(
    t: PretzelTriple,
    pd: &PdCode,
    components: usize,
    out: &mut dyn Write,
) -> io::Result<()> {
    writeln!(out, "input: {t}")?;
    writeln!(out, "pd: {}", pd.to_json())?;
    writeln!(out, "components: {components}")
}
