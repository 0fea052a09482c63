//! Tables of partitions by statistic, rendered as aligned text, CSV or JSON
//! lines. Row and cell order is fixed, so output is byte-stable.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cores::{cores_matching, five_core_crank, phi2, CoreFilter, Orbit, OrbitVariant};
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::stats::Statistic;

/// Output format shared by every table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (text, csv, json)")),
        }
    }
}

/// One JSON line: `{"partition": [...], "weight": n, "stats": {...}}`.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub partition: Partition,
    pub weight: u32,
    pub stats: BTreeMap<String, Value>,
}

fn json_lines<T: Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(&item).expect("serializable"));
        out.push('\n');
    }
    out
}

fn csv_string(header: &[String], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Left-aligned columns separated by two spaces, without trailing blanks.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                let pad = widths[c] - cell.chars().count();
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Partitions of `n` grouped by `(row_stat mod row_mod, col_stat mod col_mod)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyTable {
    pub n: u32,
    pub row_stat: Statistic,
    pub row_mod: u32,
    pub col_stat: Statistic,
    pub col_mod: u32,
    /// Cells keyed by `(row residue, column residue)`; partitions in
    /// enumeration order.
    pub cells: BTreeMap<(u32, u32), Vec<Partition>>,
}

/// Builds the grid; the default arrangement is srank mod 4 by stcrank mod 5.
pub fn classify(
    n: u32,
    row_stat: Statistic,
    row_mod: u32,
    col_stat: Statistic,
    col_mod: u32,
) -> Result<ClassifyTable> {
    if row_mod == 0 || col_mod == 0 {
        return Err(Error::ZeroModulus);
    }
    row_stat.check_weight(n)?;
    col_stat.check_weight(n)?;
    let mut cells: BTreeMap<(u32, u32), Vec<Partition>> = BTreeMap::new();
    for pi in partitions(n) {
        let r = row_stat.value(&pi)?.rem_euclid(row_mod as i64) as u32;
        let c = col_stat.value(&pi)?.rem_euclid(col_mod as i64) as u32;
        cells.entry((r, c)).or_default().push(pi);
    }
    Ok(ClassifyTable {
        n,
        row_stat,
        row_mod,
        col_stat,
        col_mod,
        cells,
    })
}

impl ClassifyTable {
    /// Row residues with at least one partition.
    pub fn rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.cells.keys().map(|&(r, _)| r).collect();
        rows.dedup();
        rows
    }

    pub fn cell(&self, row: u32, col: u32) -> &[Partition] {
        self.cells.get(&(row, col)).map_or(&[], Vec::as_slice)
    }

    /// Number of partitions in each column.
    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.col_mod)
            .map(|c| self.rows().iter().map(|&r| self.cell(r, c).len()).sum())
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Csv => {
                let header = vec![
                    format!("{}_mod{}", self.row_stat, self.row_mod),
                    format!("{}_mod{}", self.col_stat, self.col_mod),
                    "partition".to_string(),
                ];
                let rows = self.cells.iter().flat_map(|(&(r, c), ps)| {
                    ps.iter()
                        .map(move |p| vec![r.to_string(), c.to_string(), p.to_token()])
                });
                csv_string(&header, rows)
            }
            Format::Json => json_lines(self.cells.values().flatten().map(|p| {
                let stats = [self.row_stat, self.col_stat]
                    .into_iter()
                    .map(|s| (s.to_string(), json!(s.value(p).expect("checked domain"))))
                    .collect();
                Record {
                    partition: p.clone(),
                    weight: p.weight(),
                    stats,
                }
            })),
        }
    }

    fn render_text(&self) -> String {
        let mut rows = Vec::new();
        let mut header = vec![format!("{}\\{}", self.row_stat, self.col_stat)];
        header.extend((0..self.col_mod).map(|c| c.to_string()));
        rows.push(header);
        for r in self.rows() {
            let depth = (0..self.col_mod)
                .map(|c| self.cell(r, c).len())
                .max()
                .unwrap_or(0);
            for line in 0..depth {
                let mut row = vec![if line == 0 {
                    r.to_string()
                } else {
                    String::new()
                }];
                for c in 0..self.col_mod {
                    row.push(
                        self.cell(r, c)
                            .get(line)
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                    );
                }
                rows.push(row);
            }
        }
        let mut out = format!(
            "partitions of {} by {} mod {} (rows) and {} mod {} (columns)\n",
            self.n, self.row_stat, self.row_mod, self.col_stat, self.col_mod
        );
        out.push_str(&aligned(&rows));
        out
    }
}

/// Orbits of the partitions of `n`, one row per orbit, columns by 5-core crank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTable {
    pub n: u32,
    pub variant: OrbitVariant,
    pub orbits: Vec<Orbit>,
}

pub fn orbit_table(n: u32, variant: OrbitVariant) -> Result<OrbitTable> {
    Ok(OrbitTable {
        n,
        variant,
        orbits: crate::cores::orbits(n, variant)?,
    })
}

impl OrbitTable {
    /// The srank class shared by an orbit's members, if they share one.
    pub fn srank_class(orbit: &Orbit) -> Option<u32> {
        let first = orbit.members[0].srank().rem_euclid(4);
        orbit
            .members
            .iter()
            .all(|m| m.srank().rem_euclid(4) == first)
            .then_some(first as u32)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut rows = vec![vec!["orbit".to_string(), "srank".to_string()]];
                rows[0].extend((0..5).map(|c| format!("c5={c}")));
                for (i, o) in self.orbits.iter().enumerate() {
                    let mut row = vec![
                        (i + 1).to_string(),
                        Self::srank_class(o).map_or("*".to_string(), |s| s.to_string()),
                    ];
                    row.extend(o.members.iter().map(ToString::to_string));
                    rows.push(row);
                }
                let mut out = format!("orbits of the partitions of {}\n", self.n);
                out.push_str(&aligned(&rows));
                out
            }
            Format::Csv => {
                let header: Vec<String> = ["orbit", "c5core", "srank_mod4", "partition"]
                    .map(String::from)
                    .to_vec();
                let rows = self.orbits.iter().enumerate().flat_map(|(i, o)| {
                    o.members.iter().enumerate().map(move |(c, m)| {
                        vec![
                            (i + 1).to_string(),
                            c.to_string(),
                            m.srank().rem_euclid(4).to_string(),
                            m.to_token(),
                        ]
                    })
                });
                csv_string(&header, rows)
            }
            Format::Json => json_lines(self.orbits.iter().enumerate().flat_map(|(i, o)| {
                o.members.iter().enumerate().map(move |(c, m)| Record {
                    partition: m.clone(),
                    weight: m.weight(),
                    stats: [
                        ("orbit".to_string(), json!(i + 1)),
                        ("c5core".to_string(), json!(c)),
                        ("srank".to_string(), json!(m.srank())),
                    ]
                    .into_iter()
                    .collect(),
                })
            })),
        }
    }
}

/// One record per partition of `n` with the requested statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatTable {
    pub n: u32,
    pub stats: Vec<Statistic>,
    pub rows: Vec<(Partition, Vec<i64>)>,
}

pub fn stat_table(n: u32, stats: &[Statistic]) -> Result<StatTable> {
    for s in stats {
        s.check_weight(n)?;
    }
    let rows = partitions(n)
        .map(|pi| {
            let values = stats
                .iter()
                .map(|s| s.value(&pi))
                .collect::<Result<Vec<_>>>()?;
            Ok((pi, values))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StatTable {
        n,
        stats: stats.to_vec(),
        rows,
    })
}

impl StatTable {
    pub fn render(&self, format: Format) -> String {
        let mut header = vec!["partition".to_string(), "weight".to_string()];
        header.extend(self.stats.iter().map(ToString::to_string));
        match format {
            Format::Text => {
                let mut rows = vec![header];
                for (pi, values) in &self.rows {
                    let mut row = vec![pi.to_string(), pi.weight().to_string()];
                    row.extend(values.iter().map(ToString::to_string));
                    rows.push(row);
                }
                aligned(&rows)
            }
            Format::Csv => csv_string(
                &header,
                self.rows.iter().map(|(pi, values)| {
                    let mut row = vec![pi.to_token(), pi.weight().to_string()];
                    row.extend(values.iter().map(ToString::to_string));
                    row
                }),
            ),
            Format::Json => json_lines(self.rows.iter().map(|(pi, values)| {
                Record {
                    partition: pi.clone(),
                    weight: pi.weight(),
                    stats: self
                        .stats
                        .iter()
                        .zip(values)
                        .map(|(s, v)| (s.to_string(), json!(v)))
                        .collect(),
                }
            })),
        }
    }
}

/// The t-cores of `n` passing a filter, with their n-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreTable {
    pub n: u32,
    pub t: u32,
    pub filter: CoreFilter,
    pub cores: Vec<Partition>,
}

pub fn core_table(n: u32, t: u32, filter: CoreFilter) -> Result<CoreTable> {
    Ok(CoreTable {
        n,
        t,
        filter,
        cores: cores_matching(n, t, filter)?,
    })
}

impl CoreTable {
    fn has_crank(&self) -> bool {
        self.t == 5 && self.n % 5 == 4
    }

    fn row(&self, core: &Partition) -> (Vec<i64>, i64, Option<u32>) {
        let n = phi2(core, self.t).expect("listed cores are cores");
        let c5 = self
            .has_crank()
            .then(|| five_core_crank(core).expect("weight is 4 mod 5"));
        (n.coords().to_vec(), core.srank(), c5)
    }

    pub fn render(&self, format: Format) -> String {
        let mut header = vec!["partition".to_string(), "weight".to_string()];
        header.extend((0..self.t).map(|i| format!("n{i}")));
        header.push("srank".to_string());
        if self.has_crank() {
            header.push("c5core".to_string());
        }
        let line = |core: &Partition, token: String| {
            let (nv, s, c5) = self.row(core);
            let mut row = vec![token, core.weight().to_string()];
            row.extend(nv.iter().map(ToString::to_string));
            row.push(s.to_string());
            row.extend(c5.map(|c| c.to_string()));
            row
        };
        match format {
            Format::Text => {
                let mut rows = vec![header];
                rows.extend(self.cores.iter().map(|c| line(c, c.to_string())));
                let mut out = format!("{}-cores of {}: {}\n", self.t, self.n, self.cores.len());
                out.push_str(&aligned(&rows));
                out
            }
            Format::Csv => csv_string(&header, self.cores.iter().map(|c| line(c, c.to_token()))),
            Format::Json => json_lines(self.cores.iter().map(|core| {
                let (nv, s, c5) = self.row(core);
                let mut stats: BTreeMap<String, Value> = BTreeMap::new();
                stats.insert("nvector".into(), json!(nv));
                stats.insert("srank".into(), json!(s));
                if let Some(c) = c5 {
                    stats.insert("c5core".into(), json!(c));
                }
                Record {
                    partition: core.clone(),
                    weight: core.weight(),
                    stats,
                }
            })),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_nine_shape() {
        let t = classify(9, Statistic::Srank, 4, Statistic::Stcrank, 5).unwrap();
        assert_eq!(t.rows(), vec![0, 2]);
        for c in 0..5 {
            assert_eq!(t.cell(0, c).len(), 4);
            assert_eq!(t.cell(2, c).len(), 2);
        }
        assert_eq!(t.column_sums(), vec![6; 5]);
    }

    #[test]
    fn classify_zero() {
        let t = classify(0, Statistic::Srank, 4, Statistic::Stcrank, 5).unwrap();
        assert_eq!(t.cells.len(), 1);
        assert_eq!(t.cell(0, 0), &[Partition::empty()]);
        assert!(t.render(Format::Text).contains("()"));
    }

    #[test]
    fn csv_and_json_shapes() {
        let t = stat_table(1, &[Statistic::Srank, Statistic::Stcrank]).unwrap();
        assert_eq!(
            t.render(Format::Csv),
            "partition,weight,srank,stcrank\r\n1^1,1,0,0\r\n"
        );
        assert_eq!(
            t.render(Format::Json),
            "{\"partition\":[1],\"weight\":1,\"stats\":{\"srank\":0,\"stcrank\":0}}\n"
        );
    }

    #[test]
    fn orbit_rows() {
        let t = orbit_table(4, OrbitVariant::SrankPreserving).unwrap();
        assert_eq!(t.orbits.len(), 1);
        assert_eq!(t.render(Format::Csv).lines().count(), 6);
    }

    #[test]
    fn core_rows() {
        let t = core_table(9, 5, CoreFilter::default()).unwrap();
        assert_eq!(t.cores.len(), 5);
        assert!(t
            .render(Format::Csv)
            .starts_with("partition,weight,n0,n1,n2,n3,n4,srank,c5core"));
    }
}
