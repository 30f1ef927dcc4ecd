//! Result rows and their JSON, CSV and text renderings.

use serde::{Deserialize, Serialize};

use crate::biquandle::FiniteBiquandle;
use crate::bracket::{bracket_matrix, BracketError, BracketMatrix, VirtualBracket};
use crate::coloring::{counting_matrix_of, enumerate_colorings, CountingMatrix};
use crate::diagram::KnotoidDiagram;

/// Row and column order of printed matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// `x_1, …, x_n`.
    #[default]
    Element,
    /// `x_n, x_1, …, x_{n−1}`: for tables built on `Z_n`, ascending residues
    /// `0, 1, …, n − 1`.
    Residue,
}

impl Order {
    /// `perm[k]` is the element shown at position `k`.
    pub fn permutation(self, n: usize) -> Vec<usize> {
        match self {
            Order::Element => (0..n).collect(),
            Order::Residue => (0..n).map(|k| (k + n - 1) % n).collect(),
        }
    }

    pub fn labels(self, n: usize) -> Vec<String> {
        self.permutation(n).into_iter().map(|i| format!("x{}", i + 1)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub config: serde_json::Value,
    pub version: String,
    pub wall_time_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRow {
    pub modulus: u32,
    pub multiset: Vec<u32>,
    pub polynomial: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub name: String,
    pub code: String,
    pub status: Option<String>,
    pub classical: usize,
    #[serde(rename = "virtual")]
    pub virtual_crossings: usize,
    pub writhe: i64,
    pub labels: Vec<String>,
    pub counting_invariant: u64,
    pub counting_matrix: Vec<Vec<u64>>,
    pub bracket: Option<BracketRow>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub rows: Vec<InvariantRow>,
}

/// Counting data and, if a bracket is given, bracket data for one diagram.
pub fn compute_row(
    d: &KnotoidDiagram,
    x: &FiniteBiquandle,
    b: Option<&VirtualBracket>,
    order: Order,
) -> Result<InvariantRow, BracketError> {
    let n = x.size();
    let perm = order.permutation(n);
    let cols = enumerate_colorings(d, x);
    let CountingMatrix(m) = counting_matrix_of(&cols, n);
    let counting_matrix = perm.iter().map(|&i| perm.iter().map(|&j| m[i][j]).collect()).collect();
    let bracket = match b {
        None => None,
        Some(b) => {
            let bm: BracketMatrix = bracket_matrix(d, x, b)?;
            let mut poly = crate::ring::BracketPolynomial::zero(b.modulus());
            let mut multiset = Vec::new();
            for row in &bm.0 {
                for p in row {
                    for (e, k) in p.terms() {
                        poly.add_term(e, k);
                        multiset.extend(std::iter::repeat_n(e, k as usize));
                    }
                }
            }
            multiset.sort_unstable();
            Some(BracketRow {
                modulus: b.modulus().get(),
                multiset,
                polynomial: poly.to_string(),
                matrix: bm.permuted(&perm).rendered(),
            })
        }
    };
    Ok(InvariantRow {
        name: d.name().to_string(),
        code: d.code(),
        status: None,
        classical: d.classical_count(),
        virtual_crossings: d.virtual_count(),
        writhe: d.writhe(),
        labels: order.labels(n),
        counting_invariant: cols.len() as u64,
        counting_matrix,
        bracket,
        error: None,
    })
}

/// A row standing in for an entry that could not be computed.
pub fn error_row(name: &str, status: Option<String>, error: String) -> InvariantRow {
    InvariantRow {
        name: name.to_string(),
        code: String::new(),
        status,
        classical: 0,
        virtual_crossings: 0,
        writhe: 0,
        labels: Vec::new(),
        counting_invariant: 0,
        counting_matrix: Vec::new(),
        bracket: None,
        error: Some(error),
    }
}

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}

/// One CSV line per row; matrices flattened into `M_i_j` and `Mb_i_j`
/// columns (1-based display positions).
pub fn to_csv(rows: &[InvariantRow]) -> String {
    let n = rows.iter().map(|r| r.counting_matrix.len()).max().unwrap_or(0);
    let with_bracket = rows.iter().any(|r| r.bracket.is_some());
    let mut header: Vec<String> =
        ["name", "status", "code", "classical", "virtual", "writhe", "labels", "phi"].iter().map(|s| s.to_string()).collect();
    for i in 1..=n {
        for j in 1..=n {
            header.push(format!("M_{i}_{j}"));
        }
    }
    if with_bracket {
        header.push("phi_beta".into());
        for i in 1..=n {
            for j in 1..=n {
                header.push(format!("Mb_{i}_{j}"));
            }
        }
    }
    header.push("error".into());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory csv write");
    for r in rows {
        let mut rec = vec![
            r.name.clone(),
            r.status.clone().unwrap_or_default(),
            r.code.clone(),
            r.classical.to_string(),
            r.virtual_crossings.to_string(),
            r.writhe.to_string(),
            r.labels.join(" "),
            r.counting_invariant.to_string(),
        ];
        for i in 0..n {
            for j in 0..n {
                rec.push(r.counting_matrix.get(i).and_then(|row| row.get(j)).map(u64::to_string).unwrap_or_default());
            }
        }
        if with_bracket {
            rec.push(r.bracket.as_ref().map(|b| b.polynomial.clone()).unwrap_or_default());
            for i in 0..n {
                for j in 0..n {
                    rec.push(r.bracket.as_ref().and_then(|b| b.matrix.get(i)?.get(j).cloned()).unwrap_or_default());
                }
            }
        }
        rec.push(r.error.clone().unwrap_or_default());
        w.write_record(&rec).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("flush in-memory csv")).expect("csv output is utf-8")
}

fn matrix_text<T: ToString>(labels: &[String], m: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(T::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).chain(labels.iter().map(String::len)).max().unwrap_or(1);
    let mut s = format!("{:>w$} ", "", w = width);
    for l in labels {
        s.push_str(&format!(" {l:>width$}"));
    }
    s.push('\n');
    for (l, row) in labels.iter().zip(&cells) {
        s.push_str(&format!("{l:>width$} "));
        for c in row {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.push('\n');
    }
    s
}

pub fn to_text(rows: &[InvariantRow]) -> String {
    let mut s = String::new();
    for r in rows {
        s.push_str(&format!("== {}", r.name));
        if let Some(st) = &r.status {
            s.push_str(&format!(" [{st}]"));
        }
        s.push('\n');
        if let Some(e) = &r.error {
            s.push_str(&format!("error: {e}\n\n"));
            continue;
        }
        s.push_str(&format!("code: {}\ncrossings: {} classical, {} virtual; writhe {}\n", r.code, r.classical, r.virtual_crossings, r.writhe));
        s.push_str(&format!("colorings: {}\ncounting matrix:\n{}", r.counting_invariant, matrix_text(&r.labels, &r.counting_matrix)));
        if let Some(b) = &r.bracket {
            let ms: Vec<String> = b.multiset.iter().map(u32::to_string).collect();
            s.push_str(&format!("bracket multiset (Z_{}): {{{}}}\n", b.modulus, ms.join(",")));
            s.push_str(&format!("bracket polynomial: {}\nbracket matrix:\n{}", b.polynomial, matrix_text(&r.labels, &b.matrix)));
        }
        s.push('\n');
    }
    s
}
