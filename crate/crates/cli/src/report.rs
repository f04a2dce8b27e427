//! Output formatting.

use serde::Serialize;
use sl2chars::numfield::{UnitSquareIdeal, UnitVerdict};
use sl2chars::{CharGroupDescriptor, Error, IntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub key: Option<&'static str>,
    pub poly: String,
    pub a: Option<u32>,
    pub q4: Option<u32>,
    pub r4: Option<u32>,
    pub order: Option<u128>,
    pub structure: Option<Vec<u64>>,
    pub split2: Option<String>,
    pub split3: Option<String>,
    pub expected: Option<u128>,
    /// `match`, `mismatch`, `flagged-unknown`, `error` or `-` without an expectation.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl FieldRecord {
    pub fn new(
        key: Option<&'static str>,
        poly: &IntPoly,
        expected: Option<u128>,
        outcome: Result<CharGroupDescriptor, Error>,
    ) -> FieldRecord {
        let mut rec = FieldRecord {
            key,
            poly: poly.to_string(),
            a: None,
            q4: None,
            r4: None,
            order: None,
            structure: None,
            split2: None,
            split3: None,
            expected,
            status: "error".into(),
            generators: None,
            error: None,
        };
        match outcome {
            Ok(d) => {
                rec.status = match expected {
                    Some(e) if e == d.order => "match".into(),
                    Some(_) => "mismatch".into(),
                    None => "-".into(),
                };
                rec.a = Some(d.a);
                rec.q4 = Some(d.q4);
                rec.r4 = Some(d.r4);
                rec.order = Some(d.order);
                rec.split2 = Some(d.split2.to_string());
                rec.split3 = Some(d.split3.to_string());
                rec.structure = Some(d.structure);
                rec.generators = Some(d.generators);
            }
            Err(e) => rec.error = Some(e.to_string()),
        }
        rec
    }

    fn cells(&self) -> Vec<String> {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut cells = Vec::new();
        if let Some(k) = self.key {
            cells.push(k.to_string());
        }
        cells.extend([
            self.poly.clone(),
            opt(self.a.map(|x| x.to_string())),
            opt(self.q4.map(|x| x.to_string())),
            opt(self.r4.map(|x| x.to_string())),
            opt(self.order.map(|x| x.to_string())),
            opt(self
                .structure
                .as_ref()
                .map(|s| format!("{s:?}").replace(' ', ""))),
            opt(self.split2.clone()),
            opt(self.split3.clone()),
            opt(self.expected.map(|x| x.to_string())),
            match &self.error {
                Some(e) => format!("{} ({e})", self.status),
                None => self.status.clone(),
            },
        ]);
        cells
    }
}

const HEADER: [&str; 10] = [
    "poly",
    "a",
    "q4",
    "r4",
    "order",
    "structure",
    "split2",
    "split3",
    "expected",
    "status",
];

pub fn field_table(records: &[FieldRecord], format: Format) -> String {
    let keyed = records.iter().any(|r| r.key.is_some());
    let mut header: Vec<String> = HEADER.iter().map(|s| s.to_string()).collect();
    if keyed {
        header.insert(0, "key".into());
    }
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = header.join("\t") + "\n";
            for r in records {
                out += &(r.cells().join("\t") + "\n");
            }
            out
        }
        Format::Human => {
            let rows: Vec<Vec<String>> = std::iter::once(header)
                .chain(records.iter().map(FieldRecord::cells))
                .collect();
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|i| rows.iter().map(|r| r[i].chars().count()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for r in &rows {
                let line: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                out += line.join("  ").trim_end();
                out.push('\n');
            }
            out
        }
    }
}

pub fn unit_ideal(ideal: &UnitSquareIdeal, format: Format) -> String {
    let verdict = match ideal.verdict {
        UnitVerdict::Trivial => "abelianization trivial",
        UnitVerdict::Inconclusive => "inconclusive from supplied units",
    };
    match format {
        Format::Json => {
            let v =
                serde_json::json!({"unit_ideal_norm": ideal.norm.to_string(), "verdict": verdict});
            format!("{v}\n")
        }
        Format::Tsv => format!("unit_ideal_norm\tverdict\n{}\t{verdict}\n", ideal.norm),
        Format::Human => format!("ideal (u^2 - 1): norm {}, {verdict}\n", ideal.norm),
    }
}
