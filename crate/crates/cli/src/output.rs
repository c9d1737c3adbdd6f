use serde::{Deserialize, Serialize};

use degenstir::verify::{Outcome, Report};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order_r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub family: String,
    pub params: TableParams,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(["n", "k", "value"])
            .expect("in-memory write");
        for row in &self.rows {
            let k = row.k.map(|k| k.to_string()).unwrap_or_default();
            w.write_record([row.n.to_string(), k, row.value.clone()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            match row.k {
                Some(k) => out.push_str(&format!("{} {} {}\n", row.n, k, row.value)),
                None => out.push_str(&format!("{} {}\n", row.n, row.value)),
            }
        }
        out
    }
}

#[derive(Serialize)]
struct CellJson<'a> {
    cell: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    passed: bool,
    total: usize,
    failures: usize,
    summary: String,
    cells: Vec<CellJson<'a>>,
}

pub fn report_json(report: &Report) -> String {
    let cells = report
        .results
        .iter()
        .map(|c| match &c.outcome {
            Outcome::Pass => CellJson {
                cell: &c.label,
                pass: true,
                detail: None,
            },
            Outcome::Fail { detail } => CellJson {
                cell: &c.label,
                pass: false,
                detail: Some(detail),
            },
        })
        .collect();
    let doc = ReportJson {
        identity: report.identity.name(),
        passed: report.passed(),
        total: report.total(),
        failures: report.failures(),
        summary: report.summary(),
        cells,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}
