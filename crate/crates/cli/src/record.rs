//! Machine-readable output records.

use serde::{Deserialize, Serialize};

use kline::vone::{TableRow, VGroupResult};

/// One computed group. Keys serialize in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub n: u32,
    pub m: u32,
    pub variant: String,
    pub method: String,
    /// Exponents of the cyclic 2-power summands, largest first.
    pub two_exponents: Vec<u64>,
    /// `2^e` for each summand, smallest first, as decimal strings.
    pub invariant_factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl From<&VGroupResult> for OutputRecord {
    fn from(r: &VGroupResult) -> Self {
        OutputRecord {
            family: r.family.to_string(),
            n: r.n,
            m: r.m,
            variant: r.variant.to_string(),
            method: r.method.to_string(),
            two_exponents: r.group.exponents().to_vec(),
            invariant_factors: r.group.invariant_factors().iter().map(ToString::to_string).collect(),
            status: None,
            timing_ms: None,
        }
    }
}

pub const CSV_HEADER: &str = "family,n,m,variant,method,two_exponents,invariant_factors,status,timing_ms";

impl OutputRecord {
    /// Sorted-key JSON object.
    pub fn to_json_value(&self) -> serde_json::Value {
        // serde_json's default map is ordered by key
        serde_json::to_value(self).expect("record is always serializable")
    }

    pub fn to_csv(&self) -> String {
        let join = |v: Vec<String>| v.join(";");
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.m,
            self.variant,
            self.method,
            join(self.two_exponents.iter().map(u64::to_string).collect()),
            join(self.invariant_factors.clone()),
            self.status.as_deref().unwrap_or(""),
            self.timing_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
        )
    }

    pub fn to_text(&self) -> String {
        let group = if self.two_exponents.is_empty() {
            "0".to_string()
        } else {
            self.two_exponents.iter().map(|e| format!("Z/2^{e}")).collect::<Vec<_>>().join(" + ")
        };
        let mut line = format!(
            "{} n={} m={} variant={} method={}: {group}",
            self.family, self.n, self.m, self.variant, self.method
        );
        if let Some(t) = self.timing_ms {
            line.push_str(&format!(" ({t:.3} ms)"));
        }
        line
    }
}

/// One line of a table: `eSp` and the two Spin exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub n: u32,
    pub m: u32,
    pub esp: Option<u64>,
    pub e1: u64,
    pub e2: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_reference: Option<bool>,
}

impl TableRecord {
    pub fn new(n: u32, row: &TableRow) -> Self {
        TableRecord { n, m: row.m, esp: row.esp, e1: row.e1, e2: row.e2, matches_reference: None }
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!(
            "{},{},{},{}",
            self.m,
            self.esp.map(|e| e.to_string()).unwrap_or_default(),
            self.e1,
            self.e2
        );
        if let Some(ok) = self.matches_reference {
            s.push_str(if ok { ",match" } else { ",MISMATCH" });
        }
        s
    }
}
