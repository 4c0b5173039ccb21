//! Serializable reports. Big integers are emitted as JSON numbers of any
//! size, so every document parses back into the same struct and re-emits
//! byte for byte.

use std::str::FromStr;

use num_bigint::BigInt;
use potts_core::pointcount::CountReport;
use potts_core::ClassPoly;
use serde::{Deserialize, Serialize};
use serde_json::Number;

pub fn number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

pub fn bigint(n: &Number) -> Option<BigInt> {
    BigInt::from_str(&n.to_string()).ok()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassOut {
    /// Coefficients of `T^0, T^1, ...`.
    pub coefficients: Vec<Number>,
    pub rendered: String,
}

impl ClassOut {
    pub fn to_class(&self) -> Option<ClassPoly> {
        Some(ClassPoly::from_coeffs(self.coefficients.iter().map(bigint).collect::<Option<_>>()?))
    }
}

impl From<&ClassPoly> for ClassOut {
    fn from(c: &ClassPoly) -> Self {
        ClassOut { coefficients: c.coeffs().iter().map(number).collect(), rendered: c.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub prime: u64,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOut {
    pub prime: u64,
    pub predicted: Number,
    pub observed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountOut {
    pub ambient_dim: usize,
    pub samples: Vec<Sample>,
    pub class: ClassOut,
    pub check: CheckOut,
}

impl From<&CountReport> for CountOut {
    fn from(r: &CountReport) -> Self {
        CountOut {
            ambient_dim: r.ambient_dim,
            samples: r.samples.iter().map(|&(prime, count)| Sample { prime, count }).collect(),
            class: (&r.interpolated).into(),
            check: CheckOut {
                prime: r.check.prime,
                predicted: number(&r.check.predicted),
                observed: r.check.observed,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZReport {
    pub source: String,
    pub which: String,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub source: String,
    pub edges: usize,
    pub fixed_q: bool,
    /// `formula` or `oracle`.
    pub method: String,
    pub class: ClassOut,
    pub chi: Number,
    pub chi_c: Number,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<CountOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeReport {
    pub source: String,
    pub edges: usize,
    pub v: ClassOut,
    pub w: ClassOut,
    pub y: ClassOut,
    /// Whether `{V} = {W} - {Y}`.
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<ClassOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiRow {
    pub m: usize,
    pub k: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub edges: usize,
    pub class_at_minus_two: Number,
    pub chi_c_locus: Number,
    pub closed_form: Number,
    pub agree: bool,
    pub decision_bound: String,
}

impl ChiRow {
    pub const CSV_HEADER: [&'static str; 8] =
        ["m", "k", "N", "#E", "class_at_T=-2", "chi_c_locus", "closed_form", "agree"];

    pub fn csv_record(&self) -> [String; 8] {
        [
            self.m.to_string(),
            self.k.to_string(),
            self.n.to_string(),
            self.edges.to_string(),
            self.class_at_minus_two.to_string(),
            self.chi_c_locus.to_string(),
            self.closed_form.to_string(),
            self.agree.to_string(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiReport {
    pub family: String,
    pub rows: Vec<ChiRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub failures: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        let failures = checks.iter().filter(|c| !c.passed).count();
        VerifyReport { suite: suite.into(), passed: failures == 0, failures, checks }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
