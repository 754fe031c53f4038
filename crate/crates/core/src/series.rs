//! Large-number series: the thirteen decimal names of the Yajurveda list,
//! the centesimal series of the Lalitavistara, the Jain `2^96` built from
//! successive squares, and a cross-tradition name lookup.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{digit_count, power, square_iterate, Natural};
use crate::error::{Error, Result};
use crate::names::VARIANT_TABLE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tradition {
    Yajurveda,
    Lalitavistara,
    Jain,
    Variant,
}

impl Tradition {
    pub fn as_str(self) -> &'static str {
        match self {
            Tradition::Yajurveda => "yajurveda",
            Tradition::Lalitavistara => "lalitavistara",
            Tradition::Jain => "jain",
            Tradition::Variant => "variant",
        }
    }
}

impl fmt::Display for Tradition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tradition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yajurveda" => Ok(Tradition::Yajurveda),
            "lalitavistara" => Ok(Tradition::Lalitavistara),
            "jain" => Ok(Tradition::Jain),
            "variant" => Ok(Tradition::Variant),
            other => Err(Error::Parse(format!("unknown tradition {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedNumber {
    /// 1-based position in its series.
    pub position: usize,
    /// `None` for terms the source leaves unnamed.
    pub name: Option<String>,
    pub value: Natural,
    pub tradition: Tradition,
}

impl NamedNumber {
    pub fn label(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("term {}", self.position))
    }
}

pub const DECIMAL_NAMES: [&str; 13] = [
    "eka", "daśa", "śata", "sahasra", "ayuta", "niyuta", "prayuta", "arbuda", "nyarbuda",
    "samudra", "madhya", "anta", "parārdha",
];

/// eka (1) through parārdha (10^12).
pub fn decimal_series() -> Vec<NamedNumber> {
    let ten = Natural::from(10u64);
    DECIMAL_NAMES
        .iter()
        .enumerate()
        .map(|(k, name)| NamedNumber {
            position: k + 1,
            name: Some((*name).to_string()),
            value: power(&ten, &Natural::from(k as u64)).expect("base is nonzero"),
            tradition: Tradition::Yajurveda,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    pub start_value: Natural,
    pub step_factor: Natural,
    pub term_count: usize,
    /// `(1-based term, name)` pairs.
    pub names: Vec<(usize, String)>,
}

impl SeriesSpec {
    /// Starts at a hundred koti (10^9) and climbs by hundreds for 24 terms,
    /// so that tallakṣana (10^53) is term 23 and dhvajāgravatī (10^55)
    /// term 24.
    pub fn lalitavistara() -> Self {
        SeriesSpec {
            start_value: power(&Natural::from(10u64), &Natural::from(9u64)).expect("nonzero"),
            step_factor: Natural::from(100u64),
            term_count: 24,
            names: vec![(23, "tallakṣana".into()), (24, "dhvajāgravatī".into())],
        }
    }
}

impl Default for SeriesSpec {
    fn default() -> Self {
        Self::lalitavistara()
    }
}

pub fn centesimal_series(spec: &SeriesSpec) -> Result<Vec<NamedNumber>> {
    if spec.term_count == 0 {
        return Err(Error::Domain("series needs at least one term".into()));
    }
    if spec.step_factor < Natural::from(2u64) {
        return Err(Error::Domain("step factor must be at least 2".into()));
    }
    if spec.start_value.is_zero() {
        return Err(Error::Domain("series must start above zero".into()));
    }
    let mut out = Vec::with_capacity(spec.term_count);
    let mut value = spec.start_value.clone();
    for position in 1..=spec.term_count {
        let name = spec
            .names
            .iter()
            .find(|(p, _)| *p == position)
            .map(|(_, n)| n.clone());
        out.push(NamedNumber {
            position,
            name,
            value: value.clone(),
            tradition: Tradition::Lalitavistara,
        });
        value = &value * &spec.step_factor;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JainComputation {
    pub sixth_square: Natural,
    pub fifth_square: Natural,
    pub population: NamedNumber,
    pub digit_count: usize,
}

/// The sixth square of two multiplied by its fifth square.
pub fn jain_population() -> JainComputation {
    let two = Natural::from(2u64);
    let sixth_square = square_iterate(&two, 6);
    let fifth_square = square_iterate(&two, 5);
    let value = &sixth_square * &fifth_square;
    JainComputation {
        digit_count: digit_count(&value),
        population: NamedNumber {
            position: 1,
            name: Some("2^96".into()),
            value,
            tradition: Tradition::Jain,
        },
        sixth_square,
        fifth_square,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantRow {
    pub exponent: u32,
    pub name: String,
    pub tradition: Tradition,
}

/// Names recorded for powers of ten. One row per line:
///
/// ```text
/// # exponent name tradition
/// 8 nyarbuda yajurveda
/// 8 arbuda variant
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantTable {
    rows: Vec<VariantRow>,
}

impl VariantTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::NameTable {
                line: i + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [exp, name, tradition] = fields[..] else {
                return Err(err("expected `<exponent> <name> <tradition>`".into()));
            };
            rows.push(VariantRow {
                exponent: exp.parse().map_err(|_| err(format!("bad exponent {exp:?}")))?,
                name: name.to_string(),
                tradition: tradition.parse().map_err(|e: Error| err(e.to_string()))?,
            });
        }
        Ok(VariantTable { rows })
    }

    pub fn shipped() -> Self {
        Self::parse(VARIANT_TABLE).expect("shipped variant table parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn rows(&self) -> &[VariantRow] {
        &self.rows
    }

    /// Every recorded name for `value`, in table order.
    pub fn lookup(&self, value: &Natural) -> Vec<(String, Tradition)> {
        match decimal_exponent(value) {
            Some(e) => self
                .rows
                .iter()
                .filter(|r| r.exponent == e)
                .map(|r| (r.name.clone(), r.tradition))
                .collect(),
            None => Vec::new(),
        }
    }
}

impl Default for VariantTable {
    fn default() -> Self {
        Self::shipped()
    }
}

/// `Some(k)` when `value == 10^k`.
fn decimal_exponent(value: &Natural) -> Option<u32> {
    let ten = Natural::from(10u64);
    let mut v = value.clone();
    let mut k = 0;
    while !v.is_one() {
        let (q, r) = v.div_rem(&ten)?;
        if !r.is_zero() || q.is_zero() {
            return None;
        }
        v = q;
        k += 1;
    }
    Some(k)
}

pub fn variant_lookup(value: &Natural) -> Vec<(String, Tradition)> {
    VariantTable::shipped().lookup(value)
}
