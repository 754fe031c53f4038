//! Mixed-radix names for the prati-muhurta segments of a yuga.
//!
//! A segment is addressed by six components, most significant first:
//! year (5), month (12), parva (2), ahoratra slot (30), muhurta (15) and
//! prati-muhurta (15), giving 810,000 distinct names. Components are
//! 1-based; indices are 0-based.

use std::fmt;
use std::path::Path;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::names::NameTable;
use crate::yuga::YugaConfig;

pub const COMPONENTS: [&str; 6] = [
    "year",
    "month",
    "parva",
    "ahoratra",
    "muhurta",
    "prati_muhurta",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RadixVector {
    radices: [u32; 6],
    total: u64,
}

impl RadixVector {
    pub const DEFAULT_RADICES: [u32; 6] = [5, 12, 2, 30, 15, 15];

    pub fn new(radices: [u32; 6]) -> Result<Self> {
        let mut total: u64 = 1;
        for (r, name) in radices.iter().zip(COMPONENTS) {
            if *r == 0 {
                return Err(Error::Domain(format!("radix for {name} must be at least 1")));
            }
            total = total
                .checked_mul(u64::from(*r))
                .ok_or_else(|| Error::Domain("radix product overflows 64 bits".into()))?;
        }
        Ok(RadixVector { radices, total })
    }

    pub fn radices(&self) -> [u32; 6] {
        self.radices
    }

    pub fn total_segments(&self) -> u64 {
        self.total
    }
}

impl Default for RadixVector {
    fn default() -> Self {
        RadixVector::new(Self::DEFAULT_RADICES).expect("default radices are valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeSegmentName {
    pub year: u32,
    pub month: u32,
    pub parva: u32,
    pub ahoratra_slot: u32,
    pub muhurta: u32,
    pub prati_muhurta: u32,
}

impl TimeSegmentName {
    pub fn from_components(c: [u32; 6]) -> Self {
        TimeSegmentName {
            year: c[0],
            month: c[1],
            parva: c[2],
            ahoratra_slot: c[3],
            muhurta: c[4],
            prati_muhurta: c[5],
        }
    }

    pub fn components(&self) -> [u32; 6] {
        [
            self.year,
            self.month,
            self.parva,
            self.ahoratra_slot,
            self.muhurta,
            self.prati_muhurta,
        ]
    }
}

impl fmt::Display for TimeSegmentName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.components();
        write!(f, "{} {} {} {} {} {}", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

pub fn total_segments(rv: &RadixVector) -> u64 {
    rv.total_segments()
}

pub fn encode_index(i: u64, rv: &RadixVector) -> Result<TimeSegmentName> {
    if i >= rv.total {
        return Err(Error::range("segment index", i, 0, rv.total - 1));
    }
    let mut digits = [0u32; 6];
    let mut rest = i;
    for (slot, r) in digits.iter_mut().zip(rv.radices).rev() {
        let r = u64::from(r);
        *slot = (rest % r) as u32 + 1;
        rest /= r;
    }
    Ok(TimeSegmentName::from_components(digits))
}

pub fn decode_name(n: &TimeSegmentName, rv: &RadixVector) -> Result<u64> {
    let mut index: u64 = 0;
    for ((c, r), what) in n.components().into_iter().zip(rv.radices).zip(COMPONENTS) {
        if c == 0 || c > r {
            return Err(Error::range(what, u64::from(c), 1, u64::from(r)));
        }
        index = index * u64::from(r) + u64::from(c - 1);
    }
    Ok(index)
}

pub const MINUTES_PER_DAY: u64 = 1440;

pub fn muhurta_minutes(cfg: &YugaConfig) -> Rational {
    Rational::new(MINUTES_PER_DAY, cfg.muhurtas_per_ahoratra).expect("nonzero muhurta count")
}

/// Length of one prati-muhurta in minutes (16/5 with the canonical constants).
pub fn segment_duration(cfg: &YugaConfig) -> Rational {
    Rational::new(
        MINUTES_PER_DAY,
        cfg.muhurtas_per_ahoratra * cfg.prati_muhurtas_per_muhurta,
    )
    .expect("nonzero segment count")
}

/// Optional display names, one table per component.
#[derive(Debug, Clone, Default)]
pub struct ComponentNames {
    tables: [Option<NameTable>; 6],
}

impl ComponentNames {
    /// Reads `year.txt`, `month.txt`, ... `prati_muhurta.txt` from `dir`,
    /// skipping any that are absent.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let mut out = ComponentNames::default();
        for (slot, name) in out.tables.iter_mut().zip(COMPONENTS) {
            *slot = NameTable::load_optional(dir, &format!("{name}.txt"))?;
        }
        Ok(out)
    }

    pub fn set(&mut self, component: usize, table: NameTable) {
        self.tables[component] = Some(table);
    }

    pub fn has_any(&self) -> bool {
        self.tables.iter().any(Option::is_some)
    }

    pub fn render(&self, n: &TimeSegmentName) -> [String; 6] {
        let c = n.components();
        std::array::from_fn(|i| match &self.tables[i] {
            Some(t) => t.display(c[i]),
            None => c[i].to_string(),
        })
    }

    /// Parses one component given as a 1-based number or a table name.
    pub fn parse_component(&self, component: usize, token: &str) -> Result<u32> {
        if let Ok(v) = token.trim().parse::<u32>() {
            return Ok(v);
        }
        self.tables[component]
            .as_ref()
            .and_then(|t| t.index_of(token))
            .ok_or_else(|| Error::UnknownName {
                component: COMPONENTS[component],
                name: token.to_string(),
            })
    }

    pub fn parse_name(&self, tokens: &[String]) -> Result<TimeSegmentName> {
        if tokens.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 components, got {}",
                tokens.len()
            )));
        }
        let mut c = [0u32; 6];
        for (i, t) in tokens.iter().enumerate() {
            c[i] = self.parse_component(i, t)?;
        }
        Ok(TimeSegmentName::from_components(c))
    }
}

/// Runs the full encode/decode round trip over every index.
pub fn roundtrip_check(rv: &RadixVector) -> Result<u64> {
    let mut prev: Option<TimeSegmentName> = None;
    for i in 0..rv.total_segments() {
        let name = encode_index(i, rv)?;
        let back = decode_name(&name, rv)?;
        if back != i || prev.is_some_and(|p| p >= name) {
            return Err(Error::Domain(format!("round trip failed at index {i}")));
        }
        prev = Some(name);
    }
    Ok(rv.total_segments())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(c: [u32; 6]) -> TimeSegmentName {
        TimeSegmentName::from_components(c)
    }

    /// Position of `target` in the lexicographic enumeration of all tuples.
    fn enumerate_position(target: [u32; 6], radices: [u32; 6]) -> Option<u64> {
        let mut i = 0u64;
        for a in 1..=radices[0] {
            for b in 1..=radices[1] {
                for c in 1..=radices[2] {
                    for d in 1..=radices[3] {
                        for e in 1..=radices[4] {
                            for f in 1..=radices[5] {
                                if [a, b, c, d, e, f] == target {
                                    return Some(i);
                                }
                                i += 1;
                            }
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn totals() {
        assert_eq!(total_segments(&RadixVector::default()), 810_000);
        assert_eq!(total_segments(&RadixVector::new([1; 6]).unwrap()), 1);
        let rv = RadixVector::new([5, 12, 2, 30, 15, 1]).unwrap();
        assert_eq!(total_segments(&rv), 5 * 12 * 2 * 30 * 15);
        assert_eq!(total_segments(&rv), 54_000);
        assert!(RadixVector::new([5, 12, 0, 30, 15, 15]).is_err());
        assert!(RadixVector::new([u32::MAX; 6]).is_err());
    }

    #[test]
    fn encode_examples() {
        let rv = RadixVector::default();
        let d = RadixVector::DEFAULT_RADICES;
        assert_eq!(encode_index(0, &rv).unwrap(), name([1; 6]));
        assert_eq!(encode_index(809_999, &rv).unwrap(), name(d));
        assert_eq!(enumerate_position([3, 7, 1, 1, 1, 1], d), Some(405_000));
        assert_eq!(encode_index(405_000, &rv).unwrap(), name([3, 7, 1, 1, 1, 1]));
        assert!(matches!(encode_index(810_000, &rv), Err(Error::Range { .. })));
    }

    #[test]
    fn decode_examples() {
        let rv = RadixVector::default();
        assert_eq!(decode_name(&name([1; 6]), &rv).unwrap(), 0);
        assert_eq!(decode_name(&name([5, 12, 2, 30, 15, 15]), &rv).unwrap(), 809_999);
        assert_eq!(decode_name(&name([3, 7, 1, 1, 1, 1]), &rv).unwrap(), 405_000);
    }

    #[test]
    fn decode_reports_offending_component() {
        let rv = RadixVector::default();
        match decode_name(&name([1, 13, 1, 1, 1, 1]), &rv) {
            Err(Error::Range { what, value, .. }) => {
                assert_eq!(what, "month");
                assert_eq!(value, 13);
            }
            other => panic!("{other:?}"),
        }
        match decode_name(&name([1, 1, 1, 1, 1, 0]), &rv) {
            Err(Error::Range { what, .. }) => assert_eq!(what, "prati_muhurta"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_radices_match_enumeration() {
        let radices = [2, 3, 1, 2, 3, 2];
        let rv = RadixVector::new(radices).unwrap();
        for i in 0..rv.total_segments() {
            let n = encode_index(i, &rv).unwrap();
            assert_eq!(enumerate_position(n.components(), radices), Some(i));
        }
    }

    #[test]
    fn durations() {
        let cfg = YugaConfig::VEDANGA;
        assert_eq!(segment_duration(&cfg), Rational::new(16u64, 5u64).unwrap());
        assert_eq!(segment_duration(&cfg).render_decimal(1), "3.2");
        assert_eq!(muhurta_minutes(&cfg), Rational::from_u64(48));
    }

    #[test]
    fn names_or_ordinals() {
        let mut names = ComponentNames::default();
        names.set(1, NameTable::parse("1 = Madhu\n2 = Mādhava").unwrap());
        let n = name([1, 2, 1, 1, 1, 1]);
        assert_eq!(names.render(&n)[1], "Mādhava");
        assert_eq!(names.render(&n)[0], "1");
        assert_eq!(names.parse_component(1, "madhu").unwrap(), 1);
        assert_eq!(names.parse_component(0, "4").unwrap(), 4);
        assert!(matches!(
            names.parse_component(0, "Samvatsara"),
            Err(Error::UnknownName { component: "year", .. })
        ));
    }
}
