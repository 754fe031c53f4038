//! Mean-motion model of the five-year yuga.
//!
//! Day 0 is the winter solstice on which sun and moon stand together at
//! the start of Dhanishthā (nakshatra index 0) at new moon. All positions
//! are exact fractions of the 27-nakshatra circle; there is no precession
//! and no equation of centre.
//!
//! Tithis are assigned to civil days by `floor(d · tithis / days)`. This is
//! a modern reconstruction; the omitted-tithi bookkeeping of the old
//! calendar makers is not modelled.

use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::arith::{MixedNumber, Natural, Rational};
use crate::error::{Error, Result};

/// Model constants. [`YugaConfig::VEDANGA`] holds the canonical values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YugaConfig {
    pub years_per_yuga: u64,
    pub civil_days_per_year: u64,
    pub civil_days_per_yuga: u64,
    pub synodic_months: u64,
    pub sidereal_months: u64,
    pub nakshatra_count: u64,
    pub parvas_per_yuga: u64,
    pub tithis_per_paksha: u64,
    pub muhurtas_per_ahoratra: u64,
    pub prati_muhurtas_per_muhurta: u64,
    pub seasons_per_year: u64,
}

impl Default for YugaConfig {
    fn default() -> Self {
        Self::VEDANGA
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ayana {
    Northern,
    Southern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Paksha {
    Bright,
    Dark,
}

/// Phase at the end of a parva. Odd parvas end at full moon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParvaEnd {
    FullMoon,
    NewMoon,
}

impl Ayana {
    pub fn as_str(self) -> &'static str {
        match self {
            Ayana::Northern => "northern",
            Ayana::Southern => "southern",
        }
    }
}

impl Paksha {
    pub fn as_str(self) -> &'static str {
        match self {
            Paksha::Bright => "bright",
            Paksha::Dark => "dark",
        }
    }
}

impl ParvaEnd {
    pub fn as_str(self) -> &'static str {
        match self {
            ParvaEnd::FullMoon => "full_moon",
            ParvaEnd::NewMoon => "new_moon",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Tithi {
    pub paksha: Paksha,
    /// 1..=15
    pub ordinal: u32,
}

impl Tithi {
    /// Position within the synodic month, 1..=30 (bright half first).
    pub fn month_position(&self, tithis_per_paksha: u32) -> u32 {
        match self.paksha {
            Paksha::Bright => self.ordinal,
            Paksha::Dark => tithis_per_paksha + self.ordinal,
        }
    }
}

impl fmt::Display for Tithi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.paksha.as_str(), self.ordinal)
    }
}

/// Place on the nakshatra circle: a 0-based nakshatra plus the fraction of
/// it already covered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkyPosition {
    pub nakshatra_index: u32,
    pub offset: Rational,
}

impl SkyPosition {
    pub fn origin() -> Self {
        SkyPosition {
            nakshatra_index: 0,
            offset: Rational::zero(),
        }
    }

    fn from_amount(amount: &Rational, circle: u64) -> Result<Self> {
        let MixedNumber { whole, frac } = amount.to_mixed()?;
        let (_, idx) = whole
            .div_rem(&Natural::from(circle))
            .ok_or_else(|| Error::Domain("empty nakshatra circle".into()))?;
        Ok(SkyPosition {
            nakshatra_index: idx.to_u64().expect("index below circle size") as u32,
            offset: frac,
        })
    }

    /// 1-based nakshatra number for display.
    pub fn number(&self) -> u32 {
        self.nakshatra_index + 1
    }

    /// Nakshatras covered since the origin within the current circuit,
    /// e.g. `14 73/124`.
    pub fn traversed(&self) -> MixedNumber {
        MixedNumber {
            whole: Natural::from(self.nakshatra_index),
            frac: self.offset.clone(),
        }
    }

    pub fn as_rational(&self) -> Rational {
        self.traversed().to_rational()
    }
}

impl fmt::Display for SkyPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.traversed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DayRecord {
    pub day_index: u64,
    pub year_in_yuga: u64,
    pub ayana: Ayana,
    pub season_index: u64,
    pub parva_index: u64,
    pub tithi: Tithi,
    pub moon: SkyPosition,
    pub sun: SkyPosition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParvaEndRecord {
    pub parva: u64,
    /// Nakshatras covered by the moon since the start of the yuga.
    pub accumulated: Rational,
    pub moon: SkyPosition,
    pub phase: ParvaEnd,
}

fn ratio(n: u64, d: u64) -> Rational {
    Rational::new(n, d).expect("model constants are nonzero")
}

impl YugaConfig {
    pub const VEDANGA: YugaConfig = YugaConfig {
        years_per_yuga: 5,
        civil_days_per_year: 366,
        civil_days_per_yuga: 1830,
        synodic_months: 62,
        sidereal_months: 67,
        nakshatra_count: 27,
        parvas_per_yuga: 124,
        tithis_per_paksha: 15,
        muhurtas_per_ahoratra: 30,
        prati_muhurtas_per_muhurta: 15,
        seasons_per_year: 6,
    };

    /// Checks the structural relations between the constants.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Domain(format!("inconsistent yuga config: {m}")));
        let all = [
            self.years_per_yuga,
            self.civil_days_per_year,
            self.civil_days_per_yuga,
            self.synodic_months,
            self.sidereal_months,
            self.nakshatra_count,
            self.parvas_per_yuga,
            self.tithis_per_paksha,
            self.muhurtas_per_ahoratra,
            self.prati_muhurtas_per_muhurta,
            self.seasons_per_year,
        ];
        if all.contains(&0) {
            return fail("zero constant");
        }
        if self.civil_days_per_yuga != self.years_per_yuga * self.civil_days_per_year {
            return fail("civil days per yuga != years x days per year");
        }
        if self.parvas_per_yuga != 2 * self.synodic_months {
            return fail("parvas != 2 x synodic months");
        }
        if self.sidereal_months < self.synodic_months
            || self.sidereal_months - self.synodic_months != self.years_per_yuga
        {
            return fail("sidereal - synodic months != years");
        }
        if self.civil_days_per_year % 2 != 0 {
            return fail("year does not split into two ayanas");
        }
        if self.civil_days_per_year % self.seasons_per_year != 0 {
            return fail("year does not split into whole seasons");
        }
        Ok(())
    }

    /// Nakshatras traversed by the moon in one yuga (67 × 27 = 1809).
    pub fn lunar_nakshatras_per_yuga(&self) -> u64 {
        self.sidereal_months * self.nakshatra_count
    }

    pub fn tithis_per_yuga(&self) -> u64 {
        self.synodic_months * 2 * self.tithis_per_paksha
    }

    /// Moon's motion per parva in nakshatras (1809/124).
    pub fn moon_per_parva(&self) -> Rational {
        ratio(self.lunar_nakshatras_per_yuga(), self.parvas_per_yuga)
    }

    pub fn moon_per_day(&self) -> Rational {
        ratio(self.lunar_nakshatras_per_yuga(), self.civil_days_per_yuga)
    }

    /// Sun's motion per day in nakshatras (27/366 = 9/122).
    pub fn sun_per_day(&self) -> Rational {
        ratio(self.nakshatra_count, self.civil_days_per_year)
    }

    /// Mean tithi in civil days (1830/1860 = 61/62).
    pub fn mean_tithi_days(&self) -> Rational {
        ratio(self.civil_days_per_yuga, self.tithis_per_yuga())
    }

    pub fn mean_tithi_hours(&self) -> Rational {
        &self.mean_tithi_days() * &Rational::from_u64(24)
    }

    fn check_day(&self, d: u64, inclusive_end: bool) -> Result<()> {
        let max = if inclusive_end {
            self.civil_days_per_yuga
        } else {
            self.civil_days_per_yuga - 1
        };
        if d > max {
            return Err(Error::range("day", d, 0, max));
        }
        Ok(())
    }

    pub fn moon_position_at_parva_end(&self, k: u64) -> Result<SkyPosition> {
        if k > self.parvas_per_yuga {
            return Err(Error::range("parva", k, 0, self.parvas_per_yuga));
        }
        let amount = &Rational::from_u64(k) * &self.moon_per_parva();
        SkyPosition::from_amount(&amount, self.nakshatra_count)
    }

    pub fn moon_position_at_day(&self, d: u64) -> Result<SkyPosition> {
        self.check_day(d, true)?;
        let amount = &Rational::from_u64(d) * &self.moon_per_day();
        SkyPosition::from_amount(&amount, self.nakshatra_count)
    }

    pub fn sun_position_at_day(&self, d: u64) -> Result<SkyPosition> {
        self.check_day(d, true)?;
        let amount = &Rational::from_u64(d) * &self.sun_per_day();
        SkyPosition::from_amount(&amount, self.nakshatra_count)
    }

    /// Running tithi count at the start of day `d`; `d` may equal the
    /// yuga length, where the count closes at 1860.
    pub fn tithi_serial_at_day(&self, d: u64) -> Result<u64> {
        self.check_day(d, true)?;
        Ok(d * self.tithis_per_yuga() / self.civil_days_per_yuga)
    }

    pub fn tithi_at_day(&self, d: u64) -> Result<Tithi> {
        self.check_day(d, false)?;
        let t = self.tithi_serial_at_day(d)?;
        let per_month = 2 * self.tithis_per_paksha;
        let paksha = if t % per_month < self.tithis_per_paksha {
            Paksha::Bright
        } else {
            Paksha::Dark
        };
        Ok(Tithi {
            paksha,
            ordinal: (t % self.tithis_per_paksha + 1) as u32,
        })
    }

    /// 1-based parva containing day `d`.
    pub fn parva_at_day(&self, d: u64) -> Result<u64> {
        self.check_day(d, false)?;
        Ok(d * self.parvas_per_yuga / self.civil_days_per_yuga + 1)
    }

    pub fn calendar_record(&self, d: u64) -> Result<DayRecord> {
        self.check_day(d, false)?;
        let per_ayana = self.civil_days_per_year / 2;
        let per_season = self.civil_days_per_year / self.seasons_per_year;
        let ayana = if (d / per_ayana) % 2 == 0 {
            Ayana::Northern
        } else {
            Ayana::Southern
        };
        Ok(DayRecord {
            day_index: d,
            year_in_yuga: d / self.civil_days_per_year + 1,
            ayana,
            season_index: (d % self.civil_days_per_year) / per_season + 1,
            parva_index: self.parva_at_day(d)?,
            tithi: self.tithi_at_day(d)?,
            moon: self.moon_position_at_day(d)?,
            sun: self.sun_position_at_day(d)?,
        })
    }

    pub fn yuga_table(&self, days: RangeInclusive<u64>) -> Result<Vec<DayRecord>> {
        let (start, end) = (*days.start(), *days.end());
        if start > end {
            return Err(Error::Domain(format!("empty day range {start}..={end}")));
        }
        self.check_day(end, false)?;
        days.map(|d| self.calendar_record(d)).collect()
    }

    pub fn parva_end(&self, k: u64) -> Result<ParvaEndRecord> {
        let moon = self.moon_position_at_parva_end(k)?;
        Ok(ParvaEndRecord {
            parva: k,
            accumulated: &Rational::from_u64(k) * &self.moon_per_parva(),
            moon,
            phase: if k % 2 == 1 {
                ParvaEnd::FullMoon
            } else {
                ParvaEnd::NewMoon
            },
        })
    }

    /// Parva ends 1..=124.
    pub fn parva_ends(&self) -> Vec<ParvaEndRecord> {
        (1..=self.parvas_per_yuga)
            .map(|k| self.parva_end(k).expect("k within range"))
            .collect()
    }
}
