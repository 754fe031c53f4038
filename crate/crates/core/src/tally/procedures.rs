use serde::Serialize;

use super::machine::TallyMachine;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitResult {
    pub bodies: u64,
    pub size_per_body: u64,
    pub steps: u64,
}

/// Deals `total` tokens round-robin into `bodies` piles, one token at a
/// time, then counts one pile. The split fails when the last round of the
/// deal is incomplete.
///
/// Steps: one per token dealt plus one per token counted.
pub fn equal_split(total: u64, bodies: u64) -> Result<SplitResult> {
    if total == 0 || bodies == 0 {
        return Err(Error::Domain("split needs at least one token and one body".into()));
    }
    let mut m = TallyMachine::new();
    let heap = m.pile_with("heap", total);
    let piles: Vec<_> = (0..bodies).map(|i| m.pile(format!("body {}", i + 1))).collect();

    let mut dealt_this_round;
    'deal: loop {
        dealt_this_round = 0;
        for &p in &piles {
            if m.is_empty(heap) {
                break 'deal;
            }
            m.move_one(heap, p)?;
            dealt_this_round += 1;
        }
        if m.is_empty(heap) {
            break;
        }
    }
    if dealt_this_round != bodies {
        return Err(Error::NotDivisible {
            total,
            bodies,
            remainder: dealt_this_round,
        });
    }
    let size_per_body = m.count(piles[0])?;
    Ok(SplitResult {
        bodies,
        size_per_body,
        steps: m.steps(),
    })
}

/// Every body count in `1..=max_bodies` whose deal comes out even.
pub fn enumerate_splits(total: u64, max_bodies: u64) -> Result<Vec<SplitResult>> {
    if total == 0 {
        return Err(Error::Domain("nothing to split".into()));
    }
    let mut out = Vec::new();
    for bodies in 1..=max_bodies {
        match equal_split(total, bodies) {
            Ok(s) => out.push(s),
            Err(Error::NotDivisible { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub const SADAHA_DAYS: u32 = 6;

/// Six-day sets for each month in order. A 29-day month loses the last
/// day of its fifth set.
pub fn sadaha_partition(month_lengths: &[u32]) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(month_lengths.len() * 5);
    for (index, &length) in month_lengths.iter().enumerate() {
        if length != 29 && length != 30 {
            return Err(Error::InvalidMonth { index, length });
        }
        let mut current = 0;
        for _ in 0..length {
            current += 1;
            if current == SADAHA_DAYS {
                out.push(current);
                current = 0;
            }
        }
        if current > 0 {
            out.push(current);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RitualKind {
    MorningOblation,
    EveningOblation,
    ParvaOffering,
    SeasonStart,
    AyanaStart,
}

impl RitualKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RitualKind::MorningOblation => "morning_oblation",
            RitualKind::EveningOblation => "evening_oblation",
            RitualKind::ParvaOffering => "parva_offering",
            RitualKind::SeasonStart => "season_start",
            RitualKind::AyanaStart => "ayana_start",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RitualEvent {
    pub day_index: u64,
    pub kind: RitualKind,
}

/// Inputs to [`gavamayana_schedule`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionPlan {
    pub days_in_year: u64,
    pub parva_days: Vec<u64>,
    pub season_starts: Vec<u64>,
    pub ayana_starts: Vec<u64>,
}

impl SessionPlan {
    /// 360-day year: 24 parvas of 15 days ending on days 14, 29, ...;
    /// six seasons of 60 days; two ayanas of 180 days.
    pub fn standard() -> Self {
        SessionPlan {
            days_in_year: 360,
            parva_days: (0..24).map(|k| 15 * k + 14).collect(),
            season_starts: (0..6).map(|k| 60 * k).collect(),
            ayana_starts: vec![0, 180],
        }
    }
}

/// Events of the year-long session, sorted by day then kind.
///
/// The count is always `2·days + parvas + seasons + ayanas`.
pub fn gavamayana_schedule(plan: &SessionPlan) -> Result<Vec<RitualEvent>> {
    let days = plan.days_in_year;
    let lists = [
        (&plan.parva_days, RitualKind::ParvaOffering, "parva day"),
        (&plan.season_starts, RitualKind::SeasonStart, "season start"),
        (&plan.ayana_starts, RitualKind::AyanaStart, "ayana start"),
    ];
    for (list, _, what) in &lists {
        if let Some(&bad) = list.iter().find(|&&d| d >= days) {
            return Err(Error::range(what, bad, 0, days.saturating_sub(1)));
        }
    }
    let mut events = Vec::with_capacity(
        2 * days as usize + plan.parva_days.len() + plan.season_starts.len() + plan.ayana_starts.len(),
    );
    for day_index in 0..days {
        events.push(RitualEvent {
            day_index,
            kind: RitualKind::MorningOblation,
        });
        events.push(RitualEvent {
            day_index,
            kind: RitualKind::EveningOblation,
        });
    }
    for (list, kind, _) in lists {
        events.extend(list.iter().map(|&day_index| RitualEvent { day_index, kind }));
    }
    events.sort();
    Ok(events)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TaxResult {
    pub tax: u64,
    pub kept: u64,
    pub remainder_untaxed: u64,
    pub steps: u64,
}

/// Walks the measures one at a time; every `divisor`-th measure of a group
/// goes to tax and the rest of the group is kept. A trailing partial group
/// is kept untaxed.
pub fn tax_in_kind(measures: u64, divisor: u64) -> Result<TaxResult> {
    if divisor < 2 {
        return Err(Error::Domain(format!("divisor must be at least 2, got {divisor}")));
    }
    let mut m = TallyMachine::new();
    let stream = m.pile_with("stream", measures);
    let group = m.pile("group");
    let kept = m.pile("kept");
    let tax = m.pile("tax");

    let mut in_group = 0;
    while !m.is_empty(stream) {
        if in_group == divisor - 1 {
            m.move_one(stream, tax)?;
            while !m.is_empty(group) {
                m.move_one(group, kept)?;
            }
            in_group = 0;
        } else {
            m.move_one(stream, group)?;
            in_group += 1;
        }
    }
    Ok(TaxResult {
        tax: m.peek(tax),
        kept: m.peek(kept),
        remainder_untaxed: m.peek(group),
        steps: m.steps(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductResult {
    pub product: u64,
    /// Accumulation rounds, one per unit of the multiplier.
    pub rounds: u64,
    /// Single tokens added to the accumulator.
    pub token_moves: u64,
}

/// `a × b` by laying down `a` tokens, `b` times over.
pub fn repeated_addition_product(a: u64, b: u64) -> Result<ProductResult> {
    let mut m = TallyMachine::new();
    let acc = m.pile("accumulator");
    for _ in 0..b {
        for _ in 0..a {
            m.add_one(acc)?;
        }
    }
    Ok(ProductResult {
        product: m.peek(acc),
        rounds: b,
        token_moves: m.steps(),
    })
}
