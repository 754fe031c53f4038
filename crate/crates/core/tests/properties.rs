use proptest::prelude::*;

use yuga_core::arith::{digit_count, power, rule_of_three, square_iterate, Natural, Rational};
use yuga_core::codec::{decode_name, encode_index, RadixVector, TimeSegmentName};
use yuga_core::series::{centesimal_series, decimal_series, jain_population, SeriesSpec};
use yuga_core::tally::{
    equal_split, gavamayana_schedule, sadaha_partition, Instruction, PileId, SessionPlan,
    TallyProgram,
};

fn rational() -> impl Strategy<Value = Rational> {
    (any::<bool>(), 0u64..1_000_000, 1u64..1_000_000).prop_map(|(neg, n, d)| {
        let r = Rational::new(n, d).unwrap();
        if neg {
            -&r
        } else {
            r
        }
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn signed(r: &Rational) -> (i128, i128) {
    let n = r.numer().to_u64().unwrap() as i128;
    let d = r.denom().to_u64().unwrap() as i128;
    (if r.is_negative() { -n } else { n }, d)
}

fn from_signed(n: i128, d: i128) -> Rational {
    let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
    format!("{n}/{d}").parse().unwrap()
}

proptest! {
    #[test]
    fn reduce_is_idempotent(r in rational()) {
        let again: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(&again, &r);
        let g = r.numer().gcd(r.denom());
        prop_assert!(g.is_one() || r.is_zero());
    }

    #[test]
    fn add_matches_cross_multiplication(a in rational(), b in rational()) {
        let ((an, ad), (bn, bd)) = (signed(&a), signed(&b));
        prop_assert_eq!(&a + &b, from_signed(an * bd + bn * ad, ad * bd));
        prop_assert_eq!(&a * &b, from_signed(an * bn, ad * bd));
    }

    #[test]
    fn add_and_multiply_commute_and_associate(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn rule_of_three_cross_product(b in nonzero_rational(), c in nonzero_rational(), d in nonzero_rational()) {
        let a = rule_of_three(&b, &c, &d).unwrap();
        prop_assert_eq!(&a * &d, &b * &c);
    }

    #[test]
    fn mixed_form_recombines(n in 0u64..10_000_000, d in 1u64..100_000) {
        let r = Rational::new(n, d).unwrap();
        let m = r.to_mixed().unwrap();
        prop_assert!(m.frac < Rational::one());
        // (whole·den + num)/den
        let whole = m.whole.to_u64().unwrap();
        let fd = m.frac.denom().to_u64().unwrap();
        let fn_ = m.frac.numer().to_u64().unwrap();
        prop_assert_eq!(Rational::new(whole * fd + fn_, fd).unwrap(), r);
    }

    #[test]
    fn digit_count_matches_rendered_length(digits in proptest::collection::vec(0u8..10, 1..61)) {
        let s: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
        let n: Natural = s.parse().unwrap();
        prop_assert_eq!(digit_count(&n), n.to_string().len());
    }

    #[test]
    fn encode_decode_random_radices(radices in proptest::array::uniform6(1u32..20), seed in any::<u64>()) {
        let rv = RadixVector::new(radices).unwrap();
        let i = seed % rv.total_segments();
        let name = encode_index(i, &rv).unwrap();
        prop_assert_eq!(decode_name(&name, &rv).unwrap(), i);
    }

    #[test]
    fn name_order_follows_index_order(i in 0u64..810_000, j in 0u64..810_000) {
        let rv = RadixVector::default();
        let (a, b) = (encode_index(i, &rv).unwrap(), encode_index(j, &rv).unwrap());
        prop_assert_eq!(a.cmp(&b), i.cmp(&j));
    }

    #[test]
    fn changing_one_component_changes_index(i in 0u64..810_000, which in 0usize..6, bump in 1u32..30) {
        let rv = RadixVector::default();
        let name = encode_index(i, &rv).unwrap();
        let mut c = name.components();
        let radix = rv.radices()[which];
        prop_assume!(radix > 1);
        c[which] = (c[which] - 1 + bump % radix) % radix + 1;
        prop_assume!(c != name.components());
        let other = decode_name(&TimeSegmentName::from_components(c), &rv).unwrap();
        prop_assert_ne!(other, i);
    }

    #[test]
    fn tally_programs_conserve_tokens(
        start in proptest::collection::vec(0u64..20, 1..5),
        ops in proptest::collection::vec((0u8..5, 0usize..5, 0usize..5), 0..200),
    ) {
        let n = start.len();
        let instructions: Vec<Instruction> = ops
            .iter()
            .map(|&(op, a, b)| {
                let (a, b) = (PileId(a % n), PileId(b % n));
                match op {
                    0 => Instruction::AddOne(a),
                    1 => Instruction::RemoveOne(a),
                    2 => Instruction::Compare(a, b),
                    3 => Instruction::Count(a),
                    _ => Instruction::MoveOne { from: a, to: b },
                }
            })
            .collect();
        // Keep the prefix that runs without emptying a pile.
        let mut counts = start.clone();
        let mut valid = Vec::new();
        for ins in instructions {
            let ok = match ins {
                Instruction::RemoveOne(p) | Instruction::MoveOne { from: p, .. } => counts[p.0] > 0,
                _ => true,
            };
            if !ok { break; }
            match ins {
                Instruction::AddOne(p) => counts[p.0] += 1,
                Instruction::RemoveOne(p) => counts[p.0] -= 1,
                Instruction::MoveOne { from, to } => { counts[from.0] -= 1; counts[to.0] += 1; }
                _ => {}
            }
            valid.push(ins);
        }
        let adds = valid.iter().filter(|i| matches!(i, Instruction::AddOne(_))).count() as u64;
        let removes = valid.iter().filter(|i| matches!(i, Instruction::RemoveOne(_))).count() as u64;
        let prog = TallyProgram {
            piles: start.iter().enumerate().map(|(i, &c)| (format!("p{i}"), c)).collect(),
            instructions: valid.clone(),
        };
        let r = prog.run().unwrap();
        let total_in: u64 = start.iter().sum();
        let total_out: u64 = r.piles.iter().map(|(_, c)| c).sum();
        prop_assert_eq!(total_out, total_in + adds - removes);
        let final_counts: Vec<u64> = r.piles.iter().map(|(_, c)| *c).collect();
        prop_assert_eq!(final_counts, counts);
        prop_assert!(r.steps >= valid.len() as u64 - r.counts.len() as u64);
    }

    #[test]
    fn split_succeeds_iff_divisible(n in 1u64..1000, k in 1u64..50) {
        match equal_split(n, k) {
            Ok(s) => {
                prop_assert_eq!(n % k, 0);
                prop_assert_eq!(s.size_per_body * k, n);
            }
            Err(_) => prop_assert_ne!(n % k, 0),
        }
    }

    #[test]
    fn sadaha_lengths(months in proptest::collection::vec(prop_oneof![Just(29u32), Just(30u32)], 0..40)) {
        let sets = sadaha_partition(&months).unwrap();
        prop_assert_eq!(sets.len(), months.len() * 5);
        prop_assert_eq!(sets.iter().sum::<u32>(), months.iter().sum::<u32>());
        for (m, chunk) in months.iter().zip(sets.chunks(5)) {
            prop_assert!(chunk[..4].iter().all(|&l| l == 6));
            prop_assert_eq!(chunk[4], if *m == 30 { 6 } else { 5 });
        }
    }

    #[test]
    fn schedule_count_identity(
        days in 1u64..400,
        parvas in proptest::collection::vec(any::<u64>(), 0..30),
        seasons in proptest::collection::vec(any::<u64>(), 0..8),
        ayanas in proptest::collection::vec(any::<u64>(), 0..3),
    ) {
        let clamp = |v: Vec<u64>| v.into_iter().map(|d| d % days).collect::<Vec<_>>();
        let plan = SessionPlan {
            days_in_year: days,
            parva_days: clamp(parvas),
            season_starts: clamp(seasons),
            ayana_starts: clamp(ayanas),
        };
        let events = gavamayana_schedule(&plan).unwrap();
        let expected = 2 * days as usize
            + plan.parva_days.len()
            + plan.season_starts.len()
            + plan.ayana_starts.len();
        prop_assert_eq!(events.len(), expected);
        prop_assert!(events.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn square_iterate_agrees_with_power() {
    for b in [2u64, 3, 10] {
        for n in 0..=7u32 {
            let exp = power(&2u64.into(), &u64::from(n).into()).unwrap();
            assert_eq!(square_iterate(&b.into(), n), power(&b.into(), &exp).unwrap());
        }
    }
}

#[test]
fn series_ratios_are_exact() {
    let d = decimal_series();
    for (k, w) in d.windows(2).enumerate() {
        assert_eq!(&w[0].value * &Natural::from(10u64), w[1].value);
        assert_eq!(w[0].value, power(&10u64.into(), &(k as u64).into()).unwrap());
    }
    let c = centesimal_series(&SeriesSpec::default()).unwrap();
    for w in c.windows(2) {
        assert_eq!(&w[0].value * &Natural::from(100u64), w[1].value);
    }
}

#[test]
fn jain_by_two_routes() {
    let j = jain_population();
    assert_eq!(j.population.value, power(&2u64.into(), &96u64.into()).unwrap());
}
