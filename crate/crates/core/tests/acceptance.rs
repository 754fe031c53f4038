//! Acceptance criteria. Runs without the test harness so every criterion
//! prints one PASS/FAIL line; exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use yuga_core::arith::{digit_count, power, square_iterate, Natural, Rational};
use yuga_core::codec::{decode_name, encode_index, RadixVector};
use yuga_core::series::{centesimal_series, decimal_series, SeriesSpec};
use yuga_core::tally::{enumerate_splits, equal_split, repeated_addition_product, sadaha_partition};
use yuga_core::yuga::{SkyPosition, YugaConfig};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const VJ: YugaConfig = YugaConfig::VEDANGA;

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn nat(s: &str) -> Natural {
    s.parse().unwrap()
}

fn ac1_parva_increment() -> Outcome {
    let p = VJ.moon_position_at_parva_end(1).map_err(|e| e.to_string())?;
    ensure!(
        p == SkyPosition { nakshatra_index: 14, offset: q("73/124") },
        "parva 1 ends at {p}"
    );
    let text = VJ.moon_per_parva().render_decimal(5);
    ensure!(text == "14.58871", "rendered {text}");
    Ok(())
}

fn ac2_yuga_closure() -> Outcome {
    let step = VJ.moon_per_parva();
    let mut acc = Rational::zero();
    for _ in 0..124 {
        acc = &acc + &step;
    }
    ensure!(acc == Rational::from_u64(1809), "accumulated {acc}");
    let (_, rem) = nat("1809").div_rem(&nat("27")).unwrap();
    ensure!(rem.is_zero(), "1809 mod 27 = {rem}");
    ensure!(
        VJ.moon_position_at_parva_end(124).unwrap() == SkyPosition::origin(),
        "moon not at origin after 124 parvas"
    );
    ensure!(VJ.moon_position_at_day(1830).unwrap() == SkyPosition::origin(), "moon at day 1830");
    ensure!(VJ.sun_position_at_day(1830).unwrap() == SkyPosition::origin(), "sun at day 1830");
    let serial = VJ.tithi_serial_at_day(1830).unwrap();
    ensure!(serial == 1860 && serial % 30 == 0, "tithi serial {serial}");
    Ok(())
}

fn ac3_codec_bijection() -> Outcome {
    let rv = RadixVector::default();
    ensure!(rv.total_segments() == 810_000, "total {}", rv.total_segments());
    for i in 0..810_000 {
        let name = encode_index(i, &rv).map_err(|e| e.to_string())?;
        let back = decode_name(&name, &rv).map_err(|e| e.to_string())?;
        ensure!(back == i, "index {i} came back as {back}");
    }
    Ok(())
}

fn ac4_divisor_enumeration() -> Outcome {
    let splits = enumerate_splits(720, 24).map_err(|e| e.to_string())?;
    let bodies: Vec<u64> = splits.iter().map(|s| s.bodies).collect();
    ensure!(
        bodies == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24],
        "bodies {bodies:?}"
    );
    for (b, size) in [(4, 180), (6, 120), (10, 72), (24, 30)] {
        ensure!(
            splits.iter().any(|s| s.bodies == b && s.size_per_body == size),
            "missing ({b}, {size})"
        );
    }
    Ok(())
}

fn ac5_decimal_series() -> Outcome {
    let names = [
        "eka", "daśa", "śata", "sahasra", "ayuta", "niyuta", "prayuta", "arbuda", "nyarbuda",
        "samudra", "madhya", "anta", "parārdha",
    ];
    let s = decimal_series();
    ensure!(s.len() == 13, "{} terms", s.len());
    let mut expected = nat("1");
    for (k, (term, name)) in s.iter().zip(names).enumerate() {
        ensure!(term.name.as_deref() == Some(name), "term {k} named {:?}", term.name);
        ensure!(term.value == expected, "term {k} = {}", term.value);
        expected = &expected * &nat("10");
    }
    ensure!(s[12].value == nat("1,000,000,000,000"), "parārdha = {}", s[12].value);
    Ok(())
}

fn ac6_centesimal_series() -> Outcome {
    let s = centesimal_series(&SeriesSpec::default()).map_err(|e| e.to_string())?;
    let ten = Natural::from(10u64);
    let t23 = &s[22];
    let t24 = &s[23];
    ensure!(t23.value == power(&ten, &53u64.into()).unwrap(), "term 23 = {}", t23.value);
    ensure!(t23.name.as_deref() == Some("tallakṣana"), "term 23 named {:?}", t23.name);
    ensure!(t24.value == power(&ten, &55u64.into()).unwrap(), "term 24 = {}", t24.value);
    ensure!(t24.name.as_deref() == Some("dhvajāgravatī"), "term 24 named {:?}", t24.name);
    Ok(())
}

fn ac7_jain_computation() -> Outcome {
    let two = Natural::from(2u64);
    let sixth = square_iterate(&two, 6);
    let fifth = square_iterate(&two, 5);
    ensure!(sixth == nat("18,446,744,073,709,551,616"), "sixth square {sixth}");
    ensure!(fifth == nat("4,294,967,296"), "fifth square {fifth}");
    let product = &sixth * &fifth;
    ensure!(digit_count(&product) == 29, "{} digits", digit_count(&product));
    let direct = power(&two, &96u64.into()).unwrap();
    ensure!(product == direct, "{product} != {direct}");
    Ok(())
}

fn ac8_mean_tithi() -> Outcome {
    let hours = &Rational::new(1830u64, 1860u64).unwrap() * &Rational::from_u64(24);
    ensure!(hours == q("732/31"), "mean tithi {hours} h");
    ensure!(VJ.mean_tithi_hours() == hours, "model gives {}", VJ.mean_tithi_hours());
    let shown = hours.render_decimal(2);
    ensure!(shown == "23.61", "rendered {shown}");
    let tolerance = q("2/100");
    let observed = q("2362/100");
    let rendered_gap = (&q(&shown.replace('.', "")) * &q("1/100") - observed.clone()).abs();
    let exact_gap = (&hours - &observed).abs();
    ensure!(rendered_gap <= tolerance, "rendered gap {rendered_gap} h");
    ensure!(exact_gap <= tolerance, "exact gap {exact_gap} h");
    Ok(())
}

fn ac9_sadaha_rule() -> Outcome {
    ensure!(sadaha_partition(&[30]).unwrap() == [6, 6, 6, 6, 6], "30-day month");
    ensure!(sadaha_partition(&[29]).unwrap() == [6, 6, 6, 6, 5], "29-day month");
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&vec(prop_oneof![Just(29u32), Just(30u32)], 1..50), |months| {
            let sets = sadaha_partition(&months).unwrap();
            prop_assert!(sets.iter().all(|&l| l == 5 || l == 6));
            prop_assert_eq!(sets.iter().sum::<u32>(), months.iter().sum::<u32>());
            for (i, &l) in sets.iter().enumerate() {
                if l == 5 {
                    prop_assert_eq!(i % 5, 4);
                    prop_assert_eq!(months[i / 5], 29);
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn ac10_proto_arithmetic() -> Outcome {
    for a in 0..=200u64 {
        for b in 0..=200u64 {
            let p = repeated_addition_product(a, b).map_err(|e| e.to_string())?;
            let symbolic = &Rational::from_u64(a) * &Rational::from_u64(b);
            ensure!(
                Rational::from_u64(p.product) == symbolic,
                "{a} x {b} gave {}",
                p.product
            );
        }
    }
    for n in 1..=1000u64 {
        for k in 1..=50u64 {
            let divides = (1..=n / k).any(|m| m * k == n);
            let split = equal_split(n, k);
            ensure!(split.is_ok() == divides, "split({n}, {k}) = {split:?}");
        }
    }
    Ok(())
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: "AC1", title: "parva increment exactness", budget: Some(Duration::from_millis(1)), check: ac1_parva_increment },
        Criterion { id: "AC2", title: "yuga closure", budget: Some(Duration::from_secs(1)), check: ac2_yuga_closure },
        Criterion { id: "AC3", title: "codec bijection over 810000 names", budget: Some(Duration::from_secs(5)), check: ac3_codec_bijection },
        Criterion { id: "AC4", title: "divisors of 720 by dealing", budget: Some(Duration::from_secs(1)), check: ac4_divisor_enumeration },
        Criterion { id: "AC5", title: "decimal series eka..parārdha", budget: None, check: ac5_decimal_series },
        Criterion { id: "AC6", title: "centesimal series endpoints", budget: None, check: ac6_centesimal_series },
        Criterion { id: "AC7", title: "2^96 from successive squares", budget: None, check: ac7_jain_computation },
        Criterion { id: "AC8", title: "mean tithi length within 0.02 h", budget: None, check: ac8_mean_tithi },
        Criterion { id: "AC9", title: "sadaha rule", budget: Some(Duration::from_secs(1)), check: ac9_sadaha_rule },
        Criterion { id: "AC10", title: "repeated addition and dealing", budget: Some(Duration::from_secs(10)), check: ac10_proto_arithmetic },
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match c.budget {
            Some(b) if elapsed > b => Err(format!("took {elapsed:?}, budget {b:?}")),
            _ => Ok(()),
        });
        match result {
            Ok(()) => println!("[PASS] {:<4} {} ({elapsed:.2?})", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:<4} {}: {why}", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
