//! C ABI over `yuga-core`.
//!
//! Every fallible call returns a [`YugaStatus`]; on failure the message is
//! kept per thread and read back with [`yuga_last_error_message`].
//! Strings returned by this library are owned by the caller and must be
//! released with [`yuga_string_free`]. Opaque handles have their own
//! `*_free` functions.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use yuga_core::arith::{Natural, Rational};
use yuga_core::codec::{self, RadixVector, TimeSegmentName};
use yuga_core::series::{self, NamedNumber, SeriesSpec, Tradition, VariantTable};
use yuga_core::tally;
use yuga_core::yuga::{Ayana, Paksha, SkyPosition, YugaConfig};
use yuga_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YugaStatus {
    Ok = 0,
    NullPointer = 1,
    ZeroDenominator = 2,
    Domain = 3,
    Range = 4,
    NotDivisible = 5,
    InvalidMonth = 6,
    EmptyPile = 7,
    Parse = 8,
    BufferTooSmall = 9,
    Overflow = 10,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: YugaStatus, msg: impl Into<String>) -> YugaStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> YugaStatus {
    let status = match &e {
        Error::ZeroDenominator => YugaStatus::ZeroDenominator,
        Error::Domain(_) => YugaStatus::Domain,
        Error::Range { .. } => YugaStatus::Range,
        Error::NotDivisible { .. } => YugaStatus::NotDivisible,
        Error::InvalidMonth { .. } => YugaStatus::InvalidMonth,
        Error::EmptyPile(_) | Error::UnknownPile(_) => YugaStatus::EmptyPile,
        Error::NameTable { .. } | Error::UnknownName { .. } | Error::Parse(_) => YugaStatus::Parse,
    };
    fail(status, e.to_string())
}

fn string_out(s: impl Into<String>) -> *mut c_char {
    CString::new(s.into().replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or NULL if none.
/// Free with [`yuga_string_free`].
#[no_mangle]
pub extern "C" fn yuga_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(m) => m.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yuga_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: caller guarantees `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, YugaStatus> {
    if s.is_null() {
        return Err(fail(YugaStatus::NullPointer, "null string"));
    }
    // SAFETY: caller guarantees a valid NUL-terminated string.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| fail(YugaStatus::Parse, "string is not UTF-8"))
}

macro_rules! out_ref {
    ($p:expr) => {
        // SAFETY: caller guarantees `$p` is NULL or valid for writes.
        match unsafe { $p.as_mut() } {
            Some(r) => r,
            None => return fail(YugaStatus::NullPointer, "null output pointer"),
        }
    };
}

macro_rules! try_core {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return from_error(e),
        }
    };
}

// ---------------------------------------------------------------------------
// Calendar

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YugaAyana {
    Northern = 0,
    Southern = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YugaPaksha {
    Bright = 0,
    Dark = 1,
}

/// Position on the nakshatra circle. `nakshatra_index` is 0-based from
/// Dhanishthā; `offset_numer/offset_denom` is the part of it covered.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct YugaSkyPosition {
    pub nakshatra_index: u32,
    pub offset_numer: u64,
    pub offset_denom: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YugaDayRecord {
    pub day_index: u64,
    pub year_in_yuga: u32,
    pub ayana: YugaAyana,
    pub season_index: u32,
    pub parva_index: u32,
    pub paksha: YugaPaksha,
    pub tithi_ordinal: u32,
    pub moon: YugaSkyPosition,
    pub sun: YugaSkyPosition,
}

fn sky(p: &SkyPosition) -> Result<YugaSkyPosition, YugaStatus> {
    match (p.offset.numer().to_u64(), p.offset.denom().to_u64()) {
        (Some(n), Some(d)) => Ok(YugaSkyPosition {
            nakshatra_index: p.nakshatra_index,
            offset_numer: n,
            offset_denom: d,
        }),
        _ => Err(fail(YugaStatus::Overflow, "offset does not fit 64 bits")),
    }
}

fn write_position(
    out: *mut YugaSkyPosition,
    pos: yuga_core::Result<SkyPosition>,
) -> YugaStatus {
    let out = out_ref!(out);
    let pos = try_core!(pos);
    match sky(&pos) {
        Ok(p) => {
            *out = p;
            YugaStatus::Ok
        }
        Err(s) => s,
    }
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_moon_at_parva_end(k: u64, out: *mut YugaSkyPosition) -> YugaStatus {
    write_position(out, YugaConfig::VEDANGA.moon_position_at_parva_end(k))
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_moon_at_day(day: u64, out: *mut YugaSkyPosition) -> YugaStatus {
    write_position(out, YugaConfig::VEDANGA.moon_position_at_day(day))
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_sun_at_day(day: u64, out: *mut YugaSkyPosition) -> YugaStatus {
    write_position(out, YugaConfig::VEDANGA.sun_position_at_day(day))
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_day_record(day: u64, out: *mut YugaDayRecord) -> YugaStatus {
    let out = out_ref!(out);
    let r = try_core!(YugaConfig::VEDANGA.calendar_record(day));
    let (moon, sun) = match (sky(&r.moon), sky(&r.sun)) {
        (Ok(m), Ok(s)) => (m, s),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    *out = YugaDayRecord {
        day_index: r.day_index,
        year_in_yuga: r.year_in_yuga as u32,
        ayana: match r.ayana {
            Ayana::Northern => YugaAyana::Northern,
            Ayana::Southern => YugaAyana::Southern,
        },
        season_index: r.season_index as u32,
        parva_index: r.parva_index as u32,
        paksha: match r.tithi.paksha {
            Paksha::Bright => YugaPaksha::Bright,
            Paksha::Dark => YugaPaksha::Dark,
        },
        tithi_ordinal: r.tithi.ordinal,
        moon,
        sun,
    };
    YugaStatus::Ok
}

// ---------------------------------------------------------------------------
// Time-segment names

/// Six 1-based components, most significant first.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct YugaSegmentName {
    pub year: u32,
    pub month: u32,
    pub parva: u32,
    pub ahoratra_slot: u32,
    pub muhurta: u32,
    pub prati_muhurta: u32,
}

#[no_mangle]
pub extern "C" fn yuga_name_total_segments() -> u64 {
    RadixVector::default().total_segments()
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_name_encode(index: u64, out: *mut YugaSegmentName) -> YugaStatus {
    let out = out_ref!(out);
    let n = try_core!(codec::encode_index(index, &RadixVector::default()));
    *out = YugaSegmentName {
        year: n.year,
        month: n.month,
        parva: n.parva,
        ahoratra_slot: n.ahoratra_slot,
        muhurta: n.muhurta,
        prati_muhurta: n.prati_muhurta,
    };
    YugaStatus::Ok
}

/// # Safety
/// `name` must be NULL or point to a valid struct; `out` must be NULL or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_name_decode(
    name: *const YugaSegmentName,
    out: *mut u64,
) -> YugaStatus {
    // SAFETY: caller guarantees `name` is NULL or valid for reads.
    let Some(n) = (unsafe { name.as_ref() }) else {
        return fail(YugaStatus::NullPointer, "null name");
    };
    let out = out_ref!(out);
    let name = TimeSegmentName {
        year: n.year,
        month: n.month,
        parva: n.parva,
        ahoratra_slot: n.ahoratra_slot,
        muhurta: n.muhurta,
        prati_muhurta: n.prati_muhurta,
    };
    *out = try_core!(codec::decode_name(&name, &RadixVector::default()));
    YugaStatus::Ok
}

// ---------------------------------------------------------------------------
// Tally procedures

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct YugaSplit {
    pub bodies: u64,
    pub size_per_body: u64,
    pub steps: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct YugaTax {
    pub tax: u64,
    pub kept: u64,
    pub remainder_untaxed: u64,
    pub steps: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct YugaProduct {
    pub product: u64,
    pub rounds: u64,
    pub token_moves: u64,
}

fn split(s: tally::SplitResult) -> YugaSplit {
    YugaSplit {
        bodies: s.bodies,
        size_per_body: s.size_per_body,
        steps: s.steps,
    }
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_equal_split(total: u64, bodies: u64, out: *mut YugaSplit) -> YugaStatus {
    let out = out_ref!(out);
    *out = split(try_core!(tally::equal_split(total, bodies)));
    YugaStatus::Ok
}

/// Copies into a caller buffer. `out_len` always receives the number of
/// results; when it exceeds `capacity` nothing is copied and
/// `BufferTooSmall` is returned.
unsafe fn copy_out<T: Copy>(
    items: &[T],
    out: *mut T,
    capacity: usize,
    out_len: *mut usize,
) -> YugaStatus {
    let len = out_ref!(out_len);
    *len = items.len();
    if items.len() > capacity {
        return fail(
            YugaStatus::BufferTooSmall,
            format!("need room for {} items, have {capacity}", items.len()),
        );
    }
    if items.is_empty() {
        return YugaStatus::Ok;
    }
    if out.is_null() {
        return fail(YugaStatus::NullPointer, "null output buffer");
    }
    // SAFETY: caller guarantees `out` holds `capacity` >= len elements.
    unsafe { ptr::copy_nonoverlapping(items.as_ptr(), out, items.len()) };
    YugaStatus::Ok
}

/// # Safety
/// `out` must be NULL or valid for `capacity` writes; `out_len` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_enumerate_splits(
    total: u64,
    max_bodies: u64,
    out: *mut YugaSplit,
    capacity: usize,
    out_len: *mut usize,
) -> YugaStatus {
    let splits: Vec<YugaSplit> = try_core!(tally::enumerate_splits(total, max_bodies))
        .into_iter()
        .map(split)
        .collect();
    unsafe { copy_out(&splits, out, capacity, out_len) }
}

/// # Safety
/// `months` must be valid for `count` reads (or NULL when `count` is 0);
/// `out` must be valid for `capacity` writes; `out_len` for one write.
#[no_mangle]
pub unsafe extern "C" fn yuga_sadaha_partition(
    months: *const u32,
    count: usize,
    out: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> YugaStatus {
    let months: &[u32] = if count == 0 {
        &[]
    } else if months.is_null() {
        return fail(YugaStatus::NullPointer, "null month list");
    } else {
        // SAFETY: caller guarantees `count` readable elements.
        unsafe { std::slice::from_raw_parts(months, count) }
    };
    let sets = try_core!(tally::sadaha_partition(months));
    unsafe { copy_out(&sets, out, capacity, out_len) }
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_tax_in_kind(measures: u64, divisor: u64, out: *mut YugaTax) -> YugaStatus {
    let out = out_ref!(out);
    let t = try_core!(tally::tax_in_kind(measures, divisor));
    *out = YugaTax {
        tax: t.tax,
        kept: t.kept,
        remainder_untaxed: t.remainder_untaxed,
        steps: t.steps,
    };
    YugaStatus::Ok
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_repeated_addition_product(a: u64, b: u64, out: *mut YugaProduct) -> YugaStatus {
    let out = out_ref!(out);
    let p = try_core!(tally::repeated_addition_product(a, b));
    *out = YugaProduct {
        product: p.product,
        rounds: p.rounds,
        token_moves: p.token_moves,
    };
    YugaStatus::Ok
}

// ---------------------------------------------------------------------------
// Exact rationals

/// Opaque exact fraction.
pub struct YugaRational(Rational);

fn rational_out(out: *mut *mut YugaRational, r: Rational) -> YugaStatus {
    let out = out_ref!(out);
    *out = Box::into_raw(Box::new(YugaRational(r)));
    YugaStatus::Ok
}

unsafe fn rational_ref<'a>(r: *const YugaRational) -> Result<&'a Rational, YugaStatus> {
    // SAFETY: caller guarantees NULL or a live handle.
    unsafe { r.as_ref() }
        .map(|r| &r.0)
        .ok_or_else(|| fail(YugaStatus::NullPointer, "null rational"))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses `"n"`, `"n/d"` or `"-n/d"` into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_parse(text: *const c_char, out: *mut *mut YugaRational) -> YugaStatus {
    let s = try_status!(unsafe { read_str(text) });
    let r = try_core!(s.parse::<Rational>());
    rational_out(out, r)
}

/// # Safety
/// `a`, `b` must be live handles; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_add(
    a: *const YugaRational,
    b: *const YugaRational,
    out: *mut *mut YugaRational,
) -> YugaStatus {
    let (a, b) = (try_status!(unsafe { rational_ref(a) }), try_status!(unsafe { rational_ref(b) }));
    rational_out(out, a + b)
}

/// # Safety
/// `a`, `b` must be live handles; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_mul(
    a: *const YugaRational,
    b: *const YugaRational,
    out: *mut *mut YugaRational,
) -> YugaStatus {
    let (a, b) = (try_status!(unsafe { rational_ref(a) }), try_status!(unsafe { rational_ref(b) }));
    rational_out(out, a * b)
}

/// Solves `a/b = c/d` for `a`.
///
/// # Safety
/// `b`, `c`, `d` must be live handles; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_rule_of_three(
    b: *const YugaRational,
    c: *const YugaRational,
    d: *const YugaRational,
    out: *mut *mut YugaRational,
) -> YugaStatus {
    let b = try_status!(unsafe { rational_ref(b) });
    let c = try_status!(unsafe { rational_ref(c) });
    let d = try_status!(unsafe { rational_ref(d) });
    let a = try_core!(yuga_core::arith::rule_of_three(b, c, d));
    rational_out(out, a)
}

/// `"n/d"` form, or NULL for a NULL handle.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_to_string(r: *const YugaRational) -> *mut c_char {
    match unsafe { rational_ref(r) } {
        Ok(r) => string_out(r.to_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// `"w n/d"` form; NULL for a NULL handle or a negative value.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_to_mixed_string(r: *const YugaRational) -> *mut c_char {
    let Ok(r) = (unsafe { rational_ref(r) }) else {
        return ptr::null_mut();
    };
    match r.to_mixed() {
        Ok(m) => string_out(m.to_string()),
        Err(e) => {
            from_error(e);
            ptr::null_mut()
        }
    }
}

/// Decimal text rounded half-up to `places` digits.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_render_decimal(r: *const YugaRational, places: u32) -> *mut c_char {
    match unsafe { rational_ref(r) } {
        Ok(r) => string_out(r.render_decimal(places as usize)),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `r` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yuga_rational_free(r: *mut YugaRational) {
    if !r.is_null() {
        // SAFETY: handle came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(r) });
    }
}

// ---------------------------------------------------------------------------
// Number series

/// Opaque list of named numbers.
pub struct YugaSeries(Vec<NamedNumber>);

fn series_out(v: Vec<NamedNumber>) -> *mut YugaSeries {
    Box::into_raw(Box::new(YugaSeries(v)))
}

/// eka (1) through parārdha (10^12).
#[no_mangle]
pub extern "C" fn yuga_series_decimal() -> *mut YugaSeries {
    series_out(series::decimal_series())
}

/// The 24-term centesimal series from 10^9.
#[no_mangle]
pub extern "C" fn yuga_series_centesimal() -> *mut YugaSeries {
    series_out(series::centesimal_series(&SeriesSpec::default()).expect("default spec is valid"))
}

/// Sixth square of two, fifth square of two, and their product.
#[no_mangle]
pub extern "C" fn yuga_series_jain() -> *mut YugaSeries {
    let j = series::jain_population();
    let entry = |position, name: &str, value: Natural| NamedNumber {
        position,
        name: Some(name.to_string()),
        value,
        tradition: Tradition::Jain,
    };
    series_out(vec![
        entry(1, "sixth square", j.sixth_square),
        entry(2, "fifth square", j.fifth_square),
        entry(3, "2^96", j.population.value),
    ])
}

/// Names recorded for a decimal value, as a series whose entries all carry
/// that value. NULL on a parse failure.
///
/// # Safety
/// `value` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn yuga_variant_lookup(value: *const c_char) -> *mut YugaSeries {
    let Ok(s) = (unsafe { read_str(value) }) else {
        return ptr::null_mut();
    };
    let v: Natural = match s.parse() {
        Ok(v) => v,
        Err(e) => {
            from_error(e);
            return ptr::null_mut();
        }
    };
    let hits = VariantTable::shipped()
        .lookup(&v)
        .into_iter()
        .enumerate()
        .map(|(i, (name, tradition))| NamedNumber {
            position: i + 1,
            name: Some(name),
            value: v.clone(),
            tradition,
        })
        .collect();
    series_out(hits)
}

unsafe fn entry<'a>(s: *const YugaSeries, i: usize) -> Option<&'a NamedNumber> {
    // SAFETY: caller guarantees NULL or a live handle.
    unsafe { s.as_ref() }.and_then(|s| s.0.get(i))
}

/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_series_len(s: *const YugaSeries) -> usize {
    // SAFETY: as above.
    unsafe { s.as_ref() }.map_or(0, |s| s.0.len())
}

/// Decimal digits of entry `i`; NULL when out of range.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_series_value(s: *const YugaSeries, i: usize) -> *mut c_char {
    unsafe { entry(s, i) }.map_or(ptr::null_mut(), |n| string_out(n.value.to_string()))
}

/// Name of entry `i`, or `"term N"` for unnamed terms; NULL when out of range.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_series_label(s: *const YugaSeries, i: usize) -> *mut c_char {
    unsafe { entry(s, i) }.map_or(ptr::null_mut(), |n| string_out(n.label()))
}

/// Static tradition name of entry `i`; do not free. NULL when out of range.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yuga_series_tradition(s: *const YugaSeries, i: usize) -> *const c_char {
    let Some(n) = (unsafe { entry(s, i) }) else {
        return ptr::null();
    };
    let name: &'static CStr = match n.tradition {
        Tradition::Yajurveda => c"yajurveda",
        Tradition::Lalitavistara => c"lalitavistara",
        Tradition::Jain => c"jain",
        Tradition::Variant => c"variant",
    };
    name.as_ptr()
}

/// # Safety
/// `s` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yuga_series_free(s: *mut YugaSeries) {
    if !s.is_null() {
        // SAFETY: handle came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(s) });
    }
}
