//! C ABI over the `moufang` crate.
//!
//! Handles are opaque pointers created by `*_new`/constructor functions and
//! released with the matching `*_free`. Every fallible call returns a
//! [`MoufangStatus`] and writes its result through an out-pointer, which is
//! left untouched on failure. Panics never cross the boundary; they surface
//! as `MOUFANG_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use moufang::corpus::corpus_loop;
use moufang::gfpn::FiniteField;
use moufang::loopalg::LoopAlgebra;
use moufang::loopcore::{parse_table, FiniteLoop};
use moufang::paige::{build_m, classify_embeddability, DEFAULT_MAX_Q};
use moufang::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoufangStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidField = 2,
    TooLarge = 3,
    InvalidTable = 4,
    NotFound = 5,
    OutOfRange = 6,
    CheckFailed = 7,
    Parse = 8,
    Internal = 9,
}

/// A finite field GF(p^n).
pub struct MoufangField(FiniteField);

/// A finite loop given by its Cayley table.
pub struct MoufangLoop(FiniteLoop);

fn status_of(e: &Error) -> MoufangStatus {
    match e {
        Error::NotPrime(_) | Error::BadDegree(_) | Error::MixedFields | Error::DivisionByZero => {
            MoufangStatus::InvalidField
        }
        Error::FieldTooLarge(_) | Error::OrderTooLarge { .. } => MoufangStatus::TooLarge,
        Error::NotLatin(_) | Error::NoIdentity | Error::NotASubloop => MoufangStatus::InvalidTable,
        Error::UnknownName(_) => MoufangStatus::NotFound,
        Error::Parse(_) => MoufangStatus::Parse,
        _ => MoufangStatus::CheckFailed,
    }
}

fn guard<F>(f: F) -> MoufangStatus
where
    F: FnOnce() -> Result<(), MoufangStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MoufangStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => MoufangStatus::Internal,
    }
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), MoufangStatus> {
    if out.is_null() {
        return Err(MoufangStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, MoufangStatus> {
    p.as_ref().ok_or(MoufangStatus::NullPointer)
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, MoufangStatus> {
    if s.is_null() {
        return Err(MoufangStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| MoufangStatus::Parse)
}

fn boxed_loop(q: moufang::Result<FiniteLoop>) -> Result<*mut MoufangLoop, MoufangStatus> {
    q.map(|q| Box::into_raw(Box::new(MoufangLoop(q))))
        .map_err(|e| status_of(&e))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn moufang_status_message(status: MoufangStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        MoufangStatus::Ok => b"ok\0",
        MoufangStatus::NullPointer => b"null pointer argument\0",
        MoufangStatus::InvalidField => b"invalid field parameters\0",
        MoufangStatus::TooLarge => b"input exceeds a size guard\0",
        MoufangStatus::InvalidTable => b"table is not a loop\0",
        MoufangStatus::NotFound => b"unknown name\0",
        MoufangStatus::OutOfRange => b"element index out of range\0",
        MoufangStatus::CheckFailed => b"construction check failed\0",
        MoufangStatus::Parse => b"parse error\0",
        MoufangStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Creates GF(p^n).
///
/// # Safety
/// `out` must be null or valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_new(
    p: u32,
    n: u32,
    out: *mut *mut MoufangField,
) -> MoufangStatus {
    guard(|| {
        let f = FiniteField::new(p, n).map_err(|e| status_of(&e))?;
        if out.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        put(out, Box::into_raw(Box::new(MoufangField(f))))
    })
}

/// # Safety
/// `field` must be null or a pointer from `moufang_field_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_free(field: *mut MoufangField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Field order `q`, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live field handle.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_order(field: *const MoufangField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.order())
}

/// Product of two elements given by index `Σ c_i p^i`.
///
/// # Safety
/// `field` must be a live field handle; `out` valid for one `u32`.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_mul(
    field: *const MoufangField,
    a: u32,
    b: u32,
    out: *mut u32,
) -> MoufangStatus {
    guard(|| {
        let f = &get(field)?.0;
        let a = f.from_index(a).map_err(|_| MoufangStatus::OutOfRange)?;
        let b = f.from_index(b).map_err(|_| MoufangStatus::OutOfRange)?;
        put(out, f.mul(a, b).index())
    })
}

/// Inverse of a nonzero element.
///
/// # Safety
/// `field` must be a live field handle; `out` valid for one `u32`.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_inv(
    field: *const MoufangField,
    a: u32,
    out: *mut u32,
) -> MoufangStatus {
    guard(|| {
        let f = &get(field)?.0;
        let a = f.from_index(a).map_err(|_| MoufangStatus::OutOfRange)?;
        put(out, f.inv(a).map_err(|e| status_of(&e))?.index())
    })
}

/// # Safety
/// `field` must be a live field handle; `out` valid for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn moufang_field_is_closed_under_sqrt(
    field: *const MoufangField,
    out: *mut bool,
) -> MoufangStatus {
    guard(|| put(out, get(field)?.0.is_closed_under_sqrt()))
}

/// Square-root closure of GF(p^n) and whether it disagrees with the
/// even-degree claim. `disagrees` is -1 in characteristic 2, else 0 or 1.
///
/// # Safety
/// `closed` and `disagrees` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn moufang_classify(
    p: u32,
    n: u32,
    closed: *mut bool,
    disagrees: *mut i32,
) -> MoufangStatus {
    guard(|| {
        if closed.is_null() || disagrees.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        let r = classify_embeddability(p, n).map_err(|e| status_of(&e))?;
        put(closed, r.closed_under_sqrt)?;
        put(
            disagrees,
            r.disagrees_with_parity_claim.map_or(-1, i32::from),
        )
    })
}

/// Builds a loop from a row-major table of `order * order` entries with
/// identity at index 0.
///
/// # Safety
/// `table` must point to `order * order` readable `u32`s; `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_from_table(
    order: usize,
    table: *const u32,
    out: *mut *mut MoufangLoop,
) -> MoufangStatus {
    guard(|| {
        if table.is_null() || out.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        let len = order.checked_mul(order).ok_or(MoufangStatus::TooLarge)?;
        let entries = std::slice::from_raw_parts(table, len).to_vec();
        put(out, boxed_loop(FiniteLoop::from_table(order, entries))?)
    })
}

/// Parses the text table format (`order n` followed by `n` rows).
///
/// # Safety
/// `text_in` must be a NUL-terminated string; `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_parse(
    text_in: *const c_char,
    out: *mut *mut MoufangLoop,
) -> MoufangStatus {
    guard(|| {
        let s = text(text_in)?;
        if out.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        put(out, boxed_loop(parse_table(s))?)
    })
}

/// A loop from the fixed corpus, e.g. `"Q8"` or `"chein-D4"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn moufang_corpus_loop(
    name: *const c_char,
    out: *mut *mut MoufangLoop,
) -> MoufangStatus {
    guard(|| {
        let s = text(name)?;
        if out.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        put(out, boxed_loop(corpus_loop(s))?)
    })
}

/// `M(GF(p^n)) = M0/Z(M0)`, for `q <= 3`.
///
/// # Safety
/// `out` must be valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn moufang_paige_loop(
    p: u32,
    n: u32,
    out: *mut *mut MoufangLoop,
) -> MoufangStatus {
    guard(|| {
        if out.is_null() {
            return Err(MoufangStatus::NullPointer);
        }
        let f = FiniteField::new(p, n).map_err(|e| status_of(&e))?;
        let bundle = build_m(&f, DEFAULT_MAX_Q).map_err(|e| status_of(&e))?;
        put(out, boxed_loop(Ok(bundle.m))?)
    })
}

/// # Safety
/// `lp` must be null or a live loop handle.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_free(lp: *mut MoufangLoop) {
    if !lp.is_null() {
        drop(Box::from_raw(lp));
    }
}

/// Loop order, or 0 for a null handle.
///
/// # Safety
/// `lp` must be null or a live loop handle.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_order(lp: *const MoufangLoop) -> usize {
    lp.as_ref().map_or(0, |l| l.0.order())
}

/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `usize`.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_mul(
    lp: *const MoufangLoop,
    a: usize,
    b: usize,
    out: *mut usize,
) -> MoufangStatus {
    guard(|| {
        let q = &get(lp)?.0;
        if a >= q.order() || b >= q.order() {
            return Err(MoufangStatus::OutOfRange);
        }
        put(out, q.mul(a, b))
    })
}

/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_is_moufang(
    lp: *const MoufangLoop,
    out: *mut bool,
) -> MoufangStatus {
    guard(|| put(out, get(lp)?.0.is_moufang()))
}

/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `bool`.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_is_associative(
    lp: *const MoufangLoop,
    out: *mut bool,
) -> MoufangStatus {
    guard(|| put(out, get(lp)?.0.is_associative()))
}

/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `usize`.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_center_size(
    lp: *const MoufangLoop,
    out: *mut usize,
) -> MoufangStatus {
    guard(|| put(out, get(lp)?.0.center().len()))
}

/// Central nilpotency class, or -1 when the loop is not centrally nilpotent.
///
/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `i32`.
#[no_mangle]
pub unsafe extern "C" fn moufang_loop_nilpotency_class(
    lp: *const MoufangLoop,
    out: *mut i32,
) -> MoufangStatus {
    guard(|| {
        let class = get(lp)?.0.nilpotency_class();
        put(out, class.map_or(-1, |c| c as i32))
    })
}

/// Least `k` with `(ωQ)^k = 0` in GF(p^n)Q, or -1 when the powers stabilize
/// at a nonzero ideal.
///
/// # Safety
/// `lp` must be a live loop handle; `out` valid for one `i32`.
#[no_mangle]
pub unsafe extern "C" fn moufang_omega_nilpotency_index(
    lp: *const MoufangLoop,
    p: u32,
    n: u32,
    out: *mut i32,
) -> MoufangStatus {
    guard(|| {
        let q = &get(lp)?.0;
        let f = FiniteField::new(p, n).map_err(|e| status_of(&e))?;
        let alg = LoopAlgebra::new(q.clone(), f).map_err(|e| status_of(&e))?;
        let index = alg.nilpotency_index(&alg.omega(), 4 * q.order() + 4);
        put(out, index.map_or(-1, |k| k as i32))
    })
}
