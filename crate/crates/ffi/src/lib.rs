//! C ABI over `gss-core`.
//!
//! Objects cross the boundary as opaque handles created by `gss_*_new`,
//! `gss_*_parse` or `gss_*_build` and released with the matching `gss_*_free`.
//! Every function returns a [`GssStatus`]; results come back through out
//! pointers. Integers that can exceed 64 bits (determinants, indices,
//! polynomial values) are returned as decimal strings, released with
//! [`gss_string_free`]. After a non-`Ok` status, [`gss_last_error`] describes
//! what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gss_core::form::{build_form, IntersectionForm};
use gss_core::invariants::{discriminant, lattice_index, twisting_coefficient, verify_all, verify_main_theorem};
use gss_core::tiling::{mark_set, poly, MarkSet, TilePolynomial};
use gss_core::{parse_sigma, ClassTag, Error, SigmaWord};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GssStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    OutOfRange = 5,
    NotApplicable = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GssClass {
    Enoki = 0,
    OddInoueHirzebruch = 1,
    EvenInoueHirzebruch = 2,
    Intermediate = 3,
}

impl From<ClassTag> for GssClass {
    fn from(tag: ClassTag) -> Self {
        match tag {
            ClassTag::Enoki => GssClass::Enoki,
            ClassTag::OddInoueHirzebruch => GssClass::OddInoueHirzebruch,
            ClassTag::EvenInoueHirzebruch => GssClass::EvenInoueHirzebruch,
            ClassTag::Intermediate => GssClass::Intermediate,
        }
    }
}

/// A parsed cyclic word.
pub struct GssWord(SigmaWord);

/// An intersection form.
pub struct GssForm(IntersectionForm);

/// A polynomial given by its allowed subsets.
pub struct GssPolynomial(TilePolynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(GssStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. }
            | Error::Empty
            | Error::ZeroLength { .. }
            | Error::AdjacentRegular { .. }
            | Error::Inadmissible { .. } => GssStatus::Parse,
            Error::NoSingularParts | Error::NoRegularParts | Error::NotIntermediate { .. } => GssStatus::NotApplicable,
            Error::OutOfRange { .. } | Error::TooManyVariables { .. } => GssStatus::OutOfRange,
            _ => GssStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GssStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            GssStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GssStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(GssStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(text).map_err(|_| Failure(GssStatus::InvalidArgument, "string contains NUL".into()))?;
    out.write(c.into_raw());
    Ok(())
}

/// Boxes `value` into a new handle, checking `out` first so nothing leaks.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `gss_*` call on the same thread.
#[no_mangle]
pub extern "C" fn gss_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `"s2 r1 s1 r1"`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_word_parse(text: *const c_char, out: *mut *mut GssWord) -> GssStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(GssStatus::InvalidUtf8, e.to_string()))?;
        let w = parse_sigma(text)?;
        write_handle(out, GssWord(w))
    })
}

/// # Safety
/// `w` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gss_word_free(w: *mut GssWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Least rotation of the word, as a new handle.
///
/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_word_canonical(w: *const GssWord, out: *mut *mut GssWord) -> GssStatus {
    guard(|| {
        let w = deref(w, "word")?;
        write_handle(out, GssWord(w.0.canonical()))
    })
}

/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_word_to_string(w: *const GssWord, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, deref(w, "word")?.0.to_string()))
}

/// Total length `n`, number of singular parts `N` and of regular parts.
///
/// # Safety
/// `w` is a live word handle; each out pointer is null or writable.
#[no_mangle]
pub unsafe extern "C" fn gss_word_counts(
    w: *const GssWord,
    n: *mut usize,
    singular: *mut usize,
    regular: *mut usize,
) -> GssStatus {
    guard(|| {
        let w = &deref(w, "word")?.0;
        for (p, v) in [(n, w.total_length()), (singular, w.singular_count()), (regular, w.regular_count())] {
            if !p.is_null() {
                p.write(v);
            }
        }
        Ok(())
    })
}

/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_word_class(w: *const GssWord, out: *mut GssClass) -> GssStatus {
    guard(|| write_out(out, deref(w, "word")?.0.classify().tag.into()))
}

/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_form_build(w: *const GssWord, out: *mut *mut GssForm) -> GssStatus {
    guard(|| write_handle(out, GssForm(build_form(&deref(w, "word")?.0))))
}

/// # Safety
/// `f` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gss_form_free(f: *mut GssForm) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// # Safety
/// `f` is a live form handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_form_order(f: *const GssForm, out: *mut usize) -> GssStatus {
    guard(|| write_out(out, deref(f, "form")?.0.order()))
}

/// Entry `(i, j)` in the positive convention.
///
/// # Safety
/// `f` is a live form handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_form_entry(f: *const GssForm, i: usize, j: usize, out: *mut i64) -> GssStatus {
    guard(|| {
        let f = &deref(f, "form")?.0;
        let n = f.order();
        if i >= n || j >= n {
            return Err(Error::OutOfRange { index: i.max(j), modulus: n }.into());
        }
        write_out(out, f.entry(i, j))
    })
}

/// # Safety
/// `f` is a live form handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_form_determinant(f: *const GssForm, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, deref(f, "form")?.0.determinant().to_string()))
}

/// # Safety
/// `f` is a live form handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_form_is_positive_definite(f: *const GssForm, out: *mut bool) -> GssStatus {
    guard(|| write_out(out, deref(f, "form")?.0.is_positive_definite()))
}

/// `det M(w)` as a decimal string.
///
/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_discriminant(w: *const GssWord, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, discriminant(&deref(w, "word")?.0).to_string()))
}

/// Square root of the discriminant, from the polynomial side.
/// `NotApplicable` for words without singular parts.
///
/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_lattice_index(w: *const GssWord, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, lattice_index(&deref(w, "word")?.0)?.to_string()))
}

/// Product of branch determinants. `NotApplicable` unless the word has both
/// singular and regular parts.
///
/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_twisting_coefficient(w: *const GssWord, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, twisting_coefficient(&deref(w, "word")?.0)?.to_string()))
}

/// Runs every identity check on one word. `passed` is false if any fails.
///
/// # Safety
/// `w` is a live word handle; `passed` is writable; `report_json` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn gss_verify_word(
    w: *const GssWord,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> GssStatus {
    guard(|| {
        let report = verify_main_theorem(&deref(w, "word")?.0);
        write_out(passed, report.passed())?;
        if !report_json.is_null() {
            write_string(report_json, report.to_json())?;
        }
        Ok(())
    })
}

/// Checks every canonical word of length at most `max_n`.
///
/// # Safety
/// `words` and `failures` are writable.
#[no_mangle]
pub unsafe extern "C" fn gss_verify_all(max_n: usize, words: *mut usize, failures: *mut usize) -> GssStatus {
    guard(|| {
        if max_n == 0 {
            return Err(Failure(GssStatus::InvalidArgument, "max_n must be at least 1".into()));
        }
        if words.is_null() || failures.is_null() {
            return Err(null("output pointer"));
        }
        let summary = verify_all(max_n);
        words.write(summary.words);
        failures.write(summary.failures.len());
        Ok(())
    })
}

/// Polynomial of the mark set `marks[0..marks_len]` in `Z/nZ`.
///
/// # Safety
/// `marks` points to `marks_len` readable values (may be null when
/// `marks_len` is 0); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_new(
    n: usize,
    marks: *const usize,
    marks_len: usize,
    out: *mut *mut GssPolynomial,
) -> GssStatus {
    guard(|| {
        let members: &[usize] = if marks_len == 0 {
            &[]
        } else if marks.is_null() {
            return Err(null("marks"));
        } else {
            std::slice::from_raw_parts(marks, marks_len)
        };
        let a = MarkSet::new(n, members)?;
        write_handle(out, GssPolynomial(poly(&a)))
    })
}

/// Polynomial of the word's mark set. `NotApplicable` without singular parts.
///
/// # Safety
/// `w` is a live word handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_from_word(w: *const GssWord, out: *mut *mut GssPolynomial) -> GssStatus {
    guard(|| {
        let a = mark_set(&deref(w, "word")?.0)?;
        write_handle(out, GssPolynomial(poly(&a)))
    })
}

/// # Safety
/// `p` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_free(p: *mut GssPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` is a live polynomial handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_nvars(p: *const GssPolynomial, out: *mut usize) -> GssStatus {
    guard(|| write_out(out, deref(p, "polynomial")?.0.nvars()))
}

/// Text form, e.g. `"X0*X1 + X0 + X1"`.
///
/// # Safety
/// `p` is a live polynomial handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_to_string(p: *const GssPolynomial, out: *mut *mut c_char) -> GssStatus {
    guard(|| write_string(out, deref(p, "polynomial")?.0.to_string()))
}

/// Exact value at `values[0..len]`, as a decimal string.
///
/// # Safety
/// `p` is a live polynomial handle; `values` points to `len` readable values
/// (may be null when `len` is 0); `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gss_poly_eval(
    p: *const GssPolynomial,
    values: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> GssStatus {
    guard(|| {
        let p = &deref(p, "polynomial")?.0;
        let values: &[i64] = if len == 0 {
            &[]
        } else if values.is_null() {
            return Err(null("values"));
        } else {
            std::slice::from_raw_parts(values, len)
        };
        write_string(out, p.eval(values)?.to_string())
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn gss_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
