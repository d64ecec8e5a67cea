//! C ABI over the `pireg` core.
//!
//! Elements cross the boundary as opaque `PiregElement` handles that the
//! caller releases with `pireg_element_free`. Every fallible function
//! returns a `PiregStatus`; on failure `pireg_last_error` describes the
//! most recent error on the calling thread. Strings handed out by the
//! library are released with `pireg_string_free`.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pireg::dkring::RingElement;
use pireg::finring::{self, FiniteRing, RingSpec};
use pireg::report::{Report, Verdict};
use pireg::solver;
use pireg::structure::{self, suites, NilpotencyStatus};
use pireg::Error;

/// Opaque ring element.
pub struct PiregElement(RingElement);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiregStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Undecided = 5,
    SizeCap = 6,
    UnknownSuite = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiregNilpotency {
    Nilpotent = 0,
    NotNilpotent = 1,
    Undecided = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiregVerdict {
    Pass = 0,
    Fail = 1,
    Undecided = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: PiregStatus, msg: impl Into<String>) -> PiregStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> PiregStatus {
    let status = match e {
        Error::Parse { .. } | Error::InvalidLetter { .. } => PiregStatus::Parse,
        Error::Undecided(_) => PiregStatus::Undecided,
        Error::SizeCap { .. } => PiregStatus::SizeCap,
        Error::UnknownSuite(_) => PiregStatus::UnknownSuite,
        Error::ZeroElement | Error::NotInRa(_) | Error::Depth { .. } => PiregStatus::InvalidArgument,
        _ => PiregStatus::Internal,
    };
    fail(status, e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PiregStatus> {
    if s.is_null() {
        return Err(fail(PiregStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PiregStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn read_elem<'a>(e: *const PiregElement) -> Result<&'a RingElement, PiregStatus> {
    e.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(PiregStatus::NullPointer, "null element handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), PiregStatus> {
    if out.is_null() {
        return Err(fail(PiregStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_elem(out: *mut *mut PiregElement, e: RingElement) -> Result<(), PiregStatus> {
    if out.is_null() {
        return Err(fail(PiregStatus::NullPointer, "null output pointer"));
    }
    out.write(Box::into_raw(Box::new(PiregElement(e))));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), PiregStatus> {
    let c = CString::new(s).map_err(|_| fail(PiregStatus::Internal, "interior nul in output"))?;
    write_out(out, c.into_raw())
}

fn status(r: Result<(), PiregStatus>) -> PiregStatus {
    match r {
        Ok(()) => PiregStatus::Ok,
        Err(s) => s,
    }
}

fn verdict(r: &Report) -> PiregVerdict {
    match r.verdict {
        Verdict::Pass => PiregVerdict::Pass,
        Verdict::Fail => PiregVerdict::Fail,
        Verdict::Undecided => PiregVerdict::Undecided,
    }
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pireg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an element such as `"a + xa^2"`.
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_parse(text: *const c_char, out: *mut *mut PiregElement) -> PiregStatus {
    status((|| {
        let e: RingElement = read_str(text)?.parse().map_err(from_error)?;
        write_elem(out, e)
    })())
}

/// # Safety
/// `e` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_free(e: *mut PiregElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Reduced form as a newly allocated string.
///
/// # Safety
/// `e` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_to_string(e: *const PiregElement, out: *mut *mut c_char) -> PiregStatus {
    status((|| write_string(out, read_elem(e)?.to_string()))())
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pireg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_add(
    a: *const PiregElement,
    b: *const PiregElement,
    out: *mut *mut PiregElement,
) -> PiregStatus {
    status((|| write_elem(out, read_elem(a)? + read_elem(b)?))())
}

/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_mul(
    a: *const PiregElement,
    b: *const PiregElement,
    out: *mut *mut PiregElement,
) -> PiregStatus {
    status((|| write_elem(out, read_elem(a)? * read_elem(b)?))())
}

/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_element_pow(a: *const PiregElement, k: u32, out: *mut *mut PiregElement) -> PiregStatus {
    status((|| write_elem(out, read_elem(a)?.pow(k)))())
}

/// Compares two single monomials; writes -1, 0 or 1.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_monomial_cmp(
    a: *const PiregElement,
    b: *const PiregElement,
    out: *mut i32,
) -> PiregStatus {
    status((|| {
        let single = |e: &RingElement| {
            let mut it = e.monomials();
            match (it.next(), it.next()) {
                (Some(m), None) => Ok(m.clone()),
                _ => Err(fail(PiregStatus::InvalidArgument, format!("`{e}` is not a single monomial"))),
            }
        };
        let ord = single(read_elem(a)?)?.cmp(&single(read_elem(b)?)?);
        write_out(
            out,
            match ord {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            },
        )
    })())
}

/// Runs the chain procedure. For nilpotent input `index` receives the
/// nilpotency index and `chain_len` the chain length; both are 0 otherwise.
///
/// # Safety
/// `e` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn pireg_nilpotent(
    e: *const PiregElement,
    cap: usize,
    verdict_out: *mut PiregNilpotency,
    index: *mut u32,
    chain_len: *mut usize,
) -> PiregStatus {
    status((|| {
        let f = read_elem(e)?;
        let v = structure::chain_nilpotency(f, cap);
        let (kind, idx, len) = match v.status {
            NilpotencyStatus::Nilpotent => {
                let idx = structure::nilpotency_index(f).map_err(from_error)?.unwrap_or(0);
                (PiregNilpotency::Nilpotent, idx, v.chain.len())
            }
            NilpotencyStatus::NotNilpotent => (PiregNilpotency::NotNilpotent, 0, 0),
            NilpotencyStatus::Undecided => (PiregNilpotency::Undecided, 0, 0),
        };
        write_out(verdict_out, kind)?;
        write_out(index, idx)?;
        write_out(chain_len, len)
    })())
}

/// Inverse of a unit. For a non-unit `*out` is set to null.
///
/// # Safety
/// `e` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_inverse(e: *const PiregElement, out: *mut *mut PiregElement) -> PiregStatus {
    status((|| match structure::inverse(read_elem(e)?).map_err(from_error)? {
        Some(inv) => write_elem(out, inv),
        None => write_out(out, ptr::null_mut()),
    })())
}

/// Dimensions of the right and left annihilators truncated at `bound`.
///
/// # Safety
/// `e` must be a live handle and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn pireg_annihilator_dims(
    e: *const PiregElement,
    bound: usize,
    right: *mut usize,
    left: *mut usize,
) -> PiregStatus {
    status((|| {
        let f = read_elem(e)?;
        write_out(right, solver::right_annihilator(f, bound).dim())?;
        write_out(left, solver::left_annihilator(f, bound).dim())
    })())
}

/// Searches for `y` of length at most `bound` with `f = y f^2`; `*out` is
/// null when none exists.
///
/// # Safety
/// `e` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pireg_srsolve(e: *const PiregElement, bound: usize, out: *mut *mut PiregElement) -> PiregStatus {
    status((|| match solver::solve_sr_equation(read_elem(e)?, bound) {
        Some(y) => write_elem(out, y),
        None => write_out(out, ptr::null_mut()),
    })())
}

/// Runs a named verification suite with its default sizes. The report is
/// written as text, or JSON when `json` is true.
///
/// # Safety
/// `name` must be a valid C string and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn pireg_verify_suite(
    name: *const c_char,
    seed: u64,
    json: bool,
    verdict_out: *mut PiregVerdict,
    report: *mut *mut c_char,
) -> PiregStatus {
    status((|| {
        let cfg = suites::SuiteConfig {
            seed,
            ..Default::default()
        };
        let r = suites::run_suite(read_str(name)?, &cfg).map_err(from_error)?;
        write_out(verdict_out, verdict(&r))?;
        write_string(report, if json { r.to_json() } else { r.to_text() })
    })())
}

/// Builds the finite ring described by `spec` (e.g. `"M2(F2)"`) and runs
/// the exhaustive equivalence checks on it.
///
/// # Safety
/// `spec` must be a valid C string and the output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn pireg_finring_check(
    spec: *const c_char,
    order: *mut usize,
    verdict_out: *mut PiregVerdict,
    report: *mut *mut c_char,
) -> PiregStatus {
    status((|| {
        let spec: RingSpec = read_str(spec)?.parse().map_err(from_error)?;
        let ring = FiniteRing::build(&spec).map_err(from_error)?;
        let r = finring::verify_equivalences(&ring).map_err(from_error)?;
        write_out(order, ring.order())?;
        write_out(verdict_out, verdict(&r))?;
        write_string(report, r.to_text())
    })())
}
