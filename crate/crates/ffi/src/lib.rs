//! C ABI over the `yhecke` engine.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Every fallible call returns a [`YhStatus`];
//! on failure a message is available from [`yh_last_error`] on the same
//! thread until the next failing call. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use yhecke::braid::BraidWord;
use yhecke::invariants::{Family, InvariantEngine, InvariantValue};
use yhecke::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    IncompatibleKind = 5,
    ContextMismatch = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YhFamily {
    Framed = 0,
    Classical = 1,
    Singular = 2,
}

impl From<YhFamily> for Family {
    fn from(f: YhFamily) -> Family {
        match f {
            YhFamily::Framed => Family::Framed,
            YhFamily::Classical => Family::Classical,
            YhFamily::Singular => Family::Singular,
        }
    }
}

/// A parsed braid word.
pub struct YhBraid(BraidWord);

/// An invariant value together with its regime.
pub struct YhValue(InvariantValue);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).expect("no interior NUL"));
}

fn status_of(e: &Error) -> YhStatus {
    match e {
        Error::Parse { .. } => YhStatus::Parse,
        Error::IncompatibleKind(_) => YhStatus::IncompatibleKind,
        Error::ContextMismatch(_) => YhStatus::ContextMismatch,
        _ => YhStatus::InvalidArgument,
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (YhStatus, String)>) -> YhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => YhStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            YhStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (YhStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (YhStatus, String) {
    (YhStatus::NullPointer, "null pointer argument".into())
}

/// Borrow a handle; `None` for null.
///
/// # Safety
/// `p` must be null or a live handle from this library.
unsafe fn borrow<'a, T>(p: *const T) -> Option<&'a T> {
    p.as_ref()
}

fn emit<T>(out: *mut *mut T, v: T) -> Result<(), (YhStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = Box::into_raw(Box::new(v)) };
    Ok(())
}

/// Message for the last failure on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn yh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse a braid word (`s1 -s2 t1^3 x1`, optional leading `n=<k>`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn yh_braid_parse(text: *const c_char, out: *mut *mut YhBraid) -> YhStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| (YhStatus::InvalidUtf8, e.to_string()))?;
        let b = BraidWord::parse(s).map_err(lib_err)?;
        emit(out, YhBraid(b))
    })
}

/// Number of strands of a braid.
///
/// # Safety
/// `b` must be a live braid handle; `out` a writable `size_t`.
#[no_mangle]
pub unsafe extern "C" fn yh_braid_strands(b: *const YhBraid, out: *mut usize) -> YhStatus {
    guard(|| {
        let b = borrow(b).ok_or_else(null)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = b.0.strands();
        Ok(())
    })
}

/// # Safety
/// `b` must be null or a braid handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yh_braid_free(b: *mut YhBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Invariant of the given family with formal `z`, for the E-system
/// solution indexed by the residues `subset[0..subset_len]` mod `d`.
///
/// # Safety
/// `b` must be a live braid handle, `subset` valid for `subset_len` reads,
/// `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn yh_invariant(
    b: *const YhBraid,
    family: YhFamily,
    d: u32,
    subset: *const u32,
    subset_len: usize,
    out: *mut *mut YhValue,
) -> YhStatus {
    guard(|| {
        let b = borrow(b).ok_or_else(null)?;
        if subset.is_null() && subset_len > 0 {
            return Err(null());
        }
        let set = if subset_len == 0 { &[][..] } else { std::slice::from_raw_parts(subset, subset_len) };
        let v = InvariantEngine::new().formal(family.into(), &b.0, d, set).map_err(lib_err)?;
        emit(out, YhValue(v))
    })
}

/// Two-variable polynomial in `(u, z)` of a classical braid.
///
/// # Safety
/// `b` must be a live braid handle; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn yh_homflypt(b: *const YhBraid, out: *mut *mut YhValue) -> YhStatus {
    guard(|| {
        let b = borrow(b).ok_or_else(null)?;
        emit(out, YhValue(InvariantEngine::new().homflypt(&b.0).map_err(lib_err)?))
    })
}

/// One-variable specialization in `u` of a classical braid.
///
/// # Safety
/// `b` must be a live braid handle; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn yh_jones(b: *const YhBraid, out: *mut *mut YhValue) -> YhStatus {
    guard(|| {
        let b = borrow(b).ok_or_else(null)?;
        emit(out, YhValue(InvariantEngine::new().jones(&b.0).map_err(lib_err)?))
    })
}

/// Render a value as text into `buf` (capacity `cap`, NUL included).
/// `needed`, if non-null, receives the required capacity; when `cap` is too
/// small nothing is written and `BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `v` must be a live value handle; `buf` valid for `cap` writes or null
/// with `cap == 0`.
#[no_mangle]
pub unsafe extern "C" fn yh_value_render(v: *const YhValue, buf: *mut c_char, cap: usize, needed: *mut usize) -> YhStatus {
    guard(|| {
        let v = borrow(v).ok_or_else(null)?;
        let text = v.0.to_string();
        let len = text.len() + 1;
        if let Some(n) = needed.as_mut() {
            *n = len;
        }
        if cap < len || buf.is_null() {
            return Err((YhStatus::BufferTooSmall, format!("need {len} bytes")));
        }
        std::ptr::copy_nonoverlapping(text.as_ptr(), buf as *mut u8, text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// Exact equality. Values from different regimes give `CONTEXT_MISMATCH`.
///
/// # Safety
/// `a`, `b` must be live value handles; `out` a writable `bool`.
#[no_mangle]
pub unsafe extern "C" fn yh_value_equal(a: *const YhValue, b: *const YhValue, out: *mut bool) -> YhStatus {
    guard(|| {
        let (a, b) = (borrow(a).ok_or_else(null)?, borrow(b).ok_or_else(null)?);
        let out = out.as_mut().ok_or_else(null)?;
        *out = a.0.same_as(&b.0).map_err(lib_err)?;
        Ok(())
    })
}

/// # Safety
/// `v` must be null or a value handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yh_value_free(v: *mut YhValue) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}
