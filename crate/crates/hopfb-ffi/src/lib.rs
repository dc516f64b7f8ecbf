//! C ABI for the hopfb library.
//!
//! Algebras are opaque handles created from their registry name; elements
//! cross the boundary as text in each algebra's grammar, results come back
//! as newly allocated strings released with [`hopfb_string_free`]. Every
//! fallible call returns a status code and writes its result through an out
//! pointer.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use hopfb::registry::{self, AlgebraId};

/// Status codes returned by the fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfbStatus {
    /// Success.
    Ok = 0,
    /// The verification report contains violations.
    VerifyViolations = 1,
    /// An element string did not parse in the algebra's grammar.
    ParseError = 2,
    /// An argument was out of range or otherwise unusable.
    InvalidArgument = 3,
    /// A required pointer was null.
    NullPointer = 4,
    /// An internal panic was caught; the out parameters are untouched.
    InternalError = 5,
}

/// Opaque handle to a registered algebra.
pub struct HopfbAlgebra {
    id: AlgebraId,
}

fn guard<F: FnOnce() -> HopfbStatus + UnwindSafe>(body: F) -> HopfbStatus {
    catch_unwind(body).unwrap_or(HopfbStatus::InternalError)
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn write_string(out: *mut *mut c_char, value: String) -> HopfbStatus {
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            HopfbStatus::Ok
        }
        Err(_) => HopfbStatus::InternalError,
    }
}

/// Look up an algebra by its registry name (`dqsym`, `qsym`, `word3`,
/// `lorder`, `lorder-dual`, `eh`). Returns null for unknown names. Release
/// with [`hopfb_algebra_free`].
///
/// # Safety
/// `name` must be null or a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hopfb_algebra_new(name: *const c_char) -> *mut HopfbAlgebra {
    let Some(name) = read_str(name) else {
        return ptr::null_mut();
    };
    match name.parse::<AlgebraId>() {
        Ok(id) => Box::into_raw(Box::new(HopfbAlgebra { id })),
        Err(_) => ptr::null_mut(),
    }
}

/// Release a handle returned by [`hopfb_algebra_new`]. Null is ignored.
///
/// # Safety
/// `alg` must be null or an unreleased handle from [`hopfb_algebra_new`].
#[no_mangle]
pub unsafe extern "C" fn hopfb_algebra_free(alg: *mut HopfbAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// The registry name of the algebra behind a handle; free the result with
/// [`hopfb_string_free`]. Returns null on a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hopfb_algebra_name(alg: *const HopfbAlgebra) -> *mut c_char {
    if alg.is_null() {
        return ptr::null_mut();
    }
    let name = (*alg).id.name();
    CString::new(name).map_or(ptr::null_mut(), CString::into_raw)
}

/// Release a string allocated by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hopfb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Multiply two basis labels given in the algebra's grammar; the rendered
/// combination is written to `out`.
///
/// # Safety
/// `alg` must be a live handle; `x`, `y` valid NUL-terminated strings;
/// `out` a valid location for one pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfb_mul(
    alg: *const HopfbAlgebra,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    let id = (*alg).id;
    let (Some(x), Some(y)) = (read_str(x), read_str(y)) else {
        return HopfbStatus::NullPointer;
    };
    guard(move || match registry::mul_terms(id, x, y) {
        Ok(terms) => write_string(out, registry::render_terms_text(&terms)),
        Err(_) => HopfbStatus::ParseError,
    })
}

/// Coproduct of a basis label; tensor terms are rendered with ` (x) `.
///
/// # Safety
/// As for [`hopfb_mul`].
#[no_mangle]
pub unsafe extern "C" fn hopfb_comul(
    alg: *const HopfbAlgebra,
    x: *const c_char,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    let id = (*alg).id;
    let Some(x) = read_str(x) else {
        return HopfbStatus::NullPointer;
    };
    guard(move || match registry::comul_terms(id, x) {
        Ok(terms) => write_string(out, registry::render_tensor_terms_text(&terms)),
        Err(_) => HopfbStatus::ParseError,
    })
}

/// Antipode of a basis label.
///
/// # Safety
/// As for [`hopfb_mul`].
#[no_mangle]
pub unsafe extern "C" fn hopfb_antipode(
    alg: *const HopfbAlgebra,
    x: *const c_char,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    let id = (*alg).id;
    let Some(x) = read_str(x) else {
        return HopfbStatus::NullPointer;
    };
    guard(move || match registry::antipode_terms(id, x) {
        Ok(terms) => write_string(out, registry::render_terms_text(&terms)),
        Err(_) => HopfbStatus::ParseError,
    })
}

/// Apply the sign-forgetting morphism to a `dqsym` label; the result is a
/// `qsym` combination.
///
/// # Safety
/// `x` must be a valid NUL-terminated string, `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn hopfb_map_qsym(
    x: *const c_char,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if out.is_null() {
        return HopfbStatus::NullPointer;
    }
    let Some(x) = read_str(x) else {
        return HopfbStatus::NullPointer;
    };
    guard(move || match registry::map_qsym_terms(x) {
        Ok(terms) => write_string(out, registry::render_terms_text(&terms)),
        Err(_) => HopfbStatus::ParseError,
    })
}

/// Dimension of the degree-`n` graded piece.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid location for one `u64`.
#[no_mangle]
pub unsafe extern "C" fn hopfb_graded_dimension(
    alg: *const HopfbAlgebra,
    degree: u32,
    out: *mut u64,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    if degree > 12 {
        return HopfbStatus::InvalidArgument;
    }
    let id = (*alg).id;
    guard(move || {
        let dims = registry::dims(id, degree as usize);
        unsafe { *out = dims[degree as usize] as u64 };
        HopfbStatus::Ok
    })
}

/// The degree-`n` basis labels as a JSON array of strings.
///
/// # Safety
/// As for [`hopfb_graded_dimension`], with `out` receiving a string.
#[no_mangle]
pub unsafe extern "C" fn hopfb_enumerate(
    alg: *const HopfbAlgebra,
    degree: u32,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    if degree > 12 {
        return HopfbStatus::InvalidArgument;
    }
    let id = (*alg).id;
    guard(move || {
        let labels: Vec<String> = registry::enumerate_terms(id, degree as usize)
            .into_iter()
            .map(|(text, _)| text)
            .collect();
        write_string(out, serde_json::json!(labels).to_string())
    })
}

/// Run the exhaustive axiom verification up to `max_degree` and write the
/// JSON report. Returns `Ok` when every check passes, `VerifyViolations`
/// otherwise; the report is written in both cases.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid location for one pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfb_verify(
    alg: *const HopfbAlgebra,
    max_degree: u32,
    out: *mut *mut c_char,
) -> HopfbStatus {
    if alg.is_null() || out.is_null() {
        return HopfbStatus::NullPointer;
    }
    if max_degree > 6 {
        return HopfbStatus::InvalidArgument;
    }
    let id = (*alg).id;
    guard(move || {
        let report = registry::run_verify(id, max_degree as usize);
        let passed = report.passed();
        let json = match serde_json::to_string(&report) {
            Ok(json) => json,
            Err(_) => return HopfbStatus::InternalError,
        };
        let status = write_string(out, json);
        if status != HopfbStatus::Ok {
            return status;
        }
        if passed {
            HopfbStatus::Ok
        } else {
            HopfbStatus::VerifyViolations
        }
    })
}
