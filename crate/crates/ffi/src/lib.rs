//! C interface: opaque handles for quaternion matrices and verification
//! reports, integer status codes, and a per-thread last-error message.
//!
//! Strings returned through `char **` out-parameters are owned by the caller
//! and released with [`ncg_string_free`]. Indices are 1-based, as in the
//! Rust API.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ncgrass::check::trial_rng;
use ncgrass::grassmann::qdet;
use ncgrass::harness::{render, resolve, FileConfig, Format, Overrides, VerificationReport};
use ncgrass::quantum::AlgebraContext;
use ncgrass::quasi_plucker::verify_qp_relation;
use ncgrass::quasidet::{quasidet, DivMatrix, Method, QuasidetError};
use ncgrass::scalars::{Quaternion, Rational, Scalar};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The requested quasideterminant (or coordinate) does not exist.
    Undefined = 3,
    Singular = 4,
    Config = 5,
    Internal = 6,
}

/// Quasideterminant evaluation route.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcgMethod {
    Recursive = 0,
    Border = 1,
}

/// Dense matrix of rational quaternions.
pub struct NcgQuatMatrix(DivMatrix<Quaternion>);

/// Finished verification run.
pub struct NcgReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: NcgStatus, msg: impl Into<String>) -> NcgStatus {
    set_error(msg);
    status
}

/// Runs `f`, clearing the last error first and turning panics into
/// `Internal`.
fn guard(f: impl FnOnce() -> NcgStatus) -> NcgStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p.downcast_ref::<&str>().map(|s| s.to_string()).or_else(|| p.downcast_ref::<String>().cloned());
            fail(NcgStatus::Internal, msg.unwrap_or_else(|| "panic".into()))
        }
    }
}

fn quasidet_status(e: &QuasidetError) -> NcgStatus {
    match e {
        QuasidetError::Undefined { .. } => NcgStatus::Undefined,
        QuasidetError::Singular { .. } | QuasidetError::SingularMinor { .. } => NcgStatus::Singular,
        QuasidetError::IndexOutOfRange { .. } | QuasidetError::ShapeMismatch(_) => NcgStatus::InvalidArgument,
    }
}

fn give_string(s: String, out: *mut *mut c_char) -> NcgStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before calling.
            unsafe { *out = c.into_raw() };
            NcgStatus::Ok
        }
        Err(_) => fail(NcgStatus::Internal, "string contains a NUL byte"),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ncg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the last error message on this thread, or NULL when the last
/// call succeeded. Free with `ncg_string_free`.
#[no_mangle]
pub extern "C" fn ncg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string produced by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ncg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// New `rows × cols` zero matrix.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_quat_matrix_new(rows: usize, cols: usize, out: *mut *mut NcgQuatMatrix) -> NcgStatus {
    guard(|| {
        if out.is_null() {
            return fail(NcgStatus::NullPointer, "out is NULL");
        }
        if rows == 0 || cols == 0 {
            return fail(NcgStatus::InvalidArgument, "matrix dimensions must be positive");
        }
        *out = Box::into_raw(Box::new(NcgQuatMatrix(DivMatrix::zeros(rows, cols))));
        NcgStatus::Ok
    })
}

/// Matrix with integer quaternion entries in `-9..=9`, reproducible from
/// `seed`.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_quat_matrix_random(rows: usize, cols: usize, seed: u64, out: *mut *mut NcgQuatMatrix) -> NcgStatus {
    guard(|| {
        if out.is_null() {
            return fail(NcgStatus::NullPointer, "out is NULL");
        }
        if rows == 0 || cols == 0 {
            return fail(NcgStatus::InvalidArgument, "matrix dimensions must be positive");
        }
        let mut rng = trial_rng(seed, "ffi", &[rows as u64, cols as u64], 0);
        *out = Box::into_raw(Box::new(NcgQuatMatrix(DivMatrix::random_quaternion(rows, cols, &mut rng))));
        NcgStatus::Ok
    })
}

/// # Safety
/// `m` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ncg_quat_matrix_free(m: *mut NcgQuatMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Sets entry `(i, j)` to `(num[0] + num[1] i + num[2] j + num[3] k) / den`.
///
/// # Safety
/// `m` must be a live handle and `num` must point to four integers.
#[no_mangle]
pub unsafe extern "C" fn ncg_quat_matrix_set(m: *mut NcgQuatMatrix, i: usize, j: usize, num: *const i64, den: i64) -> NcgStatus {
    guard(|| {
        if m.is_null() || num.is_null() {
            return fail(NcgStatus::NullPointer, "matrix or numerators are NULL");
        }
        let m = &mut (*m).0;
        if i == 0 || j == 0 || i > m.rows() || j > m.cols() {
            return fail(NcgStatus::InvalidArgument, format!("({i},{j}) outside {}x{}", m.rows(), m.cols()));
        }
        if den == 0 {
            return fail(NcgStatus::InvalidArgument, "zero denominator");
        }
        let n = std::slice::from_raw_parts(num, 4);
        let c = |k: usize| Rational::new(n[k], den);
        m.set(i, j, Quaternion::new(c(0), c(1), c(2), c(3)));
        NcgStatus::Ok
    })
}

/// Entry `(i, j)` rendered as `(a + bi + cj + dk)` with exact rationals.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_quat_matrix_get(m: *const NcgQuatMatrix, i: usize, j: usize, out: *mut *mut c_char) -> NcgStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(NcgStatus::NullPointer, "matrix or out is NULL");
        }
        let m = &(*m).0;
        if i == 0 || j == 0 || i > m.rows() || j > m.cols() {
            return fail(NcgStatus::InvalidArgument, format!("({i},{j}) outside {}x{}", m.rows(), m.cols()));
        }
        give_string(m.get(i, j).to_string(), out)
    })
}

/// Quasideterminant `|A|_{ij}` of a square matrix, rendered like
/// `ncg_quat_matrix_get`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_quasidet(m: *const NcgQuatMatrix, i: usize, j: usize, method: NcgMethod, out: *mut *mut c_char) -> NcgStatus {
    guard(|| {
        if m.is_null() || out.is_null() {
            return fail(NcgStatus::NullPointer, "matrix or out is NULL");
        }
        let method = match method {
            NcgMethod::Recursive => Method::Recursive,
            NcgMethod::Border => Method::Border,
        };
        match quasidet(&(*m).0, i, j, method) {
            Ok(v) => give_string(v.to_string(), out),
            Err(e) => fail(quasidet_status(&e), e.to_string()),
        }
    })
}

/// Evaluates `Σ_{j∈L} r_{ij}^{L∖j} r_{ji}^M` on an `n × d` matrix, with
/// `|L| = d` and `|M| = d - 1`, and stores whether it equals 1.
///
/// # Safety
/// `m` must be a live handle, `l` and `mset` must point to `l_len` and
/// `m_len` indices, and `is_one` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncg_qp_relation(
    m: *const NcgQuatMatrix,
    i: usize,
    l: *const usize,
    l_len: usize,
    mset: *const usize,
    m_len: usize,
    is_one: *mut bool,
) -> NcgStatus {
    guard(|| {
        if m.is_null() || is_one.is_null() || (l.is_null() && l_len > 0) || (mset.is_null() && m_len > 0) {
            return fail(NcgStatus::NullPointer, "NULL argument");
        }
        let slice = |p: *const usize, n: usize| if n == 0 { Vec::new() } else { std::slice::from_raw_parts(p, n).to_vec() };
        match verify_qp_relation(&(*m).0, i, &slice(l, l_len), &slice(mset, m_len)) {
            Ok(v) => {
                *is_one = v.is_one();
                NcgStatus::Ok
            }
            Err(e) => fail(quasidet_status(&e), e.to_string()),
        }
    })
}

/// Quantum minor over `rows` and `cols` of an `n × n` generic matrix, in
/// normal form.
///
/// # Safety
/// `rows` and `cols` must point to `len` indices; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncg_qdet(n: usize, rows: *const usize, cols: *const usize, len: usize, out: *mut *mut c_char) -> NcgStatus {
    guard(|| {
        if out.is_null() || (len > 0 && (rows.is_null() || cols.is_null())) {
            return fail(NcgStatus::NullPointer, "NULL argument");
        }
        if n == 0 || n > 4 {
            return fail(NcgStatus::InvalidArgument, "n must lie in 1..=4");
        }
        let (r, c) = if len == 0 {
            (Vec::new(), Vec::new())
        } else {
            (std::slice::from_raw_parts(rows, len).to_vec(), std::slice::from_raw_parts(cols, len).to_vec())
        };
        match qdet(&AlgebraContext::new(n, n), &r, &c) {
            Ok(p) => give_string(p.to_string(), out),
            Err(e) => fail(NcgStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Runs the verification suites. `config_toml` uses the same keys as the
/// command-line config file and may be NULL for defaults.
///
/// # Safety
/// `config_toml` must be NULL or a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ncg_run(config_toml: *const c_char, out: *mut *mut NcgReport) -> NcgStatus {
    guard(|| {
        if out.is_null() {
            return fail(NcgStatus::NullPointer, "out is NULL");
        }
        let text = if config_toml.is_null() {
            ""
        } else {
            match CStr::from_ptr(config_toml).to_str() {
                Ok(s) => s,
                Err(_) => return fail(NcgStatus::InvalidArgument, "config is not UTF-8"),
            }
        };
        let config = match FileConfig::parse(text).and_then(|f| resolve(Overrides::default(), f, None)) {
            Ok(c) => c,
            Err(e) => return fail(NcgStatus::Config, e.to_string()),
        };
        *out = Box::into_raw(Box::new(NcgReport(ncgrass::harness::run(&config))));
        NcgStatus::Ok
    })
}

/// Number of failed checks.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncg_report_failures(r: *const NcgReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.summary.fail)
}

/// Number of checks of any status.
///
/// # Safety
/// `r` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncg_report_total(r: *const NcgReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.summary.total)
}

/// The report as JSON (the same bytes the command line prints).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncg_report_json(r: *const NcgReport, out: *mut *mut c_char) -> NcgStatus {
    guard(|| {
        if r.is_null() || out.is_null() {
            return fail(NcgStatus::NullPointer, "report or out is NULL");
        }
        give_string(render(&(*r).0, Format::Json), out)
    })
}

/// # Safety
/// `r` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ncg_report_free(r: *mut NcgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
