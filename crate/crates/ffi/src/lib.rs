//! C ABI over the `racg` library.
//!
//! Complexes cross the boundary as opaque [`RacgComplex`] handles. Every
//! fallible call returns a [`RacgStatus`]; on failure a message is kept in
//! thread-local storage and can be read with [`racg_last_error`]. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! must be released with [`racg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use racg::simplicial::FlagComplex;
use racg::Error;

/// Opaque handle to a flag complex.
pub struct RacgComplex {
    inner: FlagComplex,
}

/// Result codes. Values are stable.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RacgStatus {
    Ok = 0,
    /// Null pointer, malformed UTF-8, malformed JSON, unknown name.
    InvalidArgument = 1,
    /// Well-formed input outside the domain of the operation.
    Precondition = 2,
    /// An internal consistency check contradicted a proven statement.
    LemmaViolation = 3,
    ResourceLimit = 4,
    /// A certificate failed validation.
    InvalidCertificate = 5,
    Internal = 6,
}

/// Counts reported by [`racg_verify_cert`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct RacgVerifySummary {
    pub nodes: usize,
    pub suspension_leaves: usize,
    pub andreev_leaves: usize,
    pub max_depth: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RacgStatus {
    match e {
        Error::Parse(_) | Error::UnknownVertex(_) | Error::NotASimplex(_) | Error::Json(_) => {
            RacgStatus::InvalidArgument
        }
        Error::NotFlag(_)
        | Error::NotSphere(_)
        | Error::NonPure(_)
        | Error::DimensionMismatch { .. }
        | Error::Precondition(_)
        | Error::NotConvex(_) => RacgStatus::Precondition,
        Error::ResourceLimit(_) => RacgStatus::ResourceLimit,
        Error::LemmaViolation(_) => RacgStatus::LemmaViolation,
        Error::InvalidCertificate(_) => RacgStatus::InvalidCertificate,
        Error::Io(_) => RacgStatus::Internal,
    }
}

struct Fail(RacgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn invalid(msg: &str) -> Fail {
    Fail(RacgStatus::InvalidArgument, msg.to_string())
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RacgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            RacgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RacgStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

unsafe fn complex_arg<'a>(p: *const RacgComplex) -> Result<&'a FlagComplex, Fail> {
    p.as_ref().map(|c| &c.inner).ok_or_else(|| invalid("complex handle is null"))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| invalid("output pointer is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let out = out_arg(out)?;
    *out = CString::new(s).map_err(|_| Fail(RacgStatus::Internal, "string contains NUL".into()))?.into_raw();
    Ok(())
}

fn boxed(l: FlagComplex) -> *mut RacgComplex {
    Box::into_raw(Box::new(RacgComplex { inner: l }))
}

/// Message describing the most recent failure on this thread, or an empty
/// string. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn racg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn racg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a complex from JSON (`flag-graph` or flag `simplicial` format).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_from_json(json: *const c_char, out: *mut *mut RacgComplex) -> RacgStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let out = out_arg(out)?;
        let l = racg::io::parse_complex(text)?.into_flag(false)?;
        *out = boxed(l);
        Ok(())
    })
}

/// Looks up a built-in example such as `"pentagon"` or `"gon-7"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_from_corpus(name: *const c_char, out: *mut *mut RacgComplex) -> RacgStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let out = out_arg(out)?;
        *out = boxed(racg::corpus::get(name)?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `c` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_free(c: *mut RacgComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn racg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_vertex_count(c: *const RacgComplex, out: *mut usize) -> RacgStatus {
    guard(|| {
        *out_arg(out)? = complex_arg(c)?.vertex_count();
        Ok(())
    })
}

/// Writes `f_{-1}, f_0, …` into `buf`. `*len` receives the full length;
/// if it exceeds `cap` nothing is written and `InvalidArgument` is
/// returned, so callers can query the size with `cap = 0`.
///
/// # Safety
/// `buf` must have room for `cap` values (may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn racg_complex_f_vector(
    c: *const RacgComplex,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> RacgStatus {
    guard(|| {
        let f = complex_arg(c)?.f_vector();
        let values = f.as_slice();
        *out_arg(len)? = values.len();
        if values.len() > cap {
            return Err(invalid("buffer too small"));
        }
        if buf.is_null() {
            return Err(invalid("buffer is null"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
        Ok(())
    })
}

/// κ(L) as an exact rational string such as `"-1/4"`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_kappa(c: *const RacgComplex, out: *mut *mut c_char) -> RacgStatus {
    guard(|| {
        let k = complex_arg(c)?.kappa();
        write_string(out, racg::rational::render(&k))
    })
}

/// Serialises the complex in `flag-graph` JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_complex_to_json(c: *const RacgComplex, out: *mut *mut c_char) -> RacgStatus {
    guard(|| write_string(out, racg::io::flag_to_json(complex_arg(c)?).to_string()))
}

/// Euler characteristic of the commutator cover P_L.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_commutator_cover_euler(c: *const RacgComplex, out: *mut i64) -> RacgStatus {
    guard(|| {
        let cover = racg::davis::commutator_cover(complex_arg(c)?)?;
        *out_arg(out)? = cover.euler_characteristic();
        Ok(())
    })
}

/// Evaluates an ℓ²-Betti expression such as `"(join (points 3) (points 3))"`
/// and returns the result as JSON.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_l2_betti_expr(expr: *const c_char, out: *mut *mut c_char) -> RacgStatus {
    guard(|| {
        let r = racg::l2::evaluate_text(str_arg(expr, "expr")?)?;
        write_string(out, serde_json::to_string(&r).map_err(Error::from)?)
    })
}

/// Certifies a flag 2-sphere and returns the certificate as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn racg_certify_s2(c: *const RacgComplex, out: *mut *mut c_char) -> RacgStatus {
    guard(|| {
        let cert = racg::sphere2::certify(complex_arg(c)?)?;
        write_string(out, cert.to_json().to_string())
    })
}

/// Validates a certificate produced by [`racg_certify_s2`].
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` may be null.
#[no_mangle]
pub unsafe extern "C" fn racg_verify_cert(json: *const c_char, out: *mut RacgVerifySummary) -> RacgStatus {
    guard(|| {
        let cert = racg::sphere2::Certificate::from_json(str_arg(json, "json")?)?;
        let s = racg::sphere2::verify(&cert)?;
        if let Some(out) = out.as_mut() {
            *out = RacgVerifySummary {
                nodes: s.nodes,
                suspension_leaves: s.suspension_leaves,
                andreev_leaves: s.andreev_leaves,
                max_depth: s.max_depth,
            };
        }
        Ok(())
    })
}
