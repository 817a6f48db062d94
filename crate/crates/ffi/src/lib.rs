//! C ABI for qsu2.
//!
//! Handles (`Qsu2Ring`, `Qsu2Link`) are opaque and owned by the caller, who
//! releases them with the matching `_free` function. Every fallible call
//! returns a `Qsu2Status`; on failure `qsu2_last_error` gives a message for the
//! calling thread. Strings returned through out-parameters are released with
//! `qsu2_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use qsu2::bracket::{BracketEngine, BracketError};
use qsu2::cyclotomic::{init_ring, CycloError, Ring};
use qsu2::invariant::{tau, InvariantError, Route};
use qsu2::link::catalog::lookup;
use qsu2::link::{parse_document, validate_presentation, CohomClass, FramedLink, LinkError, PdCode};

/// Result codes; the nonzero values match the command-line exit codes where
/// they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qsu2Status {
    Ok = 0,
    /// Internal error or a false verdict.
    Failed = 1,
    InvalidInput = 2,
    ResourceLimit = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Route for Σ(L).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qsu2Route {
    Lemma = 0,
    Km = 1,
    Both = 2,
}

/// Opaque cyclotomic field handle.
pub struct Qsu2Ring {
    ring: Ring,
}

/// Opaque framed link handle.
pub struct Qsu2Link {
    link: FramedLink,
}

/// Field parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct Qsu2RingInfo {
    pub p: u32,
    pub u: u32,
    pub epsilon: i32,
    pub eight_bar: u32,
    pub degree: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(Qsu2Status, String);

impl From<LinkError> for Failure {
    fn from(e: LinkError) -> Failure {
        Failure(Qsu2Status::InvalidInput, e.to_string())
    }
}

impl From<CycloError> for Failure {
    fn from(e: CycloError) -> Failure {
        let code = if matches!(e, CycloError::BadPrime(_)) { Qsu2Status::InvalidInput } else { Qsu2Status::Failed };
        Failure(code, e.to_string())
    }
}

impl From<BracketError> for Failure {
    fn from(e: BracketError) -> Failure {
        match e {
            BracketError::WidthLimit { .. } | BracketError::TooManyCrossings(_) => {
                Failure(Qsu2Status::ResourceLimit, e.to_string())
            }
            BracketError::Link(l) => l.into(),
            BracketError::Cyclo(c) => c.into(),
            _ => Failure(Qsu2Status::Failed, e.to_string()),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Failure {
        match e {
            InvariantError::Bracket(b) => b.into(),
            InvariantError::Link(l) => l.into(),
            InvariantError::Cyclo(c) => c.into(),
            InvariantError::ZeroFraming(_) | InvariantError::RingMismatch { .. } => {
                Failure(Qsu2Status::InvalidInput, e.to_string())
            }
            _ => Failure(Qsu2Status::Failed, e.to_string()),
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Qsu2Status {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Qsu2Status::Ok,
        Ok(Err(Failure(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("panic inside qsu2".into());
            Qsu2Status::Panic
        }
    }
}

fn null() -> Failure {
    Failure(Qsu2Status::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(Qsu2Status::InvalidInput, "string is not UTF-8".into()))
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qsu2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. The caller frees
/// it with `qsu2_string_free`.
#[no_mangle]
pub extern "C" fn qsu2_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qsu2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the cyclotomic field for the odd prime `p`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qsu2_ring_new(p: u32, out: *mut *mut Qsu2Ring) -> Qsu2Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let ring = init_ring(p)?;
        put(out, Box::into_raw(Box::new(Qsu2Ring { ring })))
    })
}

/// Releases a ring handle. NULL is ignored.
///
/// # Safety
/// `ring` must come from `qsu2_ring_new` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qsu2_ring_free(ring: *mut Qsu2Ring) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Fills `out` with the field parameters.
///
/// # Safety
/// `ring` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qsu2_ring_info(ring: *const Qsu2Ring, out: *mut Qsu2RingInfo) -> Qsu2Status {
    guard(|| {
        let r = &ring.as_ref().ok_or_else(null)?.ring;
        put(out, Qsu2RingInfo { p: r.p(), u: r.u(), epsilon: r.epsilon(), eight_bar: r.eight_bar(), degree: r.degree() })
    })
}

/// Parses a JSON link document (fields `pd`, `free_loops`, `components`,
/// `framings`, `p`). Missing framings default to zero.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qsu2_link_from_json(json: *const c_char, out: *mut *mut Qsu2Link) -> Qsu2Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let doc = parse_document(text(json)?)?;
        let diagram = PdCode::from_document(&doc)?;
        let framings = doc.framings.clone().unwrap_or_else(|| vec![0; diagram.num_components()]);
        let link = FramedLink::new(diagram, framings)?;
        put(out, Box::into_raw(Box::new(Qsu2Link { link })))
    })
}

/// Looks up a catalog link. With `framings_len == 0` the catalog framings are
/// used, otherwise `framings` supplies one framing per component.
///
/// # Safety
/// `name` must be a NUL-terminated string, `framings` must point to
/// `framings_len` values, and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qsu2_link_from_catalog(
    name: *const c_char,
    framings: *const i64,
    framings_len: usize,
    out: *mut *mut Qsu2Link,
) -> Qsu2Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let name = text(name)?;
        let entry =
            lookup(name).ok_or_else(|| Failure(Qsu2Status::InvalidInput, format!("unknown catalog link `{name}`")))?;
        let f = slice(framings, framings_len)?;
        let link = if f.is_empty() { entry.framed() } else { entry.with_framings(f)? };
        put(out, Box::into_raw(Box::new(Qsu2Link { link })))
    })
}

/// Releases a link handle. NULL is ignored.
///
/// # Safety
/// `link` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qsu2_link_free(link: *mut Qsu2Link) {
    if !link.is_null() {
        drop(Box::from_raw(link));
    }
}

/// Number of components, or 0 for NULL.
///
/// # Safety
/// `link` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn qsu2_link_num_components(link: *const Qsu2Link) -> usize {
    link.as_ref().map_or(0, |l| l.link.num_components())
}

fn engine(width_limit: usize, cache_dir: Option<PathBuf>) -> BracketEngine {
    BracketEngine::new(width_limit, cache_dir)
}

unsafe fn cache_dir(dir: *const c_char) -> Result<Option<PathBuf>, Failure> {
    if dir.is_null() {
        Ok(None)
    } else {
        Ok(Some(PathBuf::from(text(dir)?)))
    }
}

/// Kauffman bracket of the link diagram, normalized so the trivial knot gives
/// 1, rendered as text such as "-A^4 - A^-4". `cache_dir` may be NULL.
///
/// # Safety
/// `link` and `out` must be valid pointers; `cache_dir` NULL or a
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qsu2_bracket(
    link: *const Qsu2Link,
    width_limit: usize,
    cache_dir_path: *const c_char,
    out: *mut *mut c_char,
) -> Qsu2Status {
    guard(|| {
        let l = &link.as_ref().ok_or_else(null)?.link;
        if out.is_null() {
            return Err(null());
        }
        let poly = engine(width_limit, cache_dir(cache_dir_path)?).kauffman_bracket(l.diagram())?;
        put(out, owned_string(poly.to_string()))
    })
}

/// τ₂ₚ(M, θ) for the presentation `link` at the ring's p. `theta` lists
/// 0-based component indices. On success `out_json` receives the report as
/// JSON and `out_verdict` the exact membership verdict; a false verdict still
/// returns `QSU2_STATUS_OK`.
///
/// # Safety
/// `ring`, `link`, `out_json` and `out_verdict` must be valid pointers;
/// `theta` must point to `theta_len` values; `cache_dir` NULL or a
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn qsu2_tau(
    ring: *const Qsu2Ring,
    link: *const Qsu2Link,
    theta: *const usize,
    theta_len: usize,
    route: Qsu2Route,
    width_limit: usize,
    cache_dir_path: *const c_char,
    out_json: *mut *mut c_char,
    out_verdict: *mut bool,
) -> Qsu2Status {
    guard(|| {
        let r = &ring.as_ref().ok_or_else(null)?.ring;
        let l = &link.as_ref().ok_or_else(null)?.link;
        if out_json.is_null() || out_verdict.is_null() {
            return Err(null());
        }
        let members = slice(theta, theta_len)?;
        let pres = validate_presentation(l, r.p())?;
        let class = CohomClass::new(pres.framings(), members)?;
        let route = match route {
            Qsu2Route::Lemma => Route::Lemma,
            Qsu2Route::Km => Route::Km,
            Qsu2Route::Both => Route::Both,
        };
        let report = tau(&pres, &class, r, route, &engine(width_limit, cache_dir(cache_dir_path)?))?;
        put(out_verdict, report.verdict)?;
        put(out_json, owned_string(report.to_json().to_string()))
    })
}
