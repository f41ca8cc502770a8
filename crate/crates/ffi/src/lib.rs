//! C interface to the engine.
//!
//! Every function returns an [`LcStatus`] and writes results through out
//! pointers. Algebras are opaque [`LcAlgebra`] handles released with
//! [`lc_algebra_free`]; strings returned by the library are released with
//! [`lc_string_free`]. After a failure, [`lc_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liecohom::cartan::verify_cartan_involution;
use liecohom::catalog::{build, CatalogEntry};
use liecohom::cohomology::{cohomology_dims, ReductivePair};
use liecohom::geodesic::{simplex_suite, GeodesicError};
use liecohom::lie::{complex_structure, killing_signature, LieAlgebra};
use liecohom::{CartanError, CatalogError, CohomologyError, LieError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownEntry = 3,
    ParseError = 4,
    InvalidAlgebra = 5,
    NotSimple = 6,
    CartanFailure = 7,
    CohomologyFailure = 8,
    BufferTooSmall = 9,
    GeodesicFailure = 10,
    Panic = 11,
}

/// Which subalgebra to take cohomology relative to.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcRelative {
    /// Absolute cohomology.
    None = 0,
    /// The fixed points `k` of the catalog Cartan involution.
    K = 1,
    /// The derived algebra `[k, k]`.
    M = 2,
}

/// Opaque algebra handle.
pub struct LcAlgebra {
    algebra: LieAlgebra,
    entry: Option<CatalogEntry>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LcSimplexReport {
    pub order: usize,
    pub tuples: usize,
    pub omega_scale: f64,
    pub max_defect: f64,
    pub max_invariance_residual: f64,
    pub degenerate_value: f64,
    pub max_abs_value: f64,
    pub first_value: f64,
}

struct Failure(LcStatus, String);

impl Failure {
    fn new(status: LcStatus, msg: impl Into<String>) -> Self {
        Failure(status, msg.into())
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        let status = match e {
            LieError::Parse(_) => LcStatus::ParseError,
            LieError::NotSimple => LcStatus::NotSimple,
            _ => LcStatus::InvalidAlgebra,
        };
        Failure(status, e.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Lie(e) => e.into(),
            e => Failure(LcStatus::UnknownEntry, e.to_string()),
        }
    }
}

impl From<CartanError> for Failure {
    fn from(e: CartanError) -> Self {
        Failure(LcStatus::CartanFailure, e.to_string())
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        Failure(LcStatus::CohomologyFailure, e.to_string())
    }
}

impl From<GeodesicError> for Failure {
    fn from(e: GeodesicError) -> Self {
        Failure(LcStatus::GeodesicFailure, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            LcStatus::Panic
        }
    }
}

fn not_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure::new(LcStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    not_null(s, what)?;
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::new(LcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(alg: *const LcAlgebra) -> Result<&'a LcAlgebra, Failure> {
    not_null(alg, "algebra")?;
    Ok(&*alg)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lc_status_message(status: LcStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        LcStatus::Ok => b"ok\0",
        LcStatus::NullPointer => b"null pointer argument\0",
        LcStatus::InvalidUtf8 => b"string is not UTF-8\0",
        LcStatus::UnknownEntry => b"unknown catalog entry\0",
        LcStatus::ParseError => b"could not parse algebra\0",
        LcStatus::InvalidAlgebra => b"invalid Lie algebra\0",
        LcStatus::NotSimple => b"algebra is not simple\0",
        LcStatus::CartanFailure => b"Cartan decomposition failed\0",
        LcStatus::CohomologyFailure => b"cohomology computation failed\0",
        LcStatus::BufferTooSmall => b"output buffer too small\0",
        LcStatus::GeodesicFailure => b"simplex integration failed\0",
        LcStatus::Panic => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a catalog entry such as `"su21"` or `"sl3C"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_algebra_from_catalog(
    name: *const c_char,
    max_dim: usize,
    out: *mut *mut LcAlgebra,
) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        let name = read_str(name, "name")?;
        let entry = build(name, max_dim)?;
        let h = LcAlgebra {
            algebra: entry.algebra.clone(),
            entry: Some(entry),
        };
        *out = Box::into_raw(Box::new(h));
        Ok(())
    })
}

/// Parses the JSON algebra format (`name`, `dim`, `labels`, `brackets`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_algebra_from_json(json: *const c_char, out: *mut *mut LcAlgebra) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        let text = read_str(json, "json")?;
        let algebra = LieAlgebra::from_json_str(text)?;
        *out = Box::into_raw(Box::new(LcAlgebra { algebra, entry: None }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lc_algebra_free(alg: *mut LcAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_algebra_dim(alg: *const LcAlgebra, out: *mut usize) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        *out = handle(alg)?.algebra.dim();
        Ok(())
    })
}

/// Serializes the algebra; free the result with [`lc_string_free`].
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_algebra_to_json(alg: *const LcAlgebra, out: *mut *mut c_char) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        let text = serde_json::to_string(&handle(alg)?.algebra.to_json())
            .map_err(|e| Failure::new(LcStatus::InvalidAlgebra, e.to_string()))?;
        let c = CString::new(text).map_err(|e| Failure::new(LcStatus::InvalidAlgebra, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes `(positive, negative, zero)` of the Killing form to `out[0..3]`.
///
/// # Safety
/// `alg` must be a live handle and `out` must have room for 3 values.
#[no_mangle]
pub unsafe extern "C" fn lc_killing_signature(alg: *const LcAlgebra, out: *mut usize) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        let (p, n, z) = killing_signature(&handle(alg)?.algebra).as_tuple();
        *out = p;
        *out.add(1) = n;
        *out.add(2) = z;
        Ok(())
    })
}

/// Whether a simple algebra admits a complex structure.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_has_complex_structure(alg: *const LcAlgebra, out: *mut bool) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        *out = complex_structure(&handle(alg)?.algebra)?.is_some();
        Ok(())
    })
}

/// Writes `dim H^k` for `k = 0..=max_degree` to `out`, which must hold
/// `max_degree + 1` values. Relative modes need a catalog handle.
///
/// # Safety
/// `alg` must be a live handle and `out` must point to `out_len` values.
#[no_mangle]
pub unsafe extern "C" fn lc_cohomology_dims(
    alg: *const LcAlgebra,
    relative: LcRelative,
    max_degree: usize,
    out: *mut usize,
    out_len: usize,
) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        if out_len <= max_degree {
            return Err(Failure::new(
                LcStatus::BufferTooSmall,
                format!("need {} values", max_degree + 1),
            ));
        }
        let h = handle(alg)?;
        let pair = match relative {
            LcRelative::None => ReductivePair::absolute(&h.algebra)?,
            LcRelative::K | LcRelative::M => {
                let e = h.entry.as_ref().ok_or_else(|| {
                    Failure::new(LcStatus::CartanFailure, "relative cohomology needs a catalog entry")
                })?;
                let d = verify_cartan_involution(&e.algebra, &e.cartan_involution)?;
                if relative == LcRelative::K {
                    ReductivePair::symmetric(&d)
                } else {
                    ReductivePair::orthogonal_complement(&e.algebra, d.m_basis.clone(), "m")?
                }
            }
        };
        let dims = cohomology_dims(&pair, max_degree)?.h_dims();
        std::slice::from_raw_parts_mut(out, dims.len()).copy_from_slice(&dims);
        Ok(())
    })
}

/// Runs the seeded geodesic simplex checks on hyperbolic 3-space.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_simplex_suite(
    seed: u64,
    tuples: usize,
    order: usize,
    out: *mut LcSimplexReport,
) -> LcStatus {
    guard(|| {
        not_null(out, "out")?;
        let r = simplex_suite(seed, tuples, order, 1.0)?;
        *out = LcSimplexReport {
            order: r.order,
            tuples: r.tuples,
            omega_scale: r.omega_scale,
            max_defect: r.max_defect,
            max_invariance_residual: r.max_invariance_residual,
            degenerate_value: r.degenerate_value,
            max_abs_value: r.max_abs_value,
            first_value: r.first_value,
        };
        Ok(())
    })
}
