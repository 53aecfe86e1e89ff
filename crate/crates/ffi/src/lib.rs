//! C interface. Objects are opaque handles released with their `_free`
//! function; strings returned through `char **` are released with
//! [`ffh_string_free`]. Every call returns an [`FfhStatus`]; on failure the
//! message is available from [`ffh_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ffheight::census::{self, dim_estimate, CensusOptions, VarietyTemplate};
use ffheight::cli::{parse_poly_auto, InstanceFile};
use ffheight::ffalg::{MultiPoly, PrimeField, UniPoly};
use ffheight::heightspace::expand;
use ffheight::pell::{find_family_prime, pell_family};
use ffheight::polylattice::{lattice_height, PolyMatrix};
use ffheight::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FfhStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    Math = 5,
    Budget = 6,
    Overflow = 7,
    Panic = 8,
}

/// A variety with optional default primes.
pub struct FfhInstance {
    template: VarietyTemplate,
    primes: Vec<u64>,
}

/// A polynomial over F_p[t].
pub struct FfhPoly {
    poly: MultiPoly<UniPoly>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FfhStatus {
    match e {
        Error::Parse { .. } | Error::UnknownVariable(_) | Error::ExponentOverflow => FfhStatus::Parse,
        Error::BudgetExceeded { .. } | Error::GroebnerBudget(_) => FfhStatus::Budget,
        Error::Invalid(_) | Error::NotPrime(_) | Error::LengthMismatch { .. } | Error::Shape(_) => FfhStatus::Invalid,
        _ => FfhStatus::Math,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (FfhStatus, String)>) -> FfhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FfhStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            FfhStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (FfhStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (FfhStatus, String) {
    (FfhStatus::NullArgument, format!("{name} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (FfhStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (FfhStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (FfhStatus, String)> {
    let c = CString::new(s).map_err(|_| (FfhStatus::Invalid, "string contains a NUL byte".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn budget_opts(budget: u64) -> CensusOptions {
    CensusOptions {
        budget: if budget == 0 { census::DEFAULT_BUDGET } else { budget },
        ..CensusOptions::default()
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ffh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the last failed call on this thread (empty after success).
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ffh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ffh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads an instance from the JSON instance-file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_instance_from_json(json: *const c_char, out: *mut *mut FfhInstance) -> FfhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let file = InstanceFile::from_json(read_str(json, "json")?).map_err(lib_err)?;
        let inst = FfhInstance {
            template: file.template(),
            primes: file.q.map(|q| q.to_vec()).unwrap_or_default(),
        };
        *out = Box::into_raw(Box::new(inst));
        Ok(())
    })
}

/// # Safety
/// `inst` must be null or a handle from [`ffh_instance_from_json`], freed once.
#[no_mangle]
pub unsafe extern "C" fn ffh_instance_free(inst: *mut FfhInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Number of default primes stored in the instance file.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_instance_num_primes(inst: *const FfhInstance, out: *mut usize) -> FfhStatus {
    guard(|| {
        let inst = inst.as_ref().ok_or_else(|| null("inst"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = inst.primes.len();
        Ok(())
    })
}

/// `#X(b)(F_q)`; `budget = 0` selects the default.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_census_count(
    inst: *const FfhInstance,
    b: usize,
    q: u64,
    budget: u64,
    out: *mut u64,
) -> FfhStatus {
    guard(|| {
        let inst = inst.as_ref().ok_or_else(|| null("inst"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = census::enumerate(&inst.template, b, q, &budget_opts(budget)).map_err(lib_err)?;
        *out = u64::try_from(r.count).map_err(|_| (FfhStatus::Overflow, format!("count {} exceeds 64 bits", r.count)))?;
        Ok(())
    })
}

/// Fitted dimension of X(b) over the primes `qs` (the instance's own primes
/// when `nq = 0`). `*dim` is -1 when some count is zero.
///
/// # Safety
/// `qs` must point to `nq` values (or be null with `nq = 0`); `inst`, `dim`
/// and `slope` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ffh_census_dim(
    inst: *const FfhInstance,
    b: usize,
    qs: *const u64,
    nq: usize,
    budget: u64,
    dim: *mut i64,
    slope: *mut f64,
) -> FfhStatus {
    guard(|| {
        let inst = inst.as_ref().ok_or_else(|| null("inst"))?;
        let dim = dim.as_mut().ok_or_else(|| null("dim"))?;
        let slope = slope.as_mut().ok_or_else(|| null("slope"))?;
        let primes: Vec<u64> = if nq == 0 {
            inst.primes.clone()
        } else if qs.is_null() {
            return Err(null("qs"));
        } else {
            std::slice::from_raw_parts(qs, nq).to_vec()
        };
        let rep = dim_estimate("ffi", &inst.template, b, &primes, None, &budget_opts(budget)).map_err(lib_err)?;
        *dim = rep.fit.dim.unwrap_or(-1);
        *slope = rep.fit.slope;
        Ok(())
    })
}

/// X(b) over F_q as JSON (variables, equations, metadata).
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_expand_json(
    inst: *const FfhInstance,
    b: usize,
    q: u64,
    out: *mut *mut c_char,
) -> FfhStatus {
    guard(|| {
        let inst = inst.as_ref().ok_or_else(|| null("inst"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let field = PrimeField::new(q).map_err(lib_err)?;
        let sys = expand(&inst.template.instantiate(field).map_err(lib_err)?, b).map_err(lib_err)?;
        let text = serde_json::to_string(&sys.to_json()).map_err(|e| (FfhStatus::Invalid, e.to_string()))?;
        write_string(out, text)
    })
}

/// Parses a polynomial over F_p[t]; variables are taken from the text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_poly_parse(text: *const c_char, p: u64, out: *mut *mut FfhPoly) -> FfhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let field = PrimeField::new(p).map_err(lib_err)?;
        let poly = parse_poly_auto(read_str(text, "text")?, field).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(FfhPoly { poly }));
        Ok(())
    })
}

/// Canonical text of a polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_poly_to_string(poly: *const FfhPoly, out: *mut *mut c_char) -> FfhStatus {
    guard(|| {
        let poly = poly.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, poly.poly.to_string())
    })
}

/// Total degree, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_poly_degree(poly: *const FfhPoly, out: *mut i64) -> FfhStatus {
    guard(|| {
        let poly = poly.as_ref().ok_or_else(|| null("poly"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = poly.poly.total_degree().map_or(-1, i64::from);
        Ok(())
    })
}

/// # Safety
/// `poly` must be null or a handle from [`ffh_poly_parse`], freed once.
#[no_mangle]
pub unsafe extern "C" fn ffh_poly_free(poly: *mut FfhPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Plücker height of the row space of a matrix given as a JSON array of rows
/// of polynomial strings in `t`.
///
/// # Safety
/// `matrix_json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ffh_lattice_height(matrix_json: *const c_char, p: u64, out: *mut usize) -> FfhStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let rows: Vec<Vec<String>> = serde_json::from_str(read_str(matrix_json, "matrix_json")?)
            .map_err(|e| (FfhStatus::Invalid, format!("matrix: {e}")))?;
        let field = PrimeField::new(p).map_err(lib_err)?;
        let m = PolyMatrix::from_strings(field, &rows).map_err(lib_err)?;
        *out = lattice_height(&m).map_err(lib_err)?;
        Ok(())
    })
}

/// Number of pairwise distinct solutions in the `2^n` Pell family over F_q; `q = 0`
/// picks the first prime carrying the family and reports it in `q_out`
/// (which may be null).
///
/// # Safety
/// `count` must be valid; `q_out` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn ffh_pell_family_count(n: usize, q: u64, count: *mut usize, q_out: *mut u64) -> FfhStatus {
    guard(|| {
        let count = count.as_mut().ok_or_else(|| null("count"))?;
        let q = if q == 0 { find_family_prime(n, 3).map_err(lib_err)? } else { q };
        let fam = pell_family(n, q).map_err(lib_err)?;
        if !fam.norms_ok {
            return Err((FfhStatus::Math, "family norms do not multiply out".into()));
        }
        let distinct: std::collections::BTreeSet<(String, String)> =
            fam.solutions.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect();
        *count = distinct.len();
        if let Some(qo) = q_out.as_mut() {
            *qo = q;
        }
        Ok(())
    })
}
