//! C ABI over `lexcomplex`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free` function. Every entry point returns an
//! [`LcStatus`]; on failure `lc_last_error_message` describes the error for
//! the calling thread. Strings returned to C are freed with
//! `lc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lexcomplex::descriptor::{config_from_json, MatroidDescriptor};
use lexcomplex::latpath::{lpm_unvalidated, statistic, LatticePath};
use lexcomplex::oracle::{self, TermOrder};
use lexcomplex::stdcomplex::LexMemo;
use lexcomplex::{Error, FiniteSet, Matroid, SimplicialComplex};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    InvalidMatroid = 3,
    NotABasis = 4,
    ResourceLimit = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcTermOrder {
    Lex = 0,
    Grlex = 1,
}

/// A validated matroid with its own cache of standard complexes.
pub struct LcMatroid {
    matroid: Matroid,
    memo: LexMemo,
}

/// A simplicial complex given by its faces.
pub struct LcComplex {
    complex: SimplicialComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LcStatus {
    match e {
        Error::NotABasis(_) => LcStatus::NotABasis,
        Error::ResourceLimit(_) | Error::TooManyCoordinates(_) => LcStatus::ResourceLimit,
        Error::EmptyBasisList
        | Error::UnequalCardinality { .. }
        | Error::BasisOutsideGroundset { .. }
        | Error::ExchangeViolation { .. }
        | Error::InvalidUniform { .. } => LcStatus::InvalidMatroid,
        _ => LcStatus::InvalidInput,
    }
}

fn fail(status: LcStatus, msg: impl Into<String>) -> LcStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F>(f: F) -> LcStatus
where
    F: FnOnce() -> Result<(), LcStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(LcStatus::Panic, "internal panic"),
    }
}

fn check<T>(r: Result<T, Error>) -> Result<T, LcStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, LcStatus> {
    if p.is_null() {
        return Err(fail(LcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(LcStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, LcStatus> {
    p.as_mut()
        .ok_or_else(|| fail(LcStatus::NullPointer, "null output pointer"))
}

unsafe fn in_ref<'a, T>(p: *const T) -> Result<&'a T, LcStatus> {
    p.as_ref()
        .ok_or_else(|| fail(LcStatus::NullPointer, "null handle"))
}

/// Copies `data` into `buf` if it fits; `*len` always receives the length.
unsafe fn write_buffer<T: Copy>(
    data: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), LcStatus> {
    *out_ref(len)? = data.len();
    if data.len() > cap {
        return Err(fail(
            LcStatus::BufferTooSmall,
            format!("need {} entries, have {cap}", data.len()),
        ));
    }
    if !data.is_empty() {
        if buf.is_null() {
            return Err(fail(LcStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(data.as_ptr(), buf, data.len());
    }
    Ok(())
}

fn new_matroid(m: Matroid) -> *mut LcMatroid {
    Box::into_raw(Box::new(LcMatroid {
        matroid: m,
        memo: LexMemo::new(),
    }))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a matroid from a JSON descriptor (`bases`, `uniform`,
/// `transversal` or `lattice_path`).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_from_json(
    json: *const c_char,
    out: *mut *mut LcMatroid,
) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        let d = check(MatroidDescriptor::from_json(read_str(json)?))?;
        *out = new_matroid(check(d.build())?);
        Ok(())
    })
}

/// `U_{r,n}` on `{1,…,n}`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_uniform(n: i64, r: i64, out: *mut *mut LcMatroid) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = new_matroid(check(Matroid::uniform(n, r, 1))?);
        Ok(())
    })
}

/// The lattice path matroid between boundary words over `e`/`n`.
///
/// # Safety
/// `upper` and `lower` must be nul-terminated strings and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_lattice_path(
    upper: *const c_char,
    lower: *const c_char,
    out: *mut *mut LcMatroid,
) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        let u = check(LatticePath::parse(read_str(upper)?))?;
        let l = check(LatticePath::parse(read_str(lower)?))?;
        *out = new_matroid(check(lpm_unvalidated(&u, &l))?);
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_free(m: *mut LcMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_rank(m: *const LcMatroid, out: *mut usize) -> LcStatus {
    guard(|| {
        *out_ref(out)? = in_ref(m)?.matroid.rank();
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_matroid_num_bases(m: *const LcMatroid, out: *mut usize) -> LcStatus {
    guard(|| {
        *out_ref(out)? = in_ref(m)?.matroid.num_bases();
        Ok(())
    })
}

/// The lexicographic standard complex of `m` as a new handle.
///
/// # Safety
/// `m` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_lex_standard_complex(
    m: *const LcMatroid,
    out: *mut *mut LcComplex,
) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        let m = in_ref(m)?;
        let complex = (*m.memo.complex(&m.matroid)).clone();
        *out = Box::into_raw(Box::new(LcComplex { complex }));
        Ok(())
    })
}

/// Standard complex of a 0/1 configuration given as
/// `{"coords":[...],"points":[[0,1,...],...]}`, by exact elimination.
///
/// # Safety
/// `config_json` must be a nul-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_oracle_standard_complex(
    config_json: *const c_char,
    order: LcTermOrder,
    out: *mut *mut LcComplex,
) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        let v = check(config_from_json(read_str(config_json)?))?;
        let order = match order {
            LcTermOrder::Lex => TermOrder::Lex,
            LcTermOrder::Grlex => TermOrder::Grlex,
        };
        let complex = check(oracle::standard_complex(&v, order))?;
        *out = Box::into_raw(Box::new(LcComplex { complex }));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_complex_free(c: *mut LcComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_complex_num_faces(c: *const LcComplex, out: *mut usize) -> LcStatus {
    guard(|| {
        *out_ref(out)? = in_ref(c)?.complex.len();
        Ok(())
    })
}

/// Writes the f-vector into `buf`. `*len` receives its length even when
/// `cap` is too small.
///
/// # Safety
/// `c` must be a live handle, `buf` valid for `cap` writes, `len` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_complex_f_vector(
    c: *const LcComplex,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> LcStatus {
    guard(|| write_buffer(&in_ref(c)?.complex.f_vector(), buf, cap, len))
}

/// Faces as a JSON array of arrays, in canonical order. Free the result
/// with `lc_string_free`.
///
/// # Safety
/// `c` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_complex_to_json(
    c: *const LcComplex,
    out: *mut *mut c_char,
) -> LcStatus {
    guard(|| {
        let out = out_ref(out)?;
        let faces = in_ref(c)?.complex.to_face_lists();
        let s = serde_json::to_string(&faces).expect("face lists serialize");
        *out = CString::new(s).expect("JSON has no nul").into_raw();
        Ok(())
    })
}

/// `Λ_M(B)` for a basis given as `basis_len` labels.
///
/// # Safety
/// `m` must be a live handle, `basis` valid for `basis_len` reads, `buf`
/// valid for `cap` writes and `len` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_lambda_of_basis(
    m: *const LcMatroid,
    basis: *const u32,
    basis_len: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> LcStatus {
    guard(|| {
        let m = in_ref(m)?;
        let labels = if basis_len == 0 {
            Vec::new()
        } else if basis.is_null() {
            return Err(fail(LcStatus::NullPointer, "null basis"));
        } else {
            std::slice::from_raw_parts(basis, basis_len).to_vec()
        };
        let b = check(FiniteSet::new(labels))?;
        let face = check(m.memo.lambda_of_basis(&m.matroid, &b))?;
        write_buffer(face.as_slice(), buf, cap, len)
    })
}

/// The marking-path statistic of `path` with respect to `lower`.
///
/// # Safety
/// `path` and `lower` must be nul-terminated strings, `buf` valid for `cap`
/// writes and `len` valid.
#[no_mangle]
pub unsafe extern "C" fn lc_statistic(
    path: *const c_char,
    lower: *const c_char,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> LcStatus {
    guard(|| {
        let c = check(LatticePath::parse(read_str(path)?))?;
        let l = check(LatticePath::parse(read_str(lower)?))?;
        let st = check(statistic(&c, &l))?;
        write_buffer(st.as_slice(), buf, cap, len)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
