//! C ABI for the cellkit library.
//!
//! Every entry point returns an error code; results travel as UTF-8 JSON
//! strings allocated by this library and released with
//! [`cellkit_string_free`]. Handles are opaque and freed by their own
//! `_free` function. All functions catch panics at the boundary.

use cellkit::cosets::{classify_two_sided, enumerate_pi, CosetMatrix, SchurKind};
use cellkit::hecke::{CellSide, GroupTable, Hecke, Weight};
use cellkit::signed_perm::{parse_word, word_to_string, GroupKind, SignedPerm};
use cellkit::symbols::sym;
use cellkit::Error;
use serde_json::json;
use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

pub const CELLKIT_OK: c_int = 0;
pub const CELLKIT_ERR_INVALID_ARGUMENT: c_int = 1;
pub const CELLKIT_ERR_COMPUTE: c_int = 2;
pub const CELLKIT_ERR_NULL_POINTER: c_int = 3;
pub const CELLKIT_ERR_UTF8: c_int = 4;
pub const CELLKIT_ERR_PANIC: c_int = 5;

pub const CELLKIT_KIND_J: c_int = 0;
pub const CELLKIT_KIND_I: c_int = 1;
pub const CELLKIT_KIND_I_TILDE: c_int = 2;

pub const CELLKIT_WEIGHT_EQUAL: c_int = 0;
pub const CELLKIT_WEIGHT_UNEQUAL: c_int = 1;

pub const CELLKIT_GROUP_B: c_int = 0;
pub const CELLKIT_GROUP_D: c_int = 1;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

fn code_of(err: &Error) -> c_int {
    match err {
        Error::Internal(_) | Error::Division(_) => CELLKIT_ERR_COMPUTE,
        _ => CELLKIT_ERR_INVALID_ARGUMENT,
    }
}

/// Message describing the most recent failure on this thread. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cellkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Accepts null.
///
/// # Safety
/// `s` must be null or a pointer previously returned through an
/// out-parameter of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cellkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

fn emit(out: *mut *mut c_char, value: serde_json::Value) -> c_int {
    let text = serde_json::to_string(&value).expect("report serializes");
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => {
            set_last_error("serialized value contains an interior nul byte");
            return CELLKIT_ERR_UTF8;
        }
    };
    unsafe { *out = c.into_raw() };
    CELLKIT_OK
}

fn guarded(out: *mut *mut c_char, f: impl FnOnce() -> Result<serde_json::Value, Error>) -> c_int {
    if out.is_null() {
        set_last_error("output pointer is null");
        return CELLKIT_ERR_NULL_POINTER;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => emit(out, value),
        Ok(Err(e)) => {
            set_last_error(&e.to_string());
            code_of(&e)
        }
        Err(_) => {
            set_last_error("panic caught at the library boundary");
            CELLKIT_ERR_PANIC
        }
    }
}

fn schur_kind(kind: c_int) -> Result<SchurKind, Error> {
    match kind {
        CELLKIT_KIND_J => Ok(SchurKind::J),
        CELLKIT_KIND_I | CELLKIT_KIND_I_TILDE => Ok(SchurKind::I),
        other => Err(Error::Usage(format!("unknown kind code {other}"))),
    }
}

fn read_str<'a>(p: *const c_char) -> Result<&'a str, Error> {
    if p.is_null() {
        return Err(Error::Usage("input pointer is null".into()));
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Error::Parse("input is not valid UTF-8".into()))
}

fn matrix_value(m: &CosetMatrix) -> serde_json::Value {
    json!(m.rows())
}

/// Enumerates the coset-matrix family for the given profile.
#[no_mangle]
pub extern "C" fn cellkit_enumerate_json(
    n: usize,
    d: usize,
    kind: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let mats = enumerate_pi(n, d, schur_kind(kind)?)?;
        let mut rows = Vec::with_capacity(mats.len());
        for m in &mats {
            let y = m.y()?;
            rows.push(json!({
                "matrix": matrix_value(m),
                "y_window": y.window(),
                "y_word": word_to_string(&y.reduced_word()),
                "length": m.length()?,
                "sigma": m.sigma()?.parts(),
            }));
        }
        Ok(json!({"count": mats.len(), "rows": rows}))
    })
}

/// Two-sided classification of the family, keyed by special partitions.
#[no_mangle]
pub extern "C" fn cellkit_classify_json(
    n: usize,
    d: usize,
    kind: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let classes = classify_two_sided(n, d, schur_kind(kind)?)?;
        let rows: Vec<_> = classes
            .iter()
            .map(|(key, members)| {
                json!({
                    "key": key.parts(),
                    "members": members.iter().map(matrix_value).collect::<Vec<_>>(),
                })
            })
            .collect();
        Ok(json!({"classes": rows}))
    })
}

/// Shape invariant of one coset matrix given as a JSON array of rows.
#[no_mangle]
pub extern "C" fn cellkit_sigma_json(
    rows_json: *const c_char,
    kind: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let rows: Vec<Vec<u32>> = serde_json::from_str(read_str(rows_json)?)
            .map_err(|e| Error::Parse(format!("rows must be a JSON array of arrays: {e}")))?;
        let m = CosetMatrix::new(schur_kind(kind)?, rows)?;
        let y = m.y()?;
        Ok(json!({
            "sigma": m.sigma()?.parts(),
            "y_window": y.window(),
            "y_word": word_to_string(&y.reduced_word()),
            "length": m.length()?,
        }))
    })
}

/// Symbol of a signed permutation given by its window as a JSON array.
#[no_mangle]
pub extern "C" fn cellkit_sym_json(
    window_json: *const c_char,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let window: Vec<i32> = serde_json::from_str(read_str(window_json)?)
            .map_err(|e| Error::Parse(format!("window must be a JSON array of integers: {e}")))?;
        let w = SignedPerm::from_window(window)?;
        let s = sym(&w)?;
        Ok(json!({
            "top": s.top(),
            "bottom": s.bottom(),
            "twin": s.twin().map(|t| format!("{t:?}")),
        }))
    })
}

/// Opaque handle over a rank-d algebra with its canonical basis.
pub struct CellkitHecke {
    inner: Hecke,
}

/// Builds the algebra of rank `d` for the chosen weight and computes its
/// canonical basis. On success the handle must be released with
/// [`cellkit_hecke_free`].
#[no_mangle]
pub extern "C" fn cellkit_hecke_new(
    d: usize,
    weight: c_int,
    out_handle: *mut *mut CellkitHecke,
) -> c_int {
    if out_handle.is_null() {
        set_last_error("output pointer is null");
        return CELLKIT_ERR_NULL_POINTER;
    }
    let build = || -> Result<Hecke, Error> {
        let w = match weight {
            CELLKIT_WEIGHT_EQUAL => Weight::equal(d),
            CELLKIT_WEIGHT_UNEQUAL => Weight::a_weight(d),
            other => return Err(Error::Usage(format!("unknown weight code {other}"))),
        };
        Hecke::new(GroupTable::new(d)?, w)
    };
    match catch_unwind(AssertUnwindSafe(build)) {
        Ok(Ok(h)) => {
            let boxed = Box::new(CellkitHecke { inner: h });
            unsafe { *out_handle = Box::into_raw(boxed) };
            CELLKIT_OK
        }
        Ok(Err(e)) => {
            set_last_error(&e.to_string());
            code_of(&e)
        }
        Err(_) => {
            set_last_error("panic caught at the library boundary");
            CELLKIT_ERR_PANIC
        }
    }
}

/// Releases a handle created by [`cellkit_hecke_new`]. Accepts null.
///
/// # Safety
/// `h` must be null or a handle from `cellkit_hecke_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cellkit_hecke_free(h: *mut CellkitHecke) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

fn with_handle<'a>(h: *const CellkitHecke) -> Result<&'a Hecke, Error> {
    if h.is_null() {
        return Err(Error::Usage("handle is null".into()));
    }
    Ok(unsafe { &(*h).inner })
}

/// Cell decomposition of the algebra (or of its index-two subalgebra),
/// with elements rendered as reduced words.
#[no_mangle]
pub extern "C" fn cellkit_hecke_cells_json(
    h: *const CellkitHecke,
    group: c_int,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let hecke = with_handle(h)?;
        let kind = match group {
            CELLKIT_GROUP_B => GroupKind::B,
            CELLKIT_GROUP_D => GroupKind::D,
            other => return Err(Error::Usage(format!("unknown group code {other}"))),
        };
        let cells = hecke.cells(kind)?;
        let words = |blocks: &[Vec<u32>]| -> Vec<Vec<String>> {
            blocks
                .iter()
                .map(|b| b.iter().map(|&i| word_to_string(hecke.table().word(i))).collect())
                .collect()
        };
        Ok(json!({
            "left": words(cells.blocks(CellSide::Left)),
            "right": words(cells.blocks(CellSide::Right)),
            "two_sided": words(cells.blocks(CellSide::TwoSided)),
        }))
    })
}

/// Product of two canonical basis elements, expanded over the canonical
/// basis. Inputs are reduced words such as "s0 s1"; "e" is the identity.
#[no_mangle]
pub extern "C" fn cellkit_hecke_product_json(
    h: *const CellkitHecke,
    x_word: *const c_char,
    y_word: *const c_char,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(out_json, || {
        let hecke = with_handle(h)?;
        let x = hecke.table().by_word(&parse_word(read_str(x_word)?)?)?;
        let y = hecke.table().by_word(&parse_word(read_str(y_word)?)?)?;
        let mut terms = serde_json::Map::new();
        for (z, c) in hecke.c_product(x, y) {
            terms.insert(word_to_string(hecke.table().word(z)), json!(c.to_string()));
        }
        Ok(json!({"terms": terms}))
    })
}
