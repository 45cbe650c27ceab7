//! C ABI over `charkit`.
//!
//! Every fallible call returns a [`CharkitStatus`] and writes results through
//! out-pointers. Handles are opaque and owned by the caller once returned;
//! release them with the matching `*_free`. Strings returned through
//! `char **` are owned by the caller and released with
//! [`charkit_string_free`]. After a failure, [`charkit_last_error`] describes
//! it until the next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;

use charkit::coxeter::{coxeter_conjugator, RootSystem};
use charkit::data::{load_families, load_traces};
use charkit::e7::{final_value_table, solve_signs};
use charkit::fourier::{fourier_matrix, FamilyDataset};
use charkit::groups::{character_table, parse_group};
use charkit::hecke::CoxeterTraceDataset;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    DataError = 4,
    ComputationFailed = 5,
    /// The computation finished but an invariant check failed.
    CheckFailed = 6,
    Panic = 7,
}

/// A root system with its reflection tables.
pub struct CharkitRootSystem {
    inner: RootSystem,
}

/// The trace and family datasets of `E7`.
pub struct CharkitE7Data {
    traces: CoxeterTraceDataset,
    families: FamilyDataset,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl std::fmt::Display) {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn fail(status: CharkitStatus, msg: impl std::fmt::Display) -> CharkitStatus {
    set_error(msg);
    status
}

/// Run `f`, turning panics into [`CharkitStatus::Panic`].
fn guard(f: impl FnOnce() -> CharkitStatus) -> CharkitStatus {
    set_error("");
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(CharkitStatus::Panic, "internal panic"),
    }
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CharkitStatus> {
    if s.is_null() {
        return Err(fail(CharkitStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(CharkitStatus::InvalidUtf8, e))
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn read_path(s: *const c_char) -> Result<Option<PathBuf>, CharkitStatus> {
    if s.is_null() {
        return Ok(None);
    }
    read_str(s).map(|p| Some(PathBuf::from(p)))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_json(out: *mut *mut c_char, v: &serde_json::Value) -> CharkitStatus {
    if out.is_null() {
        return fail(CharkitStatus::NullPointer, "null output pointer");
    }
    match CString::new(v.to_string()) {
        Ok(s) => {
            *out = s.into_raw();
            CharkitStatus::Ok
        }
        Err(e) => fail(CharkitStatus::ComputationFailed, e),
    }
}

/// Message for the last failure on this thread; empty after success. Valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn charkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn charkit_status_string(status: CharkitStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CharkitStatus::Ok => c"ok",
        CharkitStatus::NullPointer => c"null pointer",
        CharkitStatus::InvalidUtf8 => c"invalid UTF-8",
        CharkitStatus::InvalidArgument => c"invalid argument",
        CharkitStatus::DataError => c"dataset error",
        CharkitStatus::ComputationFailed => c"computation failed",
        CharkitStatus::CheckFailed => c"invariant check failed",
        CharkitStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn charkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build the root system of a type such as `"E7"` or `"A2xB3"`.
///
/// # Safety
/// `type_label` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_root_system_new(
    type_label: *const c_char,
    out: *mut *mut CharkitRootSystem,
) -> CharkitStatus {
    guard(|| {
        if out.is_null() {
            return fail(CharkitStatus::NullPointer, "null output pointer");
        }
        let label = match read_str(type_label) {
            Ok(l) => l,
            Err(s) => return s,
        };
        match RootSystem::from_type(label) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(CharkitRootSystem { inner: rs }));
                CharkitStatus::Ok
            }
            Err(e) => fail(CharkitStatus::InvalidArgument, e),
        }
    })
}

/// # Safety
/// `rs` must be null or a handle from [`charkit_root_system_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn charkit_root_system_free(rs: *mut CharkitRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank and number of positive roots.
///
/// # Safety
/// `rs` must be a live handle; the out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_root_system_info(
    rs: *const CharkitRootSystem,
    rank: *mut usize,
    num_positive: *mut usize,
) -> CharkitStatus {
    guard(|| {
        if rs.is_null() || rank.is_null() || num_positive.is_null() {
            return fail(CharkitStatus::NullPointer, "null argument");
        }
        let rs = &(*rs).inner;
        *rank = rs.rank();
        *num_positive = rs.num_positive();
        CharkitStatus::Ok
    })
}

/// Conjugator between the Coxeter elements of two 0-based node orderings,
/// as JSON `{"word": [...], "moves": [...], "verified": bool}`. Returns
/// `CheckFailed` (with the JSON still written) if verification fails.
///
/// # Safety
/// `rs` must be a live handle, `source` and `target` valid for `len` reads,
/// and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_coxeter_conjugator(
    rs: *const CharkitRootSystem,
    source: *const usize,
    target: *const usize,
    len: usize,
    out_json: *mut *mut c_char,
) -> CharkitStatus {
    guard(|| {
        if rs.is_null() || source.is_null() || target.is_null() {
            return fail(CharkitStatus::NullPointer, "null argument");
        }
        let s = std::slice::from_raw_parts(source, len);
        let t = std::slice::from_raw_parts(target, len);
        match coxeter_conjugator(&(*rs).inner, s, t) {
            Ok(cert) => {
                let v = serde_json::to_value(&cert).expect("serializable");
                let st = write_json(out_json, &v);
                if st == CharkitStatus::Ok && !cert.verified {
                    return fail(CharkitStatus::CheckFailed, "conjugator failed verification");
                }
                st
            }
            Err(e) => fail(CharkitStatus::InvalidArgument, e),
        }
    })
}

/// Character table of a group given by name (`"S4"`) or generators
/// (`"perm:(1,2);(1,2,3)"`), as JSON with rows of cyclotomic strings.
///
/// # Safety
/// `group` must be a NUL-terminated string and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_character_table_json(
    group: *const c_char,
    out_json: *mut *mut c_char,
) -> CharkitStatus {
    guard(|| {
        let name = match read_str(group) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let g = match parse_group(name) {
            Ok(g) => g,
            Err(e) => return fail(CharkitStatus::InvalidArgument, e),
        };
        let t = match character_table(&g) {
            Ok(t) => t,
            Err(e) => return fail(CharkitStatus::ComputationFailed, e),
        };
        let rows: Vec<Vec<String>> =
            t.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        let v = serde_json::json!({
            "order": t.group_order,
            "class_sizes": t.class_sizes,
            "rows": rows,
        });
        let st = write_json(out_json, &v);
        if st == CharkitStatus::Ok && !(t.rows_orthogonal() && t.columns_orthogonal()) {
            return fail(CharkitStatus::CheckFailed, "orthogonality relations fail");
        }
        st
    })
}

/// Fourier matrix of `M(G)` as JSON `{"m_set", "matrix", "eigenvalues"}`.
///
/// # Safety
/// `group` must be a NUL-terminated string and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_fourier_matrix_json(
    group: *const c_char,
    out_json: *mut *mut c_char,
) -> CharkitStatus {
    guard(|| {
        let name = match read_str(group) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let g = match parse_group(name) {
            Ok(g) => g,
            Err(e) => return fail(CharkitStatus::InvalidArgument, e),
        };
        // Construction fails unless the matrix is a hermitian involution.
        let fm = match fourier_matrix(&g) {
            Ok(fm) => fm,
            Err(e) => return fail(CharkitStatus::CheckFailed, e),
        };
        let v = serde_json::json!({
            "m_set": fm.mpairs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "matrix": fm.entries.iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "eigenvalues": fm.eigenvalues.iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        write_json(out_json, &v)
    })
}

/// Load the `E7` datasets. A null path selects `$CHARKIT_DATA` or the
/// bundled copy.
///
/// # Safety
/// Paths must be null or NUL-terminated strings; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_e7_data_load(
    traces_path: *const c_char,
    families_path: *const c_char,
    out: *mut *mut CharkitE7Data,
) -> CharkitStatus {
    guard(|| {
        if out.is_null() {
            return fail(CharkitStatus::NullPointer, "null output pointer");
        }
        let (tp, fp) = match (read_path(traces_path), read_path(families_path)) {
            (Ok(t), Ok(f)) => (t, f),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let traces = match load_traces(tp.as_deref()) {
            Ok(t) => t,
            Err(e) => return fail(CharkitStatus::DataError, e),
        };
        let families = match load_families(fp.as_deref()) {
            Ok(f) => f,
            Err(e) => return fail(CharkitStatus::DataError, e),
        };
        if let Err(e) = families.check_against_traces(&traces) {
            return fail(CharkitStatus::DataError, e);
        }
        *out = Box::into_raw(Box::new(CharkitE7Data { traces, families }));
        CharkitStatus::Ok
    })
}

/// # Safety
/// `data` must be null or a handle from [`charkit_e7_data_load`], freed once.
#[no_mangle]
pub unsafe extern "C" fn charkit_e7_data_free(data: *mut CharkitE7Data) {
    if !data.is_null() {
        drop(Box::from_raw(data));
    }
}

/// The sign `ξ` and the audit trail as JSON.
///
/// # Safety
/// `data` must be a live handle; `xi` and `out_json` valid for writes
/// (`out_json` may be null).
#[no_mangle]
pub unsafe extern "C" fn charkit_e7_solve_signs(
    data: *const CharkitE7Data,
    xi: *mut i8,
    out_json: *mut *mut c_char,
) -> CharkitStatus {
    guard(|| {
        if data.is_null() || xi.is_null() {
            return fail(CharkitStatus::NullPointer, "null argument");
        }
        let d = &*data;
        match solve_signs(&d.traces, &d.families) {
            Ok(sol) => {
                *xi = sol.xi;
                if out_json.is_null() {
                    return CharkitStatus::Ok;
                }
                write_json(out_json, &serde_json::to_value(&sol).expect("serializable"))
            }
            Err(e) => fail(CharkitStatus::CheckFailed, e),
        }
    })
}

/// Values of the cuspidal family at the four regular unipotent classes.
///
/// # Safety
/// `data` must be a live handle and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn charkit_e7_final_table_json(
    data: *const CharkitE7Data,
    xi: i8,
    out_json: *mut *mut c_char,
) -> CharkitStatus {
    guard(|| {
        if data.is_null() {
            return fail(CharkitStatus::NullPointer, "null argument");
        }
        match final_value_table(&(*data).families, xi) {
            Ok(t) => write_json(out_json, &t.to_json_value()),
            Err(e) => fail(CharkitStatus::InvalidArgument, e),
        }
    })
}
