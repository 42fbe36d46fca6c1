//! C interface to `groupwidth`.
//!
//! Complexes live behind an opaque `GwComplex` handle that also carries an
//! optional labeling. Every fallible call returns a [`GwStatus`]; on failure
//! `gw_last_error` gives a message for the calling thread. Strings returned by
//! the library are freed with `gw_string_free`, handles with `gw_complex_free`.
//!
//! A field is passed as a `uint64_t`: 0 for the rationals, otherwise a prime p.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use groupwidth::generators::{generate_circle, generate_torus, tent_for};
use groupwidth::scx::{parse_scx, to_scx_string};
use groupwidth::search::{anneal_min, exhaustive_min, AnnealParams};
use groupwidth::{betti1, hcwr_value, Error, FieldSpec, MorseLabeling, SimplicialComplex};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidLabeling = 3,
    MissingLabels = 4,
    NotConnected = 5,
    Parse = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque complex with an optional labeling.
pub struct GwComplex {
    complex: SimplicialComplex,
    labels: Option<MorseLabeling>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> GwStatus {
    match e {
        Error::InvalidLabeling(_) | Error::LabelCountMismatch { .. } => GwStatus::InvalidLabeling,
        Error::MissingLabels => GwStatus::MissingLabels,
        Error::NotConnected => GwStatus::NotConnected,
        Error::Json(_) | Error::Format(_) => GwStatus::Parse,
        _ => GwStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> GwStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn guard(f: impl FnOnce() -> GwStatus) -> GwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == GwStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => {
            set_error("internal panic");
            GwStatus::Panic
        }
    }
}

fn field(p: u64) -> Result<FieldSpec, Error> {
    if p == 0 {
        Ok(FieldSpec::Rationals)
    } else {
        FieldSpec::prime(p)
    }
}

macro_rules! deref {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(r) => r,
            None => {
                set_error(concat!(stringify!($p), " is null"));
                return GwStatus::NullPointer;
            }
        }
    };
}

macro_rules! deref_mut {
    ($p:expr) => {
        match unsafe { $p.as_mut() } {
            Some(r) => r,
            None => {
                set_error(concat!(stringify!($p), " is null"));
                return GwStatus::NullPointer;
            }
        }
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

fn hand_out(out: *mut *mut GwComplex, complex: SimplicialComplex, labels: Option<MorseLabeling>) -> GwStatus {
    let slot = deref_mut!(out);
    *slot = Box::into_raw(Box::new(GwComplex { complex, labels }));
    GwStatus::Ok
}

fn hand_out_string(out: *mut *mut c_char, s: String) -> GwStatus {
    let slot = deref_mut!(out);
    *slot = CString::new(s).expect("json has no nul bytes").into_raw();
    GwStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn gw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The `m`-cycle.
#[no_mangle]
pub unsafe extern "C" fn gw_circle_new(m: usize, out: *mut *mut GwComplex) -> GwStatus {
    guard(|| {
        let k = tri!(generate_circle(m));
        hand_out(out, k, None)
    })
}

/// Freudenthal torus of dimension `dim` with `res` vertices per axis.
#[no_mangle]
pub unsafe extern "C" fn gw_torus_new(dim: usize, res: usize, out: *mut *mut GwComplex) -> GwStatus {
    guard(|| {
        let t = tri!(generate_torus(dim, res));
        hand_out(out, t.into_complex(), None)
    })
}

/// Parses SCX text (NUL-terminated UTF-8).
#[no_mangle]
pub unsafe extern "C" fn gw_complex_from_scx(text: *const c_char, out: *mut *mut GwComplex) -> GwStatus {
    guard(|| {
        if text.is_null() {
            set_error("text is null");
            return GwStatus::NullPointer;
        }
        let Ok(s) = unsafe { CStr::from_ptr(text) }.to_str() else {
            set_error("text is not UTF-8");
            return GwStatus::Parse;
        };
        let lc = tri!(parse_scx(s));
        hand_out(out, lc.complex, lc.labeling)
    })
}

/// Writes the complex and its labels as SCX text; free with `gw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gw_complex_to_scx(k: *const GwComplex, out: *mut *mut c_char) -> GwStatus {
    guard(|| {
        let k = deref!(k);
        let lc = groupwidth::generators::LabeledComplex { complex: k.complex.clone(), labeling: k.labels.clone() };
        hand_out_string(out, to_scx_string(&lc))
    })
}

#[no_mangle]
pub unsafe extern "C" fn gw_complex_free(k: *mut GwComplex) {
    if !k.is_null() {
        drop(unsafe { Box::from_raw(k) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn gw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Number of vertices, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn gw_complex_vertex_count(k: *const GwComplex) -> usize {
    unsafe { k.as_ref() }.map_or(0, |k| k.complex.vertex_count())
}

/// Replaces the labeling; `len` must equal the vertex count.
#[no_mangle]
pub unsafe extern "C" fn gw_complex_set_labels(k: *mut GwComplex, labels: *const i64, len: usize) -> GwStatus {
    guard(|| {
        let k = deref_mut!(k);
        if labels.is_null() && len > 0 {
            set_error("labels is null");
            return GwStatus::NullPointer;
        }
        let v = if len == 0 { Vec::new() } else { unsafe { std::slice::from_raw_parts(labels, len) }.to_vec() };
        k.labels = Some(tri!(MorseLabeling::checked(&k.complex, v)));
        GwStatus::Ok
    })
}

/// Sets the tent labeling along `axis`; the complex must come from the torus or circle generator.
#[no_mangle]
pub unsafe extern "C" fn gw_complex_set_tent(k: *mut GwComplex, axis: usize) -> GwStatus {
    guard(|| {
        let k = deref_mut!(k);
        k.labels = Some(tri!(tent_for(&k.complex, axis)));
        GwStatus::Ok
    })
}

/// Copies the labeling into `buf`, which must hold `len >= vertex count` entries.
#[no_mangle]
pub unsafe extern "C" fn gw_complex_get_labels(k: *const GwComplex, buf: *mut i64, len: usize) -> GwStatus {
    guard(|| {
        let k = deref!(k);
        let Some(f) = &k.labels else { return fail(Error::MissingLabels) };
        if len < f.len() {
            set_error(format!("buffer holds {len} labels, need {}", f.len()));
            return GwStatus::BufferTooSmall;
        }
        if buf.is_null() && !f.is_empty() {
            set_error("buf is null");
            return GwStatus::NullPointer;
        }
        for (i, &l) in f.labels().iter().enumerate() {
            unsafe { *buf.add(i) = l };
        }
        GwStatus::Ok
    })
}

/// First Betti number over the field `p`.
#[no_mangle]
pub unsafe extern "C" fn gw_betti1(k: *const GwComplex, p: u64, out: *mut usize) -> GwStatus {
    guard(|| {
        let k = deref!(k);
        let f = tri!(field(p));
        *deref_mut!(out) = betti1(&k.complex, f);
        GwStatus::Ok
    })
}

/// Width of the current labeling over the field `p`.
#[no_mangle]
pub unsafe extern "C" fn gw_hcwr(k: *const GwComplex, p: u64, out: *mut usize) -> GwStatus {
    guard(|| {
        let k = deref!(k);
        let f = tri!(field(p));
        let Some(labels) = &k.labels else { return fail(Error::MissingLabels) };
        let r = tri!(hcwr_value(&k.complex, labels, f));
        *deref_mut!(out) = r.max_rank;
        GwStatus::Ok
    })
}

/// Full width report of the current labeling as JSON; free with `gw_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gw_report_json(k: *const GwComplex, p: u64, out: *mut *mut c_char) -> GwStatus {
    guard(|| {
        let k = deref!(k);
        let f = tri!(field(p));
        let Some(labels) = &k.labels else { return fail(Error::MissingLabels) };
        let r = tri!(hcwr_value(&k.complex, labels, f));
        hand_out_string(out, r.to_json().to_string())
    })
}

/// Exhaustive minimization; `budget_ms == 0` means no limit. On success the
/// certificate becomes the handle's labeling.
#[no_mangle]
pub unsafe extern "C" fn gw_exhaustive_min(
    k: *mut GwComplex,
    p: u64,
    budget_ms: u64,
    best: *mut usize,
    exhaustive: *mut bool,
) -> GwStatus {
    guard(|| {
        let k = deref_mut!(k);
        let f = tri!(field(p));
        let budget = (budget_ms > 0).then(|| Duration::from_millis(budget_ms));
        let r = tri!(exhaustive_min(&k.complex, f, budget));
        *deref_mut!(best) = r.best_value;
        *deref_mut!(exhaustive) = r.exhaustive;
        k.labels = Some(r.certificate);
        GwStatus::Ok
    })
}

/// Annealing with the default schedule and `seed`. On success the
/// certificate becomes the handle's labeling.
#[no_mangle]
pub unsafe extern "C" fn gw_anneal_min(k: *mut GwComplex, p: u64, seed: u64, best: *mut usize) -> GwStatus {
    guard(|| {
        let k = deref_mut!(k);
        let f = tri!(field(p));
        let r = tri!(anneal_min(&k.complex, f, &AnnealParams::with_seed(seed)));
        *deref_mut!(best) = r.best_value;
        k.labels = Some(r.certificate);
        GwStatus::Ok
    })
}
