//! C ABI over `rational_tetra`.
//!
//! Conventions:
//!
//! * Every function returns an [`RtStatus`]; results go through out-pointers.
//! * On failure, [`rt_last_error`] returns a message for the calling thread.
//! * Rationals cross the boundary as NUL-terminated `"p/q"` strings.
//! * Strings returned to the caller are freed with [`rt_string_free`];
//!   each handle type has its own `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rational_tetra::algebra::parse_rational;
use rational_tetra::cayley_menger::{cm_value, realizability, EdgeTuple};
use rational_tetra::points::{
    conic_descent, gaussian_point, heron_point, hits_to_csv, search_integer_tetrahedra, weddle_point, CMPoint,
    SearchHit, SearchOptions,
};
use rational_tetra::suite::{run_verify_suite, SuiteName};
use rational_tetra::verdict::Verdict;
use rational_tetra::{Error, Rational};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    NegativeLength = 5,
    Degenerate = 6,
    PointAtInfinity = 7,
    ParallelSlope = 8,
    VerificationFailed = 9,
    IndexOutOfRange = 10,
    Panic = 11,
}

impl From<&Error> for RtStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => RtStatus::Parse,
            Error::NegativeLength(_) => RtStatus::NegativeLength,
            Error::DegenerateParameters(_)
            | Error::DegenerateConfiguration(_)
            | Error::ZeroInput
            | Error::ZeroFaceHeron(_) => RtStatus::Degenerate,
            Error::PointAtInfinity => RtStatus::PointAtInfinity,
            Error::ParallelSlope => RtStatus::ParallelSlope,
            Error::VerificationFailed(_) => RtStatus::VerificationFailed,
            _ => RtStatus::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(RtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(RtStatus::from(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> RtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RtStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RtStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(RtStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RtStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn rational_arg(p: *const c_char, what: &str) -> FfiResult<Rational> {
    Ok(parse_rational(str_arg(p, what)?)?)
}

unsafe fn rationals_arg<const N: usize>(p: *const *const c_char, what: &str) -> FfiResult<[Rational; N]> {
    if p.is_null() {
        return Err(Failure(RtStatus::NullPointer, format!("{what} is null")));
    }
    let mut out = Vec::with_capacity(N);
    for i in 0..N {
        out.push(rational_arg(*p.add(i), what)?);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> FfiResult<&'a mut T> {
    p.as_mut()
        .ok_or_else(|| Failure(RtStatus::NullPointer, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(RtStatus::NullPointer, format!("{what} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn rt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn rt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- edge tuples ----

/// Six edge lengths `d12, d13, d14, d23, d24, d34`.
pub struct RtEdges(EdgeTuple);

/// # Safety
/// `edges` points to six NUL-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_edges_new(edges: *const *const c_char, out: *mut *mut RtEdges) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let d: [Rational; 6] = rationals_arg(edges, "edges")?;
        *out = Box::into_raw(Box::new(RtEdges(EdgeTuple::new(d))));
        Ok(())
    })
}

/// # Safety
/// `edges` is null or came from this library.
#[no_mangle]
pub unsafe extern "C" fn rt_edges_free(edges: *mut RtEdges) {
    if !edges.is_null() {
        drop(Box::from_raw(edges));
    }
}

/// `CM` of the tuple as a string.
///
/// # Safety
/// `edges` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_edges_cm(edges: *const RtEdges, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let d = handle(edges, "edges")?;
        *out_arg(out, "out")? = c_string(cm_value(&d.0).to_string());
        Ok(())
    })
}

/// Realizability as a tetrahedron; `volume` is null unless it is rational.
///
/// # Safety
/// `edges` is a live handle; the out-pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn rt_edges_realizability(
    edges: *const RtEdges,
    realizable: *mut bool,
    degenerate: *mut bool,
    volume: *mut *mut c_char,
) -> RtStatus {
    guard(|| {
        let d = handle(edges, "edges")?;
        let (realizable, degenerate, volume) =
            (out_arg(realizable, "realizable")?, out_arg(degenerate, "degenerate")?, out_arg(volume, "volume")?);
        let r = realizability(&d.0)?;
        *realizable = r.realizable;
        *degenerate = r.degenerate;
        *volume = r.volume.map_or(ptr::null_mut(), |v| c_string(v.to_string()));
        Ok(())
    })
}

// ---- points ----

/// A verified point on `y^2 = sign * CM`.
pub struct RtPoint(CMPoint);

/// Point from `(a, b, c)` and `X`: on `y^2 = -CM`, or with `gaussian` on
/// `y^2 = CM` with `y` in Q(i).
///
/// # Safety
/// `a`, `b`, `c` are strings, `x` points to four strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_point_from_parameters(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    x: *const *const c_char,
    gaussian: bool,
    out: *mut *mut RtPoint,
) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let (a, b, c) = (rational_arg(a, "a")?, rational_arg(b, "b")?, rational_arg(c, "c")?);
        let x: [Rational; 4] = rationals_arg(x, "x")?;
        let p = if gaussian {
            gaussian_point(&a, &b, &c, &x)?
        } else {
            weddle_point(&a, &b, &c, &x)?
        };
        *out = Box::into_raw(Box::new(RtPoint(p)));
        Ok(())
    })
}

/// A known point `(edges, y)` on `y^2 = CM`, verified.
///
/// # Safety
/// `edges` is a live handle, `y` a string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_point_seed(edges: *const RtEdges, y: *const c_char, out: *mut *mut RtPoint) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let d = handle(edges, "edges")?;
        let p = CMPoint::new(d.0.clone(), rational_arg(y, "y")?, 1)?;
        *out = Box::into_raw(Box::new(RtPoint(p)));
        Ok(())
    })
}

/// Second point on the line of slope `t` through `seed`.
///
/// # Safety
/// `seed` is a live handle, `t` a string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_point_descend(seed: *const RtPoint, t: *const c_char, out: *mut *mut RtPoint) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let seed = handle(seed, "seed")?;
        let p = conic_descent(&seed.0, &rational_arg(t, "t")?)?;
        *out = Box::into_raw(Box::new(RtPoint(p)));
        Ok(())
    })
}

/// `{"edges": [...], "y": "...", "sign": n}`.
///
/// # Safety
/// `point` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_point_to_json(point: *const RtPoint, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let p = handle(point, "point")?;
        let json = serde_json::to_string(&p.0).expect("serializable");
        *out_arg(out, "out")? = c_string(json);
        Ok(())
    })
}

/// # Safety
/// `point` is null or came from this library.
#[no_mangle]
pub unsafe extern "C" fn rt_point_free(point: *mut RtPoint) {
    if !point.is_null() {
        drop(Box::from_raw(point));
    }
}

/// Triangle with rational sides and area from `(v, t)`, as JSON.
///
/// # Safety
/// `v`, `t` are strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_heron_point(v: *const c_char, t: *const c_char, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let p = heron_point(&rational_arg(v, "v")?, &rational_arg(t, "t")?)?;
        *out = c_string(serde_json::to_string(&p).expect("serializable"));
        Ok(())
    })
}

// ---- search ----

/// Sorted hits of an integer search.
pub struct RtSearch(Vec<SearchHit>);

/// Integer tuples with edges in `1..=max_edge` and square `CM`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_search(
    max_edge: i64,
    include_degenerate: bool,
    canonical: bool,
    jobs: usize,
    out: *mut *mut RtSearch,
) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let opts = SearchOptions {
            include_degenerate,
            canonical,
            jobs,
        };
        *out = Box::into_raw(Box::new(RtSearch(search_integer_tetrahedra(max_edge, &opts)?)));
        Ok(())
    })
}

/// # Safety
/// `search` is a live handle or null (length 0).
#[no_mangle]
pub unsafe extern "C" fn rt_search_len(search: *const RtSearch) -> usize {
    search.as_ref().map_or(0, |s| s.0.len())
}

/// Edges of hit `index` and its `y` as a decimal string.
///
/// # Safety
/// `search` is a live handle; `edges` has room for six values; `y` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_search_hit(
    search: *const RtSearch,
    index: usize,
    edges: *mut i64,
    y: *mut *mut c_char,
) -> RtStatus {
    guard(|| {
        let s = handle(search, "search")?;
        let hit = s
            .0
            .get(index)
            .ok_or_else(|| Failure(RtStatus::IndexOutOfRange, format!("index {index} of {}", s.0.len())))?;
        if edges.is_null() {
            return Err(Failure(RtStatus::NullPointer, "edges is null".into()));
        }
        let y = out_arg(y, "y")?;
        std::slice::from_raw_parts_mut(edges, 6).copy_from_slice(&hit.edges);
        *y = c_string(hit.y.to_string());
        Ok(())
    })
}

/// The hits in the CLI's CSV format.
///
/// # Safety
/// `search` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_search_to_csv(search: *const RtSearch, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let s = handle(search, "search")?;
        *out_arg(out, "out")? = c_string(hits_to_csv(&s.0));
        Ok(())
    })
}

/// # Safety
/// `search` is null or came from this library.
#[no_mangle]
pub unsafe extern "C" fn rt_search_free(search: *mut RtSearch) {
    if !search.is_null() {
        drop(Box::from_raw(search));
    }
}

// ---- verification ----

/// Verdicts of a verification suite.
pub struct RtVerdicts(Vec<Verdict>);

/// Runs suite `name` (`cm`, `tetrahedroid`, `weddle`, `points` or `all`).
///
/// # Safety
/// `name` is a string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_verify(name: *const c_char, seed: u64, jobs: usize, out: *mut *mut RtVerdicts) -> RtStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let name: SuiteName = str_arg(name, "name")?.parse()?;
        *out = Box::into_raw(Box::new(RtVerdicts(run_verify_suite(name, seed, jobs))));
        Ok(())
    })
}

/// # Safety
/// `verdicts` is a live handle or null (length 0).
#[no_mangle]
pub unsafe extern "C" fn rt_verdicts_len(verdicts: *const RtVerdicts) -> usize {
    verdicts.as_ref().map_or(0, |v| v.0.len())
}

/// Number of verdicts with status `fail`.
///
/// # Safety
/// `verdicts` is a live handle or null (count 0).
#[no_mangle]
pub unsafe extern "C" fn rt_verdicts_failures(verdicts: *const RtVerdicts) -> usize {
    verdicts.as_ref().map_or(0, |v| v.0.iter().filter(|x| x.is_fail()).count())
}

/// The verdicts as a JSON array.
///
/// # Safety
/// `verdicts` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn rt_verdicts_to_json(verdicts: *const RtVerdicts, out: *mut *mut c_char) -> RtStatus {
    guard(|| {
        let v = handle(verdicts, "verdicts")?;
        *out_arg(out, "out")? = c_string(serde_json::to_string(&v.0).expect("serializable"));
        Ok(())
    })
}

/// # Safety
/// `verdicts` is null or came from this library.
#[no_mangle]
pub unsafe extern "C" fn rt_verdicts_free(verdicts: *mut RtVerdicts) {
    if !verdicts.is_null() {
        drop(Box::from_raw(verdicts));
    }
}
