//! C interface to `bott-core`.
//!
//! Objects cross the boundary as opaque handles created by a `*_parse` or
//! constructor function and released with the matching `*_free`. Every
//! fallible call returns a [`BottStatus`]; on failure a message is kept per
//! thread and can be read with [`bott_last_error`]. Strings returned through
//! `char **` out-parameters are owned by the caller and must be released with
//! [`bott_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bott_core as core;
use bott_core::{Error, Reconstruction};

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottStatus {
    Ok = 0,
    /// A yes/no query succeeded and the answer is no.
    Negative = 1,
    InvalidInput = 2,
    NotZTrivial = 3,
    /// Reconstruction succeeded only up to the labels on root edges.
    Ambiguous = 4,
    InvalidDeck = 5,
    Overflow = 6,
    NullPointer = 7,
    Panic = 8,
}

/// A Bott tower, given by its strictly lower-triangular integer matrix.
pub struct BottTower(core::BottMatrix);

/// A Bott diagram: a rooted forest with positive edge labels.
pub struct BottForest(core::BottDiagram);

/// A multiset of cards, one per root of some forest.
pub struct BottDeck(core::Deck);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> BottStatus {
    match e {
        Error::NotZTrivial(_) => BottStatus::NotZTrivial,
        Error::InvalidDeck(_) => BottStatus::InvalidDeck,
        Error::LabelOverflow { .. } | Error::DimensionTooLarge { .. } => BottStatus::Overflow,
        _ => BottStatus::InvalidInput,
    }
}

struct Fail(BottStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BottStatus::NullPointer, format!("null pointer: {what}"))
}

fn guard<F>(f: F) -> BottStatus
where
    F: FnOnce() -> Result<BottStatus, Fail>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            set_last_error("");
            status
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            BottStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(BottStatus::InvalidInput, format!("{what}: not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(BottStatus::InvalidInput, "interior NUL".into()))?;
    put(out, c.into_raw(), "out")
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(value)), "out")
}

unsafe fn answer(out: *mut bool, yes: bool) -> Result<BottStatus, Fail> {
    if !out.is_null() {
        out.write(yes);
    }
    Ok(if yes {
        BottStatus::Ok
    } else {
        BottStatus::Negative
    })
}

unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message describing the last failure on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn bott_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn bott_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a tower in the text format (`n`, then one row per stage).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_parse(
    text: *const c_char,
    out: *mut *mut BottTower,
) -> BottStatus {
    guard(|| {
        let m: core::BottMatrix = read_str(text, "text")?.parse()?;
        put_handle(out, BottTower(m))?;
        Ok(BottStatus::Ok)
    })
}

/// # Safety
/// `t` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_free(t: *mut BottTower) {
    free_handle(t)
}

/// # Safety
/// `t` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_to_string(
    t: *const BottTower,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let t = deref(t, "tower")?;
        put_string(out, t.0.to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Total Chern class in the `x` generators, e.g. `1 + 4*x1 + 2*x2 + 4*x1x2`.
///
/// # Safety
/// `t` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_total_chern(
    t: *const BottTower,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let t = deref(t, "tower")?;
        put_string(out, t.0.presentation().total_chern().to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Total Chern class rewritten in the square-zero generators `z`.
///
/// # Safety
/// `t` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_chern_in_z_basis(
    t: *const BottTower,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let t = deref(t, "tower")?;
        let c = t.0.chern_in_z_basis()?;
        put_string(out, c.display_with('z').to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Bott diagram of a Z-trivial tower.
///
/// # Safety
/// `t` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_diagram(
    t: *const BottTower,
    out: *mut *mut BottForest,
) -> BottStatus {
    guard(|| {
        let t = deref(t, "tower")?;
        put_handle(out, BottForest(t.0.diagram()?))?;
        Ok(BottStatus::Ok)
    })
}

/// Whether two Z-trivial towers are biholomorphic: `Ok` if so, `Negative`
/// if not. The answer is also written to `out` when it is not null.
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn bott_tower_biholomorphic(
    a: *const BottTower,
    b: *const BottTower,
    out: *mut bool,
) -> BottStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        answer(out, core::biholomorphic(&a.0, &b.0)?)
    })
}

/// Parse a diagram: `n`, the parent line and the label line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_parse(
    text: *const c_char,
    out: *mut *mut BottForest,
) -> BottStatus {
    guard(|| {
        let d: core::BottDiagram = read_str(text, "text")?.parse()?;
        put_handle(out, BottForest(d))?;
        Ok(BottStatus::Ok)
    })
}

/// # Safety
/// `f` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_free(f: *mut BottForest) {
    free_handle(f)
}

/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_to_string(
    f: *const BottForest,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let f = deref(f, "forest")?;
        put_string(out, f.0.to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Canonical code as dot-separated tokens; equal exactly for isomorphic
/// forests.
///
/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_canonical_code(
    f: *const BottForest,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let f = deref(f, "forest")?;
        put_string(out, f.0.canonical_code().to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Labelled isomorphism: `Ok` if isomorphic, `Negative` if not. The answer
/// is also written to `out` when it is not null.
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_isomorphic(
    a: *const BottForest,
    b: *const BottForest,
    out: *mut bool,
) -> BottStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        answer(out, a.0.is_isomorphic(&b.0))
    })
}

/// A Z-trivial tower whose diagram is `f`.
///
/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_forest_tower(
    f: *const BottForest,
    out: *mut *mut BottTower,
) -> BottStatus {
    guard(|| {
        let f = deref(f, "forest")?;
        put_handle(out, BottTower(core::tower_of_diagram(&f.0)?))?;
        Ok(BottStatus::Ok)
    })
}

/// Deck of `f`: one card per root.
///
/// # Safety
/// `f` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_deck_make(
    f: *const BottForest,
    out: *mut *mut BottDeck,
) -> BottStatus {
    guard(|| {
        let f = deref(f, "forest")?;
        put_handle(out, BottDeck(core::make_deck(&f.0)?))?;
        Ok(BottStatus::Ok)
    })
}

/// Parse a deck: the card count, then the cards separated by blank lines.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_deck_parse(
    text: *const c_char,
    out: *mut *mut BottDeck,
) -> BottStatus {
    guard(|| {
        let d: core::Deck = read_str(text, "text")?.parse()?;
        put_handle(out, BottDeck(d))?;
        Ok(BottStatus::Ok)
    })
}

/// # Safety
/// `d` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn bott_deck_free(d: *mut BottDeck) {
    free_handle(d)
}

/// # Safety
/// `d` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bott_deck_to_string(
    d: *const BottDeck,
    out: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let d = deref(d, "deck")?;
        put_string(out, d.0.to_string())?;
        Ok(BottStatus::Ok)
    })
}

/// Rebuild a forest from its deck.
///
/// Returns `Ok` with the forest in `out`, or `Ambiguous` when a labelled deck
/// has a single card. In that case `out` receives the tree with unknown root
/// labels set to 1 and, if `unknown` is not null, it receives the 1-based
/// vertices whose root-edge label is unknown, separated by spaces.
///
/// # Safety
/// `d` must be a valid handle; `out` must be writable; `unknown` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn bott_deck_reconstruct(
    d: *const BottDeck,
    labelled: bool,
    out: *mut *mut BottForest,
    unknown: *mut *mut c_char,
) -> BottStatus {
    guard(|| {
        let d = deref(d, "deck")?;
        match core::reconstruct(&d.0, labelled)? {
            Reconstruction::Forest(f) => {
                put_handle(out, BottForest(f))?;
                Ok(BottStatus::Ok)
            }
            Reconstruction::Ambiguous { shape, unknown: vs } => {
                if !unknown.is_null() {
                    let list: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
                    put_string(unknown, list.join(" "))?;
                }
                put_handle(out, BottForest(shape))?;
                Ok(BottStatus::Ambiguous)
            }
        }
    })
}

/// All diagrams on `n` vertices up to isomorphism, labels in `1..=qmax`, as a
/// text stream of records separated by blank lines. `count` receives the
/// number of records when not null.
///
/// # Safety
/// `out` must be writable; `count` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn bott_enumerate(
    n: usize,
    qmax: u64,
    out: *mut *mut c_char,
    count: *mut usize,
) -> BottStatus {
    guard(|| {
        if n == 0 || qmax == 0 {
            return Err(Fail(
                BottStatus::InvalidInput,
                "n and qmax must be positive".into(),
            ));
        }
        if n > core::MAX_GENERATORS {
            return Err(Error::DimensionTooLarge {
                n,
                max: core::MAX_GENERATORS,
            }
            .into());
        }
        let all = core::enumerate_labelled(n, qmax);
        if !count.is_null() {
            count.write(all.len());
        }
        put_string(out, core::format_diagram_stream(&all))?;
        Ok(BottStatus::Ok)
    })
}
