//! C ABI over the braxtope library. Handles are opaque pointers owned
//! by the library and released with the matching `_free` function.
//! Every call returns a BraxStatus; outputs go through pointers.
//!
//! String and array outputs use a caller-supplied buffer: on success
//! `written` holds the number of elements (or bytes including the NUL
//! terminator) written; if the buffer is too small the call returns
//! `BufferTooSmall` and `written` holds the required size, so a null
//! buffer with capacity 0 sizes the allocation.

use braxtope::checks::{run_suite, Suite, SuiteTarget};
use braxtope::document::{Kind, PolytopeDocument};
use braxtope::family::FacetFamily;
use braxtope::generators::{
    braxtope_facets, cyclic_facets, multiplex_facets, rd_braxtope_facets,
};
use braxtope::geometry::{realize_braxtope, RealizeOptions, Realization};
use braxtope::lattice::{build_lattice, FaceLattice};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every C-ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraxStatus {
    Ok = 0,
    /// A parameter violates a precondition (bad d/n/r, unknown suite).
    InvalidArgument = 1,
    /// Construction failed on otherwise plausible input.
    ConstructionFailed = 2,
    /// A verification check failed; the report buffer still holds details.
    CheckFailed = 3,
    NullPointer = 4,
    /// Buffer too small; `written` holds the required size.
    BufferTooSmall = 5,
    InternalError = 6,
}

/// Opaque facet family handle.
pub struct BraxFamily {
    inner: FacetFamily,
}

/// Opaque face lattice handle.
pub struct BraxLattice {
    inner: FaceLattice,
}

/// Opaque exact realization handle.
pub struct BraxRealization {
    inner: Realization,
}

/// Family kinds accepted by brax_family_to_json.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraxKind {
    Braxtope = 0,
    Multiplex = 1,
    Cyclic = 2,
    RdBraxtope = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let text = CString::new(msg).unwrap_or_else(|_| CString::new("invalid message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(e: &braxtope::Error) -> BraxStatus {
    match e {
        braxtope::Error::InvalidParams(_) => BraxStatus::InvalidArgument,
        _ => BraxStatus::ConstructionFailed,
    }
}

fn guarded(body: impl FnOnce() -> BraxStatus) -> BraxStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            BraxStatus::InternalError
        }
    }
}

/// Copy `text` into `buffer` as NUL-terminated UTF-8. `written`
/// receives the byte count including the terminator.
unsafe fn write_string(
    text: &str,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if written.is_null() {
        return BraxStatus::NullPointer;
    }
    let needed = text.len() + 1;
    *written = needed;
    if buffer.is_null() || capacity < needed {
        return BraxStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(text.as_ptr(), buffer as *mut u8, text.len());
    *buffer.add(text.len()) = 0;
    BraxStatus::Ok
}

/// Retrieve the message for the most recent failure on this thread.
///
/// # Safety
/// `buffer` must point to `capacity` writable bytes (or be null to
/// size), and `written` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brax_last_error_message(
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    let text = LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    write_string(&text, buffer, capacity, written)
}

unsafe fn emit_family(
    result: Result<FacetFamily, braxtope::Error>,
    out: *mut *mut BraxFamily,
) -> BraxStatus {
    if out.is_null() {
        return BraxStatus::NullPointer;
    }
    match result {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(BraxFamily { inner }));
            BraxStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    }
}

/// Facet family of the braxtope Q^{d,n}.
///
/// # Safety
/// `out` must be a valid pointer; the result must be released with
/// brax_family_free.
#[no_mangle]
pub unsafe extern "C" fn brax_family_braxtope(
    d: u32,
    n: u32,
    out: *mut *mut BraxFamily,
) -> BraxStatus {
    guarded(|| emit_family(braxtope_facets(d, n), out))
}

/// Facet family of the d-multiplex on n+1 vertices.
///
/// # Safety
/// As for brax_family_braxtope.
#[no_mangle]
pub unsafe extern "C" fn brax_family_multiplex(
    d: u32,
    n: u32,
    out: *mut *mut BraxFamily,
) -> BraxStatus {
    guarded(|| emit_family(multiplex_facets(d, n), out))
}

/// Facet family of the cyclic d-polytope on n+1 vertices.
///
/// # Safety
/// As for brax_family_braxtope.
#[no_mangle]
pub unsafe extern "C" fn brax_family_cyclic(
    d: u32,
    n: u32,
    out: *mut *mut BraxFamily,
) -> BraxStatus {
    guarded(|| emit_family(cyclic_facets(d, n), out))
}

/// Facet family of the (r,d)-braxtope on n+1 vertices.
///
/// # Safety
/// As for brax_family_braxtope.
#[no_mangle]
pub unsafe extern "C" fn brax_family_rd_braxtope(
    r: u32,
    d: u32,
    n: u32,
    out: *mut *mut BraxFamily,
) -> BraxStatus {
    guarded(|| emit_family(rd_braxtope_facets(r, d, n), out))
}

/// Number of facets in the family.
///
/// # Safety
/// `family` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brax_family_facet_count(
    family: *const BraxFamily,
    out: *mut usize,
) -> BraxStatus {
    if family.is_null() || out.is_null() {
        return BraxStatus::NullPointer;
    }
    *out = (*family).inner.len();
    BraxStatus::Ok
}

/// Copy the vertex indices of facet `index` (ascending) into `buffer`.
///
/// # Safety
/// `family` must be a live handle; `buffer` must point to `capacity`
/// writable u32 slots (or be null to size); `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn brax_family_facet(
    family: *const BraxFamily,
    index: usize,
    buffer: *mut u32,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if family.is_null() || written.is_null() {
        return BraxStatus::NullPointer;
    }
    let facets = (*family).inner.facets();
    let Some(facet) = facets.get(index) else {
        set_error(format!("facet index {index} out of range ({})", facets.len()));
        return BraxStatus::InvalidArgument;
    };
    *written = facet.len();
    if buffer.is_null() || capacity < facet.len() {
        return BraxStatus::BufferTooSmall;
    }
    for (i, v) in facet.iter().enumerate() {
        *buffer.add(i) = v;
    }
    BraxStatus::Ok
}

/// Serialize the family as a polytope document of the given kind.
/// `r` is read only for `RdBraxtope`; `d` names the dimension.
///
/// # Safety
/// `family` must be a live handle; buffer contract as in
/// brax_last_error_message.
#[no_mangle]
pub unsafe extern "C" fn brax_family_to_json(
    family: *const BraxFamily,
    kind: BraxKind,
    r: u32,
    d: u32,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if family.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| {
        let inner = &(*family).inner;
        let n = inner.n();
        let (kind, r) = match kind {
            BraxKind::Braxtope => (Kind::Braxtope, None),
            BraxKind::Multiplex => (Kind::Multiplex, None),
            BraxKind::Cyclic => (Kind::Cyclic, None),
            BraxKind::RdBraxtope => (Kind::RdBraxtope, Some(r)),
        };
        let doc = PolytopeDocument::from_family(kind, r, d, n, inner);
        match doc.to_json() {
            Ok(json) => write_string(&json, buffer, capacity, written),
            Err(e) => {
                set_error(e.to_string());
                BraxStatus::InternalError
            }
        }
    })
}

/// Release a family handle. Null is a no-op.
///
/// # Safety
/// `family` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn brax_family_free(family: *mut BraxFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Build the face lattice of a family by intersection closure.
///
/// # Safety
/// `family` must be a live handle; `out` must be valid; release the
/// result with brax_lattice_free.
#[no_mangle]
pub unsafe extern "C" fn brax_lattice_build(
    family: *const BraxFamily,
    out: *mut *mut BraxLattice,
) -> BraxStatus {
    if family.is_null() || out.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| {
        let inner = &(*family).inner;
        match build_lattice(inner.n() + 1, inner) {
            Ok(lattice) => {
                *out = Box::into_raw(Box::new(BraxLattice { inner: lattice }));
                BraxStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Dimension of the lattice's polytope.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brax_lattice_dim(
    lattice: *const BraxLattice,
    out: *mut u32,
) -> BraxStatus {
    if lattice.is_null() || out.is_null() {
        return BraxStatus::NullPointer;
    }
    *out = (*lattice).inner.dim();
    BraxStatus::Ok
}

/// Copy the f-vector (f_0..f_{d-1}) into `buffer`.
///
/// # Safety
/// `lattice` must be a live handle; `buffer` must point to `capacity`
/// writable u64 slots (or be null to size); `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn brax_lattice_f_vector(
    lattice: *const BraxLattice,
    buffer: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if lattice.is_null() || written.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| {
        let f = (*lattice).inner.f_vector();
        *written = f.0.len();
        if buffer.is_null() || capacity < f.0.len() {
            return BraxStatus::BufferTooSmall;
        }
        for (i, value) in f.0.iter().enumerate() {
            *buffer.add(i) = *value;
        }
        BraxStatus::Ok
    })
}

/// Release a lattice handle. Null is a no-op.
///
/// # Safety
/// `lattice` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn brax_lattice_free(lattice: *mut BraxLattice) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// Realize Q^{d,n} with exact rational coordinates. The hull of the
/// result is verified against the generated facet family before it is
/// returned.
///
/// # Safety
/// `out` must be valid; release the result with
/// brax_realization_free.
#[no_mangle]
pub unsafe extern "C" fn brax_realize(
    d: u32,
    n: u32,
    seed: u64,
    out: *mut *mut BraxRealization,
) -> BraxStatus {
    if out.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| match realize_braxtope(d, n, &RealizeOptions { seed }) {
        Ok(real) => {
            *out = Box::into_raw(Box::new(BraxRealization { inner: real }));
            BraxStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// Number of vertices in the realization.
///
/// # Safety
/// `realization` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brax_realization_vertex_count(
    realization: *const BraxRealization,
    out: *mut usize,
) -> BraxStatus {
    if realization.is_null() || out.is_null() {
        return BraxStatus::NullPointer;
    }
    *out = (*realization).inner.vertex_count();
    BraxStatus::Ok
}

/// One coordinate as a NUL-terminated "p/q" string.
///
/// # Safety
/// `realization` must be a live handle; buffer contract as in
/// brax_last_error_message.
#[no_mangle]
pub unsafe extern "C" fn brax_realization_coordinate(
    realization: *const BraxRealization,
    vertex: usize,
    coordinate: usize,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if realization.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| {
        let real = &(*realization).inner;
        let Some(point) = real.points().get(vertex) else {
            set_error(format!("vertex {vertex} out of range"));
            return BraxStatus::InvalidArgument;
        };
        let Some(value) = point.get(coordinate) else {
            set_error(format!("coordinate {coordinate} out of range"));
            return BraxStatus::InvalidArgument;
        };
        let text = format!("{}/{}", value.numer(), value.denom());
        write_string(&text, buffer, capacity, written)
    })
}

/// Release a realization handle. Null is a no-op.
///
/// # Safety
/// `realization` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn brax_realization_free(realization: *mut BraxRealization) {
    if !realization.is_null() {
        drop(Box::from_raw(realization));
    }
}

/// Run a verification suite ("all", "prop1", "braxial", "shelling",
/// "geometry", "conjectures") against generated parameters, writing the
/// JSON report into `buffer`. Returns `Ok` when every check passed,
/// `CheckFailed` when at least one failed (the report still describes
/// all of them).
///
/// # Safety
/// `suite` must be a NUL-terminated string; buffer contract as in
/// brax_last_error_message.
#[no_mangle]
pub unsafe extern "C" fn brax_verify(
    d: u32,
    n: u32,
    suite: *const c_char,
    seed: u64,
    buffer: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> BraxStatus {
    if suite.is_null() {
        return BraxStatus::NullPointer;
    }
    guarded(|| {
        let Ok(suite) = CStr::from_ptr(suite).to_str() else {
            set_error("suite name is not UTF-8");
            return BraxStatus::InvalidArgument;
        };
        let suite: Suite = match suite.parse() {
            Ok(s) => s,
            Err(e) => {
                set_error(e.to_string());
                return BraxStatus::InvalidArgument;
            }
        };
        let target = match SuiteTarget::generated(d, n) {
            Ok(t) => t,
            Err(e) => {
                set_error(e.to_string());
                return status_of(&e);
            }
        };
        let reports = match run_suite(&target, suite, &RealizeOptions { seed }) {
            Ok(r) => r,
            Err(e) => {
                set_error(e.to_string());
                return status_of(&e);
            }
        };
        let json = match serde_json_string(&reports) {
            Ok(j) => j,
            Err(msg) => {
                set_error(msg);
                return BraxStatus::InternalError;
            }
        };
        let status = write_string(&json, buffer, capacity, written);
        if status != BraxStatus::Ok {
            return status;
        }
        if reports.iter().all(|r| r.passed()) {
            BraxStatus::Ok
        } else {
            set_error("at least one check failed; see the report");
            BraxStatus::CheckFailed
        }
    })
}

fn serde_json_string<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn family(d: u32, n: u32) -> *mut BraxFamily {
        let mut out: *mut BraxFamily = std::ptr::null_mut();
        assert_eq!(brax_family_braxtope(d, n, &mut out), BraxStatus::Ok);
        assert!(!out.is_null());
        out
    }

    #[test]
    fn family_construction_and_facet_access() {
        unsafe {
            let fam = family(4, 6);
            let mut count = 0usize;
            assert_eq!(brax_family_facet_count(fam, &mut count), BraxStatus::Ok);
            assert_eq!(count, 9);

            let mut needed = 0usize;
            assert_eq!(
                brax_family_facet(fam, 0, std::ptr::null_mut(), 0, &mut needed),
                BraxStatus::BufferTooSmall
            );
            let mut buf = vec![0u32; needed];
            assert_eq!(
                brax_family_facet(fam, 0, buf.as_mut_ptr(), buf.len(), &mut needed),
                BraxStatus::Ok
            );
            assert_eq!(buf, vec![0, 1, 2, 3]);

            assert_eq!(
                brax_family_facet(fam, 99, buf.as_mut_ptr(), buf.len(), &mut needed),
                BraxStatus::InvalidArgument
            );
            brax_family_free(fam);
        }
    }

    #[test]
    fn invalid_parameters_set_an_error_message() {
        unsafe {
            let mut out: *mut BraxFamily = std::ptr::null_mut();
            assert_eq!(
                brax_family_braxtope(3, 2, &mut out),
                BraxStatus::InvalidArgument
            );
            let mut needed = 0usize;
            assert_eq!(
                brax_last_error_message(std::ptr::null_mut(), 0, &mut needed),
                BraxStatus::BufferTooSmall
            );
            let mut buf = vec![0i8; needed];
            assert_eq!(
                brax_last_error_message(buf.as_mut_ptr() as *mut c_char, buf.len(), &mut needed),
                BraxStatus::Ok
            );
            let msg = CStr::from_ptr(buf.as_ptr() as *const c_char)
                .to_str()
                .unwrap();
            assert!(msg.contains("n >= d"), "{msg}");
        }
    }

    #[test]
    fn lattice_f_vector_through_the_abi() {
        unsafe {
            let fam = family(4, 6);
            let mut lat: *mut BraxLattice = std::ptr::null_mut();
            assert_eq!(brax_lattice_build(fam, &mut lat), BraxStatus::Ok);
            let mut dim = 0u32;
            assert_eq!(brax_lattice_dim(lat, &mut dim), BraxStatus::Ok);
            assert_eq!(dim, 4);
            let mut f = vec![0u64; 4];
            let mut written = 0usize;
            assert_eq!(
                brax_lattice_f_vector(lat, f.as_mut_ptr(), f.len(), &mut written),
                BraxStatus::Ok
            );
            assert_eq!(f, vec![7, 18, 20, 9]);
            brax_lattice_free(lat);
            brax_family_free(fam);
        }
    }

    #[test]
    fn realization_coordinates_as_rational_strings() {
        unsafe {
            let mut real: *mut BraxRealization = std::ptr::null_mut();
            assert_eq!(brax_realize(3, 5, 0, &mut real), BraxStatus::Ok);
            let mut count = 0usize;
            assert_eq!(
                brax_realization_vertex_count(real, &mut count),
                BraxStatus::Ok
            );
            assert_eq!(count, 6);
            let mut needed = 0usize;
            assert_eq!(
                brax_realization_coordinate(real, 5, 0, std::ptr::null_mut(), 0, &mut needed),
                BraxStatus::BufferTooSmall
            );
            let mut buf = vec![0i8; needed];
            assert_eq!(
                brax_realization_coordinate(
                    real,
                    5,
                    0,
                    buf.as_mut_ptr() as *mut c_char,
                    buf.len(),
                    &mut needed
                ),
                BraxStatus::Ok
            );
            let text = CStr::from_ptr(buf.as_ptr() as *const c_char)
                .to_str()
                .unwrap();
            assert!(text.contains('/'), "{text}");
            brax_realization_free(real);
        }
    }

    #[test]
    fn json_export_and_verification() {
        unsafe {
            let fam = family(3, 4);
            let mut needed = 0usize;
            assert_eq!(
                brax_family_to_json(
                    fam,
                    BraxKind::Braxtope,
                    0,
                    3,
                    std::ptr::null_mut(),
                    0,
                    &mut needed
                ),
                BraxStatus::BufferTooSmall
            );
            let mut buf = vec![0i8; needed];
            assert_eq!(
                brax_family_to_json(
                    fam,
                    BraxKind::Braxtope,
                    0,
                    3,
                    buf.as_mut_ptr() as *mut c_char,
                    buf.len(),
                    &mut needed
                ),
                BraxStatus::Ok
            );
            let json = CStr::from_ptr(buf.as_ptr() as *const c_char)
                .to_str()
                .unwrap();
            assert!(json.contains("\"kind\": \"braxtope\""), "{json}");
            brax_family_free(fam);

            let suite = CString::new("braxial").unwrap();
            let mut needed = 0usize;
            let status = brax_verify(
                4,
                6,
                suite.as_ptr(),
                0,
                std::ptr::null_mut(),
                0,
                &mut needed,
            );
            assert_eq!(status, BraxStatus::BufferTooSmall);
            let mut buf = vec![0i8; needed];
            let status = brax_verify(
                4,
                6,
                suite.as_ptr(),
                0,
                buf.as_mut_ptr() as *mut c_char,
                buf.len(),
                &mut needed,
            );
            assert_eq!(status, BraxStatus::Ok);
            let report = CStr::from_ptr(buf.as_ptr() as *const c_char)
                .to_str()
                .unwrap();
            assert!(report.contains("facets-are-braxtopes"), "{report}");

            let bad = CString::new("nonsense").unwrap();
            let status = brax_verify(
                4,
                6,
                bad.as_ptr(),
                0,
                std::ptr::null_mut(),
                0,
                &mut needed,
            );
            assert_eq!(status, BraxStatus::InvalidArgument);
        }
    }

    #[test]
    fn null_handles_are_rejected_not_dereferenced() {
        unsafe {
            let mut count = 0usize;
            assert_eq!(
                brax_family_facet_count(std::ptr::null(), &mut count),
                BraxStatus::NullPointer
            );
            assert_eq!(
                brax_lattice_dim(std::ptr::null(), &mut 0u32),
                BraxStatus::NullPointer
            );
            brax_family_free(std::ptr::null_mut());
            brax_lattice_free(std::ptr::null_mut());
            brax_realization_free(std::ptr::null_mut());
        }
    }

    #[test]
    fn generated_header_declares_the_surface() {
        let header = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/include/braxtope.h"
        ))
        .expect("build script wrote the header");
        for name in [
            "BraxStatus",
            "BraxFamily",
            "BraxLattice",
            "BraxRealization",
            "brax_family_braxtope",
            "brax_lattice_f_vector",
            "brax_realize",
            "brax_verify",
            "brax_last_error_message",
        ] {
            assert!(header.contains(name), "header lacks {name}");
        }
    }
}
