//! C ABI for `lml-core`.
//!
//! Groups and graphs are opaque handles created by `lml_*_new` style
//! constructors and released with the matching `_free`. Every fallible
//! call returns an [`LmlStatus`]; on failure the message is available from
//! [`lml_last_error`] on the same thread. Strings returned through `out`
//! parameters are owned by the caller and released with [`lml_string_free`].

use lml_core::balls::{cayley_ball_with_cap, distance_with_cap, BallError, FiniteGraph, DEFAULT_MAX_VERTICES};
use lml_core::cli::{document, render, BallDoc};
use lml_core::cosets::{permutation_engine, witness_report, WitnessError};
use lml_core::fixtures;
use lml_core::localmodel::{fixing_radius, verify_model, Limits, LocalModelError};
use lml_core::reconstruct::{reconstruct, PresentOnSError};
use lml_core::words::{
    bs_generating_set, standard_generating_set, Alphabet, BaumslagSolitar, Engine, FreeAbelian, FreeGroup, GenSet,
    Presentation, PresentationFile, Word, WordProblem,
};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmlStatus {
    Ok = 0,
    /// The computation finished with a negative answer (reject, ambiguity,
    /// relator violation); the JSON output is still written.
    Negative = 1,
    ResourceLimit = 2,
    InvalidInput = 3,
    NullPointer = 4,
    Panic = 5,
}

/// A group with its generating set `S` and presentation.
pub struct LmlGroup {
    engine: Engine,
    presentation: Presentation,
    s: GenSet,
    max_vertices: usize,
}

/// A finite simple graph.
pub struct LmlGraph {
    graph: FiniteGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(LmlStatus, String);

type Outcome<T> = Result<T, Failure>;

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure(LmlStatus::InvalidInput, e.to_string())
}

impl From<BallError> for Failure {
    fn from(e: BallError) -> Self {
        Failure(LmlStatus::ResourceLimit, e.to_string())
    }
}

impl From<LocalModelError> for Failure {
    fn from(e: LocalModelError) -> Self {
        Failure(LmlStatus::ResourceLimit, e.to_string())
    }
}

impl From<PresentOnSError> for Failure {
    fn from(e: PresentOnSError) -> Self {
        match e {
            PresentOnSError::Ball(b) => b.into(),
            other => invalid(other),
        }
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Ball(_) | WitnessError::Hom(_) => Failure(LmlStatus::ResourceLimit, e.to_string()),
            other => invalid(other),
        }
    }
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

/// Runs `f`, converting failures and panics into a status and the
/// thread's last error.
fn guard(f: impl FnOnce() -> Outcome<LmlStatus>) -> LmlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            LmlStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(LmlStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid("argument is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(LmlStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(LmlStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c = CString::new(s).map_err(invalid)?;
    put(out, c.into_raw())
}

unsafe fn put_json(out: *mut *mut c_char, command: &str, result: impl serde::Serialize) -> Outcome<()> {
    put_string(out, render(&document(command, result)))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// The message of the last failed call on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lml_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lml_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn new_group(engine: Engine, presentation: Presentation, words: Option<Vec<Word>>) -> Outcome<LmlGroup> {
    let words = words.unwrap_or_else(|| standard_generating_set(engine.alphabet().len()));
    let s = GenSet::validate(&engine, words).map_err(invalid)?;
    Ok(LmlGroup {
        engine,
        presentation,
        s,
        max_vertices: DEFAULT_MAX_VERTICES,
    })
}

/// The free group of the given rank on `x, y, z, ...`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_group_new_free(rank: usize, out: *mut *mut LmlGroup) -> LmlStatus {
    guard(|| {
        let g = new_group(
            Engine::Free(FreeGroup::of_rank(rank)),
            Presentation::free(Alphabet::standard(rank)),
            None,
        )?;
        put(out, boxed(g))?;
        Ok(LmlStatus::Ok)
    })
}

/// `Z^d` with its standard generators.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_group_new_free_abelian(d: usize, out: *mut *mut LmlGroup) -> LmlStatus {
    guard(|| {
        let g = new_group(
            Engine::FreeAbelian(FreeAbelian::of_rank(d)),
            Presentation::free_abelian(d),
            None,
        )?;
        put(out, boxed(g))?;
        Ok(LmlStatus::Ok)
    })
}

/// `BS(m, n) = <a, b | a b^m a^-1 = b^n>`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_group_new_baumslag_solitar(m: u32, n: u32, out: *mut *mut LmlGroup) -> LmlStatus {
    guard(|| {
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive"));
        }
        let g = new_group(
            Engine::BaumslagSolitar(BaumslagSolitar::new(m, n)),
            Presentation::baumslag_solitar(m, n),
            None,
        )?;
        put(out, boxed(g))?;
        Ok(LmlStatus::Ok)
    })
}

/// The finite group of a presentation file, acting on itself by coset
/// enumeration. An `S` line in the file becomes the generating set.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_group_new_finite(
    text: *const c_char,
    max_cosets: usize,
    out: *mut *mut LmlGroup,
) -> LmlStatus {
    guard(|| {
        let file = PresentationFile::parse(c_str(text)?).map_err(invalid)?;
        let (group, _) = permutation_engine(&file.presentation, &[], max_cosets)
            .map_err(|e| Failure(LmlStatus::ResourceLimit, e.to_string()))?;
        let g = new_group(Engine::Permutation(group), file.presentation, file.generating_set)?;
        put(out, boxed(g))?;
        Ok(LmlStatus::Ok)
    })
}

/// Replaces `S` by the words of `gens`, written `w | w | ...`.
///
/// # Safety
/// `group` must be a live handle and `gens` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn lml_group_set_generators(group: *mut LmlGroup, gens: *const c_char) -> LmlStatus {
    guard(|| {
        let g = group
            .as_mut()
            .ok_or_else(|| Failure(LmlStatus::NullPointer, "null handle".into()))?;
        let words = c_str(gens)?
            .split('|')
            .map(|w| g.engine.alphabet().parse_word(w).map_err(invalid))
            .collect::<Outcome<Vec<Word>>>()?;
        g.s = GenSet::validate(&g.engine, words).map_err(invalid)?;
        Ok(LmlStatus::Ok)
    })
}

/// Uses `a, b, a^-1, b^-1, a^2, a^-2, ab, b^-1 a^-1, b^4, b^-4` as `S`.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lml_group_use_bs_generators(group: *mut LmlGroup) -> LmlStatus {
    guard(|| {
        let g = group
            .as_mut()
            .ok_or_else(|| Failure(LmlStatus::NullPointer, "null handle".into()))?;
        if g.engine.alphabet().len() != 2 {
            return Err(invalid("the generating set needs two generators"));
        }
        g.s = GenSet::validate(&g.engine, bs_generating_set()).map_err(invalid)?;
        Ok(LmlStatus::Ok)
    })
}

/// Caps the vertices any single ball or search may create.
///
/// # Safety
/// `group` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lml_group_set_max_vertices(group: *mut LmlGroup, max_vertices: usize) -> LmlStatus {
    guard(|| {
        let g = group
            .as_mut()
            .ok_or_else(|| Failure(LmlStatus::NullPointer, "null handle".into()))?;
        g.max_vertices = max_vertices;
        Ok(LmlStatus::Ok)
    })
}

/// `|S|`, or 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lml_group_generator_count(group: *const LmlGroup) -> usize {
    group.as_ref().map_or(0, |g| g.s.len())
}

/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lml_group_free(group: *mut LmlGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Whether `word` is the identity.
///
/// # Safety
/// `group` must be a live handle, `word` a nul-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_is_identity(group: *const LmlGroup, word: *const c_char, out: *mut bool) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        let w = g.engine.alphabet().parse_word(c_str(word)?).map_err(invalid)?;
        put(out, g.engine.is_identity(&w))?;
        Ok(LmlStatus::Ok)
    })
}

/// `d(e, word)` in the Cayley graph over `S`.
///
/// # Safety
/// `group` must be a live handle, `word` a nul-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_distance(group: *const LmlGroup, word: *const c_char, out: *mut usize) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        let w = g.engine.alphabet().parse_word(c_str(word)?).map_err(invalid)?;
        put(out, distance_with_cap(&g.engine, &g.s, &w, g.max_vertices)?)?;
        Ok(LmlStatus::Ok)
    })
}

/// The ball `B(e, radius)` as JSON.
///
/// # Safety
/// `group` must be a live handle and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_ball_json(group: *const LmlGroup, radius: usize, out_json: *mut *mut c_char) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        let ball = cayley_ball_with_cap(&g.engine, &g.s, radius, g.max_vertices)?;
        put_json(out_json, "ball", BallDoc::new(&g.engine, &g.s, &ball))?;
        Ok(LmlStatus::Ok)
    })
}

/// The fixing-radius scan from `r` to `bound` as JSON.
///
/// # Safety
/// `group` must be a live handle and `out_json` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_fixing_radius_json(
    group: *const LmlGroup,
    r: usize,
    bound: usize,
    out_json: *mut *mut c_char,
) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        if bound < r {
            return Err(invalid("bound must be at least r"));
        }
        let limits = Limits {
            max_vertices: g.max_vertices,
            ..Limits::default()
        };
        let rep = fixing_radius(&g.engine, &g.s, r, bound, limits)?;
        put_json(out_json, "r0", rep)?;
        Ok(LmlStatus::Ok)
    })
}

/// Parses a graph file (`n m` then `m` edge lines).
///
/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_parse(text: *const c_char, out: *mut *mut LmlGraph) -> LmlStatus {
    guard(|| {
        let graph = FiniteGraph::parse(c_str(text)?).map_err(invalid)?;
        put(out, boxed(LmlGraph { graph }))?;
        Ok(LmlStatus::Ok)
    })
}

/// The cycle `C_n`, `n >= 3`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_cycle(n: usize, out: *mut *mut LmlGraph) -> LmlStatus {
    guard(|| {
        if n < 3 {
            return Err(invalid("cycles need at least 3 vertices"));
        }
        put(
            out,
            boxed(LmlGraph {
                graph: FiniteGraph::cycle(n),
            }),
        )?;
        Ok(LmlStatus::Ok)
    })
}

/// The `w × h` torus grid.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_torus(w: usize, h: usize, out: *mut *mut LmlGraph) -> LmlStatus {
    guard(|| {
        let graph = fixtures::torus(w, h).map_err(invalid)?;
        put(out, boxed(LmlGraph { graph }))?;
        Ok(LmlStatus::Ok)
    })
}

/// The `w × h` Klein-bottle grid.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_klein(w: usize, h: usize, out: *mut *mut LmlGraph) -> LmlStatus {
    guard(|| {
        let graph = fixtures::klein(w, h).map_err(invalid)?;
        put(out, boxed(LmlGraph { graph }))?;
        Ok(LmlStatus::Ok)
    })
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_vertex_count(graph: *const LmlGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_edge_count(graph: *const LmlGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// The graph in the graph file format.
///
/// # Safety
/// `graph` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_to_text(graph: *const LmlGraph, out: *mut *mut c_char) -> LmlStatus {
    guard(|| {
        put_string(out, handle(graph)?.graph.to_text())?;
        Ok(LmlStatus::Ok)
    })
}

/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lml_graph_free(graph: *mut LmlGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Checks `graph` as a perfect finite `radius`-local model of the Cayley
/// graph. Returns `Ok` on acceptance and `Negative` on rejection; the
/// verdict JSON is written in both cases. `out_json` may be null.
///
/// # Safety
/// Handles must be live; `out_json` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_verify(
    group: *const LmlGroup,
    graph: *const LmlGraph,
    radius: usize,
    out_json: *mut *mut c_char,
) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        let h = handle(graph)?;
        let limits = Limits {
            max_vertices: g.max_vertices,
            ..Limits::default()
        };
        let v = verify_model(&h.graph, &g.engine, &g.s, radius, limits)?;
        if !out_json.is_null() {
            put_json(out_json, "verify", &v)?;
        }
        Ok(if v.accepted { LmlStatus::Ok } else { LmlStatus::Negative })
    })
}

/// Recovers a Schreier graph structure from `graph`. Returns `Ok` on
/// success and `Negative` otherwise; the result JSON is written in both
/// cases. `out_json` may be null.
///
/// # Safety
/// Handles must be live; `out_json` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_reconstruct(
    group: *const LmlGroup,
    graph: *const LmlGraph,
    radius: usize,
    out_json: *mut *mut c_char,
) -> LmlStatus {
    guard(|| {
        let g = handle(group)?;
        let h = handle(graph)?;
        let limits = Limits {
            max_vertices: g.max_vertices,
            ..Limits::default()
        };
        let out = reconstruct(&h.graph, &g.engine, &g.s, &g.presentation, radius, limits)?;
        if !out_json.is_null() {
            put_json(out_json, "reconstruct", &out)?;
        }
        Ok(if out.is_success() {
            LmlStatus::Ok
        } else {
            LmlStatus::Negative
        })
    })
}

/// The witness report for `BS(m, n)` over the ten-element generating set,
/// scanning transitive actions up to `max_degree`. Returns `Negative` when
/// the witness survives some action.
///
/// # Safety
/// `out_json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lml_witness_json(m: u32, n: u32, max_degree: usize, out_json: *mut *mut c_char) -> LmlStatus {
    guard(|| {
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive"));
        }
        let group = BaumslagSolitar::new(m, n);
        let s = GenSet::validate(&group, bs_generating_set()).map_err(invalid)?;
        let rep = witness_report(m, n, max_degree, &s, DEFAULT_MAX_VERTICES)?;
        let trivial = rep.quotient_scan.all_trivial;
        put_json(out_json, "witness", &rep)?;
        Ok(if trivial { LmlStatus::Ok } else { LmlStatus::Negative })
    })
}
