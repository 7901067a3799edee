//! Schreier graphs of finite-index subgroups and finite quotients, and the
//! witness element that every finite quotient of `BS(m, n)` kills.

mod homs;
mod todd_coxeter;

pub use homs::{enumerate_homs, FiniteQuotientHom, HomError, DEFAULT_MAX_NODES};
pub use todd_coxeter::{todd_coxeter, CosetError, CosetTable};

use crate::balls::{distance_with_cap, BallError, FiniteGraph};
use crate::reconstruct::{DropReport, SchreierGraph};
use crate::words::{BaumslagSolitar, GenSet, Letter, PermutationGroup, Presentation, Word};
use num_integer::Integer;
use serde::Serialize;

/// `σ_s` for each `s ∈ S`, read off the table along the word of `s`, and
/// the simple orbit graph.
pub fn schreier_from_table(table: &CosetTable, s: &GenSet) -> (SchreierGraph, FiniteGraph, DropReport) {
    let sigma = s.elements().iter().map(|w| table.permutation(w)).collect();
    let action = SchreierGraph::new(table.index(), sigma, s).expect("table columns are permutations");
    let (graph, report) = action.underlying_graph();
    (action, graph, report)
}

/// The coset table of the stabilizer of point 0.
pub fn table_of_hom(hom: &FiniteQuotientHom, presentation: &Presentation) -> CosetTable {
    CosetTable::from_permutations(presentation.alphabet().symbols().to_vec(), &hom.images)
}

/// The group acting on the cosets of `subgroup` by right multiplication;
/// with no subgroup generators this is the regular representation.
pub fn permutation_engine(
    presentation: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
) -> Result<(PermutationGroup, CosetTable), CosetError> {
    let table = todd_coxeter(presentation, subgroup, max_cosets)?;
    let images = (0..presentation.rank())
        .map(|g| table.permutation(&Word::power(g, 1)))
        .collect();
    let group = PermutationGroup::new(presentation.alphabet().clone(), table.index(), images)
        .map_err(|_| CosetError::IndexExceedsBound(max_cosets))?;
    Ok((group, table))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("the witness is trivial in the group")]
    TrivialWitness,
    #[error("gcd(m, n) = {c} equals m or n, so [a b^c a^-1, b^c] pinches to the identity")]
    DegenerateGcd { c: u32 },
    #[error("m and n must be positive")]
    BadParameters,
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Ball(#[from] BallError),
}

/// `[a b^c a^-1, b^c]` with `c = gcd(m, n)`; for coprime `m, n` this is
/// `a b a^-1 b a b^-1 a^-1 b^-1`.
pub fn default_witness(m: u32, n: u32) -> Result<Word, WitnessError> {
    if m == 0 || n == 0 {
        return Err(WitnessError::BadParameters);
    }
    let c = m.gcd(&n);
    if c == m || c == n {
        return Err(WitnessError::DegenerateGcd { c });
    }
    let c = c as i64;
    Ok(Word::from_letters(vec![
        Letter::new(0, 1),
        Letter::new(1, c),
        Letter::new(0, -1),
        Letter::new(1, c),
        Letter::new(0, 1),
        Letter::new(1, -c),
        Letter::new(0, -1),
        Letter::new(1, -c),
    ]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientScan {
    pub max_degree: usize,
    /// Conjugacy classes of transitive actions found per degree `1..=max_degree`.
    pub homs_per_degree: Vec<usize>,
    pub homs: usize,
    /// The witness acts as the identity in every action found.
    pub all_trivial: bool,
    /// The witness fixes point 0 in every action found, i.e. lies in every
    /// point stabilizer.
    pub fixes_base_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub m: u32,
    pub n: u32,
    pub witness: String,
    pub normal_form: String,
    pub stable_length: usize,
    pub nontrivial: bool,
    pub quotient_scan: QuotientScan,
    /// `d(e, g)` in `Cay(Γ, S)`.
    pub distance: usize,
}

/// [`witness_report_for`] on the default witness.
pub fn witness_report(
    m: u32,
    n: u32,
    max_degree: usize,
    s: &GenSet,
    max_vertices: usize,
) -> Result<WitnessReport, WitnessError> {
    let w = default_witness(m, n)?;
    witness_report_for(m, n, &w, max_degree, s, max_vertices)
}

/// Checks that `w` is nontrivial by its Britton normal form, that it dies
/// in every transitive action of degree at most `max_degree`, and measures
/// its distance from `e`.
pub fn witness_report_for(
    m: u32,
    n: u32,
    w: &Word,
    max_degree: usize,
    s: &GenSet,
    max_vertices: usize,
) -> Result<WitnessReport, WitnessError> {
    if m == 0 || n == 0 {
        return Err(WitnessError::BadParameters);
    }
    let group = BaumslagSolitar::new(m, n);
    let nf = group.normal_form(w);
    if nf.is_identity() {
        return Err(WitnessError::TrivialWitness);
    }
    let presentation = Presentation::baumslag_solitar(m, n);
    let mut per_degree = Vec::with_capacity(max_degree);
    let mut all_trivial = true;
    let mut fixes_base_point = true;
    for k in 1..=max_degree {
        let homs = enumerate_homs(&presentation, k, DEFAULT_MAX_NODES)?;
        for h in &homs {
            debug_assert!(h.satisfies(&presentation) && h.is_transitive());
            all_trivial &= h.is_identity(w);
            fixes_base_point &= h.act(0, w) == 0;
        }
        per_degree.push(homs.len());
    }
    let distance = distance_with_cap(&group, s, w, max_vertices)?;
    Ok(WitnessReport {
        m,
        n,
        witness: group.alphabet().render(w),
        normal_form: nf.to_string(),
        stable_length: nf.stable_length(),
        nontrivial: true,
        quotient_scan: QuotientScan {
            max_degree,
            homs: per_degree.iter().sum(),
            homs_per_degree: per_degree,
            all_trivial,
            fixes_base_point,
        },
        distance,
    })
}
