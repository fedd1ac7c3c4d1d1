//! Machine checks for the structural statements about braxtopes. Each
//! check recomputes one claim from first principles on a concrete
//! instance and reports pass/fail with witnesses; conjectural
//! comparisons report findings without failing.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, VertexId, VertexSet};
use crate::generators::{
    braxtope_facets, multiplex_facets, rd_braxtope_facets, reference_comparand,
};
use crate::geometry::{
    affine_rank, hull_facets, realize_braxtope, triangulation_volume, RealizeOptions, Realization,
};
use crate::invariants::{
    binomial, braxtope_f_closed, braxtope_h_closed, h_from_f_simplicial, HVector,
};
use crate::lattice::{build_lattice, FaceLattice};
use crate::shelling::{
    colex_shelling_props, pulling_triangulation, pulling_triangulation_of, shallow_check,
    shelling_check,
};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of one check. Report-only checks record findings that are
/// expected but not established; they never fail a suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

const WITNESS_CAP: usize = 16;
const NOTE_CAP: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub verdict: Verdict,
    pub witnesses: Vec<VertexSet>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn start(name: &'static str, d: u32, n: Option<u32>) -> Self {
        CheckReport {
            name,
            d,
            n,
            r: None,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Record a failure with its witness. Witness and note lists are
    /// capped independently; the verdict records every failure.
    fn fail_on(&mut self, witness: VertexSet, note: impl Into<String>) {
        self.verdict = Verdict::Fail;
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness);
        }
        if self.notes.len() < NOTE_CAP {
            self.notes.push(note.into());
        }
    }

    fn fail_diff(&mut self, ours: &str, theirs: &str, a: &[VertexSet], b: &[VertexSet]) {
        let sa: BTreeSet<&VertexSet> = a.iter().collect();
        let sb: BTreeSet<&VertexSet> = b.iter().collect();
        for s in sa.difference(&sb) {
            self.fail_on((*s).clone(), format!("{s} is {ours} but not {theirs}"));
        }
        for s in sb.difference(&sa) {
            self.fail_on((*s).clone(), format!("{s} is {theirs} but not {ours}"));
        }
    }
}

fn same_sets(a: &[VertexSet], b: &[VertexSet]) -> bool {
    let sa: BTreeSet<&VertexSet> = a.iter().collect();
    let sb: BTreeSet<&VertexSet> = b.iter().collect();
    sa == sb
}

/// Map each set through the positions of its members in `order`.
fn relabel(sets: &[VertexSet], order: &VertexSet) -> Vec<VertexSet> {
    let pos: BTreeMap<VertexId, VertexId> = order
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i as VertexId))
        .collect();
    sets.iter()
        .map(|s| {
            s.iter()
                .map(|v| *pos.get(&v).expect("set lies inside the relabeled order"))
                .collect()
        })
        .collect()
}

fn minus(a: &VertexSet, b: &VertexSet) -> VertexSet {
    a.iter().filter(|v| !b.contains(*v)).collect()
}

/// Edge and low-dimensional face structure of Q^{d,n}: the apex x_0 is
/// joined to every vertex, two later vertices are adjacent exactly when
/// their labels differ by less than d, the apex triangles
/// {x_0, x_{t+1}, x_{t+k}} are 2-faces, the five-vertex sets
/// {x_0, x_t, x_{t+1}, x_{t+d-1}, x_{t+d}} are 3-faces, and consecutive
/// label windows are affinely independent in any realization.
pub fn prop1_check(
    d: u32,
    n: u32,
    lattice: &FaceLattice,
    real: Option<&Realization>,
) -> CheckReport {
    let mut rep = CheckReport::start("edge-face-structure", d, Some(n));
    let mut expected: BTreeSet<(u32, u32)> = (1..=n).map(|u| (0, u)).collect();
    for t in 1..=n {
        for u in t + 1..=n {
            if u - t < d {
                expected.insert((t, u));
            }
        }
    }
    let mut actual: BTreeSet<(u32, u32)> = BTreeSet::new();
    for e in lattice.faces_of_dim(1) {
        if e.len() == 2 {
            actual.insert((e.as_slice()[0], e.as_slice()[1]));
        } else {
            rep.fail_on(e.clone(), format!("one-dimensional face {e} is not a vertex pair"));
        }
    }
    for (a, b) in expected.difference(&actual) {
        let rule = if *a == 0 {
            "the apex is joined to every vertex"
        } else {
            "labels closer than d are adjacent"
        };
        rep.fail_on(
            VertexSet::new(vec![*a, *b]),
            format!("expected edge {{{a} {b}}} is missing ({rule})"),
        );
    }
    for (a, b) in actual.difference(&expected) {
        rep.fail_on(
            VertexSet::new(vec![*a, *b]),
            format!("edge {{{a} {b}}} exists but labels differ by at least d"),
        );
    }

    if d >= 4 {
        for k in 2..=d - 2 {
            for t in 0..=n - k {
                let tri = VertexSet::new(vec![0, t + 1, t + k]);
                if lattice.dim_of(&tri) != Some(2) {
                    rep.fail_on(
                        tri.clone(),
                        format!("apex triangle {tri} is not a two-dimensional face"),
                    );
                }
            }
        }
        for t in 1..=n.saturating_sub(d) {
            let face = VertexSet::new(vec![0, t, t + 1, t + d - 1, t + d]);
            if lattice.dim_of(&face) != Some(3) {
                rep.fail_on(
                    face.clone(),
                    format!("apex window {face} is not a three-dimensional face"),
                );
            }
        }
    } else {
        rep.note("apex triangle and window families are empty for d = 3");
    }

    match real {
        Some(real) => {
            for t in 0..=n.saturating_sub(d) {
                let window = VertexSet::range(t, t + d);
                match real.points_of(&window) {
                    Ok(points) => {
                        let rank = affine_rank(&points);
                        if rank != d as i64 {
                            rep.fail_on(
                                window.clone(),
                                format!(
                                    "vertex window {window} has affine rank {rank}, expected {d}"
                                ),
                            );
                        }
                    }
                    Err(e) => rep.fail_on(window.clone(), format!("window {window}: {e}")),
                }
            }
        }
        None => rep.note("affine independence of vertex windows skipped: no realization supplied"),
    }
    rep
}

/// Deleting the last vertex of a realized Q^{d,n} leaves a realization
/// of Q^{d,n-1}: the truncated hull must reproduce the facet family one
/// step down under the identity labeling.
pub fn deletion_check(d: u32, n: u32, real: &Realization) -> Result<CheckReport> {
    if n < d + 1 {
        return Err(Error::InvalidParams(format!(
            "deletion needs n >= d+1, got d={d} n={n}"
        )));
    }
    if real.dim() != d || real.vertex_count() != n as usize + 1 {
        return Err(Error::InvalidParams(format!(
            "realization has dimension {} with {} points, expected {d} and {}",
            real.dim(),
            real.vertex_count(),
            n + 1
        )));
    }
    let mut rep = CheckReport::start("last-vertex-deletion", d, Some(n));
    let truncated = real.points()[..n as usize].to_vec();
    match Realization::new(d, truncated) {
        Ok(trunc) => {
            let hull = hull_facets(&trunc)?;
            let expected = braxtope_facets(d, n - 1)?;
            if hull.same_sets(&expected) {
                rep.note(format!(
                    "dropping vertex {n} leaves {} facets matching the (d, n-1) family",
                    hull.len()
                ));
            } else {
                rep.fail_diff(
                    "a facet of the truncated hull",
                    "a facet of the (d, n-1) family",
                    hull.facets(),
                    expected.facets(),
                );
            }
        }
        Err(e) => {
            rep.fail_on(
                VertexSet::range(0, n - 1),
                format!("deleting the last vertex leaves a degenerate point set: {e}"),
            );
        }
    }
    Ok(rep)
}

/// Every facet of a braxtope is itself a braxtope on its induced
/// vertex order: relabel each facet's vertices by position and compare
/// its ridge family with the one-dimension-down facet family.
pub fn braxial_check(d: u32, n: u32, lattice: &FaceLattice) -> CheckReport {
    let mut rep = CheckReport::start("facets-are-braxtopes", d, Some(n));
    if d < 1 {
        rep.fail_on(lattice.support().clone(), "dimension must be positive");
        return rep;
    }
    let facets = lattice.facets();
    for facet in &facets {
        let m = facet.len() as u32 - 1;
        let ridges = match lattice.facets_of_face(facet) {
            Ok(r) => r,
            Err(e) => {
                rep.fail_on(facet.clone(), format!("facet {facet}: {e}"));
                continue;
            }
        };
        let relabeled = relabel(&ridges, facet);
        match braxtope_facets(d - 1, m) {
            Ok(expected) if same_sets(&relabeled, expected.facets()) => {}
            Ok(_) => rep.fail_on(
                facet.clone(),
                format!("facet {facet} is not a braxtope on its induced vertex order"),
            ),
            Err(e) => rep.fail_on(
                facet.clone(),
                format!("facet {facet} cannot carry a braxtope structure: {e}"),
            ),
        }
    }
    if rep.passed() {
        rep.note(format!(
            "all {} facets are braxtopes on their induced vertex orders",
            facets.len()
        ));
    }
    rep
}

/// The vertex figure at the apex x_0 is a (d-1)-multiplex on the
/// induced order x_1 < ... < x_n. Three families must coincide: the
/// figure computed from the lattice, the window formula with indices
/// clamped to [1, n], and the shifted multiplex family.
pub fn vertex_figure_check(d: u32, n: u32, lattice: &FaceLattice) -> Result<CheckReport> {
    let mut rep = CheckReport::start("vertex-figure-multiplex", d, Some(n));
    if d < 2 || n < d {
        return Err(Error::InvalidParams(format!(
            "vertex figure comparison needs n >= d >= 2, got d={d} n={n}"
        )));
    }
    let figure = lattice.vertex_figure(0)?;
    let computed = figure.facet_family();

    let clamp = |t: i64| -> VertexId { t.clamp(1, n as i64) as VertexId };
    let (di, ni) = (d as i64, n as i64);
    let mut formula: Vec<VertexSet> = vec![VertexSet::range(1, d - 1)];
    for j in 2..=ni {
        let mut v: Vec<VertexId> = (j - di + 2..=j - 1).map(clamp).collect();
        v.extend((j + 1..=j + di - 2).map(clamp));
        formula.push(VertexSet::new(v));
    }

    let shifted: Vec<VertexSet> = multiplex_facets(d - 1, n - 1)?
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| v + 1).collect())
        .collect();

    if !same_sets(&formula, &shifted) {
        rep.fail_diff(
            "a clamped-window facet",
            "a shifted multiplex facet",
            &formula,
            &shifted,
        );
    }
    if !same_sets(computed.facets(), &formula) {
        rep.fail_diff(
            "a facet of the computed vertex figure",
            "a clamped-window facet",
            computed.facets(),
            &formula,
        );
    }
    if rep.passed() {
        rep.note(format!(
            "vertex figure at the apex is the (d-1)-multiplex on labels 1..{n} ({} facets)",
            computed.len()
        ));
    }
    Ok(rep)
}

/// For d+1 <= n <= 2d-3 the braxtope is an iterated pyramid: each label
/// in n-d+2..=d-1 is an apex lying on every facet but one, and deleting
/// all apices from the facets that contain them leaves the facet family
/// of a lower braxtope on the remaining labels.
pub fn pyramid_check(d: u32, n: u32, lattice: &FaceLattice) -> Result<CheckReport> {
    if !(n > d && n + 3 <= 2 * d) {
        return Err(Error::InvalidParams(format!(
            "pyramid structure applies for d+1 <= n <= 2d-3, got d={d} n={n}"
        )));
    }
    let mut rep = CheckReport::start("pyramid-structure", d, Some(n));
    let apices = VertexSet::range(n - d + 2, d - 1);
    let facets = lattice.facets();
    for u in apices.iter() {
        let missing = facets.iter().filter(|f| !f.contains(u)).count();
        if missing != 1 {
            rep.fail_on(
                VertexSet::singleton(u),
                format!("apex {u} is absent from {missing} facets, expected exactly 1"),
            );
        }
    }
    let base: Vec<VertexSet> = facets
        .iter()
        .filter(|f| apices.is_subset(f))
        .map(|f| minus(f, &apices))
        .collect();
    let remaining = minus(lattice.support(), &apices);
    let relabeled = relabel(&base, &remaining);
    let expected = braxtope_facets(n - d + 2, 2 * (n - d + 1))?;
    if !same_sets(&relabeled, expected.facets()) {
        rep.fail_diff(
            "a stripped facet of the claimed pyramid",
            "a facet of the base braxtope",
            &relabeled,
            expected.facets(),
        );
    }
    if rep.passed() {
        rep.note(format!(
            "{}-fold pyramid over the base braxtope on labels {remaining}",
            apices.len()
        ));
    }
    Ok(rep)
}

/// Lattice-counted f-vector equals the closed form entrywise, and the
/// Euler relation holds.
pub fn fvector_check(d: u32, n: u32, lattice: &FaceLattice) -> CheckReport {
    let mut rep = CheckReport::start("f-vector-closed-form", d, Some(n));
    let counted = lattice.f_vector();
    let closed = braxtope_f_closed(d, n);
    if counted != closed {
        rep.fail_on(
            lattice.support().clone(),
            format!("counted f = {counted}, closed form f = {closed}"),
        );
    }
    if !counted.euler_ok() {
        rep.fail_on(
            lattice.support().clone(),
            format!("alternating sum of f = {counted} violates the Euler relation"),
        );
    }
    if rep.passed() {
        rep.note(format!("f = {counted} matches the closed form; Euler relation holds"));
    }
    rep
}

/// The elementary identity f_{{0,2}} - 3 f_2 + f_1 - d f_0 + C(d+1,2) = 0,
/// together with the supporting fact that every 2-face is a triangle.
pub fn elementary_check(d: u32, lattice: &FaceLattice) -> CheckReport {
    let mut rep = CheckReport::start("elementary-identity", d, None);
    let f = lattice.f_vector();
    let flags = lattice.flag_vector();
    let quantity = flags.get(&[0, 2]) as i128 - 3 * f.f(2) as i128 + f.f(1) as i128
        - d as i128 * f.f(0) as i128
        + binomial(d as i64 + 1, 2) as i128;
    let mut all_triangles = true;
    for face in lattice.faces_of_dim(2) {
        if face.len() != 3 {
            all_triangles = false;
            rep.fail_on(
                face.clone(),
                format!("two-dimensional face {face} has {} vertices", face.len()),
            );
        }
    }
    if quantity != 0 {
        let witness = if all_triangles {
            lattice.support().clone()
        } else {
            rep.witnesses[0].clone()
        };
        rep.fail_on(
            witness,
            format!("identity evaluates to {quantity}, expected 0"),
        );
    }
    if rep.passed() {
        rep.note(format!(
            "identity evaluates to 0; all {} two-dimensional faces are triangles",
            f.f(2)
        ));
    }
    rep
}

/// Compare Q^{d,n} against the (d-3)-fold pyramid over the bipyramid
/// over an (n-d+2)-gon. f-vector equality is asserted; flag-vector
/// equality is conjectural and reported without failing.
pub fn flag_conjecture_check(d: u32, n: u32) -> Result<CheckReport> {
    if !(d >= 3 && n > d) {
        return Err(Error::InvalidParams(format!(
            "flag comparison needs n > d >= 3, got d={d} n={n}"
        )));
    }
    let mut rep = CheckReport::start("flag-comparison", d, Some(n));
    rep.verdict = Verdict::ReportOnly;
    let q = build_lattice(n + 1, &braxtope_facets(d, n)?)?;
    let c = build_lattice(n + 1, &reference_comparand(d, n)?)?;
    let (fq, fc) = (q.f_vector(), c.f_vector());
    if fq != fc {
        rep.fail_on(
            q.support().clone(),
            format!("f-vectors differ: braxtope {fq}, comparand {fc}"),
        );
        return Ok(rep);
    }
    rep.note(format!("f-vectors agree: {fq}"));
    let (gq, gc) = (q.flag_vector(), c.flag_vector());
    if gq == gc {
        rep.note(format!(
            "flag vectors agree on all {} entries (finding consistent with the conjecture)",
            gq.len()
        ));
    } else {
        let mut shown = 0;
        for (key, vq) in &gq.0 {
            let vc = gc.get(key);
            if *vq != vc && shown < 8 {
                rep.note(format!(
                    "flag {key:?} differs: braxtope {vq}, comparand {vc} (finding, not a failure)"
                ));
                shown += 1;
            }
        }
    }
    Ok(rep)
}

/// h-vector consistency: the pulling triangulation shells with
/// restriction counts (1, n-d, 0, ..., 0), the same vector falls out of
/// the f-to-h transform applied to the triangulation's face counts, and
/// for d = 3 the closed-form boundary h-vector agrees with the
/// transform of the closed-form f-vector.
pub fn h_consistency_check(d: u32, n: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::start("h-consistency", d, Some(n));
    let delta = pulling_triangulation(d, n)?;
    let cert = shelling_check(&delta)?;
    let h_delta = cert.h_vector();
    let mut expected = vec![0i64; d as usize + 2];
    expected[0] = 1;
    expected[1] = (n - d) as i64;
    let expected = HVector(expected);
    if h_delta != expected {
        rep.fail_on(
            VertexSet::range(0, n),
            format!("shelling h of the pulling triangulation is {h_delta}, expected {expected}"),
        );
    }
    let h_f = h_from_f_simplicial(&delta.f_vector(), d as usize + 1);
    if h_f != h_delta {
        rep.fail_on(
            VertexSet::range(0, n),
            format!("f-to-h transform gives {h_f}, shelling count gives {h_delta}"),
        );
    }
    let closed = braxtope_h_closed(d, n);
    if d == 3 {
        let from_f = h_from_f_simplicial(&braxtope_f_closed(d, n), d as usize);
        if from_f != closed {
            rep.fail_on(
                VertexSet::range(0, n),
                format!("boundary transform gives {from_f}, closed form gives {closed}"),
            );
        }
    } else {
        rep.note("boundary is not simplicial for d >= 4; closed-form h is the stated pattern");
    }
    if rep.passed() {
        rep.note(format!(
            "triangulation h = {h_delta}; boundary h = {closed}; their relation rests on an external result not re-derived here"
        ));
    }
    Ok(rep)
}

/// The two-parameter family degenerates correctly: r = 0 reproduces the
/// multiplex, r = 1 reproduces the braxtope. For r = 2 the generated
/// family is reported (graded lattice and f-vector) without any claim
/// of polytopality.
pub fn rd_reduction_check(d: u32, n: u32) -> Result<CheckReport> {
    let mult = multiplex_facets(d, n)?;
    let brax = braxtope_facets(d, n)?;
    rd_reduction_check_on(d, n, &mult, &brax)
}

/// Same comparison against caller-supplied families, so a corrupted
/// family demonstrably fails.
pub fn rd_reduction_check_on(
    d: u32,
    n: u32,
    multiplex: &FacetFamily,
    braxtope: &FacetFamily,
) -> Result<CheckReport> {
    let mut rep = CheckReport::start("family-reduction", d, Some(n));
    let r0 = rd_braxtope_facets(0, d, n)?;
    let r1 = rd_braxtope_facets(1, d, n)?;
    if !r0.same_sets(multiplex) {
        rep.fail_diff(
            "an r=0 facet",
            "a multiplex facet",
            r0.facets(),
            multiplex.facets(),
        );
    }
    if !r1.same_sets(braxtope) {
        rep.fail_diff(
            "an r=1 facet",
            "a braxtope facet",
            r1.facets(),
            braxtope.facets(),
        );
    }
    if rep.passed() {
        rep.note("r=0 equals the multiplex family; r=1 equals the braxtope family");
    }
    if d >= 4 {
        match rd_braxtope_facets(2, d, n).and_then(|f| Ok((build_lattice(n + 1, &f)?, f))) {
            Ok((lat, fam)) => rep.note(format!(
                "r=2 family has {} facets; lattice is graded with f = {} (no polytopality claim)",
                fam.len(),
                lat.f_vector()
            )),
            Err(e) => rep.note(format!(
                "r=2 family does not form a graded lattice: {e} (finding, not a failure)"
            )),
        }
    }
    Ok(rep)
}

/// The antistar of the apex (all faces avoiding x_0) has the window
/// simplices T_1..T_{n-d+1} as its maximal faces; they cover the other
/// vertices, and the ridges lying in exactly one window simplex form
/// the boundary (d-1)-multiplex on labels 1..n.
pub fn antistar_check(d: u32, n: u32) -> Result<CheckReport> {
    let fam = braxtope_facets(d, n)?;
    let lattice = build_lattice(n + 1, &fam)?;
    antistar_check_on(d, n, &lattice)
}

/// Same verification against a caller-supplied lattice.
pub fn antistar_check_on(d: u32, n: u32, lattice: &FaceLattice) -> Result<CheckReport> {
    if d < 3 || n < d {
        return Err(Error::InvalidParams(format!(
            "antistar comparison needs n >= d >= 3, got d={d} n={n}"
        )));
    }
    let mut rep = CheckReport::start("antistar-triangulation", d, Some(n));
    let anti: Vec<VertexSet> = lattice
        .all_faces()
        .into_iter()
        .filter(|(f, _)| !f.is_empty() && !f.contains(0))
        .map(|(f, _)| f)
        .collect();
    let maximal: Vec<VertexSet> = anti
        .iter()
        .filter(|f| !anti.iter().any(|g| *f != g && f.is_subset(g)))
        .cloned()
        .collect();
    let cells: Vec<VertexSet> = (1..=n - d + 1).map(|i| VertexSet::range(i, i + d - 1)).collect();
    if !same_sets(&maximal, &cells) {
        rep.fail_diff(
            "a maximal antistar face",
            "a window simplex",
            &maximal,
            &cells,
        );
    }
    let union = cells
        .iter()
        .fold(VertexSet::empty(), |acc, c| acc.union(c));
    if union != VertexSet::range(1, n) {
        rep.fail_on(
            union.clone(),
            format!("window simplices cover {union}, expected all of 1..{n}"),
        );
    }

    // Ridges in exactly one window simplex triangulate the boundary of
    // the (d-1)-multiplex on labels 1..n: each lies in a unique
    // multiplex facet, together they cover every multiplex facet, and a
    // simplex multiplex facet is its own unique boundary ridge. Ridges
    // shared by two cells are interior, never multiplex facets.
    let mut ridge_count: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for cell in &cells {
        for v in cell.iter() {
            *ridge_count.entry(cell.without(v)).or_insert(0) += 1;
        }
    }
    let shifted: Vec<VertexSet> = multiplex_facets(d - 1, n - 1)?
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| v + 1).collect())
        .collect();
    for (ridge, count) in &ridge_count {
        if *count == 1 {
            let containers = shifted.iter().filter(|f| ridge.is_subset(f)).count();
            if containers != 1 {
                rep.fail_on(
                    ridge.clone(),
                    format!(
                        "boundary ridge {ridge} lies in {containers} multiplex facets, expected exactly one"
                    ),
                );
            }
        } else if shifted.contains(ridge) {
            rep.fail_on(
                ridge.clone(),
                format!("ridge {ridge} shared by {count} cells is nonetheless a multiplex facet"),
            );
        }
    }
    for facet in &shifted {
        let inside: Vec<&VertexSet> = ridge_count
            .iter()
            .filter(|(r, c)| **c == 1 && r.is_subset(facet))
            .map(|(r, _)| r)
            .collect();
        let union = inside
            .iter()
            .fold(VertexSet::empty(), |acc, r| acc.union(r));
        if union != *facet {
            rep.fail_on(
                facet.clone(),
                format!("boundary ridges inside multiplex facet {facet} cover only {union}"),
            );
        }
        if facet.len() == d as usize - 1 && !(inside.len() == 1 && *inside[0] == *facet) {
            rep.fail_on(
                facet.clone(),
                format!("simplex multiplex facet {facet} is not its own unique boundary ridge"),
            );
        }
    }
    if rep.passed() {
        rep.note(format!(
            "antistar has {} maximal simplices triangulating the (d-1)-multiplex on labels 1..{n}",
            cells.len()
        ));
        rep.note(
            "descriptions listing one fewer simplex omit the last window; the verified count is n-d+1",
        );
    }
    Ok(rep)
}

/// A fresh realization reproduces the facet family under the
/// brute-force hull oracle, and every consecutive vertex window is
/// affinely independent.
pub fn realization_check(d: u32, n: u32, real: &Realization) -> Result<CheckReport> {
    let mut rep = CheckReport::start("realization-oracle", d, Some(n));
    if real.dim() != d || real.vertex_count() != n as usize + 1 {
        return Err(Error::InvalidParams(format!(
            "realization has dimension {} with {} points, expected {d} and {}",
            real.dim(),
            real.vertex_count(),
            n + 1
        )));
    }
    let hull = hull_facets(real)?;
    let expected = braxtope_facets(d, n)?;
    if !hull.same_sets(&expected) {
        rep.fail_diff(
            "a hull facet",
            "a generated facet",
            hull.facets(),
            expected.facets(),
        );
    }
    for t in 0..=n - d {
        let window = VertexSet::range(t, t + d);
        let rank = affine_rank(&real.points_of(&window)?);
        if rank != d as i64 {
            rep.fail_on(
                window.clone(),
                format!("vertex window {window} has affine rank {rank}, expected {d}"),
            );
        }
    }
    if rep.passed() {
        rep.note(format!(
            "{} exact rational points; hull oracle reproduces all {} facets",
            real.vertex_count(),
            expected.len()
        ));
    }
    Ok(rep)
}

/// The pulling triangulation covers the polytope: every facet avoiding
/// the apex is a wall of its cell, and the total simplex volume equals
/// the volume obtained from an independently ordered triangulation.
pub fn cover_check(d: u32, n: u32, real: &Realization) -> Result<CheckReport> {
    let mut rep = CheckReport::start("triangulation-cover", d, Some(n));
    if real.dim() != d || real.vertex_count() != n as usize + 1 {
        return Err(Error::InvalidParams(format!(
            "realization has dimension {} with {} points, expected {d} and {}",
            real.dim(),
            real.vertex_count(),
            n + 1
        )));
    }
    let fam = braxtope_facets(d, n)?;
    let delta = pulling_triangulation(d, n)?;
    for facet in fam.facets() {
        if facet.contains(0) {
            continue;
        }
        let covered = delta
            .cells()
            .iter()
            .any(|cell| facet.is_subset(cell) && facet.len() + 1 == cell.len());
        if !covered {
            rep.fail_on(
                facet.clone(),
                format!("facet {facet} avoiding the apex is not a wall of any cell"),
            );
        }
    }
    let lattice = build_lattice(n + 1, &fam)?;
    let reversed: Vec<VertexId> = (0..=n).rev().collect();
    let alt = pulling_triangulation_of(&lattice, &reversed)?;
    let vol = triangulation_volume(real, delta.cells())?;
    let alt_vol = triangulation_volume(real, alt.cells())?;
    if vol != alt_vol {
        rep.fail_on(
            lattice.support().clone(),
            format!("cell volumes sum to {vol}, an independent triangulation gives {alt_vol}"),
        );
    }
    if rep.passed() {
        rep.note(format!(
            "{} cells cover the polytope; total volume {vol} confirmed by a second triangulation",
            delta.cells().len()
        ));
    }
    Ok(rep)
}

/// Shallowness of the generic pulling triangulation of the target
/// lattice: every triangulation face sits in a polytope face of at most
/// twice its dimension.
pub fn shallow_triangulation_check(d: u32, n: u32, lattice: &FaceLattice) -> Result<CheckReport> {
    let mut rep = CheckReport::start("shallow-triangulation", d, Some(n));
    let priority: Vec<VertexId> = lattice.support().iter().collect();
    let t = pulling_triangulation_of(lattice, &priority)?;
    let witnesses = shallow_check(lattice, &t)?;
    for w in &witnesses {
        rep.fail_on(
            w.face.clone(),
            format!(
                "face {} lies in no polytope face smaller than {} (dimension {}, bound {})",
                w.face,
                w.container,
                w.container_dim,
                2 * (w.face.len() as i64 - 1)
            ),
        );
    }
    if rep.passed() {
        rep.note(format!(
            "all faces of the {}-cell pulling triangulation are shallow",
            t.cells().len()
        ));
    }
    Ok(rep)
}

/// The colex facet order is a shelling of the boundary: unique minimal
/// new face at each step, simplex restrictions, Boolean quotients.
pub fn colex_shelling_check(d: u32, n: u32, lattice: &FaceLattice) -> Result<CheckReport> {
    let mut rep = CheckReport::start("colex-shelling", d, Some(n));
    let family = lattice.facet_family();
    match colex_shelling_props(lattice, &family) {
        Ok(restrictions) => {
            rep.note(format!(
                "all {} steps have a unique minimal new face with Boolean quotient",
                restrictions.len()
            ));
        }
        Err(Error::ColexProperty {
            step,
            property,
            facet,
        }) => {
            let what = match property {
                'a' => "no unique minimal new face",
                'b' => "minimal new face is not a simplex",
                _ => "interval up to the facet is not Boolean",
            };
            rep.fail_on(facet.clone(), format!("step {step} ({facet}): {what}"));
        }
        Err(e) => return Err(e),
    }
    Ok(rep)
}

/// Named groups of checks exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Prop1,
    Braxial,
    Shelling,
    Geometry,
    Conjectures,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "all" => Ok(Suite::All),
            "prop1" => Ok(Suite::Prop1),
            "braxial" => Ok(Suite::Braxial),
            "shelling" => Ok(Suite::Shelling),
            "geometry" => Ok(Suite::Geometry),
            "conjectures" => Ok(Suite::Conjectures),
            other => Err(Error::InvalidParams(format!(
                "unknown suite {other:?}; expected all, prop1, braxial, shelling, geometry, or conjectures"
            ))),
        }
    }
}

/// What a suite runs against: parameters, the lattice to interrogate,
/// and optionally a realization (used for the affine-independence part
/// of the edge-face check).
pub struct SuiteTarget {
    pub d: u32,
    pub n: u32,
    pub lattice: FaceLattice,
    pub realization: Option<Realization>,
}

impl SuiteTarget {
    /// Target generated from the defining formulas.
    pub fn generated(d: u32, n: u32) -> Result<SuiteTarget> {
        let lattice = build_lattice(n + 1, &braxtope_facets(d, n)?)?;
        Ok(SuiteTarget {
            d,
            n,
            lattice,
            realization: None,
        })
    }
}

/// Run one suite against a target. Geometry checks realize the
/// parameters afresh with the supplied options; combinatorial checks
/// interrogate the target's lattice, so corrupted input fails visibly.
pub fn run_suite(
    target: &SuiteTarget,
    suite: Suite,
    options: &RealizeOptions,
) -> Result<Vec<CheckReport>> {
    let (d, n) = (target.d, target.n);
    let lat = &target.lattice;
    let mut reports = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;

    if wants(Suite::Prop1) {
        reports.push(prop1_check(d, n, lat, target.realization.as_ref()));
    }
    if wants(Suite::Braxial) {
        reports.push(braxial_check(d, n, lat));
        reports.push(vertex_figure_check(d, n, lat)?);
        if n > d && n + 3 <= 2 * d {
            reports.push(pyramid_check(d, n, lat)?);
        }
        reports.push(fvector_check(d, n, lat));
        reports.push(elementary_check(d, lat));
        reports.push(rd_reduction_check(d, n)?);
    }
    if wants(Suite::Shelling) {
        reports.push(h_consistency_check(d, n)?);
        reports.push(shallow_triangulation_check(d, n, lat)?);
        reports.push(colex_shelling_check(d, n, lat)?);
        reports.push(antistar_check(d, n)?);
    }
    if wants(Suite::Geometry) {
        let real = realize_braxtope(d, n, options)?;
        reports.push(realization_check(d, n, &real)?);
        if n > d {
            reports.push(deletion_check(d, n, &real)?);
        }
        reports.push(cover_check(d, n, &real)?);
    }
    if wants(Suite::Conjectures) && n > d {
        reports.push(flag_conjecture_check(d, n)?);
    }
    Ok(reports)
}
