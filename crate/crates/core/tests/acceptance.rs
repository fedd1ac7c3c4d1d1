//! Acceptance gate: ten criteria covering facet counts, closed-form
//! invariants, shellings, structure checks, exact geometry, and the
//! flag comparison. Each test prints one pass/fail line; a failing
//! criterion prints its line and then panics with the reason.
//!
//! The parameter grid throughout is 3 <= d <= 6, d <= n <= d+6 (strict
//! n > d where a statement needs it).

use braxtope::checks::{
    antistar_check, antistar_check_on, braxial_check, deletion_check, elementary_check,
    flag_conjecture_check, prop1_check, pyramid_check, rd_reduction_check, rd_reduction_check_on,
    realization_check, vertex_figure_check, Verdict,
};
use braxtope::family::VertexSet;
use braxtope::generators::{
    braxtope_facets, cyclic_facets, hypercube_facets, multiplex_facets, rd_braxtope_facets,
    reference_comparand,
};
use braxtope::geometry::{realize_braxtope, RealizeOptions, Realization};
use braxtope::invariants::{binomial, braxtope_f_closed, braxtope_h_closed, HVector};
use braxtope::lattice::{build_lattice, FaceLattice};
use braxtope::shelling::{
    colex_shelling_props, pulling_triangulation, pulling_triangulation_of, shallow_check,
    shelling_check,
};
use std::time::{Duration, Instant};

const GRID_D: std::ops::RangeInclusive<u32> = 3..=6;

fn grid() -> impl Iterator<Item = (u32, u32)> {
    GRID_D.flat_map(|d| (d..=d + 6).map(move |n| (d, n)))
}

fn strict_grid() -> impl Iterator<Item = (u32, u32)> {
    grid().filter(|(d, n)| n > d)
}

fn lattice(d: u32, n: u32) -> FaceLattice {
    build_lattice(n + 1, &braxtope_facets(d, n).unwrap()).unwrap()
}

fn criterion(number: u32, what: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number}: pass - {what}"),
        Err(msg) => {
            println!("criterion {number}: FAIL - {what}: {msg}");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

fn within(start: Instant, bound: Duration, what: &str) -> Result<(), String> {
    let elapsed = start.elapsed();
    if elapsed <= bound {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:?}, bound {bound:?}"))
    }
}

#[test]
fn criterion_01_facet_counts() {
    criterion(1, "facet count is 2n-d+1 across the grid in under 1s", || {
        let start = Instant::now();
        for (d, n) in strict_grid() {
            let family = braxtope_facets(d, n).map_err(|e| e.to_string())?;
            let expected = (2 * n - d + 1) as usize;
            if family.len() != expected {
                return Err(format!(
                    "d={d} n={n}: {} facets, expected {expected}",
                    family.len()
                ));
            }
        }
        within(start, Duration::from_secs(1), "facet generation sweep")
    });
}

#[test]
fn criterion_02_f_vector_closed_form() {
    criterion(2, "lattice f-vectors equal the closed forms in under 30s", || {
        let start = Instant::now();
        for (d, n) in grid() {
            let counted = lattice(d, n).f_vector();
            let closed = braxtope_f_closed(d, n);
            if counted != closed {
                return Err(format!("d={d} n={n}: counted {counted}, closed {closed}"));
            }
        }
        let q46 = lattice(4, 6).f_vector();
        if q46.0 != vec![7, 18, 20, 9] {
            return Err(format!("(4,6) instance gave {q46}"));
        }
        within(start, Duration::from_secs(30), "f-vector sweep")
    });
}

#[test]
fn criterion_03_euler_relation() {
    criterion(3, "Euler relation holds on every built lattice", || {
        let mut lattices: Vec<(String, FaceLattice)> = Vec::new();
        for (d, n) in grid() {
            lattices.push((format!("braxtope d={d} n={n}"), lattice(d, n)));
        }
        for (d, n) in [(3u32, 6u32), (4, 7), (5, 8), (6, 9)] {
            let fam = multiplex_facets(d, n).map_err(|e| e.to_string())?;
            lattices.push((
                format!("multiplex d={d} n={n}"),
                build_lattice(n + 1, &fam).map_err(|e| e.to_string())?,
            ));
            let fam = cyclic_facets(d, n).map_err(|e| e.to_string())?;
            lattices.push((
                format!("cyclic d={d} n={n}"),
                build_lattice(n + 1, &fam).map_err(|e| e.to_string())?,
            ));
        }
        for d in [4u32, 5, 6] {
            let n = d + 3;
            let fam = rd_braxtope_facets(2, d, n).map_err(|e| e.to_string())?;
            lattices.push((
                format!("rd r=2 d={d} n={n}"),
                build_lattice(n + 1, &fam).map_err(|e| e.to_string())?,
            ));
        }
        for d in [3u32, 4] {
            let fam = hypercube_facets(d).map_err(|e| e.to_string())?;
            lattices.push((
                format!("hypercube d={d}"),
                build_lattice(1 << d, &fam).map_err(|e| e.to_string())?,
            ));
        }
        for (name, lat) in &lattices {
            if !lat.f_vector().euler_ok() {
                return Err(format!("{name}: f = {} fails Euler", lat.f_vector()));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_h_vectors() {
    criterion(4, "shelling h and closed-form boundary h match their patterns", || {
        for (d, n) in grid() {
            let delta = pulling_triangulation(d, n).map_err(|e| e.to_string())?;
            let cert = shelling_check(&delta).map_err(|e| e.to_string())?;
            let mut expected = vec![0i64; d as usize + 2];
            expected[0] = 1;
            expected[1] = (n - d) as i64;
            if cert.h_vector() != HVector(expected) {
                return Err(format!("d={d} n={n}: shelling h = {}", cert.h_vector()));
            }
            let mut pattern = vec![1i64];
            pattern.extend(std::iter::repeat((n - d + 1) as i64).take(d as usize - 1));
            pattern.push(1);
            let closed = braxtope_h_closed(d, n);
            if closed != HVector(pattern) {
                return Err(format!("d={d} n={n}: closed h = {closed} off pattern"));
            }
        }
        let cert = shelling_check(&pulling_triangulation(4, 6).unwrap()).unwrap();
        if cert.h_vector().0 != vec![1, 2, 0, 0, 0, 0] {
            return Err(format!("(4,6) shelling h = {}", cert.h_vector()));
        }
        if braxtope_h_closed(4, 6).0 != vec![1, 3, 3, 3, 1] {
            return Err(format!("(4,6) closed h = {}", braxtope_h_closed(4, 6)));
        }
        Ok(())
    });
}

#[test]
fn criterion_05_shallow_triangulations() {
    criterion(5, "pulling triangulations are shallow; the 3-cube is not", || {
        for (d, n) in grid() {
            let lat = lattice(d, n);
            let t = pulling_triangulation(d, n).map_err(|e| e.to_string())?;
            let witnesses = shallow_check(&lat, &t).map_err(|e| e.to_string())?;
            if !witnesses.is_empty() {
                return Err(format!("d={d} n={n}: witness {}", witnesses[0].face));
            }
        }
        let cube = build_lattice(8, &hypercube_facets(3).unwrap()).unwrap();
        let order: Vec<u32> = (0..8).collect();
        let t = pulling_triangulation_of(&cube, &order).map_err(|e| e.to_string())?;
        let witnesses = shallow_check(&cube, &t).map_err(|e| e.to_string())?;
        let diagonal = VertexSet::new(vec![0, 7]);
        if !witnesses.iter().any(|w| w.face == diagonal) {
            return Err("3-cube pulling triangulation lacks the space-diagonal witness".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_06_colex_shelling() {
    criterion(6, "colex facet order shells the boundary across the grid", || {
        for (d, n) in grid() {
            let lat = lattice(d, n);
            let family = lat.facet_family();
            colex_shelling_props(&lat, &family)
                .map_err(|e| format!("d={d} n={n}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_elementary_identity() {
    criterion(7, "the elementary identity vanishes on the grid and not on the 4-cube", || {
        for (d, n) in grid() {
            let rep = elementary_check(d, &lattice(d, n));
            if !rep.passed() {
                return Err(format!("d={d} n={n}: {:?}", rep.notes));
            }
        }
        // Instance (4,6): 60 - 60 + 18 - 28 + 10 = 0.
        let lat = lattice(4, 6);
        let f = lat.f_vector();
        let f02 = lat.flag_vector().get(&[0, 2]) as i64;
        let terms = (
            f02,
            3 * f.f(2) as i64,
            f.f(1) as i64,
            4 * f.f(0) as i64,
            binomial(5, 2) as i64,
        );
        if terms != (60, 60, 18, 28, 10) {
            return Err(format!("(4,6) terms {terms:?}"));
        }
        if terms.0 - terms.1 + terms.2 - terms.3 + terms.4 != 0 {
            return Err("(4,6) identity does not vanish".into());
        }
        let cube = build_lattice(16, &hypercube_facets(4).unwrap()).unwrap();
        let f = cube.f_vector();
        let quantity = cube.flag_vector().get(&[0, 2]) as i64 - 3 * f.f(2) as i64
            + f.f(1) as i64
            - 4 * f.f(0) as i64
            + binomial(5, 2) as i64;
        if quantity != 2 {
            return Err(format!("4-cube control evaluates to {quantity}, expected 2"));
        }
        Ok(())
    });
}

#[test]
fn criterion_08_structure_checks() {
    criterion(8, "structure checks pass on the grid and fail on corrupted inputs", || {
        let options = RealizeOptions::default();
        for (d, n) in grid() {
            let lat = lattice(d, n);
            let named: Vec<(&str, bool)> = vec![
                ("edge-face-structure", prop1_check(d, n, &lat, None).passed()),
                ("facets-are-braxtopes", braxial_check(d, n, &lat).passed()),
                (
                    "vertex-figure-multiplex",
                    vertex_figure_check(d, n, &lat).map_err(|e| e.to_string())?.passed(),
                ),
                (
                    "family-reduction",
                    rd_reduction_check(d, n).map_err(|e| e.to_string())?.passed(),
                ),
                (
                    "antistar-triangulation",
                    antistar_check(d, n).map_err(|e| e.to_string())?.passed(),
                ),
            ];
            for (name, ok) in named {
                if !ok {
                    return Err(format!("d={d} n={n}: {name} failed"));
                }
            }
            if n > d && n + 3 <= 2 * d {
                let rep = pyramid_check(d, n, &lat).map_err(|e| e.to_string())?;
                if !rep.passed() {
                    return Err(format!("d={d} n={n}: pyramid-structure failed"));
                }
            }
            if n > d {
                let real = realize_braxtope(d, n, &options).map_err(|e| e.to_string())?;
                let rep = deletion_check(d, n, &real).map_err(|e| e.to_string())?;
                if !rep.passed() {
                    return Err(format!("d={d} n={n}: last-vertex-deletion failed"));
                }
            }
        }

        // Every failure mode is reachable from corrupted input.
        let cyclic47 = build_lattice(8, &cyclic_facets(4, 7).unwrap()).unwrap();
        if prop1_check(4, 7, &cyclic47, None).passed() {
            return Err("edge-face-structure accepted a neighborly lattice".into());
        }
        let cube = build_lattice(8, &hypercube_facets(3).unwrap()).unwrap();
        if braxial_check(3, 7, &cube).passed() {
            return Err("facets-are-braxtopes accepted the 3-cube".into());
        }
        let cyclic36 = build_lattice(7, &cyclic_facets(3, 6).unwrap()).unwrap();
        if vertex_figure_check(3, 6, &cyclic36).map_err(|e| e.to_string())?.passed() {
            return Err("vertex-figure-multiplex accepted a cyclic lattice".into());
        }
        let mult56 = build_lattice(7, &multiplex_facets(5, 6).unwrap()).unwrap();
        if pyramid_check(5, 6, &mult56).map_err(|e| e.to_string())?.passed() {
            return Err("pyramid-structure accepted a multiplex".into());
        }
        let real = realize_braxtope(3, 5, &options).unwrap();
        let mut points = real.points().to_vec();
        let four = braxtope::geometry::Rational::from_integer(4.into());
        for coord in 0..3 {
            points[2][coord] = [0usize, 1, 3, 4]
                .iter()
                .map(|i| points[*i][coord].clone())
                .sum::<braxtope::geometry::Rational>()
                / &four;
        }
        let sunk = Realization::new(3, points).unwrap();
        if deletion_check(3, 5, &sunk).map_err(|e| e.to_string())?.passed() {
            return Err("last-vertex-deletion accepted a sunk vertex".into());
        }
        let mult47 = multiplex_facets(4, 7).unwrap();
        let brax47 = braxtope_facets(4, 7).unwrap();
        if rd_reduction_check_on(4, 7, &brax47, &mult47)
            .map_err(|e| e.to_string())?
            .passed()
        {
            return Err("family-reduction accepted swapped families".into());
        }
        let mult35 = build_lattice(6, &multiplex_facets(3, 5).unwrap()).unwrap();
        if antistar_check_on(3, 5, &mult35).map_err(|e| e.to_string())?.passed() {
            return Err("antistar-triangulation accepted a multiplex lattice".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_09_exact_realization() {
    criterion(9, "exact realizations at (3,7), (4,8), (5,9), each under 60s", || {
        let options = RealizeOptions::default();
        for (d, n) in [(3u32, 7u32), (4, 8), (5, 9)] {
            let start = Instant::now();
            let real = realize_braxtope(d, n, &options).map_err(|e| e.to_string())?;
            let rep = realization_check(d, n, &real).map_err(|e| e.to_string())?;
            if !rep.passed() {
                return Err(format!(
                    "d={d} n={n}: hull disagrees with the facet family: {:?}",
                    rep.notes
                ));
            }
            within(start, Duration::from_secs(60), &format!("realize d={d} n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_10_flag_comparison() {
    criterion(10, "flag comparison against the pyramid-bipyramid comparand", || {
        for (d, n) in strict_grid() {
            let rep = flag_conjecture_check(d, n).map_err(|e| e.to_string())?;
            if rep.verdict == Verdict::Fail {
                return Err(format!("d={d} n={n}: f-vectors differ: {:?}", rep.notes));
            }
            if rep.verdict != Verdict::ReportOnly {
                return Err(format!("d={d} n={n}: expected a report-only verdict"));
            }
        }
        let q = lattice(4, 6);
        let c = build_lattice(7, &reference_comparand(4, 6).unwrap()).unwrap();
        let (fq, fc) = (q.flag_vector().get(&[0, 3]), c.flag_vector().get(&[0, 3]));
        if (fq, fc) != (38, 38) {
            return Err(format!("(4,6) vertex-facet incidences: {fq} vs {fc}"));
        }
        Ok(())
    });
}
