//! One line per acceptance criterion; exits nonzero if any criterion fails.
//! Runs without the libtest harness so the lines always reach the output.

mod common;

use std::time::Instant;

use alpha_polytope::cli::{run, Command, Loaded};
use alpha_polytope::invariants::{
    alpha_group, alpha_group_delcroix, alpha_mk, alpha_pi_fano, alpha_pi_general, alpha_toric, conjecture_check,
    min_face_set, quantization_m0, SweepOptions, Verdict, Witness,
};
use alpha_polytope::kernel::{Point, Rational};
use alpha_polytope::rootsystem::dominant_points;
use common::{fixture, grid_min_t, pair_sweep, property_suite, q, Check};

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: alpha_polytope::Error) -> String {
    e.to_string()
}

fn mk(l: &Loaded, m: u32, k: u64) -> Result<Rational, String> {
    Ok(alpha_mk(&l.data, m, k, SweepOptions::default()).map_err(err)?.alpha.value)
}

fn criterion_1() -> Check {
    let gl2 = fixture("gl2");
    let a = alpha_group(&gl2.data).map_err(err)?;
    ensure(a.value == q(2, 5), || format!("alpha = {}", a.value))?;
    match &a.witness {
        Witness::FacetVertex { facet, vertex } => {
            ensure(gl2.label(*facet) == "l3", || format!("witness facet {}", gl2.label(*facet)))?;
            ensure(*vertex == Point(vec![q(-1, 2), q(-1, 2)]), || format!("witness vertex {vertex:?}"))?;
        }
        other => return Err(format!("witness {other:?}")),
    }
    let report = run(&Command::Alpha, &gl2, 1, false).map_err(err)?;
    ensure(report.summary == "2/5", || format!("cli summary {}", report.summary))?;
    let qz = quantization_m0(&gl2.data).map_err(err)?;
    ensure(qz.m0 == 2, || format!("m0 = {}", qz.m0))?;
    for m in [2, 4] {
        let v = mk(&gl2, m, 1)?;
        ensure(v == q(2, 5), || format!("alpha_mk(m={m}, k=1) = {v}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let sq = fixture("cp1xcp1");
    let p = sq.data.polytope();
    let a = alpha_toric(p).map_err(err)?.value;
    ensure(a == q(1, 2), || format!("toric alpha = {a}"))?;
    let faces = min_face_set(p).map_err(err)?;
    ensure(faces.len() == 4 && faces.iter().all(|f| f.dimension == 1), || format!("min faces {faces:?}"))?;
    for k in 1..=5usize {
        let c = conjecture_check(p, k, 10).map_err(err)?;
        let Verdict::Holds { m_k, .. } = c.verdict else {
            return Err(format!("k={k}: {:?}", c.verdict));
        };
        let bound = k.div_ceil(2) as u32 + 1;
        ensure(m_k <= bound, || format!("k={k}: m_k = {m_k} > {bound}"))?;
        let v = mk(&sq, m_k, k as u64)?;
        ensure(v == q(1, 2), || format!("alpha_mk(m={m_k}, k={k}) = {v}"))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let l = fixture("cp2-blowup2");
    let p = l.data.polytope();
    let a = alpha_toric(p).map_err(err)?;
    ensure(a.value == q(1, 3), || format!("toric alpha = {}", a.value))?;
    ensure(a.witness == Witness::Vertex(Point::from_ints(&[-1, -1])), || format!("witness {:?}", a.witness))?;
    let c = conjecture_check(p, 2, 10).map_err(err)?;
    ensure(matches!(c.verdict, Verdict::Fails(_)), || format!("conjecture {:?}", c.verdict))?;
    for m in 1..=6 {
        let v = mk(&l, m, 2)?;
        ensure(v > q(1, 3), || format!("alpha_mk(m={m}, k=2) = {v}"))?;
        if m == 1 {
            let oracle = pair_sweep(p, 1);
            ensure(oracle == q(1, 2), || format!("pair-sweep oracle = {oracle}"))?;
            ensure(v == oracle, || format!("alpha_mk(m=1, k=2) = {v}, oracle {oracle}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for (name, n) in [("cp2", 2i64), ("cp3", 3)] {
        let l = fixture(name);
        let p = l.data.polytope();
        let a = alpha_toric(p).map_err(err)?.value;
        ensure(a == q(1, n + 1), || format!("{name}: toric alpha = {a}"))?;
        let faces = min_face_set(p).map_err(err)?;
        let mut verts: Vec<Point> = faces.iter().flat_map(|f| f.vertices.clone()).collect();
        verts.sort();
        ensure(
            faces.len() == n as usize + 1 && faces.iter().all(|f| f.dimension == 0) && verts == p.vertices(),
            || format!("{name}: min faces {faces:?}"),
        )?;
        let c = conjecture_check(p, 2, 10).map_err(err)?;
        ensure(matches!(c.verdict, Verdict::Fails(_)), || format!("{name}: conjecture {:?}", c.verdict))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut instances = 0;
    for name in ["gl2", "cp2-blowup2"] {
        let l = fixture(name);
        for m in 1..=2 {
            let pts = dominant_points(l.data.root_data(), l.data.polytope(), m).map_err(err)?;
            let mut sets: Vec<Vec<Point>> = pts.iter().map(|p| vec![p.clone()]).collect();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    sets.push(vec![pts[i].clone(), pts[j].clone()]);
                }
            }
            for s in sets {
                let ws = l.data.weight_set(m, s.clone()).map_err(err)?;
                let g = alpha_pi_general(&l.data, &ws).map_err(err)?.value;
                let f = alpha_pi_fano(&l.data, &ws).map_err(err)?.value;
                ensure(g == f, || format!("{name} m={m} {s:?}: general {g}, LP {f}"))?;
                instances += 1;
            }
        }
    }
    ensure(instances >= 30, || format!("only {instances} instances"))
}

fn criterion_6() -> Check {
    for name in ["cp1xcp1", "gl2", "cp2-blowup2", "cp2", "cp3"] {
        let l = fixture(name);
        let a = alpha_group(&l.data).map_err(err)?.value;
        let d = alpha_group_delcroix(&l.data).map_err(err)?.value;
        ensure(a == d, || format!("{name}: {a} vs Delcroix {d}"))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    property_suite()
}

fn criterion_8() -> Check {
    for name in ["cp1xcp1", "cp2-blowup2", "cp2", "cp3"] {
        let p = fixture(name).data.polytope().clone();
        let grid = grid_min_t(&p, 12);
        let a = alpha_toric(&p).map_err(err)?.value;
        ensure(grid == a, || format!("{name}: grid min {grid}, toric alpha {a}"))?;
    }
    Ok(())
}

fn main() {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 8] = [
        ("GL2 compactification: alpha, m0 and alpha_mk", criterion_1),
        ("CP1xCP1: toric alpha, min faces, conjecture holds", criterion_2),
        ("CP2 blown up at two points: conjecture fails, sweep stays above 1/3", criterion_3),
        ("CP2 and CP3: toric alpha 1/(n+1), vertex minimizers", criterion_4),
        ("chamber-ray and LP forms of alpha_pi agree", criterion_5),
        ("center-slice and erosion formulas agree", criterion_6),
        ("property suites", criterion_7),
        ("grid oracle at m = 12", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (what, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match &outcome {
            Ok(()) => println!("criterion {}: PASS ({what}) [{ms} ms]", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL ({what}): {e} [{ms} ms]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
