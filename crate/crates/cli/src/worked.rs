use std::process::ExitCode;

use serde_json::json;
use string_complex::complex::connected_components;
use string_complex::construct::{sphere_four_points, surface_library};
use string_complex::gapspace::{
    circle_arc_metric, collinear_points, digraph_gaps, regular_polygon_points, two_parallel_lines, uniform_metric,
};
use string_complex::*;

use crate::args::OutputArgs;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(v: i64) -> Exact {
    Exact::from_integer(v.into())
}

fn complex_at<S: Scalar>(space: &GapSpace<S>, eps: &S) -> Result<StringComplex<S>, String> {
    let strings = enumerate_eps_strings(space, eps, None).map_err(|e| e.to_string())?;
    build_complex(&strings).map_err(|e| e.to_string())
}

fn mod2<S: Scalar>(complex: &StringComplex<S>) -> Result<Vec<usize>, String> {
    homology(complex, Coefficients::Mod2).map(|h| h.betti_mod2).map_err(|e| e.to_string())
}

fn uniform() -> Check {
    let space: ExactSpace = uniform_metric(6).map_err(|e| e.to_string())?;
    let c = complex_at(&space, &q(0))?;
    ensure(c.is_empty(), || format!("{} simplices", c.len()))?;
    Ok("6 points at gap 1: no strings, empty complex".into())
}

fn collinear() -> Check {
    let space: ExactSpace = collinear_points(&[q(0), q(1), q(3), q(7)]).map_err(|e| e.to_string())?;
    let c = complex_at(&space, &q(0))?;
    ensure(c.f_vector() == [4, 6, 4, 1], || format!("f-vector {:?}", c.f_vector()))?;
    Ok("4 points of a line: the full 3-simplex".into())
}

fn circle_sphere() -> Check {
    let positions = [q(0), q(2), q(6), q(8)];
    let space: ExactSpace = circle_arc_metric(&positions, q(12)).map_err(|e| e.to_string())?;
    let c = complex_at(&space, &q(0))?;
    let betti = mod2(&c)?;
    ensure(betti == [1, 0, 1], || format!("Betti {betti:?}"))?;
    let generated: ExactSpace = sphere_four_points();
    ensure(generated.rows() == space.rows(), || "sphere4 differs from the circle arcs".into())?;
    Ok("positions 0,2,6,8 on a circle of length 12: f-vector [4,6,4], Betti (1,0,1)".into())
}

fn parallel_lines() -> Check {
    let space: FloatSpace = two_parallel_lines(3, 4, 1.0, 1.0).map_err(|e| e.to_string())?;
    let c = complex_at(&space, &0.0)?;
    let comps = connected_components(&c, space.len());
    ensure(comps.count == 2, || format!("{} components", comps.count))?;
    Ok("rows of 3 and 4 points: two components".into())
}

fn polygon_circle() -> Check {
    let space: FloatSpace = regular_polygon_points(4, 1).map_err(|e| e.to_string())?;
    let c = complex_at(&space, &0.0)?;
    let betti = mod2(&c)?;
    ensure(betti.len() >= 2 && betti[..2] == [1, 1] && betti[2..].iter().all(|&b| b == 0), || format!("Betti {betti:?}"))?;
    Ok("square with one point inside each edge: Betti (1,1)".into())
}

fn directed_cycle() -> Check {
    let space: ExactSpace = digraph_gaps(3, &[(0, 1, q(1)), (1, 2, q(1)), (2, 0, q(1))]).map_err(|e| e.to_string())?;
    ensure(!space.is_symmetric(), || "symmetric".into())?;
    let c = complex_at(&space, &q(0))?;
    ensure(c.f_vector() == [3, 3, 1], || format!("f-vector {:?}", c.f_vector()))?;
    Ok("directed 3-cycle: asymmetric gaps, one 2-simplex".into())
}

fn surface(name: &str, betti: &[usize]) -> Check {
    let tri = surface_library(name).map_err(|e| e.to_string())?;
    let params = RealizationParams::new(q(1), Exact::new(3.into(), 5.into()), Exact::new(7.into(), 10.into()))
        .map_err(|e| e.to_string())?;
    let space = realize(&tri, &params).map_err(|e| e.to_string())?;
    let report = verify_realization(&space, &tri).map_err(|e| e.to_string())?;
    let h = mod2(&complex_at(&space, &q(0))?)?;
    ensure(h == betti, || format!("Betti {h:?}"))?;
    Ok(format!("{} points, {} flags verified, Betti {h:?}", space.len(), report.flags))
}

pub fn run(output: &OutputArgs) -> anyhow::Result<ExitCode> {
    let mut checks: Vec<(String, Check)> = vec![
        ("uniform metric".into(), uniform()),
        ("collinear points".into(), collinear()),
        ("four points of a circle".into(), circle_sphere()),
        ("two parallel lines".into(), parallel_lines()),
        ("square boundary".into(), polygon_circle()),
        ("directed cycle".into(), directed_cycle()),
    ];
    for (name, betti) in [
        ("sphere", &[1, 0, 1][..]),
        ("torus", &[1, 2, 1]),
        ("klein", &[1, 2, 1]),
        ("rp2", &[1, 1, 1]),
        ("disk", &[1, 0, 0]),
    ] {
        checks.push((format!("{name} realization"), surface(name, betti)));
    }
    let mut table = String::new();
    let mut entries = Vec::new();
    for (name, check) in &checks {
        let (passed, detail) = match check {
            Ok(d) => (true, d.as_str()),
            Err(e) => (false, e.as_str()),
        };
        table.push_str(&format!("{} {name}: {detail}\n", if passed { "PASS" } else { "FAIL" }));
        entries.push(json!({ "name": name, "passed": passed, "detail": detail }));
    }
    let failed = checks.iter().filter(|(_, c)| c.is_err()).count();
    table.push_str(&format!("{} of {} passed\n", checks.len() - failed, checks.len()));
    let doc = json!({ "passed": failed == 0, "examples": entries });
    crate::commands::report(output, &table, &doc)?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
