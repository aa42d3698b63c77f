mod common;

use common::*;
use proptest::prelude::*;
use string_complex::construct::{surface_library, Flag};
use string_complex::*;

/// Admissible triangulations from a few random triangles on up to six
/// vertices, with unused vertices dropped.
fn triangulation() -> impl Strategy<Value = Triangulation2D> {
    prop::collection::vec((0usize..6, 0usize..6, 0usize..6), 1..5).prop_filter_map("degenerate", |raw| {
        let mut tris: Vec<[usize; 3]> = Vec::new();
        for (a, b, c) in raw {
            let mut t = [a, b, c];
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] || tris.contains(&t) {
                continue;
            }
            tris.push(t);
        }
        if tris.is_empty() {
            return None;
        }
        let mut used: Vec<usize> = tris.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let relabel = |v: usize| used.binary_search(&v).unwrap();
        let tris: Vec<[usize; 3]> = tris.iter().map(|t| t.map(relabel)).collect();
        Triangulation2D::numbered(used.len(), &tris).ok()
    })
}

/// k > 0 and u, v strictly between k/2 and k.
fn params() -> impl Strategy<Value = RealizationParams<Exact>> {
    (1i64..5, 1i64..20, 1i64..20).prop_map(|(k, a, b)| {
        let k = q(k);
        let at = |t: i64| k.clone() * (r(1, 2) + r(t, 40));
        RealizationParams::new(k.clone(), at(a), at(b)).unwrap()
    })
}

fn flag_distances(space: &ExactSpace, tri: &Triangulation2D, flag: &Flag) -> [Exact; 3] {
    let [v, e, t] = tri.flag_points(flag);
    [space.gap(v, e).clone(), space.gap(e, t).clone(), space.gap(v, t).clone()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn realization_is_a_verified_metric(tri in triangulation(), p in params()) {
        let space = realize(&tri, &p).unwrap();
        prop_assert!(space.validate().ok);
        prop_assert!(space.is_metric());
        for flag in tri.flags() {
            let d = flag_distances(&space, &tri, &flag);
            prop_assert_eq!(d, [p.u.clone(), p.v.clone(), p.u.clone() + p.v.clone()]);
        }
        let report = check_realization(&space, &tri).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn complex_does_not_depend_on_parameters(tri in triangulation(), a in params(), b in params()) {
        let ca = build_complex(&enumerate_eps_strings(&realize(&tri, &a).unwrap(), &q(0), None).unwrap()).unwrap();
        let cb = build_complex(&enumerate_eps_strings(&realize(&tri, &b).unwrap(), &q(0), None).unwrap()).unwrap();
        prop_assert!(ca.same_simplices(&cb));
    }
}

#[test]
fn equal_u_and_v_still_work() {
    let sphere = surface_library("sphere").unwrap();
    let p = RealizationParams::new(q(1), r(3, 4), r(3, 4)).unwrap();
    let report = verify_realization(&realize(&sphere, &p).unwrap(), &sphere).unwrap();
    assert_eq!(report.three_point_strings, 24);
}

#[test]
fn float_realization_matches_exact() {
    let sphere = surface_library("sphere").unwrap();
    let space: FloatSpace = realize(&sphere, &RealizationParams::default()).unwrap();
    assert!(verify_realization(&space, &sphere).unwrap().passed());
}

#[test]
fn subdivision_of_every_surface_is_admissible() {
    for name in string_complex::construct::SURFACE_NAMES {
        let t = surface_library(name).unwrap();
        let sd = barycentric_subdivision(&t);
        assert!(sd.is_admissible(), "{name}");
        assert_eq!(sd.euler_characteristic(), t.euler_characteristic(), "{name}");
        assert_eq!(sd.triangles().len(), 6 * t.triangles().len());
    }
}
