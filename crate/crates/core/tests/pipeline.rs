mod common;

use surgroup::distinguish::distinguish_report;
use surgroup::fibered::{builtin_monodromy, mapping_torus_presentation};
use surgroup::fox::alexander_polynomial;
use surgroup::homcount::{count_homomorphisms, hom_spectrum, hom_spectrum_parallel};
use surgroup::knot::{validate_peripheral, BuiltinKnot, CHECK_LONGITUDE};
use surgroup::presentation::Presentation;
use surgroup::snf::{abelianization, smith_normal_form, IntegerMatrix};
use surgroup::surgery::{build_family, dehn_surgery_group, half_complement_group, SurgerySlope};
use surgroup::target::{build_suite, extended_suite, standard_suite, TargetSpec, DEFAULT_CAP};
use surgroup::tietze::{tietze_simplify, DEFAULT_BUDGET};
use surgroup::word::Word;

use common::naive_count;

fn s345() -> Vec<surgroup::target::FiniteTarget> {
    let specs = [
        TargetSpec::new("S3", 3, &["(1 2)", "(1 2 3)"]),
        TargetSpec::new("S4", 4, &["(1 2)", "(1 2 3 4)"]),
        TargetSpec::new("S5", 5, &["(1 2)", "(1 2 3 4 5)"]),
    ];
    build_suite(&specs, DEFAULT_CAP).unwrap()
}

fn slope(p: i64, q: i64) -> SurgerySlope {
    SurgerySlope::new(p, q).unwrap()
}

#[test]
fn free_product_of_cyclics_into_s3() {
    let a = Presentation::new(vec!["a"], vec![Word::power_of(0, 3)]).unwrap();
    let b = Presentation::new(vec!["b"], vec![Word::power_of(0, 2)]).unwrap();
    let (ab, _) = a.free_product(&b).unwrap();
    assert_eq!(ab.to_string(), "< a, b | a^3, b^2 >");
    let s3 = &s345()[0];
    assert_eq!(count_homomorphisms(&ab, s3), 12);
    assert_eq!(naive_count(&ab, s3), 12);
}

#[test]
fn three_arc_trefoil_simplifies() {
    // arcs x, y, z with z = x y x^-1, x = y z y^-1, y = z x z^-1
    let p = Presentation::new(
        vec!["x", "y", "z"],
        vec![
            Word::from_pairs([(0, 1), (1, 1), (0, -1), (2, -1)]),
            Word::from_pairs([(1, 1), (2, 1), (1, -1), (0, -1)]),
            Word::from_pairs([(2, 1), (0, 1), (2, -1), (1, -1)]),
        ],
    )
    .unwrap();
    let s = tietze_simplify(&p, DEFAULT_BUDGET);
    assert_eq!(s.num_generators(), 2);
    let suite = s345();
    assert_eq!(hom_spectrum(&p, &suite), hom_spectrum(&s, &suite));
    let braid = hom_spectrum(&BuiltinKnot::Trefoil.knot().group, &suite);
    assert_eq!(hom_spectrum(&s, &suite), braid);
}

#[test]
fn trefoil_counts() {
    let p = Presentation::new(
        vec!["x", "y"],
        vec![Word::from_pairs([(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])],
    )
    .unwrap();
    assert_eq!(count_homomorphisms(&p, &s345()[0]), 12);

    let kp = BuiltinKnot::Trefoil.knot();
    let g = dehn_surgery_group(&kp, slope(1, 1)).unwrap();
    for t in &s345()[..2] {
        assert_eq!(count_homomorphisms(&g, t), naive_count(&g, t));
    }
}

#[test]
fn alexander_polynomials() {
    let expect = [("1", &[1][..]), ("t^2 - t + 1", &[1, -1, 1]), ("t^2 - 3t + 1", &[1, -3, 1])];
    let oracles = [vec![1], common::seifert_alexander([[-1, 1], [0, -1]]), common::seifert_alexander([[1, 1], [0, -1]])];
    for ((k, (text, coeffs)), oracle) in BuiltinKnot::ALL.iter().zip(expect).zip(oracles) {
        let d = alexander_polynomial(&k.knot().group).unwrap();
        assert_eq!(d.to_string(), text);
        assert_eq!(oracle, coeffs);
        assert_eq!(d.eval(1).magnitude().to_string(), "1");
    }
}

#[test]
fn peripheral_systems_validate() {
    let suite = s345();
    for k in BuiltinKnot::ALL {
        let r = validate_peripheral(&k.knot(), &suite);
        assert!(r.passed(), "{k}: {r}");
    }
    for name in ["trefoil", "fig8"] {
        let kp = mapping_torus_presentation(&builtin_monodromy(name).unwrap()).unwrap();
        assert!(validate_peripheral(&kp, &suite).passed());
    }
    let mut bad = BuiltinKnot::Trefoil.knot();
    bad.longitude = bad.longitude.multiply(&Word::power_of(0, 3));
    let r = validate_peripheral(&bad, &suite);
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, vec![CHECK_LONGITUDE]);
}

#[test]
fn monodromy_matches_braids() {
    let suite = s345();
    for (name, k) in [("trefoil", BuiltinKnot::Trefoil), ("fig8", BuiltinKnot::FigureEight)] {
        let mt = mapping_torus_presentation(&builtin_monodromy(name).unwrap()).unwrap();
        assert_eq!(hom_spectrum(&mt.group, &suite), hom_spectrum(&k.knot().group, &suite), "{name}");
        assert_eq!(alexander_polynomial(&mt.group).unwrap(), alexander_polynomial(&k.knot().group).unwrap());
    }
}

#[test]
fn surgery_homology() {
    let unknot = BuiltinKnot::Unknot.knot();
    assert_eq!(abelianization(&dehn_surgery_group(&unknot, slope(2, 5)).unwrap()).to_string(), "Z/5");
    assert_eq!(abelianization(&dehn_surgery_group(&unknot, slope(1, 4)).unwrap()).to_string(), "Z/4");
    let fig8 = BuiltinKnot::FigureEight.knot();
    assert!(abelianization(&dehn_surgery_group(&fig8, slope(2, 3)).unwrap()).is_cyclic_of_order(3));
    for (s, g) in build_family(&fig8, 1, &[1, 2, 3, 4, 5, 6]).unwrap().members {
        assert!(abelianization(&g).is_trivial(), "{s}");
    }
    let fam = build_family(&fig8, 1, &[0]).unwrap();
    let spec = hom_spectrum(&fam.members[0].1, &standard_suite());
    assert!(spec.values().iter().all(|&v| v == 1));
}

#[test]
fn half_matches_surgery_for_trefoil() {
    let kp = BuiltinKnot::Trefoil.knot();
    let suite = standard_suite();
    for p in [1, 2, 3] {
        let d = tietze_simplify(&dehn_surgery_group(&kp, slope(p, 1)).unwrap(), DEFAULT_BUDGET);
        let h = tietze_simplify(&half_complement_group(&kp, slope(p, 1)).unwrap(), DEFAULT_BUDGET);
        assert_eq!(hom_spectrum(&d, &suite), hom_spectrum(&h, &suite));
    }
}

#[test]
fn snf_small_cases() {
    let one = |v: &[i64]| v.iter().map(|&x| x.into()).collect::<Vec<num_bigint::BigInt>>();
    assert_eq!(smith_normal_form(&IntegerMatrix::identity(3)), one(&[1, 1, 1]));
    let d = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
    assert_eq!(smith_normal_form(&d), one(&[1, 6]));
}

#[test]
fn cyclic_targets_on_lens_spaces() {
    let unknot = BuiltinKnot::Unknot.knot();
    let specs: Vec<TargetSpec> = (2..=12)
        .map(|n| {
            let c: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            TargetSpec { name: format!("C{n}"), degree: n, generators: vec![format!("({})", c.join(" "))] }
        })
        .collect();
    let cyclic = build_suite(&specs, DEFAULT_CAP).unwrap();
    for q in 1..=4i64 {
        let g = dehn_surgery_group(&unknot, slope(1, q)).unwrap();
        for (n, t) in (2..=12u128).zip(&cyclic) {
            assert_eq!(count_homomorphisms(&g, t), num_integer::gcd(q as u128, n));
        }
    }
}

#[test]
fn figure_eight_small_family_needs_escalation() {
    let kp = BuiltinKnot::FigureEight.knot();
    let fam = build_family(&kp, 1, &[1, 2, 3]).unwrap();
    let small = s345();
    let spectra: Vec<_> = fam
        .members
        .iter()
        .map(|(s, g)| (s.to_string(), hom_spectrum_parallel(&tietze_simplify(g, DEFAULT_BUDGET), &small)))
        .collect();
    // integral homology spheres: every map to S3, S4, S5 is trivial
    assert!(spectra.iter().all(|(_, s)| s.values() == vec![1, 1, 1]));
    assert_eq!(distinguish_report(&spectra).unwrap().unresolved, 3);

    let ext = extended_suite();
    let spectra: Vec<_> = fam
        .members
        .iter()
        .map(|(s, g)| (s.to_string(), hom_spectrum_parallel(&tietze_simplify(g, DEFAULT_BUDGET), &ext)))
        .collect();
    let r = distinguish_report(&spectra).unwrap();
    assert!(r.all_distinguished(), "{r}");
}
