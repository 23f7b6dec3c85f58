use milag::darboux::{deformed_potential, CaseName};
use milag::exact::{int, rat, GPoly, Poly, Rational};
use milag::quasi::{seed_solution, wronskian, QuasiFunction, SeedKind, SeedSpec};
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn quasi() -> impl Strategy<Value = QuasiFunction> {
    (-1i64..=1, small_rational(), small_poly(3)).prop_map(|(e, p, poly)| QuasiFunction::new(e, p, poly))
}

proptest! {
    #[test]
    fn derivative_matches_finite_difference(f in quasi(), x in 0.2f64..3.0) {
        let h = 1e-5;
        let fd = (f.eval_f64(x + h) - f.eval_f64(x - h)) / (2.0 * h);
        let d = f.derivative().eval_f64(x);
        let scale = d.abs() + f.eval_f64(x).abs() / x + 1.0;
        prop_assert!((fd - d).abs() <= 1e-6 * scale, "f = {f}, x = {x}: {fd} vs {d}");
    }

    #[test]
    fn swapping_wronskian_rows_flips_sign(a in quasi(), b in quasi(), c in quasi()) {
        let w = wronskian(&[a.clone(), b.clone(), c.clone()]);
        let swapped = wronskian(&[b, a, c]);
        prop_assert_eq!(swapped, w.neg());
    }

    #[test]
    fn type_one_is_type_three_at_reflected_coupling(v in 1usize..=4, g in small_rational()) {
        let one = seed_solution(SeedSpec::new(SeedKind::I, v), &g);
        let three = seed_solution(SeedSpec::new(SeedKind::III, v), &(int(1) - g));
        prop_assert_eq!(one, three);
    }

    #[test]
    fn rational_json_round_trip(r in small_rational()) {
        let s = serde_json::to_string(&milag::exact::rational::to_json(&r)).unwrap();
        let back = milag::exact::rational::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn poly_json_round_trip(p in small_poly(6), c in small_rational()) {
        let p = p.scale(&c);
        let back: Poly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gpoly_json_round_trip(rows in prop::collection::vec(small_poly(3), 1..4)) {
        let p = GPoly::new(rows);
        let back: GPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn quasi_json_round_trip(f in quasi()) {
        let back: QuasiFunction = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn rational_json_form() {
    assert_eq!(serde_json::to_string(&milag::exact::rational::to_json(&rat(-29, 10))).unwrap(), "\"-29/10\"");
    assert_eq!(serde_json::to_string(&milag::exact::rational::to_json(&int(7))).unwrap(), "\"7\"");
}

#[test]
fn wronskian_magic_factorization() {
    let s = |k, v| SeedSpec::new(k, v);
    let lhs = wronskian(&[
        seed_solution(s(SeedKind::III, 1), &rat(3, 4)),
        seed_solution(s(SeedKind::I, 2), &rat(3, 4)),
    ]);
    let phi = seed_solution(s(SeedKind::I, 1), &rat(1, 4));
    let inner = wronskian(&[
        QuasiFunction::from_poly(Poly::from_ints(&[1])),
        QuasiFunction::new(0, rat(1, 2), Poly::from_ints(&[15, 4])),
    ]);
    let rhs = phi.mul(&phi).mul(&inner);
    assert!(lhs.proportional_to(&rhs).is_some(), "{lhs} vs {rhs}");
}

#[test]
fn reflected_seed_at_one_quarter() {
    let one = seed_solution(SeedSpec::new(SeedKind::I, 1), &rat(1, 4));
    assert_eq!(one, QuasiFunction::new(1, rat(1, 4), Poly::from_ints(&[3, 4]).scale(&rat(1, 4))));
    assert_eq!(one, seed_solution(SeedSpec::new(SeedKind::III, 1), &rat(3, 4)));
}

#[test]
fn cases_b_and_c_share_the_potential() {
    let (b, c) = (CaseName::B.spec(), CaseName::C.spec());
    let wb = wronskian(&b.seed_functions());
    let wc = wronskian(&c.seed_functions());
    assert!(wb.poly().proportional_to(wc.poly()).is_some());
    let ub = deformed_potential(&b.g, &b.seeds).unwrap();
    let uc = deformed_potential(&c.g, &c.seeds).unwrap();
    assert_eq!(ub.rational, uc.rational);
}

#[test]
fn case_d_is_case_c_reflected() {
    let wc = wronskian(&CaseName::C.spec().seed_functions());
    let wd = wronskian(&CaseName::D.spec().seed_functions());
    assert_eq!(*wd.poly(), wc.poly().scale_var(&int(-1)));
}
