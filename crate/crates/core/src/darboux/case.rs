//! The catalog of cubic-zero cases.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, rat, GPoly, Poly, RatFunc, Rational};
use crate::quasi::{QuasiFunction, RationalQuasi, SeedKind, SeedSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseName {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl CaseName {
    pub const ALL: [CaseName; 8] =
        [CaseName::A, CaseName::B, CaseName::C, CaseName::D, CaseName::E, CaseName::F, CaseName::G, CaseName::H];

    /// The cases with a solution family in the catalog.
    pub const FAMILIES: [CaseName; 6] = [CaseName::A, CaseName::B, CaseName::D, CaseName::E, CaseName::F, CaseName::H];

    /// Rows of the summary table.
    pub const TABLE: [CaseName; 5] = [CaseName::A, CaseName::B, CaseName::D, CaseName::E, CaseName::F];

    pub fn spec(self) -> CaseSpec {
        catalog_entry(self)
    }
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CaseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseName::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }
}

/// The g-parametric Wronskian as displayed: `prefactor(g) · e^{c x²/2} ·
/// x^{power(g)} · bracket(η; g)`, plus the discriminant of the bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericDisplay {
    pub prefactor: Poly,
    pub expo: i64,
    pub power: Poly,
    pub bracket: GPoly,
    pub discriminant: Poly,
    /// Only proportionality is claimed for the discriminant.
    pub discriminant_up_to_constant: bool,
    /// The computed Wronskian is minus the displayed one.
    pub display_sign_flipped: bool,
}

/// `Lₙ = (base + n·per_n)·L_n^{(α)} + deriv·∂_η L_n^{(α)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectFormula {
    pub alpha: Rational,
    pub base: Poly,
    pub per_n: Poly,
    pub deriv: Poly,
}

/// `p2·L″ + p1·L′ + (q0 + n·q1)·L = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyOde {
    pub p2: Poly,
    pub p1: Poly,
    pub q0: Poly,
    pub q1: Poly,
}

/// `constant · e^{−η} η^{exponent} / denominator`, recorded as printed.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub exponent: Rational,
    pub denominator: Poly,
    pub constant: Rational,
}

/// `h_n = poly(n) · Γ(n + shift) / n!`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormFormula {
    pub poly: Poly,
    pub gamma_shift: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtraMember {
    pub n: i64,
    pub poly: Poly,
    pub energy: Rational,
}

/// A one-indexed partner: `U(x; g) − 2 (log φ̃)″` for the given seed.
#[derive(Clone, Debug, PartialEq)]
pub struct Partner {
    pub potential: RatFunc,
    pub seed: SeedSpec,
    pub g: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    /// φ = e^{−η/2} η^{eta_power} Lₙ / denominator.
    pub eta_power: Rational,
    pub denominator: Poly,
    pub degree_offset: usize,
    pub missing: Vec<i64>,
    pub extras: Vec<ExtraMember>,
    pub direct: Option<DirectFormula>,
    /// The `y` coefficient `R(η)` of `η y″ + (b − η) y′ + (R + n) y = 0`.
    pub eta_ode: Option<RatFunc>,
    pub poly_ode: Option<PolyOde>,
    pub weight: Option<Weight>,
    pub norm: Option<NormFormula>,
    /// `e^{w}` and the energy shift in `(w′)² + w″ + shift = U`.
    pub prepotential: Option<(RationalQuasi, Rational)>,
    pub partner: Option<Partner>,
    /// Printed members; the flag marks those given only up to a constant.
    pub printed: Vec<(i64, Poly, bool)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseSpec {
    pub name: CaseName,
    pub seeds: Vec<SeedSpec>,
    pub g: Rational,
    pub generic: Option<GenericDisplay>,
    pub expected_wronskian: QuasiFunction,
    pub expected_potential: RatFunc,
    pub family: Option<Family>,
}

impl CaseSpec {
    pub fn family(&self) -> Result<&Family> {
        self.family.as_ref().ok_or(Error::UnsupportedCase { case: self.name, what: "no solution family is recorded" })
    }

    pub fn seed_functions(&self) -> Vec<QuasiFunction> {
        self.seeds.iter().map(|s| s.solution(&self.g)).collect()
    }

    pub fn seed_energies(&self) -> Vec<Rational> {
        self.seeds.iter().map(|s| s.energy(&self.g)).collect()
    }
}

pub fn catalog() -> Vec<CaseSpec> {
    CaseName::ALL.into_iter().map(catalog_entry).collect()
}

// builders

fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

fn pr(c: &[(i64, i64)]) -> Poly {
    Poly::from_rationals(c)
}

fn fac(f: &[(i64, i64, u32)]) -> Poly {
    Poly::from_factors(f)
}

fn gp(rows: Vec<Poly>) -> GPoly {
    GPoly::new(rows)
}

fn seeds(list: &[(SeedKind, usize)]) -> Vec<SeedSpec> {
    list.iter().map(|&(k, v)| SeedSpec::new(k, v)).collect()
}

fn eta() -> RatFunc {
    RatFunc::poly(Poly::var())
}

fn konst(c: Rational) -> RatFunc {
    RatFunc::constant(c)
}

fn over_eta(c: Rational) -> RatFunc {
    RatFunc::new(Poly::constant(c), Poly::var())
}

fn frac(num: Poly, den: Poly) -> RatFunc {
    RatFunc::new(num, den)
}

fn term(c: i64, base: &Poly, k: u32) -> RatFunc {
    RatFunc::term(p(&[c]), base, k)
}

fn prepot(power: Rational, num: Poly, den: Poly) -> RationalQuasi {
    RationalQuasi::new(-1, power, num, den).expect("nonzero denominator")
}

fn potential_a() -> RatFunc {
    let d = p(&[3, 4]);
    eta() - over_eta(rat(3, 16)) + term(48, &d, 1) - term(288, &d, 2) - konst(rat(13, 2))
}

fn potential_e() -> RatFunc {
    let (d1, d2) = (p(&[6, 1]), p(&[14, 1]));
    eta() + over_eta(rat(195, 4)) - term(144, &d1, 2) + term(12, &d1, 1) - term(112, &d2, 2) + term(4, &d2, 1)
        - konst(int(16))
}

fn catalog_entry(name: CaseName) -> CaseSpec {
    use SeedKind::*;
    let g_lin = |a: i64, b: i64| p(&[a, b]);
    match name {
        CaseName::A => CaseSpec {
            name,
            seeds: seeds(&[(III, 1), (I, 2)]),
            g: rat(3, 4),
            generic: Some(GenericDisplay {
                prefactor: g_lin(1, 2).scale(&rat(1, 16)),
                expo: 2,
                power: Poly::zero(),
                bracket: gp(vec![p(&[-9, 18, 4, -8]), p(&[18, 0, -8]), p(&[12, 8]), p(&[8])]),
                discriminant: fac(&[(-3, 2, 1), (3, 2, 2), (-3, 4, 2)]).scale(&int(2048)),
                discriminant_up_to_constant: false,
                display_sign_flipped: false,
            }),
            expected_wronskian: QuasiFunction::new(2, int(0), fac(&[(3, 4, 3)]).scale(&rat(5, 256))),
            expected_potential: potential_a(),
            family: Some(Family {
                eta_power: rat(3, 8),
                denominator: fac(&[(3, 4, 2)]),
                degree_offset: 3,
                missing: vec![-1],
                extras: vec![ExtraMember { n: -2, poly: p(&[15, 4]), energy: int(-8) }],
                direct: Some(DirectFormula {
                    alpha: rat(1, 4),
                    base: p(&[-117, 156, 208, 64]),
                    per_n: fac(&[(3, 4, 2)]).scale(&int(-4)),
                    deriv: (fac(&[(3, 4, 1), (15, 4, 1)]).shift(1)).scale(&int(-4)),
                }),
                eta_ode: Some(frac(p(&[45, -24, 16]), fac(&[(3, 4, 2)]))),
                poly_ode: Some(PolyOde {
                    p2: fac(&[(3, 4, 1)]).shift(1).scale(&int(4)),
                    p1: -fac(&[(-1, 4, 1), (15, 4, 1)]),
                    q0: p(&[20, 48]),
                    q1: p(&[12, 16]),
                }),
                weight: Some(Weight { exponent: rat(1, 4), denominator: fac(&[(3, 4, 4)]), constant: int(1) }),
                norm: Some(NormFormula { poly: fac(&[(2, 1, 1), (13, 4, 1)]).scale(&int(4)), gamma_shift: rat(5, 4) }),
                prepotential: Some((prepot(rat(3, 4), p(&[15, 4]), fac(&[(3, 4, 2)])), int(-8))),
                partner: Some(Partner {
                    potential: {
                        let (d1, d2) = (p(&[3, 4]), p(&[15, 4]));
                        eta() + over_eta(rat(21, 16)) + term(16, &d1, 1) - term(96, &d1, 2) + term(16, &d2, 1)
                            - term(480, &d2, 2)
                            - konst(rat(9, 2))
                    },
                    seed: SeedSpec::new(I, 2),
                    g: rat(3, 4),
                }),
                printed: vec![
                    (-2, p(&[15, 4]), false),
                    (0, p(&[-117, 156, 208, 64]), false),
                    (1, pr(&[(-765, 4), (408, 1), (408, 1), (0, 1), (-64, 1)]), false),
                    (2, pr(&[(-8505, 32), (6237, 8), (567, 1), (-252, 1), (-168, 1), (32, 1)]), false),
                ],
            }),
        },
        CaseName::B => CaseSpec {
            name,
            seeds: seeds(&[(III, 2), (I, 1)]),
            g: rat(1, 4),
            generic: Some(GenericDisplay {
                prefactor: g_lin(-3, 2).scale(&rat(1, 16)),
                expo: 2,
                power: Poly::zero(),
                bracket: gp(vec![p(&[5, -2, -20, 8]), p(&[10, 16, -8]), p(&[20, -8]), p(&[8])]),
                discriminant: fac(&[(-5, 2, 2), (1, 2, 1), (-1, 4, 2)]).scale(&int(-2048)),
                discriminant_up_to_constant: false,
                display_sign_flipped: false,
            }),
            expected_wronskian: QuasiFunction::new(2, int(0), fac(&[(3, 4, 3)]).scale(&rat(-5, 256))),
            expected_potential: potential_a() + konst(int(1)),
            family: Some(Family {
                eta_power: rat(1, 8),
                denominator: fac(&[(3, 4, 2)]),
                degree_offset: 3,
                missing: vec![-2, -1],
                extras: vec![ExtraMember { n: -3, poly: p(&[1]), energy: int(-12) }],
                direct: Some(DirectFormula {
                    alpha: rat(-1, 4),
                    base: p(&[-63, 252, 240, 64]),
                    per_n: fac(&[(3, 4, 2)]).scale(&int(-4)),
                    deriv: (fac(&[(3, 4, 1), (15, 4, 1)]).shift(1)).scale(&int(-4)),
                }),
                eta_ode: Some(frac(p(&[45, -24, 16]), fac(&[(3, 4, 2)]))),
                poly_ode: Some(PolyOde {
                    p2: fac(&[(3, 4, 1)]).shift(1).scale(&int(4)),
                    p1: -p(&[-9, 64, 16]),
                    q0: p(&[36, 48]),
                    q1: p(&[12, 16]),
                }),
                weight: Some(Weight { exponent: rat(-1, 4), denominator: fac(&[(3, 4, 4)]), constant: int(1) }),
                norm: Some(NormFormula { poly: fac(&[(3, 1, 1), (7, 4, 1)]).scale(&int(4)), gamma_shift: rat(3, 4) }),
                prepotential: Some((prepot(rat(1, 4), p(&[1]), fac(&[(3, 4, 2)])), int(-12))),
                partner: Some(Partner {
                    potential: {
                        let d = p(&[3, 4]);
                        eta() + over_eta(rat(5, 16)) + term(16, &d, 1) - term(96, &d, 2) - konst(rat(7, 2))
                    },
                    seed: SeedSpec::new(I, 1),
                    g: rat(1, 4),
                }),
                printed: vec![
                    (-3, p(&[1]), false),
                    (0, p(&[-63, 252, 240, 64]), false),
                    (1, pr(&[(-297, 4), (396, 1), (264, 1), (-64, 1), (-64, 1)]), false),
                    (2, pr(&[(-2835, 32), (4725, 8), (225, 1), (-300, 1), (-120, 1), (32, 1)]), false),
                ],
            }),
        },
        CaseName::C => CaseSpec {
            name,
            seeds: seeds(&[(III, 2), (II, 1)]),
            g: rat(9, 4),
            generic: Some(GenericDisplay {
                prefactor: p(&[1]).scale(&rat(1, 8)),
                expo: 0,
                power: p(&[3, -2]),
                bracket: gp(vec![p(&[-135, 174, -68, 8]), p(&[-54, 48, -8]), p(&[36, -8]), p(&[8])]),
                discriminant: fac(&[(-9, 2, 2), (-3, 2, 1), (-9, 4, 2)]).scale(&int(-2048)),
                discriminant_up_to_constant: false,
                display_sign_flipped: false,
            }),
            expected_wronskian: QuasiFunction::new(0, rat(-3, 2), fac(&[(3, 4, 3)]).scale(&rat(1, 64))),
            expected_potential: potential_a() + konst(int(1)),
            family: None,
        },
        CaseName::D => CaseSpec {
            name,
            seeds: seeds(&[(III, 1), (II, 2)]),
            g: rat(9, 4),
            generic: Some(GenericDisplay {
                prefactor: p(&[1]).scale(&rat(1, 8)),
                expo: 0,
                power: p(&[3, -2]),
                bracket: gp(vec![p(&[-135, 174, -68, 8]), p(&[54, -48, 8]), p(&[36, -8]), p(&[-8])]),
                discriminant: fac(&[(-9, 2, 2), (-3, 2, 1), (-9, 4, 2)]).scale(&int(-2048)),
                discriminant_up_to_constant: false,
                display_sign_flipped: false,
            }),
            expected_wronskian: QuasiFunction::new(0, rat(-3, 2), fac(&[(-3, 4, 3)]).scale(&rat(-1, 64))),
            expected_potential: {
                let d = p(&[-3, 4]);
                eta() - over_eta(rat(3, 16)) + term(48, &d, 1) + term(288, &d, 2) - konst(rat(11, 2))
            },
            family: Some(Family {
                eta_power: rat(1, 8),
                denominator: fac(&[(-3, 4, 2)]),
                degree_offset: 3,
                missing: vec![-1],
                extras: vec![ExtraMember { n: -2, poly: p(&[1, 4]), energy: int(-8) }],
                direct: Some(DirectFormula {
                    alpha: rat(7, 4),
                    base: fac(&[(3, 4, 1)]) * p(&[63, 0, 16]),
                    per_n: fac(&[(-3, 4, 2)]).shift(1).scale(&int(-16)),
                    deriv: fac(&[(-3, 4, 1), (1, 4, 1)]).shift(1).scale(&int(-36)),
                }),
                eta_ode: Some(frac(-p(&[27, 72, -16]), fac(&[(-3, 4, 2)]))),
                poly_ode: Some(PolyOde {
                    p2: fac(&[(-3, 4, 1)]).shift(1).scale(&int(4)),
                    p1: -fac(&[(1, 4, 1), (9, 4, 1)]),
                    q0: p(&[12, 48]),
                    q1: p(&[-12, 16]),
                }),
                weight: None,
                norm: None,
                prepotential: Some((prepot(rat(1, 4), p(&[1, 4]), fac(&[(-3, 4, 2)])), int(-8))),
                partner: None,
                printed: vec![
                    (-2, p(&[1, 4]), false),
                    (0, fac(&[(3, 4, 1)]) * p(&[63, 0, 16]), false),
                    (1, pr(&[(2079, 4), (0, 1), (792, 1), (-384, 1), (192, 1)]), false),
                    (2, pr(&[(31185, 32), (-10395, 8), (3465, 1), (-2940, 1), (1512, 1), (-224, 1)]), false),
                ],
            }),
        },
        CaseName::E => CaseSpec {
            name,
            seeds: seeds(&[(I, 2), (II, 1)]),
            g: rat(15, 2),
            generic: Some(GenericDisplay {
                prefactor: p(&[1]),
                expo: 0,
                power: Poly::zero(),
                bracket: gp(vec![
                    pr(&[(-9, 16), (0, 1), (5, 2), (0, 1), (-1, 1)]),
                    pr(&[(9, 2), (9, 1), (-2, 1), (-4, 1)]),
                    pr(&[(15, 2), (-4, 1), (-6, 1)]),
                    p(&[-2, -4]),
                    p(&[-1]),
                ]),
                discriminant: fac(&[(-15, 2, 2), (-3, 2, 1), (1, 2, 1), (3, 2, 2)]).scale(&int(-16)),
                discriminant_up_to_constant: false,
                display_sign_flipped: true,
            }),
            expected_wronskian: QuasiFunction::from_poly(fac(&[(6, 1, 3), (14, 1, 1)])),
            expected_potential: potential_e(),
            family: Some(Family {
                eta_power: rat(15, 4),
                denominator: fac(&[(6, 1, 2), (14, 1, 1)]),
                degree_offset: 3,
                missing: vec![],
                extras: vec![],
                direct: Some(DirectFormula {
                    alpha: int(7),
                    base: p(&[840, 280, 30, 1]).scale(&int(-24)),
                    per_n: fac(&[(6, 1, 2), (14, 1, 1)]).scale(&int(-4)),
                    deriv: fac(&[(6, 1, 1), (12, 1, 1)]).shift(1).scale(&int(-16)),
                }),
                eta_ode: Some(frac(p(&[1008, 12, -16, -1]).scale(&int(4)), fac(&[(6, 1, 2), (14, 1, 2)]))),
                poly_ode: Some(PolyOde {
                    p2: fac(&[(6, 1, 1), (14, 1, 1)]).shift(1),
                    p1: -p(&[-672, -8, 18, 1]),
                    q0: p(&[-224, 18, 3]),
                    q1: fac(&[(6, 1, 1), (14, 1, 1)]),
                }),
                weight: Some(Weight {
                    exponent: int(7),
                    denominator: fac(&[(6, 1, 4), (14, 1, 2)]),
                    constant: int(1),
                }),
                norm: Some(NormFormula { poly: fac(&[(10, 1, 1), (6, 1, 1)]).scale(&int(16)), gamma_shift: int(8) }),
                prepotential: Some((
                    prepot(rat(15, 2), p(&[840, 280, 30, 1]), fac(&[(6, 1, 2), (14, 1, 1)])),
                    int(0),
                )),
                partner: None,
                printed: vec![
                    (0, p(&[840, 280, 30, 1]).scale(&int(-24)), false),
                    (1, p(&[-6336, -1320, 44, 22, 1]).scale(&int(28)), false),
                    (2, p(&[54432, 4536, -1944, -180, 12, 1]).scale(&int(-16)), false),
                ],
            }),
        },
        CaseName::F => CaseSpec {
            name,
            seeds: seeds(&[(I, 1), (II, 2)]),
            g: rat(-13, 2),
            generic: Some(GenericDisplay {
                prefactor: p(&[1]),
                expo: 0,
                power: Poly::zero(),
                bracket: gp(vec![
                    pr(&[(15, 16), (-1, 1), (-7, 2), (4, 1), (-1, 1)]),
                    pr(&[(-15, 2), (-7, 1), (14, 1), (-4, 1)]),
                    pr(&[(-5, 2), (16, 1), (-6, 1)]),
                    p(&[6, -4]),
                    p(&[-1]),
                ]),
                discriminant: fac(&[(-5, 2, 2), (-3, 2, 1), (1, 2, 1), (13, 2, 2)]).scale(&int(-16)),
                discriminant_up_to_constant: false,
                display_sign_flipped: false,
            }),
            expected_wronskian: QuasiFunction::from_poly(fac(&[(-14, 1, 1), (-6, 1, 3)]).scale(&int(-1))),
            expected_potential: {
                let (d1, d2) = (p(&[-6, 1]), p(&[-14, 1]));
                eta() + over_eta(rat(195, 4)) + term(144, &d1, 2) + term(12, &d1, 1) + term(112, &d2, 2)
                    + term(4, &d2, 1)
                    + konst(int(12))
            },
            family: Some(Family {
                eta_power: rat(-13, 4),
                denominator: fac(&[(-6, 1, 2), (-14, 1, 1)]),
                degree_offset: 3,
                missing: vec![],
                extras: vec![],
                direct: Some(DirectFormula {
                    alpha: int(-7),
                    base: p(&[-280, 140, -22, 1]).scale(&int(36)),
                    per_n: fac(&[(-6, 1, 2), (-14, 1, 1)]).scale(&int(-4)),
                    deriv: fac(&[(-6, 1, 1), (-12, 1, 1)]).shift(1).scale(&int(-16)),
                }),
                eta_ode: Some(frac(p(&[1008, -12, -16, 1]).scale(&int(-4)), fac(&[(-6, 1, 2), (-14, 1, 2)]))),
                poly_ode: Some(PolyOde {
                    p2: fac(&[(-6, 1, 1), (-14, 1, 1)]).shift(1),
                    p1: -p(&[504, -104, -8, 1]),
                    q0: p(&[-252, -8, 3]),
                    q1: fac(&[(-6, 1, 1), (-14, 1, 1)]),
                }),
                weight: None,
                norm: None,
                prepotential: Some((
                    prepot(rat(-13, 2), p(&[-280, 140, -22, 1]), fac(&[(-6, 1, 2), (-14, 1, 1)])),
                    int(0),
                )),
                partner: None,
                printed: vec![
                    (0, p(&[-280, 140, -22, 1]).scale(&int(36)), false),
                    (1, p(&[-1512, 504, 12, -16, 1]).scale(&int(-32)), false),
                    (2, p(&[-6480, 1080, 396, -42, -12, 1]).scale(&int(14)), false),
                ],
            }),
        },
        CaseName::G => {
            let g2 = |a: i64| (a, 2, 1u32);
            CaseSpec {
                name,
                seeds: seeds(&[(I, 3), (II, 1)]),
                g: rat(39, 10),
                generic: Some(GenericDisplay {
                    prefactor: p(&[1]).scale(&rat(1, 96)),
                    expo: 0,
                    power: Poly::zero(),
                    bracket: gp(vec![
                        fac(&[g2(-3), g2(-1), g2(1), g2(3), g2(5)]),
                        fac(&[g2(-3), g2(1), g2(3), g2(5)]).scale(&int(10)),
                        fac(&[(-1, 1, 1), g2(3), g2(5)]).scale(&int(80)),
                        fac(&[g2(5)]).shift(1).scale(&int(160)),
                        fac(&[g2(3)]).scale(&int(80)),
                        p(&[32]),
                    ]),
                    discriminant: fac(&[(-3, 2, 1), (1, 2, 1), (3, 2, 2), (5, 2, 3), (-39, 10, 2)]),
                    discriminant_up_to_constant: true,
                    display_sign_flipped: false,
                }),
                expected_wronskian: QuasiFunction::from_poly(
                    (fac(&[(12, 5, 3)]) * p(&[2244, 495, 25])).scale(&rat(1, 9375)),
                ),
                expected_potential: {
                    let (d1, d2) = (p(&[12, 5]), p(&[2244, 495, 25]));
                    eta() + over_eta(rat(1131, 100)) - konst(rat(44, 5)) - term(1440, &d1, 2) + term(60, &d1, 1)
                        + RatFunc::term(p(&[0, 165000]), &d2, 2)
                        + RatFunc::term(p(&[-99, 10]).scale(&int(20)), &d2, 1)
                },
                family: None,
            }
        }
        CaseName::H => {
            let quad = p(&[390, 39, 1]);
            let d = p(&[30, 1]);
            CaseSpec {
                name,
                seeds: seeds(&[(I, 1), (II, 1), (II, 2)]),
                g: rat(53, 2),
                generic: None,
                expected_wronskian: QuasiFunction::new(
                    -1,
                    rat(-51, 2),
                    (fac(&[(30, 1, 3)]) * quad.clone()).scale(&int(-4)),
                ),
                expected_potential: eta() + over_eta(rat(2499, 4)) - konst(int(52)) - term(720, &d, 2)
                    + term(12, &d, 1)
                    - RatFunc::term(p(&[0, 312]), &quad, 2)
                    + RatFunc::term(p(&[-39, 2]).scale(&int(4)), &quad, 1),
                family: Some(Family {
                    eta_power: rat(51, 4),
                    denominator: fac(&[(30, 1, 2)]) * quad.clone(),
                    degree_offset: 4,
                    missing: vec![],
                    extras: vec![],
                    direct: None,
                    eta_ode: None,
                    poly_ode: None,
                    weight: Some(Weight {
                        exponent: int(25),
                        denominator: fac(&[(30, 1, 4)]) * quad.pow(2),
                        constant: rat(1, 2),
                    }),
                    norm: None,
                    prepotential: None,
                    partner: None,
                    printed: vec![(0, p(&[425880, 67704, 4004, 104, 1]), true)],
                }),
            }
        }
    }
}

/// Family indices `extras ∪ {0, 1, …, upto}`.
pub fn family_indices(f: &Family, upto: i64) -> Vec<i64> {
    let mut v: Vec<i64> = f.extras.iter().map(|e| e.n).collect();
    v.sort();
    v.extend(0..=upto);
    v
}
