//! Built-in verification suite: golden checks of the worked examples this
//! library reproduces, plus randomized identity suites over the closed
//! forms. The CLI `verify-paper` subcommand prints one pass/fail line per
//! item; the acceptance tests run the same checks with timing budgets.

use crate::analysis::{
    boundary_check, critical_points, csc_rays, default_tolerance, null_scalar_rays, scan_l2,
    stability_verdict, Classification, CriticalSource, VerdictKind,
};
use crate::extremal::{admissibility_boundary, admissible_at, extremal_solution};
use crate::functionals::{
    eh_derivative_closed_form, einstein_hilbert, f_csc_variational, f_polynomial, linear_w,
    total_scalar_at, total_volume_at, FunctionalBundle,
};
use crate::join::{violations, JoinParams, RayId};
use crate::poly::UniPoly;
use crate::ratio::{rat, rat_int, rat_pow, to_pq};
use crate::roots::{
    descartes_positive_bound, isolate_positive_roots, sign_at_isolated_root, sturm_count, Bound,
};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

/// One verification item.
pub struct Check {
    pub name: &'static str,
    pub result: Result<(), String>,
}

/// The whole suite plus informational notes that always accompany it.
pub struct SuiteReport {
    pub checks: Vec<Check>,
    pub notes: Vec<&'static str>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.result.is_ok())
    }
}

/// Golden configuration with three csc rays: `d_N=2, A=1, l1=1, l2=29, w=(3,2)`.
pub fn triple_csc_params() -> JoinParams {
    JoinParams::new(2, rat_int(1), 1, 29, 3, 2).expect("valid golden parameters")
}

/// Genus-2 surface family: `d_N=1, A=-2, l1=1, w=(3,2)`, any `l2` coprime to 6.
pub fn genus2_params(l2: u64) -> JoinParams {
    JoinParams::new(1, rat_int(-2), 1, l2, 3, 2).expect("valid golden parameters")
}

/// Vanishing-scalar csc configuration: `d_N=1, A=-12, l1=l2=1, w=(9,4)`.
pub fn null_scalar_csc_params() -> JoinParams {
    JoinParams::new(1, rat_int(-12), 1, 1, 9, 4).expect("valid golden parameters")
}

pub const NOTE_F_CSC_DISPLAY: &str = "note: genus-2 family (d_N=1, A=-2, l1=1, w=(3,2)): the \
published display of f_CSC, 2(9b^3 + (3l2+12)b^2 - (12+l2)b - 4), differs in its linear \
coefficient from both independent construction routes (the variational identity and the exact \
division -f/(3b-2)^3), which agree with each other and reproduce the quoted csc roots 0.835 \
(l2=1) and 0.685 (l2=101); this tool follows the agreeing routes, giving \
2(9b^3 + (3l2+12)b^2 - (2l2+12)b - 4).";

pub const NOTE_A_CONVENTION: &str = "note: vanishing-scalar csc family (l2 A = -2 l1 \
sqrt(w1 w2)): the published example writes A = 2 l2 (1 - G), but the genus formula \
G = 1 + (l1/l2) sqrt(w1 w2) is consistent only with the surface convention A = 2(1 - G); \
this tool uses A = 2(1 - G) (the worked instance G=7, w=(9,4), l1=l2=1 has A = -12).";

/// Run every check in order.
pub fn run_all() -> SuiteReport {
    let checks = vec![
        Check { name: "1 triple-csc closed forms (coefficient-exact)", result: check_closed_forms() },
        Check { name: "2 triple-csc point values of f_CSC", result: check_point_values() },
        Check { name: "3 triple-csc root structure and classification", result: check_root_structure() },
        Check { name: "4 genus-2 (l2=1): single critical minimum near 0.835", result: check_genus2_small() },
        Check { name: "5 genus-2 (l2=101): csc minimum and two unstable inflections", result: check_genus2_large() },
        Check { name: "6 genus-2 extremal profiles and admissibility window", result: check_extremal() },
        Check { name: "7 vanishing-scalar csc configuration", result: check_null_scalar_csc() },
        Check { name: "8 identity suite over 100 random parameter sets", result: check_identity_suite() },
        Check { name: "9 scale invariance over 50 random rays", result: check_scale_invariance() },
        Check { name: "10 null-scalar structure and critical-set union", result: check_union_structure() },
        Check { name: "11 l2 sweep 29..199: three csc rays throughout", result: check_sweep() },
        Check { name: "12 boundary behavior of reduced H", result: check_boundary() },
    ];
    SuiteReport {
        checks,
        notes: vec![NOTE_F_CSC_DISPLAY, NOTE_A_CONVENTION],
    }
}

fn fail(msg: impl Into<String>) -> Result<(), String> {
    Err(msg.into())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: &T, want: &T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        fail(format!("{what}: got {got:?}, want {want:?}"))
    }
}

pub fn check_closed_forms() -> Result<(), String> {
    let bundle = FunctionalBundle::new(triple_csc_params()).map_err(|e| e.to_string())?;
    expect_eq(bundle.s_num(), &UniPoly::from_int_coeffs(&[4, 58, 87, 9]), "S_num")?;
    expect_eq(bundle.v_num(), &UniPoly::from_int_coeffs(&[4, 6, 9]), "V_num")?;
    expect_eq(
        bundle.f_csc(),
        &UniPoly::from_int_coeffs(&[-48, 88, 720, -1242, -459, 243]),
        "f_CSC",
    )?;
    let s = UniPoly::from_int_coeffs(&[4, 58, 87, 9]);
    let bv = &UniPoly::var() * &UniPoly::from_int_coeffs(&[4, 6, 9]);
    expect_eq(bundle.h().num(), &s.pow(4), "H numerator (S^4)")?;
    expect_eq(bundle.h().den(), &bv.pow(3), "H denominator ((bV)^3)")?;
    let dh_num = &s.pow(3) * &UniPoly::from_int_coeffs(&[-48, 88, 720, -1242, -459, 243]);
    let dh_den =
        &UniPoly::monomial(rat_int(1), 4) * &UniPoly::from_int_coeffs(&[4, 6, 9]).pow(4);
    expect_eq(bundle.dh().num(), &dh_num, "H' numerator (S^3 f_CSC)")?;
    expect_eq(bundle.dh().den(), &dh_den, "H' denominator (b^4 V^4)")?;
    Ok(())
}

pub fn check_point_values() -> Result<(), String> {
    let bundle = FunctionalBundle::new(triple_csc_params()).map_err(|e| e.to_string())?;
    expect_eq(&bundle.f_csc().eval(&rat_int(0)), &rat_int(-48), "f_CSC(0)")?;
    expect_eq(&bundle.f_csc().eval(&rat(1, 3)), &rat(32, 3), "f_CSC(1/3)")?;
    expect_eq(&bundle.f_csc().eval(&rat(2, 3)), &rat_int(-96), "f_CSC(2/3)")?;
    Ok(())
}

pub fn check_root_structure() -> Result<(), String> {
    let bundle = FunctionalBundle::new(triple_csc_params()).map_err(|e| e.to_string())?;
    let roots = isolate_positive_roots(bundle.f_csc()).map_err(|e| e.to_string())?;
    expect_eq(&roots.len(), &3usize, "distinct positive f_CSC roots")?;
    let bound = descartes_positive_bound(bundle.f_csc()).map_err(|e| e.to_string())?;
    expect_eq(&bound, &3usize, "Descartes bound")?;
    let pts = critical_points(&bundle, &default_tolerance()).map_err(|e| e.to_string())?;
    let pattern: Vec<Classification> = pts.iter().map(|p| p.classification).collect();
    expect_eq(
        &pattern,
        &vec![
            Classification::LocalMin,
            Classification::LocalMax,
            Classification::LocalMin,
        ],
        "classification pattern",
    )?;
    // H'' is negative at the middle root and positive at the outer ones,
    // decided exactly at the isolated algebraic roots.
    let d2h_num = bundle.d2h().num();
    for (i, want) in [(0usize, 1), (1, -1), (2, 1)] {
        let sign = sign_at_isolated_root(d2h_num, bundle.f_csc(), &roots[i])
            .map_err(|e| e.to_string())?;
        expect_eq(&sign, &want, &format!("sign of H'' at root {i}"))?;
    }
    Ok(())
}

pub fn check_genus2_small() -> Result<(), String> {
    let bundle = FunctionalBundle::new(genus2_params(1)).map_err(|e| e.to_string())?;
    let pts = critical_points(&bundle, &default_tolerance()).map_err(|e| e.to_string())?;
    expect_eq(&pts.len(), &1usize, "critical point count")?;
    expect_eq(&pts[0].classification, &Classification::LocalMin, "classification")?;
    expect_eq(&pts[0].source, &CriticalSource::FutakiZero, "source")?;
    let err = (&pts[0].approx - rat(835, 1000)).abs();
    if err > rat(5, 1000) {
        return fail(format!("csc root at {} not within 0.005 of 0.835", to_pq(&pts[0].approx)));
    }
    Ok(())
}

pub fn check_genus2_large() -> Result<(), String> {
    let bundle = FunctionalBundle::new(genus2_params(101)).map_err(|e| e.to_string())?;
    // The two extra critical points are exactly the roots of 3b^2 - 202b + 2.
    expect_eq(
        bundle.s_num(),
        &UniPoly::from_int_coeffs(&[2, -202, 3]),
        "S_num = 3b^2 - 202b + 2",
    )?;
    let pts = critical_points(&bundle, &default_tolerance()).map_err(|e| e.to_string())?;
    expect_eq(&pts.len(), &3usize, "critical point count")?;
    expect_eq(&pts[1].classification, &Classification::LocalMin, "csc classification")?;
    expect_eq(&pts[1].source, &CriticalSource::FutakiZero, "csc source")?;
    let err = (&pts[1].approx - rat(685, 1000)).abs();
    if err > rat(5, 1000) {
        return fail(format!("csc root at {} not within 0.005 of 0.685", to_pq(&pts[1].approx)));
    }
    for (i, target) in [(0usize, rat(99, 1000)), (2, rat(673, 10))] {
        expect_eq(&pts[i].classification, &Classification::Inflection, "inflection class")?;
        expect_eq(&pts[i].source, &CriticalSource::NullScalar, "inflection source")?;
        let err = (&pts[i].approx - &target).abs();
        if err > rat(1, 2) {
            return fail(format!(
                "null-scalar root at {} not within 0.5 of {}",
                to_pq(&pts[i].approx),
                to_pq(&target)
            ));
        }
        // No Futaki zero inside these intervals, so the rays are K-unstable;
        // probing rationals flanking the root confirms the verdict. (The
        // lower interval endpoint can be 0, so probe near the refinement.)
        let iv = &pts[i].interval;
        let fc_roots = sturm_count(
            bundle.f_csc(),
            &Bound::Finite(iv.lo.clone()),
            &Bound::Finite(iv.hi.clone()),
        )
        .map_err(|e| e.to_string())?;
        expect_eq(&fc_roots, &0usize, "Futaki zero absent from inflection interval")?;
        for probe in [pts[i].approx.clone(), &pts[i].approx + rat(1, 1000)] {
            let v = stability_verdict(&bundle, &probe).map_err(|e| e.to_string())?;
            expect_eq(&v.verdict, &VerdictKind::KUnstable, "verdict at flanking rational")?;
        }
    }
    Ok(())
}

/// The displayed quadratic factor of the genus-2 extremal profile.
fn g_display(l2: i64, b: &BigRational) -> UniPoly {
    let b2 = b * b;
    let b3 = &b2 * b;
    let b4 = &b2 * &b2;
    let three_b_m2 = rat_int(3) * b - rat_int(2);
    let z2 = &three_b_m2 * (rat_int(9) * &b3 + rat_int(12) * &b2 - rat_int(12) * b - rat_int(4));
    let z1 = rat_int(2)
        * (rat_int(3) * &b2 - rat_int(2))
        * (rat_int(9) * &b2 + rat_int(24) * b + rat_int(4));
    let z0 =
        rat_int(27) * &b4 + rat_int(126) * &b3 + rat_int(120) * &b2 + rat_int(84) * b + rat_int(8);
    let l2_term = rat_int(l2) * b * &three_b_m2 * &three_b_m2;
    UniPoly::new(vec![z0 - &l2_term, z1, z2 + &l2_term])
}

pub fn check_extremal() -> Result<(), String> {
    // Exact golden solve at (l2=1, ray (1,2)).
    let sol = extremal_solution(&genus2_params(1), &RayId::new(1, 2).expect("coprime"))
        .map_err(|e| e.to_string())?;
    expect_eq(&sol.alpha, &rat(15, 22), "alpha")?;
    expect_eq(&sol.beta, &rat(75, 22), "beta")?;
    let expect_f = UniPoly::new(vec![
        rat(129, 176),
        rat(110, 176),
        rat(-104, 176),
        rat(-110, 176),
        rat(-25, 176),
    ]);
    expect_eq(&sol.f, &expect_f, "F_ext")?;
    // Exact positive proportionality to (1 - z^2) g(z) at four configurations.
    for l2 in [1u64, 101] {
        let params = genus2_params(l2);
        for b in [rat(1, 2), rat(2, 1)] {
            let ray = RayId::from_b(&b).map_err(|e| e.to_string())?;
            let sol = extremal_solution(&params, &ray).map_err(|e| e.to_string())?;
            let target = &UniPoly::from_int_coeffs(&[1, 0, -1]) * &g_display(l2 as i64, &b);
            let c = target.leading().expect("nonzero") / sol.f.leading().expect("nonzero");
            if !c.is_positive() {
                return fail(format!(
                    "proportionality constant not positive at l2={l2} b={}",
                    to_pq(&b)
                ));
            }
            expect_eq(&sol.f.scaled(&c), &target, "F_ext proportional to (1-z^2) g")?;
        }
    }
    // Window localization for l2 = 101.
    let (b1, b2) =
        admissibility_boundary(&genus2_params(101), &rat(1, 20), &rat_int(2), &rat(1, 100))
            .map_err(|e| e.to_string())?;
    if (&b1 - rat(295, 1000)).abs() > rat(1, 100) {
        return fail(format!("b1 = {} not within 0.01 of 0.295", to_pq(&b1)));
    }
    if (&b2 - rat(1455, 1000)).abs() > rat(1, 100) {
        return fail(format!("b2 = {} not within 0.01 of 1.455", to_pq(&b2)));
    }
    // Probes near the small null-scalar value are not admissible.
    for probe in [rat(1, 10), rat(99, 1000)] {
        if admissible_at(&genus2_params(101), &probe).map_err(|e| e.to_string())? {
            return fail(format!("probe {} unexpectedly admissible", to_pq(&probe)));
        }
    }
    Ok(())
}

pub fn check_null_scalar_csc() -> Result<(), String> {
    let params = null_scalar_csc_params();
    let bundle = FunctionalBundle::new(params).map_err(|e| e.to_string())?;
    expect_eq(
        bundle.s_num(),
        &UniPoly::from_int_coeffs(&[4, -12, 9]),
        "S_num = (3b-2)^2",
    )?;
    expect_eq(&bundle.f_csc().eval(&rat(2, 3)), &rat_int(0), "f_CSC(2/3)")?;
    let mult = bundle
        .s_num()
        .pow(3)
        .root_multiplicity(&rat(2, 3))
        .map_err(|e| e.to_string())?;
    expect_eq(&mult, &6u32, "multiplicity of (b - 2/3) in S_num^3")?;
    expect_eq(
        &bundle.h().eval(&rat(2, 3)).expect("no pole"),
        &rat_int(0),
        "H(2/3)",
    )?;
    for b in [rat(2, 3) + rat(1, 100), rat(2, 3) - rat(1, 100)] {
        if !bundle.h().eval(&b).expect("no pole").is_positive() {
            return fail(format!("H not positive at {}", to_pq(&b)));
        }
    }
    let v = stability_verdict(&bundle, &rat(2, 3)).map_err(|e| e.to_string())?;
    expect_eq(&v.verdict, &VerdictKind::KSemistableCscS, "verdict at b = 2/3")?;
    Ok(())
}

/// Deterministic generator for the randomized suites.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish in `1..=n`.
    fn one_to(&mut self, n: u64) -> u64 {
        1 + self.next() % n
    }
}

/// Random valid parameters: `d_N <= 4`, rational `A` in `[-20, 20]`,
/// `l1, l2 <= 50`, `w1 >= w2` with `w1, w2 <= 30`. `force_w11` pins the
/// equal-weights case.
fn random_params(rng: &mut SplitMix64, force_w11: bool) -> JoinParams {
    loop {
        let d_n = rng.one_to(4) as u32;
        let den = rng.one_to(8) as i64;
        let num = (rng.next() % (40 * den as u64 + 1)) as i64 - 20 * den;
        let a = rat(num, den);
        let l1 = rng.one_to(50);
        let l2 = rng.one_to(50);
        let (w1, w2) = if force_w11 {
            (1, 1)
        } else {
            let w2 = rng.one_to(30);
            let w1 = w2 + rng.next() % (31 - w2);
            (w1, w2)
        };
        if violations(d_n, l1, l2, w1, w2).is_empty() {
            return JoinParams::new(d_n, a, l1, l2, w1, w2).expect("validated");
        }
    }
}

pub fn check_identity_suite() -> Result<(), String> {
    let mut rng = SplitMix64(0x5eed_0001);
    for case in 0..100u32 {
        let force_w11 = case % 10 == 9;
        let params = random_params(&mut rng, force_w11);
        let variational = f_csc_variational(&params);
        let f = f_polynomial(&params);
        let cubic = linear_w(&params).pow(3);
        let neg_f = -&f;
        let (quot, rem) = neg_f.divrem(&cubic).map_err(|e| e.to_string())?;
        if !rem.is_zero() || quot != variational {
            return fail(format!("variational identity failed on case {case}: {params:?}"));
        }
        let reg = params.regular_b();
        let mult = f.root_multiplicity(&reg).map_err(|e| e.to_string())?;
        if params.w1() > params.w2() {
            if mult != 3 {
                return fail(format!(
                    "(w1 b - w2) multiplicity {mult} != 3 on case {case}: {params:?}"
                ));
            }
        } else if mult < 4 {
            return fail(format!(
                "equal-weight multiplicity {mult} < 4 on case {case}: {params:?}"
            ));
        }
        // Reduced H' equals the closed form (also re-checked internally).
        let dh = einstein_hilbert(&params).derivative();
        let closed = eh_derivative_closed_form(&params).map_err(|e| e.to_string())?;
        if dh != closed {
            return fail(format!("H' closed form mismatch on case {case}: {params:?}"));
        }
    }
    Ok(())
}

pub fn check_scale_invariance() -> Result<(), String> {
    let mut rng = SplitMix64(0x5eed_0002);
    for case in 0..50u32 {
        let params = random_params(&mut rng, false);
        let d = params.d_n() as i64;
        let (v1, v2) = loop {
            let v1 = rng.one_to(20);
            let v2 = rng.one_to(20);
            if v1.gcd(&v2) == 1 {
                break (rat_int(v1 as i64), rat_int(v2 as i64));
            }
        };
        let lambda = rat(rng.one_to(10) as i64, rng.one_to(10) as i64);
        let ts = total_scalar_at(&params, &v1, &v2);
        let tv = total_volume_at(&params, &v1, &v2);
        let ts_scaled = total_scalar_at(&params, &(&v1 * &lambda), &(&v2 * &lambda));
        let tv_scaled = total_volume_at(&params, &(&v1 * &lambda), &(&v2 * &lambda));
        if ts_scaled != ts.clone() * rat_pow(&lambda, -(d + 1)) {
            return fail(format!("scalar scaling failed on case {case}: {params:?}"));
        }
        if tv_scaled != tv.clone() * rat_pow(&lambda, -(d + 2)) {
            return fail(format!("volume scaling failed on case {case}: {params:?}"));
        }
        // S^(d+2) / V^(d+1) = H(b) exactly.
        let b = &v2 / &v1;
        let h = einstein_hilbert(&params).eval(&b).expect("b > 0 is no pole");
        if rat_pow(&ts, d + 2) / rat_pow(&tv, d + 1) != h {
            return fail(format!("H ratio identity failed on case {case}: {params:?}"));
        }
    }
    Ok(())
}

pub fn check_union_structure() -> Result<(), String> {
    let mut rng = SplitMix64(0x5eed_0003);
    for case in 0..60u32 {
        let params = random_params(&mut rng, false);
        let bundle = FunctionalBundle::new(params.clone()).map_err(|e| e.to_string())?;
        let nulls = null_scalar_rays(&bundle).map_err(|e| e.to_string())?;
        if nulls.len() > 2 {
            return fail(format!("more than two null-scalar rays on case {case}: {params:?}"));
        }
        if !params.a().is_negative() && !nulls.is_empty() {
            return fail(format!("null-scalar rays with A >= 0 on case {case}: {params:?}"));
        }
        let csc = csc_rays(&bundle).map_err(|e| e.to_string())?;
        let crit = critical_points(&bundle, &default_tolerance()).map_err(|e| e.to_string())?;
        let shared = crit.iter().filter(|c| c.source == CriticalSource::Both).count();
        if crit.len() + shared != csc.len() + nulls.len() {
            return fail(format!(
                "critical set is not the union on case {case}: |crit|={} shared={} |csc|={} \
                 |null|={} {params:?}",
                crit.len(),
                shared,
                csc.len(),
                nulls.len()
            ));
        }
        // Count distinct positive roots of the product polynomial directly.
        let product = &bundle.s_num().clone() * bundle.f_csc();
        let distinct = sturm_count(&product, &Bound::Finite(rat_int(0)), &Bound::PosInf)
            .map_err(|e| e.to_string())?;
        if distinct != crit.len() {
            return fail(format!(
                "product-polynomial root count {distinct} != |crit| {} on case {case}: {params:?}",
                crit.len()
            ));
        }
    }
    Ok(())
}

pub fn check_sweep() -> Result<(), String> {
    let template = triple_csc_params();
    let rows = scan_l2(&template, 29, 199, &default_tolerance()).map_err(|e| e.to_string())?;
    let expected_count = (29..=199u64).filter(|l2| l2.gcd(&6) == 1).count();
    expect_eq(&rows.len(), &expected_count, "row count")?;
    for row in &rows {
        if row.csc_count != 3 {
            return fail(format!("l2 = {} has {} csc rays, want 3", row.l2, row.csc_count));
        }
    }
    // The convex regime at l2 = 1 has fewer.
    let small = scan_l2(&template, 1, 1, &default_tolerance()).map_err(|e| e.to_string())?;
    if small[0].csc_count >= 3 {
        return fail(format!(
            "l2 = 1 has {} csc rays, expected fewer than 3",
            small[0].csc_count
        ));
    }
    Ok(())
}

pub fn check_boundary() -> Result<(), String> {
    for params in [
        triple_csc_params(),
        genus2_params(1),
        genus2_params(101),
        null_scalar_csc_params(),
    ] {
        let bundle = FunctionalBundle::new(params).map_err(|e| e.to_string())?;
        boundary_check(&bundle).map_err(|e| e.to_string())?;
    }
    let mut rng = SplitMix64(0x5eed_0004);
    for _ in 0..40 {
        let params = random_params(&mut rng, false);
        let bundle = FunctionalBundle::new(params).map_err(|e| e.to_string())?;
        boundary_check(&bundle).map_err(|e| e.to_string())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_parameter_sets_are_valid() {
        triple_csc_params();
        genus2_params(1);
        genus2_params(101);
        null_scalar_csc_params();
    }

    #[test]
    fn generator_is_deterministic() {
        let mut a = SplitMix64(42);
        let mut b = SplitMix64(42);
        for _ in 0..100 {
            assert_eq!(a.next(), b.next());
        }
    }

    #[test]
    fn random_params_respect_the_stated_ranges() {
        let mut rng = SplitMix64(7);
        for i in 0..50 {
            let p = random_params(&mut rng, i % 5 == 4);
            assert!(p.d_n() >= 1 && p.d_n() <= 4);
            assert!(p.l1() <= 50 && p.l2() <= 50);
            assert!(p.w1() <= 30 && p.w1() >= p.w2());
            assert!(p.a().abs() <= rat_int(20));
        }
    }
}
