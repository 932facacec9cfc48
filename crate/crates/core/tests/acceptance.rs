//! Acceptance suite. Prints one PASS/FAIL line per check.
//!
//! Runs as a plain binary (`harness = false`). Checks listed in `KNOWN_RED`
//! fail against the reference statement and are expected to keep failing; the
//! process exits non-zero if any other check fails or a known-red one starts
//! passing.

use std::f64::consts::PI;
use std::process::ExitCode;

use loxodrome::cli;
use loxodrome::extremal::{
    counterexample_point, evaluate_theorem, lemma3_bound, lemma3_find_m, lemma_bound_check, theorem1_chain,
    theorem2_chain, theorem2_proof_constants, Bound, Constants, TheoremOptions, LAMBDA_A,
};
use loxodrome::moebius::{beta, beta_from_translation, beta_of_power, classify, translation_data, ExtPoint};
use loxodrome::pair::{axis_geometry, geodesic_distance, group_from_parameters, pair_parameters, GeodesicH3};
use loxodrome::{Matrix2C, TransformKind};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_RED: &[&str] = &["1b", "4b", "4e"];

struct Suite {
    failures: Vec<String>,
    red_passed: Vec<String>,
}

impl Suite {
    fn check(&mut self, id: &str, label: &str, pass: bool, detail: String) {
        let red = KNOWN_RED.contains(&id);
        let tag = if pass { "PASS" } else { "FAIL" };
        let note = if red && !pass { " [known]" } else { "" };
        println!("{tag} {id:<3} {label}: {detail}{note}");
        if !pass && !red {
            self.failures.push(id.to_string());
        }
        if pass && red {
            self.red_passed.push(id.to_string());
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_complex(r: &mut ChaCha8Rng, max: f64) -> Complex64 {
    Complex64::from_polar(max * r.gen::<f64>().sqrt(), r.gen_range(-PI..PI))
}

/// Normalized matrix with entries of modulus at most `max` and `|det| ≥ 1` before scaling.
fn rand_matrix(r: &mut ChaCha8Rng, max: f64) -> Matrix2C {
    loop {
        let (a, b, c, d) = (
            rand_complex(r, max),
            rand_complex(r, max),
            rand_complex(r, max),
            rand_complex(r, max),
        );
        if (a * d - b * c).norm() >= 1.0 {
            return Matrix2C::normalize(a, b, c, d).unwrap();
        }
    }
}

/// Hyperbolic with real fixed points `p` (repelling) and `q` (attracting), multiplier `k`.
fn hyperbolic_between(p: f64, q: f64, k: f64) -> Matrix2C {
    let h = Matrix2C::normalize_real(q, p, 1.0, 1.0).unwrap();
    let s = k.sqrt();
    Matrix2C::diag(Complex64::new(s, 0.0)).unwrap().conjugate_by(&h)
}

fn rel(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / y.norm().max(1.0)
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % PI;
    d.min(PI - d)
}

fn criterion1(s: &mut Suite) {
    let k = Constants::new();
    let (sixteen_dc, u_star) = theorem2_proof_constants();
    s.check(
        "1a",
        "c and d to 1e-3",
        (k.c - 1.048).abs() <= 1e-3 && (k.d - 0.198).abs() <= 1e-3,
        format!("c = {:.9}, d = {:.9}", k.c, k.d),
    );
    s.check(
        "1b",
        "16dc = 3.320 to 1e-3",
        (sixteen_dc - 3.320).abs() <= 1e-3,
        format!("16dc = {sixteen_dc:.9}, gap {:.2e}", (sixteen_dc - 3.320).abs()),
    );
    let c = k.c;
    let h = |u: f64| u.powi(3) / (c * c) + 4.0 * u.powf(1.5) - sixteen_dc;
    let residual = h(u_star).abs();
    let bracket = h(u_star - 1e-12) < 0.0 && h(u_star + 1e-12) > 0.0;
    s.check(
        "1c",
        "root u* > 0.798, converged to 1e-12",
        u_star > 0.798 && bracket,
        format!("u* = {u_star:.12}, |h(u*)| = {residual:.1e}"),
    );
}

/// Criterion 2 sample: normalized nonparabolic matrices.
fn nonparabolic_sample(seed: u64, n: usize) -> Vec<Matrix2C> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let m = rand_matrix(&mut r, 10.0);
        if classify(&m).kind.is_nonparabolic() {
            out.push(m);
        }
    }
    out
}

fn criterion2(s: &mut Suite, sample: &[Matrix2C]) {
    let (mut worst_beta, mut worst_cosh) = (0.0f64, 0.0f64);
    for m in sample {
        let b = beta(m);
        let td = translation_data(m).unwrap();
        worst_beta = worst_beta.max(rel(beta_from_translation(td.t, td.theta), b));
        let want = ((b + 4.0).norm() + b.norm()) / 4.0;
        worst_cosh = worst_cosh.max((td.t.cosh() - want).abs() / want);
    }
    s.check(
        "2a",
        "4 sinh²((t+iθ)/2) = β, 1000 matrices, 1e-8",
        worst_beta <= 1e-8,
        format!("max relative residual {worst_beta:.2e}"),
    );
    s.check(
        "2b",
        "cosh t = (|β+4|+|β|)/4, 1e-9",
        worst_cosh <= 1e-9,
        format!("max relative residual {worst_cosh:.2e}"),
    );
}

/// Hyperbolic pairs with real, unlinked fixed-point pairs.
fn coplanar_sample(seed: u64, n: usize) -> Vec<(Matrix2C, Matrix2C, [f64; 4])> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut x: [f64; 4] = std::array::from_fn(|_| r.gen_range(-10.0..10.0));
        x.sort_by(f64::total_cmp);
        if x.windows(2).any(|w| w[1] - w[0] < 0.05) {
            continue;
        }
        // Nested or side by side, never interleaved.
        let (f_ends, g_ends) = if r.gen::<bool>() {
            ((x[0], x[3]), (x[1], x[2]))
        } else {
            ((x[0], x[1]), (x[2], x[3]))
        };
        let flip = |e: (f64, f64), r: &mut ChaCha8Rng| if r.gen::<bool>() { (e.1, e.0) } else { e };
        let (fe, ge) = (flip(f_ends, &mut r), flip(g_ends, &mut r));
        let f = hyperbolic_between(fe.0, fe.1, r.gen_range(1.5..20.0));
        let g = hyperbolic_between(ge.0, ge.1, r.gen_range(1.5..20.0));
        out.push((f, g, [fe.0, fe.1, ge.0, ge.1]));
    }
    out
}

fn noncoplanar_sample(seed: u64, n: usize) -> Vec<(Matrix2C, Matrix2C)> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (f, g) = (rand_matrix(&mut r, 10.0), rand_matrix(&mut r, 10.0));
        if let Ok(geom) = axis_geometry(&f, &g) {
            if !geom.coplanar {
                out.push((f, g));
            }
        }
    }
    out
}

fn criterion3(s: &mut Suite, coplanar: &[(Matrix2C, Matrix2C, [f64; 4])], other: &[(Matrix2C, Matrix2C)]) {
    let (mut worst_delta, mut worst_phi) = (0.0f64, 0.0f64);
    for (f, g, e) in coplanar {
        let geom = axis_geometry(f, g).unwrap();
        let pt = |x: f64| ExtPoint::finite(x, 0.0);
        let ax = GeodesicH3::new(pt(e[0]), pt(e[1])).unwrap();
        let bx = GeodesicH3::new(pt(e[2]), pt(e[3])).unwrap();
        let oracle = geodesic_distance(&ax, &bx).unwrap();
        worst_delta = worst_delta.max((geom.delta - oracle).abs());
        worst_phi = worst_phi.max(angle_gap(geom.phi, 0.0));
    }
    s.check(
        "3a",
        "coplanar δ vs geodesic oracle, 200 pairs, 1e-6",
        worst_delta <= 1e-6,
        format!("max |δ − D| {worst_delta:.2e}"),
    );
    s.check(
        "3b",
        "coplanar φ = 0, 1e-6",
        worst_phi <= 1e-6,
        format!("max |φ| {worst_phi:.2e}"),
    );
    let mut worst = 0.0f64;
    for (f, g) in other {
        let w = pair_parameters(f, g).axis_ratio();
        let geom = axis_geometry(f, g).unwrap();
        worst = worst.max(rel(geom.sinh_sq(), w));
    }
    s.check(
        "3c",
        "sinh²(δ+iφ) = 4γ/(β_f β_g), 200 non-coplanar pairs, 1e-8",
        worst <= 1e-8,
        format!("max relative residual {worst:.2e}"),
    );
}

fn criterion4(s: &mut Suite) {
    let grid: Vec<f64> = (0..20)
        .map(|i| (1e-4f64.ln() + (3f64.ln() - 1e-4f64.ln()) * i as f64 / 19.0).exp())
        .collect();
    let (mut w_sinh, mut w_trace, mut w_u) = (0.0f64, 0.0f64, 0.0f64);
    for &l in &grid {
        for &m in &grid {
            let p = counterexample_point(l, m).unwrap();
            w_sinh = w_sinh.max((p.sinh_delta * l.sinh() * m.sinh() - 2.0).abs());
            w_trace = w_trace.max((p.trace_fg_inv - Complex64::new(-2.0, 0.0)).norm());
            w_u = w_u.max((p.u - p.u_closed_form()).abs() / p.u_closed_form().max(1.0));
        }
    }
    s.check(
        "4a",
        "sinh δ sinh λ sinh μ = 2 on 20×20 grid, 1e-8",
        w_sinh <= 1e-8,
        format!("max residual {w_sinh:.2e}"),
    );
    s.check(
        "4b",
        "tr(f g⁻¹) = −2 on grid, 1e-8",
        w_trace <= 1e-8,
        format!("max |tr + 2| {w_trace:.4}"),
    );
    s.check(
        "4c",
        "u = 2^(16/3) (sinh λ sinh μ)^(2/3) on grid, 1e-8",
        w_u <= 1e-8,
        format!("max relative residual {w_u:.2e}"),
    );
    let l = 2f64.sqrt().asinh();
    let p = counterexample_point(l, l).unwrap();
    let d_err = (p.delta - (1.0 + 2f64.sqrt()).ln()).abs();
    let u_err = (p.u - 64.0).abs();
    s.check(
        "4d",
        "λ = μ = asinh √2 gives δ = ln(1+√2), u = 64, 1e-9",
        d_err <= 1e-9 && u_err <= 1e-9,
        format!("|Δδ| {d_err:.1e}, |Δu| {u_err:.1e}"),
    );
    let small = counterexample_point(1e-4, 1.0).unwrap().u;
    let one = counterexample_point(1.0, 1.0).unwrap().u;
    s.check(
        "4e",
        "μ = 1: u(1e-4) < 0.05 < u(1)",
        small < 0.05 && 0.05 < one,
        format!("u(1e-4) = {small:.6}, u(1) = {one:.6}"),
    );
}

fn criterion5(s: &mut Suite) {
    let k = Constants::new();
    let (f, g) = group_from_parameters(k.c.into(), k.c.into(), (-k.d).into()).unwrap();
    let r = evaluate_theorem(Bound::A, &f, &g, &TheoremOptions::default());
    let closed = k.c / 4.0 * (4.0 * k.d / (k.c * k.c)).sqrt();
    s.check(
        "5a",
        "extremal triple: A lhs equals closed form, 1e-9",
        r.applicable && (r.lhs - closed).abs() <= 1e-9,
        format!("lhs {:.12}, closed {closed:.12}", r.lhs),
    );
    let gap = (r.lhs - LAMBDA_A * LAMBDA_A).abs();
    s.check(
        "5b",
        "A lhs within 1e-3 of λ²",
        gap <= 1e-3,
        format!("|lhs − 0.471²| = {gap:.2e}"),
    );
    let l1 = lemma_bound_check(Bound::L1, &f, &g, None);
    s.check(
        "5c",
        "L1 margin on the extremal pair, 1e-8",
        l1.margin.abs() <= 1e-8,
        format!("margin {:.2e}", l1.margin),
    );
}

fn criterion6(s: &mut Suite) {
    let mut r = rng(6);
    let (mut ok, mut max_m) = (0usize, 0u64);
    let mut bad = None;
    for _ in 0..1000 {
        let t = r.gen_range(1e-3..3.0);
        let theta = r.gen_range(-PI..PI);
        let lam = Complex64::new(t / 2.0, theta / 2.0).exp();
        let h = rand_matrix(&mut r, 3.0);
        let f = Matrix2C::diag(lam).unwrap().conjugate_by(&h);
        if !classify(&f).kind.is_loxodromic() {
            continue;
        }
        let t_f = translation_data(&f).unwrap().t;
        match lemma3_find_m(&f, 100_000) {
            Ok(m) if beta_of_power(&f, m).unwrap().norm() <= lemma3_bound(t_f) => {
                ok += 1;
                max_m = max_m.max(m);
            }
            other => bad = Some(format!("t = {t}, θ = {theta}: {other:?}")),
        }
    }
    s.check(
        "6a",
        "1000 loxodromics: m ≤ 1e5 found and bound holds",
        ok == 1000 && bad.is_none(),
        bad.unwrap_or_else(|| format!("all {ok} ok, largest m = {max_m}")),
    );
    let f = Matrix2C::diag(Complex64::new(0.0, 1.01f64.sqrt())).unwrap();
    let m = lemma3_find_m(&f, 100_000);
    s.check("6b", "μ = −1.01 gives m = 2", m == Ok(2), format!("{m:?}"));
}

fn criterion7(s: &mut Suite) {
    let k = Constants::new();
    let mut r = rng(7);
    let opts = TheoremOptions::default();
    let (mut t1, mut t2, mut t4) = (0usize, 0usize, 0usize);
    let mut notes = Vec::new();
    const N: usize = 200;
    for _ in 0..N {
        // T1: hyperbolic, coplanar disjoint axes, γ ≥ d.
        let (bf, bg) = (r.gen_range(0.1..20.0), r.gen_range(0.1..20.0));
        let gamma = r.gen_range(k.d..10.0);
        let (f, g) = group_from_parameters(bf.into(), bg.into(), gamma.into()).unwrap();
        let rep = evaluate_theorem(Bound::T1, &f, &g, &opts);
        let chain = theorem1_chain(&f, &g).unwrap();
        if rep.applicable && rep.satisfied && chain.holds(1e-7) {
            t1 += 1;
        } else if notes.len() < 3 {
            notes.push(format!("T1 ({bf}, {bg}, {gamma}): {} {:?}", rep.reason, chain));
        }

        // T2: both |β| ≥ c, γ ≥ d, sinh δ ≤ 1.
        let bf = r.gen_range(k.c..20.0);
        let bg = r.gen_range(k.c..20.0);
        let hi = (bf * bg / 4.0).max(k.d * 1.0001);
        let gamma = r.gen_range(k.d..hi);
        let (f, g) = group_from_parameters(bf.into(), bg.into(), gamma.into()).unwrap();
        let rep = evaluate_theorem(Bound::T2, &f, &g, &opts);
        let chain = theorem2_chain(&f, &g).unwrap();
        let chain_ok = chain.first_step_holds(1e-7)
            && chain.cubic_dominates_gamma(1e-7)
            && chain.gamma_side >= chain.sixteen_dc - 1e-7;
        if rep.applicable && rep.satisfied && chain_ok {
            t2 += 1;
        } else if notes.len() < 3 {
            notes.push(format!("T2 ({bf}, {bg}, {gamma}): {} {:?}", rep.reason, chain));
        }

        // T4: β(f) = β(g), γ ≥ d.
        let b = r.gen_range(0.1..20.0);
        let gamma = r.gen_range(k.d..10.0);
        let (f, g) = group_from_parameters(b.into(), b.into(), gamma.into()).unwrap();
        let rep = evaluate_theorem(Bound::T4, &f, &g, &opts);
        if rep.applicable && rep.satisfied {
            t4 += 1;
        } else if notes.len() < 3 {
            notes.push(format!("T4 ({b}, {gamma}): {}", rep.reason));
        }
    }
    let detail = |n: usize| {
        if notes.is_empty() {
            format!("{n}/{N}")
        } else {
            format!("{n}/{N}; {}", notes.join("; "))
        }
    };
    s.check("7a", "T1 satisfied with chain, 1e-7", t1 == N, detail(t1));
    s.check("7b", "T2 satisfied with chain, 1e-7", t2 == N, detail(t2));
    s.check("7c", "T4 satisfied", t4 == N, detail(t4));
}

fn criterion8(
    s: &mut Suite,
    singles: &[Matrix2C],
    coplanar: &[(Matrix2C, Matrix2C, [f64; 4])],
    other: &[(Matrix2C, Matrix2C)],
) {
    let mut r = rng(8);
    let (mut w_beta, mut w_gamma, mut w_delta, mut w_phi) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let pairs = coplanar
        .iter()
        .map(|(f, g, _)| (f, g))
        .chain(other.iter().map(|(f, g)| (f, g)));
    let pairs: Vec<_> = pairs.collect();
    for _ in 0..10 {
        let h = rand_matrix(&mut r, 3.0);
        for m in singles {
            w_beta = w_beta.max(rel(beta(&m.conjugate_by(&h)), beta(m)));
        }
        for &(f, g) in &pairs {
            let (fh, gh) = (f.conjugate_by(&h), g.conjugate_by(&h));
            let (p0, p1) = (pair_parameters(f, g), pair_parameters(&fh, &gh));
            w_beta = w_beta.max(rel(p1.beta_f, p0.beta_f)).max(rel(p1.beta_g, p0.beta_g));
            w_gamma = w_gamma.max(rel(p1.gamma, p0.gamma));
            let (g0, g1) = (axis_geometry(f, g).unwrap(), axis_geometry(&fh, &gh).unwrap());
            w_delta = w_delta.max((g1.delta - g0.delta).abs());
            w_phi = w_phi.max(angle_gap(g1.phi, g0.phi));
        }
    }
    s.check(
        "8",
        "10 conjugations leave β, γ, δ, φ fixed, 1e-7",
        w_beta.max(w_gamma).max(w_delta).max(w_phi) <= 1e-7,
        format!("β {w_beta:.1e}, γ {w_gamma:.1e}, δ {w_delta:.1e}, φ {w_phi:.1e}"),
    );
}

fn criterion9(s: &mut Suite) {
    let cases: [(&str, &[&str], &str); 3] = [
        ("9a", &["constants"], include_str!("golden/constants.json")),
        (
            "9b",
            &["classify", "--in", r#"{"a":[2,0],"b":[0,0],"c":[0,0],"d":[0.5,0]}"#],
            include_str!("golden/classify_diag.json"),
        ),
        (
            "9c",
            &["sweep", "--mu", "1", "--lambda", "1,0.1,0.01"],
            include_str!("golden/sweep_mu1.csv"),
        ),
    ];
    for (id, args, golden) in cases {
        let mut empty: &[u8] = &[];
        let out = cli::run(std::iter::once("loxodrome").chain(args.iter().copied()), &mut empty);
        s.check(
            id,
            &format!("`{}` matches golden", args[0]),
            out.code == 0 && out.stdout == golden,
            format!("exit {}, {} bytes", out.code, out.stdout.len()),
        );
    }
}

fn main() -> ExitCode {
    let mut s = Suite {
        failures: Vec::new(),
        red_passed: Vec::new(),
    };
    let singles = nonparabolic_sample(2, 1000);
    let coplanar = coplanar_sample(3, 200);
    let other = noncoplanar_sample(33, 200);
    debug_assert!(coplanar.iter().all(
        |(f, g, _)| classify(f).kind == TransformKind::Hyperbolic && classify(g).kind == TransformKind::Hyperbolic
    ));

    criterion1(&mut s);
    criterion2(&mut s, &singles);
    criterion3(&mut s, &coplanar, &other);
    criterion4(&mut s);
    criterion5(&mut s);
    criterion6(&mut s);
    criterion7(&mut s);
    criterion8(&mut s, &singles, &coplanar, &other);
    criterion9(&mut s);

    if !s.red_passed.is_empty() {
        println!("known-red checks now pass, update KNOWN_RED: {:?}", s.red_passed);
    }
    if s.failures.is_empty() && s.red_passed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {:?}", s.failures);
        ExitCode::FAILURE
    }
}
