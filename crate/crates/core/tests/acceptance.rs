//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its
//! criterion straight to stdout (bypassing capture) and then asserts.

use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use monogamy::harness::{cmd_fuzz, cmd_hunt, HuntMode, HuntParams, RunConfig};
use monogamy::inequalities::{Checker, StateProfile, Verdict};
use monogamy::measures::{
    concurrence, concurrence_of_assistance, decomposition_average_concurrence, linear_entropy,
    r_spectrum,
};
use monogamy::qlinalg::{
    haar_random_pure, random_mixed_two_qubit, sample_decomposition_with, sigma_y, state_family,
    stream_rng, ComplexMatrix, DensityMatrix, PureState, Reduce, StateFamily,
};
use monogamy::schmidt::{
    alpha_table, discriminant, discriminant4_closed_form, discriminant_direct,
    discriminant_via_alpha, p_matrix, schmidt_cut, v_matrix, v_spectrum_check,
};

fn verdict_line(criterion: u32, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{tag} criterion {criterion}: {detail}").unwrap();
}

/// Collects failure messages; prints the verdict line and asserts.
struct Criterion {
    number: u32,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32) -> Self {
        Self {
            number,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn finish(self, detail: &str) {
        let pass = self.failures.is_empty();
        let detail = if pass {
            detail.to_string()
        } else {
            format!(
                "{detail}; {} failure(s), first: {}",
                self.failures.len(),
                self.failures[0]
            )
        };
        verdict_line(self.number, pass, &detail);
        assert!(
            pass,
            "criterion {} failed: {:?}",
            self.number, self.failures
        );
    }
}

fn family(f: StateFamily, n: usize) -> PureState {
    state_family(f, n).unwrap()
}

#[test]
fn criterion_1_w_state_saturation() {
    let mut c = Criterion::new(1);
    let start = Instant::now();
    let checker = Checker::new(1e-9).unwrap();

    let w3 = family(StateFamily::W, 3);
    let p = StateProfile::new(&w3).unwrap();
    let eight_ninths = 8.0 / 9.0;
    c.check((p.sum_tangle_a() - eight_ninths).abs() <= 1e-10, || {
        format!("W3 Σ tau_a = {}", p.sum_tangle_a())
    });
    c.check((p.s_lin_a - eight_ninths).abs() <= 1e-10, || {
        format!("W3 S_L(A) = {}", p.s_lin_a)
    });

    for n in 3..=6 {
        let (ckw, dual) = checker.chain(&family(StateFamily::W, n)).unwrap();
        for r in [&ckw, &dual] {
            c.check(
                r.verdict == Verdict::Saturated && r.slack.abs() <= 1e-9,
                || format!("W{n} {} slack {:e} ({})", r.name, r.slack, r.verdict),
            );
        }
    }
    let elapsed = start.elapsed();
    c.check(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    });
    c.finish(&format!(
        "W3 Σ tau_a = S_L(A) = 8/9; W3..W6 chain saturated ({elapsed:.2?})"
    ));
}

#[test]
fn criterion_2_family_discriminants() {
    let mut c = Criterion::new(2);
    for n in 3..=8 {
        let g = discriminant(&family(StateFamily::Ghz, n)).unwrap().total;
        c.check(g.abs() <= 1e-9, || format!("GHZ{n}: D = {g}"));
        let w = discriminant(&family(StateFamily::W, n)).unwrap().total;
        let expected = n as f64 - 3.0;
        c.check((w - expected).abs() <= 1e-9, || {
            format!("W{n}: D = {w}, expected {expected}")
        });
    }
    c.finish("D(GHZ_N) = 0 and D(W_N) = N - 3 for N = 3..8");
}

#[test]
fn criterion_3_fuzz_suite() {
    let mut c = Criterion::new(3);
    let start = Instant::now();
    let required = [
        "ckw",
        "dual_monogamy",
        "chain",
        "theorem2.a_lower",
        "theorem2.a_upper",
    ];
    let mut total_samples = 0;
    for n in 3..=6 {
        let s = cmd_fuzz(&RunConfig::fuzz(n, 10_000, 1000 + n as u64)).unwrap();
        total_samples += s.samples;
        let mut names = required.to_vec();
        if n <= 4 {
            names.push("theorem2.b");
        }
        if n >= 4 {
            names.extend([
                "corollary.lower",
                "corollary.upper",
                "aggregate.lower",
                "aggregate.upper",
            ]);
        }
        for name in names {
            match s.checker(name) {
                Some(stats) => {
                    c.check(stats.total() == 10_000, || {
                        format!("N={n} {name}: {} samples", stats.total())
                    });
                    c.check(stats.violated == 0, || {
                        format!(
                            "N={n} {name}: {} violations, worst slack {:e}",
                            stats.violated, stats.worst.slack
                        )
                    });
                }
                None => c.check(false, || format!("N={n}: checker {name} missing")),
            }
        }
        c.check(!s.any_violation(), || {
            format!("N={n}: {} violations", s.violations.len())
        });
    }

    let checker = Checker::new(1e-9).unwrap();
    for i in 0..1000 {
        let rho = random_mixed_two_qubit(&mut stream_rng(77, i));
        for r in [checker.lemma1(&rho).unwrap(), checker.claim6(&rho).unwrap()] {
            c.check(!r.is_violated(), || {
                format!("mixed #{i} {} slack {:e}", r.name, r.slack)
            });
        }
    }
    let elapsed = start.elapsed();
    c.check(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    });
    c.finish(&format!(
        "{total_samples} Haar states (N = 3..6) and 1000 mixed states, zero violations ({elapsed:.2?})"
    ));
}

/// `ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)`, assembled here independently of the
/// library's spin flip.
fn tr_rho_rho_tilde(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let yy = sigma_y().kron(&sigma_y());
    let data = (0..16).map(|i| m[(i / 4, i % 4)].conj()).collect();
    let conj = ComplexMatrix::from_vec(4, 4, data).unwrap();
    let tilde = &(&yy * &conj) * &yy;
    (m * &tilde).trace().re
}

#[test]
fn criterion_4_two_path_cross_checks() {
    let mut c = Criterion::new(4);
    let mut worst = [0.0f64; 4];
    for n in 3..=6 {
        for s in 0..1000u64 {
            let psi = haar_random_pure(n, 40_000 + 1000 * n as u64 + s).unwrap();
            let sf = schmidt_cut(&psi).unwrap();
            let direct = discriminant_direct(&sf);
            let at = alpha_table(&sf);
            let via = discriminant_via_alpha(&at);
            let e = (direct.total - via).abs();
            worst[0] = worst[0].max(e);
            c.check(e < 1e-9, || {
                format!("N={n} seed {s}: direct {} alpha {via}", direct.total)
            });
            if n == 4 {
                let closed = discriminant4_closed_form(&at).unwrap();
                let e = (closed - direct.total).abs();
                worst[1] = worst[1].max(e);
                c.check(e < 1e-9, || {
                    format!("seed {s}: closed form {closed} vs {}", direct.total)
                });
            }
            for k in 1..n {
                let rho = psi.reduce(&[0, k]).unwrap();
                let s_ab = linear_entropy(&rho);
                let s_a = linear_entropy(&psi.reduce(&[0]).unwrap());
                let s_b = linear_entropy(&psi.reduce(&[k]).unwrap());
                let mutual = s_a + s_b - s_ab;

                let bridge = 4.0 * sf.p0 * sf.p1 * (1.0 - direct.per_k[k - 1]);
                let e = (bridge - mutual).abs();
                worst[2] = worst[2].max(e);
                c.check(e < 1e-9, || {
                    format!("N={n} seed {s} k={k}: bridge {bridge} vs {mutual}")
                });

                let oracle = 2.0 * tr_rho_rho_tilde(&rho);
                let from_spectrum = 2.0 * r_spectrum(&rho).unwrap().sum_of_squares();
                let e = (oracle - mutual).abs().max((from_spectrum - mutual).abs());
                worst[3] = worst[3].max(e);
                c.check(e < 1e-9, || {
                    format!("N={n} seed {s} k={k}: 2Tr R² {oracle} / {from_spectrum} vs {mutual}")
                });
            }
        }
    }
    c.finish(&format!(
        "4000 states; max errors: alpha {:.1e}, closed form {:.1e}, bridge {:.1e}, 2Tr R² {:.1e}",
        worst[0], worst[1], worst[2], worst[3]
    ));
}

#[test]
fn criterion_5_exact_spectral_apparatus() {
    let mut c = Criterion::new(5);
    for delta in 3..=7 {
        let bits = delta - 1;
        let dim = 1usize << bits;
        let v = v_matrix(delta).unwrap();
        let p = p_matrix(bits).unwrap();
        // rebuild both matrices from their definitions and compare
        for x in 0..dim {
            for y in 0..dim {
                let d = x ^ y;
                let v_expected = if d == dim - 1 {
                    -1
                } else if d.count_ones() == 1 {
                    1
                } else {
                    0
                };
                c.check(v.get(x, y) == v_expected, || {
                    format!("Δ={delta}: V[{x}][{y}]")
                });
                let p_expected = if (x & y).count_ones() % 2 == 0 { 1 } else { -1 };
                c.check(p.get(x, y) == p_expected, || {
                    format!("Δ={delta}: P[{x}][{y}]")
                });
            }
        }
        let mut max_lambda = i64::MIN;
        for y in 0..dim {
            let signs: i64 = (0..bits)
                .map(|k| if y >> k & 1 == 0 { 1 } else { -1 })
                .sum();
            let parity = if y.count_ones() % 2 == 0 { 1 } else { -1 };
            let lambda = signs - parity;
            max_lambda = max_lambda.max(lambda);
            for x in 0..dim {
                let image: i64 = (0..dim).map(|z| v.get(x, z) * p.get(z, y)).sum();
                c.check(image == lambda * p.get(x, y), || {
                    format!(
                        "Δ={delta}: column {y} row {x}: {image} != {lambda}·{}",
                        p.get(x, y)
                    )
                });
            }
        }
        c.check(max_lambda == delta as i64 - 2, || {
            format!("Δ={delta}: max λ {max_lambda}")
        });
        match v_spectrum_check(delta) {
            Ok(r) => c.check(r.max_eigenvalue == delta as i64 - 2, || {
                format!("Δ={delta}: library max")
            }),
            Err(e) => c.check(false, || format!("Δ={delta}: {e}")),
        }
    }
    for m in 1..=7 {
        let p = p_matrix(m).unwrap();
        let n = 1usize << m;
        for x in 0..n {
            for y in 0..n {
                let sq: i64 = (0..n).map(|z| p.get(x, z) * p.get(z, y)).sum();
                let expected = if x == y { n as i64 } else { 0 };
                c.check(sq == expected, || format!("P_{m}² [{x}][{y}] = {sq}"));
            }
        }
    }
    c.finish("V eigenvectors and eigenvalues exact for Δ = 3..7; P_m² = 2^m I for m = 1..7");
}

#[test]
fn criterion_6_decomposition_bracketing() {
    let mut c = Criterion::new(6);
    let mut gap_max: f64 = 0.0;
    let mut gap_min = f64::INFINITY;
    for i in 0..200u64 {
        let mut rng = stream_rng(6006, i);
        let rho = random_mixed_two_qubit(&mut rng);
        let conc = concurrence(&rho).unwrap();
        let coa = concurrence_of_assistance(&rho).unwrap();
        let mut best: f64 = 0.0;
        for j in 0..2000 {
            let size = 4 + j % 5;
            let d = sample_decomposition_with(&rho, size, &mut rng).unwrap();
            let avg = decomposition_average_concurrence(&d).unwrap();
            best = best.max(avg);
            c.check(avg >= conc - 1e-9 && avg <= coa + 1e-9, || {
                format!("state {i} decomposition {j}: {avg} outside [{conc}, {coa}]")
            });
        }
        gap_max = gap_max.max(coa - best);
        gap_min = gap_min.min(coa - best);
    }
    c.finish(&format!(
        "400000 decompositions bracketed by [C, C_a]; gap from best sample to C_a in [{gap_min:.3e}, {gap_max:.3e}]"
    ));
}

#[test]
fn criterion_7_three_qubit_equality() {
    let mut c = Criterion::new(7);
    let checker = Checker::new(1e-9).unwrap();
    let mut worst: f64 = 0.0;
    for s in 0..1000u64 {
        let psi = haar_random_pure(3, 70_000 + s).unwrap();
        let p = StateProfile::new(&psi).unwrap();
        let lhs: f64 = p.pairs.iter().map(|m| m.tangle + m.tangle_a).sum();
        let rhs = 2.0 * p.s_lin_a;
        worst = worst.max((lhs - rhs).abs());
        c.check((lhs - rhs).abs() <= 1e-9, || {
            format!("seed {s}: {lhs} vs {rhs}")
        });
        let r = checker.three_qubit_equality(&psi).unwrap();
        c.check(r.verdict == Verdict::Saturated, || {
            format!("seed {s}: verdict {}", r.verdict)
        });
    }
    c.finish(&format!(
        "1000 Haar 3-qubit states, max |lhs - rhs| = {worst:.1e}"
    ));
}

#[test]
fn criterion_8_hunt_floor_and_ceiling() {
    let mut c = Criterion::new(8);
    let mut log = Vec::new();
    for n in [5, 6] {
        let ceiling = (n - 1) as f64 - 2.0;
        for mode in [HuntMode::Min, HuntMode::Max] {
            let params = HuntParams {
                restarts: 20,
                iters: 2000,
                mode,
                ..HuntParams::default()
            };
            let s = cmd_hunt(&RunConfig::hunt(n, params, 8000 + n as u64)).unwrap();
            let min_seen = s
                .restarts
                .iter()
                .map(|r| r.min_seen)
                .fold(f64::INFINITY, f64::min);
            let max_seen = s
                .restarts
                .iter()
                .map(|r| r.max_seen)
                .fold(f64::NEG_INFINITY, f64::max);
            c.check(min_seen >= -1.0 - 1e-9, || {
                format!("N={n} {mode}: D = {min_seen} below -1")
            });
            c.check(max_seen <= ceiling + 1e-9, || {
                format!("N={n} {mode}: D = {max_seen} above {ceiling}")
            });
            c.check(!s.any_violation(), || {
                format!("N={n} {mode}: harness flagged a violation")
            });
            log.push(format!("N={n} {mode} best {:+.6}", s.best_value));
        }
    }
    c.finish(&format!(
        "floor -1 and ceiling M - 2 respected; {}",
        log.join(", ")
    ));
}

#[test]
fn spin_flip_oracle_sanity() {
    let bell = family(StateFamily::Bell, 2).density_matrix();
    assert!((tr_rho_rho_tilde(&bell) - 1.0).abs() < 1e-12);
    let zero = PureState::basis(2, 0).unwrap();
    assert!(tr_rho_rho_tilde(&zero.density_matrix()).abs() < 1e-12);
    let plus = Complex64::new(0.5, 0.0);
    let product = PureState::new(2, vec![plus; 4]).unwrap();
    assert!(tr_rho_rho_tilde(&product.density_matrix()).abs() < 1e-12);
}
