//! Acceptance suite. Runs every criterion at its pinned tolerance and time
//! budget, printing one PASS/FAIL line each; exits non-zero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use permsym::irreps::{self, Irrep, VerifyMode};
use permsym::perm::{self, Permutation};
use permsym::physics::{self, CompositeParticle, ModelHamiltonian};
use permsym::projection::{self, ProductState, TensorSpace};
use permsym::young::{self, YoungDiagram};
use permsym::{Complex64, Matrix};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-10;
const TIGHT: f64 = 1e-12;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: permsym::Error) -> String {
    e.to_string()
}

fn random_source(n: usize, m: usize, rng: &mut ChaCha8Rng) -> ProductState {
    let mut pool: Vec<usize> = (1..=m).collect();
    pool.shuffle(rng);
    ProductState::new(TensorSpace::new(n, m).unwrap(), &pool[..n]).unwrap()
}

fn c1_regular_representation() -> Outcome {
    for n in 1..=8 {
        let sum: u128 = young::partitions(n)
            .map_err(err)?
            .iter()
            .map(|l| (l.dimension() as u128).pow(2))
            .sum();
        ensure(sum == perm::factorial(n), || {
            format!("N={n}: Σf² = {sum} ≠ {}", perm::factorial(n))
        })?;
    }
    Ok("Σ f_λ² = N! exactly for N = 1..8".into())
}

fn c2_representation_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut hom, mut orth) = (0.0f64, 0.0f64);
    for n in 1..=6 {
        for l in young::partitions(n).map_err(err)? {
            let mode = if n <= 4 {
                VerifyMode::Exhaustive
            } else {
                VerifyMode::Random { trials: 1000 }
            };
            let rep =
                irreps::verify_representation(&Irrep::new(&l), mode, &mut rng).map_err(err)?;
            hom = hom.max(rep.max_homomorphism_error);
            orth = orth.max(rep.max_orthogonality_error);
            ensure(rep.passes(TOL), || format!("{l:?}: {rep:?}"))?;
        }
    }
    Ok(format!(
        "max homomorphism error {hom:.2e}, max orthogonality error {orth:.2e}"
    ))
}

fn c3_great_orthogonality() -> Outcome {
    let mut worst = 0.0f64;
    for n in [3, 4] {
        let irreps: Vec<Irrep> = young::partitions(n)
            .map_err(err)?
            .iter()
            .map(Irrep::new)
            .collect();
        for a in &irreps {
            for b in &irreps {
                let e = irreps::great_orthogonality_error(a, b).map_err(err)?;
                worst = worst.max(e);
                ensure(e < TOL, || {
                    format!("{:?} × {:?}: {e:e}", a.diagram(), b.diagram())
                })?;
            }
        }
    }
    Ok(format!("max deviation {worst:.2e}"))
}

fn c4_projection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut ortho, mut complete, mut cov) = (0.0f64, 0.0f64, 0.0f64);
    for n in 1..=4 {
        let xi = random_source(n, n + 1, &mut rng);
        let dec = projection::decompose_regular(&xi).map_err(err)?;
        ortho = ortho.max(dec.orthonormality_error);
        complete = complete.max(dec.completeness_error);
        ensure(dec.orthonormality_error < TOL, || {
            format!("N={n} orthonormality")
        })?;
        ensure(dec.completeness_error < TOL, || {
            format!("N={n} completeness")
        })?;
        ensure(dec.states.len() as u128 == perm::factorial(n), || {
            format!("N={n} count")
        })?;

        let all = perm::enumerate(n).map_err(err)?;
        for l in young::partitions(n).map_err(err)? {
            let irrep = Irrep::new(&l);
            for t in 0..irrep.dimension() {
                let basis = projection::project_all_rows(&irrep, t, &xi).map_err(err)?;
                for p in &all {
                    let g = irrep.matrix(p).map_err(err)?;
                    for (r, state) in basis.iter().enumerate() {
                        let moved = projection::permute_state(p, &state.vector).map_err(err)?;
                        let mut expected = projection::StateVector::zeros(*xi.space());
                        for (r2, other) in basis.iter().enumerate() {
                            expected = expected
                                .plus(&other.vector.scaled(Complex64::new(g[(r2, r)], 0.0)));
                        }
                        let dev = moved.distance(&expected);
                        cov = cov.max(dev);
                        ensure(dev < TOL, || format!("{l:?} r={r} t={t} P={p}: {dev:e}"))?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "orthonormality {ortho:.2e}, completeness {complete:.2e}, covariance {cov:.2e}"
    ))
}

fn c5_density_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    let mut weakest_violation = f64::INFINITY;
    for n in 1..=4 {
        for l in young::partitions(n).map_err(err)? {
            let irrep = Irrep::new(&l);
            for _ in 0..5 {
                let xi = random_source(n, n + 1, &mut rng);
                for t in 0..irrep.dimension() {
                    let d = physics::density_operator_with(&irrep, t, &xi).map_err(err)?;
                    let rep = physics::check_density_invariance(&d).map_err(err)?;
                    worst = worst.max(rep.max_deviation);
                    ensure(rep.max_deviation < TOL, || {
                        format!("{l:?} t={t}: {:e}", rep.max_deviation)
                    })?;
                }
            }
            if irrep.dimension() > 1 {
                let xi = random_source(n, n + 1, &mut rng);
                let mut best = 0.0f64;
                for t in 0..irrep.dimension() {
                    for state in projection::project_all_rows(&irrep, t, &xi).map_err(err)? {
                        let single = physics::pure_state_projector(&state).map_err(err)?;
                        let rep = physics::check_density_invariance(&single).map_err(err)?;
                        best = best.max(rep.max_deviation);
                    }
                }
                weakest_violation = weakest_violation.min(best);
                ensure(best > 0.05, || {
                    format!("{l:?}: single projector deviation {best}")
                })?;
            }
        }
    }
    Ok(format!(
        "averaged max deviation {worst:.2e}; single-vector projectors violate by ≥ {weakest_violation:.3}"
    ))
}

fn c6_energy_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    let mut checked = 0;
    for n in 2..=4 {
        let xi = ProductState::new(
            TensorSpace::new(n, n).unwrap(),
            &(1..=n).collect::<Vec<_>>(),
        )
        .map_err(err)?;
        for seed in 0..20 {
            let h = ModelHamiltonian::random(n, &mut ChaCha8Rng::seed_from_u64(600 + seed))
                .map_err(err)?;
            for l in young::partitions(n).map_err(err)? {
                for rep in physics::energy_report(&l, &xi, &h).map_err(err)? {
                    worst = worst.max(rep.discrepancy);
                    checked += 1;
                    ensure(rep.discrepancy < TOL, || format!("{rep:?}"))?;
                }
            }
        }
        let row = Irrep::new(&YoungDiagram::row(n).unwrap());
        let col = Irrep::new(&YoungDiagram::column(n).unwrap());
        for a in 1..=n {
            for b in a + 1..=n {
                ensure(
                    row.exchange_coefficient(0, a, b).map_err(err)? == 1.0,
                    || format!("[{n}] weight for P{a}{b}"),
                )?;
                ensure(
                    col.exchange_coefficient(0, a, b).map_err(err)? == -1.0,
                    || format!("[1^{n}] weight for P{a}{b}"),
                )?;
            }
        }
    }
    Ok(format!("{checked} (λ, t, H) cases, max |ΔE| {worst:.2e}"))
}

fn c7_branching() -> Outcome {
    for n in 2..=6 {
        for l in young::partitions(n).map_err(err)? {
            let parents = l.branching();
            for (mu, m) in irreps::restriction_multiplicities(&Irrep::new(&l)).map_err(err)? {
                let expected = if parents.contains(&mu) { 1.0 } else { 0.0 };
                ensure((m - expected).abs() < TOL, || {
                    format!("{l:?} restricted to {mu:?}: multiplicity {m}")
                })?;
            }
        }
    }
    // in-degree clause, exactly as stated: 1 for [N] and [1^N], ≥ 2 otherwise
    let graph = young::genealogy_graph(6).map_err(err)?;
    let mut offenders = Vec::new();
    for (i, l) in graph.nodes.iter().enumerate() {
        if l.n() < 2 {
            continue;
        }
        let deg = graph.in_degree(i);
        let ok = if l.is_row() || l.is_column() {
            deg == 1
        } else {
            deg >= 2
        };
        if !ok {
            offenders.push(format!("{l:?} in-degree {deg}"));
        }
    }
    ensure(offenders.is_empty(), || {
        format!(
            "restriction multiplicities match for N ≤ 6, but in-degree clause fails: {}",
            offenders.join(", ")
        )
    })?;
    Ok("restriction multiplicities and in-degrees match for N ≤ 6".into())
}

fn c8_superposition() -> Outcome {
    let xi = ProductState::new(TensorSpace::new(2, 2).unwrap(), &[1, 2]).map_err(err)?;
    let c = |x: f64| Complex64::new(x, 0.0);
    let i = Complex64::new(0.0, 1.0);
    for (c1, c2) in [
        (c(1.0), c(0.0)),
        (c(0.0), c(1.0)),
        (i, c(0.0)),
        (c(0.0), -i),
    ] {
        let rep = physics::superposition_probe(c1, c2, &xi).map_err(err)?;
        ensure(rep.max_pointwise_difference < TIGHT, || {
            format!("c1={c1}, c2={c2}: {}", rep.max_pointwise_difference)
        })?;
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rep = physics::superposition_probe(c(h), c(h), &xi).map_err(err)?;
    ensure((rep.max_pointwise_difference - 1.0).abs() < TIGHT, || {
        format!("c1=c2=1/√2: {}", rep.max_pointwise_difference)
    })?;
    Ok("difference 0 for pure symmetry, 1 for the equal mixture".into())
}

fn c9_slater() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    use rand::Rng;
    let mut worst_dup = 0.0f64;
    let mut worst_anti = 0.0f64;
    for n in 2..=5 {
        let m = n + 2;
        for _ in 0..20 {
            let data: Vec<Complex64> = (0..n * m)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let mut orbitals = Matrix::from_row_major(n, m, data).map_err(err)?;
            let mut config: Vec<usize> = (1..=m).collect();
            config.shuffle(&mut rng);
            config.truncate(n);

            let amp = projection::slater_determinant(&orbitals, &config).map_err(err)?;
            let mut swapped = config.clone();
            swapped.swap(0, n - 1);
            let amp_swapped = projection::slater_determinant(&orbitals, &swapped).map_err(err)?;
            worst_anti = worst_anti.max((amp + amp_swapped).norm());

            for j in 0..m {
                orbitals[(1, j)] = orbitals[(0, j)];
            }
            let dup = projection::slater_determinant(&orbitals, &config).map_err(err)?;
            worst_dup = worst_dup.max(dup.norm());
        }
    }
    ensure(worst_dup < TIGHT, || {
        format!("duplicated orbital amplitude {worst_dup:e}")
    })?;
    ensure(worst_anti < TIGHT, || {
        format!("antisymmetry error {worst_anti:e}")
    })?;
    Ok(format!(
        "|ψ_dup| ≤ {worst_dup:.2e}, antisymmetry error ≤ {worst_anti:.2e}"
    ))
}

fn c10_composite_statistics() -> Outcome {
    let mut count = 0;
    for twice_spin in 0..=20u64 {
        let sign = physics::spin_exchange_sign(twice_spin as i64).map_err(err)?;
        for fermions in 0..=41u64 {
            let c = CompositeParticle {
                fermion_constituents: fermions,
                twice_spin: Some(twice_spin),
            };
            let res = physics::composite_statistics(&c);
            if fermions % 2 == twice_spin % 2 {
                let stats = res.map_err(err)?;
                ensure(stats.exchange_sign() == sign, || format!("{c:?}"))?;
                count += 1;
            } else {
                ensure(res.is_err(), || format!("{c:?} should be rejected"))?;
            }
        }
    }
    Ok(format!("{count} consistent inputs agree"))
}

fn c11_commutation() -> Outcome {
    let space = TensorSpace::new(3, 3).unwrap();
    let mut worst = 0.0f64;
    for seed in 0..5 {
        let h = ModelHamiltonian::random(3, &mut ChaCha8Rng::seed_from_u64(1100 + seed))
            .map_err(err)?;
        let full = physics::build_full_hamiltonian(&h, &space).map_err(err)?;
        for (p, norm) in physics::commutator_norms(&full, &space).map_err(err)? {
            worst = worst.max(norm);
            ensure(norm < TOL, || format!("seed {seed}, P={p}: {norm:e}"))?;
        }
    }
    let _ = Permutation::identity(3);
    Ok(format!("max ‖[H, U(P)]‖ {worst:.2e}"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "regular-representation identity",
            budget: Duration::from_secs(1),
            run: c1_regular_representation,
        },
        Criterion {
            id: 2,
            name: "representation validity",
            budget: Duration::from_secs(10),
            run: c2_representation_validity,
        },
        Criterion {
            id: 3,
            name: "great orthogonality",
            budget: Duration::from_secs(5),
            run: c3_great_orthogonality,
        },
        Criterion {
            id: 4,
            name: "projection correctness",
            budget: Duration::from_secs(10),
            run: c4_projection,
        },
        Criterion {
            id: 5,
            name: "density-operator invariance",
            budget: Duration::from_secs(20),
            run: c5_density_invariance,
        },
        Criterion {
            id: 6,
            name: "energy oracle equivalence",
            budget: Duration::from_secs(30),
            run: c6_energy_equivalence,
        },
        Criterion {
            id: 7,
            name: "branching and genealogy",
            budget: Duration::from_secs(10),
            run: c7_branching,
        },
        Criterion {
            id: 8,
            name: "superposition counterexample",
            budget: Duration::from_secs(1),
            run: c8_superposition,
        },
        Criterion {
            id: 9,
            name: "Slater determinant",
            budget: Duration::from_secs(1),
            run: c9_slater,
        },
        Criterion {
            id: 10,
            name: "spin and composite statistics",
            budget: Duration::from_secs(1),
            run: c10_composite_statistics,
        },
        Criterion {
            id: 11,
            name: "Hamiltonian commutes with permutations",
            budget: Duration::from_secs(5),
            run: c11_commutation,
        },
    ];

    let total = Instant::now();
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => {
                Err(format!("{detail}; exceeded time budget {:.0?}", c.budget))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS  criterion {:>2}  {:<40} {:>8.3}s  {detail}",
                c.id,
                c.name,
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "FAIL  criterion {:>2}  {:<40} {:>8.3}s  {detail}",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    let total = total.elapsed();
    let suite_ok = total < Duration::from_secs(90);
    println!(
        "{}  full suite {:.3}s (budget 90s); {} of {} criteria passed",
        if suite_ok { "PASS" } else { "FAIL" },
        total.as_secs_f64(),
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 && suite_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
