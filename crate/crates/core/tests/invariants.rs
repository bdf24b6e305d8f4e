use nalgebra::{DMatrix, DVector};
use permsym::irreps::Irrep;
use permsym::perm::{self, Permutation};
use permsym::physics::{self, ModelHamiltonian};
use permsym::projection::{self, ProductState, TensorSpace};
use permsym::young::{self, YoungDiagram};
use permsym::Complex64;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn configs(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o);
                    next
                })
            })
            .collect();
    }
    out
}

fn index_of(config: &[usize], m: usize) -> usize {
    config.iter().fold(0, |acc, &o| acc * m + o)
}

// slot s of |c⟩ moves to slot p(s)
fn permutation_operator(p: &Permutation, n: usize, m: usize) -> DMatrix<Complex64> {
    let dim = m.pow(n as u32);
    let mut u = DMatrix::zeros(dim, dim);
    for config in configs(n, m) {
        let mut moved = vec![0; n];
        for (s, &o) in config.iter().enumerate() {
            moved[p.images()[s]] = o;
        }
        u[(index_of(&moved, m), index_of(&config, m))] = c(1.0);
    }
    u
}

fn full_hamiltonian(h: &ModelHamiltonian, n: usize) -> DMatrix<Complex64> {
    let m = h.m();
    let all = configs(n, m);
    let dim = all.len();
    let mut out = DMatrix::zeros(dim, dim);
    for bra in &all {
        for ket in &all {
            let same_except =
                |skip: &[usize]| (0..n).all(|k| skip.contains(&k) || bra[k] == ket[k]);
            let mut v = c(0.0);
            for i in 0..n {
                if same_except(&[i]) {
                    v += h.one_body()[(bra[i], ket[i])];
                }
                for j in i + 1..n {
                    if same_except(&[i, j]) {
                        v += h.g(bra[i], bra[j], ket[i], ket[j]);
                    }
                }
            }
            out[(index_of(bra, m), index_of(ket, m))] = v;
        }
    }
    out
}

fn young_state_oracle(
    irrep: &Irrep,
    r: usize,
    t: usize,
    orbitals: &[usize],
    m: usize,
) -> DVector<Complex64> {
    let n = orbitals.len();
    let dim = m.pow(n as u32);
    let mut xi = DVector::zeros(dim);
    let zero_based: Vec<usize> = orbitals.iter().map(|o| o - 1).collect();
    xi[index_of(&zero_based, m)] = c(1.0);
    let norm = (irrep.dimension() as f64 / perm::factorial(n) as f64).sqrt();
    let mut out = DVector::zeros(dim);
    for p in perm::enumerate(n).unwrap() {
        let coeff = irrep.matrix(&p).unwrap()[(r, t)];
        out += permutation_operator(&p, n, m) * &xi * c(norm * coeff);
    }
    out
}

fn random_orbitals(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=m).collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool
}

#[test]
fn projection_matches_dense_young_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 2..=4 {
        let m = n + 1;
        let orbitals = random_orbitals(n, m, &mut rng);
        let xi = ProductState::new(TensorSpace::new(n, m).unwrap(), &orbitals).unwrap();
        for l in young::partitions(n).unwrap() {
            let irrep = Irrep::new(&l);
            for t in 0..irrep.dimension() {
                for r in 0..irrep.dimension() {
                    let got = projection::project(&l, r, t, &xi).unwrap();
                    let want = young_state_oracle(&irrep, r, t, &orbitals, m);
                    let err: f64 = got
                        .vector
                        .amplitudes()
                        .iter()
                        .zip(want.iter())
                        .map(|(a, b)| (a - b).norm_sqr())
                        .sum::<f64>()
                        .sqrt();
                    assert!(err < 1e-12, "{l:?} r={r} t={t}: {err}");
                }
            }
        }
    }
}

#[test]
fn energies_match_dense_expectation_values() {
    for seed in 0..10 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 3;
        let m = 4;
        let h = ModelHamiltonian::random(m, &mut rng).unwrap();
        let dense = full_hamiltonian(&h, n);
        let orbitals = random_orbitals(n, m, &mut rng);
        for l in young::partitions(n).unwrap() {
            let irrep = Irrep::new(&l);
            let f = irrep.dimension();
            for t in 0..f {
                let mut oracle = 0.0;
                for r in 0..f {
                    let psi = young_state_oracle(&irrep, r, t, &orbitals, m);
                    oracle += (psi.adjoint() * &dense * &psi)[(0, 0)].re / f as f64;
                }
                let closed = physics::energy_closed_form(&l, t, &orbitals, &h).unwrap();
                assert!(
                    (closed - oracle).abs() < 1e-10,
                    "{l:?} t={t}: {closed} vs {oracle}"
                );
            }
        }
    }
}

#[test]
fn full_hamiltonian_matches_dense_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = ModelHamiltonian::random(3, &mut rng).unwrap();
    let space = TensorSpace::new(3, 3).unwrap();
    let ours = physics::build_full_hamiltonian(&h, &space).unwrap();
    let oracle = full_hamiltonian(&h, 3);
    for i in 0..space.dim() {
        for j in 0..space.dim() {
            assert!((ours[(i, j)] - oracle[(i, j)]).norm() < 1e-14);
        }
    }
}

#[test]
fn mixed_symmetry_density_has_two_equal_eigenvalues() {
    let xi = ProductState::new(TensorSpace::new(3, 3).unwrap(), &[1, 2, 3]).unwrap();
    let mixed = YoungDiagram::new(vec![2, 1]).unwrap();
    for t in 0..2 {
        let d = physics::density_operator(&mixed, t, &xi).unwrap();
        let dim = d.space.dim();
        let dense = DMatrix::from_fn(dim, dim, |i, j| d.matrix[(i, j)]);
        let mut eig: Vec<f64> = dense
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        eig.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!(
            (eig[0] - 0.5).abs() < 1e-12 && (eig[1] - 0.5).abs() < 1e-12,
            "{eig:?}"
        );
        assert!(eig[2..].iter().all(|e| e.abs() < 1e-12));
    }
}

#[test]
fn mixed_symmetry_energy_depends_on_tableau() {
    let h = ModelHamiltonian::random(3, &mut ChaCha8Rng::seed_from_u64(2024)).unwrap();
    let mixed = YoungDiagram::new(vec![2, 1]).unwrap();
    let e0 = physics::energy_closed_form(&mixed, 0, &[1, 2, 3], &h).unwrap();
    let e1 = physics::energy_closed_form(&mixed, 1, &[1, 2, 3], &h).unwrap();
    assert!((e0 - e1).abs() > 1e-6, "{e0} {e1}");
}

fn diagram_strategy() -> impl Strategy<Value = YoungDiagram> {
    (1usize..=7)
        .prop_flat_map(|n| {
            let count = young::partitions(n).unwrap().len();
            (Just(n), 0..count)
        })
        .prop_map(|(n, i)| young::partitions(n).unwrap().swap_remove(i))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn irreps_are_orthogonal_homomorphisms(l in diagram_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = l.n();
        let irrep = Irrep::new(&l);
        let p = Permutation::random(n, &mut rng).unwrap();
        let q = Permutation::random(n, &mut rng).unwrap();
        let f = irrep.dimension();
        let dense = |x: &Permutation| {
            let g = irrep.matrix(x).unwrap();
            DMatrix::from_fn(f, f, |i, j| g[(i, j)])
        };
        let (gp, gq, gpq) = (dense(&p), dense(&q), dense(&p.compose(&q).unwrap()));
        prop_assert!((&gp * &gq - &gpq).abs().max() < 1e-10);
        prop_assert!((gp.transpose() * &gp - DMatrix::identity(f, f)).abs().max() < 1e-10);
        prop_assert!((irrep.character(&p).unwrap() - gp.trace()).abs() < 1e-10);
    }

    #[test]
    fn density_operators_are_normalized_and_invariant(
        n in 2usize..=4,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let orbitals = random_orbitals(n, n + 1, &mut rng);
        let xi = ProductState::new(TensorSpace::new(n, n + 1).unwrap(), &orbitals).unwrap();
        let parts = young::partitions(n).unwrap();
        let l = parts.choose(&mut rng).unwrap();
        let t = (seed as usize) % l.dimension() as usize;
        let d = physics::density_operator(l, t, &xi).unwrap();
        prop_assert!((d.trace() - c(1.0)).norm() < 1e-12);
        prop_assert!(d.hermiticity_error() < 1e-12);
        prop_assert!(physics::check_density_invariance(&d).unwrap().max_deviation < 1e-10);
    }

    #[test]
    fn superposition_difference_tracks_the_mixture(theta in 0.0f64..std::f64::consts::TAU) {
        let xi = ProductState::new(TensorSpace::new(2, 2).unwrap(), &[1, 2]).unwrap();
        let (c1, c2) = (theta.cos(), theta.sin());
        let rep = physics::superposition_probe(c(c1), c(c2), &xi).unwrap();
        prop_assert!((rep.max_pointwise_difference - 2.0 * (c1 * c2).abs()).abs() < 1e-12);
    }

    #[test]
    fn configuration_indices_round_trip(n in 1usize..=5, m in 1usize..=6, raw in any::<u64>()) {
        let space = TensorSpace::new(n, m).unwrap();
        let index = (raw as usize) % space.dim();
        let config = space.decode(index);
        prop_assert_eq!(space.encode(&config), index);
        prop_assert_eq!(index_of(&config, m), index);
    }
}

#[test]
fn action_matches_dense_permutation_operator() {
    let n = 3;
    let m = 2;
    let space = TensorSpace::new(n, m).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let amps: Vec<Complex64> = (0..space.dim())
        .map(|_| Complex64::new(rand::Rng::gen_range(&mut rng, -1.0..1.0), 0.5))
        .collect();
    let w = projection::StateVector::from_amplitudes(space, amps.clone()).unwrap();
    for p in perm::enumerate(n).unwrap() {
        let got = projection::permute_state(&p, &w).unwrap();
        let want = permutation_operator(&p, n, m) * DVector::from_vec(amps.clone());
        for (a, b) in got.amplitudes().iter().zip(want.iter()) {
            assert!((a - b).norm() < 1e-15);
        }
    }
}
