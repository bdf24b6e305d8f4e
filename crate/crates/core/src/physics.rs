//! Physical consequences of permutation symmetry on the finite model.
//!
//! Two-body matrix elements are written `⟨pq|g|rs⟩`: particle 1 goes from `r`
//! to `p` and particle 2 from `s` to `q`. The exchange integral entering the
//! closed energy formula is `⟨v_a v_b|g|v_b v_a⟩`.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::irreps::Irrep;
use crate::linalg::Matrix;
use crate::perm::{self, Permutation, Sign};
use crate::projection::{self, ProductState, StateVector, SymmetryAdaptedState, TensorSpace};
use crate::young::YoungDiagram;
use crate::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;

/// One-body operator `h` (`M × M`) and two-body operator `g` (`M² × M²`,
/// row `p·M + q`, column `r·M + s` holding `⟨pq|g|rs⟩`).
#[derive(Debug, Clone, PartialEq)]
pub struct ModelHamiltonian {
    m: usize,
    h: Matrix<Complex64>,
    g: Matrix<Complex64>,
}

impl ModelHamiltonian {
    pub fn new(h: Matrix<Complex64>, g: Matrix<Complex64>) -> Result<Self> {
        let m = h.rows();
        if !h.is_square() || m == 0 {
            return Err(Error::SizeMismatch {
                what: "one-body operator shape",
                left: h.rows(),
                right: h.cols(),
            });
        }
        if g.rows() != m * m || g.cols() != m * m {
            return Err(Error::SizeMismatch {
                what: "two-body operator dimension vs M^2",
                left: g.rows().max(g.cols()),
                right: m * m,
            });
        }
        let herm_h = h.max_abs_difference(&h.adjoint());
        if herm_h > HERMITIAN_TOL {
            return Err(Error::NotHermitian("one-body operator", herm_h));
        }
        let herm_g = g.max_abs_difference(&g.adjoint());
        if herm_g > HERMITIAN_TOL {
            return Err(Error::NotHermitian("two-body operator", herm_g));
        }
        let exch = g.max_abs_difference(&exchange_conjugate(&g, m));
        if exch > HERMITIAN_TOL {
            return Err(Error::NotExchangeSymmetric(exch));
        }
        Ok(Self { m, h, g })
    }

    /// Random Hermitian `h = A + A†` and a random Hermitian `g` averaged with
    /// its particle-exchanged copy. Entries of `A` are uniform in `[-1, 1]²`.
    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<Self> {
        let a = random_matrix(m, rng);
        let h = hermitian_part(&a);
        let b = hermitian_part(&random_matrix(m * m, rng));
        let swapped = exchange_conjugate(&b, m);
        let mut g = Matrix::zeros(m * m, m * m);
        for i in 0..m * m {
            for j in 0..m * m {
                g[(i, j)] = (b[(i, j)] + swapped[(i, j)]) * 0.5;
            }
        }
        Self::new(h, g)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn one_body(&self) -> &Matrix<Complex64> {
        &self.h
    }

    pub fn two_body(&self) -> &Matrix<Complex64> {
        &self.g
    }

    /// `⟨pq|g|rs⟩`, 0-based.
    pub fn g(&self, p: usize, q: usize, r: usize, s: usize) -> Complex64 {
        self.g[(p * self.m + q, r * self.m + s)]
    }
}

fn random_matrix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix<Complex64> {
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    a
}

fn hermitian_part(a: &Matrix<Complex64>) -> Matrix<Complex64> {
    let adj = a.adjoint();
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = a[(i, j)] + adj[(i, j)];
        }
    }
    out
}

// X g X with X the two-particle swap: entry (pq, rs) ↦ g_{qp,sr}
fn exchange_conjugate(g: &Matrix<Complex64>, m: usize) -> Matrix<Complex64> {
    let mut out = Matrix::zeros(m * m, m * m);
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                for s in 0..m {
                    out[(p * m + q, r * m + s)] = g[(q * m + p, s * m + r)];
                }
            }
        }
    }
    out
}

/// `H = Σ_i h(i) + Σ_{i<j} g(i, j)` as a dense `M^N × M^N` matrix.
pub fn build_full_hamiltonian(
    hamiltonian: &ModelHamiltonian,
    space: &TensorSpace,
) -> Result<Matrix<Complex64>> {
    if space.one_particle_dim() != hamiltonian.m {
        return Err(Error::SizeMismatch {
            what: "Hamiltonian M vs one-particle dimension",
            left: hamiltonian.m,
            right: space.one_particle_dim(),
        });
    }
    space.check_dense()?;
    let m = hamiltonian.m;
    let n = space.n_particles();
    let dim = space.dim();
    let mut full = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let config = space.decode(col);
        let mut target = config.clone();
        for slot in 0..n {
            for p in 0..m {
                target[slot] = p;
                full[(space.encode(&target), col)] += hamiltonian.h[(p, config[slot])];
            }
            target[slot] = config[slot];
        }
        for a in 0..n {
            for b in a + 1..n {
                for p in 0..m {
                    for q in 0..m {
                        target[a] = p;
                        target[b] = q;
                        full[(space.encode(&target), col)] +=
                            hamiltonian.g(p, q, config[a], config[b]);
                    }
                }
                target[a] = config[a];
                target[b] = config[b];
            }
        }
    }
    Ok(full)
}

/// A density operator on the configuration space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    pub space: TensorSpace,
    pub matrix: Matrix<Complex64>,
    pub diagram: YoungDiagram,
    pub t: usize,
}

impl DensityOperator {
    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.matrix.hermiticity_error()
    }

    /// Probability of each configuration.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.matrix.rows())
            .map(|i| self.matrix[(i, i)].re)
            .collect()
    }
}

fn add_projector(matrix: &mut Matrix<Complex64>, v: &StateVector, weight: f64) {
    let amps = v.amplitudes();
    let support: Vec<usize> = (0..amps.len())
        .filter(|&i| amps[i] != Complex64::new(0.0, 0.0))
        .collect();
    for &i in &support {
        for &j in &support {
            matrix[(i, j)] += amps[i] * amps[j].conj() * weight;
        }
    }
}

/// `D_t = (1/f_λ) Σ_r |[λ] r t⟩⟨[λ] r t|`.
pub fn density_operator(
    diagram: &YoungDiagram,
    t: usize,
    xi: &ProductState,
) -> Result<DensityOperator> {
    density_operator_with(&Irrep::new(diagram), t, xi)
}

pub fn density_operator_with(
    irrep: &Irrep,
    t: usize,
    xi: &ProductState,
) -> Result<DensityOperator> {
    let space = *xi.space();
    space.check_dense()?;
    let states = projection::project_all_rows(irrep, t, xi)?;
    let weight = 1.0 / states.len() as f64;
    let mut matrix = Matrix::zeros(space.dim(), space.dim());
    for s in &states {
        add_projector(&mut matrix, &s.vector, weight);
    }
    Ok(DensityOperator {
        space,
        matrix,
        diagram: irrep.diagram().clone(),
        t,
    })
}

/// `|[λ] r t⟩⟨[λ] r t|` for a single basis vector, without averaging over `r`.
pub fn pure_state_projector(state: &SymmetryAdaptedState) -> Result<DensityOperator> {
    let space = *state.vector.space();
    space.check_dense()?;
    let mut matrix = Matrix::zeros(space.dim(), space.dim());
    add_projector(&mut matrix, &state.vector, 1.0);
    Ok(DensityOperator {
        space,
        matrix,
        diagram: state.diagram.clone(),
        t: state.t,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    /// `max_P ‖U(P) D U(P)† − D‖_F`.
    pub max_deviation: f64,
    pub per_permutation: Vec<(Permutation, f64)>,
    /// `max_P max_i |(U(P) D U(P)†)_ii − D_ii|`: the configuration
    /// probability density alone.
    pub max_diagonal_deviation: f64,
}

pub fn check_density_invariance(d: &DensityOperator) -> Result<InvarianceReport> {
    let space = d.space;
    let all = perm::enumerate_with_limit(space.n_particles(), space.limits().group_n)?;
    let dim = space.dim();
    let mut per_permutation = Vec::with_capacity(all.len());
    let mut max_deviation: f64 = 0.0;
    let mut max_diagonal_deviation: f64 = 0.0;
    for p in all {
        // (U D U†)[σ(i), σ(j)] = D[i, j]
        let sigma = space.permutation_map(&p)?;
        let mut sq = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                sq += (d.matrix[(i, j)] - d.matrix[(sigma[i], sigma[j])]).norm_sqr();
            }
            let diag = (d.matrix[(i, i)] - d.matrix[(sigma[i], sigma[i])]).norm();
            max_diagonal_deviation = max_diagonal_deviation.max(diag);
        }
        let dev = libm::sqrt(sq);
        max_deviation = max_deviation.max(dev);
        per_permutation.push((p, dev));
    }
    Ok(InvarianceReport {
        max_deviation,
        per_permutation,
        max_diagonal_deviation,
    })
}

/// `‖[H, U(P)]‖_F` for every permutation, in enumeration order.
pub fn commutator_norms(
    full: &Matrix<Complex64>,
    space: &TensorSpace,
) -> Result<Vec<(Permutation, f64)>> {
    if full.rows() != space.dim() || !full.is_square() {
        return Err(Error::SizeMismatch {
            what: "operator dimension vs M^N",
            left: full.rows(),
            right: space.dim(),
        });
    }
    let dim = space.dim();
    perm::enumerate_with_limit(space.n_particles(), space.limits().group_n)?
        .into_iter()
        .map(|p| {
            // U e_j = e_σ(j): (H U)[i, j] = H[i, σ(j)], (U H)[i, j] = H[σ⁻¹(i), j]
            let sigma = space.permutation_map(&p)?;
            let mut inverse = alloc::vec![0; dim];
            for (j, &s) in sigma.iter().enumerate() {
                inverse[s] = j;
            }
            let mut sq = 0.0;
            for i in 0..dim {
                for j in 0..dim {
                    sq += (full[(i, sigma[j])] - full[(inverse[i], j)]).norm_sqr();
                }
            }
            Ok((p, libm::sqrt(sq)))
        })
        .collect()
}

/// `E = Tr(H D_t)` with `H` built on the full configuration space.
pub fn energy_trace(
    diagram: &YoungDiagram,
    t: usize,
    xi: &ProductState,
    hamiltonian: &ModelHamiltonian,
) -> Result<f64> {
    energy_trace_with(&Irrep::new(diagram), t, xi, hamiltonian)
}

pub fn energy_trace_with(
    irrep: &Irrep,
    t: usize,
    xi: &ProductState,
    hamiltonian: &ModelHamiltonian,
) -> Result<f64> {
    let full = build_full_hamiltonian(hamiltonian, xi.space())?;
    let d = density_operator_with(irrep, t, xi)?;
    let dim = full.rows();
    let mut trace = Complex64::new(0.0, 0.0);
    for i in 0..dim {
        for j in 0..dim {
            trace += full[(i, j)] * d.matrix[(j, i)];
        }
    }
    Ok(trace.re)
}

/// `E_t = Σ_a ⟨v_a|h|v_a⟩ + Σ_{a<b} [⟨v_a v_b|g|v_a v_b⟩ + Γ_tt(P_ab) ⟨v_a v_b|g|v_b v_a⟩]`
/// for pairwise distinct 1-based orbital indices.
pub fn energy_closed_form(
    diagram: &YoungDiagram,
    t: usize,
    orbitals: &[usize],
    hamiltonian: &ModelHamiltonian,
) -> Result<f64> {
    energy_closed_form_with(&Irrep::new(diagram), t, orbitals, hamiltonian)
}

pub fn energy_closed_form_with(
    irrep: &Irrep,
    t: usize,
    orbitals: &[usize],
    hamiltonian: &ModelHamiltonian,
) -> Result<f64> {
    let n = irrep.diagram().n();
    if orbitals.len() != n {
        return Err(Error::SizeMismatch {
            what: "orbital count vs diagram size",
            left: orbitals.len(),
            right: n,
        });
    }
    let m = hamiltonian.m;
    if let Some(&bad) = orbitals.iter().find(|&&v| v == 0 || v > m) {
        return Err(Error::IndexOutOfRange {
            what: "orbital",
            index: bad,
            limit: m,
        });
    }
    let v: Vec<usize> = orbitals.iter().map(|x| x - 1).collect();
    let mut sorted = v.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedOrbitals);
    }
    let mut energy = 0.0;
    for &va in &v {
        energy += hamiltonian.h[(va, va)].re;
    }
    for a in 0..n {
        for b in a + 1..n {
            let direct = hamiltonian.g(v[a], v[b], v[a], v[b]).re;
            let exchange = hamiltonian.g(v[a], v[b], v[b], v[a]).re;
            energy += direct + irrep.exchange_coefficient(t, a + 1, b + 1)? * exchange;
        }
    }
    Ok(energy)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub diagram: YoungDiagram,
    /// 0-based tableau index.
    pub t: usize,
    pub e_closed_form: f64,
    pub e_trace: f64,
    pub discrepancy: f64,
}

/// Energies for every `t` of one diagram.
pub fn energy_report(
    diagram: &YoungDiagram,
    xi: &ProductState,
    hamiltonian: &ModelHamiltonian,
) -> Result<Vec<EnergyReport>> {
    let irrep = Irrep::new(diagram);
    let orbitals = xi.orbitals_one_based();
    (0..irrep.dimension())
        .map(|t| {
            let e_closed_form = energy_closed_form_with(&irrep, t, &orbitals, hamiltonian)?;
            let e_trace = energy_trace_with(&irrep, t, xi, hamiltonian)?;
            Ok(EnergyReport {
                diagram: diagram.clone(),
                t,
                e_closed_form,
                e_trace,
                discrepancy: libm::fabs(e_closed_form - e_trace),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperpositionReport {
    /// `|Ψ(i)|²` per configuration.
    pub density_diagonal: Vec<f64>,
    /// `|(P₁₂ Ψ)(i)|²` per configuration.
    pub permuted_density_diagonal: Vec<f64>,
    pub max_pointwise_difference: f64,
}

/// Mixes the symmetric and antisymmetric two-particle states built from `xi`,
/// `Ψ = c1 Ψ^[2] + c2 Ψ^[1²]`, and compares its configuration density with
/// that of `P₁₂ Ψ`.
pub fn superposition_probe(
    c1: Complex64,
    c2: Complex64,
    xi: &ProductState,
) -> Result<SuperpositionReport> {
    let total = c1.norm_sqr() + c2.norm_sqr();
    if libm::fabs(total - 1.0) > 1e-10 {
        return Err(Error::NotNormalized(total));
    }
    if xi.space().n_particles() != 2 {
        return Err(Error::SizeMismatch {
            what: "superposition probe needs two particles",
            left: xi.space().n_particles(),
            right: 2,
        });
    }
    let sym = projection::project(&YoungDiagram::row(2)?, 0, 0, xi)?;
    let anti = projection::project(&YoungDiagram::column(2)?, 0, 0, xi)?;
    let psi = sym.vector.scaled(c1).plus(&anti.vector.scaled(c2));
    let swapped = projection::permute_state(&Permutation::transposition(1, 2, 2)?, &psi)?;
    let density_diagonal = psi.probability_density();
    let permuted_density_diagonal = swapped.probability_density();
    let max_pointwise_difference = density_diagonal
        .iter()
        .zip(&permuted_density_diagonal)
        .map(|(a, b)| libm::fabs(a - b))
        .fold(0.0, f64::max);
    Ok(SuperpositionReport {
        density_diagonal,
        permuted_density_diagonal,
        max_pointwise_difference,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    pub fn exchange_sign(self) -> Sign {
        match self {
            Statistics::Boson => Sign::Plus,
            Statistics::Fermion => Sign::Minus,
        }
    }
}

/// A bound cluster of particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositeParticle {
    pub fermion_constituents: u64,
    /// Total spin as `2s`, when known.
    pub twice_spin: Option<u64>,
}

/// `(−1)^{2s}`.
pub fn spin_exchange_sign(twice_spin: i64) -> Result<Sign> {
    if twice_spin < 0 {
        return Err(Error::NegativeSpin(twice_spin));
    }
    Ok(if twice_spin % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    })
}

/// Even fermion count: boson; odd: fermion.
pub fn composite_statistics(c: &CompositeParticle) -> Result<Statistics> {
    let stats = if c.fermion_constituents.is_multiple_of(2) {
        Statistics::Boson
    } else {
        Statistics::Fermion
    };
    if let Some(twice_spin) = c.twice_spin {
        if twice_spin % 2 != c.fermion_constituents % 2 {
            return Err(Error::InconsistentComposite {
                fermions: c.fermion_constituents,
                twice_spin,
            });
        }
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParafermiOccupancy {
    pub max_occupancy: u32,
    pub reduces_to_fermi_dirac: bool,
}

/// Largest occupation of one state under parafermi statistics of rank `p`.
pub fn parafermi_max_occupancy(p: u32) -> Result<ParafermiOccupancy> {
    if p == 0 {
        return Err(Error::InvalidRank);
    }
    Ok(ParafermiOccupancy {
        max_occupancy: p,
        reduces_to_fermi_dirac: p == 1,
    })
}
