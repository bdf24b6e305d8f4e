//! Finite tensor-product model of `N` identical particles, the permutation
//! action on it, and Young-operator projection of product states.
//!
//! A configuration `(i_1, …, i_N)` of one-particle basis indices is stored at
//! the mixed-radix index `Σ_s i_s M^(N−s)` (particle 1 most significant).
//!
//! `U(p)` moves the content of slot `s` into slot `p(s)`:
//! `(U(p) w)(i_1, …, i_N) = w(i_{p(1)}, …, i_{p(N)})`. With
//! `p = (1 2 3)` (one-line `[2, 3, 1]`) the product `|a b c⟩` becomes
//! `|c a b⟩`, and `U(p ∘ q) = U(p) U(q)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::irreps::Irrep;
use crate::linalg::{self, Matrix};
use crate::perm::{self, Permutation};
use crate::young::{self, YoungDiagram};
use crate::{Error, Limits, Result};

/// `N` particles, each with an `M`-dimensional one-particle space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorSpace {
    n_particles: usize,
    one_particle_dim: usize,
    limits: Limits,
}

impl TensorSpace {
    pub fn new(n_particles: usize, one_particle_dim: usize) -> Result<Self> {
        Self::with_limits(n_particles, one_particle_dim, Limits::DEFAULT)
    }

    pub fn with_limits(
        n_particles: usize,
        one_particle_dim: usize,
        limits: Limits,
    ) -> Result<Self> {
        if n_particles == 0 {
            return Err(Error::Degenerate("zero particles"));
        }
        if one_particle_dim == 0 {
            return Err(Error::Degenerate("empty one-particle space"));
        }
        let dim = (0..n_particles).try_fold(1usize, |acc, _| acc.checked_mul(one_particle_dim));
        match dim {
            Some(d) if d <= limits.config_dim => Ok(Self {
                n_particles,
                one_particle_dim,
                limits,
            }),
            _ => Err(Error::LimitExceeded {
                what: "configuration-space dimension",
                value: dim.unwrap_or(usize::MAX),
                limit: limits.config_dim,
            }),
        }
    }

    pub fn n_particles(&self) -> usize {
        self.n_particles
    }

    pub fn one_particle_dim(&self) -> usize {
        self.one_particle_dim
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// `M^N`.
    pub fn dim(&self) -> usize {
        self.one_particle_dim.pow(self.n_particles as u32)
    }

    /// Index of a configuration of 0-based orbital indices.
    pub fn encode(&self, config: &[usize]) -> usize {
        config
            .iter()
            .fold(0, |acc, &i| acc * self.one_particle_dim + i)
    }

    /// 0-based orbital indices of a configuration index.
    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut config = vec![0; self.n_particles];
        for slot in (0..self.n_particles).rev() {
            config[slot] = index % self.one_particle_dim;
            index /= self.one_particle_dim;
        }
        config
    }

    /// Index of `U(p)|config⟩` for the configuration at `index`.
    pub fn permute_index(&self, p: &Permutation, index: usize) -> usize {
        let src = self.decode(index);
        let mut dst = vec![0; self.n_particles];
        for (s, &orb) in src.iter().enumerate() {
            dst[p.apply(s)] = orb;
        }
        self.encode(&dst)
    }

    /// The full index map `j ↦ index of U(p)|j⟩`.
    pub fn permutation_map(&self, p: &Permutation) -> Result<Vec<usize>> {
        self.check_degree(p)?;
        Ok((0..self.dim()).map(|j| self.permute_index(p, j)).collect())
    }

    pub(crate) fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.n() != self.n_particles {
            return Err(Error::SizeMismatch {
                what: "permutation degree vs particle count",
                left: p.n(),
                right: self.n_particles,
            });
        }
        Ok(())
    }

    pub(crate) fn check_dense(&self) -> Result<()> {
        if self.dim() > self.limits.dense_dim {
            return Err(Error::LimitExceeded {
                what: "dense operator dimension",
                value: self.dim(),
                limit: self.limits.dense_dim,
            });
        }
        Ok(())
    }
}

/// `|v_1(1)⟩ |v_2(2)⟩ … |v_N(N)⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductState {
    space: TensorSpace,
    orbitals: Vec<usize>,
}

impl ProductState {
    /// `orbitals` are 1-based one-particle basis indices, one per slot.
    pub fn new(space: TensorSpace, orbitals: &[usize]) -> Result<Self> {
        if orbitals.len() != space.n_particles() {
            return Err(Error::SizeMismatch {
                what: "orbital count vs particle count",
                left: orbitals.len(),
                right: space.n_particles(),
            });
        }
        let mut zero_based = Vec::with_capacity(orbitals.len());
        for &v in orbitals {
            if v == 0 || v > space.one_particle_dim() {
                return Err(Error::IndexOutOfRange {
                    what: "orbital",
                    index: v,
                    limit: space.one_particle_dim(),
                });
            }
            zero_based.push(v - 1);
        }
        Ok(Self {
            space,
            orbitals: zero_based,
        })
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    /// 0-based orbital indices.
    pub fn orbitals(&self) -> &[usize] {
        &self.orbitals
    }

    /// 1-based orbital indices.
    pub fn orbitals_one_based(&self) -> Vec<usize> {
        self.orbitals.iter().map(|v| v + 1).collect()
    }

    pub fn has_distinct_orbitals(&self) -> bool {
        let mut seen = self.orbitals.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub(crate) fn require_distinct(&self) -> Result<()> {
        if self.has_distinct_orbitals() {
            Ok(())
        } else {
            Err(Error::RepeatedOrbitals)
        }
    }

    pub fn index(&self) -> usize {
        self.space.encode(&self.orbitals)
    }
}

/// Amplitudes over the `M^N` configurations.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    space: TensorSpace,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(space: TensorSpace) -> Self {
        Self {
            amplitudes: vec![Complex64::new(0.0, 0.0); space.dim()],
            space,
        }
    }

    pub fn from_amplitudes(space: TensorSpace, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::SizeMismatch {
                what: "amplitude count vs M^N",
                left: amplitudes.len(),
                right: space.dim(),
            });
        }
        Ok(Self { space, amplitudes })
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, config_index: usize) -> Complex64 {
        self.amplitudes[config_index]
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amplitudes.iter().map(|a| a.norm_sqr()).sum())
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Euclidean distance `‖self − other‖`.
    pub fn distance(&self, other: &StateVector) -> f64 {
        libm::sqrt(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum(),
        )
    }

    pub fn scaled(&self, c: Complex64) -> StateVector {
        StateVector {
            space: self.space,
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }

    pub fn plus(&self, other: &StateVector) -> StateVector {
        StateVector {
            space: self.space,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `|a(i)|²` for every configuration `i`.
    pub fn probability_density(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// `|[λ] r t⟩` built from a product state; `r` and `t` are 0-based tableau
/// indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryAdaptedState {
    pub vector: StateVector,
    pub diagram: YoungDiagram,
    pub r: usize,
    pub t: usize,
    pub source: ProductState,
}

pub fn product_state_vector(xi: &ProductState) -> StateVector {
    let mut v = StateVector::zeros(xi.space);
    v.amplitudes[xi.index()] = Complex64::new(1.0, 0.0);
    v
}

/// `U(p) w`.
pub fn permute_state(p: &Permutation, w: &StateVector) -> Result<StateVector> {
    w.space.check_degree(p)?;
    let mut out = StateVector::zeros(w.space);
    for (j, a) in w.amplitudes.iter().enumerate() {
        if *a != Complex64::new(0.0, 0.0) {
            out.amplitudes[w.space.permute_index(p, j)] = *a;
        }
    }
    Ok(out)
}

fn group_elements(n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    perm::enumerate_with_limit(n, limits.group_n)
}

fn check_tableau_index(irrep: &Irrep, what: &'static str, index: usize) -> Result<()> {
    if index >= irrep.dimension() {
        return Err(Error::IndexOutOfRange {
            what,
            index,
            limit: irrep.dimension(),
        });
    }
    Ok(())
}

/// Coefficients `sqrt(f_λ/N!) Γ_rt(P)` of the Young operator `ω_rt`, one per
/// permutation.
pub fn young_operator_coefficients(
    diagram: &YoungDiagram,
    r: usize,
    t: usize,
) -> Result<BTreeMap<Permutation, f64>> {
    young_operator_coefficients_with(&Irrep::new(diagram), r, t, &Limits::DEFAULT)
}

pub fn young_operator_coefficients_with(
    irrep: &Irrep,
    r: usize,
    t: usize,
    limits: &Limits,
) -> Result<BTreeMap<Permutation, f64>> {
    check_tableau_index(irrep, "row tableau", r)?;
    check_tableau_index(irrep, "column tableau", t)?;
    let n = irrep.diagram().n();
    let all = group_elements(n, limits)?;
    let norm = libm::sqrt(irrep.dimension() as f64 / all.len() as f64);
    all.into_iter()
        .map(|p| {
            let c = norm * irrep.column(&p, t)?[r];
            Ok((p, c))
        })
        .collect()
}

/// `|[λ] r t⟩ = ω_rt |ξ⟩` for a product state with pairwise distinct orbitals.
pub fn project(
    diagram: &YoungDiagram,
    r: usize,
    t: usize,
    xi: &ProductState,
) -> Result<SymmetryAdaptedState> {
    project_with(&Irrep::new(diagram), r, t, xi)
}

pub fn project_with(
    irrep: &Irrep,
    r: usize,
    t: usize,
    xi: &ProductState,
) -> Result<SymmetryAdaptedState> {
    check_tableau_index(irrep, "row tableau", r)?;
    Ok(project_all_rows(irrep, t, xi)?.swap_remove(r))
}

/// `|[λ] r t⟩` for every `r` at fixed `t`.
pub fn project_all_rows(
    irrep: &Irrep,
    t: usize,
    xi: &ProductState,
) -> Result<Vec<SymmetryAdaptedState>> {
    xi.require_distinct()?;
    check_tableau_index(irrep, "column tableau", t)?;
    let n = xi.space.n_particles();
    if irrep.diagram().n() != n {
        return Err(Error::SizeMismatch {
            what: "diagram size vs particle count",
            left: irrep.diagram().n(),
            right: n,
        });
    }
    let all = group_elements(n, &xi.space.limits)?;
    let f = irrep.dimension();
    let norm = libm::sqrt(f as f64 / all.len() as f64);
    let source = xi.index();
    let mut vectors = vec![StateVector::zeros(xi.space); f];
    for p in &all {
        let column = irrep.column(p, t)?;
        let target = xi.space.permute_index(p, source);
        for (r, g) in column.into_iter().enumerate() {
            vectors[r].amplitudes[target] += Complex64::new(norm * g, 0.0);
        }
    }
    Ok(vectors
        .into_iter()
        .enumerate()
        .map(|(r, vector)| SymmetryAdaptedState {
            vector,
            diagram: irrep.diagram().clone(),
            r,
            t,
            source: xi.clone(),
        })
        .collect())
}

/// Result of splitting the regular representation spanned by `{U(P)|ξ⟩}`.
#[derive(Debug, Clone)]
pub struct RegularDecomposition {
    pub states: Vec<SymmetryAdaptedState>,
    /// Largest entry of `|⟨a|b⟩ − δ_ab|` over all pairs of states.
    pub orthonormality_error: f64,
    /// Largest entry of `Σ_k |k⟩⟨k| − Π`, with `Π` the orthogonal projector
    /// onto the span of the permuted copies of `|ξ⟩`.
    pub completeness_error: f64,
}

pub fn decompose_regular(xi: &ProductState) -> Result<RegularDecomposition> {
    xi.require_distinct()?;
    let n = xi.space.n_particles();
    let all = group_elements(n, &xi.space.limits)?;
    let mut states = Vec::new();
    for diagram in young::partitions(n)? {
        let irrep = Irrep::new(&diagram);
        for t in 0..irrep.dimension() {
            states.extend(project_all_rows(&irrep, t, xi)?);
        }
    }

    let mut orthonormality_error: f64 = 0.0;
    for (a, sa) in states.iter().enumerate() {
        for (b, sb) in states.iter().enumerate().skip(a) {
            let expected = if a == b { 1.0 } else { 0.0 };
            let dev = (sa.vector.inner(&sb.vector) - Complex64::new(expected, 0.0)).norm();
            orthonormality_error = orthonormality_error.max(dev);
        }
    }

    // The permuted copies are distinct basis configurations, so Π is the
    // identity on the orbit and zero elsewhere. Work in orbit coordinates and
    // count any weight outside the orbit as error.
    let source = xi.index();
    let orbit: Vec<usize> = all
        .iter()
        .map(|p| xi.space.permute_index(p, source))
        .collect();
    let k = orbit.len();
    let mut in_orbit = vec![false; xi.space.dim()];
    for &i in &orbit {
        in_orbit[i] = true;
    }
    let mut sum = Matrix::<Complex64>::zeros(k, k);
    let mut leakage: f64 = 0.0;
    for s in &states {
        let coords: Vec<Complex64> = orbit.iter().map(|&i| s.vector.amplitude(i)).collect();
        let outside: f64 = s
            .vector
            .amplitudes()
            .iter()
            .zip(&in_orbit)
            .filter(|(_, &inside)| !inside)
            .map(|(a, _)| a.norm_sqr())
            .sum();
        leakage = leakage.max(libm::sqrt(outside));
        for i in 0..k {
            for j in 0..k {
                sum[(i, j)] += coords[i] * coords[j].conj();
            }
        }
    }
    let completeness_error = sum.max_abs_difference(&Matrix::identity(k)).max(leakage);

    Ok(RegularDecomposition {
        states,
        orthonormality_error,
        completeness_error,
    })
}

/// Determinant of `[ψ_i(x_j)]` with `ψ_i` the rows of `orbital_vectors`
/// (`N × M`) and `x_j` the 1-based basis indices of `configuration`.
pub fn slater_determinant(
    orbital_vectors: &Matrix<Complex64>,
    configuration: &[usize],
) -> Result<Complex64> {
    let n = orbital_vectors.rows();
    let m = orbital_vectors.cols();
    if configuration.len() != n {
        return Err(Error::SizeMismatch {
            what: "configuration length vs orbital count",
            left: configuration.len(),
            right: n,
        });
    }
    if n > m {
        return Err(Error::SizeMismatch {
            what: "orbital count exceeds one-particle dimension",
            left: n,
            right: m,
        });
    }
    let mut a = Matrix::<Complex64>::zeros(n, n);
    for (j, &x) in configuration.iter().enumerate() {
        if x == 0 || x > m {
            return Err(Error::IndexOutOfRange {
                what: "basis index",
                index: x,
                limit: m,
            });
        }
        for i in 0..n {
            a[(i, j)] = orbital_vectors[(i, x - 1)];
        }
    }
    linalg::determinant(&a)
}

/// How `U(P_ab)` acts on `|[λ] r t⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct TranspositionAction {
    /// Whether `U(P_ab)|[λ] r t⟩` is a multiple of the same vector.
    pub is_scalar: bool,
    pub scalar: Option<f64>,
    /// Expansion coefficients `⟨[λ] r' t | U(P_ab) | [λ] r t⟩` over `r'`.
    pub mixing_coefficients: Vec<f64>,
    /// Largest deviation of the expansion from column `r` of `Γ(P_ab)`, with
    /// the norm of whatever is left outside the span.
    pub max_deviation: f64,
}

const SCALAR_TOL: f64 = 1e-10;

pub fn transposition_action_classification(
    diagram: &YoungDiagram,
    r: usize,
    t: usize,
    xi: &ProductState,
    a: usize,
    b: usize,
) -> Result<TranspositionAction> {
    let irrep = Irrep::new(diagram);
    check_tableau_index(&irrep, "row tableau", r)?;
    if a >= b {
        return Err(Error::Degenerate("transposition requires a < b"));
    }
    let p = Permutation::transposition(a, b, xi.space.n_particles())?;
    let basis = project_all_rows(&irrep, t, xi)?;
    let moved = permute_state(&p, &basis[r].vector)?;

    let mut rebuilt = StateVector::zeros(xi.space);
    let mut mixing = Vec::with_capacity(basis.len());
    for s in &basis {
        let c = s.vector.inner(&moved);
        rebuilt = rebuilt.plus(&s.vector.scaled(c));
        mixing.push(c.re);
    }
    let expected = irrep.column(&p, r)?;
    let deviation = mixing
        .iter()
        .zip(&expected)
        .map(|(x, y)| libm::fabs(x - y))
        .fold(moved.distance(&rebuilt), f64::max);

    let off_diagonal = mixing
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, c)| libm::fabs(*c))
        .fold(0.0, f64::max);
    let is_scalar = off_diagonal < SCALAR_TOL;
    Ok(TranspositionAction {
        is_scalar,
        scalar: is_scalar.then(|| mixing[r]),
        mixing_coefficients: mixing,
        max_deviation: deviation,
    })
}
