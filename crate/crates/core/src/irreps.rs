//! Real orthogonal irreducible representations of the symmetric group.
//!
//! Matrices are generated in Young's orthogonal form. For a standard tableau
//! `T` let `d` be the axial distance `content(k+1) − content(k)` between the
//! boxes holding `k` and `k+1`. The adjacent transposition `s_k` acts by
//!
//! ```text
//! Γ(s_k)[T, T]  = 1/d
//! Γ(s_k)[T, T'] = sqrt(1 − 1/d²)   where T' = T with k, k+1 exchanged
//! ```
//!
//! With this sign `[n]` is the trivial representation and `[1^n]` the sign
//! representation. General elements are products of generator matrices along
//! [`Permutation::adjacent_factorization`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::linalg::Matrix;
use crate::perm::{self, Permutation};
use crate::young::{self, StandardTableau, YoungDiagram};
use crate::{Error, Result};

/// Sparse form of one generator matrix: every row has the diagonal entry and
/// at most one off-diagonal partner.
#[derive(Debug, Clone)]
struct Generator {
    diag: Vec<f64>,
    partner: Vec<Option<usize>>,
    off: Vec<f64>,
}

impl Generator {
    fn apply(&self, v: &mut [f64], scratch: &mut [f64]) {
        for i in 0..v.len() {
            scratch[i] = self.diag[i] * v[i] + self.partner[i].map_or(0.0, |j| self.off[i] * v[j]);
        }
        v.copy_from_slice(scratch);
    }

    fn dense(&self) -> Matrix<f64> {
        let f = self.diag.len();
        let mut m = Matrix::zeros(f, f);
        for i in 0..f {
            m[(i, i)] = self.diag[i];
            if let Some(j) = self.partner[i] {
                m[(i, j)] = self.off[i];
            }
        }
        m
    }
}

/// An irreducible representation with its tableau basis and generator
/// matrices precomputed.
#[derive(Debug, Clone)]
pub struct Irrep {
    diagram: YoungDiagram,
    tableaux: Vec<StandardTableau>,
    generators: Vec<Generator>,
}

impl Irrep {
    pub fn new(diagram: &YoungDiagram) -> Self {
        let tableaux = diagram.standard_tableaux();
        let n = diagram.n();
        let index: BTreeMap<Vec<(usize, usize)>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| ((1..=n).map(|k| t.position(k)).collect(), i))
            .collect();
        let f = tableaux.len();
        let generators = (1..n)
            .map(|k| {
                let mut g = Generator {
                    diag: vec![0.0; f],
                    partner: vec![None; f],
                    off: vec![0.0; f],
                };
                for (i, t) in tableaux.iter().enumerate() {
                    let d = (t.content(k + 1) - t.content(k)) as f64;
                    g.diag[i] = 1.0 / d;
                    if let Some(swapped) = t.swap_adjacent(k) {
                        let key: Vec<_> = (1..=n).map(|j| swapped.position(j)).collect();
                        g.partner[i] = Some(index[&key]);
                        g.off[i] = libm::sqrt(1.0 - 1.0 / (d * d));
                    }
                }
                g
            })
            .collect();
        Self {
            diagram: diagram.clone(),
            tableaux,
            generators,
        }
    }

    /// Negates the generator `s_k`. Only useful for exercising failure paths
    /// of the verification routines: the result is no longer a faithful copy
    /// of the representation.
    pub fn with_negated_generator(mut self, k: usize) -> Self {
        if let Some(g) = self.generators.get_mut(k.wrapping_sub(1)) {
            g.diag.iter_mut().for_each(|x| *x = -*x);
            g.off.iter_mut().for_each(|x| *x = -*x);
        }
        self
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.n() != self.diagram.n() {
            return Err(Error::SizeMismatch {
                what: "permutation degree vs diagram size",
                left: p.n(),
                right: self.diagram.n(),
            });
        }
        Ok(())
    }

    fn check_index(&self, what: &'static str, index: usize) -> Result<()> {
        if index >= self.dimension() {
            return Err(Error::IndexOutOfRange {
                what,
                index,
                limit: self.dimension(),
            });
        }
        Ok(())
    }

    /// `Γ(s_k)` for `1 ≤ k < n`.
    pub fn adjacent_matrix(&self, k: usize) -> Result<Matrix<f64>> {
        if k == 0 || k >= self.diagram.n() {
            return Err(Error::IndexOutOfRange {
                what: "generator",
                index: k,
                limit: self.diagram.n().saturating_sub(1),
            });
        }
        Ok(self.generators[k - 1].dense())
    }

    /// Column `t` of `Γ(p)`, i.e. `Γ(p) e_t`.
    pub fn column(&self, p: &Permutation, t: usize) -> Result<Vec<f64>> {
        self.check_degree(p)?;
        self.check_index("tableau", t)?;
        let f = self.dimension();
        let mut v = vec![0.0; f];
        v[t] = 1.0;
        let mut scratch = vec![0.0; f];
        // Γ(s_k1 … s_km) e_t: the rightmost factor acts first
        for &k in p.adjacent_factorization().iter().rev() {
            self.generators[k - 1].apply(&mut v, &mut scratch);
        }
        Ok(v)
    }

    /// `Γ(p)`.
    pub fn matrix(&self, p: &Permutation) -> Result<Matrix<f64>> {
        self.check_degree(p)?;
        let f = self.dimension();
        let mut m = Matrix::zeros(f, f);
        for t in 0..f {
            let col = self.column(p, t)?;
            for (r, x) in col.into_iter().enumerate() {
                m[(r, t)] = x;
            }
        }
        Ok(m)
    }

    pub fn character(&self, p: &Permutation) -> Result<f64> {
        self.check_degree(p)?;
        let mut trace = 0.0;
        for t in 0..self.dimension() {
            trace += self.column(p, t)?[t];
        }
        Ok(trace)
    }

    /// Diagonal element `Γ_tt(P_ab)` (0-based `t`, 1-based slots `a < b`).
    pub fn exchange_coefficient(&self, t: usize, a: usize, b: usize) -> Result<f64> {
        self.check_index("tableau", t)?;
        if a >= b {
            return Err(Error::Degenerate("exchange pair must satisfy a < b"));
        }
        let p = Permutation::transposition(a, b, self.diagram.n())?;
        Ok(self.column(&p, t)?[t])
    }
}

/// A representation matrix `Γ^[λ](P)` together with its labels.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrepMatrix {
    pub diagram: YoungDiagram,
    pub element: Permutation,
    pub matrix: Matrix<f64>,
}

pub fn adjacent_matrix(diagram: &YoungDiagram, k: usize) -> Result<IrrepMatrix> {
    let n = diagram.n();
    let matrix = Irrep::new(diagram).adjacent_matrix(k)?;
    Ok(IrrepMatrix {
        diagram: diagram.clone(),
        element: Permutation::adjacent(k, n)?,
        matrix,
    })
}

pub fn irrep_matrix(diagram: &YoungDiagram, p: &Permutation) -> Result<IrrepMatrix> {
    let matrix = Irrep::new(diagram).matrix(p)?;
    Ok(IrrepMatrix {
        diagram: diagram.clone(),
        element: p.clone(),
        matrix,
    })
}

pub fn character(diagram: &YoungDiagram, p: &Permutation) -> Result<f64> {
    Irrep::new(diagram).character(p)
}

pub fn exchange_coefficient(diagram: &YoungDiagram, t: usize, a: usize, b: usize) -> Result<f64> {
    Irrep::new(diagram).exchange_coefficient(t, a, b)
}

/// How [`verify_representation`] chooses the pairs it checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every pair `(p, q)` in `S_n × S_n`; `n ≤ 6`.
    Exhaustive,
    /// `trials` uniformly random pairs; `n ≤ 8`.
    Random { trials: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresentationReport {
    /// `max ‖Γ(pq) − Γ(p)Γ(q)‖` (largest entry).
    pub max_homomorphism_error: f64,
    /// `max |ΓᵀΓ − 1|` (largest entry).
    pub max_orthogonality_error: f64,
    pub pairs_checked: usize,
}

impl RepresentationReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_homomorphism_error < tol && self.max_orthogonality_error < tol
    }
}

pub fn verify_representation<R: Rng + ?Sized>(
    irrep: &Irrep,
    mode: VerifyMode,
    rng: &mut R,
) -> Result<RepresentationReport> {
    let n = irrep.diagram().n();
    let mut hom: f64 = 0.0;
    let mut orth: f64 = 0.0;
    let mut pairs = 0;
    match mode {
        VerifyMode::Exhaustive => {
            let all = perm::enumerate_with_limit(n, 6)?;
            let mats = all
                .iter()
                .map(|p| irrep.matrix(p))
                .collect::<Result<Vec<_>>>()?;
            let lookup: BTreeMap<&Permutation, usize> =
                all.iter().enumerate().map(|(i, p)| (p, i)).collect();
            for m in &mats {
                orth = orth.max(m.unitarity_error());
            }
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    let pq = lookup[&p.compose(q)?];
                    let prod = mats[i].matmul(&mats[j])?;
                    hom = hom.max(mats[pq].max_abs_difference(&prod));
                    pairs += 1;
                }
            }
        }
        VerifyMode::Random { trials } => {
            if n > 8 {
                return Err(Error::LimitExceeded {
                    what: "group degree",
                    value: n,
                    limit: 8,
                });
            }
            for _ in 0..trials {
                let p = Permutation::random(n, rng)?;
                let q = Permutation::random(n, rng)?;
                let gp = irrep.matrix(&p)?;
                let gq = irrep.matrix(&q)?;
                let gpq = irrep.matrix(&p.compose(&q)?)?;
                hom = hom.max(gpq.max_abs_difference(&gp.matmul(&gq)?));
                orth = orth
                    .max(gp.unitarity_error())
                    .max(gq.unitarity_error())
                    .max(gpq.unitarity_error());
                pairs += 1;
            }
        }
    }
    Ok(RepresentationReport {
        max_homomorphism_error: hom,
        max_orthogonality_error: orth,
        pairs_checked: pairs,
    })
}

/// Largest deviation from
/// `Σ_P Γ^λ_rt(P) Γ^μ_r't'(P) = (n!/f_λ) δ_λμ δ_rr' δ_tt'` over all index
/// combinations.
pub fn great_orthogonality_error(a: &Irrep, b: &Irrep) -> Result<f64> {
    let n = a.diagram().n();
    if b.diagram().n() != n {
        return Err(Error::SizeMismatch {
            what: "diagram sizes",
            left: n,
            right: b.diagram().n(),
        });
    }
    let all = perm::enumerate(n)?;
    let (fa, fb) = (a.dimension(), b.dimension());
    let mut sums = vec![0.0; fa * fa * fb * fb];
    for p in &all {
        let ga = a.matrix(p)?;
        let gb = if a.diagram() == b.diagram() {
            ga.clone()
        } else {
            b.matrix(p)?
        };
        let mut idx = 0;
        for r in 0..fa {
            for t in 0..fa {
                for r2 in 0..fb {
                    for t2 in 0..fb {
                        sums[idx] += ga[(r, t)] * gb[(r2, t2)];
                        idx += 1;
                    }
                }
            }
        }
    }
    let order = all.len() as f64;
    let same = a.diagram() == b.diagram();
    let mut worst: f64 = 0.0;
    let mut idx = 0;
    for r in 0..fa {
        for t in 0..fa {
            for r2 in 0..fb {
                for t2 in 0..fb {
                    let expected = if same && r == r2 && t == t2 {
                        order / fa as f64
                    } else {
                        0.0
                    };
                    worst = worst.max(libm::fabs(sums[idx] - expected));
                    idx += 1;
                }
            }
        }
    }
    Ok(worst)
}

/// Multiplicity of every irreducible of `S_{n-1}` in the restriction of
/// `irrep`, from character inner products over the subgroup fixing slot `n`.
/// Diagrams are listed in reverse-lexicographic order.
pub fn restriction_multiplicities(irrep: &Irrep) -> Result<Vec<(YoungDiagram, f64)>> {
    let n = irrep.diagram().n();
    if n < 2 {
        return Ok(Vec::new());
    }
    let sub = perm::enumerate(n - 1)?;
    let restricted: Vec<f64> = sub
        .iter()
        .map(|q| irrep.character(&q.extend()))
        .collect::<Result<_>>()?;
    let order = sub.len() as f64;
    young::partitions(n - 1)?
        .into_iter()
        .map(|mu| {
            let small = Irrep::new(&mu);
            let mut inner = 0.0;
            for (q, chi) in sub.iter().zip(&restricted) {
                inner += chi * small.character(q)?;
            }
            Ok((mu, inner / order))
        })
        .collect()
}
