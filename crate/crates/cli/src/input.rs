//! Command-line argument parsing and the JSON input schemas.
//!
//! All indices in external formats are 1-based: orbitals, permutation
//! images, and the tableau indices `r` and `t`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use permsym::{
    Complex64, Limits, Matrix, ModelHamiltonian, Permutation, ProductState, TensorSpace,
    YoungDiagram,
};
use serde::Deserialize;

/// Parses `"3,1"`, `"[3,1]"` or `"3 1"` into integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("not a non-negative integer: {t:?}"))
        })
        .collect()
}

pub fn parse_diagram(s: &str) -> Result<YoungDiagram> {
    let rows = parse_list(s)?;
    YoungDiagram::new(rows).with_context(|| format!("invalid diagram {s:?}"))
}

pub fn parse_permutation(s: &str) -> Result<Permutation> {
    let images = parse_list(s)?;
    Permutation::from_one_line(&images).with_context(|| format!("invalid permutation {s:?}"))
}

/// 1-based tableau index to 0-based, checked against the diagram dimension.
pub fn tableau_index(one_based: usize, diagram: &YoungDiagram, what: &str) -> Result<usize> {
    let f = diagram.dimension() as usize;
    if one_based == 0 || one_based > f {
        bail!("{what} = {one_based} out of range 1..={f} for diagram [{diagram}]");
    }
    Ok(one_based - 1)
}

/// A complex number written as a bare real or an `[re, im]` pair.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum ComplexEntry {
    Real(f64),
    Pair([f64; 2]),
}

impl From<ComplexEntry> for Complex64 {
    fn from(e: ComplexEntry) -> Self {
        match e {
            ComplexEntry::Real(re) => Complex64::new(re, 0.0),
            ComplexEntry::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

/// `{"m": 3, "orbitals": [1, 2, 3], "diagram": [2, 1], "r": 1, "t": 2}`;
/// the last three are optional and may be given on the command line instead.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub m: usize,
    pub orbitals: Vec<usize>,
    #[serde(default)]
    pub diagram: Option<Vec<usize>>,
    #[serde(default)]
    pub r: Option<usize>,
    #[serde(default)]
    pub t: Option<usize>,
}

impl ProductSpec {
    pub fn product_state(&self, limits: Limits) -> Result<ProductState> {
        let space = TensorSpace::with_limits(self.orbitals.len(), self.m, limits)?;
        Ok(ProductState::new(space, &self.orbitals)?)
    }
}

/// Hamiltonian spec file. `h` is an `m × m` nested array; `g` is the rank-4
/// tensor `⟨pq|g|rs⟩` flattened with index `((p·m + q)·m + r)·m + s`
/// (0-based `p, q, r, s`), length `m⁴`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HamiltonianSpec {
    pub m: usize,
    pub h: Vec<Vec<ComplexEntry>>,
    pub g: Vec<ComplexEntry>,
    pub orbitals: Vec<usize>,
    #[serde(default)]
    pub diagram: Option<Vec<usize>>,
    #[serde(default)]
    pub t: Option<usize>,
}

impl HamiltonianSpec {
    pub fn hamiltonian(&self) -> Result<ModelHamiltonian> {
        let m = self.m;
        if m == 0 {
            bail!("m must be positive");
        }
        if self.h.len() != m || self.h.iter().any(|row| row.len() != m) {
            bail!("h must be an {m} × {m} matrix");
        }
        if self.g.len() != m.pow(4) {
            bail!(
                "g must have m⁴ = {} entries, found {}",
                m.pow(4),
                self.g.len()
            );
        }
        let h = Matrix::from_row_major(m, m, self.h.iter().flatten().map(|&e| e.into()).collect())?;
        // ((p·m + q)·m + r)·m + s is exactly row-major over rows pm+q, columns rm+s
        let g = Matrix::from_row_major(m * m, m * m, self.g.iter().map(|&e| e.into()).collect())?;
        Ok(ModelHamiltonian::new(h, g)?)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}
