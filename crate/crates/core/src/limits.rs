/// Size limits guarding the exhaustive sums and dense operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all `n!` permutations are enumerated.
    pub group_n: usize,
    /// Largest `n` for partition enumeration.
    pub partition_n: usize,
    /// Largest box count in the genealogy graph.
    pub genealogy_n: usize,
    /// Largest configuration-space dimension `M^N` of a state vector.
    pub config_dim: usize,
    /// Largest `M^N` for which dense `M^N × M^N` operators are built.
    pub dense_dim: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        group_n: 8,
        partition_n: 20,
        genealogy_n: 10,
        config_dim: 100_000,
        dense_dim: 4096,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
