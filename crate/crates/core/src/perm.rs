//! Permutations of `n` particle slots.
//!
//! Externally a permutation is written in one-line notation with 1-based
//! images: `[2, 3, 1]` sends `1 → 2`, `2 → 3`, `3 → 1`. Internally images are
//! stored 0-based.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, Limits, Result};

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A bijection on the slots `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Degenerate("permutation of zero slots"));
        }
        Ok(Self {
            images: (0..n).collect(),
        })
    }

    /// The transposition exchanging slots `a` and `b` (1-based, `a < b`).
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Degenerate("transposition of a slot with itself"));
        }
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange {
                what: "slot",
                index: a,
                limit: n,
            });
        }
        if b == 0 || b > n {
            return Err(Error::IndexOutOfRange {
                what: "slot",
                index: b,
                limit: n,
            });
        }
        let mut p = Self::identity(n)?;
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The adjacent transposition `s_k = (k, k+1)`, `1 ≤ k < n`.
    pub fn adjacent(k: usize, n: usize) -> Result<Self> {
        Self::transposition(k, k + 1, n)
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Degenerate("permutation of zero slots"));
        }
        let mut seen = alloc::vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation { n });
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Self { images: zero_based })
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let one_based: Vec<usize> = images.iter().map(|&i| i + 1).collect();
        Self::from_one_line(&one_based)
    }

    /// A uniformly random permutation of `n` slots.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut p = Self::identity(n)?;
        p.images.shuffle(rng);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a 0-based slot.
    #[inline]
    pub fn apply(&self, slot: usize) -> usize {
        self.images[slot]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `p ∘ q`: apply `q` first, then `p`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.n() != q.n() {
            return Err(Error::SizeMismatch {
                what: "permutation degree",
                left: self.n(),
                right: q.n(),
            });
        }
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn parity(&self) -> Sign {
        if self.inversions().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Generator indices `k₁ … k_m` (each `k` names `s_k = (k, k+1)`) with
    /// `self = s_{k₁} ∘ s_{k₂} ∘ … ∘ s_{k_m}`. The word is reduced: its length
    /// equals the number of inversions.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Right-multiplying by s_i at a descent i removes exactly one inversion;
        // p ∘ s_{i1} ∘ … ∘ s_{im} = e gives p = s_{im} ∘ … ∘ s_{i1}.
        let mut work = self.images.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..work.len().saturating_sub(1)).find(|&i| work[i] > work[i + 1]) {
            work.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Whether the permutation fixes the last slot, i.e. lies in `S_{n-1}`.
    pub fn fixes_last(&self) -> bool {
        let n = self.n();
        self.images[n - 1] == n - 1
    }

    /// Drops the (fixed) last slot.
    pub fn restrict(&self) -> Option<Permutation> {
        if self.n() < 2 || !self.fixes_last() {
            return None;
        }
        Some(Permutation {
            images: self.images[..self.n() - 1].to_vec(),
        })
    }

    /// Appends a fixed slot `n + 1`.
    pub fn extend(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.n());
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", img + 1)?;
        }
        write!(f, ")")
    }
}

/// All `n!` permutations in lexicographic order of one-line notation, with the
/// default group-size limit.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    enumerate_with_limit(n, Limits::DEFAULT.group_n)
}

pub fn enumerate_with_limit(n: usize, max_n: usize) -> Result<Vec<Permutation>> {
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: "group degree",
            value: n,
            limit: max_n,
        });
    }
    let first = Permutation::identity(n)?;
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur = first.images;
    loop {
        out.push(Permutation {
            images: cur.clone(),
        });
        if !next_lexicographic(&mut cur) {
            break;
        }
    }
    Ok(out)
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `n!` in exact integer arithmetic (panics on overflow past `34!`).
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    #[test]
    fn identity_cases() {
        assert_eq!(Permutation::identity(3).unwrap().one_line(), [1, 2, 3]);
        assert_eq!(Permutation::identity(5).unwrap().parity(), Sign::Plus);
        assert!(matches!(
            Permutation::identity(0),
            Err(Error::Degenerate(_))
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q = Permutation::random(4, &mut rng).unwrap();
        let e = Permutation::identity(4).unwrap();
        assert_eq!(e.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&e).unwrap(), q);
    }

    #[test]
    fn transposition_cases() {
        assert_eq!(
            Permutation::transposition(1, 2, 2).unwrap().one_line(),
            [2, 1]
        );
        for n in 2..=6 {
            for a in 1..=n {
                for b in a + 1..=n {
                    let t = Permutation::transposition(a, b, n).unwrap();
                    assert_eq!(t.parity(), Sign::Minus);
                    assert_eq!(t.inverse(), t);
                }
            }
        }
        let s12 = p(&[2, 1, 3]);
        let s23 = p(&[1, 3, 2]);
        let via = s12.compose(&s23).unwrap().compose(&s12).unwrap();
        assert_eq!(Permutation::transposition(1, 3, 3).unwrap(), via);
        assert!(Permutation::transposition(2, 2, 3).is_err());
        assert!(Permutation::transposition(1, 4, 3).is_err());
        assert!(Permutation::transposition(0, 1, 3).is_err());
    }

    #[test]
    fn composition_convention() {
        // apply (23) first, then (12): 1→1→2, 2→3→3, 3→2→1
        let c = p(&[2, 1, 3]).compose(&p(&[1, 3, 2])).unwrap();
        assert_eq!(c.one_line(), [2, 3, 1]);
        assert_eq!(c.parity(), Sign::Plus);
        assert!(p(&[1, 2]).compose(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn inverse_cases() {
        let e = Permutation::identity(4).unwrap();
        assert_eq!(e.inverse(), e);
        assert_eq!(p(&[2, 3, 1]).inverse().one_line(), [3, 1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let q = Permutation::random(7, &mut rng).unwrap();
            assert!(q.compose(&q.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 3]).is_err());
        assert!(Permutation::from_one_line(&[]).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate(2).unwrap().len(), 2);
        let all = enumerate(4).unwrap();
        assert_eq!(all.len(), 24);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all[0].is_identity());
        assert!(matches!(enumerate(9), Err(Error::LimitExceeded { .. })));
        assert_eq!(enumerate_with_limit(9, 9).unwrap().len(), 362_880);
    }

    #[test]
    fn factorization_examples() {
        assert!(Permutation::identity(4)
            .unwrap()
            .adjacent_factorization()
            .is_empty());
        assert_eq!(
            Permutation::transposition(1, 2, 4)
                .unwrap()
                .adjacent_factorization(),
            [1]
        );
        let word = Permutation::transposition(1, 3, 3)
            .unwrap()
            .adjacent_factorization();
        assert_eq!(word.len(), 3);
        let mut prod = Permutation::identity(3).unwrap();
        for &k in &word {
            prod = prod.compose(&Permutation::adjacent(k, 3).unwrap()).unwrap();
        }
        assert_eq!(prod.one_line(), [3, 2, 1]);
    }

    #[test]
    fn factorization_reproduces_every_permutation() {
        for n in 1..=6 {
            for q in enumerate(n).unwrap() {
                let word = q.adjacent_factorization();
                assert!(word.len() <= n * (n - 1) / 2);
                let mut prod = Permutation::identity(n).unwrap();
                for &k in &word {
                    prod = prod.compose(&Permutation::adjacent(k, n).unwrap()).unwrap();
                }
                assert_eq!(prod, q);
            }
        }
    }

    #[test]
    fn group_laws_exhaustive() {
        for n in 1..=4 {
            let all = enumerate(n).unwrap();
            for a in &all {
                for b in &all {
                    let ab = a.compose(b).unwrap();
                    assert_eq!(ab.parity(), a.parity() * b.parity());
                    for c in &all {
                        assert_eq!(
                            ab.compose(c).unwrap(),
                            a.compose(&b.compose(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_round_trip() {
        let q = p(&[2, 1, 3]);
        assert_eq!(q.restrict().unwrap().one_line(), [2, 1]);
        assert_eq!(q.restrict().unwrap().extend(), q);
        assert!(p(&[3, 1, 2]).restrict().is_none());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm_pair() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
            (1usize..=8).prop_flat_map(|n| {
                let one = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
                (one.clone(), one.clone(), one).prop_map(|(a, b, c)| {
                    (
                        Permutation::from_zero_based(a).unwrap(),
                        Permutation::from_zero_based(b).unwrap(),
                        Permutation::from_zero_based(c).unwrap(),
                    )
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn random_group_laws((a, b, c) in perm_pair()) {
                let ab = a.compose(&b).unwrap();
                prop_assert_eq!(ab.parity(), a.parity() * b.parity());
                prop_assert_eq!(
                    ab.compose(&c).unwrap(),
                    a.compose(&b.compose(&c).unwrap()).unwrap()
                );
                prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
                prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            }
        }
    }
}
