//! Finitely generated abelian groups in invariant-factor form, plus the
//! `Hom` and `Ext^1` functors into subrings of `Q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::{prime_factors, InvertedSet};
use super::smith::{invariant_factors, IntMatrix};
use crate::error::Result;

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_r` with `d_1 | d_2 | ... | d_r`, each `d_i >= 2`.
///
/// Every constructor normalizes, so structural equality is isomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion_orders: Vec<u64>,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion_orders: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::new(0, [order])
    }

    /// `Z^free_rank ⊕ ⨁ Z/order`. Orders of 0 count as free summands and
    /// orders of 1 are dropped.
    pub fn new(free_rank: usize, orders: impl IntoIterator<Item = u64>) -> Self {
        let mut free_rank = free_rank;
        // prime -> exponents of the primary components
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for d in orders {
            if d == 0 {
                free_rank += 1;
                continue;
            }
            let mut d = d;
            for p in prime_factors(d) {
                let mut e = 0;
                while d % p == 0 {
                    d /= p;
                    e += 1;
                }
                primary.entry(p).or_default().push(e);
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest powers go to the last invariant factors
            for (k, e) in exps.into_iter().enumerate() {
                torsion[len - 1 - k] *= p.pow(e);
            }
        }
        Self {
            free_rank,
            torsion_orders: torsion,
        }
    }

    /// Cokernel of `m`, read as a map `Z^cols -> Z^rows`.
    pub fn from_presentation(m: &IntMatrix) -> Result<Self> {
        let factors = invariant_factors(m)?;
        let free = m.rows() - factors.len();
        Ok(Self::new(free, factors.into_iter().map(|d| d.unsigned_abs())))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion_orders.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_orders.is_empty()
    }

    pub fn torsion_part(&self) -> Self {
        Self::new(0, self.torsion_orders.iter().copied())
    }

    pub fn free_part(&self) -> Self {
        Self::free(self.free_rank)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(
            self.free_rank + other.free_rank,
            self.torsion_orders.iter().chain(&other.torsion_orders).copied(),
        )
    }

    /// Base change along `Z -> Z[1/S]`: torsion of order prime to S survives.
    pub fn localize(&self, s: &InvertedSet) -> Self {
        Self::new(
            self.free_rank,
            self.torsion_orders.iter().map(|&d| s.strip_u64(d)),
        )
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion_orders.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Hom(G, A)` for `A = Z[1/S]`, as an `A`-module: free of the same rank,
/// since `A` is torsion-free.
pub fn hom_to(g: &FinAbGroup, _a: &InvertedSet) -> FinAbGroup {
    FinAbGroup::free(g.free_rank())
}

/// `Ext^1(G, A)` for `A = Z[1/S]`: each cyclic summand `Z/d` contributes
/// `Z/d` with the primes of `S` removed; free summands contribute nothing.
pub fn ext1_to(g: &FinAbGroup, a: &InvertedSet) -> FinAbGroup {
    g.torsion_part().localize(a)
}

/// Middle term of `0 -> e -> X -> h -> 0`, realized as the split extension.
pub fn ses_assemble(e: &FinAbGroup, h: &FinAbGroup) -> FinAbGroup {
    e.direct_sum(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: &[u64]) -> InvertedSet {
        InvertedSet::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(FinAbGroup::new(0, [2, 3]), FinAbGroup::cyclic(6));
        assert_eq!(FinAbGroup::new(0, [4, 2]).torsion_orders(), &[2, 4]);
        assert_eq!(FinAbGroup::new(0, [12, 18]).torsion_orders(), &[6, 36]);
        assert_eq!(FinAbGroup::new(1, [1, 0]), FinAbGroup::free(2));
        assert_eq!(FinAbGroup::new(2, [2]).to_string(), "Z^2 + Z/2");
        assert_eq!(FinAbGroup::zero().to_string(), "0");
    }

    #[test]
    fn hom_examples() {
        let g = FinAbGroup::new(2, [2]);
        assert_eq!(hom_to(&g, &s(&[])), FinAbGroup::free(2));
        assert_eq!(hom_to(&FinAbGroup::zero(), &s(&[])), FinAbGroup::zero());
        assert_eq!(hom_to(&FinAbGroup::cyclic(24), &s(&[])), FinAbGroup::zero());
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext1_to(&FinAbGroup::cyclic(24), &s(&[])), FinAbGroup::cyclic(24));
        assert_eq!(ext1_to(&FinAbGroup::free(3), &s(&[])), FinAbGroup::zero());
        assert_eq!(ext1_to(&FinAbGroup::cyclic(24), &s(&[2])), FinAbGroup::cyclic(3));
    }

    #[test]
    fn ses_examples() {
        assert_eq!(
            ses_assemble(&FinAbGroup::cyclic(2), &FinAbGroup::free(1)),
            FinAbGroup::new(1, [2])
        );
        assert_eq!(ses_assemble(&FinAbGroup::zero(), &FinAbGroup::zero()), FinAbGroup::zero());
        let e = FinAbGroup::new(0, [2, 4]);
        let x = ses_assemble(&e, &FinAbGroup::free(2));
        assert_eq!(x.free_rank(), 2);
        assert_eq!(x.torsion_orders(), &[2, 4]);
    }

    #[test]
    fn presentation_by_smith_form() {
        // Z^3 / <(2,0,0), (0,4,0)> = Z ⊕ Z/2 ⊕ Z/4
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4], vec![0, 0]]);
        assert_eq!(FinAbGroup::from_presentation(&m).unwrap(), FinAbGroup::new(1, [2, 4]));
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(FinAbGroup::from_presentation(&m).unwrap(), FinAbGroup::cyclic(6));
    }
}
