//! Property tests for the exact-arithmetic layer against brute-force oracles.

use num_integer::Integer;
use proptest::prelude::*;
use tmf_adams::exactmath::{
    ext1_to, hom_to, ses_assemble, smith_normal_form, FinAbGroup, IntMatrix, InvertedSet, LocalizedScalar,
};
use tmf_adams::qseries::QSeries;

/// Determinant by cofactor expansion.
fn mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    a.iter()
        .map(|r| (0..b[0].len()).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
        .collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors: `d_1 * ... * d_k` is the gcd of all k x k minors.
fn invariant_factors_oracle(m: &IntMatrix) -> Vec<i64> {
    let rows: Vec<Vec<i128>> = (0..m.rows()).map(|i| m.row(i).iter().map(|&x| x as i128).collect()).collect();
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = 0i128;
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-12i64..=12, r * c).prop_map(move |e| {
            let rows: Vec<Vec<i64>> = e.chunks(c).map(<[i64]>::to_vec).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

fn inverted_set() -> impl Strategy<Value = InvertedSet> {
    proptest::sample::subsequence(vec![2u64, 3, 5, 7], 0..=4).prop_map(|p| InvertedSet::new(p).unwrap())
}

fn group() -> impl Strategy<Value = FinAbGroup> {
    (0usize..4, proptest::collection::vec(2u64..60, 0..4)).prop_map(|(r, t)| FinAbGroup::new(r, t))
}

fn series() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec(-50i64..50, 1..10).prop_map(|c| QSeries::from_integers(c, &InvertedSet::integers()).unwrap())
}

fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|&x| x as i128).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_decomposes(m in matrix()) {
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(mul(&mul(&to_i128(&s.u), &to_i128(&m)), &to_i128(&s.v)), to_i128(&s.d));
        prop_assert!(s.d.is_diagonal());
        prop_assert_eq!(det(&to_i128(&s.u)).abs(), 1);
        prop_assert_eq!(det(&to_i128(&s.v)).abs(), 1);
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|&d| d > 0));
        prop_assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert_eq!(f, invariant_factors_oracle(&m));
    }

    #[test]
    fn hom_and_ext_of_cokernels(m in matrix(), a in inverted_set()) {
        let g = FinAbGroup::from_presentation(&m).unwrap();
        let f = invariant_factors_oracle(&m);
        prop_assert_eq!(g.free_rank(), m.rows() - f.len());
        prop_assert_eq!(hom_to(&g, &a).free_rank(), m.rows() - f.len());
        let order: u64 = f.iter().map(|&d| a.strip_u64(d as u64)).product();
        let ext = ext1_to(&g, &a);
        prop_assert!(ext.is_torsion_free() || ext.free_rank() == 0);
        prop_assert_eq!(ext.torsion_orders().iter().product::<u64>(), order);
    }

    #[test]
    fn double_dual_is_free_part(g in group()) {
        let z = InvertedSet::integers();
        prop_assert_eq!(hom_to(&hom_to(&g, &z), &z), g.free_part());
        prop_assert_eq!(ses_assemble(&ext1_to(&g, &z), &hom_to(&g, &z)), g.clone());
    }

    #[test]
    fn ext_is_additive(g in group(), h in group(), a in inverted_set()) {
        prop_assert_eq!(ext1_to(&g.direct_sum(&h), &a), ext1_to(&g, &a).direct_sum(&ext1_to(&h, &a)));
        prop_assert_eq!(g.direct_sum(&h), h.direct_sum(&g));
    }

    #[test]
    fn scalars_form_a_ring(p in -40i64..40, q in 1i64..40, r in -40i64..40) {
        let ctx = InvertedSet::inverting(q);
        let x = LocalizedScalar::new(p.into(), q.into(), ctx.clone()).unwrap();
        let y = LocalizedScalar::integer(r, &ctx);
        prop_assert_eq!(&(&x + &y) * &x, &(&x * &x) + &(&y * &x));
        prop_assert_eq!(x.to_string().parse::<LocalizedScalar>().unwrap(), x);
    }

    #[test]
    fn series_multiplication(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}
