//! Exact rational dense linear algebra.
//!
//! Every tensor product uses one flat-index convention: in `k^m ⊗ k^n` the
//! basis vector `e_i ⊗ e_j` sits at index `i * n + j` (first factor slowest).

mod linmap;
mod scalar;

pub use linmap::{Difference, LinMap};
pub use scalar::ExactScalar;

use crate::error::Result;

pub fn compose(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    f.compose(g)
}

pub fn kron(f: &LinMap, g: &LinMap) -> LinMap {
    f.kron(g)
}

pub fn flip(m: usize, n: usize) -> LinMap {
    LinMap::flip(m, n)
}

pub fn eq(f: &LinMap, g: &LinMap) -> bool {
    f == g
}

/// Shorthand for an integer scalar.
pub fn q(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Textbook triple loop, used as the oracle for the sparse-aware product.
    fn naive_product(f: &LinMap, g: &LinMap) -> LinMap {
        let mut out = LinMap::zeros(f.cod(), g.dom());
        for i in 0..f.cod() {
            for j in 0..g.dom() {
                let mut acc = ExactScalar::zero();
                for k in 0..f.dom() {
                    acc = acc + f.get(i, k) * g.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn m(rows: &[&[i64]]) -> LinMap {
        LinMap::from_ints(rows)
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&LinMap::identity(3), &LinMap::identity(3)).unwrap(), LinMap::identity(3));
        let two = LinMap::scalar(q(2));
        let half = LinMap::scalar(ExactScalar::ratio(1, 2));
        assert_eq!(compose(&two, &half).unwrap(), LinMap::scalar(q(1)));
        let f = flip(2, 2);
        assert_eq!(compose(&f, &f).unwrap(), naive_product(&f, &f));
        assert_eq!(compose(&f, &f).unwrap(), LinMap::identity(4));
        assert!(compose(&LinMap::identity(2), &LinMap::identity(3)).is_err());
    }

    #[test]
    fn compose_matches_naive() {
        let a = m(&[&[1, -2, 0], &[0, 3, 5]]);
        let b = m(&[&[2, 0], &[0, 0], &[-1, 7]]);
        assert_eq!(compose(&a, &b).unwrap(), naive_product(&a, &b));
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&LinMap::identity(2), &LinMap::identity(3)), LinMap::identity(6));
        let a = LinMap::scalar(ExactScalar::ratio(2, 3));
        let b = LinMap::scalar(ExactScalar::ratio(-3, 5));
        assert_eq!(kron(&a, &b), LinMap::scalar(ExactScalar::ratio(-2, 5)));
        // e_1 ⊗ e_0 in 2 ⊗ 3 sits at index 3.
        let v = kron(&LinMap::basis(2, 1), &LinMap::basis(3, 0));
        assert_eq!(v, LinMap::basis(6, 3));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(1, 3), LinMap::identity(3));
        let e01 = LinMap::basis(4, 1);
        assert_eq!(flip(2, 2).compose(&e01).unwrap(), LinMap::basis(4, 2));
        for mm in 1..=4 {
            for nn in 1..=4 {
                let back = naive_product(&flip(nn, mm), &flip(mm, nn));
                assert_eq!(back, LinMap::identity(mm * nn));
            }
        }
    }

    #[test]
    fn permute_matches_flip_and_kron() {
        for (a, b) in [(2, 3), (1, 4), (3, 1)] {
            assert_eq!(LinMap::permute(&[a, b], &[1, 0]), flip(a, b));
        }
        // Cyclic shift of three factors sends e_i⊗e_j⊗e_k to e_k⊗e_i⊗e_j.
        let p = LinMap::permute(&[2, 3, 2], &[2, 0, 1]);
        let v = kron(&kron(&LinMap::basis(2, 1), &LinMap::basis(3, 2)), &LinMap::basis(2, 0));
        let w = kron(&kron(&LinMap::basis(2, 0), &LinMap::basis(2, 1)), &LinMap::basis(3, 2));
        assert_eq!(p.compose(&v).unwrap(), w);
        assert_eq!(LinMap::permute(&[2, 3, 2], &[0, 1, 2]), LinMap::identity(12));
    }

    #[test]
    fn eq_examples() {
        assert!(eq(&LinMap::identity(2), &LinMap::identity(2)));
        let a = LinMap::from_literal(&[vec!["1/2".into()]]).unwrap();
        let b = LinMap::from_literal(&[vec!["2/4".into()]]).unwrap();
        assert!(eq(&a, &b));
        assert!(eq(&LinMap::identity(2), &flip(1, 2)));
        assert!(!eq(&LinMap::identity(2), &LinMap::identity(1)));
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(naive_product(&a, &inv), LinMap::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(crate::YdError::NotInvertible));
        let x = a.solve(&m(&[&[3], &[11]])).unwrap();
        assert_eq!(x, m(&[&[1], &[1]]));
    }

    #[test]
    fn first_difference_reports_coordinate() {
        let a = LinMap::identity(3);
        let mut b = a.clone();
        b.set(2, 1, q(5));
        let d = a.first_difference(&b).unwrap();
        assert_eq!((d.row, d.col), (2, 1));
        assert_eq!((d.lhs, d.rhs), (q(0), q(5)));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn literal_round_trip() {
        let a = LinMap::from_literal(&[vec!["-1/3".into(), "4".into()]]).unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[["-1/3","4"]]"#);
        assert_eq!(serde_json::from_str::<LinMap>(&json).unwrap(), a);
        assert!(serde_json::from_str::<LinMap>(r#"[["1"],["1","2"]]"#).is_err());
        assert!(serde_json::from_str::<LinMap>("[]").is_err());
    }
}
