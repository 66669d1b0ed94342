use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Result of [`smith_normal_form`]: `u · m · v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// The diagonal entries `d₁ | d₂ | …`, including trailing zeros.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    /// row_dst -= q · row_src
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let t = &m[(src, j)] * q;
                m[(dst, j)] -= t;
            }
        }
    }

    /// col_dst -= q · col_src
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for i in 0..m.rows() {
                let t = &m[(i, src)] * q;
                m[(i, dst)] -= t;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                m[(i, j)] = -&m[(i, j)];
            }
        }
    }

    /// Moves the smallest nonzero entry of the trailing block to `(t, t)`.
    fn place_pivot(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else { return false };
        self.swap_rows(t, i);
        self.swap_cols(t, j);
        true
    }

    fn step(&mut self, t: usize) {
        loop {
            let p = self.a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..self.a.rows() {
                let q = self.a[(i, t)].div_floor(&p);
                if !q.is_zero() {
                    self.row_axpy(i, t, &q);
                }
                dirty |= !self.a[(i, t)].is_zero();
            }
            for j in t + 1..self.a.cols() {
                let q = self.a[(t, j)].div_floor(&p);
                if !q.is_zero() {
                    self.col_axpy(j, t, &q);
                }
                dirty |= !self.a[(t, j)].is_zero();
            }
            if dirty {
                self.place_pivot(t);
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let bad = (t + 1..self.a.rows())
                .flat_map(|i| (t + 1..self.a.cols()).map(move |j| (i, j)))
                .find(|&(i, j)| !self.a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => self.row_axpy(t, i, &-BigInt::one()),
                None => break,
            }
        }
        if self.a[(t, t)].is_negative() {
            self.negate_row(t);
        }
    }
}

/// Smith normal form by unimodular row and column reduction.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let mut r = Reducer { a: m.clone(), u: IntMatrix::identity(m.rows()), v: IntMatrix::identity(m.cols()) };
    for t in 0..m.rows().min(m.cols()) {
        if !r.place_pivot(t) {
            break;
        }
        r.step(t);
    }
    Smith { d: r.a, u: r.u, v: r.v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::det_bareiss;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> Vec<BigInt> {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(det_bareiss(&s.u).unwrap().abs(), BigInt::one());
        assert_eq!(det_bareiss(&s.v).unwrap().abs(), BigInt::one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(!w[0].is_negative());
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]), "{f:?}");
        }
        f
    }

    #[test]
    fn diagonal_examples() {
        let f = check(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(6)]);
        let f = check(&IntMatrix::from_rows(&[vec![4, 0], vec![0, 6]]));
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn rectangular_and_zero() {
        let f = check(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let f = check(&IntMatrix::zeros(3, 2));
        assert!(f.iter().all(|x| x.is_zero()));
        check(&IntMatrix::from_rows(&[vec![0, 3], vec![0, 5], vec![0, 0]]));
    }

    proptest! {
        #[test]
        fn postconditions_hold(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i64..10, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 5..i * 5 + cols].to_vec()).collect();
            check(&IntMatrix::from_rows(&data));
        }
    }
}
