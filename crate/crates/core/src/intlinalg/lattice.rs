use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// A sublattice of `Z^n` kept in row-echelon (Hermite) form under
/// incremental insertion.
///
/// Used when a presentation has many more relations than generators: the
/// lattice never holds more than `n` basis vectors. Once the lattice has full
/// rank its determinant `D` satisfies `D·Z^n ⊆ L`, and incoming vectors are
/// reduced modulo `D` before insertion.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    /// `rows[p]` is the basis vector whose leading nonzero entry sits at
    /// column `p`, with that entry positive.
    rows: Vec<Option<Vec<BigInt>>>,
    det: Option<BigInt>,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice {
            dim,
            rows: vec![None; dim],
            det: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().filter(|r| r.is_some()).count()
    }

    pub fn insert(&mut self, v: &[BigInt]) {
        assert_eq!(v.len(), self.dim);
        let mut v: Vec<BigInt> = match &self.det {
            Some(d) => v.iter().map(|x| x.mod_floor(d)).collect(),
            None => v.to_vec(),
        };
        for p in 0..self.dim {
            if v[p].is_zero() {
                continue;
            }
            match self.rows[p].take() {
                None => {
                    if v[p].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows[p] = Some(v);
                    self.reduce_above(p);
                    self.refresh_det();
                    return;
                }
                Some(row) => {
                    let e = row[p].extended_gcd(&v[p]);
                    let (a, b) = (&row[p] / &e.gcd, &v[p] / &e.gcd);
                    let mut new_row: Vec<BigInt> = row
                        .iter()
                        .zip(&v)
                        .map(|(r, x)| &e.x * r + &e.y * x)
                        .collect();
                    let rest: Vec<BigInt> =
                        v.iter().zip(&row).map(|(x, r)| &a * x - &b * r).collect();
                    if new_row[p].is_negative() {
                        new_row.iter_mut().for_each(|x| *x = -&*x);
                    }
                    if let Some(d) = &self.det {
                        for x in new_row.iter_mut().skip(p + 1) {
                            *x = x.mod_floor(d);
                        }
                    }
                    self.rows[p] = Some(new_row);
                    self.reduce_above(p);
                    v = match &self.det {
                        Some(d) => rest.iter().map(|x| x.mod_floor(d)).collect(),
                        None => rest,
                    };
                }
            }
        }
    }

    /// Reduces entries in column `p` of the rows above `p` modulo the pivot.
    fn reduce_above(&mut self, p: usize) {
        let Some(pivot_row) = self.rows[p].clone() else {
            return;
        };
        let pivot = &pivot_row[p];
        for q in 0..p {
            if let Some(row) = self.rows[q].as_mut() {
                let c = row[p].div_floor(pivot);
                if !c.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &c * y;
                    }
                }
            }
        }
    }

    fn refresh_det(&mut self) {
        if self.det.is_none() && self.rows.iter().all(Option::is_some) {
            let d = self
                .rows
                .iter()
                .enumerate()
                .map(|(p, r)| r.as_ref().expect("full rank")[p].clone())
                .fold(BigInt::one(), |acc, x| acc * x);
            self.det = Some(d);
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for p in 0..self.dim {
            if v[p].is_zero() {
                continue;
            }
            let Some(row) = &self.rows[p] else {
                return false;
            };
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        true
    }

    /// Basis vectors as the columns of a `dim × rank` matrix.
    pub fn basis_columns(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.rows.iter().flatten().cloned().collect();
        IntMatrix::from_columns(self.dim, &cols)
    }
}
