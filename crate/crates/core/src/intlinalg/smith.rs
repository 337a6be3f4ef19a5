use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U·M·V = D` together with `U⁻¹` and `V⁻¹`.
///
/// `D` carries the invariant factors `d₁ | d₂ | … | d_r` (all positive) on
/// the leading diagonal, followed by zeros.
#[derive(Clone, Debug)]
pub struct SmithForm {
    u: IntMatrix,
    u_inv: IntMatrix,
    d: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
    invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn u_inv(&self) -> &IntMatrix {
        &self.u_inv
    }

    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    pub fn v_inv(&self) -> &IntMatrix {
        &self.v_inv
    }

    /// The nonzero diagonal entries, in divisibility order (1s included).
    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn into_parts(self) -> (IntMatrix, IntMatrix, IntMatrix) {
        (self.u, self.d, self.v)
    }

    /// Solves `M·x = b` for the matrix this form was computed from.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.u.cols(), "right-hand side has wrong length");
        let y = self.u.mul_vec(b);
        let r = self.rank();
        if y[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut z = vec![BigInt::zero(); self.v.rows()];
        for i in 0..r {
            let (q, rem) = y[i].div_rem(&self.invariants[i]);
            if !rem.is_zero() {
                return None;
            }
            z[i] = q;
        }
        Some(self.v.mul_vec(&z))
    }
}

/// Computes the Smith normal form of `m`.
///
/// Pivots are chosen with minimal absolute value among the nonzero entries of
/// the active submatrix, ties broken by row-major position, so the output is
/// a fixed function of the input.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    // Row operation `row[dst] += c·row[src]`, mirrored on U and U⁻¹.
    let row_add = |a: &mut IntMatrix,
                   u: &mut IntMatrix,
                   u_inv: &mut IntMatrix,
                   dst: usize,
                   src: usize,
                   c: &BigInt| {
        a.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        u_inv.add_col_multiple(src, dst, &-c);
    };
    let col_add = |a: &mut IntMatrix,
                   v: &mut IntMatrix,
                   v_inv: &mut IntMatrix,
                   dst: usize,
                   src: usize,
                   c: &BigInt| {
        a.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        v_inv.add_row_multiple(src, dst, &-c);
    };

    let mut invariants = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Locate the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        // Clear column t and row t; a nonzero remainder restarts the step
        // with a strictly smaller pivot.
        let mut dirty = false;
        for i in t + 1..rows {
            if a[(i, t)].is_zero() {
                continue;
            }
            let q = a[(i, t)].div_floor(&a[(t, t)]);
            row_add(&mut a, &mut u, &mut u_inv, i, t, &-q);
            dirty |= !a[(i, t)].is_zero();
        }
        for j in t + 1..cols {
            if a[(t, j)].is_zero() {
                continue;
            }
            let q = a[(t, j)].div_floor(&a[(t, t)]);
            col_add(&mut a, &mut v, &mut v_inv, j, t, &-q);
            dirty |= !a[(t, j)].is_zero();
        }
        if dirty {
            continue;
        }

        // Divisibility: fold an offending row into row t and redo the step.
        let p = a[(t, t)].clone();
        let offender = (t + 1..rows)
            .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
        if let Some(i) = offender {
            row_add(&mut a, &mut u, &mut u_inv, t, i, &BigInt::one());
            continue;
        }

        if p.is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        invariants.push(a[(t, t)].clone());
        t += 1;
    }

    SmithForm {
        u,
        u_inv,
        d: a,
        v,
        v_inv,
        invariants,
    }
}
