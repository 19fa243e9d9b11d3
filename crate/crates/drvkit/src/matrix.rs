//! Dense exact linear algebra over ℚ and F_p.
//!
//! The rational path integerizes each row and runs fraction-free
//! (Bareiss-style) forward elimination so intermediate entries stay
//! bounded minors of the input; reduced rationals only reappear during
//! back-substitution. The F_p path is plain Gaussian elimination on
//! `u32` residues with widening products. Pivots are chosen as the first
//! nonzero entry in row-major scan order, so outputs are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{CoefficientRing, Prime, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix over {0} is not supported; solve over Q or F_p")]
    UnsupportedRing(CoefficientRing),
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("entry at ({row}, {col}) does not belong to the matrix ring")]
    MixedRings { row: usize, col: usize },
}

/// Dense row-major matrix over a fixed field (ℚ or F_p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ring: CoefficientRing,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, ring: CoefficientRing) -> Result<Matrix, LinalgError> {
        if !ring.is_field() {
            return Err(LinalgError::UnsupportedRing(ring));
        }
        Ok(Matrix {
            rows,
            cols,
            ring,
            entries: vec![Scalar::zero(ring); rows * cols],
        })
    }

    pub fn from_rows(ring: CoefficientRing, rows: &[Vec<Scalar>]) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols, ring)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    context: format!("row {} has {} entries, expected {}", i, row.len(), cols),
                });
            }
            for (j, v) in row.iter().enumerate() {
                if !v.matches_ring(ring) {
                    return Err(LinalgError::MixedRings { row: i, col: j });
                }
                m.entries[i * cols + j] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<(), LinalgError> {
        if !v.matches_ring(self.ring) {
            return Err(LinalgError::MixedRings { row: i, col: j });
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                context: format!("vector length {} vs {} columns", v.len(), self.cols),
            });
        }
        let mut out = vec![Scalar::zero(self.ring); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero(self.ring);
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() && !v[j].is_zero() {
                    acc = acc.add(&e.mul(&v[j]));
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        match self.ring {
            CoefficientRing::ModP(p) => fp_echelon(self.to_fp_rows(p), self.cols, p).pivots.len(),
            _ => q_echelon(self.to_int_rows(), self.cols).pivots.len(),
        }
    }

    /// Basis of {v : Av = 0}, one vector per free column in increasing
    /// column order. Each vector has 1 at its free coordinate, 0 at the
    /// other free coordinates, and the pivot coordinates determined by
    /// back-substitution, matching the reduced-echelon parameterization.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        match self.ring {
            CoefficientRing::ModP(p) => {
                let ech = fp_echelon(self.to_fp_rows(p), self.cols, p);
                fp_nullspace(&ech, self.cols, p)
            }
            _ => {
                let ech = q_echelon(self.to_int_rows(), self.cols);
                q_nullspace(&ech, self.cols)
            }
        }
    }

    /// One exact solution of Av = b with every free variable set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve_particular(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                context: format!("rhs length {} vs {} rows", b.len(), self.rows),
            });
        }
        for (i, v) in b.iter().enumerate() {
            if !v.matches_ring(self.ring) {
                return Err(LinalgError::MixedRings {
                    row: i,
                    col: self.cols,
                });
            }
        }
        match self.ring {
            CoefficientRing::ModP(p) => {
                let mut rows = self.to_fp_rows(p);
                for (row, rhs) in rows.iter_mut().zip(b) {
                    row.push(rhs.as_residue().expect("ring checked above"));
                }
                let ech = fp_echelon(rows, self.cols + 1, p);
                Ok(fp_particular(&ech, self.cols, p))
            }
            _ => {
                let mut rows = Vec::with_capacity(self.rows);
                for i in 0..self.rows {
                    let mut row: Vec<BigRational> = (0..self.cols)
                        .map(|j| self.get(i, j).as_rational().expect("ring checked").clone())
                        .collect();
                    row.push(b[i].as_rational().expect("ring checked above").clone());
                    rows.push(integerize_row(&row));
                }
                let ech = q_echelon(rows, self.cols + 1);
                Ok(q_particular(&ech, self.cols))
            }
        }
    }

    fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row: Vec<BigRational> = (0..self.cols)
                    .map(|j| self.get(i, j).as_rational().expect("rational ring").clone())
                    .collect();
                integerize_row(&row)
            })
            .collect()
    }

    fn to_fp_rows(&self, _p: Prime) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).as_residue().expect("mod-p ring"))
                    .collect()
            })
            .collect()
    }
}

/// Scale a rational row by the lcm of its denominators and remove the
/// content, producing a primitive integer row with the same solution set.
fn integerize_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.is_zero() {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut ints: Vec<BigInt> = row.iter().map(|v| (v * &lcm).to_integer()).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        if !v.is_zero() {
            content = content.gcd(v);
        }
    }
    if content > BigInt::one() {
        for v in &mut ints {
            *v = &*v / &content;
        }
    }
    ints
}

struct QEchelon {
    rows: Vec<Vec<BigInt>>,
    /// (row, col) of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Fraction-free forward elimination. After step k every entry below the
/// pivot rows is a minor of the input bordered by the pivots chosen so
/// far, so the division by the previous pivot is exact.
fn q_echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> QEchelon {
    let n_rows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r >= n_rows {
            break;
        }
        let Some(sel) = (r..n_rows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let (pivot_row, rest) = rows[r..].split_first_mut().expect("r < n_rows");
        let piv = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let f = std::mem::replace(&mut row[col], BigInt::zero());
            if f.is_zero() {
                for v in row[col + 1..].iter_mut() {
                    if !v.is_zero() {
                        *v = exact_div(&(&*v * &piv), &prev);
                    }
                }
            } else {
                for (v, pv) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                    if v.is_zero() && pv.is_zero() {
                        continue;
                    }
                    *v = exact_div(&(&*v * &piv - &f * pv), &prev);
                }
            }
        }
        pivots.push((r, col));
        prev = piv;
        r += 1;
    }
    QEchelon { rows, pivots }
}

fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, rem) = num.div_rem(den);
    assert!(rem.is_zero(), "fraction-free elimination lost exactness");
    q
}

/// Solve the echelon system for the prescribed free-variable assignment by
/// back-substitution in reduced rationals.
fn q_backsolve(
    ech: &QEchelon,
    cols: usize,
    assign: impl Fn(usize) -> BigRational,
) -> Vec<BigRational> {
    let mut x: Vec<BigRational> = (0..cols).map(&assign).collect();
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc = BigRational::zero();
        for (j, v) in row.iter().enumerate().skip(c + 1).take(cols - c - 1) {
            if !v.is_zero() && !x[j].is_zero() {
                acc += BigRational::from_integer(v.clone()) * &x[j];
            }
        }
        x[c] = -acc / BigRational::from_integer(row[c].clone());
    }
    x
}

fn q_nullspace(ech: &QEchelon, cols: usize) -> Vec<Vec<Scalar>> {
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let x = q_backsolve(ech, cols, |j| {
            if j == free {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        basis.push(x.into_iter().map(Scalar::Rational).collect());
    }
    basis
}

/// Particular solution of the augmented echelon form [A|b], free variables
/// zero; `None` when a pivot falls in the rhs column. The augmented column
/// is treated as a variable fixed at -1, so pivot equations read A·x - b = 0.
fn q_particular(ech: &QEchelon, cols: usize) -> Option<Vec<Scalar>> {
    if ech.pivots.iter().any(|&(_, c)| c == cols) {
        return None;
    }
    let mut x = q_backsolve(ech, cols + 1, |j| {
        if j == cols {
            -BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    x.truncate(cols);
    Some(x.into_iter().map(Scalar::Rational).collect())
}

struct FpEchelon {
    p: u32,
    rows: Vec<Vec<u32>>,
    pivots: Vec<(usize, usize)>,
}

fn fp_echelon(mut rows: Vec<Vec<u32>>, cols: usize, p: Prime) -> FpEchelon {
    let p = p.get();
    let pu = u64::from(p);
    let n_rows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r >= n_rows {
            break;
        }
        let Some(sel) = (r..n_rows).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let (pivot_row, rest) = rows[r..].split_first_mut().expect("r < n_rows");
        let piv_inv = u64::from(fp_inv(pivot_row[col], p));
        for row in rest.iter_mut() {
            let f = std::mem::replace(&mut row[col], 0);
            if f == 0 {
                continue;
            }
            // row -= f/piv * pivot_row
            let scale = (u64::from(f) * piv_inv) % pu;
            for (v, pv) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if *pv == 0 {
                    continue;
                }
                let sub = (scale * u64::from(*pv)) % pu;
                *v = ((u64::from(*v) + pu - sub) % pu) as u32;
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    FpEchelon { p, rows, pivots }
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r): (i64, i64) = (i64::from(p), i64::from(a));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a unit mod a prime");
    t.rem_euclid(i64::from(p)) as u32
}

fn fp_backsolve(ech: &FpEchelon, cols: usize, assign: impl Fn(usize) -> u32) -> Vec<u32> {
    let pu = u64::from(ech.p);
    let mut x: Vec<u32> = (0..cols).map(&assign).collect();
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc: u64 = 0;
        for (j, v) in row.iter().enumerate().skip(c + 1).take(cols - c - 1) {
            if *v != 0 && x[j] != 0 {
                acc = (acc + u64::from(*v) * u64::from(x[j])) % pu;
            }
        }
        let neg = (pu - acc) % pu;
        x[c] = ((neg * u64::from(fp_inv(row[c], ech.p))) % pu) as u32;
    }
    x
}

fn fp_nullspace(ech: &FpEchelon, cols: usize, p: Prime) -> Vec<Vec<Scalar>> {
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let x = fp_backsolve(ech, cols, |j| u32::from(j == free));
        basis.push(
            x.into_iter()
                .map(|residue| Scalar::ModP {
                    residue,
                    modulus: p,
                })
                .collect(),
        );
    }
    basis
}

fn fp_particular(ech: &FpEchelon, cols: usize, p: Prime) -> Option<Vec<Scalar>> {
    if ech.pivots.iter().any(|&(_, c)| c == cols) {
        return None;
    }
    let minus_one = p.get() - 1;
    let mut x = fp_backsolve(ech, cols + 1, |j| if j == cols { minus_one } else { 0 });
    x.truncate(cols);
    Some(
        x.into_iter()
            .map(|residue| Scalar::ModP {
                residue,
                modulus: p,
            })
            .collect(),
    )
}
