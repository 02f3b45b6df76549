//! Matrices whose entries are noncommutative polynomials.

use crate::data::CMatrix;
use crate::error::MonadError;
use star_algebra::{Coefficient, Complex64, NCPolynomial, RelationSystem};

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<NCPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![NCPolynomial::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> NCPolynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    /// Constant matrix with every entry scaled by a formal coefficient.
    pub fn constant(m: &CMatrix, c: Coefficient) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |r, col| {
            NCPolynomial::constant(c.scale(m[(r, col)]))
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { NCPolynomial::one() } else { NCPolynomial::zero() })
    }

    pub fn get(&self, r: usize, c: usize) -> &NCPolynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: NCPolynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[NCPolynomial] {
        &self.entries
    }

    fn same_shape(&self, other: &PolyMatrix) -> Result<(), MonadError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MonadError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, MonadError> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).add(other.get(r, c))))
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, MonadError> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).sub(other.get(r, c))))
    }

    pub fn scale(&self, c: impl Into<Coefficient> + Copy) -> PolyMatrix {
        Self::from_fn(self.rows, self.cols, |r, col| self.get(r, col).scale(c))
    }

    /// Every entry multiplied on the right by `p` (free product).
    pub fn times_poly(&self, p: &NCPolynomial) -> PolyMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, c).concat_mul(p))
    }

    /// Free product: entries multiply by word concatenation.
    pub fn concat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MonadError> {
        if self.cols != other.rows {
            return Err(MonadError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = NCPolynomial::zero();
            for s in 0..self.cols {
                let (a, b) = (self.get(r, s), other.get(s, c));
                if !a.is_zero() && !b.is_zero() {
                    acc.add_assign(&a.concat_mul(b));
                }
            }
            acc
        }))
    }

    /// Product followed by normal form in `sys`.
    pub fn mul_in(&self, other: &PolyMatrix, sys: &RelationSystem) -> Result<PolyMatrix, MonadError> {
        self.concat_mul(other)?.normal_form(sys)
    }

    pub fn normal_form(&self, sys: &RelationSystem) -> Result<PolyMatrix, MonadError> {
        let mut out = Self::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, sys.normal_form(self.get(r, c))?);
            }
        }
        Ok(out)
    }

    /// Conjugate transpose with the involution of `sys` on entries.
    pub fn adjoint_in(&self, sys: &RelationSystem) -> Result<PolyMatrix, MonadError> {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, sys.adjoint(self.get(r, c))?);
            }
        }
        Ok(out)
    }

    /// Conjugate transpose of a matrix of constants (no relations needed).
    pub fn constant_adjoint(&self) -> PolyMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj_coefficients())
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPolynomial::is_zero)
    }

    /// Largest coefficient modulus over all entries.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(NCPolynomial::max_abs).fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(&NCPolynomial) -> NCPolynomial) -> PolyMatrix {
        Self::from_fn(self.rows, self.cols, |r, c| f(self.get(r, c)))
    }

    /// Numeric matrix of a constant PolyMatrix after specialising the formal
    /// parameters. Non-constant terms are an error.
    pub fn to_numeric(&self, hbar: Complex64, half_mu: Complex64) -> Result<CMatrix, MonadError> {
        let mut out = CMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.get(r, c).specialize(hbar, half_mu);
                for (m, coeff) in p.terms() {
                    if m.degree() > 0 {
                        return Err(MonadError::Shape(format!("entry ({r},{c}) is not constant")));
                    }
                    out[(r, c)] += coeff.value;
                }
            }
        }
        Ok(out)
    }

    /// Stacks blocks vertically.
    pub fn vstack(blocks: &[&PolyMatrix]) -> Result<PolyMatrix, MonadError> {
        let cols = blocks.first().map(|b| b.cols).unwrap_or(0);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(MonadError::Shape("vstack column mismatch".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..cols {
                    out.set(r0 + r, c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
        }
        Ok(out)
    }

    /// Places blocks side by side.
    pub fn hstack(blocks: &[&PolyMatrix]) -> Result<PolyMatrix, MonadError> {
        let t: Vec<PolyMatrix> = blocks.iter().map(|b| b.transpose()).collect();
        let refs: Vec<&PolyMatrix> = t.iter().collect();
        Ok(Self::vstack(&refs)?.transpose())
    }
}
