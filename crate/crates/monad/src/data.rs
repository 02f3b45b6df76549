//! ADHM data (B₁, B₂, I, J) and the two matrix equations.

use crate::error::MonadError;
use hopf_twist::TwistModel;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use star_algebra::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// ADHM data for charge k. Shapes: B₁, B₂ are k×k, I is k×2, J is 2×k, so that
/// every term of both equations is k×k.
#[derive(Clone, Debug, PartialEq)]
pub struct ADHMData {
    pub k: usize,
    pub model: TwistModel,
    pub b1: CMatrix,
    pub b2: CMatrix,
    pub i: CMatrix,
    pub j: CMatrix,
}

/// Row-major `[re, im]` pairs, the on-disk form.
#[derive(Serialize, Deserialize)]
struct RawData {
    k: usize,
    model: TwistModel,
    #[serde(rename = "B1")]
    b1: Vec<[f64; 2]>,
    #[serde(rename = "B2")]
    b2: Vec<[f64; 2]>,
    #[serde(rename = "I")]
    i: Vec<[f64; 2]>,
    #[serde(rename = "J")]
    j: Vec<[f64; 2]>,
}

fn flatten(m: &CMatrix) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(m.len());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let z = m[(r, c)];
            out.push([z.re, z.im]);
        }
    }
    out
}

fn unflatten(name: &str, v: &[[f64; 2]], rows: usize, cols: usize) -> Result<CMatrix, MonadError> {
    if v.len() != rows * cols {
        return Err(MonadError::Shape(format!(
            "{name} has {} entries, expected {rows}x{cols}",
            v.len()
        )));
    }
    Ok(CMatrix::from_fn(rows, cols, |r, c| {
        let [re, im] = v[r * cols + c];
        Complex64::new(re, im)
    }))
}

impl Serialize for ADHMData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawData {
            k: self.k,
            model: self.model,
            b1: flatten(&self.b1),
            b2: flatten(&self.b2),
            i: flatten(&self.i),
            j: flatten(&self.j),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ADHMData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawData::deserialize(d)?;
        let k = raw.k;
        let conv = || -> Result<ADHMData, MonadError> {
            let data = ADHMData {
                k,
                model: raw.model,
                b1: unflatten("B1", &raw.b1, k, k)?,
                b2: unflatten("B2", &raw.b2, k, k)?,
                i: unflatten("I", &raw.i, k, 2)?,
                j: unflatten("J", &raw.j, 2, k)?,
            };
            data.validate()?;
            Ok(data)
        };
        conv().map_err(serde::de::Error::custom)
    }
}

/// Conjugate transpose.
pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

impl ADHMData {
    pub fn new(
        model: TwistModel,
        b1: CMatrix,
        b2: CMatrix,
        i: CMatrix,
        j: CMatrix,
    ) -> Result<Self, MonadError> {
        let data = ADHMData { k: b1.nrows(), model, b1, b2, i, j };
        data.validate()?;
        Ok(data)
    }

    pub fn zeros(k: usize, model: TwistModel) -> Self {
        ADHMData {
            k,
            model,
            b1: CMatrix::zeros(k, k),
            b2: CMatrix::zeros(k, k),
            i: CMatrix::zeros(k, 2),
            j: CMatrix::zeros(2, k),
        }
    }

    pub fn validate(&self) -> Result<(), MonadError> {
        let k = self.k;
        if k == 0 {
            return Err(MonadError::Shape("k must be positive".into()));
        }
        for (name, m, r, c) in [
            ("B1", &self.b1, k, k),
            ("B2", &self.b2, k, k),
            ("I", &self.i, k, 2),
            ("J", &self.j, 2, k),
        ] {
            if m.nrows() != r || m.ncols() != c {
                return Err(MonadError::Shape(format!(
                    "{name} is {}x{}, expected {r}x{c}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(MonadError::InvalidData(format!("{name} has non-finite entries")));
            }
        }
        self.model.validate()?;
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self, MonadError> {
        serde_json::from_str(s).map_err(|e| MonadError::InvalidData(e.to_string()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("ADHM data serialises")
    }

    /// Real parameters in the order Re/Im of B₁, B₂, I, J (row-major).
    pub fn to_real_vector(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * (2 * self.k * self.k + 4 * self.k));
        for m in [&self.b1, &self.b2, &self.i, &self.j] {
            for [re, im] in flatten(m) {
                out.push(re);
                out.push(im);
            }
        }
        out
    }

    pub fn from_real_vector(k: usize, model: TwistModel, x: &[f64]) -> Result<Self, MonadError> {
        let n = 2 * (2 * k * k + 4 * k);
        if x.len() != n {
            return Err(MonadError::Shape(format!("expected {n} real parameters, got {}", x.len())));
        }
        let pairs: Vec<[f64; 2]> = x.chunks(2).map(|c| [c[0], c[1]]).collect();
        let (b1, rest) = pairs.split_at(k * k);
        let (b2, rest) = rest.split_at(k * k);
        let (i, j) = rest.split_at(2 * k);
        Ok(ADHMData {
            k,
            model,
            b1: unflatten("B1", b1, k, k)?,
            b2: unflatten("B2", b2, k, k)?,
            i: unflatten("I", i, k, 2)?,
            j: unflatten("J", j, 2, k)?,
        })
    }

    /// μ̄B₁B₂ − μB₂B₁ + IJ; the Moyal and classical cases have μ = 1.
    pub fn complex_equation(&self) -> CMatrix {
        let mu = self.model.mu();
        &self.b1 * &self.b2 * mu.conj() - &self.b2 * &self.b1 * mu + &self.i * &self.j
    }

    /// [B₁,B₁*] + [B₂,B₂*] + II* − J*J − ζ𝟙 with the real level ζ of the model.
    pub fn real_equation(&self) -> CMatrix {
        let (b1, b2) = (&self.b1, &self.b2);
        let zeta = Complex64::new(self.model.zeta(), 0.0);
        b1 * dagger(b1) - dagger(b1) * b1 + b2 * dagger(b2) - dagger(b2) * b2
            + &self.i * dagger(&self.i)
            - dagger(&self.j) * &self.j
            - CMatrix::identity(self.k, self.k) * zeta
    }

    /// U(k) action B ↦ gBg⁻¹, I ↦ gI, J ↦ Jg⁻¹ (g unitary, so g⁻¹ = g*).
    pub fn gauge_transform(&self, g: &CMatrix) -> ADHMData {
        let gi = dagger(g);
        ADHMData {
            k: self.k,
            model: self.model,
            b1: g * &self.b1 * &gi,
            b2: g * &self.b2 * &gi,
            i: g * &self.i,
            j: &self.j * &gi,
        }
    }

    /// Frobenius norm of all parameters.
    pub fn norm(&self) -> f64 {
        [&self.b1, &self.b2, &self.i, &self.j]
            .iter()
            .map(|m| m.norm_squared())
            .sum::<f64>()
            .sqrt()
    }
}

/// Frobenius norms of the complex and real ADHM equations.
pub fn adhm_residual(data: &ADHMData) -> Result<(f64, f64), MonadError> {
    data.validate()?;
    Ok((data.complex_equation().norm(), data.real_equation().norm()))
}
