//! Tagged generators and their fixed total order.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Ambient algebra a generator belongs to.
///
/// The variant order is part of the generator order: formal inverses sit
/// leftmost, parameter (monad) generators precede Hopf generators, and
/// coordinate generators come last. Smash-product words therefore read
/// `a ⊗ h ⊗ z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Space {
    Inverse,
    MonadM,
    MonadN,
    HopfTrans,
    HopfTorus,
    C4,
    R4,
    S7,
    S4,
    CP3,
    CP1,
}

/// CP³ generator families inside the matrix `q`.
pub const CP3_A: u8 = 0;
pub const CP3_U: u8 = 1;
pub const CP3_V: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorId {
    pub space: Space,
    pub index: u8,
    pub row: u8,
    pub col: u8,
    pub conjugated: bool,
    pub grade: u8,
}

impl GeneratorId {
    pub const fn new(space: Space, index: u8) -> Self {
        GeneratorId { space, index, row: 0, col: 0, conjugated: false, grade: 0 }
    }

    pub const fn entry(space: Space, index: u8, row: u8, col: u8) -> Self {
        GeneratorId { space, index, row, col, conjugated: false, grade: 0 }
    }

    pub const fn z(j: u8) -> Self {
        Self::new(Space::C4, j)
    }

    pub const fn zeta(j: u8) -> Self {
        Self::new(Space::R4, j)
    }

    pub const fn t(j: u8) -> Self {
        Self::new(Space::HopfTrans, j)
    }

    /// ς_j on the torus: ς₁ = s₁, ς₂ = s₁⁻¹, ς₃ = s₂, ς₄ = s₂⁻¹.
    pub const fn varsigma(j: u8) -> Self {
        Self::new(Space::HopfTorus, j)
    }

    /// Monad entry `M^j_{ab}` with zero-based row and column.
    pub const fn m(j: u8, row: u8, col: u8) -> Self {
        Self::entry(Space::MonadM, j, row, col)
    }

    pub const fn x(j: u8) -> Self {
        Self::new(Space::S4, j)
    }

    pub const fn a(j: u8) -> Self {
        Self::entry(Space::CP3, j, CP3_A, 0)
    }

    pub const fn u(j: u8) -> Self {
        Self::entry(Space::CP3, j, CP3_U, 0)
    }

    pub const fn v(j: u8) -> Self {
        Self::entry(Space::CP3, j, CP3_V, 0)
    }

    pub const fn inverse(j: u8) -> Self {
        Self::new(Space::Inverse, j)
    }

    pub const fn star(self) -> Self {
        GeneratorId { conjugated: !self.conjugated, ..self }
    }

    pub const fn conj(self) -> Self {
        self.star()
    }

    /// The exterior derivative of a grade-0 generator.
    pub const fn d(self) -> Self {
        GeneratorId { grade: self.grade + 1, ..self }
    }

    pub const fn is_odd(&self) -> bool {
        self.grade % 2 == 1
    }

    pub fn is_hopf(&self) -> bool {
        matches!(self.space, Space::HopfTrans | Space::HopfTorus)
    }

    pub fn label(&self) -> String {
        let base = match self.space {
            Space::C4 | Space::S7 => format!("z{}", self.index),
            Space::R4 => format!("zeta{}", self.index),
            Space::S4 => format!("x{}", self.index),
            Space::CP3 => {
                let fam = match self.row {
                    CP3_A => "a",
                    CP3_U => "u",
                    _ => "v",
                };
                format!("{fam}{}", self.index)
            }
            Space::CP1 => match self.index {
                1 => "a~1".to_string(),
                2 => "a~2".to_string(),
                _ => "u~1".to_string(),
            },
            Space::MonadM => format!("M{}_{}{}", self.index, self.row + 1, self.col + 1),
            Space::MonadN => format!("N{}_{}{}", self.index, self.row + 1, self.col + 1),
            Space::HopfTrans => format!("t{}", self.index),
            Space::HopfTorus => format!("s{}", self.index),
            Space::Inverse => format!("w{}", self.index),
        };
        let mut out = String::new();
        for _ in 0..self.grade {
            out.push('d');
        }
        out.push_str(&base);
        if self.conjugated {
            out.push('*');
        }
        out
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// z₁..z₄ and conjugates.
pub fn c4_generators() -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for j in 1..=4 {
        out.push(GeneratorId::z(j));
        out.push(GeneratorId::z(j).star());
    }
    out
}

/// z₁..z₄, conjugates, and their differentials.
pub fn c4_calculus_generators() -> Vec<GeneratorId> {
    let mut out = c4_generators();
    let diffs: Vec<_> = out.iter().map(|g| g.d()).collect();
    out.extend(diffs);
    out.sort();
    out
}

pub fn r4_generators() -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for j in 1..=2 {
        out.push(GeneratorId::zeta(j));
        out.push(GeneratorId::zeta(j).star());
    }
    out
}

pub fn r4_calculus_generators() -> Vec<GeneratorId> {
    let mut out = r4_generators();
    let diffs: Vec<_> = out.iter().map(|g| g.d()).collect();
    out.extend(diffs);
    out.sort();
    out
}

/// All entries `M^j_{ab}` (and conjugates) of four `(2k+2) × k` matrices.
pub fn monad_generators(k: usize) -> Vec<GeneratorId> {
    let mut out = Vec::new();
    for j in 1..=4u8 {
        for r in 0..(2 * k + 2) as u8 {
            for c in 0..k as u8 {
                out.push(GeneratorId::m(j, r, c));
                out.push(GeneratorId::m(j, r, c).star());
            }
        }
    }
    out.sort();
    out
}

pub fn trans_generators() -> Vec<GeneratorId> {
    vec![
        GeneratorId::t(1),
        GeneratorId::t(1).star(),
        GeneratorId::t(2),
        GeneratorId::t(2).star(),
    ]
}

pub fn torus_generators() -> Vec<GeneratorId> {
    (1..=4).map(GeneratorId::varsigma).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_order_interleaves_conjugates_and_differentials() {
        let z1 = GeneratorId::z(1);
        assert!(z1 < z1.d());
        assert!(z1.d() < z1.star());
        assert!(z1.star() < z1.star().d());
        assert!(z1.star().d() < GeneratorId::z(2));
        let gens = c4_generators();
        let mut sorted = gens.clone();
        sorted.sort();
        assert_eq!(gens, sorted);
    }

    #[test]
    fn monad_order_is_index_row_col_conj() {
        let a = GeneratorId::m(1, 3, 0);
        let b = GeneratorId::m(2, 0, 0);
        assert!(a < b);
        assert!(GeneratorId::m(1, 0, 1) < GeneratorId::m(1, 1, 0));
        assert!(GeneratorId::m(1, 0, 0) < GeneratorId::m(1, 0, 0).star());
        assert!(GeneratorId::m(4, 9, 9) < GeneratorId::t(1));
        assert!(GeneratorId::varsigma(4) < GeneratorId::z(1));
    }

    #[test]
    fn star_is_involution() {
        for g in c4_calculus_generators().into_iter().chain(monad_generators(2)) {
            assert_eq!(g.star().star(), g);
        }
    }

    #[test]
    fn labels() {
        assert_eq!(GeneratorId::z(3).star().d().label(), "dz3*");
        assert_eq!(GeneratorId::m(2, 0, 1).label(), "M2_12");
        assert_eq!(GeneratorId::u(2).star().label(), "u2*");
    }
}
