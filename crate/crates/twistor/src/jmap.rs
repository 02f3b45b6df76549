//! The quaternionic structure J on C⁴ and its extension to the twistor algebra.

use star_algebra::generator::{CP3_A, CP3_U, CP3_V};
use star_algebra::{AlgebraError, GeneratorId, NCPolynomial, Space};

use crate::quotient::star;

/// J on a letter. J is antilinear and anti-multiplicative, and J(g*) = J(g)*.
pub fn j_letter(g: GeneratorId) -> Result<NCPolynomial, AlgebraError> {
    if g.conjugated {
        return Ok(star(&j_letter(g.star())?));
    }
    let gen = NCPolynomial::generator;
    let img = match (g.space, g.row, g.index) {
        (Space::C4, _, 1) => gen(GeneratorId::z(2).star()).neg(),
        (Space::C4, _, 2) => gen(GeneratorId::z(1).star()),
        (Space::C4, _, 3) => gen(GeneratorId::z(4).star()).neg(),
        (Space::C4, _, 4) => gen(GeneratorId::z(3).star()),
        (Space::CP3, CP3_A, j @ 1..=4) => gen(GeneratorId::a(match j {
            1 => 2,
            2 => 1,
            3 => 4,
            _ => 3,
        })),
        (Space::CP3, CP3_U, 1) => gen(GeneratorId::u(1)).neg(),
        (Space::CP3, CP3_V, 1) => gen(GeneratorId::v(1)).neg(),
        (Space::CP3, CP3_U, 2) => gen(GeneratorId::v(2).star()),
        (Space::CP3, CP3_U, 3) => gen(GeneratorId::v(3).star()).neg(),
        (Space::CP3, CP3_V, 2) => gen(GeneratorId::u(2).star()),
        (Space::CP3, CP3_V, 3) => gen(GeneratorId::u(3).star()).neg(),
        _ => return Err(AlgebraError::UnknownGenerator(g.label())),
    };
    Ok(img)
}

/// J applied to a polynomial over C⁴ or CP³ generators.
pub fn apply_j(p: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
    let mut err = None;
    let out = p.substitute_antilinear_anti(|g| match j_letter(g) {
        Ok(x) => x,
        Err(e) => {
            err.get_or_insert(e);
            NCPolynomial::zero()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
