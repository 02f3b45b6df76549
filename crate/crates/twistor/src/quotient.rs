//! Commutative algebras modulo side relations, reduced by monomial
//! substitution.

use star_algebra::{GeneratorId, Monomial, NCPolynomial, Space};

const BUDGET: usize = 200_000;

/// Commutative *-algebra modulo relations `lead = replacement`.
///
/// Each rule replaces a sorted sub-multiset of letters by a polynomial that is
/// smaller in degree-lex order. The shipped rule sets have pairwise coprime
/// leading monomials, so they form Gröbner bases and normal forms are unique.
#[derive(Clone, Debug)]
pub struct QuotientContext {
    pub name: String,
    rules: Vec<(Vec<GeneratorId>, NCPolynomial)>,
}

/// Generators fixed by * (real coordinates, the diagonal of q, inverses).
pub fn is_self_adjoint(g: &GeneratorId) -> bool {
    match g.space {
        Space::Inverse => true,
        Space::S4 => g.index == 0,
        Space::CP3 => g.row == star_algebra::generator::CP3_A,
        Space::CP1 => g.index != 3,
        _ => false,
    }
}

pub fn star_letter(g: GeneratorId) -> GeneratorId {
    if is_self_adjoint(&g) {
        g
    } else {
        g.star()
    }
}

/// Adjoint in a commutative algebra with self-adjoint letters respected.
pub fn star(p: &NCPolynomial) -> NCPolynomial {
    NCPolynomial::from_terms(p.terms().map(|(m, c)| {
        (Monomial::new(m.word.iter().map(|g| star_letter(*g)).collect()), c.conj())
    }))
    .graded_sort()
}

/// Product in the commutative algebra.
pub fn cmul(a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
    a.concat_mul(b).graded_sort()
}

/// Removes `lead` (sorted) from `word` (sorted) as a multiset.
fn strip(word: &[GeneratorId], lead: &[GeneratorId]) -> Option<Vec<GeneratorId>> {
    let mut rest = Vec::with_capacity(word.len());
    let mut j = 0;
    for &g in word {
        if j < lead.len() && g == lead[j] {
            j += 1;
        } else {
            rest.push(g);
        }
    }
    (j == lead.len()).then_some(rest)
}

impl QuotientContext {
    pub fn new(name: impl Into<String>) -> Self {
        QuotientContext { name: name.into(), rules: Vec::new() }
    }

    /// Declares `lead − replacement = 0` with `lead` the leading word.
    pub fn with_rule(mut self, lead: Vec<GeneratorId>, replacement: NCPolynomial) -> Self {
        let mut lead = lead;
        lead.sort();
        self.rules.push((lead, replacement.graded_sort()));
        self
    }

    /// Side relation p = 0, oriented on its leading term.
    pub fn with_relation(self, p: &NCPolynomial) -> Self {
        let p = p.graded_sort();
        let (lead, c) = p
            .terms()
            .max_by(|a, b| (a.0.degree(), &a.0.word).cmp(&(b.0.degree(), &b.0.word)))
            .map(|(m, c)| (m.word.clone(), c))
            .expect("nonzero relation");
        let inv = c.inv().expect("invertible leading coefficient");
        let rest = p.sub(&NCPolynomial::term(lead.clone(), c)).scale(inv).neg();
        self.with_rule(lead, rest)
    }

    pub fn reduce(&self, p: &NCPolynomial) -> NCPolynomial {
        let mut todo: Vec<(Monomial, star_algebra::Coefficient)> =
            p.graded_sort().into_terms().collect();
        let mut out = NCPolynomial::zero();
        let mut steps = 0;
        while let Some((m, c)) = todo.pop() {
            steps += 1;
            assert!(steps < BUDGET, "quotient reduction in {} did not terminate", self.name);
            let hit = self
                .rules
                .iter()
                .find_map(|(lead, rep)| strip(&m.word, lead).map(|rest| (rest, rep)));
            match hit {
                None => out.add_term(m, c),
                Some((rest, rep)) => {
                    let prod = cmul(&NCPolynomial::term(rest, c), rep);
                    todo.extend(prod.into_terms());
                }
            }
        }
        out
    }

    pub fn is_zero(&self, p: &NCPolynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_relation_reduces() {
        let x = GeneratorId::x(0);
        let w = GeneratorId::inverse(1);
        let ctx = QuotientContext::new("loc")
            .with_relation(&NCPolynomial::word(vec![w, x]).add(&NCPolynomial::generator(w)).sub(&NCPolynomial::one()));
        // w(1+x) − 1 = 0
        let p = cmul(&NCPolynomial::generator(w), &NCPolynomial::one().add(&NCPolynomial::generator(x)));
        assert!(ctx.is_zero(&p.sub(&NCPolynomial::one())));
        assert!(!ctx.is_zero(&NCPolynomial::generator(w)));
    }
}
