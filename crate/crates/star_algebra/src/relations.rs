//! Rewrite systems and the operations that reduce modulo them.

use crate::coefficient::Coefficient;
use crate::error::AlgebraError;
use crate::generator::GeneratorId;
use crate::polynomial::{Monomial, NCPolynomial};
use num_complex::Complex64;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Rewrite steps allowed per `normal_form` call.
pub const STEP_BUDGET: usize = 1_000_000;

type PendingKey = (usize, u32, Vec<GeneratorId>, u32, i32);

/// Terminating rewrite rules `g·h → rhs` on adjacent letters, plus the star
/// table of the ambient *-algebra.
///
/// Reduction always works on the largest pending term in the measure
/// (degree, filtration weight, word). Every rule must strictly lower this
/// measure; `check_termination` verifies it.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    pub name: String,
    generators: BTreeSet<GeneratorId>,
    rules: HashMap<(GeneratorId, GeneratorId), NCPolynomial>,
    star: BTreeMap<GeneratorId, GeneratorId>,
    weights: BTreeMap<GeneratorId, u32>,
}

impl RelationSystem {
    pub fn new(name: impl Into<String>, generators: impl IntoIterator<Item = GeneratorId>) -> Self {
        RelationSystem {
            name: name.into(),
            generators: generators.into_iter().collect(),
            rules: HashMap::new(),
            star: BTreeMap::new(),
            weights: BTreeMap::new(),
        }
    }

    /// Graded-commutative algebra on the given generators: one transposition
    /// rule per out-of-order pair, `g·g → 0` for odd `g`.
    pub fn commutative(
        name: impl Into<String>,
        generators: impl IntoIterator<Item = GeneratorId>,
    ) -> Self {
        let mut sys = Self::new(name, generators);
        sys.add_commutation_rules();
        sys
    }

    /// Adds transposition rules for every ordered pair that lacks a rule.
    pub fn add_commutation_rules(&mut self) {
        let gens: Vec<_> = self.generators.iter().copied().collect();
        for (i, &h) in gens.iter().enumerate() {
            for &g in &gens[i..] {
                if self.rules.contains_key(&(g, h)) {
                    continue;
                }
                if g == h {
                    if g.is_odd() {
                        self.rules.insert((g, g), NCPolynomial::zero());
                    }
                    continue;
                }
                let sign = if g.is_odd() && h.is_odd() { -1.0 } else { 1.0 };
                self.rules.insert((g, h), NCPolynomial::term(vec![h, g], Coefficient::real(sign)));
            }
        }
    }

    pub fn add_generator(&mut self, g: GeneratorId) {
        self.generators.insert(g);
    }

    pub fn set_rule(&mut self, g: GeneratorId, h: GeneratorId, rhs: NCPolynomial) {
        self.generators.insert(g);
        self.generators.insert(h);
        self.rules.insert((g, h), rhs);
    }

    pub fn rule(&self, g: GeneratorId, h: GeneratorId) -> Option<&NCPolynomial> {
        self.rules.get(&(g, h))
    }

    /// Rules sorted by their left-hand side.
    pub fn rules(&self) -> Vec<((GeneratorId, GeneratorId), &NCPolynomial)> {
        let mut v: Vec<_> = self.rules.iter().map(|(k, r)| (*k, r)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn generators(&self) -> &BTreeSet<GeneratorId> {
        &self.generators
    }

    pub fn contains(&self, g: &GeneratorId) -> bool {
        self.generators.contains(g)
    }

    /// Overrides the default star (toggle of `conjugated`).
    pub fn set_star(&mut self, g: GeneratorId, image: GeneratorId) {
        self.star.insert(g, image);
        self.star.insert(image, g);
    }

    pub fn star_of(&self, g: GeneratorId) -> GeneratorId {
        self.star.get(&g).copied().unwrap_or_else(|| g.star())
    }

    pub fn set_weight(&mut self, g: GeneratorId, w: u32) {
        self.weights.insert(g, w);
    }

    pub fn weight(&self, g: &GeneratorId) -> u32 {
        self.weights.get(g).copied().unwrap_or(0)
    }

    pub fn word_weight(&self, w: &[GeneratorId]) -> u32 {
        w.iter().map(|g| self.weight(g)).sum()
    }

    pub fn has_calculus(&self) -> bool {
        self.generators.iter().any(|g| g.grade > 0)
    }

    /// Union of two systems. Rules of `other` win on conflicts.
    pub fn merged(&self, other: &RelationSystem, name: impl Into<String>) -> RelationSystem {
        let mut out = self.clone();
        out.name = name.into();
        out.generators.extend(other.generators.iter().copied());
        for (k, v) in &other.rules {
            out.rules.insert(*k, v.clone());
        }
        for (k, v) in &other.star {
            out.star.insert(*k, *v);
        }
        for (k, v) in &other.weights {
            out.weights.insert(*k, *v);
        }
        out
    }

    fn check_known(&self, p: &NCPolynomial) -> Result<(), AlgebraError> {
        for g in p.generators() {
            if !self.generators.contains(&g) {
                return Err(AlgebraError::UnknownGenerator(g.label()));
            }
        }
        Ok(())
    }

    fn pending_key(&self, m: &Monomial, c: &Coefficient) -> PendingKey {
        (m.degree(), self.word_weight(&m.word), m.word.clone(), c.hbar_power, c.mu_twice)
    }

    fn first_redex(&self, w: &[GeneratorId]) -> Option<(usize, &NCPolynomial)> {
        w.windows(2)
            .enumerate()
            .find_map(|(i, p)| self.rules.get(&(p[0], p[1])).map(|r| (i, r)))
    }

    pub fn is_normal(&self, w: &[GeneratorId]) -> bool {
        self.first_redex(w).is_none()
    }

    /// Reduces `p` to its unique normal form.
    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.check_known(p)?;
        let mut pending: BTreeMap<PendingKey, Complex64> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<PendingKey, Complex64>, key: PendingKey, v: Complex64| {
            let e = pending.entry(key.clone()).or_insert(Complex64::new(0.0, 0.0));
            *e += v;
            if e.norm() <= crate::coefficient::COEFF_TOL {
                pending.remove(&key);
            }
        };
        for (m, c) in p.terms() {
            push(&mut pending, self.pending_key(m, &c), c.value);
        }
        let mut out = NCPolynomial::zero();
        let mut steps = 0usize;
        while let Some((key, value)) = pending.pop_last() {
            let (_, _, word, hbar, mu2) = key;
            let coeff = Coefficient::new(value, hbar, mu2);
            match self.first_redex(&word) {
                None => out.add_term(Monomial::new(word), coeff),
                Some((i, rhs)) => {
                    steps += 1;
                    if steps > STEP_BUDGET {
                        return Err(AlgebraError::NonTerminating { steps });
                    }
                    for (m, c) in rhs.terms() {
                        let mut w = Vec::with_capacity(word.len() + m.degree());
                        w.extend_from_slice(&word[..i]);
                        w.extend_from_slice(&m.word);
                        w.extend_from_slice(&word[i + 2..]);
                        let c2 = coeff * c;
                        let k = (w.len(), self.word_weight(&w), w, c2.hbar_power, c2.mu_twice);
                        push(&mut pending, k, c2.value);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form of the product.
    pub fn multiply(&self, a: &NCPolynomial, b: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.normal_form(&a.concat_mul(b))
    }

    /// Normal form of a product of several factors, reducing after each step.
    pub fn product(&self, factors: &[NCPolynomial]) -> Result<NCPolynomial, AlgebraError> {
        let mut acc = NCPolynomial::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// Reversed words, starred letters, conjugated coefficients; no reduction.
    pub fn adjoint_raw(&self, p: &NCPolynomial) -> NCPolynomial {
        NCPolynomial::from_terms(p.terms().map(|(m, c)| {
            let w: Vec<_> = m.word.iter().rev().map(|g| self.star_of(*g)).collect();
            (Monomial::new(w), c.conj())
        }))
    }

    pub fn adjoint(&self, p: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        self.check_known(p)?;
        self.normal_form(&self.adjoint_raw(p))
    }

    /// Exterior derivative via the graded Leibniz rule.
    pub fn differential(&self, p: &NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        if !self.has_calculus() {
            return Err(AlgebraError::MissingCalculus);
        }
        self.check_known(p)?;
        let mut out = NCPolynomial::zero();
        for (m, c) in p.terms() {
            let mut parity = 0u32;
            for (i, g) in m.word.iter().enumerate() {
                if g.grade == 0 {
                    let dg = g.d();
                    if !self.generators.contains(&dg) {
                        return Err(AlgebraError::UnknownGenerator(dg.label()));
                    }
                    let mut w = m.word.clone();
                    w[i] = dg;
                    let sign = if parity % 2 == 1 { -1.0 } else { 1.0 };
                    out.add_term(Monomial::new(w), c.scale(Complex64::new(sign, 0.0)));
                }
                parity += g.grade as u32;
            }
        }
        self.normal_form(&out)
    }

    /// Rules that do not lower the termination measure.
    pub fn check_termination(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for ((g, h), rhs) in self.rules() {
            let lhs = [g, h];
            let lkey = (2usize, self.word_weight(&lhs), lhs.to_vec());
            for (m, _) in rhs.terms() {
                let rkey = (m.degree(), self.word_weight(&m.word), m.word.clone());
                if rkey >= lkey {
                    bad.push(format!("{}{} -> {}", g, h, m.labels().join(" ")));
                }
            }
        }
        bad
    }

    /// Rules whose starred form does not hold in the quotient.
    pub fn check_star_closure(&self) -> Result<Vec<String>, AlgebraError> {
        let mut bad = Vec::new();
        for ((g, h), rhs) in self.rules() {
            let lhs = NCPolynomial::word(vec![g, h]);
            let diff = self.adjoint_raw(&lhs).sub(&self.adjoint_raw(rhs));
            if !self.normal_form(&diff)?.is_zero() {
                bad.push(format!("({}{})*", g, h));
            }
        }
        Ok(bad)
    }

    /// Resolves all overlaps `g h k` of two rules and reports the ones whose
    /// two reductions disagree. Restricted to `letters` when given.
    pub fn check_confluence(
        &self,
        letters: Option<&[GeneratorId]>,
    ) -> Result<Vec<String>, AlgebraError> {
        let gens: Vec<GeneratorId> = match letters {
            Some(l) => l.to_vec(),
            None => self.generators.iter().copied().collect(),
        };
        let mut bad = Vec::new();
        for &g in &gens {
            for &h in &gens {
                let Some(r1) = self.rules.get(&(g, h)) else { continue };
                for &k in &gens {
                    let Some(r2) = self.rules.get(&(h, k)) else { continue };
                    let left = r1.concat_mul(&NCPolynomial::generator(k));
                    let right = NCPolynomial::generator(g).concat_mul(r2);
                    let d = self.normal_form(&left)?.sub(&self.normal_form(&right)?);
                    if !d.is_zero() {
                        bad.push(format!("{} {} {}", g, h, k));
                    }
                }
            }
        }
        Ok(bad)
    }

    /// True when every rule is a signed transposition `g·h → ±h·g` (or `0` on
    /// a repeated odd letter).
    pub fn is_transposition_system(&self) -> bool {
        self.rules.iter().all(|((g, h), rhs)| {
            if g == h {
                return g.is_odd() && rhs.is_zero();
            }
            let expect = if g.is_odd() && h.is_odd() { -1.0 } else { 1.0 };
            let want = NCPolynomial::term(vec![*h, *g], Coefficient::real(expect));
            rhs.approx_eq(&want)
        })
    }
}

/// Normal form of `p` modulo `rel`.
pub fn normal_form(p: &NCPolynomial, rel: &RelationSystem) -> Result<NCPolynomial, AlgebraError> {
    rel.normal_form(p)
}

pub fn multiply(
    a: &NCPolynomial,
    b: &NCPolynomial,
    rel: &RelationSystem,
) -> Result<NCPolynomial, AlgebraError> {
    rel.multiply(a, b)
}

pub fn adjoint(p: &NCPolynomial, rel: &RelationSystem) -> Result<NCPolynomial, AlgebraError> {
    rel.adjoint(p)
}

pub fn differential(p: &NCPolynomial, rel: &RelationSystem) -> Result<NCPolynomial, AlgebraError> {
    rel.differential(p)
}

/// Reference reducer: rewrites one redex at a time, letting `pick` choose both
/// the term and the position. Independent of the measure-driven scheduler in
/// `normal_form`; used as an oracle.
pub fn reduce_by_choice<F>(
    p: &NCPolynomial,
    rel: &RelationSystem,
    mut pick: F,
) -> Result<NCPolynomial, AlgebraError>
where
    F: FnMut(usize) -> usize,
{
    let mut cur = p.clone();
    let mut steps = 0usize;
    loop {
        let reducible: Vec<(Monomial, Coefficient)> = cur
            .terms()
            .filter(|(m, _)| !rel.is_normal(&m.word))
            .map(|(m, c)| (m.clone(), c))
            .collect();
        if reducible.is_empty() {
            return Ok(cur);
        }
        steps += 1;
        if steps > STEP_BUDGET {
            return Err(AlgebraError::NonTerminating { steps });
        }
        let (m, c) = &reducible[pick(reducible.len())];
        let spots: Vec<usize> = m
            .word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| rel.rule(w[0], w[1]).is_some())
            .map(|(i, _)| i)
            .collect();
        let i = spots[pick(spots.len())];
        let rhs = rel.rule(m.word[i], m.word[i + 1]).unwrap();
        let mut next = cur.clone();
        next.add_term(m.clone(), c.scale(Complex64::new(-1.0, 0.0)));
        for (r, d) in rhs.terms() {
            let mut w = m.word[..i].to_vec();
            w.extend_from_slice(&r.word);
            w.extend_from_slice(&m.word[i + 2..]);
            next.add_term(Monomial::new(w), *c * d);
        }
        cur = next;
    }
}
