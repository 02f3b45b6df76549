//! Noncommutative polynomials over formal-parameter coefficients.

use crate::coefficient::{Coefficient, COEFF_TOL};
use crate::generator::GeneratorId;
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

/// A word in the generators. Ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub word: Vec<GeneratorId>,
}

impl Monomial {
    pub fn new(word: Vec<GeneratorId>) -> Self {
        Monomial { word }
    }

    pub fn unit() -> Self {
        Monomial { word: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn total_grade(&self) -> u32 {
        self.word.iter().map(|g| g.grade as u32).sum()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut word = Vec::with_capacity(self.word.len() + other.word.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        Monomial { word }
    }

    pub fn labels(&self) -> Vec<String> {
        self.word.iter().map(|g| g.label()).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Storage key: a monomial together with its formal-parameter exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub monomial: Monomial,
    pub hbar: u32,
    pub mu_twice: i32,
}

/// Finite sum of `Coefficient · Monomial`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NCPolynomial {
    terms: BTreeMap<TermKey, Complex64>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    pub fn constant(c: impl Into<Coefficient>) -> Self {
        Self::term(Vec::new(), c)
    }

    pub fn generator(g: GeneratorId) -> Self {
        Self::term(vec![g], Coefficient::one())
    }

    pub fn word(word: Vec<GeneratorId>) -> Self {
        Self::term(word, Coefficient::one())
    }

    pub fn term(word: Vec<GeneratorId>, c: impl Into<Coefficient>) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(word), c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        let key = TermKey { monomial: m, hbar: c.hbar_power, mu_twice: c.mu_twice };
        let entry = self.terms.entry(key.clone()).or_insert(Complex64::new(0.0, 0.0));
        *entry += c.value;
        if entry.norm() <= COEFF_TOL {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Coefficient)> + '_ {
        self.terms
            .iter()
            .map(|(k, v)| (&k.monomial, Coefficient::new(*v, k.hbar, k.mu_twice)))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coefficient)> {
        self.terms
            .into_iter()
            .map(|(k, v)| (k.monomial, Coefficient::new(v, k.hbar, k.mu_twice)))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    /// Coefficient of a word at given parameter exponents.
    pub fn coefficient(&self, word: &[GeneratorId], hbar: u32, mu_twice: i32) -> Complex64 {
        let key = TermKey { monomial: Monomial::new(word.to_vec()), hbar, mu_twice };
        self.terms.get(&key).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// All coefficients attached to a word, one per parameter exponent.
    pub fn coefficients_of(&self, word: &[GeneratorId]) -> Vec<Coefficient> {
        self.terms()
            .filter(|(m, _)| m.word == word)
            .map(|(_, c)| c)
            .collect()
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &NCPolynomial) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.scale(Complex64::new(-1.0, 0.0)));
        }
        out
    }

    pub fn neg(&self) -> NCPolynomial {
        self.scale(Coefficient::real(-1.0))
    }

    pub fn scale(&self, c: impl Into<Coefficient>) -> NCPolynomial {
        let c = c.into();
        Self::from_terms(self.terms().map(|(m, d)| (m.clone(), d * c)))
    }

    /// Free (unreduced) product: concatenation of words.
    pub fn concat_mul(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|k| k.monomial.degree()).max().unwrap_or(0)
    }

    pub fn generators(&self) -> BTreeSet<GeneratorId> {
        self.terms.keys().flat_map(|k| k.monomial.word.iter().copied()).collect()
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.terms.values().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn approx_eq(&self, other: &NCPolynomial) -> bool {
        self.sub(other).is_zero()
    }

    /// Replaces the formal ħ and μ^{1/2} by numbers; all exponents become zero.
    pub fn specialize(&self, hbar: Complex64, half_mu: Complex64) -> NCPolynomial {
        Self::from_terms(
            self.terms()
                .map(|(m, c)| (m.clone(), Coefficient::scalar(c.evaluate(hbar, half_mu)))),
        )
    }

    /// Conjugates coefficients only.
    pub fn conj_coefficients(&self) -> NCPolynomial {
        Self::from_terms(self.terms().map(|(m, c)| (m.clone(), c.conj())))
    }

    /// Algebra map defined on letters; the image of a word is the product of
    /// letter images in order.
    pub fn substitute<F>(&self, mut f: F) -> NCPolynomial
    where
        F: FnMut(GeneratorId) -> NCPolynomial,
    {
        let mut cache: BTreeMap<GeneratorId, NCPolynomial> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let mut acc = NCPolynomial::constant(c);
            for g in &m.word {
                let img = cache.entry(*g).or_insert_with(|| f(*g)).clone();
                acc = acc.concat_mul(&img);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Anti-multiplicative, antilinear extension of a letter map: coefficients
    /// are conjugated and words reversed.
    pub fn substitute_antilinear_anti<F>(&self, mut f: F) -> NCPolynomial
    where
        F: FnMut(GeneratorId) -> NCPolynomial,
    {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let mut acc = NCPolynomial::constant(c.conj());
            for g in m.word.iter().rev() {
                acc = acc.concat_mul(&f(*g));
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Commutative normal form with graded signs; repeated odd letters vanish.
    pub fn graded_sort(&self) -> NCPolynomial {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if let Some((sign, word)) = graded_sort_word(&m.word) {
                out.add_term(Monomial::new(word), c.scale(Complex64::new(sign, 0.0)));
            }
        }
        out
    }

    /// Splits off terms whose word satisfies `pred`.
    pub fn filter<P: Fn(&Monomial) -> bool>(&self, pred: P) -> NCPolynomial {
        Self::from_terms(self.terms().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c)))
    }

    /// Groups terms by the prefix of letters satisfying `is_left`, returning the
    /// remainder polynomials keyed by that prefix. Words are assumed to be
    /// ordered so that matching letters come first.
    pub fn split_prefix<P: Fn(&GeneratorId) -> bool>(
        &self,
        is_left: P,
    ) -> BTreeMap<Vec<GeneratorId>, NCPolynomial> {
        let mut out: BTreeMap<Vec<GeneratorId>, NCPolynomial> = BTreeMap::new();
        for (m, c) in self.terms() {
            let cut = m.word.iter().position(|g| !is_left(g)).unwrap_or(m.word.len());
            let (head, tail) = m.word.split_at(cut);
            out.entry(head.to_vec())
                .or_default()
                .add_term(Monomial::new(tail.to_vec()), c);
        }
        out
    }
}

/// Sorts a word as in a graded-commutative algebra. Returns `None` when an odd
/// letter repeats.
pub fn graded_sort_word(word: &[GeneratorId]) -> Option<(f64, Vec<GeneratorId>)> {
    let mut w = word.to_vec();
    let mut sign = 1.0;
    // insertion sort tracking odd transpositions
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            if w[j - 1].is_odd() && w[j].is_odd() {
                sign = -sign;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    for pair in w.windows(2) {
        if pair[0] == pair[1] && pair[0].is_odd() {
            return None;
        }
    }
    Some((sign, w))
}

impl From<GeneratorId> for NCPolynomial {
    fn from(g: GeneratorId) -> Self {
        NCPolynomial::generator(g)
    }
}
