//! Truncated free algebras on graded generators: tensor algebras and graded
//! commutative (symmetric) algebras, with an optional differential extended
//! as a derivation, and a checker for the dg-algebra axioms.
//!
//! Elements are sparse combinations of normal-form words. A word is a list
//! of generator indices; in the graded commutative case normal words are
//! sorted and never repeat an odd generator. Only words of length at most
//! the truncation bound are kept.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::complexes::Complex;
use crate::filtvect::FiltObject;
use crate::linalg::{Matrix, Rational};

pub type Word = Vec<usize>;
/// Sparse linear combination of words with nonzero coefficients.
pub type Element = BTreeMap<Word, Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("generator {name}: differential term {term:?} has degree {found}, expected {expected}")]
    DifferentialDegree {
        name: String,
        term: Word,
        found: i64,
        expected: i64,
    },
    #[error("word {0:?} is not a basis word")]
    NotBasis(Word),
    #[error("differential of {word:?} leaves the chosen words through {term:?}")]
    NotClosed { word: Word, term: Word },
    #[error("expected {expected} differentials, got {found}")]
    Count { expected: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
    pub weight: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: i64, weight: i64) -> Generator {
        Generator {
            name: name.into(),
            degree,
            weight,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Tensor,
    GradedCommutative,
}

pub fn koszul_sign(p: i64, q: i64) -> i64 {
    if (p * q).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn add_term(x: &mut Element, word: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    match x.entry(word) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn add_scaled(x: &mut Element, y: &Element, c: &Rational) {
    for (w, v) in y {
        add_term(x, w.clone(), v * c);
    }
}

pub fn single(word: Word) -> Element {
    BTreeMap::from([(word, Rational::one())])
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    generators: Vec<Generator>,
    kind: AlgebraKind,
    bound: usize,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    differential: Vec<Element>,
    overrides: HashMap<(usize, usize), Element>,
}

impl GradedAlgebra {
    /// A free algebra of the given kind on `generators`, truncated at word
    /// length `bound`, with `differential[i]` the image of generator `i`.
    pub fn new(
        generators: Vec<Generator>,
        kind: AlgebraKind,
        bound: usize,
        differential: Vec<Element>,
    ) -> Result<GradedAlgebra, GradedError> {
        if differential.len() != generators.len() {
            return Err(GradedError::Count {
                expected: generators.len(),
                found: differential.len(),
            });
        }
        let mut alg = GradedAlgebra {
            generators,
            kind,
            bound,
            basis: Vec::new(),
            index: HashMap::new(),
            differential: Vec::new(),
            overrides: HashMap::new(),
        };
        let mut normalized = Vec::new();
        for (i, dg) in differential.iter().enumerate() {
            let expected = alg.generators[i].degree + 1;
            let mut out = Element::new();
            for (w, c) in dg {
                let found = alg.word_degree(w);
                if found != expected {
                    return Err(GradedError::DifferentialDegree {
                        name: alg.generators[i].name.clone(),
                        term: w.clone(),
                        found,
                        expected,
                    });
                }
                if let Some((s, nw)) = alg.normalize(w) {
                    add_term(&mut out, nw, c * Rational::from_integer(s.into()));
                }
            }
            normalized.push(out);
        }
        alg.differential = normalized;
        alg.basis = alg.enumerate_basis();
        alg.index = alg.basis.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(alg)
    }

    pub fn free(generators: Vec<Generator>, kind: AlgebraKind, bound: usize) -> GradedAlgebra {
        let zero = vec![Element::new(); generators.len()];
        GradedAlgebra::new(generators, kind, bound, zero).expect("zero differential is valid")
    }

    fn enumerate_basis(&self) -> Vec<Word> {
        let n = self.generators.len();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..self.bound {
            let mut next = Vec::new();
            for w in &layer {
                let start = match (self.kind, w.last()) {
                    (AlgebraKind::Tensor, _) | (_, None) => 0,
                    (AlgebraKind::GradedCommutative, Some(&l)) => {
                        if self.generators[l].is_odd() {
                            l + 1
                        } else {
                            l
                        }
                    }
                };
                for g in start..n {
                    let mut v = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn generator_differential(&self, i: usize) -> &Element {
        &self.differential[i]
    }

    pub fn has_differential(&self) -> bool {
        self.differential.iter().any(|d| !d.is_empty())
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&g| self.generators[g].degree).sum()
    }

    pub fn word_weight(&self, w: &[usize]) -> i64 {
        w.iter().map(|&g| self.generators[g].weight).sum()
    }

    pub fn element_degree(&self, x: &Element) -> Option<i64> {
        let mut degrees = x.keys().map(|w| self.word_degree(w));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Normal form of a word up to sign, or `None` when it vanishes.
    pub fn normalize(&self, w: &[usize]) -> Option<(i64, Word)> {
        let mut v = w.to_vec();
        if self.kind == AlgebraKind::Tensor {
            return Some((1, v));
        }
        let mut sign = 1;
        // insertion sort by adjacent transpositions, tracking Koszul signs
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                sign *= koszul_sign(self.generators[v[j - 1]].degree, self.generators[v[j]].degree);
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1] && self.generators[p[0]].is_odd()) {
            return None;
        }
        Some((sign, v))
    }

    /// Product of two basis words, or `None` when it exceeds the truncation.
    pub fn mul_words(&self, a: &[usize], b: &[usize]) -> Option<Element> {
        if a.len() + b.len() > self.bound {
            return None;
        }
        if let (Some(i), Some(j)) = (self.index_of(a), self.index_of(b)) {
            if let Some(x) = self.overrides.get(&(i, j)) {
                return Some(x.clone());
            }
        }
        let mut w = a.to_vec();
        w.extend_from_slice(b);
        Some(match self.normalize(&w) {
            Some((s, nw)) => BTreeMap::from([(nw, Rational::from_integer(s.into()))]),
            None => Element::new(),
        })
    }

    /// Product of elements; terms beyond the truncation are dropped.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (a, c) in x {
            for (b, e) in y {
                if let Some(p) = self.mul_words(a, b) {
                    add_scaled(&mut out, &p, &(c * e));
                }
            }
        }
        out
    }

    /// Replace the stored product of two basis words.
    pub fn set_product(&mut self, a: &[usize], b: &[usize], value: Element) -> Result<(), GradedError> {
        let i = self.index_of(a).ok_or_else(|| GradedError::NotBasis(a.to_vec()))?;
        let j = self.index_of(b).ok_or_else(|| GradedError::NotBasis(b.to_vec()))?;
        self.overrides.insert((i, j), value);
        Ok(())
    }

    /// The differential extended as a derivation with Koszul signs; terms
    /// beyond the truncation are dropped.
    pub fn d_word(&self, w: &[usize]) -> Element {
        let mut out = Element::new();
        let mut sign_degree = 0;
        for (pos, &g) in w.iter().enumerate() {
            let sign = Rational::from_integer(koszul_sign(sign_degree, 1).into());
            for (t, c) in &self.differential[g] {
                let mut v = w[..pos].to_vec();
                v.extend_from_slice(t);
                v.extend_from_slice(&w[pos + 1..]);
                if v.len() > self.bound {
                    continue;
                }
                if let Some((s, nw)) = self.normalize(&v) {
                    add_term(&mut out, nw, c * &sign * Rational::from_integer(s.into()));
                }
            }
            sign_degree += self.generators[g].degree;
        }
        out
    }

    pub fn d(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for (w, c) in x {
            add_scaled(&mut out, &self.d_word(w), c);
        }
        out
    }

    /// How much the differential can lengthen a word.
    pub fn differential_growth(&self) -> usize {
        self.differential
            .iter()
            .flat_map(|d| d.keys().map(|w| w.len()))
            .max()
            .map_or(0, |l| l.saturating_sub(1))
    }

    pub fn dims_by_length(&self) -> Vec<usize> {
        let mut out = vec![0; self.bound + 1];
        for w in &self.basis {
            out[w.len()] += 1;
        }
        out
    }

    /// Basis counts per `(degree, weight)`.
    pub fn graded_dims(&self) -> BTreeMap<(i64, i64), usize> {
        let mut out = BTreeMap::new();
        for w in &self.basis {
            *out.entry((self.word_degree(w), self.word_weight(w))).or_insert(0) += 1;
        }
        out
    }

    /// The complex spanned by `words`, graded by word degree, filtered by
    /// word weight. Fails if the differential leaves the span.
    pub fn complex_on(&self, words: &[Word]) -> Result<Complex, GradedError> {
        let mut by_degree: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
        for w in words {
            by_degree.entry(self.word_degree(w)).or_default().push(w.clone());
        }
        let positions: HashMap<&Word, usize> = by_degree
            .values()
            .flat_map(|ws| ws.iter().enumerate().map(|(k, w)| (w, k)))
            .collect();
        let mut objects = BTreeMap::new();
        let mut differentials = BTreeMap::new();
        for (&n, ws) in &by_degree {
            objects.insert(n, FiltObject::new(ws.iter().map(|w| self.word_weight(w)).collect()));
            let rows = by_degree.get(&(n + 1)).map_or(0, |v| v.len());
            let mut m = Matrix::zeros(rows, ws.len());
            for (j, w) in ws.iter().enumerate() {
                for (t, c) in self.d_word(w) {
                    match (positions.get(&t), by_degree.contains_key(&(n + 1))) {
                        (Some(&i), true) => m.set(i, j, c),
                        _ => {
                            return Err(GradedError::NotClosed {
                                word: w.clone(),
                                term: t,
                            })
                        }
                    }
                }
            }
            if rows > 0 {
                differentials.insert(n, m);
            }
        }
        Ok(Complex::new(objects, differentials).expect("derivation squares to zero on a closed span"))
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&g| self.generators[g].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(w, c)| format!("({})·{}", crate::linalg::format_rational(c), self.format_word(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn generators_of(m: &Complex, prefix: &str) -> (Vec<Generator>, Vec<(i64, usize)>) {
    let mut gens = Vec::new();
    let mut slots = Vec::new();
    for n in m.support() {
        for (j, &w) in m.object(n).weights().iter().enumerate() {
            gens.push(Generator::new(format!("{prefix}{}", gens.len()), n, w));
            slots.push((n, j));
        }
    }
    (gens, slots)
}

fn free_on_complex(m: &Complex, kind: AlgebraKind, bound: usize) -> GradedAlgebra {
    let (gens, slots) = generators_of(m, "v");
    let position: HashMap<(i64, usize), usize> = slots.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let differential = slots
        .iter()
        .map(|&(n, j)| {
            let d = m.differential_matrix(n);
            let mut out = Element::new();
            for i in 0..d.rows() {
                add_term(&mut out, vec![position[&(n + 1, i)]], d.get(i, j).clone());
            }
            out
        })
        .collect();
    GradedAlgebra::new(gens, kind, bound, differential).expect("complex differential raises degree by one")
}

/// `T(M)` truncated at word length `bound`.
pub fn tensor_algebra(m: &Complex, bound: usize) -> GradedAlgebra {
    free_on_complex(m, AlgebraKind::Tensor, bound)
}

/// `Sym(M)` truncated at polynomial degree `bound`.
pub fn symmetric_algebra(m: &Complex, bound: usize) -> GradedAlgebra {
    free_on_complex(m, AlgebraKind::GradedCommutative, bound)
}

/// `⋀M = Sym(M[1])` truncated at word length `bound`.
pub fn exterior_algebra(m: &Complex, bound: usize) -> GradedAlgebra {
    symmetric_algebra(&m.shift(1), bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DgaAxiom {
    Associativity,
    Unit,
    Commutativity,
    SquareZero,
    Leibniz,
}

impl fmt::Display for DgaAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DgaAxiom::Associativity => "associativity",
            DgaAxiom::Unit => "unit",
            DgaAxiom::Commutativity => "graded commutativity",
            DgaAxiom::SquareZero => "d^2 = 0",
            DgaAxiom::Leibniz => "Leibniz rule",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgaViolation {
    pub axiom: DgaAxiom,
    pub words: Vec<Word>,
    /// The nonzero defect.
    pub defect: Element,
}

#[derive(Clone, Debug, Default)]
pub struct DgaReport {
    pub checked: BTreeMap<DgaAxiom, usize>,
    pub violations: Vec<DgaViolation>,
}

impl DgaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, axiom: DgaAxiom, words: Vec<Word>, defect: Element) {
        *self.checked.entry(axiom).or_insert(0) += 1;
        if !defect.is_empty() {
            self.violations.push(DgaViolation { axiom, words, defect });
        }
    }
}

fn difference(a: &Element, b: &Element) -> Element {
    let mut out = a.clone();
    add_scaled(&mut out, b, &-Rational::one());
    out
}

/// Checks the dg-algebra axioms on basis words wherever every product and
/// differential involved stays inside the truncation.
pub fn check_dga_axioms(a: &GradedAlgebra) -> DgaReport {
    let mut report = DgaReport::default();
    let n = a.bound();
    let g = a.differential_growth();
    let basis = a.basis();
    let one = single(Vec::new());
    for x in basis {
        let ex = single(x.clone());
        report.record(DgaAxiom::Unit, vec![x.clone()], difference(&a.mul(&one, &ex), &ex));
        report.record(DgaAxiom::Unit, vec![x.clone()], difference(&a.mul(&ex, &one), &ex));
        if x.len() + 2 * g <= n {
            report.record(DgaAxiom::SquareZero, vec![x.clone()], a.d(&a.d_word(x)));
        }
    }
    for x in basis {
        for y in basis {
            if x.len() + y.len() > n {
                continue;
            }
            let (ex, ey) = (single(x.clone()), single(y.clone()));
            let xy = a.mul(&ex, &ey);
            if a.kind() == AlgebraKind::GradedCommutative {
                let s = Rational::from_integer(koszul_sign(a.word_degree(x), a.word_degree(y)).into());
                let mut yx = a.mul(&ey, &ex);
                yx.values_mut().for_each(|v| *v *= &s);
                report.record(
                    DgaAxiom::Commutativity,
                    vec![x.clone(), y.clone()],
                    difference(&xy, &yx),
                );
            }
            if x.len() + y.len() + g <= n {
                let mut rhs = a.mul(&a.d_word(x), &ey);
                let s = Rational::from_integer(koszul_sign(a.word_degree(x), 1).into());
                add_scaled(&mut rhs, &a.mul(&ex, &a.d_word(y)), &s);
                report.record(
                    DgaAxiom::Leibniz,
                    vec![x.clone(), y.clone()],
                    difference(&a.d(&xy), &rhs),
                );
            }
            for z in basis {
                if x.len() + y.len() + z.len() > n {
                    continue;
                }
                let ez = single(z.clone());
                let left = a.mul(&xy, &ez);
                let right = a.mul(&ex, &a.mul(&ey, &ez));
                report.record(
                    DgaAxiom::Associativity,
                    vec![x.clone(), y.clone(), z.clone()],
                    difference(&left, &right),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtvect::FiltMorphism;
    use crate::linalg::rat;

    fn line(degree: i64) -> Complex {
        Complex::concentrated(FiltObject::unit(), degree)
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn tensor_algebra_examples() {
        let m = line(0);
        assert_eq!(tensor_algebra(&m, 0).dim(), 1);
        assert_eq!(tensor_algebra(&m, 3).dims_by_length(), vec![1, 1, 1, 1]);
        let m3 = Complex::concentrated(FiltObject::uniform(3, 0), 0);
        assert_eq!(tensor_algebra(&m3, 4).dims_by_length(), vec![1, 3, 9, 27, 81]);
        assert!(check_dga_axioms(&tensor_algebra(&m3, 3)).passed());
    }

    #[test]
    fn symmetric_and_exterior_examples() {
        let s = symmetric_algebra(&line(0), 3);
        let words: Vec<String> = s.basis().iter().map(|w| s.format_word(w)).collect();
        assert_eq!(words, vec!["1", "v0", "v0*v0", "v0*v0*v0"]);

        for r in 1..=4 {
            let m = Complex::concentrated(FiltObject::uniform(r, 0), 0);
            let e = exterior_algebra(&m, r + 2);
            assert_eq!(e.dim(), 1 << r);
            let dims = e.dims_by_length();
            assert_eq!(dims[r], 1);
            assert!(dims[r + 1..].iter().all(|&d| d == 0));
            assert!(e.basis().iter().all(|w| e.word_degree(w) == -(w.len() as i64)));
            for (k, d) in dims.iter().enumerate() {
                assert_eq!(*d, binom(r, k));
            }
        }
    }

    #[test]
    fn odd_square_vanishes() {
        let a = exterior_algebra(&line(0), 3);
        let theta = single(vec![0]);
        assert!(a.mul(&theta, &theta).is_empty());
        assert!(check_dga_axioms(&a).passed());
    }

    #[test]
    fn sign_of_odd_exchange() {
        let m = Complex::concentrated(FiltObject::uniform(2, 0), 0);
        let a = exterior_algebra(&m, 2);
        let p = a.mul(&single(vec![1]), &single(vec![0]));
        assert_eq!(p, BTreeMap::from([(vec![0, 1], rat(-1))]));
    }

    #[test]
    fn differential_extends_as_derivation() {
        // Sym of the disk ℚ --id--> ℚ in degrees -1, 0: d(u) = x with u odd
        let disk = Complex::two_term(&FiltMorphism::identity(&FiltObject::unit()), -1);
        let a = symmetric_algebra(&disk, 4);
        let r = check_dga_axioms(&a);
        assert!(r.passed(), "{:?}", r.violations);
        // d(u x^2) = x^3
        let u_x2 = vec![0, 1, 1];
        assert_eq!(a.d_word(&u_x2), BTreeMap::from([(vec![1, 1, 1], rat(1))]));
        let t = tensor_algebra(&disk, 3);
        assert!(check_dga_axioms(&t).passed());
    }

    #[test]
    fn corrupted_table_is_located() {
        let mut a = symmetric_algebra(&Complex::concentrated(FiltObject::uniform(2, 0), 0), 3);
        a.set_product(&[0], &[1], single(vec![0, 0])).unwrap();
        let r = check_dga_axioms(&a);
        assert!(!r.passed());
        assert!(r
            .violations
            .iter()
            .any(|v| v.axiom == DgaAxiom::Commutativity && v.words == vec![vec![0], vec![1]]));
    }

    #[test]
    fn sym_of_sum_splits() {
        let m = Complex::from_sequence(
            -1,
            vec![FiltObject::new(vec![0, 1]), FiltObject::new(vec![1])],
            vec![Matrix::zeros(1, 2)],
        )
        .unwrap();
        let n = Complex::concentrated(FiltObject::new(vec![2]), 0);
        let bound = 4;
        let whole = symmetric_algebra(&m.direct_sum(&n), bound);
        let (sm, sn) = (symmetric_algebra(&m, bound), symmetric_algebra(&n, bound));
        let mut product: BTreeMap<(usize, i64, i64), usize> = BTreeMap::new();
        for a in sm.basis() {
            for b in sn.basis() {
                if a.len() + b.len() <= bound {
                    let key = (
                        a.len() + b.len(),
                        sm.word_degree(a) + sn.word_degree(b),
                        sm.word_weight(a) + sn.word_weight(b),
                    );
                    *product.entry(key).or_insert(0) += 1;
                }
            }
        }
        let mut direct: BTreeMap<(usize, i64, i64), usize> = BTreeMap::new();
        for w in whole.basis() {
            *direct
                .entry((w.len(), whole.word_degree(w), whole.word_weight(w)))
                .or_insert(0) += 1;
        }
        assert_eq!(product, direct);
    }

    #[test]
    fn shifted_sym_matches_exterior_counts() {
        let g = Complex::concentrated(FiltObject::uniform(3, 0), 0);
        let e = exterior_algebra(&g, 3);
        let s = symmetric_algebra(&g.shift(1), 3);
        assert_eq!(e.graded_dims(), s.graded_dims());
    }
}
