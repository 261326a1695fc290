//! Differential graded Lie algebras over ℚ given by structure constants,
//! their axioms, the cone `g ⊕ g[1]`, truncated universal enveloping
//! algebras with a PBW check, Chevalley–Eilenberg resolutions and the
//! Chevalley–Eilenberg cochains computing derived quotients.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::complexes::{self, Complex};
use crate::filtvect::FiltObject;
use crate::graded::{self, add_scaled, add_term, koszul_sign, AlgebraKind, Element, Generator, GradedAlgebra, Word};
use crate::linalg::{self, frac, rat, Matrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket [{i},{j}] has a component on {k} of the wrong degree or weight")]
    InhomogeneousBracket { i: usize, j: usize, k: usize },
    #[error("differential of {j} has a component on {i} of the wrong degree or weight")]
    InhomogeneousDifferential { j: usize, i: usize },
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("Lie axioms fail: {0}")]
    Axioms(LieViolation),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("action of {i} on generator {a} is not homogeneous of the right weight")]
    ActionInhomogeneous { i: usize, a: usize },
    #[error("action is not a representation on the pair ({i}, {j}) at generator {a}")]
    NotRepresentation { i: usize, j: usize, a: usize },
}

/// One bracket `[e_i, e_j] = Σ_k coeffs[k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgLie {
    names: Vec<String>,
    degrees: Vec<i64>,
    weights: Vec<i64>,
    /// Column `j` is `d e_j`.
    differential: Matrix,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

pub type Vector = Vec<Rational>;

impl DgLie {
    /// Builds a dg-Lie algebra and rejects it if any axiom fails. Brackets
    /// `[e_j, e_i]` not given explicitly are filled in by antisymmetry.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<i64>,
        weights: Vec<i64>,
        differential: Matrix,
        brackets: Vec<BracketSpec>,
    ) -> Result<DgLie, LieError> {
        let g = DgLie::new_deferred(names, degrees, weights, differential, brackets)?;
        let report = check_lie_axioms(&g);
        match report.violations.into_iter().next() {
            Some(v) => Err(LieError::Axioms(v)),
            None => Ok(g),
        }
    }

    /// As [`DgLie::new`] but only checks shapes and homogeneity, leaving the
    /// axioms to [`check_lie_axioms`].
    pub fn new_deferred(
        names: Vec<String>,
        degrees: Vec<i64>,
        weights: Vec<i64>,
        differential: Matrix,
        brackets: Vec<BracketSpec>,
    ) -> Result<DgLie, LieError> {
        let n = degrees.len();
        if names.len() != n || weights.len() != n {
            return Err(LieError::Shape("names, degrees and weights differ in length".into()));
        }
        if differential.shape() != (n, n) {
            return Err(LieError::Shape(format!("differential must be {n}x{n}")));
        }
        for j in 0..n {
            for i in 0..n {
                if !differential.get(i, j).is_zero() && (degrees[i] != degrees[j] + 1 || weights[i] != weights[j]) {
                    return Err(LieError::InhomogeneousDifferential { j, i });
                }
            }
        }
        let mut table = BTreeMap::new();
        for b in &brackets {
            if b.i >= n || b.j >= n || b.coeffs.len() != n {
                return Err(LieError::Shape(format!("bracket [{}, {}] is malformed", b.i, b.j)));
            }
            for (k, c) in b.coeffs.iter().enumerate() {
                if !c.is_zero()
                    && (degrees[k] != degrees[b.i] + degrees[b.j] || weights[k] != weights[b.i] + weights[b.j])
                {
                    return Err(LieError::InhomogeneousBracket { i: b.i, j: b.j, k });
                }
            }
            table.insert((b.i, b.j), b.coeffs.clone());
        }
        for b in &brackets {
            if b.i != b.j && !table.contains_key(&(b.j, b.i)) {
                let s = -Rational::from_integer(koszul_sign(degrees[b.i], degrees[b.j]).into());
                table.insert((b.j, b.i), b.coeffs.iter().map(|c| c * &s).collect());
            }
        }
        table.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        Ok(DgLie {
            names,
            degrees,
            weights,
            differential,
            brackets: table,
        })
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn differential(&self) -> &Matrix {
        &self.differential
    }

    pub fn has_differential(&self) -> bool {
        !self.differential.is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn bracket_specs(&self) -> Vec<BracketSpec> {
        self.brackets
            .iter()
            .map(|(&(i, j), c)| BracketSpec {
                i,
                j,
                coeffs: c.clone(),
            })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.brackets
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.dim()])
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(i, j), c) in &self.brackets {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let s = &x[i] * &y[j];
            for (o, ck) in out.iter_mut().zip(c) {
                *o += &s * ck;
            }
        }
        out
    }

    pub fn d(&self, x: &[Rational]) -> Vector {
        self.differential.apply(x)
    }

    /// The underlying complex, with the basis of each degree in index order.
    pub fn underlying_complex(&self) -> Complex {
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, &p) in self.degrees.iter().enumerate() {
            by_degree.entry(p).or_default().push(i);
        }
        let objects = by_degree
            .iter()
            .map(|(&p, idx)| (p, FiltObject::new(idx.iter().map(|&i| self.weights[i]).collect())))
            .collect();
        let mut differentials = BTreeMap::new();
        for (&p, src) in &by_degree {
            if let Some(tgt) = by_degree.get(&(p + 1)) {
                let mut m = Matrix::zeros(tgt.len(), src.len());
                for (r, &i) in tgt.iter().enumerate() {
                    for (c, &j) in src.iter().enumerate() {
                        m.set(r, c, self.differential.get(i, j).clone());
                    }
                }
                differentials.insert(p, m);
            }
        }
        Complex::new(objects, differentials).expect("a valid dg-Lie algebra has d² = 0")
    }

    /// Reorders the basis: new basis vector `k` is old basis vector `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> DgLie {
        let n = self.dim();
        assert_eq!(order.len(), n);
        let mut inverse = vec![0; n];
        for (k, &o) in order.iter().enumerate() {
            inverse[o] = k;
        }
        let relabel = |v: &[Rational]| -> Vector { order.iter().map(|&o| v[o].clone()).collect() };
        let mut d = Matrix::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                d.set(inverse[i], inverse[j], self.differential.get(i, j).clone());
            }
        }
        DgLie {
            names: order.iter().map(|&o| self.names[o].clone()).collect(),
            degrees: order.iter().map(|&o| self.degrees[o]).collect(),
            weights: order.iter().map(|&o| self.weights[o]).collect(),
            differential: d,
            brackets: self
                .brackets
                .iter()
                .map(|(&(i, j), c)| ((inverse[i], inverse[j]), relabel(c)))
                .collect(),
        }
    }

    /// Replaces one structure constant, for building negative controls.
    pub fn with_bracket_entry(mut self, i: usize, j: usize, k: usize, value: Rational) -> DgLie {
        let n = self.dim();
        self.brackets.entry((i, j)).or_insert_with(|| vec![Rational::zero(); n])[k] = value;
        self
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn spec(i: usize, j: usize, coeffs: &[i64]) -> BracketSpec {
    BracketSpec {
        i,
        j,
        coeffs: coeffs.iter().map(|&c| rat(c)).collect(),
    }
}

/// Abelian Lie algebra of dimension `n` in degree 0 with all weights 1.
pub fn abelian(n: usize) -> DgLie {
    DgLie::new(
        (0..n).map(|i| format!("x{i}")).collect(),
        vec![0; n],
        vec![1; n],
        Matrix::zeros(n, n),
        Vec::new(),
    )
    .expect("abelian Lie algebra")
}

/// `sl₂` with basis `h, e, f`, weights 0.
pub fn sl2() -> DgLie {
    DgLie::new(
        names(&["h", "e", "f"]),
        vec![0; 3],
        vec![0; 3],
        Matrix::zeros(3, 3),
        vec![spec(0, 1, &[0, 2, 0]), spec(0, 2, &[0, 0, -2]), spec(1, 2, &[1, 0, 0])],
    )
    .expect("sl2")
}

/// Heisenberg algebra `[x, y] = z` with weights 1, 1, 2.
pub fn heisenberg() -> DgLie {
    DgLie::new(
        names(&["x", "y", "z"]),
        vec![0; 3],
        vec![1, 1, 2],
        Matrix::zeros(3, 3),
        vec![spec(0, 1, &[0, 0, 1])],
    )
    .expect("heisenberg")
}

/// Two-dimensional solvable algebra `[x, y] = y`, weights 0 and 1.
pub fn solvable2() -> DgLie {
    DgLie::new(
        names(&["x", "y"]),
        vec![0; 2],
        vec![0, 1],
        Matrix::zeros(2, 2),
        vec![spec(0, 1, &[0, 1])],
    )
    .expect("solvable")
}

/// An odd generator `t` of degree -1 with `[t, t] = z` in degree -2.
pub fn odd_square() -> DgLie {
    DgLie::new(
        names(&["t", "z"]),
        vec![-1, -2],
        vec![1, 2],
        Matrix::zeros(2, 2),
        vec![spec(0, 0, &[0, 1])],
    )
    .expect("odd square")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieAxiom {
    Antisymmetry,
    Jacobi,
    Leibniz,
    SquareZero,
}

impl fmt::Display for LieAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieAxiom::Antisymmetry => "antisymmetry",
            LieAxiom::Jacobi => "Jacobi identity",
            LieAxiom::Leibniz => "Leibniz rule",
            LieAxiom::SquareZero => "d^2 = 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieViolation {
    pub axiom: LieAxiom,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
    pub defect: Vector,
}

impl fmt::Display for LieViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let defect: Vec<String> = self.defect.iter().map(linalg::format_rational).collect();
        write!(
            f,
            "{} fails on ({}) with defect [{}]",
            self.axiom,
            self.names.join(", "),
            defect.join(", ")
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct LieReport {
    pub checked: BTreeMap<LieAxiom, usize>,
    pub violations: Vec<LieViolation>,
}

impl LieReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sign(p: i64, q: i64) -> Rational {
    Rational::from_integer(koszul_sign(p, q).into())
}

fn axpy(out: &mut [Rational], c: &Rational, x: &[Rational]) {
    for (o, v) in out.iter_mut().zip(x) {
        *o += c * v;
    }
}

/// Checks antisymmetry and `d² = 0` on basis elements and pairs, the Jacobi
/// identity `(-1)^{pr}[x,[y,z]] + (-1)^{pq}[y,[z,x]] + (-1)^{qr}[z,[x,y]] = 0`
/// on basis triples, and `d[x,y] = [dx,y] + (-1)^{|x|}[x,dy]` on pairs.
pub fn check_lie_axioms(g: &DgLie) -> LieReport {
    let n = g.dim();
    let mut report = LieReport::default();
    let mut record = |axiom: LieAxiom, indices: Vec<usize>, defect: Vector| {
        *report.checked.entry(axiom).or_insert(0) += 1;
        if defect.iter().any(|c| !c.is_zero()) {
            report.violations.push(LieViolation {
                axiom,
                names: indices.iter().map(|&i| g.names[i].clone()).collect(),
                indices,
                defect,
            });
        }
    };
    let deg = &g.degrees;
    let e: Vec<Vector> = (0..n).map(|i| g.basis_vector(i)).collect();
    for (i, ei) in e.iter().enumerate() {
        record(LieAxiom::SquareZero, vec![i], g.d(&g.d(ei)));
    }
    for i in 0..n {
        for j in 0..n {
            let mut defect = g.bracket(&e[i], &e[j]);
            axpy(&mut defect, &sign(deg[i], deg[j]), &g.bracket(&e[j], &e[i]));
            record(LieAxiom::Antisymmetry, vec![i, j], defect);

            let mut defect = g.d(&g.bracket(&e[i], &e[j]));
            axpy(&mut defect, &-Rational::one(), &g.bracket(&g.d(&e[i]), &e[j]));
            axpy(&mut defect, &-sign(deg[i], 1), &g.bracket(&e[i], &g.d(&e[j])));
            record(LieAxiom::Leibniz, vec![i, j], defect);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (p, q, r) = (deg[i], deg[j], deg[k]);
                let mut defect = vec![Rational::zero(); n];
                axpy(&mut defect, &sign(p, r), &g.bracket(&e[i], &g.bracket(&e[j], &e[k])));
                axpy(&mut defect, &sign(p, q), &g.bracket(&e[j], &g.bracket(&e[k], &e[i])));
                axpy(&mut defect, &sign(q, r), &g.bracket(&e[k], &g.bracket(&e[i], &e[j])));
                record(LieAxiom::Jacobi, vec![i, j, k], defect);
            }
        }
    }
    report
}

/// The cone `g ⊕ g[1]`: basis `x_i = e_i` followed by `εe_i` of degree
/// `|e_i| - 1`, with `d(x + εy) = dx + y - ε dy` and
/// `[x + εy, x' + εy'] = [x, x'] + ε([y, x'] + (-1)^{|x|}[x, y'])`.
pub fn cone_lie(g: &DgLie) -> DgLie {
    let n = g.dim();
    let mut names: Vec<String> = g.names.clone();
    names.extend(g.names.iter().map(|s| format!("ε{s}")));
    let mut degrees = g.degrees.clone();
    degrees.extend(g.degrees.iter().map(|p| p - 1));
    let mut weights = g.weights.clone();
    weights.extend(g.weights.iter().copied());
    let mut d = Matrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        for i in 0..n {
            let c = g.differential.get(i, j);
            d.set(i, j, c.clone());
            d.set(n + i, n + j, -c);
        }
        d.set(j, n + j, Rational::one());
    }
    let mut brackets = Vec::new();
    for (&(i, j), c) in &g.brackets {
        let mut top = vec![Rational::zero(); 2 * n];
        let mut shifted = vec![Rational::zero(); 2 * n];
        for (k, v) in c.iter().enumerate() {
            top[k] = v.clone();
            shifted[n + k] = v.clone();
        }
        brackets.push(BracketSpec { i, j, coeffs: top });
        brackets.push(BracketSpec {
            i: n + i,
            j,
            coeffs: shifted.clone(),
        });
        let s = sign(g.degrees[i], 1);
        brackets.push(BracketSpec {
            i,
            j: n + j,
            coeffs: shifted.iter().map(|v| v * &s).collect(),
        });
    }
    DgLie::new_deferred(names, degrees, weights, d, brackets).expect("cone is homogeneous")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Strategy {
    Leftmost,
    Rightmost,
}

/// The universal enveloping algebra presented by the rewriting system
/// `xy -> (-1)^{pq} yx + [x, y]` for `x > y` and `xx -> ½[x, x]` for odd `x`.
/// Normal words are weakly increasing and never repeat an odd generator.
pub struct Uea {
    lie: DgLie,
    bound: usize,
    memo: RefCell<HashMap<(Word, bool), Element>>,
}

impl Uea {
    pub fn new(lie: &DgLie, bound: usize) -> Uea {
        Uea {
            lie: lie.clone(),
            bound,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &DgLie {
        &self.lie
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn odd(&self, i: usize) -> bool {
        self.lie.degrees[i].rem_euclid(2) == 1
    }

    fn reducible_at(&self, w: &[usize], pos: usize) -> bool {
        w[pos] > w[pos + 1] || (w[pos] == w[pos + 1] && self.odd(w[pos]))
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        (0..w.len().saturating_sub(1)).all(|p| !self.reducible_at(w, p))
    }

    /// One rewriting step at position `pos`.
    fn reduce_at(&self, w: &[usize], pos: usize) -> Element {
        let (a, b) = (w[pos], w[pos + 1]);
        let mut out = Element::new();
        let splice = |k: usize| -> Word {
            let mut v = w[..pos].to_vec();
            v.push(k);
            v.extend_from_slice(&w[pos + 2..]);
            v
        };
        let br = self.lie.bracket_basis(a, b);
        if a == b {
            let half = frac(1, 2);
            for (k, c) in br.iter().enumerate() {
                add_term(&mut out, splice(k), c * &half);
            }
        } else {
            let mut swapped = w.to_vec();
            swapped.swap(pos, pos + 1);
            add_term(&mut out, swapped, sign(self.lie.degrees[a], self.lie.degrees[b]));
            for (k, c) in br.iter().enumerate() {
                add_term(&mut out, splice(k), c.clone());
            }
        }
        out
    }

    fn normal_form_with(&self, w: &[usize], strategy: Strategy) -> Element {
        let key = (w.to_vec(), strategy == Strategy::Leftmost);
        if let Some(x) = self.memo.borrow().get(&key) {
            return x.clone();
        }
        let positions: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&p| self.reducible_at(w, p))
            .collect();
        let pos = match strategy {
            Strategy::Leftmost => positions.first(),
            Strategy::Rightmost => positions.last(),
        };
        let out = match pos {
            None => graded::single(w.to_vec()),
            Some(&p) => {
                let mut acc = Element::new();
                for (v, c) in self.reduce_at(w, p) {
                    add_scaled(&mut acc, &self.normal_form_with(&v, strategy), &c);
                }
                acc
            }
        };
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn normal_form(&self, w: &[usize]) -> Element {
        self.normal_form_with(w, Strategy::Leftmost)
    }

    pub fn normalize(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for (w, c) in x {
            add_scaled(&mut out, &self.normal_form(w), c);
        }
        out
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::new();
        for (a, c) in x {
            for (b, e) in y {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_scaled(&mut out, &self.normal_form(&w), &(c * e));
            }
        }
        out
    }

    /// Normal words of length at most `max_len`, each accepted by `keep`
    /// which sees the word's total weight.
    pub fn normal_words(&self, max_len: usize, max_weight: Option<i64>) -> Vec<Word> {
        let n = self.lie.dim();
        let mut out = Vec::new();
        let mut stack: Vec<(Word, i64)> = vec![(Vec::new(), 0)];
        while let Some((w, wt)) = stack.pop() {
            out.push(w.clone());
            if w.len() == max_len {
                continue;
            }
            let start = match w.last() {
                None => 0,
                Some(&l) if self.odd(l) => l + 1,
                Some(&l) => l,
            };
            for g in start..n {
                let nw = wt + self.lie.weights[g];
                if max_weight.is_some_and(|m| nw > m) {
                    continue;
                }
                let mut v = w.clone();
                v.push(g);
                stack.push((v, nw));
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&g| self.lie.degrees[g]).sum()
    }

    pub fn word_weight(&self, w: &[usize]) -> i64 {
        w.iter().map(|&g| self.lie.weights[g]).sum()
    }

    /// The differential of the Lie algebra extended to `U(g)` as a
    /// derivation, in normal form.
    pub fn differential(&self, w: &[usize]) -> Element {
        let mut out = Element::new();
        let mut before = 0;
        for (pos, &g) in w.iter().enumerate() {
            let s = sign(before, 1);
            for k in 0..self.lie.dim() {
                let c = self.lie.differential.get(k, g);
                if c.is_zero() {
                    continue;
                }
                let mut v = w[..pos].to_vec();
                v.push(k);
                v.extend_from_slice(&w[pos + 1..]);
                add_scaled(&mut out, &self.normal_form(&v), &(c * &s));
            }
            before += self.lie.degrees[g];
        }
        out
    }

    /// Words of length three on which the two possible first rewriting
    /// steps lead to different normal forms.
    pub fn unresolved_ambiguities(&self) -> Vec<(Word, Element, Element)> {
        let n = self.lie.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let w = vec![a, b, c];
                    if !(self.reducible_at(&w, 0) && self.reducible_at(&w, 1)) {
                        continue;
                    }
                    let left = self.normalize(&self.reduce_at(&w, 0));
                    let right = self.normalize(&self.reduce_at(&w, 1));
                    if left != right {
                        out.push((w, left, right));
                    }
                }
            }
        }
        out
    }

    /// Rewriting with leftmost and rightmost strategies agrees on every
    /// word up to the given length.
    pub fn strategies_agree(&self, max_len: usize) -> bool {
        let n = self.lie.dim();
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| {
                    (0..n).map(move |g| {
                        let mut v = w.clone();
                        v.push(g);
                        v
                    })
                })
                .collect();
            for w in &next {
                if self.normal_form_with(w, Strategy::Leftmost) != self.normal_form_with(w, Strategy::Rightmost) {
                    return false;
                }
            }
            layer = next;
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwRow {
    pub length: usize,
    pub gr_dim: usize,
    pub sym_dim: usize,
}

#[derive(Clone, Debug)]
pub struct PbwReport {
    pub rows: Vec<PbwRow>,
    pub ambiguities: Vec<(Word, Element, Element)>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.ambiguities.is_empty() && self.rows.iter().all(|r| r.gr_dim == r.sym_dim)
    }
}

/// `dim Sym^n` of a graded space with the given degrees, for `n ≤ max`:
/// even generators contribute `1/(1-t)`, odd ones `1+t`.
pub fn sym_dims(degrees: &[i64], max: usize) -> Vec<usize> {
    let mut series = vec![0usize; max + 1];
    series[0] = 1;
    for &p in degrees {
        if p.rem_euclid(2) == 1 {
            for n in (1..=max).rev() {
                series[n] += series[n - 1];
            }
        } else {
            for n in 1..=max {
                series[n] += series[n - 1];
            }
        }
    }
    series
}

/// For each length `n ≤ bound`, the rank of the leading length-`n` parts of
/// the normal forms of all words of length `n` (the dimension of
/// `U^{≤n}/U^{≤n-1}`, given that the rewriting is confluent), against
/// `dim Sym^n(g)`.
pub fn pbw_check(g: &DgLie, bound: usize) -> PbwReport {
    let u = Uea::new(g, bound);
    let ambiguities = u.unresolved_ambiguities();
    let sym = sym_dims(&g.degrees, bound);
    let normal = u.normal_words(bound, None);
    let mut rows = Vec::new();
    let n = g.dim();
    for (len, &sym_dim) in sym.iter().enumerate().take(bound + 1) {
        let columns: Vec<&Word> = normal.iter().filter(|w| w.len() == len).collect();
        let position: HashMap<&Word, usize> = columns.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let mut words: Vec<Word> = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w| {
                    (0..n).map(move |k| {
                        let mut v = w.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        let mut m = Matrix::zeros(words.len(), columns.len());
        for (r, w) in words.iter().enumerate() {
            for (v, c) in u.normal_form(w) {
                if v.len() == len {
                    m.set(r, position[&v], c);
                }
            }
        }
        rows.push(PbwRow {
            length: len,
            gr_dim: linalg::rank(&m),
            sym_dim,
        });
    }
    PbwReport { rows, ambiguities }
}

/// The Chevalley–Eilenberg resolution `U(g) ⊗ ⋀g` of the unit, realized as
/// `U(g ⊕ g[1])` with the shifted generators ordered first, split into
/// finite strands by weight.
pub struct CeResolution {
    lie: DgLie,
    weight_bound: i64,
    uea: Uea,
    strands: BTreeMap<i64, (Vec<Word>, Complex)>,
    square_zero_failures: Vec<Word>,
}

/// The cone of `g` with basis `εe_0, …, εe_{n-1}, e_0, …, e_{n-1}`.
pub fn ce_cone(g: &DgLie) -> DgLie {
    let n = g.dim();
    let order: Vec<usize> = (n..2 * n).chain(0..n).collect();
    cone_lie(g).permuted(&order)
}

pub fn ce_resolution(g: &DgLie, weight_bound: i64) -> Result<CeResolution, LieError> {
    if g.degrees.iter().any(|&p| p != 0) {
        return Err(LieError::Unsupported(
            "resolution needs g concentrated in degree 0".into(),
        ));
    }
    if g.has_differential() {
        return Err(LieError::Unsupported(
            "resolution needs zero internal differential".into(),
        ));
    }
    if g.weights.iter().any(|&w| w < 1) {
        return Err(LieError::Unsupported("resolution needs positive weights".into()));
    }
    let cone = ce_cone(g);
    let uea = Uea::new(&cone, weight_bound.max(0) as usize);
    let words = uea.normal_words(weight_bound.max(0) as usize, Some(weight_bound));
    let mut by_weight: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
    for w in words {
        by_weight.entry(uea.word_weight(&w)).or_default().push(w);
    }
    let mut strands = BTreeMap::new();
    let mut square_zero_failures = Vec::new();
    for (wt, ws) in by_weight {
        let (complex, failures) = strand_complex(&uea, &ws);
        square_zero_failures.extend(failures);
        strands.insert(wt, (ws, complex));
    }
    Ok(CeResolution {
        lie: g.clone(),
        weight_bound,
        uea,
        strands,
        square_zero_failures,
    })
}

fn strand_complex(uea: &Uea, words: &[Word]) -> (Complex, Vec<Word>) {
    let mut by_degree: BTreeMap<i64, Vec<&Word>> = BTreeMap::new();
    for w in words {
        by_degree.entry(uea.word_degree(w)).or_default().push(w);
    }
    let position: HashMap<&Word, usize> = by_degree
        .values()
        .flat_map(|ws| ws.iter().enumerate().map(|(k, w)| (*w, k)))
        .collect();
    let mut objects = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    let mut failures = Vec::new();
    for (&n, ws) in &by_degree {
        objects.insert(n, FiltObject::new(ws.iter().map(|w| uea.word_weight(w)).collect()));
        let rows = by_degree.get(&(n + 1)).map_or(0, |v| v.len());
        let mut m = Matrix::zeros(rows, ws.len());
        for (j, w) in ws.iter().enumerate() {
            let dw = uea.differential(w);
            if !uea
                .normalize(&dw.iter().fold(Element::new(), |mut acc, (v, c)| {
                    add_scaled(&mut acc, &uea.differential(v), c);
                    acc
                }))
                .is_empty()
            {
                failures.push((*w).clone());
            }
            for (v, c) in dw {
                let i = position[&v];
                m.set(i, j, c);
            }
        }
        if rows > 0 {
            differentials.insert(n, m);
        }
    }
    let complex = if failures.is_empty() {
        Complex::new(objects, differentials).expect("d² = 0 was checked word by word")
    } else {
        Complex::zero()
    };
    (complex, failures)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandReport {
    pub weight: i64,
    pub dims: BTreeMap<i64, usize>,
    pub cohomology: BTreeMap<i64, usize>,
}

#[derive(Clone, Debug)]
pub struct CeAcyclicityReport {
    pub strands: Vec<StrandReport>,
    pub square_zero_failures: Vec<Word>,
    pub augmentation_is_chain_map: bool,
    pub augmentation_iso_in_weight_zero: bool,
}

impl CeAcyclicityReport {
    pub fn passed(&self) -> bool {
        self.square_zero_failures.is_empty()
            && self.augmentation_is_chain_map
            && self.augmentation_iso_in_weight_zero
            && self.strands.iter().all(|s| {
                if s.weight == 0 {
                    s.cohomology == BTreeMap::from([(0, 1)])
                } else {
                    s.cohomology.is_empty()
                }
            })
    }
}

impl CeResolution {
    pub fn lie(&self) -> &DgLie {
        &self.lie
    }

    pub fn uea(&self) -> &Uea {
        &self.uea
    }

    pub fn weight_bound(&self) -> i64 {
        self.weight_bound
    }

    /// Normal words and the complex of the given weight.
    pub fn strand(&self, weight: i64) -> Option<(&[Word], &Complex)> {
        self.strands.get(&weight).map(|(w, c)| (w.as_slice(), c))
    }

    pub fn weights(&self) -> Vec<i64> {
        self.strands.keys().copied().collect()
    }

    /// The counit `U(g) ⊗ ⋀g -> R`, nonzero only on the empty word.
    pub fn augmentation(&self, w: &[usize]) -> Rational {
        if w.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }
}

pub fn verify_ce_acyclicity(res: &CeResolution, weight_bound: i64) -> CeAcyclicityReport {
    let mut strands = Vec::new();
    let mut chain_map = true;
    let mut weight_zero_iso = true;
    for (&wt, (words, complex)) in res.strands.range(..=weight_bound) {
        let dims = complex.objects().iter().map(|(&n, v)| (n, v.dim())).collect();
        let cohomology: BTreeMap<i64, usize> = complexes::cohomology(complex)
            .into_iter()
            .map(|(n, h)| (n, h.dim()))
            .filter(|&(_, d)| d > 0)
            .collect();
        // the counit kills every boundary: no differential hits the empty word
        for w in words {
            if res.uea.differential(w).keys().any(|v| v.is_empty()) {
                chain_map = false;
            }
        }
        if wt == 0 {
            let data = complexes::cohomology_data(complex, 0);
            let reps = data.representatives();
            let image: Vec<Rational> = (0..reps.cols())
                .map(|c| {
                    words
                        .iter()
                        .filter(|w| res.uea.word_degree(w) == 0)
                        .zip(reps.column(c))
                        .map(|(w, x)| res.augmentation(w) * x)
                        .fold(Rational::zero(), |a, b| a + b)
                })
                .collect();
            weight_zero_iso = image.len() == 1 && !image[0].is_zero();
        }
        strands.push(StrandReport {
            weight: wt,
            dims,
            cohomology,
        });
    }
    CeAcyclicityReport {
        strands,
        square_zero_failures: res.square_zero_failures.clone(),
        augmentation_is_chain_map: chain_map,
        augmentation_iso_in_weight_zero: weight_zero_iso,
    }
}

/// An action of `g` on a polynomial algebra `A` by derivations:
/// `images[i][a]` is the image of the `a`-th generator of `A` under `e_i`.
#[derive(Clone, Debug)]
pub struct Action {
    pub images: Vec<Vec<Element>>,
}

/// Applies the derivation of `A` with the given generator images to `x`.
pub fn apply_derivation(a: &GradedAlgebra, images: &[Element], x: &Element) -> Element {
    let mut out = Element::new();
    for (w, c) in x {
        for pos in 0..w.len() {
            let mut rest = w.clone();
            let g = rest.remove(pos);
            let prefix = graded::single(rest);
            add_scaled(&mut out, &a.mul(&prefix, &images[g]), c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPiece {
    pub weight: i64,
    pub dims: BTreeMap<i64, usize>,
    pub cohomology: BTreeMap<i64, usize>,
}

#[derive(Clone, Debug)]
pub struct DerivedQuotient {
    /// Weight pieces that lie entirely inside the truncation of `A`.
    pub pieces: Vec<QuotientPiece>,
}

impl DerivedQuotient {
    pub fn cohomology_in_degree(&self, n: i64) -> usize {
        self.pieces
            .iter()
            .map(|p| p.cohomology.get(&n).copied().unwrap_or(0))
            .sum()
    }
}

/// The Chevalley–Eilenberg cochains `⋀g' ⊗ A` with
/// `d(ξ_k) = -Σ_{i<j} c_{ij}^k ξ_i ξ_j` and `d(a) = Σ_i ξ_i ⊗ e_i·a`, split
/// by weight (`ξ_i` has weight `-wt(e_i)`). `A` must be a polynomial algebra
/// on degree-0 generators of positive weight.
pub fn derived_quotient(
    g: &DgLie,
    a: &GradedAlgebra,
    action: &Action,
    weight_bound: i64,
) -> Result<DerivedQuotient, LieError> {
    let n = g.dim();
    if g.degrees.iter().any(|&p| p != 0) || g.has_differential() {
        return Err(LieError::Unsupported(
            "derived quotient needs g in degree 0 with d = 0".into(),
        ));
    }
    if a.kind() != AlgebraKind::GradedCommutative || a.generators().iter().any(|t| t.degree != 0 || t.weight < 1) {
        return Err(LieError::Unsupported(
            "A must be polynomial on degree-0 generators of positive weight".into(),
        ));
    }
    let m = a.generators().len();
    if action.images.len() != n || action.images.iter().any(|r| r.len() != m) {
        return Err(LieError::Shape(format!("action needs {n} rows of {m} images")));
    }
    for i in 0..n {
        for t in 0..m {
            let expected = a.generators()[t].weight + g.weights[i];
            if action.images[i][t]
                .keys()
                .any(|w| a.word_weight(w) != expected || a.word_degree(w) != 0)
            {
                return Err(LieError::ActionInhomogeneous { i, a: t });
            }
        }
    }
    // the bracket of two derivations is determined on generators
    for i in 0..n {
        for j in 0..n {
            for t in 0..m {
                let ij = apply_derivation(a, &action.images[i], &action.images[j][t]);
                let ji = apply_derivation(a, &action.images[j], &action.images[i][t]);
                let mut lhs = ij;
                add_scaled(&mut lhs, &ji, &-Rational::one());
                let mut rhs = Element::new();
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    add_scaled(&mut rhs, &action.images[k][t], c);
                }
                if lhs != rhs {
                    return Err(LieError::NotRepresentation { i, j, a: t });
                }
            }
        }
    }
    let min_weight = a.generators().iter().map(|t| t.weight).min().unwrap_or(1);
    let a_bound = a.bound();
    // combined algebra: ξ_0..ξ_{n-1} (degree 1) then the generators of A
    let mut gens: Vec<Generator> = (0..n)
        .map(|i| Generator::new(format!("ξ{}", g.names[i]), 1, -g.weights[i]))
        .collect();
    gens.extend(a.generators().iter().cloned());
    let shift_word = |w: &Word| -> Word { w.iter().map(|&k| k + n).collect() };
    let mut differential = Vec::new();
    for k in 0..n {
        let mut dk = Element::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = &g.bracket_basis(i, j)[k];
                add_term(&mut dk, vec![i, j], -c);
            }
        }
        differential.push(dk);
    }
    for t in 0..m {
        let mut dt = Element::new();
        for i in 0..n {
            for (w, c) in &action.images[i][t] {
                let mut v = vec![i];
                v.extend(shift_word(w));
                add_term(&mut dt, v, c.clone());
            }
        }
        differential.push(dt);
    }
    let growth = action
        .images
        .iter()
        .flatten()
        .flat_map(|x| x.keys().map(|w| w.len()))
        .max()
        .unwrap_or(1);
    let total = GradedAlgebra::new(gens, AlgebraKind::GradedCommutative, n + a_bound + growth, differential)
        .expect("cochain differential raises degree by one");
    let a_len = |w: &Word| w.iter().filter(|&&k| k >= n).count();
    let subsets: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    let complete = |wt: i64| {
        subsets.iter().all(|s| {
            let v = wt + s.iter().map(|&i| g.weights[i]).sum::<i64>();
            v < 0 || v.div_euclid(min_weight) <= a_bound as i64
        })
    };
    let mut by_weight: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
    for w in total.basis() {
        if a_len(w) <= a_bound {
            by_weight.entry(total.word_weight(w)).or_default().push(w.clone());
        }
    }
    let mut pieces = Vec::new();
    for (wt, ws) in by_weight {
        if wt > weight_bound || !complete(wt) {
            continue;
        }
        let complex = total
            .complex_on(&ws)
            .map_err(|e| LieError::Unsupported(format!("weight piece {wt} is not closed: {e}")))?;
        pieces.push(QuotientPiece {
            weight: wt,
            dims: complex.objects().iter().map(|(&k, v)| (k, v.dim())).collect(),
            cohomology: complexes::cohomology(&complex)
                .into_iter()
                .map(|(k, h)| (k, h.dim()))
                .filter(|&(_, d)| d > 0)
                .collect(),
        });
    }
    Ok(DerivedQuotient { pieces })
}

/// Polynomial algebra on named degree-0 generators with the given weights.
pub fn polynomial_algebra(names: &[&str], weights: &[i64], bound: usize) -> GradedAlgebra {
    let gens = names
        .iter()
        .zip(weights)
        .map(|(n, &w)| Generator::new(*n, 0, w))
        .collect();
    GradedAlgebra::free(gens, AlgebraKind::GradedCommutative, bound)
}
