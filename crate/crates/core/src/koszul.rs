//! Koszul resolutions of the unit over `Q = Sym(P')` for a free degree-0
//! module `P`, their specialization at a point `m ∈ P`, and the derived
//! critical locus of a polynomial.
//!
//! A basis element `q ⊗ f_S` of `Q ⊗ ⋀^k P'` is a monomial `q` in the dual
//! coordinates `e*_i` and a strictly increasing index list `S` of length
//! `k`; it sits in cohomological degree `-k` and has total degree
//! `deg q + k`. The differential
//! `d(q ⊗ f_S) = Σ_l (-1)^l q·e*_{s_l} ⊗ f_{S∖s_l}` (with `l` counted from 1)
//! preserves total degree, so each total degree spans a finite subcomplex.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::complexes::{self, ChainMap, Complex, ComplexError};
use crate::filtvect::{FiltMorphism, FiltObject};
use crate::linalg::{self, parse_rational, Matrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("exterior degree {k} is outside 0..={rank}")]
    IndexOutOfRange { k: usize, rank: usize },
    #[error("point has {found} coordinates, expected {expected}")]
    PointLength { expected: usize, found: usize },
    #[error("coordinate {index} of the point is nonzero but has weight {weight} > 0, so contraction is not filtered")]
    NotFiltered { index: usize, weight: i64 },
    #[error("polynomial parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("polynomial term {0} has the wrong number of exponents")]
    TermShape(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KoszulBasis {
    /// Exponents of the monomial in `e*_0, …, e*_{r-1}`.
    pub monomial: Vec<u32>,
    /// Strictly increasing indices of the exterior factor.
    pub subset: Vec<usize>,
}

impl KoszulBasis {
    pub fn sym_degree(&self) -> usize {
        self.monomial.iter().map(|&e| e as usize).sum()
    }

    pub fn total_degree(&self) -> usize {
        self.sym_degree() + self.subset.len()
    }

    pub fn cohomological_degree(&self) -> i64 {
        -(self.subset.len() as i64)
    }
}

fn monomials(vars: usize, degree: usize) -> Vec<Vec<u32>> {
    if vars == 0 {
        return if degree == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials(vars - 1, degree - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn sign_of_position(l: usize) -> Rational {
    // position l counted from 1
    if l.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `K(R, P) = (Sym(P') ⊗ ⋀P', d)` truncated at total degree `bound`.
#[derive(Clone, Debug)]
pub struct KoszulData {
    p: FiltObject,
    dual: FiltObject,
    bound: usize,
    /// `layers[k]` is the basis of `Q ⊗ ⋀^k P'`.
    layers: Vec<Vec<KoszulBasis>>,
    index: HashMap<KoszulBasis, usize>,
}

pub fn fancy_koszul(p: &FiltObject, bound: usize) -> KoszulData {
    let r = p.dim();
    let mut layers = Vec::new();
    for k in 0..=r.min(bound) {
        let mut layer = Vec::new();
        for s in 0..=bound - k {
            for mono in monomials(r, s) {
                for subset in subsets(r, k) {
                    layer.push(KoszulBasis {
                        monomial: mono.clone(),
                        subset,
                    });
                }
            }
        }
        layers.push(layer);
    }
    let index = layers
        .iter()
        .flat_map(|l| l.iter().enumerate().map(|(i, b)| (b.clone(), i)))
        .collect();
    KoszulData {
        p: p.clone(),
        dual: p.dual(),
        bound,
        layers,
        index,
    }
}

impl KoszulData {
    pub fn rank(&self) -> usize {
        self.p.dim()
    }

    pub fn p(&self) -> &FiltObject {
        &self.p
    }

    pub fn dual(&self) -> &FiltObject {
        &self.dual
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Highest exterior degree present.
    pub fn top(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, k: usize) -> &[KoszulBasis] {
        self.layers.get(k).map_or(&[], |l| l.as_slice())
    }

    pub fn weight(&self, b: &KoszulBasis) -> i64 {
        let dw = self.dual.weights();
        b.monomial
            .iter()
            .enumerate()
            .map(|(i, &e)| e as i64 * dw[i])
            .sum::<i64>()
            + b.subset.iter().map(|&s| dw[s]).sum::<i64>()
    }

    pub fn layer_object(&self, k: usize) -> FiltObject {
        FiltObject::new(self.layer(k).iter().map(|b| self.weight(b)).collect())
    }

    fn check_k(&self, k: usize) -> Result<(), KoszulError> {
        if k > self.top() {
            return Err(KoszulError::IndexOutOfRange { k, rank: self.top() });
        }
        Ok(())
    }

    /// Basis of `Q ⊗ P' ⊗ P ⊗ ⋀^k P'` restricted to `q ⊗ f_S` in layer `k`:
    /// index `((layer index) · r + a) · r + b` for `e*_a ⊗ e_b`.
    fn mixed_object(&self, k: usize) -> FiltObject {
        let r = self.rank();
        let mut weights = Vec::new();
        for b in self.layer(k) {
            for a in 0..r {
                for c in 0..r {
                    weights.push(self.weight(b) + self.dual.weights()[a] + self.p.weights()[c]);
                }
            }
        }
        FiltObject::new(weights)
    }

    /// Inserts `Σ_i e*_i ⊗ e_i`.
    pub fn h_map(&self, k: usize) -> Result<FiltMorphism, KoszulError> {
        self.check_k(k)?;
        let r = self.rank();
        let src = self.layer_object(k);
        let tgt = self.mixed_object(k);
        let mut m = Matrix::zeros(tgt.dim(), src.dim());
        for j in 0..src.dim() {
            for i in 0..r {
                m.set((j * r + i) * r + i, j, Rational::one());
            }
        }
        Ok(FiltMorphism::new(src, tgt, m).expect("insertion has weight zero"))
    }

    /// Multiplies the `P'` factor into `Q` and contracts the `P` factor into
    /// the exterior factor, `b·f_S = Σ_l (-1)^l f_{s_l}(b) f_{S∖s_l}`.
    pub fn c_map(&self, k: usize) -> Result<FiltMorphism, KoszulError> {
        self.check_k(k)?;
        let r = self.rank();
        let src = self.mixed_object(k);
        let tgt = if k == 0 {
            FiltObject::zero()
        } else {
            self.layer_object(k - 1)
        };
        let mut m = Matrix::zeros(tgt.dim(), src.dim());
        if k > 0 {
            for (j, b) in self.layer(k).iter().enumerate() {
                for a in 0..r {
                    for c in 0..r {
                        let Some(l) = b.subset.iter().position(|&s| s == c) else {
                            continue;
                        };
                        let mut mono = b.monomial.clone();
                        mono[a] += 1;
                        let mut subset = b.subset.clone();
                        subset.remove(l);
                        let target = KoszulBasis { monomial: mono, subset };
                        let i = self.index[&target];
                        m.add_to(i, (j * r + a) * r + c, &sign_of_position(l + 1));
                    }
                }
            }
        }
        Ok(FiltMorphism::new(src, tgt, m).expect("multiplication and contraction preserve weight"))
    }

    /// `d = c ∘ h` from exterior degree `k` to `k - 1`.
    pub fn differential(&self, k: usize) -> Result<FiltMorphism, KoszulError> {
        let h = self.h_map(k)?;
        let c = self.c_map(k)?;
        Ok(c.compose(&h).expect("h and c are composable"))
    }

    /// The whole truncated complex, exterior degree `k` in degree `-k`.
    pub fn complex(&self) -> Complex {
        let top = self.top();
        let objects = (0..=top).map(|k| self.layer_object(top - k)).collect();
        let diffs = (0..top)
            .map(|i| self.differential(top - i).expect("k in range").into_matrix())
            .collect();
        Complex::from_sequence(-(top as i64), objects, diffs).expect("Koszul differential squares to zero")
    }

    /// Basis elements of a given total degree, layer by layer.
    pub fn strand_basis(&self, total: usize) -> Vec<Vec<usize>> {
        self.layers
            .iter()
            .map(|l| {
                l.iter()
                    .enumerate()
                    .filter(|(_, b)| b.total_degree() == total)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }

    /// The finite subcomplex of the given total degree.
    pub fn strand(&self, total: usize) -> Complex {
        let idx = self.strand_basis(total);
        let top = self.top();
        let objects = (0..=top)
            .map(|i| {
                let k = top - i;
                FiltObject::new(idx[k].iter().map(|&j| self.weight(&self.layers[k][j])).collect())
            })
            .collect();
        let diffs = (0..top)
            .map(|i| {
                let k = top - i;
                let d = self.differential(k).expect("k in range").into_matrix();
                let mut m = Matrix::zeros(idx[k - 1].len(), idx[k].len());
                for (c, &j) in idx[k].iter().enumerate() {
                    for (r, &i2) in idx[k - 1].iter().enumerate() {
                        m.set(r, c, d.get(i2, j).clone());
                    }
                }
                m
            })
            .collect();
        Complex::from_sequence(-(top as i64), objects, diffs).expect("strand of a complex")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulStrand {
    pub total_degree: usize,
    pub dims: BTreeMap<i64, usize>,
    pub cohomology: BTreeMap<i64, usize>,
}

#[derive(Clone, Debug)]
pub struct AugmentationReport {
    pub strands: Vec<KoszulStrand>,
    /// Basis elements whose differential squares to something nonzero.
    pub square_zero_failures: Vec<KoszulBasis>,
    /// Basis elements whose differential has a term not raising the
    /// Sym-degree by one and lowering the exterior degree by one.
    pub degree_failures: Vec<KoszulBasis>,
    pub augmentation_is_chain_map: bool,
    pub augmentation_iso_in_degree_zero: bool,
}

impl AugmentationReport {
    pub fn passed(&self) -> bool {
        self.square_zero_failures.is_empty()
            && self.degree_failures.is_empty()
            && self.augmentation_is_chain_map
            && self.augmentation_iso_in_degree_zero
            && self.strands.iter().all(|s| {
                if s.total_degree == 0 {
                    s.cohomology == BTreeMap::from([(0, 1)])
                } else {
                    s.cohomology.is_empty()
                }
            })
    }
}

/// Checks `d² = 0` and the degree behaviour of `d` on every basis element,
/// that every positive total degree is acyclic, and that the augmentation
/// `q ⊗ f_S ↦ q(0)` (for `S` empty) is a chain map inducing an iso on the
/// total-degree-0 cohomology.
pub fn verify_augmentation_qiso(k: &KoszulData) -> AugmentationReport {
    let top = k.top();
    let mut square_zero_failures = Vec::new();
    let mut degree_failures = Vec::new();
    let diffs: Vec<Matrix> = (0..=top)
        .map(|j| k.differential(j).expect("in range").into_matrix())
        .collect();
    for j in 1..=top {
        let d2 = if j >= 2 { Some(&diffs[j - 1] * &diffs[j]) } else { None };
        for (col, b) in k.layer(j).iter().enumerate() {
            if d2
                .as_ref()
                .is_some_and(|m| (0..m.rows()).any(|r| !m.get(r, col).is_zero()))
            {
                square_zero_failures.push(b.clone());
            }
            for (row, t) in k.layer(j - 1).iter().enumerate() {
                if !diffs[j].get(row, col).is_zero()
                    && (t.sym_degree() != b.sym_degree() + 1 || t.subset.len() + 1 != b.subset.len())
                {
                    degree_failures.push(b.clone());
                }
            }
        }
    }
    let unit = KoszulBasis {
        monomial: vec![0; k.rank()],
        subset: Vec::new(),
    };
    let unit_row = k.index[&unit];
    let augmentation_is_chain_map = top == 0 || (0..diffs[1].cols()).all(|c| diffs[1].get(unit_row, c).is_zero());
    let mut strands = Vec::new();
    let mut iso = false;
    for t in 0..=k.bound() {
        let c = k.strand(t);
        let cohomology = complexes::cohomology(&c)
            .into_iter()
            .map(|(n, h)| (n, h.dim()))
            .filter(|&(_, d)| d > 0)
            .collect();
        if t == 0 {
            let reps = complexes::cohomology_data(&c, 0).representatives();
            // the strand in degree 0 is spanned by the unit alone
            iso = reps.cols() == 1 && !reps.get(0, 0).is_zero();
        }
        strands.push(KoszulStrand {
            total_degree: t,
            dims: c.objects().iter().map(|(&n, v)| (n, v.dim())).collect(),
            cohomology,
        });
    }
    AugmentationReport {
        strands,
        square_zero_failures,
        degree_failures,
        augmentation_is_chain_map,
        augmentation_iso_in_degree_zero: iso,
    }
}

fn check_point(p: &FiltObject, m: &[Rational]) -> Result<(), KoszulError> {
    if m.len() != p.dim() {
        return Err(KoszulError::PointLength {
            expected: p.dim(),
            found: m.len(),
        });
    }
    for (i, (c, &w)) in m.iter().zip(p.weights()).enumerate() {
        if !c.is_zero() && w > 0 {
            return Err(KoszulError::NotFiltered { index: i, weight: w });
        }
    }
    Ok(())
}

/// `K(R, P; m) = (⋀P', d_m)` with `d_m f_S = Σ_l (-1)^l f_{s_l}(m) f_{S∖s_l}`.
/// Exterior degree `k` sits in degree `-k`. The point must lie in `F_0 P`.
pub fn specialized_koszul(p: &FiltObject, m: &[Rational]) -> Result<Complex, KoszulError> {
    check_point(p, m)?;
    let r = p.dim();
    let dual = p.dual();
    let layer: Vec<Vec<Vec<usize>>> = (0..=r).map(|k| subsets(r, k)).collect();
    let object = |k: usize| {
        FiltObject::new(
            layer[k]
                .iter()
                .map(|s| s.iter().map(|&i| dual.weights()[i]).sum())
                .collect(),
        )
    };
    let objects = (0..=r).map(|i| object(r - i)).collect();
    let diffs = (0..r)
        .map(|i| {
            let k = r - i;
            let pos: HashMap<&Vec<usize>, usize> = layer[k - 1].iter().enumerate().map(|(j, s)| (s, j)).collect();
            let mut d = Matrix::zeros(layer[k - 1].len(), layer[k].len());
            for (c, s) in layer[k].iter().enumerate() {
                for (l, &sl) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(l);
                    d.add_to(pos[&rest], c, &(&m[sl] * sign_of_position(l + 1)));
                }
            }
            d
        })
        .collect();
    Ok(Complex::from_sequence(-(r as i64), objects, diffs).expect("contraction squares to zero"))
}

#[derive(Clone, Debug)]
pub struct BaseChangeReport {
    /// For each exterior degree `k ≥ 1`: the differential of
    /// `R_m ⊗_Q K(R, P)` and of `K(R, P; m)` from `k` to `k - 1`.
    pub layers: Vec<(usize, Matrix, Matrix)>,
    /// `ev_m ∘ d = d_m ∘ ev_m` on every basis element of the truncation.
    pub evaluation_is_chain_map: bool,
}

impl BaseChangeReport {
    pub fn passed(&self) -> bool {
        self.evaluation_is_chain_map && self.layers.iter().all(|(_, a, b)| a == b)
    }
}

fn eval_monomial(mono: &[u32], m: &[Rational]) -> Rational {
    mono.iter().zip(m).fold(Rational::one(), |acc, (&e, x)| {
        acc * num_traits::pow(x.clone(), e as usize)
    })
}

/// The evaluation `K(R, P) -> K(R, P; m)`, `q ⊗ f_S ↦ q(m) f_S`, on each
/// exterior degree.
fn evaluation_matrix(k: &KoszulData, j: usize, m: &[Rational]) -> Matrix {
    let targets = subsets(k.rank(), j);
    let pos: HashMap<&Vec<usize>, usize> = targets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut e = Matrix::zeros(targets.len(), k.layer(j).len());
    for (c, b) in k.layer(j).iter().enumerate() {
        e.set(pos[&b.subset], c, eval_monomial(&b.monomial, m));
    }
    e
}

/// Specializes every coefficient of the fancy differential at `m` and
/// compares with the contraction differential, matrix for matrix; also
/// checks that evaluation at `m` is a chain map from the truncated fancy
/// complex.
pub fn base_change_check(p: &FiltObject, m: &[Rational], bound: usize) -> Result<BaseChangeReport, KoszulError> {
    let special = specialized_koszul(p, m)?;
    let r = p.dim();
    let k = fancy_koszul(p, bound.max(r));
    let mut layers = Vec::new();
    for j in 1..=r {
        let d = k.differential(j)?.into_matrix();
        // R_m ⊗_Q (Q ⊗ ⋀^j) has basis 1 ⊗ f_S
        let src = subsets(r, j);
        let tgt = subsets(r, j - 1);
        let tpos: HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut induced = Matrix::zeros(tgt.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            let col = k.index[&KoszulBasis {
                monomial: vec![0; r],
                subset: s.clone(),
            }];
            for (row, t) in k.layer(j - 1).iter().enumerate() {
                let v = d.get(row, col);
                if !v.is_zero() {
                    induced.add_to(tpos[&t.subset], c, &(v * eval_monomial(&t.monomial, m)));
                }
            }
        }
        let contraction = special.differential_matrix(-(j as i64));
        layers.push((j, induced, contraction));
    }
    let mut chain = true;
    for j in 1..=k.top() {
        let d = k.differential(j)?.into_matrix();
        let lhs = &evaluation_matrix(&k, j - 1, m) * &d;
        let rhs = &special.differential_matrix(-(j as i64)) * &evaluation_matrix(&k, j, m);
        chain &= lhs == rhs;
    }
    Ok(BaseChangeReport {
        layers,
        evaluation_is_chain_map: chain,
    })
}

/// Evaluation at `m` from the truncated fancy complex to `K(R, P; m)`.
pub fn evaluation_chain_map(k: &KoszulData, m: &[Rational]) -> Result<ChainMap, KoszulError> {
    check_point(k.p(), m)?;
    let special = specialized_koszul(k.p(), m)?;
    let top = k.top();
    let components = (0..=top).map(|j| (-(j as i64), evaluation_matrix(k, j, m))).collect();
    Ok(ChainMap::new(k.complex(), special, components)?)
}

pub type Monomial = Vec<u32>;
pub type Polynomial = BTreeMap<Monomial, Rational>;

/// A polynomial in named variables. Variables are kept sorted by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpec {
    pub vars: Vec<String>,
    pub terms: Polynomial,
}

impl PolySpec {
    pub fn new(vars: Vec<String>, terms: Vec<(Rational, Monomial)>) -> Result<PolySpec, KoszulError> {
        let mut out = Polynomial::new();
        for (t, (c, e)) in terms.into_iter().enumerate() {
            if e.len() != vars.len() {
                return Err(KoszulError::TermShape(t));
            }
            *out.entry(e).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(PolySpec { vars, terms: out })
    }

    /// Parses terms such as `3/2 x^2*y - y^3 + 1`; factors may be separated
    /// by `*` or spaces.
    pub fn parse(text: &str) -> Result<PolySpec, KoszulError> {
        let raw = parse_terms(text)?;
        let mut vars: Vec<String> = raw.iter().flat_map(|(_, f)| f.iter().map(|(v, _)| v.clone())).collect();
        vars.sort();
        vars.dedup();
        let terms = raw
            .into_iter()
            .map(|(c, factors)| {
                let mut e = vec![0u32; vars.len()];
                for (v, k) in factors {
                    let i = vars.binary_search(&v).expect("collected above");
                    e[i] += k;
                }
                (c, e)
            })
            .collect();
        PolySpec::new(vars, terms)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            *out.entry(f).or_insert_with(Rational::zero) += c * Rational::from_integer(e[i].into());
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for PolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            self.vars[i].clone()
                        } else {
                            format!("{}^{k}", self.vars[i])
                        }
                    })
                    .collect();
                match (mono.is_empty(), c == &Rational::one()) {
                    (true, _) => linalg::format_rational(c),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("{} {}", linalg::format_rational(c), mono.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

type RawTerm = (Rational, Vec<(String, u32)>);

fn parse_terms(text: &str) -> Result<Vec<RawTerm>, KoszulError> {
    let bytes = text.as_bytes();
    let err = |position: usize, message: &str| KoszulError::Parse {
        position,
        message: message.to_string(),
    };
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut terms = Vec::new();
    skip(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
            skip(&mut pos);
        } else if !first {
            return Err(err(pos, "expected '+' or '-' between terms"));
        }
        first = false;
        let mut coeff = Rational::one();
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        if pos > start {
            coeff = parse_rational(&text[start..pos]).ok_or_else(|| err(start, "bad coefficient"))?;
            skip(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                skip(&mut pos);
            }
        }
        let mut factors = Vec::new();
        while pos < bytes.len() && (bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
            let vstart = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            let name = text[vstart..pos].to_string();
            skip(&mut pos);
            let mut exp = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip(&mut pos);
                let estart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                exp = text[estart..pos].parse().map_err(|_| err(estart, "bad exponent"))?;
                skip(&mut pos);
            }
            factors.push((name, exp));
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                skip(&mut pos);
                if pos == bytes.len() || !(bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
                    return Err(err(pos, "expected a variable after '*'"));
                }
            }
        }
        if pos == start && factors.is_empty() {
            return Err(err(pos, "expected a coefficient or variable"));
        }
        terms.push((sign * coeff, factors));
        skip(&mut pos);
    }
    Ok(terms)
}

fn mul_monomial(p: &Polynomial, e: &[u32]) -> Polynomial {
    p.iter()
        .map(|(f, c)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

fn poly_degree(p: &Polynomial) -> usize {
    p.keys().map(|e| e.iter().map(|&k| k as usize).sum()).max().unwrap_or(0)
}

/// `A ⊗ ⋀(ξ_1, …, ξ_n)` with `d ξ_i = ∂_i f`, where `x_j` has weight 1 and
/// `ξ_i` has weight `e_i = deg ∂_i f`; truncating at total weight `cutoff`
/// gives a subcomplex because `d` never raises weight.
pub struct CriticalComplex {
    pub weights: Vec<usize>,
    pub basis: Vec<KoszulBasis>,
    pub complex: Complex,
}

pub fn critical_complex(f: &PolySpec, cutoff: usize) -> CriticalComplex {
    let n = f.nvars();
    let partials: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let weights: Vec<usize> = partials.iter().map(poly_degree).collect();
    let mut layers: Vec<Vec<KoszulBasis>> = vec![Vec::new(); n + 1];
    for (k, layer) in layers.iter_mut().enumerate() {
        for subset in subsets(n, k) {
            let sw: usize = subset.iter().map(|&i| weights[i]).sum();
            if sw > cutoff {
                continue;
            }
            for s in 0..=cutoff - sw {
                for mono in monomials(n, s) {
                    layer.push(KoszulBasis {
                        monomial: mono,
                        subset: subset.clone(),
                    });
                }
            }
        }
    }
    let weight_of = |b: &KoszulBasis| b.sym_degree() + b.subset.iter().map(|&i| weights[i]).sum::<usize>();
    let objects = (0..=n)
        .map(|i| FiltObject::new(layers[n - i].iter().map(|b| weight_of(b) as i64).collect()))
        .collect();
    let diffs = (0..n)
        .map(|i| {
            let k = n - i;
            let pos: HashMap<&KoszulBasis, usize> = layers[k - 1].iter().enumerate().map(|(j, b)| (b, j)).collect();
            let mut d = Matrix::zeros(layers[k - 1].len(), layers[k].len());
            for (c, b) in layers[k].iter().enumerate() {
                for (l, &sl) in b.subset.iter().enumerate() {
                    let mut rest = b.subset.clone();
                    rest.remove(l);
                    for (mono, coeff) in mul_monomial(&partials[sl], &b.monomial) {
                        let t = KoszulBasis {
                            monomial: mono,
                            subset: rest.clone(),
                        };
                        d.add_to(pos[&t], c, &(coeff * sign_of_position(l + 1)));
                    }
                }
            }
            d
        })
        .collect();
    let complex = Complex::from_sequence(-(n as i64), objects, diffs).expect("contraction with df squares to zero");
    CriticalComplex {
        weights,
        basis: layers.into_iter().flatten().collect(),
        complex,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CritReport {
    pub vars: Vec<String>,
    pub cutoff: usize,
    /// Weight of each `ξ_i`.
    pub xi_weights: Vec<usize>,
    /// `dim H^{-i}` at the cutoff, for `i = 0..=n`.
    pub cohomology: BTreeMap<i64, usize>,
    /// `dim H^0` at every cutoff `0..=D`.
    pub h0_by_cutoff: Vec<usize>,
    pub stabilized: bool,
}

impl CritReport {
    pub fn h0(&self) -> usize {
        self.cohomology.get(&0).copied().unwrap_or(0)
    }
}

/// Cohomology of the derived critical locus of `f` up to weight `cutoff`.
/// Stabilized means `dim H^0` agrees at `cutoff - 1` and `cutoff` and every
/// monomial of degree `cutoff - 1` lies in the truncated Jacobian ideal.
pub fn critical_locus(f: &PolySpec, cutoff: usize) -> CritReport {
    let top = critical_complex(f, cutoff);
    let n = f.nvars();
    let cohomology = (0..=n as i64)
        .map(|i| (-i, complexes::reduced_cohomology(&top.complex, -i).dim()))
        .collect();
    let h0_by_cutoff: Vec<usize> = (0..=cutoff)
        .map(|c| complexes::reduced_cohomology(&critical_complex(f, c).complex, 0).dim())
        .collect();
    let stabilized = cutoff >= 1 && h0_by_cutoff[cutoff - 1] == h0_by_cutoff[cutoff] && {
        let ideal = top.complex.differential_matrix(-1);
        let ambient: Vec<&KoszulBasis> = top.basis.iter().filter(|b| b.subset.is_empty()).collect();
        let base = linalg::rank(&ideal);
        ambient
            .iter()
            .enumerate()
            .filter(|(_, b)| b.sym_degree() == cutoff - 1)
            .all(|(row, _)| {
                let mut e = Matrix::zeros(ambient.len(), 1);
                e.set(row, 0, Rational::one());
                linalg::rank(&ideal.hstack(&e)) == base
            })
    };
    CritReport {
        vars: f.vars.clone(),
        cutoff,
        xi_weights: top.weights,
        cohomology,
        h0_by_cutoff,
        stabilized,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn p(w: &[i64]) -> FiltObject {
        FiltObject::new(w.to_vec())
    }

    #[test]
    fn layers_and_shapes() {
        let k = fancy_koszul(&FiltObject::zero(), 3);
        assert_eq!(k.top(), 0);
        assert_eq!(k.complex().support(), vec![0]);
        let k = fancy_koszul(&p(&[0]), 2);
        assert_eq!(k.layer(0).len(), 3);
        assert_eq!(k.layer(1).len(), 2);
        let k = fancy_koszul(&p(&[0, 0, 0]), 4);
        assert_eq!(k.complex().support().first(), Some(&-3));
        assert!(k.h_map(4).is_err());
    }

    #[test]
    fn rank_one_maps() {
        let k = fancy_koszul(&p(&[1]), 3);
        let h = k.h_map(1).unwrap();
        // θ ↦ e* ⊗ e ⊗ θ
        assert_eq!(h.matrix().get(0, 0), &rat(1));
        let d = k.differential(1).unwrap();
        // d(1 ⊗ θ) = -e* ⊗ 1
        let theta = k.index[&KoszulBasis {
            monomial: vec![0],
            subset: vec![0],
        }];
        let estar = k.index[&KoszulBasis {
            monomial: vec![1],
            subset: vec![],
        }];
        assert_eq!(d.matrix().get(estar, theta), &rat(-1));
        assert!(k.differential(0).unwrap().target().is_zero());
    }

    #[test]
    fn rank_two_contraction_signs() {
        let k = fancy_koszul(&p(&[0, 0]), 2);
        let d = k.differential(2).unwrap();
        let top = k.index[&KoszulBasis {
            monomial: vec![0, 0],
            subset: vec![0, 1],
        }];
        let a = k.index[&KoszulBasis {
            monomial: vec![1, 0],
            subset: vec![1],
        }];
        let b = k.index[&KoszulBasis {
            monomial: vec![0, 1],
            subset: vec![0],
        }];
        assert_eq!(d.matrix().get(a, top), &rat(-1));
        assert_eq!(d.matrix().get(b, top), &rat(1));
    }

    #[test]
    fn augmentation_small_ranks() {
        for r in 0..=3 {
            let k = fancy_koszul(&FiltObject::new((0..r).map(|i| i as i64 - 1).collect()), 4);
            let rep = verify_augmentation_qiso(&k);
            assert!(rep.passed(), "rank {r}: {rep:?}");
        }
    }

    #[test]
    fn specialized_examples() {
        let c = specialized_koszul(&p(&[0, 0]), &[rat(0), rat(0)]).unwrap();
        assert!(c.differential_matrix(-1).is_zero());
        let c = specialized_koszul(&p(&[0]), &[rat(1)]).unwrap();
        assert!(complexes::is_acyclic(&c));
        let c = specialized_koszul(&p(&[0, 0]), &[rat(1), rat(0)]).unwrap();
        assert!(complexes::is_acyclic(&c));
        assert!(matches!(
            specialized_koszul(&p(&[1]), &[rat(1)]),
            Err(KoszulError::NotFiltered { index: 0, weight: 1 })
        ));
        assert!(specialized_koszul(&p(&[1]), &[rat(0)]).is_ok());
    }

    #[test]
    fn base_change_examples() {
        let r = base_change_check(&p(&[0]), &[rat(3)], 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.layers[0].1, Matrix::from_i64(&[&[-3]]));
        let r = base_change_check(&p(&[0, -1]), &[frac(2, 3), frac(-5, 7)], 2).unwrap();
        assert!(r.passed());
        let r = base_change_check(&p(&[0, 0]), &[rat(0), rat(0)], 2).unwrap();
        assert!(r.layers.iter().all(|(_, a, _)| a.is_zero()));
        let k = fancy_koszul(&p(&[0, 0]), 3);
        assert!(evaluation_chain_map(&k, &[rat(1), rat(2)]).is_ok());
    }

    #[test]
    fn polynomial_parser() {
        let f = PolySpec::parse("x^3 + y^3").unwrap();
        assert_eq!(f.vars, vec!["x", "y"]);
        assert_eq!(f.terms.len(), 2);
        let g = PolySpec::parse("3/2 x^2*y - y x^2 + 1").unwrap();
        assert_eq!(g.terms.get(&vec![2, 1]), Some(&frac(1, 2)));
        assert_eq!(g.terms.get(&vec![0, 0]), Some(&rat(1)));
        assert!(PolySpec::parse("").is_err());
        assert!(PolySpec::parse("x^").is_err());
        assert!(PolySpec::parse("x y z +").is_err());
        assert_eq!(PolySpec::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn critical_examples() {
        let r = critical_locus(&PolySpec::parse("x").unwrap(), 8);
        assert_eq!(r.cohomology, BTreeMap::from([(-1, 0), (0, 0)]));
        let r = critical_locus(&PolySpec::parse("x^3").unwrap(), 6);
        assert_eq!(r.h0(), 2);
        assert!(r.stabilized);
        assert_eq!(r.cohomology[&-1], 0);
        let r = critical_locus(&PolySpec::parse("x^3 + y^3").unwrap(), 8);
        assert_eq!(r.h0(), 4);
        assert!(r.stabilized);
        assert_eq!(r.cohomology[&-1], 0);
        assert_eq!(r.cohomology[&-2], 0);
    }
}
