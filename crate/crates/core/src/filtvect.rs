//! Finite-dimensional filtered rational vector spaces.
//!
//! An object is a space `Q^n` with an adapted basis `e_0..e_{n-1}` and an
//! integer weight per basis vector; the filtration step `F_p` is spanned by the
//! basis vectors of weight at most `p`. A morphism is a matrix that maps `F_p`
//! into `F_p`, which for adapted bases means entry `(i, j)` may be nonzero only
//! when `target.weights[i] <= source.weights[j]`.
//!
//! This is a quasi-abelian category in which monomorphisms and epimorphisms
//! need not be strict: the identity matrix from weight 0 to weight -1 is both,
//! yet its inverse does not preserve the filtration.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, Matrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltError {
    #[error("matrix is {rows}x{cols} but morphism needs {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("entry ({row}, {col}) is nonzero but maps weight {source_weight} to weight {target_weight}")]
    FiltrationViolated {
        row: usize,
        col: usize,
        source_weight: i64,
        target_weight: i64,
    },
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("cone does not commute: {0}")]
    ConeNotCommuting(String),
}

/// A filtered vector space given by the weights of an adapted basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FiltObject {
    weights: Vec<i64>,
}

impl fmt::Display for FiltObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} {:?}", self.dim(), self.weights)
    }
}

impl FiltObject {
    pub const ZERO: FiltObject = FiltObject { weights: Vec::new() };

    pub fn new(weights: Vec<i64>) -> Self {
        FiltObject { weights }
    }

    pub fn zero() -> Self {
        FiltObject::default()
    }

    /// The monoidal unit: `Q` in weight 0.
    pub fn unit() -> Self {
        FiltObject::new(vec![0])
    }

    /// `dim` copies of weight `w`.
    pub fn uniform(dim: usize, w: i64) -> Self {
        FiltObject::new(vec![w; dim])
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weights sorted ascending; two objects are isomorphic iff these agree.
    pub fn weight_profile(&self) -> Vec<i64> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }

    /// `dim F_p`.
    pub fn filtration_dim(&self, p: i64) -> usize {
        self.weights.iter().filter(|&&w| w <= p).count()
    }

    /// Smallest `p` with `v ∈ F_p`, or `None` for the zero vector.
    pub fn weight_of(&self, v: &[Rational]) -> Option<i64> {
        assert_eq!(v.len(), self.dim());
        v.iter()
            .zip(&self.weights)
            .filter(|(x, _)| !x.is_zero())
            .map(|(_, &w)| w)
            .max()
    }

    /// The weights at which the filtration jumps, ascending.
    pub fn jumps(&self) -> Vec<i64> {
        let mut w = self.weight_profile();
        w.dedup();
        w
    }

    pub fn direct_sum(&self, other: &FiltObject) -> FiltObject {
        let mut w = self.weights.clone();
        w.extend_from_slice(&other.weights);
        FiltObject::new(w)
    }

    /// Basis `e_i ⊗ f_j` at index `i * other.dim() + j`, weight `w_i + w_j`.
    pub fn tensor(&self, other: &FiltObject) -> FiltObject {
        let mut w = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.weights {
            for &b in &other.weights {
                w.push(a + b);
            }
        }
        FiltObject::new(w)
    }

    /// `Hom(V, 1)` on the dual basis; the dual of `e_i` has weight `-w_i`.
    pub fn dual(&self) -> FiltObject {
        FiltObject::new(self.weights.iter().map(|w| -w).collect())
    }

    pub fn shifted_weights(&self, by: i64) -> FiltObject {
        FiltObject::new(self.weights.iter().map(|w| w + by).collect())
    }
}

/// A filtration-preserving linear map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiltMorphism {
    source: FiltObject,
    target: FiltObject,
    matrix: Matrix,
}

/// Checks shape and filtration preservation of `matrix` as a map
/// `source -> target`.
pub fn check_filtered(source: &FiltObject, target: &FiltObject, matrix: &Matrix) -> Result<(), FiltError> {
    if matrix.shape() != (target.dim(), source.dim()) {
        return Err(FiltError::Shape {
            rows: matrix.rows(),
            cols: matrix.cols(),
            expected_rows: target.dim(),
            expected_cols: source.dim(),
        });
    }
    for (i, j) in matrix.support() {
        if target.weights[i] > source.weights[j] {
            return Err(FiltError::FiltrationViolated {
                row: i,
                col: j,
                source_weight: source.weights[j],
                target_weight: target.weights[i],
            });
        }
    }
    Ok(())
}

impl FiltMorphism {
    pub fn new(source: FiltObject, target: FiltObject, matrix: Matrix) -> Result<Self, FiltError> {
        check_filtered(&source, &target, &matrix)?;
        Ok(FiltMorphism { source, target, matrix })
    }

    /// For internally constructed maps already known to be filtered.
    pub(crate) fn new_unchecked(source: FiltObject, target: FiltObject, matrix: Matrix) -> Self {
        debug_assert_eq!(check_filtered(&source, &target, &matrix), Ok(()));
        FiltMorphism { source, target, matrix }
    }

    pub fn identity(v: &FiltObject) -> Self {
        FiltMorphism::new_unchecked(v.clone(), v.clone(), Matrix::identity(v.dim()))
    }

    pub fn zero(source: &FiltObject, target: &FiltObject) -> Self {
        FiltMorphism::new_unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(target.dim(), source.dim()),
        )
    }

    pub fn source(&self) -> &FiltObject {
        &self.source
    }

    pub fn target(&self) -> &FiltObject {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &FiltMorphism) -> Result<FiltMorphism, FiltError> {
        if first.target != self.source {
            return Err(FiltError::NotComposable(format!(
                "target {} differs from source {}",
                first.target, self.source
            )));
        }
        Ok(FiltMorphism::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            &self.matrix * &first.matrix,
        ))
    }

    pub fn add(&self, other: &FiltMorphism) -> Result<FiltMorphism, FiltError> {
        if self.source != other.source || self.target != other.target {
            return Err(FiltError::Mismatch("sum of morphisms with different endpoints".into()));
        }
        Ok(FiltMorphism::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            &self.matrix + &other.matrix,
        ))
    }

    pub fn neg(&self) -> FiltMorphism {
        FiltMorphism::new_unchecked(self.source.clone(), self.target.clone(), -&self.matrix)
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// Whether the canonical map `Coim f -> Im f` is an isomorphism of filtered
    /// objects. That map is always a filtered bijection, so it suffices to
    /// compare the induced weights on both sides.
    pub fn is_strict(&self) -> bool {
        self.coimage().object.weight_profile() == self.image().object.weight_profile()
    }

    pub fn is_strict_mono(&self) -> bool {
        self.is_mono() && self.is_strict()
    }

    pub fn is_strict_epi(&self) -> bool {
        self.is_epi() && self.is_strict()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_mono() && self.is_strict()
    }

    pub fn kernel(&self) -> Subobject {
        Subobject::spanned_by(&self.source, &linalg::kernel_basis(&self.matrix))
    }

    pub fn cokernel(&self) -> Quotient {
        Quotient::by(&self.target, &self.matrix)
    }

    /// Image with the filtration induced from the target.
    pub fn image(&self) -> Subobject {
        Subobject::spanned_by(&self.target, &self.matrix)
    }

    /// Coimage `source / ker f` with the quotient filtration.
    pub fn coimage(&self) -> Quotient {
        Quotient::by(&self.source, &linalg::kernel_basis(&self.matrix))
    }

    /// The canonical map `Coim f -> Im f`; a bijection, an isomorphism iff
    /// `f` is strict.
    pub fn coimage_to_image(&self) -> FiltMorphism {
        let coim = self.coimage();
        let im = self.image();
        let m = &(&im.coords * &self.matrix) * &coim.section;
        FiltMorphism::new_unchecked(coim.object, im.object, m)
    }

    /// `f = mono ∘ strict_epi` through the coimage.
    pub fn factor(&self) -> FactoredMorphism {
        let coim = self.coimage();
        let mono = FiltMorphism::new_unchecked(coim.object.clone(), self.target.clone(), &self.matrix * &coim.section);
        FactoredMorphism {
            strict_epi: coim.projection,
            mono,
        }
    }

    /// `f = strict_mono ∘ epi` through the image.
    pub fn factor_through_image(&self) -> ImageFactorization {
        let im = self.image();
        let epi = FiltMorphism::new_unchecked(self.source.clone(), im.object.clone(), &im.coords * &self.matrix);
        ImageFactorization {
            epi,
            strict_mono: im.inclusion,
        }
    }

    pub fn direct_sum(&self, other: &FiltMorphism) -> FiltMorphism {
        FiltMorphism::new_unchecked(
            self.source.direct_sum(&other.source),
            self.target.direct_sum(&other.target),
            self.matrix.block_diag(&other.matrix),
        )
    }

    pub fn tensor(&self, other: &FiltMorphism) -> FiltMorphism {
        FiltMorphism::new_unchecked(
            self.source.tensor(&other.source),
            self.target.tensor(&other.target),
            self.matrix.kron(&other.matrix),
        )
    }

    /// The transpose `W' -> V'`.
    pub fn dual(&self) -> FiltMorphism {
        FiltMorphism::new_unchecked(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }
}

/// `mono ∘ strict_epi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredMorphism {
    pub strict_epi: FiltMorphism,
    pub mono: FiltMorphism,
}

impl FactoredMorphism {
    pub fn recompose(&self) -> FiltMorphism {
        self.mono.compose(&self.strict_epi).expect("factors are composable")
    }
}

/// `strict_mono ∘ epi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageFactorization {
    pub epi: FiltMorphism,
    pub strict_mono: FiltMorphism,
}

impl ImageFactorization {
    pub fn recompose(&self) -> FiltMorphism {
        self.strict_mono.compose(&self.epi).expect("factors are composable")
    }
}

/// A subspace with its induced filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject {
    pub object: FiltObject,
    /// Strict monomorphism into the ambient object; its columns are a
    /// weight-adapted basis of the subspace.
    pub inclusion: FiltMorphism,
    /// Left inverse of the inclusion: coordinates of a vector of the subspace.
    pub coords: Matrix,
}

impl Subobject {
    /// The subspace spanned by the columns of `span` (which may be dependent).
    ///
    /// Reducing with pivots scanned from the heaviest coordinate down gives
    /// basis vectors whose leading coordinate carries their weight, and any
    /// combination of them has the weight of its heaviest leading coordinate.
    /// Hence `K ∩ F_p` is spanned by the basis vectors of weight at most `p`.
    pub fn spanned_by(ambient: &FiltObject, span: &Matrix) -> Subobject {
        assert_eq!(span.rows(), ambient.dim());
        let n = ambient.dim();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(ambient.weights[i]), i));
        let e = linalg::echelon_with_pivot_order(&span.transpose(), &order).expect("weight order is a permutation");
        let k = e.rank();
        let weights: Vec<i64> = e.pivots.iter().map(|&p| ambient.weights[p]).collect();
        let object = FiltObject::new(weights);
        let basis = e.matrix.transpose();
        let mut coords = Matrix::zeros(k, n);
        for (r, &p) in e.pivots.iter().enumerate() {
            coords.set(r, p, Rational::one());
        }
        Subobject {
            inclusion: FiltMorphism::new_unchecked(object.clone(), ambient.clone(), basis),
            object,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }
}

/// A quotient space with its quotient filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub object: FiltObject,
    /// Strict epimorphism from the ambient object.
    pub projection: FiltMorphism,
    /// Right inverse of the projection sending each quotient basis vector to
    /// the ambient basis vector representing it.
    pub section: Matrix,
}

impl Quotient {
    /// The quotient of `ambient` by the column span of `span`.
    ///
    /// Ambient basis vectors are taken greedily in order of increasing weight
    /// whenever they are independent modulo the subspace and the ones already
    /// chosen; their classes form an adapted basis of the quotient filtration
    /// `F_p(V/K) = (F_p V + K) / K`.
    pub fn by(ambient: &FiltObject, span: &Matrix) -> Quotient {
        assert_eq!(span.rows(), ambient.dim());
        let n = ambient.dim();
        let sub = linalg::column_space_basis(span);
        let k = sub.cols();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (ambient.weights[i], i));
        let mut candidates = Matrix::zeros(n, n);
        for (c, &i) in order.iter().enumerate() {
            candidates.set(i, c, Rational::one());
        }
        let e = linalg::rref(&sub.hstack(&candidates));
        let chosen: Vec<usize> = e.pivots.iter().filter(|&&p| p >= k).map(|&p| order[p - k]).collect();
        let q = chosen.len();
        let mut section = Matrix::zeros(n, q);
        for (c, &i) in chosen.iter().enumerate() {
            section.set(i, c, Rational::one());
        }
        let basis = sub.hstack(&section);
        let inv = linalg::inverse(&basis).expect("subspace plus chosen complement is a basis");
        let proj = inv.block(k, 0, q, n);
        let object = FiltObject::new(chosen.iter().map(|&i| ambient.weights[i]).collect());
        Quotient {
            projection: FiltMorphism::new_unchecked(ambient.clone(), object.clone(), proj),
            object,
            section,
        }
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }
}

/// Kernel object and its strict inclusion.
pub fn kernel(f: &FiltMorphism) -> (FiltObject, FiltMorphism) {
    let k = f.kernel();
    (k.object, k.inclusion)
}

/// Cokernel object and its strict projection.
pub fn cokernel(f: &FiltMorphism) -> (FiltObject, FiltMorphism) {
    let q = f.cokernel();
    (q.object, q.projection)
}

pub fn image(f: &FiltMorphism) -> (FiltObject, FiltMorphism) {
    let s = f.image();
    (s.object, s.inclusion)
}

pub fn coimage(f: &FiltMorphism) -> (FiltObject, FiltMorphism) {
    let q = f.coimage();
    (q.object, q.projection)
}

pub fn is_strict(f: &FiltMorphism) -> bool {
    f.is_strict()
}

pub fn factor(f: &FiltMorphism) -> FactoredMorphism {
    f.factor()
}

/// Inclusions and projections of `a ⊕ b`.
pub fn biproduct_maps(a: &FiltObject, b: &FiltObject) -> (FiltMorphism, FiltMorphism, FiltMorphism, FiltMorphism) {
    let sum = a.direct_sum(b);
    let (m, n) = (a.dim(), b.dim());
    let mut ia = Matrix::zeros(m + n, m);
    let mut ib = Matrix::zeros(m + n, n);
    ia.set_block(0, 0, &Matrix::identity(m));
    ib.set_block(m, 0, &Matrix::identity(n));
    let pa = ia.transpose();
    let pb = ib.transpose();
    (
        FiltMorphism::new_unchecked(a.clone(), sum.clone(), ia),
        FiltMorphism::new_unchecked(b.clone(), sum.clone(), ib),
        FiltMorphism::new_unchecked(sum.clone(), a.clone(), pa),
        FiltMorphism::new_unchecked(sum, b.clone(), pb),
    )
}

/// Pushout of a span `y <- x -> z`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: FiltObject,
    pub from_first: FiltMorphism,
    pub from_second: FiltMorphism,
    quotient: Quotient,
    first: FiltObject,
    second: FiltObject,
}

/// `y ⊕ z` modulo the image of `(f, -g): x -> y ⊕ z`.
pub fn pushout(f: &FiltMorphism, g: &FiltMorphism) -> Result<Pushout, FiltError> {
    if f.source != g.source {
        return Err(FiltError::Mismatch(format!(
            "pushout needs a common source, got {} and {}",
            f.source, g.source
        )));
    }
    let span = f.matrix.vstack(&-&g.matrix);
    let sum = f.target.direct_sum(&g.target);
    let quotient = Quotient::by(&sum, &span);
    let (iy, iz, _, _) = biproduct_maps(&f.target, &g.target);
    let from_first = quotient.projection.compose(&iy)?;
    let from_second = quotient.projection.compose(&iz)?;
    Ok(Pushout {
        object: quotient.object.clone(),
        from_first,
        from_second,
        quotient,
        first: f.target.clone(),
        second: g.target.clone(),
    })
}

impl Pushout {
    /// The unique map out of the pushout restricting to `a` and `b`, found by
    /// solving `u ∘ projection = [a | b]`. Fails if the cone does not commute
    /// with the original span or the solution is not filtered.
    pub fn universal(&self, a: &FiltMorphism, b: &FiltMorphism) -> Result<FiltMorphism, FiltError> {
        if a.source != self.first || b.source != self.second || a.target != b.target {
            return Err(FiltError::Mismatch("cone legs do not match the pushout".into()));
        }
        let rhs = a.matrix.hstack(&b.matrix);
        let proj = self.quotient.projection.matrix();
        let sol = linalg::solve_matrix(&proj.transpose(), &rhs.transpose())
            .map_err(|e| FiltError::Mismatch(e.to_string()))?
            .ok_or_else(|| FiltError::ConeNotCommuting("legs disagree on the span".into()))?;
        FiltMorphism::new(self.object.clone(), a.target.clone(), sol.transpose())
    }
}

/// Pullback of a cospan `y -> x <- z`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: FiltObject,
    pub to_first: FiltMorphism,
    pub to_second: FiltMorphism,
    sub: Subobject,
    first: FiltObject,
    second: FiltObject,
}

/// The kernel of `(f, -g): y ⊕ z -> x`.
pub fn pullback(f: &FiltMorphism, g: &FiltMorphism) -> Result<Pullback, FiltError> {
    if f.target != g.target {
        return Err(FiltError::Mismatch(format!(
            "pullback needs a common target, got {} and {}",
            f.target, g.target
        )));
    }
    let m = f.matrix.hstack(&-&g.matrix);
    let sum = f.source.direct_sum(&g.source);
    let sub = Subobject::spanned_by(&sum, &linalg::kernel_basis(&m));
    let (_, _, py, pz) = biproduct_maps(&f.source, &g.source);
    let to_first = py.compose(&sub.inclusion)?;
    let to_second = pz.compose(&sub.inclusion)?;
    Ok(Pullback {
        object: sub.object.clone(),
        to_first,
        to_second,
        sub,
        first: f.source.clone(),
        second: g.source.clone(),
    })
}

impl Pullback {
    /// The unique map into the pullback with components `a` and `b`.
    pub fn universal(&self, a: &FiltMorphism, b: &FiltMorphism) -> Result<FiltMorphism, FiltError> {
        if a.target != self.first || b.target != self.second || a.source != b.source {
            return Err(FiltError::Mismatch("cone legs do not match the pullback".into()));
        }
        let stacked = a.matrix.vstack(&b.matrix);
        let sol = linalg::solve_matrix(self.sub.inclusion.matrix(), &stacked)
            .map_err(|e| FiltError::Mismatch(e.to_string()))?
            .ok_or_else(|| FiltError::ConeNotCommuting("legs disagree on the cospan".into()))?;
        FiltMorphism::new(a.source.clone(), self.object.clone(), sol)
    }
}

pub fn tensor(v: &FiltObject, w: &FiltObject) -> FiltObject {
    v.tensor(w)
}

pub fn tensor_mor(f: &FiltMorphism, g: &FiltMorphism) -> FiltMorphism {
    f.tensor(g)
}

pub fn dual(v: &FiltObject) -> FiltObject {
    v.dual()
}

/// Brute-force strictness: `rank(f|F_p) == dim(im f ∩ F_p)` for every jump
/// `p` of either filtration. Independent of the coimage/image route.
pub fn is_strict_by_steps(f: &FiltMorphism) -> bool {
    let mut steps: Vec<i64> = f.source.jumps();
    steps.extend(f.target.jumps());
    steps.sort_unstable();
    steps.dedup();
    let im = linalg::column_space_basis(&f.matrix);
    steps.into_iter().all(|p| {
        let cols: Vec<usize> = (0..f.source.dim()).filter(|&j| f.source.weights[j] <= p).collect();
        let restricted = linalg::rank(&f.matrix.select_columns(&cols));
        // dim(im ∩ F_p) = dim im + dim F_p - dim(im + F_p)
        let fp: Vec<usize> = (0..f.target.dim()).filter(|&i| f.target.weights[i] <= p).collect();
        let mut fp_basis = Matrix::zeros(f.target.dim(), fp.len());
        for (c, &i) in fp.iter().enumerate() {
            fp_basis.set(i, c, Rational::one());
        }
        let sum = linalg::rank(&im.hstack(&fp_basis));
        let inter = im.cols() + fp.len() - sum;
        restricted == inter
    })
}

/// Multiset of weights with multiplicities, for reporting.
pub fn weight_histogram(v: &FiltObject) -> BTreeMap<i64, usize> {
    let mut h = BTreeMap::new();
    for &w in v.weights() {
        *h.entry(w).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn obj(w: &[i64]) -> FiltObject {
        FiltObject::new(w.to_vec())
    }

    fn mor(s: &[i64], t: &[i64], m: &[&[i64]]) -> FiltMorphism {
        let matrix = if t.is_empty() {
            Matrix::zeros(0, s.len())
        } else {
            Matrix::from_i64(m)
        };
        FiltMorphism::new(obj(s), obj(t), matrix).unwrap()
    }

    fn shift() -> FiltMorphism {
        mor(&[0], &[-1], &[&[1]])
    }

    #[test]
    fn rejects_unfiltered_matrix() {
        let err = FiltMorphism::new(obj(&[-1]), obj(&[0]), Matrix::from_i64(&[&[1]])).unwrap_err();
        assert!(matches!(err, FiltError::FiltrationViolated { row: 0, col: 0, .. }));
        let err = FiltMorphism::new(obj(&[0]), obj(&[0]), Matrix::zeros(2, 1)).unwrap_err();
        assert!(matches!(err, FiltError::Shape { .. }));
    }

    #[test]
    fn kernel_examples() {
        let v = obj(&[0, 1, 1]);
        assert_eq!(FiltMorphism::identity(&v).kernel().dim(), 0);
        let z = FiltMorphism::zero(&v, &obj(&[0, 2]));
        assert_eq!(z.kernel().object.weight_profile(), vec![0, 1, 1]);

        let f = mor(&[0, 1], &[0], &[&[1, 1]]);
        let k = f.kernel();
        assert_eq!(k.object.weights(), &[1]);
        let b = k.inclusion.matrix().column(0);
        assert_eq!(b[0], -b[1].clone());
        assert!(k.inclusion.is_strict_mono());
    }

    #[test]
    fn cokernel_examples() {
        let v = obj(&[0, 1]);
        assert_eq!(FiltMorphism::identity(&v).cokernel().dim(), 0);
        let z = FiltMorphism::zero(&obj(&[3]), &v);
        assert_eq!(z.cokernel().object, v);

        let f = mor(&[1], &[0, 1], &[&[1], &[1]]);
        let q = f.cokernel();
        assert_eq!(q.object.weights(), &[0]);
        assert!(q.projection.is_strict_epi());
        assert!((&q.projection.matrix().clone() * f.matrix()).is_zero());
    }

    #[test]
    fn image_and_coimage_of_shift() {
        let f = shift();
        assert_eq!(f.image().object.weights(), &[-1]);
        assert_eq!(f.coimage().object.weights(), &[0]);
        let v = obj(&[2, 0]);
        let id = FiltMorphism::identity(&v);
        assert_eq!(id.image().object.weight_profile(), v.weight_profile());
        assert_eq!(id.coimage().object.weight_profile(), v.weight_profile());
        let z = FiltMorphism::zero(&v, &v);
        assert_eq!(z.image().dim(), 0);
        assert_eq!(z.coimage().dim(), 0);
    }

    #[test]
    fn strictness_examples() {
        assert!(FiltMorphism::identity(&obj(&[0, 1, -2])).is_strict());
        let s = shift();
        assert!(s.is_mono() && s.is_epi());
        assert!(!s.is_strict());
        assert!(!is_strict_by_steps(&s));
        let abelian = FiltMorphism::new(
            obj(&[0, 0]),
            obj(&[0, 0, 0]),
            Matrix::from_i64(&[&[1, 2], &[2, 4], &[0, 0]]),
        )
        .unwrap();
        assert!(abelian.is_strict());
    }

    #[test]
    fn factorizations_recompose() {
        let f = mor(&[0, 0], &[0, 0], &[&[1, 1], &[1, 1]]);
        let fac = f.factor();
        assert_eq!(fac.strict_epi.target().dim(), 1);
        assert!(fac.strict_epi.is_strict_epi());
        assert!(fac.mono.is_mono());
        assert_eq!(fac.recompose(), f);

        let id = FiltMorphism::identity(&obj(&[1, 0]));
        let fac = id.factor();
        assert!(fac.strict_epi.is_iso() && fac.mono.is_iso());

        let z = FiltMorphism::zero(&obj(&[1]), &obj(&[0]));
        let fac = z.factor();
        assert_eq!(fac.strict_epi.target().dim(), 0);
        assert_eq!(fac.recompose(), z);

        let s = shift();
        let im = s.factor_through_image();
        assert!(im.strict_mono.is_strict_mono());
        assert!(im.epi.is_epi() && !im.epi.is_strict());
        assert_eq!(im.recompose(), s);
    }

    #[test]
    fn pushout_examples() {
        let y = obj(&[0, 1]);
        let id = FiltMorphism::identity(&y);
        let p = pushout(&id, &id).unwrap();
        assert_eq!(p.object.weight_profile(), y.weight_profile());

        let z = obj(&[2]);
        let zero = FiltObject::zero();
        let p = pushout(&FiltMorphism::zero(&zero, &zero), &FiltMorphism::zero(&zero, &z)).unwrap();
        assert_eq!(p.object, z);

        // strict mono pushed out along the shift map stays a strict mono
        let incl = mor(&[0], &[0, 1], &[&[1], &[0]]);
        let p = pushout(&shift(), &incl).unwrap();
        assert!(p.from_first.is_strict_mono());

        assert!(pushout(&shift(), &FiltMorphism::identity(&y)).is_err());
    }

    #[test]
    fn pushout_universal_property() {
        let f = shift();
        let g = mor(&[0], &[0, 1], &[&[1], &[0]]);
        let p = pushout(&f, &g).unwrap();
        // a ∘ f = b ∘ g with target weight -1
        let t = obj(&[-1]);
        let a = mor(&[-1], &[-1], &[&[2]]);
        let b = mor(&[0, 1], &[-1], &[&[2, 0]]);
        let u = p.universal(&a, &b).unwrap();
        assert_eq!(u.compose(&p.from_first).unwrap(), a);
        assert_eq!(u.compose(&p.from_second).unwrap(), b);
        let bad = mor(&[0, 1], &[-1], &[&[1, 0]]);
        assert!(p.universal(&a, &bad).is_err());
        assert_eq!(u.target(), &t);
    }

    #[test]
    fn pullback_of_strict_epi() {
        let proj = mor(&[0, 1], &[1], &[&[0, 1]]);
        assert!(proj.is_strict_epi());
        let g = mor(&[2], &[1], &[&[3]]);
        let pb = pullback(&proj, &g).unwrap();
        assert!(pb.to_second.is_strict_epi());
        let a = mor(&[2], &[0, 1], &[&[0], &[3]]);
        let b = FiltMorphism::identity(&obj(&[2]));
        let u = pb.universal(&a, &b).unwrap();
        assert_eq!(pb.to_first.compose(&u).unwrap(), a);
        assert_eq!(pb.to_second.compose(&u).unwrap(), b);
    }

    #[test]
    fn tensor_and_dual() {
        let v = obj(&[3, -1]);
        assert_eq!(v.tensor(&FiltObject::unit()), v);
        assert_eq!(obj(&[0, 1]).tensor(&obj(&[0, 1])).weights(), &[0, 1, 1, 2]);
        assert_eq!(FiltObject::unit().dual(), FiltObject::unit());
        assert_eq!(obj(&[0, 1]).dual().weights(), &[0, -1]);
        assert_eq!(v.dual().dual(), v);

        let g = mor(&[0], &[0, 1], &[&[1], &[0]]);
        assert!(g.is_strict_mono());
        let t = FiltMorphism::identity(&obj(&[1, -1])).tensor(&g);
        assert!(t.is_strict_mono());
        let d = shift().dual();
        assert_eq!(d.source().weights(), &[1]);
        assert_eq!(d.target().weights(), &[0]);
    }

    #[test]
    fn weight_of_vectors() {
        let v = obj(&[0, 2, 1]);
        assert_eq!(v.weight_of(&[rat(1), rat(0), rat(5)]), Some(1));
        assert_eq!(v.weight_of(&[rat(0), rat(0), rat(0)]), None);
        assert_eq!(v.filtration_dim(1), 2);
    }
}
