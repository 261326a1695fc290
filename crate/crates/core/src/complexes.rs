//! Bounded cochain complexes of filtered vector spaces.
//!
//! Differentials go up, `d^n: X^n -> X^{n+1}`. Reduced cohomology is
//! `H^n = coker(X^{n-1} -> ker d^n)` computed in the filtered category, so it
//! carries the quotient of the induced filtration on cycles.
//!
//! Sign conventions: `X[k]^n = X^{n+k}` with differential `(-1)^k d`; the
//! mapping cone of `f: X -> Y` is `Y^n ⊕ X^{n+1}` with
//! `d(y, x) = (d y + f x, -d x)`; on `X ⊗ Y` the differential is
//! `d x ⊗ y + (-1)^p x ⊗ d y` for `x` in degree `p`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::filtvect::{check_filtered, FiltError, FiltMorphism, FiltObject, Quotient, Subobject};
use crate::linalg::{rat, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("differential in degree {degree}: {source}")]
    Differential { degree: i64, source: FiltError },
    #[error("d^{} ∘ d^{degree} is nonzero: entry ({row}, {col}) is {value}", degree + 1)]
    NotSquareZero {
        degree: i64,
        row: usize,
        col: usize,
        value: String,
    },
    #[error("component in degree {degree}: {source}")]
    Component { degree: i64, source: FiltError },
    #[error("chain map does not commute with differentials in degree {degree}")]
    NotChainMap { degree: i64 },
    #[error("{0}")]
    Mismatch(String),
    #[error("not composable: {0}")]
    NotComposable(String),
}

/// A bounded cochain complex. Degrees absent from the maps are zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Complex {
    objects: BTreeMap<i64, FiltObject>,
    differentials: BTreeMap<i64, Matrix>,
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.objects.iter().map(|(n, v)| format!("{n}: {v}")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Complex {
    /// Validates shapes, filtration preservation and `d ∘ d = 0`.
    pub fn new(
        objects: BTreeMap<i64, FiltObject>,
        differentials: BTreeMap<i64, Matrix>,
    ) -> Result<Complex, ComplexError> {
        let objects: BTreeMap<i64, FiltObject> = objects.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let zero = FiltObject::ZERO;
        let mut kept = BTreeMap::new();
        for (n, d) in differentials {
            let src = objects.get(&n).unwrap_or(&zero);
            let tgt = objects.get(&(n + 1)).unwrap_or(&zero);
            check_filtered(src, tgt, &d).map_err(|source| ComplexError::Differential { degree: n, source })?;
            if !d.is_zero() {
                kept.insert(n, d);
            }
        }
        let x = Complex {
            objects,
            differentials: kept,
        };
        for (&n, d) in &x.differentials {
            if let Some(next) = x.differentials.get(&(n + 1)) {
                if let Some((row, col, v)) = (next * d).first_nonzero() {
                    return Err(ComplexError::NotSquareZero {
                        degree: n,
                        row,
                        col,
                        value: crate::linalg::format_rational(&v),
                    });
                }
            }
        }
        Ok(x)
    }

    pub(crate) fn new_unchecked(objects: BTreeMap<i64, FiltObject>, differentials: BTreeMap<i64, Matrix>) -> Complex {
        if cfg!(debug_assertions) {
            Complex::new(objects, differentials).expect("internally built complex is valid")
        } else {
            Complex {
                objects: objects.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
                differentials: differentials.into_iter().filter(|(_, d)| !d.is_zero()).collect(),
            }
        }
    }

    pub fn zero() -> Complex {
        Complex::default()
    }

    /// `v` in degree `n`.
    pub fn concentrated(v: FiltObject, n: i64) -> Complex {
        Complex::new_unchecked(BTreeMap::from([(n, v)]), BTreeMap::new())
    }

    /// Two-term complex with `f.source()` in degree `n` and `f.target()` in
    /// degree `n + 1`.
    pub fn two_term(f: &FiltMorphism, n: i64) -> Complex {
        Complex::new_unchecked(
            BTreeMap::from([(n, f.source().clone()), (n + 1, f.target().clone())]),
            BTreeMap::from([(n, f.matrix().clone())]),
        )
    }

    /// Builds from consecutive objects starting in degree `start`, with
    /// `differentials[i]` leaving degree `start + i`.
    pub fn from_sequence(
        start: i64,
        objects: Vec<FiltObject>,
        differentials: Vec<Matrix>,
    ) -> Result<Complex, ComplexError> {
        let objs = objects
            .into_iter()
            .enumerate()
            .map(|(i, v)| (start + i as i64, v))
            .collect();
        let diffs = differentials
            .into_iter()
            .enumerate()
            .map(|(i, d)| (start + i as i64, d))
            .collect();
        Complex::new(objs, diffs)
    }

    pub fn object(&self, n: i64) -> &FiltObject {
        static ZERO: FiltObject = FiltObject::ZERO;
        self.objects.get(&n).unwrap_or(&ZERO)
    }

    pub fn differential_matrix(&self, n: i64) -> Matrix {
        self.differentials
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.object(n + 1).dim(), self.object(n).dim()))
    }

    pub fn differential(&self, n: i64) -> FiltMorphism {
        FiltMorphism::new_unchecked(
            self.object(n).clone(),
            self.object(n + 1).clone(),
            self.differential_matrix(n),
        )
    }

    pub fn objects(&self) -> &BTreeMap<i64, FiltObject> {
        &self.objects
    }

    /// Degrees with a nonzero object, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.objects.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.objects.values().map(FiltObject::dim).sum()
    }

    pub fn shift(&self, k: i64) -> Complex {
        let sign = if k.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
        Complex::new_unchecked(
            self.objects.iter().map(|(&n, v)| (n - k, v.clone())).collect(),
            self.differentials
                .iter()
                .map(|(&n, d)| (n - k, d.scale(&sign)))
                .collect(),
        )
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let degrees: BTreeSet<i64> = self.objects.keys().chain(other.objects.keys()).copied().collect();
        let objects = degrees
            .iter()
            .map(|&n| (n, self.object(n).direct_sum(other.object(n))))
            .collect();
        let differentials = degrees
            .iter()
            .map(|&n| (n, self.differential_matrix(n).block_diag(&other.differential_matrix(n))))
            .collect();
        Complex::new_unchecked(objects, differentials)
    }

    /// Tensor product with the Koszul sign on the second factor.
    pub fn tensor(&self, other: &Complex) -> Complex {
        let layout = TensorLayout::new(self, other);
        let mut objects = BTreeMap::new();
        let mut differentials = BTreeMap::new();
        for (&n, blocks) in &layout.blocks {
            let mut w = FiltObject::zero();
            for b in blocks {
                w = w.direct_sum(&self.object(b.p).tensor(other.object(b.q)));
            }
            objects.insert(n, w);
        }
        for (&n, blocks) in &layout.blocks {
            let rows = layout.dim(n + 1);
            let mut d = Matrix::zeros(rows, layout.dim(n));
            for b in blocks {
                let x = self.object(b.p);
                let y = other.object(b.q);
                // d x ⊗ y lands in block (p+1, q)
                if let Some(off) = layout.offset(n + 1, b.p + 1) {
                    let dx = self.differential_matrix(b.p);
                    d.set_block(off, b.offset, &dx.kron(&Matrix::identity(y.dim())));
                }
                // (-1)^p x ⊗ d y lands in block (p, q+1)
                if let Some(off) = layout.offset(n + 1, b.p) {
                    let sign = if b.p.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
                    let dy = other.differential_matrix(b.q).scale(&sign);
                    d.set_block(off, b.offset, &Matrix::identity(x.dim()).kron(&dy));
                }
            }
            differentials.insert(n, d);
        }
        Complex::new_unchecked(objects, differentials)
    }
}

#[derive(Clone, Copy, Debug)]
struct TensorBlock {
    p: i64,
    q: i64,
    offset: usize,
}

/// Placement of the summands `X^p ⊗ Y^q` inside `(X ⊗ Y)^{p+q}`, ordered by `p`.
struct TensorLayout {
    blocks: BTreeMap<i64, Vec<TensorBlock>>,
    dims: BTreeMap<i64, usize>,
}

impl TensorLayout {
    fn new(x: &Complex, y: &Complex) -> TensorLayout {
        let mut blocks: BTreeMap<i64, Vec<TensorBlock>> = BTreeMap::new();
        let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
        for (&p, a) in &x.objects {
            for (&q, b) in &y.objects {
                let n = p + q;
                let dim = dims.entry(n).or_insert(0);
                blocks.entry(n).or_default().push(TensorBlock { p, q, offset: *dim });
                *dim += a.dim() * b.dim();
            }
        }
        TensorLayout { blocks, dims }
    }

    fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    fn offset(&self, n: i64, p: i64) -> Option<usize> {
        self.blocks.get(&n)?.iter().find(|b| b.p == p).map(|b| b.offset)
    }
}

/// A degree-0 map of complexes commuting with the differentials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    components: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    pub fn new(source: Complex, target: Complex, components: BTreeMap<i64, Matrix>) -> Result<ChainMap, ComplexError> {
        let mut kept = BTreeMap::new();
        for (n, m) in components {
            check_filtered(source.object(n), target.object(n), &m)
                .map_err(|source| ComplexError::Component { degree: n, source })?;
            if !m.is_zero() {
                kept.insert(n, m);
            }
        }
        let f = ChainMap {
            source,
            target,
            components: kept,
        };
        if let Some(n) = f.first_noncommuting_degree() {
            return Err(ComplexError::NotChainMap { degree: n });
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Complex, target: Complex, components: BTreeMap<i64, Matrix>) -> ChainMap {
        if cfg!(debug_assertions) {
            ChainMap::new(source, target, components).expect("internally built chain map is valid")
        } else {
            ChainMap {
                source,
                target,
                components: components.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
            }
        }
    }

    /// Some degree `n` with `d_Y^n f^n != f^{n+1} d_X^n`, if any.
    pub fn first_noncommuting_degree(&self) -> Option<i64> {
        let degrees: BTreeSet<i64> = self
            .source
            .objects
            .keys()
            .chain(self.target.objects.keys())
            .flat_map(|&n| [n - 1, n])
            .collect();
        degrees.into_iter().find(|&n| {
            let left = &self.target.differential_matrix(n) * &self.component_matrix(n);
            let right = &self.component_matrix(n + 1) * &self.source.differential_matrix(n);
            left != right
        })
    }

    pub fn identity(x: &Complex) -> ChainMap {
        let components = x.objects.iter().map(|(&n, v)| (n, Matrix::identity(v.dim()))).collect();
        ChainMap::new_unchecked(x.clone(), x.clone(), components)
    }

    pub fn zero(x: &Complex, y: &Complex) -> ChainMap {
        ChainMap::new_unchecked(x.clone(), y.clone(), BTreeMap::new())
    }

    /// A single filtered map as a chain map between complexes concentrated in
    /// degree `n`.
    pub fn concentrated(f: &FiltMorphism, n: i64) -> ChainMap {
        ChainMap::new_unchecked(
            Complex::concentrated(f.source().clone(), n),
            Complex::concentrated(f.target().clone(), n),
            BTreeMap::from([(n, f.matrix().clone())]),
        )
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component_matrix(&self, n: i64) -> Matrix {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.object(n).dim(), self.source.object(n).dim()))
    }

    pub fn component(&self, n: i64) -> FiltMorphism {
        FiltMorphism::new_unchecked(
            self.source.object(n).clone(),
            self.target.object(n).clone(),
            self.component_matrix(n),
        )
    }

    /// Degrees where source or target is nonzero.
    pub fn degrees(&self) -> Vec<i64> {
        let d: BTreeSet<i64> = self
            .source
            .objects
            .keys()
            .chain(self.target.objects.keys())
            .copied()
            .collect();
        d.into_iter().collect()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap, ComplexError> {
        if first.target != self.source {
            return Err(ComplexError::NotComposable(
                "target of the first map differs from source of the second".into(),
            ));
        }
        let components = first
            .degrees()
            .into_iter()
            .chain(self.degrees())
            .map(|n| (n, &self.component_matrix(n) * &first.component_matrix(n)))
            .collect();
        Ok(ChainMap::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            components,
        ))
    }

    pub fn shift(&self, k: i64) -> ChainMap {
        ChainMap::new_unchecked(
            self.source.shift(k),
            self.target.shift(k),
            self.components.iter().map(|(&n, m)| (n - k, m.clone())).collect(),
        )
    }

    pub fn direct_sum(&self, other: &ChainMap) -> ChainMap {
        let degrees: BTreeSet<i64> = self.degrees().into_iter().chain(other.degrees()).collect();
        let components = degrees
            .into_iter()
            .map(|n| (n, self.component_matrix(n).block_diag(&other.component_matrix(n))))
            .collect();
        ChainMap::new_unchecked(
            self.source.direct_sum(&other.source),
            self.target.direct_sum(&other.target),
            components,
        )
    }

    /// `(a, b): X ⊕ Y -> Z` from `a: X -> Z` and `b: Y -> Z`.
    pub fn copair(a: &ChainMap, b: &ChainMap) -> Result<ChainMap, ComplexError> {
        if a.target != b.target {
            return Err(ComplexError::Mismatch("copair legs have different targets".into()));
        }
        let source = a.source.direct_sum(&b.source);
        let components = source
            .support()
            .into_iter()
            .map(|n| (n, a.component_matrix(n).hstack(&b.component_matrix(n))))
            .collect();
        Ok(ChainMap::new_unchecked(source, a.target.clone(), components))
    }

    /// `(a; b): X -> Y ⊕ Z` from `a: X -> Y` and `b: X -> Z`.
    pub fn pair(a: &ChainMap, b: &ChainMap) -> Result<ChainMap, ComplexError> {
        if a.source != b.source {
            return Err(ComplexError::Mismatch("pair legs have different sources".into()));
        }
        let target = a.target.direct_sum(&b.target);
        let components = target
            .support()
            .into_iter()
            .map(|n| (n, a.component_matrix(n).vstack(&b.component_matrix(n))))
            .collect();
        Ok(ChainMap::new_unchecked(a.source.clone(), target, components))
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.components.iter().map(|(&n, m)| (n, -m)).collect(),
        )
    }

    pub fn tensor(&self, other: &ChainMap) -> ChainMap {
        let src = self.source.tensor(&other.source);
        let tgt = self.target.tensor(&other.target);
        let sl = TensorLayout::new(&self.source, &other.source);
        let tl = TensorLayout::new(&self.target, &other.target);
        let mut components = BTreeMap::new();
        for (&n, blocks) in &sl.blocks {
            let mut m = Matrix::zeros(tl.dim(n), sl.dim(n));
            for b in blocks {
                let Some(off) = tl.offset(n, b.p) else { continue };
                if self.target.object(b.p).is_zero() || other.target.object(b.q).is_zero() {
                    continue;
                }
                let block = self.component_matrix(b.p).kron(&other.component_matrix(b.q));
                m.set_block(off, b.offset, &block);
            }
            components.insert(n, m);
        }
        ChainMap::new_unchecked(src, tgt, components)
    }

    pub fn is_degreewise_mono(&self) -> bool {
        self.degrees().into_iter().all(|n| self.component(n).is_mono())
    }

    pub fn is_degreewise_epi(&self) -> bool {
        self.degrees().into_iter().all(|n| self.component(n).is_epi())
    }

    pub fn is_degreewise_strict_mono(&self) -> bool {
        self.degrees().into_iter().all(|n| self.component(n).is_strict_mono())
    }

    pub fn is_degreewise_strict_epi(&self) -> bool {
        self.degrees().into_iter().all(|n| self.component(n).is_strict_epi())
    }

    /// Degreewise kernel with the induced differential, and its inclusion.
    pub fn kernel(&self) -> (Complex, ChainMap) {
        let subs: BTreeMap<i64, Subobject> = self
            .source
            .objects
            .keys()
            .map(|&n| (n, self.component(n).kernel()))
            .collect();
        let objects = subs.iter().map(|(&n, s)| (n, s.object.clone())).collect();
        let mut differentials = BTreeMap::new();
        for (&n, s) in &subs {
            if let Some(next) = subs.get(&(n + 1)) {
                let d = &(&next.coords * &self.source.differential_matrix(n)) * s.inclusion.matrix();
                differentials.insert(n, d);
            }
        }
        let ker = Complex::new_unchecked(objects, differentials);
        let incl = subs.iter().map(|(&n, s)| (n, s.inclusion.matrix().clone())).collect();
        let inclusion = ChainMap::new_unchecked(ker.clone(), self.source.clone(), incl);
        (ker, inclusion)
    }

    /// Degreewise cokernel with the induced differential, and the projection.
    pub fn cokernel(&self) -> (Complex, ChainMap) {
        let quotients: BTreeMap<i64, Quotient> = self
            .target
            .objects
            .keys()
            .map(|&n| (n, Quotient::by(self.target.object(n), &self.component_matrix(n))))
            .collect();
        let objects = quotients.iter().map(|(&n, q)| (n, q.object.clone())).collect();
        let mut differentials = BTreeMap::new();
        for (&n, q) in &quotients {
            if let Some(next) = quotients.get(&(n + 1)) {
                let d = &(next.projection.matrix() * &self.target.differential_matrix(n)) * &q.section;
                differentials.insert(n, d);
            }
        }
        let coker = Complex::new_unchecked(objects, differentials);
        let proj = quotients
            .iter()
            .map(|(&n, q)| (n, q.projection.matrix().clone()))
            .collect();
        let projection = ChainMap::new_unchecked(self.target.clone(), coker.clone(), proj);
        (coker, projection)
    }
}

/// Cycles and the cohomology quotient in one degree.
#[derive(Clone, Debug)]
pub struct CohomologyData {
    pub degree: i64,
    /// `ker d^n` with the induced filtration.
    pub cycles: Subobject,
    /// `ker d^n / im d^{n-1}` with the quotient filtration.
    pub quotient: Quotient,
}

impl CohomologyData {
    pub fn object(&self) -> &FiltObject {
        &self.quotient.object
    }

    /// Columns are cycle representatives of the cohomology basis.
    pub fn representatives(&self) -> Matrix {
        self.cycles.inclusion.matrix() * &self.quotient.section
    }
}

pub fn cohomology_data(x: &Complex, n: i64) -> CohomologyData {
    let cycles = x.differential(n).kernel();
    // d^{n-1} lands in the cycles, so it corestricts through the coordinates
    let incoming = &cycles.coords * &x.differential_matrix(n - 1);
    let quotient = Quotient::by(&cycles.object, &incoming);
    CohomologyData {
        degree: n,
        cycles,
        quotient,
    }
}

/// `H^n(X) = coker(X^{n-1} -> ker d^n)` as a filtered object.
pub fn reduced_cohomology(x: &Complex, n: i64) -> FiltObject {
    cohomology_data(x, n).quotient.object
}

/// `H^n` in every degree of the support.
pub fn cohomology(x: &Complex) -> BTreeMap<i64, FiltObject> {
    x.support().into_iter().map(|n| (n, reduced_cohomology(x, n))).collect()
}

/// True when the reduced cohomology vanishes in every degree.
pub fn is_acyclic(x: &Complex) -> bool {
    x.support().into_iter().all(|n| reduced_cohomology(x, n).is_zero())
}

/// `H^n(f): H^n(X) -> H^n(Y)`.
pub fn induced_map(f: &ChainMap, n: i64) -> FiltMorphism {
    let hx = cohomology_data(&f.source, n);
    let hy = cohomology_data(&f.target, n);
    let image = &f.component_matrix(n) * &hx.representatives();
    let in_cycles = &hy.cycles.coords * &image;
    let m = hy.quotient.projection.matrix() * &in_cycles;
    FiltMorphism::new(hx.quotient.object, hy.quotient.object, m).expect("induced map on cohomology is filtered")
}

/// Whether every `H^n(f)` is an isomorphism of filtered objects (bijective
/// with filtered inverse).
pub fn is_reduced_qiso(f: &ChainMap) -> bool {
    first_non_iso_degree(f).is_none()
}

/// A degree witnessing that `f` is not a reduced quasi-isomorphism.
pub fn first_non_iso_degree(f: &ChainMap) -> Option<i64> {
    f.degrees().into_iter().find(|&n| !induced_map(f, n).is_iso())
}

/// `cone(f)^n = Y^n ⊕ X^{n+1}`, `d(y, x) = (d y + f x, -d x)`.
pub fn cone(f: &ChainMap) -> Complex {
    let x = &f.source;
    let y = &f.target;
    let degrees: BTreeSet<i64> = y
        .objects
        .keys()
        .copied()
        .chain(x.objects.keys().map(|n| n - 1))
        .collect();
    let objects = degrees
        .iter()
        .map(|&n| (n, y.object(n).direct_sum(x.object(n + 1))))
        .collect();
    let differentials = degrees
        .iter()
        .map(|&n| {
            let (y0, x1) = (y.object(n).dim(), x.object(n + 1).dim());
            let (y1, x2) = (y.object(n + 1).dim(), x.object(n + 2).dim());
            let mut d = Matrix::zeros(y1 + x2, y0 + x1);
            d.set_block(0, 0, &y.differential_matrix(n));
            d.set_block(0, y0, &f.component_matrix(n + 1));
            d.set_block(y1, y0, &-&x.differential_matrix(n + 1));
            (n, d)
        })
        .collect();
    Complex::new_unchecked(objects, differentials)
}

/// `Y -> cone(f)` and `cone(f) -> X[1]`.
pub fn cone_sequence(f: &ChainMap) -> (ChainMap, ChainMap) {
    let c = cone(f);
    let x = &f.source;
    let y = &f.target;
    let mut incl = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for n in c.support() {
        let (ydim, xdim) = (y.object(n).dim(), x.object(n + 1).dim());
        let mut i = Matrix::zeros(ydim + xdim, ydim);
        i.set_block(0, 0, &Matrix::identity(ydim));
        let mut p = Matrix::zeros(xdim, ydim + xdim);
        p.set_block(0, ydim, &Matrix::identity(xdim));
        incl.insert(n, i);
        proj.insert(n, p);
    }
    (
        ChainMap::new_unchecked(y.clone(), c.clone(), incl),
        ChainMap::new_unchecked(c, x.shift(1), proj),
    )
}

pub fn shift(x: &Complex, k: i64) -> Complex {
    x.shift(k)
}

/// `0 -> A -i-> B -p-> C -> 0` is strictly exact: `i` strict mono, `p` strict
/// epi, `ker p = im i`. Errors when the maps do not compose to zero.
pub fn strict_exact_check(i: &FiltMorphism, p: &FiltMorphism) -> Result<bool, ComplexError> {
    let composite = p.compose(i).map_err(|e| ComplexError::NotComposable(e.to_string()))?;
    if !composite.matrix().is_zero() {
        return Err(ComplexError::NotComposable("p ∘ i is nonzero".into()));
    }
    Ok(i.is_strict_mono() && p.is_strict_epi() && i.rank() + p.rank() == i.target().dim())
}

/// Degreewise version of [`strict_exact_check`].
pub fn strict_exact_check_chain(i: &ChainMap, p: &ChainMap) -> Result<bool, ComplexError> {
    if i.target != p.source {
        return Err(ComplexError::NotComposable("middle complexes differ".into()));
    }
    let degrees: BTreeSet<i64> = i.degrees().into_iter().chain(p.degrees()).collect();
    let mut ok = true;
    for n in degrees {
        ok &= strict_exact_check(&i.component(n), &p.component(n))?;
    }
    Ok(ok)
}
