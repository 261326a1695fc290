//! Seeded generators of random filtered objects, morphisms, complexes and
//! chain maps with small integer entries.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complexes::{ChainMap, Complex};
use crate::filtvect::{FiltMorphism, FiltObject};
use crate::linalg::{rat, Matrix, Rational};
use crate::model;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bounds for random instances. Weights are drawn uniformly from
/// `min_weight..=max_weight` and matrix entries from `-entry..=entry`.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_dim: usize,
    pub min_weight: i64,
    pub max_weight: i64,
    pub entry: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_dim: 4,
            min_weight: -2,
            max_weight: 2,
            entry: 2,
        }
    }
}

impl Bounds {
    pub fn with_max_dim(self, max_dim: usize) -> Self {
        Bounds { max_dim, ..self }
    }
}

pub fn object_of_dim<R: Rng>(rng: &mut R, dim: usize, b: Bounds) -> FiltObject {
    FiltObject::new((0..dim).map(|_| rng.gen_range(b.min_weight..=b.max_weight)).collect())
}

pub fn object<R: Rng>(rng: &mut R, b: Bounds) -> FiltObject {
    let dim = rng.gen_range(0..=b.max_dim);
    object_of_dim(rng, dim, b)
}

pub fn nonzero_object<R: Rng>(rng: &mut R, b: Bounds) -> FiltObject {
    let dim = rng.gen_range(1..=b.max_dim.max(1));
    object_of_dim(rng, dim, b)
}

fn entry<R: Rng>(rng: &mut R, b: Bounds) -> Rational {
    rat(rng.gen_range(-b.entry..=b.entry))
}

/// A random filtered morphism: every entry allowed by the filtrations is
/// drawn independently.
pub fn morphism<R: Rng>(rng: &mut R, source: &FiltObject, target: &FiltObject, b: Bounds) -> FiltMorphism {
    let mut m = Matrix::zeros(target.dim(), source.dim());
    for i in 0..target.dim() {
        for j in 0..source.dim() {
            if target.weights()[i] <= source.weights()[j] {
                m.set(i, j, entry(rng, b));
            }
        }
    }
    FiltMorphism::new(source.clone(), target.clone(), m).expect("only allowed entries are set")
}

/// A random strict mono into `target`: the image or kernel inclusion of a
/// random morphism.
pub fn strict_mono_into<R: Rng>(rng: &mut R, target: &FiltObject, b: Bounds) -> FiltMorphism {
    let other = object(rng, b);
    if rng.gen_bool(0.5) {
        morphism(rng, &other, target, b).image().inclusion
    } else {
        morphism(rng, target, &other, b).kernel().inclusion
    }
}

/// A random strict epi out of `source`: the coimage or cokernel projection of
/// a random morphism.
pub fn strict_epi_from<R: Rng>(rng: &mut R, source: &FiltObject, b: Bounds) -> FiltMorphism {
    let other = object(rng, b);
    if rng.gen_bool(0.5) {
        morphism(rng, source, &other, b).coimage().projection
    } else {
        morphism(rng, &other, source, b).cokernel().projection
    }
}

/// A random complex with support in `start..start + len`. Each differential
/// is a random morphism out of the cokernel of the previous one, so `d² = 0`
/// holds by construction.
pub fn complex<R: Rng>(rng: &mut R, start: i64, len: usize, b: Bounds) -> Complex {
    let objects: Vec<FiltObject> = (0..len).map(|_| object(rng, b)).collect();
    let mut diffs = Vec::new();
    let mut prev: Option<Matrix> = None;
    for w in objects.windows(2) {
        let (src, tgt) = (&w[0], &w[1]);
        let d = match &prev {
            None => morphism(rng, src, tgt, b).into_matrix(),
            Some(p) => {
                let q = crate::filtvect::Quotient::by(src, p);
                let r = morphism(rng, &q.object, tgt, b);
                r.matrix() * q.projection.matrix()
            }
        };
        prev = Some(d.clone());
        diffs.push(d);
    }
    Complex::from_sequence(start, objects, diffs).expect("differentials square to zero")
}

/// A random chain map as an integer combination of a basis of all chain
/// maps `x -> y`.
pub fn chain_map<R: Rng>(rng: &mut R, x: &Complex, y: &Complex, b: Bounds) -> ChainMap {
    let basis = model::chain_map_basis(x, y);
    combine(rng, ChainMap::zero(x, y), &basis, b)
}

pub fn combine<R: Rng>(rng: &mut R, base: ChainMap, basis: &[ChainMap], b: Bounds) -> ChainMap {
    let mut comps: BTreeMap<i64, Matrix> = base
        .degrees()
        .into_iter()
        .map(|n| (n, base.component_matrix(n)))
        .collect();
    for g in basis {
        let c = entry(rng, b);
        for n in g.degrees() {
            let m = &g.component_matrix(n).scale(&c);
            let slot = comps.entry(n).or_insert_with(|| Matrix::zeros(m.rows(), m.cols()));
            *slot = &*slot + m;
        }
    }
    ChainMap::new(base.source().clone(), base.target().clone(), comps)
        .expect("combination of chain maps is a chain map")
}

/// A degreewise strict mono of complexes: the kernel inclusion of a random
/// chain map out of a random complex.
pub fn strict_mono_chain<R: Rng>(rng: &mut R, start: i64, len: usize, b: Bounds) -> ChainMap {
    let x = complex(rng, start, len, b);
    let y = complex(rng, start, len, b);
    let f = chain_map(rng, &x, &y, b);
    f.kernel().1
}

/// The complex `z -> z` in degrees `n, n + 1` whose differential is the
/// identity matrix with target weights lowered by `drop`. It is acyclic for
/// every `drop >= 0` and contractible in the filtered sense only when
/// `drop == 0`.
pub fn acyclic_block(z: &FiltObject, n: i64, drop: i64) -> Complex {
    let target = z.shifted_weights(-drop);
    let d = FiltMorphism::new(z.clone(), target, Matrix::identity(z.dim()))
        .expect("lowering weights keeps the identity filtered");
    Complex::two_term(&d, n)
}

/// A projective trivial fibration `y ⊕ k -> y` where `k` is a sum of
/// acyclic blocks. Blocks with `drop > 0` appear only when `allow_drop`.
pub fn trivial_fibration<R: Rng>(rng: &mut R, start: i64, len: usize, allow_drop: bool, b: Bounds) -> ChainMap {
    let y = complex(rng, start, len, b);
    let mut k = Complex::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let z = nonzero_object(rng, b.with_max_dim(2));
        let n = rng.gen_range(start..start + len as i64 - 1);
        let drop = if allow_drop { rng.gen_range(0..=1) } else { 0 };
        k = k.direct_sum(&acyclic_block(&z, n, drop));
    }
    let x = y.direct_sum(&k);
    let components = x
        .support()
        .into_iter()
        .filter(|n| !y.object(*n).is_zero())
        .map(|n| {
            let ydim = y.object(n).dim();
            let kdim = k.object(n).dim();
            (n, Matrix::identity(ydim).hstack(&Matrix::zeros(ydim, kdim)))
        })
        .collect();
    ChainMap::new(x, y, components).expect("projection onto a summand")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::classify;

    #[test]
    fn generators_are_deterministic() {
        let b = Bounds::default();
        let a = complex(&mut rng(7), 0, 4, b);
        let c = complex(&mut rng(7), 0, 4, b);
        assert_eq!(a, c);
    }

    #[test]
    fn generated_maps_have_their_class() {
        let b = Bounds::default();
        let mut r = rng(1);
        for _ in 0..40 {
            let w = object(&mut r, b);
            assert!(strict_mono_into(&mut r, &w, b).is_strict_mono());
            assert!(strict_epi_from(&mut r, &w, b).is_strict_epi());
            let f = strict_mono_chain(&mut r, -1, 3, b.with_max_dim(3));
            assert!(classify(&f).degreewise_strict_mono);
            let p = trivial_fibration(&mut r, -1, 3, true, b.with_max_dim(2));
            assert!(classify(&p).projective_trivial_fibration());
        }
    }

    #[test]
    fn acyclic_blocks() {
        let z = FiltObject::new(vec![0, 1]);
        for drop in 0..3 {
            assert!(crate::complexes::is_acyclic(&acyclic_block(&z, 0, drop)));
        }
    }
}
