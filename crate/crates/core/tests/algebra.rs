use std::collections::BTreeMap;

use proptest::prelude::*;

use qahom::complexes::{self, Complex};
use qahom::dglie::{self, DgLie};
use qahom::filtvect::FiltObject;
use qahom::graded::{self, GradedAlgebra};
use qahom::koszul;
use qahom::linalg::Matrix;
use qahom::random::{self, Bounds};

/// Counts basis words by (length, degree, weight).
fn profile(a: &GradedAlgebra) -> BTreeMap<(usize, i64, i64), usize> {
    let mut out = BTreeMap::new();
    for w in a.basis() {
        *out.entry((w.len(), a.word_degree(w), a.word_weight(w))).or_insert(0) += 1;
    }
    out
}

/// A complex with zero differential and random objects in degrees -1..=1.
fn graded_space(seed: u64) -> Complex {
    let mut r = random::rng(seed);
    let b = Bounds::default().with_max_dim(2);
    let objects = (0..3).map(|_| random::object(&mut r, b)).collect::<Vec<_>>();
    let diffs = vec![
        Matrix::zeros(objects[1].dim(), objects[0].dim()),
        Matrix::zeros(objects[2].dim(), objects[1].dim()),
    ];
    Complex::from_sequence(-1, objects, diffs).unwrap()
}

/// An abelian dg-Lie algebra on a weight-0 complex, so its differential is
/// homogeneous.
fn abelian_dg(seed: u64) -> DgLie {
    let mut r = random::rng(seed);
    let flat = Bounds {
        min_weight: 0,
        max_weight: 0,
        ..Bounds::default().with_max_dim(2)
    };
    let x = random::complex(&mut r, -1, 3, flat);
    let mut degrees = Vec::new();
    let mut offsets = BTreeMap::new();
    for (&n, v) in x.objects() {
        offsets.insert(n, degrees.len());
        degrees.extend(std::iter::repeat_n(n, v.dim()));
    }
    let dim = degrees.len();
    let mut d = Matrix::zeros(dim, dim);
    for (&n, &off) in &offsets {
        if let Some(&to) = offsets.get(&(n + 1)) {
            d.set_block(to, off, &x.differential_matrix(n));
        }
    }
    DgLie::new(
        (0..dim).map(|i| format!("v{i}")).collect(),
        degrees,
        vec![0; dim],
        d,
        Vec::new(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sym_of_a_sum_is_the_product_of_syms(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (m, n) = (graded_space(s1), graded_space(s2));
        let bound = 4;
        let whole = graded::symmetric_algebra(&m.direct_sum(&n), bound);
        let (sm, sn) = (graded::symmetric_algebra(&m, bound), graded::symmetric_algebra(&n, bound));
        let mut product: BTreeMap<(usize, i64, i64), usize> = BTreeMap::new();
        for ((la, da, wa), ca) in profile(&sm) {
            for ((lb, db, wb), cb) in profile(&sn) {
                if la + lb <= bound {
                    *product.entry((la + lb, da + db, wa + wb)).or_insert(0) += ca * cb;
                }
            }
        }
        prop_assert_eq!(profile(&whole), product);
    }

    #[test]
    fn exterior_of_a_degree_zero_space_stops_at_its_rank(r in 0usize..=4) {
        let v = Complex::concentrated(FiltObject::uniform(r, 0), 0);
        let e = graded::exterior_algebra(&v, 6);
        let lengths = e.dims_by_length();
        for (k, &dim) in lengths.iter().enumerate() {
            let expected = if k > r { 0 } else { (0..k).fold(1, |acc, i| acc * (r - i) / (i + 1)) };
            prop_assert_eq!(dim, expected);
        }
    }

    // Between complexes with zero differential a reduced qiso is a degreewise
    // isomorphism, so a reordered basis stands in for any of them.
    #[test]
    fn free_functors_preserve_graded_dimensions_along_isos(seed in any::<u64>()) {
        let m = graded_space(seed);
        let reordered = Complex::from_sequence(
            -1,
            (-1..=1).map(|n| {
                let mut w = m.object(n).weights().to_vec();
                w.reverse();
                FiltObject::new(w)
            }).collect(),
            vec![Matrix::zeros(m.object(0).dim(), m.object(-1).dim()), Matrix::zeros(m.object(1).dim(), m.object(0).dim())],
        ).unwrap();
        for bound in 1..=3 {
            prop_assert_eq!(graded::tensor_algebra(&m, bound).graded_dims(), graded::tensor_algebra(&reordered, bound).graded_dims());
            prop_assert_eq!(graded::symmetric_algebra(&m, bound).graded_dims(), graded::symmetric_algebra(&reordered, bound).graded_dims());
            prop_assert_eq!(graded::exterior_algebra(&m, bound).graded_dims(), graded::exterior_algebra(&reordered, bound).graded_dims());
        }
    }

    #[test]
    fn cone_of_an_abelian_dg_lie_algebra_is_lie_and_acyclic(seed in any::<u64>()) {
        let g = abelian_dg(seed);
        prop_assert!(dglie::check_lie_axioms(&g).passed());
        let c = dglie::cone_lie(&g);
        prop_assert!(dglie::check_lie_axioms(&c).passed());
        prop_assert!(complexes::is_acyclic(&c.underlying_complex()));
    }
}

#[test]
fn cone_of_library_algebras_is_lie_and_acyclic() {
    for g in [
        dglie::sl2(),
        dglie::heisenberg(),
        dglie::solvable2(),
        dglie::odd_square(),
        dglie::abelian(4),
    ] {
        let c = dglie::cone_lie(&g);
        let report = dglie::check_lie_axioms(&c);
        assert!(report.passed(), "{:?}", report.violations);
        assert!(complexes::is_acyclic(&c.underlying_complex()));
    }
}

#[test]
fn pbw_holds_on_the_library() {
    for g in [
        dglie::sl2(),
        dglie::heisenberg(),
        dglie::solvable2(),
        dglie::odd_square(),
        dglie::abelian(3),
    ] {
        let report = dglie::pbw_check(&g, 5);
        assert!(report.passed(), "{:?}", report.rows);
    }
}

#[test]
fn ce_augmentation_is_a_chain_map_and_iso_in_weight_zero() {
    for g in [dglie::abelian(2), dglie::heisenberg()] {
        let res = dglie::ce_resolution(&g, 4).unwrap();
        let report = dglie::verify_ce_acyclicity(&res, 4);
        assert!(report.augmentation_is_chain_map);
        assert!(report.augmentation_iso_in_weight_zero);
        assert!(report.square_zero_failures.is_empty());
    }
}

// For abelian g the CE resolution is the Koszul complex of the dual:
// a word `ε_S x^a` matches the Koszul basis element with subset S and
// monomial a, and the differentials agree entrywise up to sign.
#[test]
fn abelian_ce_resolution_matches_koszul_basis_for_basis() {
    for n in 1..=3 {
        let g = dglie::abelian(n);
        let res = dglie::ce_resolution(&g, 4).unwrap();
        let k = koszul::fancy_koszul(&FiltObject::uniform(n, 0), 4);
        for total in 0..=4usize {
            let (words, ce) = res.strand(total as i64).unwrap();
            let kz = k.strand(total);
            let idx = k.strand_basis(total);
            for e in 0..=n.min(total) {
                let deg = -(e as i64);
                // CE basis of this degree in the order the strand uses
                let ce_words: Vec<_> = words
                    .iter()
                    .filter(|w| w.iter().filter(|&&i| i < n).count() == e)
                    .collect();
                let as_koszul: Vec<(Vec<u32>, Vec<usize>)> = ce_words
                    .iter()
                    .map(|w| {
                        let subset: Vec<usize> = w.iter().copied().filter(|&i| i < n).collect();
                        let mut mono = vec![0u32; n];
                        for &i in w.iter().filter(|&&i| i >= n) {
                            mono[i - n] += 1;
                        }
                        (mono, subset)
                    })
                    .collect();
                let kz_basis: Vec<(Vec<u32>, Vec<usize>)> = idx[e]
                    .iter()
                    .map(|&j| (k.layer(e)[j].monomial.clone(), k.layer(e)[j].subset.clone()))
                    .collect();
                let mut a = as_koszul.clone();
                let mut b = kz_basis.clone();
                a.sort();
                b.sort();
                assert_eq!(a, b, "n {n} total {total} exterior {e}");
                assert_eq!(ce.object(deg).dim(), kz.object(deg).dim());
                if e == 0 {
                    continue;
                }
                let ce_lower: Vec<(Vec<u32>, Vec<usize>)> = words
                    .iter()
                    .filter(|w| w.iter().filter(|&&i| i < n).count() == e - 1)
                    .map(|w| {
                        let subset: Vec<usize> = w.iter().copied().filter(|&i| i < n).collect();
                        let mut mono = vec![0u32; n];
                        for &i in w.iter().filter(|&&i| i >= n) {
                            mono[i - n] += 1;
                        }
                        (mono, subset)
                    })
                    .collect();
                let kz_lower: Vec<(Vec<u32>, Vec<usize>)> = idx[e - 1]
                    .iter()
                    .map(|&j| (k.layer(e - 1)[j].monomial.clone(), k.layer(e - 1)[j].subset.clone()))
                    .collect();
                let dce = ce.differential_matrix(deg);
                let dkz = kz.differential_matrix(deg);
                for (c, src) in as_koszul.iter().enumerate() {
                    let kc = kz_basis.iter().position(|b| b == src).unwrap();
                    for (r, tgt) in ce_lower.iter().enumerate() {
                        let kr = kz_lower.iter().position(|b| b == tgt).unwrap();
                        let (x, y) = (dce.get(r, c), dkz.get(kr, kc));
                        assert!(
                            x == y || *x == -y,
                            "n {n} total {total}: entry {src:?} -> {tgt:?} is {x} vs {y}"
                        );
                    }
                }
            }
        }
    }
}
