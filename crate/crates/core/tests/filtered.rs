use proptest::prelude::*;

use qahom::filtvect::{self, FiltMorphism, FiltObject};
use qahom::linalg::{self, Matrix};
use qahom::random::{self, Bounds};

fn flat() -> Bounds {
    Bounds {
        min_weight: 0,
        max_weight: 0,
        ..Bounds::default()
    }
}

/// Same column span, tested by ranks.
fn same_span(a: &Matrix, b: &Matrix) -> bool {
    let r = linalg::rank(&a.hstack(b));
    r == linalg::rank(a) && r == linalg::rank(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // With all weights 0 the filtered constructions are plain linear algebra.
    #[test]
    fn weight_zero_agrees_with_linear_algebra(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let s = random::object(&mut r, flat());
        let t = random::object(&mut r, flat());
        let f = random::morphism(&mut r, &s, &t, flat());
        let rank = linalg::rank(f.matrix());
        prop_assert!(f.is_strict());
        let k = f.kernel();
        prop_assert_eq!(k.dim(), s.dim() - rank);
        prop_assert!(same_span(k.inclusion.matrix(), &linalg::kernel_basis(f.matrix())));
        let i = f.image();
        prop_assert_eq!(i.dim(), rank);
        prop_assert!(same_span(i.inclusion.matrix(), f.matrix()));
        prop_assert_eq!(f.cokernel().object.dim(), t.dim() - rank);
        prop_assert_eq!(f.coimage().object.dim(), rank);
    }

    #[test]
    fn tensor_weights_add_and_maps_stay_filtered(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default().with_max_dim(3);
        let (v, w) = (random::object(&mut r, b), random::object(&mut r, b));
        let vw = v.tensor(&w);
        for i in 0..v.dim() {
            for j in 0..w.dim() {
                prop_assert_eq!(vw.weights()[i * w.dim() + j], v.weights()[i] + w.weights()[j]);
            }
        }
        let (v2, w2) = (random::object(&mut r, b), random::object(&mut r, b));
        let f = random::morphism(&mut r, &v, &v2, b);
        let g = random::morphism(&mut r, &w, &w2, b);
        let fg = f.tensor(&g);
        prop_assert!(FiltMorphism::new(vw, v2.tensor(&w2), fg.matrix().clone()).is_ok());
    }

    #[test]
    fn kernel_and_cokernel_are_strict(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default();
        let s = random::object(&mut r, b);
        let t = random::object(&mut r, b);
        let f = random::morphism(&mut r, &s, &t, b);
        let k = f.kernel();
        prop_assert!(k.inclusion.is_strict_mono());
        prop_assert!(f.compose(&k.inclusion).unwrap().matrix().is_zero());
        let c = f.cokernel();
        prop_assert!(c.projection.is_strict_epi());
        prop_assert!(c.projection.compose(&f).unwrap().matrix().is_zero());
        // strict iff the canonical coimage -> image map is an isomorphism
        prop_assert_eq!(f.is_strict(), f.coimage_to_image().is_iso());
    }

    #[test]
    fn dual_negates_weights_and_preserves_filtered_maps(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default();
        let s = random::object(&mut r, b);
        let t = random::object(&mut r, b);
        let f = random::morphism(&mut r, &s, &t, b);
        let neg: Vec<i64> = s.weights().iter().map(|w| -w).collect();
        prop_assert_eq!(s.dual(), FiltObject::new(neg));
        let d = f.dual();
        prop_assert_eq!(d.source(), &t.dual());
        prop_assert_eq!(d.matrix(), &f.matrix().transpose());
    }

    #[test]
    fn pushout_and_pullback_squares_commute(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let b = Bounds::default();
        let a = random::object(&mut r, b);
        let c = random::object(&mut r, b);
        let x = random::object(&mut r, b);
        let f = random::morphism(&mut r, &x, &a, b);
        let g = random::morphism(&mut r, &x, &c, b);
        let po = filtvect::pushout(&f, &g).unwrap();
        prop_assert_eq!(
            po.from_first.compose(&f).unwrap(),
            po.from_second.compose(&g).unwrap()
        );
        let y = random::object(&mut r, b);
        let p = random::morphism(&mut r, &a, &y, b);
        let q = random::morphism(&mut r, &c, &y, b);
        let pb = filtvect::pullback(&p, &q).unwrap();
        prop_assert_eq!(
            p.compose(&pb.to_first).unwrap(),
            q.compose(&pb.to_second).unwrap()
        );
    }
}
