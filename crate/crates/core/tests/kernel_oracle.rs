//! Nerve dimensions and residuals against the brute-force oracle.

mod common;

use common::oracle::{all_necklaces, library_necklace, Oracle, BIG};
use tan_core::ainfty::fixtures::{dg_pair, m3_fixture, standard_simplex_dg};
use tan_core::exactlin::{Field, SignConvention};
use tan_core::nerve::Nerve;

#[test]
fn exhaustive_counts_on_small_components() {
    let a = standard_simplex_dg(2, Field::Rational);
    let nerve = Nerve::new(&a, SignConvention::Koszul);
    let p = 3;
    let cases: Vec<(usize, Vec<usize>, usize, usize, Option<Vec<usize>>, usize)> = vec![
        (0, vec![0], 0, 0, None, 1),
        (0, vec![0], 1, 1, None, 1),
        (0, vec![0], 0, 1, None, 0),
        (2, vec![0, 2], 0, 2, Some(vec![0, 1, 2]), 1),
        (2, vec![0, 1, 2], 0, 2, Some(vec![0, 1, 2]), 1),
        (2, vec![0, 2], 0, 2, None, 3),
        (2, vec![0, 1, 2], 0, 2, None, 3),
    ];
    for (spine, joints, from, to, labels, expected) in cases {
        let o = Oracle::new(&a, spine, &joints, from, to, labels.as_deref(), p);
        let count = o.count();
        assert_eq!(count, (p as u64).pow(expected as u32), "{joints:?} {labels:?}");
        let t = library_necklace(spine, &joints);
        let lib = match &labels {
            Some(l) => nerve.labelled_space(&t, l).dim(),
            None => nerve.dimension(&t, from, to),
        };
        assert_eq!(lib, expected, "{t} ({from},{to}) {labels:?}");
    }
}

#[test]
fn exhaustive_counts_match_library_on_small_ambient_spaces() {
    let q = Field::Rational;
    for a in [standard_simplex_dg(2, q), dg_pair(q), m3_fixture(q)] {
        let nerve = Nerve::new(&a, SignConvention::Koszul);
        for (spine, joints) in all_necklaces(3) {
            for from in 0..a.object_count() {
                for to in 0..a.object_count() {
                    let o = Oracle::new(&a, spine, &joints, from, to, None, 3);
                    if o.coords.len() > 9 {
                        continue;
                    }
                    let dim = nerve.dimension(&library_necklace(spine, &joints), from, to);
                    assert_eq!(o.count(), 3u64.pow(dim as u32), "{} {joints:?} ({from},{to})", a.name());
                }
            }
        }
    }
}

#[test]
fn elimination_dims_and_residuals_match_library() {
    let q = Field::Rational;
    for a in [standard_simplex_dg(2, q), standard_simplex_dg(3, q), dg_pair(q), m3_fixture(q)] {
        let nerve = Nerve::new(&a, SignConvention::Koszul);
        for (spine, joints) in all_necklaces(3) {
            let t = library_necklace(spine, &joints);
            for from in 0..a.object_count() {
                for to in 0..a.object_count() {
                    let o = Oracle::new(&a, spine, &joints, from, to, None, BIG);
                    let space = nerve.space(&t, from, to);
                    assert_eq!(o.coords.len(), space.ambient_dim(), "{} {t} ({from},{to})", a.name());
                    assert_eq!(o.dim(), space.dim(), "{} {t} ({from},{to})", a.name());
                    for y in &space.basis {
                        assert!(o.residual_free(&o.vector(y)), "{} {t} ({from},{to})", a.name());
                    }
                }
            }
        }
    }
}
