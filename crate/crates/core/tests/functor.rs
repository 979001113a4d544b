use std::sync::Arc;

use tan_core::ainfty::fixtures::{dg_pair, dg_pair_scaling, m3_endofunctor, m3_fixture, simplex_inclusion, standard_simplex_dg};
use tan_core::ainfty::{compose_functors, AInftyFunctor};
use tan_core::exactlin::{Field, SignConvention, TensorElement};
use tan_core::necklace::{maps_between, necklaces_with_spine, Necklace};
use tan_core::nerve::{functor_image, Nerve, NerveElement};

const Q: Field = Field::Rational;
const K: SignConvention = SignConvention::Koszul;

fn small() -> Vec<Necklace> {
    (0..=3).flat_map(necklaces_with_spine).collect()
}

fn bases(nerve: &Nerve, t: &Necklace) -> Vec<NerveElement> {
    let n = nerve.category().object_count();
    (0..n).flat_map(|a| (0..n).flat_map(move |b| nerve.basis(t, a, b))).collect()
}

fn componentwise(f: &AInftyFunctor, y: &NerveElement) -> NerveElement {
    let mut out = NerveElement::zero(&y.necklace, f.map_object(y.from), f.map_object(y.to));
    for (o, c) in out.comps.iter_mut().zip(&y.comps) {
        for (key, coef) in c.terms() {
            let mut acc = TensorElement::basis(Vec::new(), Q).scaled(coef);
            for &g in key {
                let mut image = TensorElement::zero();
                for (h, v) in f.apply(&[g]) {
                    image.add_term(vec![h], &v);
                }
                acc = acc.tensor(&image);
            }
            o.add_assign(&acc);
        }
    }
    out
}

#[test]
fn identity_functor_acts_trivially() {
    let a = Arc::new(m3_fixture(Q));
    let id = AInftyFunctor::identity(a.clone());
    let nerve = Nerve::new(&a, K);
    for t in small() {
        for y in bases(&nerve, &t) {
            assert_eq!(functor_image(&id, &y, K).unwrap(), y);
        }
    }
}

#[test]
fn strict_functor_acts_componentwise() {
    let a = Arc::new(dg_pair(Q));
    let f = dg_pair_scaling(a.clone());
    let nerve = Nerve::new(&a, K);
    for t in small() {
        for y in bases(&nerve, &t) {
            assert_eq!(functor_image(&f, &y, K).unwrap(), componentwise(&f, &y));
        }
    }
}

#[test]
fn shear_images_satisfy_tan_and_differ_from_componentwise() {
    let a = Arc::new(m3_fixture(Q));
    let f = m3_endofunctor(a.clone());
    let nerve = Nerve::new(&a, K);
    let mut differs = false;
    for t in small() {
        for y in bases(&nerve, &t) {
            let fy = functor_image(&f, &y, K).unwrap();
            assert!(nerve.satisfies_tan(&fy));
            differs |= fy != componentwise(&f, &y);
        }
    }
    assert!(differs);
}

#[test]
fn composition_and_naturality_across_categories() {
    let s1 = Arc::new(standard_simplex_dg(1, Q));
    let s2 = Arc::new(standard_simplex_dg(2, Q));
    let inc = simplex_inclusion(s1.clone(), s2.clone());
    let id2 = AInftyFunctor::identity(s2.clone());
    let composite = compose_functors(&id2, &inc).unwrap();
    let src = Nerve::new(&s1, K);
    let tgt = Nerve::new(&s2, K);
    for t in small() {
        for y in bases(&src, &t) {
            let fy = functor_image(&inc, &y, K).unwrap();
            assert!(tgt.satisfies_tan(&fy));
            assert_eq!(functor_image(&composite, &y, K).unwrap(), fy);
            for t1 in small() {
                for h in maps_between(&t1, &t) {
                    let lhs = functor_image(&inc, &src.structure_map(&h, &y).unwrap(), K).unwrap();
                    assert_eq!(lhs, tgt.structure_map(&h, &fy).unwrap());
                }
            }
        }
    }
}

#[test]
fn composites_of_shear() {
    let a = Arc::new(m3_fixture(Q));
    let f = m3_endofunctor(a.clone());
    let ff = compose_functors(&f, &f).unwrap();
    let fff = compose_functors(&f, &ff).unwrap();
    let nerve = Nerve::new(&a, K);
    for t in small() {
        for y in bases(&nerve, &t) {
            let once = functor_image(&f, &y, K).unwrap();
            let twice = functor_image(&f, &once, K).unwrap();
            assert_eq!(functor_image(&ff, &y, K).unwrap(), twice);
            assert_eq!(functor_image(&fff, &y, K).unwrap(), functor_image(&f, &twice, K).unwrap());
        }
    }
}
