mod common;

use common::dg::dg_violations;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tan_core::ainfty::fixtures::{dg_pair, standard_simplex_dg};
use tan_core::ainfty::AInftyCategory;
use tan_core::exactlin::{Field, SignConvention, TensorElement};
use tan_core::nerve::Nerve;
use tan_core::quasicat::{assembled_family, perturb, random_member, sequences, SimplexCollection};

fn random_collection(a: &AInftyCategory, n: usize, rng: &mut ChaCha8Rng) -> SimplexCollection {
    let mut objects: Vec<usize> = (0..=n).map(|_| rng.gen_range(0..a.object_count())).collect();
    objects.sort_unstable();
    let mut s = SimplexCollection::zero(n, objects.clone());
    for seq in sequences(n) {
        let mut v = TensorElement::zero();
        for &g in a.quiver().basis(objects[seq[0]], objects[*seq.last().unwrap()], seq.len() - 2) {
            let c = *[0i64, 1, -1, 2].choose(rng).unwrap();
            v.add_term(vec![g], &a.field().from_i64(c));
        }
        s.set(seq, v);
    }
    s
}

fn tan_member(nerve: &Nerve, a: &AInftyCategory, s: &SimplexCollection) -> bool {
    assembled_family(a, s).unwrap().iter().all(|(_, y)| nerve.satisfies_tan(y))
}

fn compare(a: &AInftyCategory, trials: usize, seed: u64) -> (usize, usize) {
    let nerve = Nerve::new(a, SignConvention::Koszul);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut members, mut non) = (0, 0);
    for t in 0..trials {
        let n = 1 + t % 3;
        let s = match t % 3 {
            0 => random_member(a, n, &mut rng, 5000).unwrap(),
            1 => {
                let m = random_member(a, n, &mut rng, 5000).unwrap();
                perturb(a, &m, &mut rng).unwrap_or(m)
            }
            _ => random_collection(a, n, &mut rng),
        };
        let dg = dg_violations(a, &s).is_empty();
        assert_eq!(dg, tan_member(&nerve, a, &s), "{} trial {t}", a.name());
        if dg {
            members += 1;
        } else {
            non += 1;
        }
    }
    (members, non)
}

#[test]
fn dg_predicate_agrees_with_tan_on_dg_pair() {
    let (members, non) = compare(&dg_pair(Field::Rational), 200, 11);
    assert!(members >= 50 && non >= 50, "{members} members, {non} non-members");
}

#[test]
fn dg_predicate_agrees_with_tan_on_simplex_category() {
    let (members, non) = compare(&standard_simplex_dg(3, Field::Rational), 200, 12);
    assert!(members >= 50 && non >= 50, "{members} members, {non} non-members");
}

#[test]
fn dg_predicate_agrees_over_a_prime_field() {
    let (members, non) = compare(&dg_pair(Field::prime(7).unwrap()), 100, 13);
    assert!(members > 0 && non > 0);
}
