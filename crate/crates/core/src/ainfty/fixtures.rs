//! Shipped categories and functors.

use std::sync::Arc;

use super::{AInftyCategory, AInftyFunctor, CategoryBuilder};
use crate::exactlin::Field;

/// `A∞[Δ^n]`: objects `0..=n`, `hom(i,j) = K·(i,j)` in degree 0 for `i ≤ j`.
pub fn standard_simplex_dg(n: usize, field: Field) -> AInftyCategory {
    let mut b = CategoryBuilder::new(field, 0);
    b.name(&format!("A∞[Δ^{n}]"));
    for i in 0..=n {
        b.object(&i.to_string()).expect("fresh object");
    }
    let mut arrow = vec![vec![None; n + 1]; n + 1];
    for i in 0..=n {
        for j in i..=n {
            let label = format!("({i},{j})");
            let g = if i == j {
                b.unit(i, &label)
            } else {
                b.generator(i, j, 0, &label)
            }
            .expect("fresh generator");
            arrow[i][j] = Some(g);
        }
    }
    for i in 0..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (ij, jk, ik) = (arrow[i][j].unwrap(), arrow[j][k].unwrap(), arrow[i][k].unwrap());
                b.op(&[ij, jk], &[(ik, field.one())]).expect("valid product");
            }
        }
    }
    b.build().expect("valid simplex category")
}

/// Two objects `x, y`; `hom(x,x)` has `1_x, e` in degree 0 and `h` in degree 1
/// with `∂h = e`; `hom(x,y) = K·f`; products of non-units vanish.
pub fn dg_pair(field: Field) -> AInftyCategory {
    let mut b = CategoryBuilder::new(field, 1);
    b.name("dg-pair");
    let x = b.object("x").unwrap();
    let y = b.object("y").unwrap();
    b.unit(x, "1_x").unwrap();
    b.unit(y, "1_y").unwrap();
    let e = b.generator(x, x, 0, "e").unwrap();
    let h = b.generator(x, x, 1, "h").unwrap();
    b.generator(x, y, 0, "f").unwrap();
    b.op(&[h], &[(e, field.one())]).unwrap();
    super::from_dg(b).expect("dg-pair is a dg-category")
}

/// Objects `0..=3` with `hom(i,j)` as in `A∞[Δ^3]` in degree 0, one extra
/// generator `h ∈ A_1(0,3)` and `m_3((0,1),(1,2),(2,3)) = h`.
pub fn m3_fixture(field: Field) -> AInftyCategory {
    let mut b = CategoryBuilder::new(field, 1);
    b.name("m3-fixture");
    for i in 0..4 {
        b.object(&i.to_string()).unwrap();
    }
    let mut arrow = [[0usize; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let label = format!("({i},{j})");
            arrow[i][j] = if i == j {
                b.unit(i, &label).unwrap()
            } else {
                b.generator(i, j, 0, &label).unwrap()
            };
        }
    }
    let h = b.generator(0, 3, 1, "h").unwrap();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                b.op(&[arrow[i][j], arrow[j][k]], &[(arrow[i][k], field.one())]).unwrap();
            }
        }
    }
    b.op(&[arrow[0][1], arrow[1][2], arrow[2][3]], &[(h, field.one())])
        .unwrap();
    b.build().unwrap()
}

/// One object, degree 0, non-units `x, y` with `m_2(x,x) = y`, `m_2(x,y) = x`.
pub fn nonassociative(field: Field) -> AInftyCategory {
    let mut b = CategoryBuilder::new(field, 0);
    b.name("non-associative");
    let o = b.object("o").unwrap();
    b.unit(o, "1").unwrap();
    let x = b.generator(o, o, 0, "x").unwrap();
    let y = b.generator(o, o, 0, "y").unwrap();
    b.op(&[x, x], &[(y, field.one())]).unwrap();
    b.op(&[x, y], &[(x, field.one())]).unwrap();
    b.build().unwrap()
}

/// Strict endofunctor of [`dg_pair`] doubling `e` and `h`.
pub fn dg_pair_scaling(a: Arc<AInftyCategory>) -> AInftyFunctor {
    let q = a.quiver();
    let field = a.field();
    let mut f = AInftyFunctor::new("scale", a.clone(), a.clone(), vec![0, 1]).unwrap();
    let e = q.lookup(0, 0, 0, "e").unwrap();
    let h = q.lookup(0, 0, 1, "h").unwrap();
    let g = q.lookup(0, 1, 0, "f").unwrap();
    f.set_component(&[e], &[(e, field.from_i64(2))]).unwrap();
    f.set_component(&[h], &[(h, field.from_i64(2))]).unwrap();
    f.set_component(&[g], &[(g, field.one())]).unwrap();
    f
}

/// Strict functor `A∞[Δ^1] → A∞[Δ^2]` sending `1 ↦ 2`.
pub fn simplex_inclusion(source: Arc<AInftyCategory>, target: Arc<AInftyCategory>) -> AInftyFunctor {
    let field = source.field();
    let mut f = AInftyFunctor::new("δ_1", source.clone(), target.clone(), vec![0, 2]).unwrap();
    let s = source.quiver().lookup(0, 1, 0, "(0,1)").unwrap();
    let t = target.quiver().lookup(0, 2, 0, "(0,2)").unwrap();
    f.set_component(&[s], &[(t, field.one())]).unwrap();
    f
}

/// Endofunctor of [`m3_fixture`] with `f_1 = id` and nonzero `f_2`.
pub fn m3_endofunctor(a: Arc<AInftyCategory>) -> AInftyFunctor {
    let q = a.quiver();
    let field = a.field();
    let mut f = AInftyFunctor::identity(a.clone());
    let arrow = |i: usize, j: usize| q.lookup(i, j, 0, &format!("({i},{j})")).unwrap();
    let h = q.lookup(0, 3, 1, "h").unwrap();
    let minus = field.from_i64(-1);
    f.set_component(&[arrow(0, 1), arrow(1, 3)], &[(h, minus.clone())]).unwrap();
    f.set_component(&[arrow(0, 2), arrow(2, 3)], &[(h, minus)]).unwrap();
    f.rename("shear")
}
