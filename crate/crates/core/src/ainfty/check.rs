use serde::Serialize;

use super::{AInftyCategory, AInftyFunctor};
use crate::exactlin::{apply_blockwise, apply_graded_op, GenId, SignConvention, TensorElement};
use crate::necklace::epsilon_g;

/// A nonzero residual at a basis tuple.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub arity: usize,
    pub inputs: Vec<String>,
    pub residual: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub subject: String,
    pub kmax: usize,
    pub tuples_checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    fn new(check: &str, subject: &str, kmax: usize) -> Self {
        CheckReport {
            check: check.to_string(),
            subject: subject.to_string(),
            kmax,
            tuples_checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Smallest arity with a violation.
    pub fn first_failing_arity(&self) -> Option<usize> {
        self.violations.iter().map(|v| v.arity).min()
    }

    pub fn summary(&self) -> String {
        match self.first_failing_arity() {
            None => format!("{} on {}: pass", self.check, self.subject),
            Some(k) => format!(
                "{} on {}: {} violations, first at k = {k}",
                self.check,
                self.subject,
                self.violations.len()
            ),
        }
    }

    fn record(&mut self, a: &AInftyCategory, arity: usize, tuple: &[GenId], residual: &TensorElement, target: &AInftyCategory) {
        if residual.is_zero() {
            return;
        }
        self.violations.push(Violation {
            check: self.check.clone(),
            arity,
            inputs: tuple.iter().map(|&g| a.quiver().describe(g)).collect(),
            residual: residual
                .terms()
                .map(|(k, c)| {
                    let key = k
                        .iter()
                        .map(|&g| target.quiver().describe(g))
                        .collect::<Vec<_>>()
                        .join("⊗");
                    (key, c.to_string())
                })
                .collect(),
        });
    }
}

fn apply_m(a: &AInftyCategory, x: &TensorElement, slot: usize, arity: usize, start: usize) -> TensorElement {
    apply_graded_op(
        x,
        slot,
        arity,
        arity as i64 - 2,
        start,
        a.quiver(),
        SignConvention::Koszul,
        a.field(),
        |ins, _| a.m(ins),
    )
    .expect("arity fits")
}

/// `Σ (-1)^{r+st} m_{r+1+t}(id^r ⊗ m_s ⊗ id^t)` on one basis tuple.
pub fn relation_residual(a: &AInftyCategory, tuple: &[GenId]) -> TensorElement {
    let f = a.field();
    let k = tuple.len();
    let start = a.source(tuple[0]);
    let x = TensorElement::basis(tuple.to_vec(), f);
    let mut acc = TensorElement::zero();
    for s in 1..=k {
        for r in 0..=k - s {
            let t = k - r - s;
            let inner = apply_m(a, &x, r, s, start);
            if inner.is_zero() {
                continue;
            }
            let outer = apply_m(a, &inner, 0, r + 1 + t, start);
            acc.add_scaled(&outer, &f.sign((r + s * t) as i64));
        }
    }
    acc
}

/// Checks the A∞-relations on every composable tuple of arity `1..=kmax`.
pub fn check_relations(a: &AInftyCategory, kmax: usize) -> CheckReport {
    let mut report = CheckReport::new("ainfty-relations", a.name(), kmax);
    for k in 1..=kmax {
        for tuple in a.composable_tuples(k) {
            report.tuples_checked += 1;
            let res = relation_residual(a, &tuple);
            report.record(a, k, &tuple, &res, a);
        }
    }
    report
}

/// Checks that units are degree-0 cycles acting as two-sided identities and
/// annihilated by every higher product up to arity `max_degree + 2`.
pub fn check_units(a: &AInftyCategory) -> CheckReport {
    let kmax = a.max_degree() + 2;
    let mut report = CheckReport::new("units", a.name(), kmax);
    let f = a.field();
    for x in 0..a.object_count() {
        let u = a.unit(x);
        report.tuples_checked += 1;
        let ok = a.degree(u) == 0 && a.source(u) == x && a.target(u) == x && a.m(&[u]).is_empty();
        if !ok {
            report.violations.push(Violation {
                check: "units".into(),
                arity: 1,
                inputs: vec![a.quiver().describe(u)],
                residual: vec![("not a degree-0 cycle".into(), "1".into())],
            });
        }
    }
    for k in 2..=kmax {
        for tuple in a.composable_tuples(k) {
            let Some(pos) = tuple.iter().position(|&g| a.is_unit(g)) else {
                continue;
            };
            report.tuples_checked += 1;
            let value = {
                let mut t = TensorElement::zero();
                for (g, c) in a.m(&tuple) {
                    t.add_term(vec![g], &c);
                }
                t
            };
            let mut expected = TensorElement::zero();
            if k == 2 {
                expected.add_term(vec![tuple[1 - pos]], &f.one());
            }
            let res = value.sub(&expected);
            report.record(a, k, &tuple, &res, a);
        }
    }
    report
}

fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for mut rest in compositions(k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ_{i_1+…+i_r=k} (-1)^{ε_g(i)} g_r(f_{i_1} ⊗ … ⊗ f_{i_r})` applied to `x`,
/// where `g` is given by `outer` on the intermediate category.
pub(crate) fn compose_sum<F>(
    f: &AInftyFunctor,
    mid: &AInftyCategory,
    x: &TensorElement,
    start: usize,
    k: usize,
    mut outer: F,
    outer_degree: impl Fn(usize) -> i64,
) -> TensorElement
where
    F: FnMut(&[GenId]) -> Vec<(GenId, crate::exactlin::Scalar)>,
{
    let field = mid.field();
    let mut acc = TensorElement::zero();
    for comp in compositions(k) {
        let sign = field.sign(epsilon_g(&comp.iter().map(|&i| i as i64).collect::<Vec<_>>()));
        let inner = apply_blockwise(
            x,
            &comp,
            |i| i as i64 - 1,
            f.source().quiver(),
            SignConvention::Koszul,
            field,
            |ins| f.apply(ins),
        )
        .expect("blocks fit");
        if inner.is_zero() {
            continue;
        }
        let r = comp.len();
        let out = apply_graded_op(
            &inner,
            0,
            r,
            outer_degree(r),
            f.map_object(start),
            mid.quiver(),
            SignConvention::Koszul,
            field,
            |ins, _| outer(ins),
        )
        .expect("arity fits");
        acc.add_scaled(&out, &sign);
    }
    acc
}

/// Left side minus right side of the functor relation on one basis tuple.
pub fn functor_residual(f: &AInftyFunctor, tuple: &[GenId]) -> TensorElement {
    let a = f.source();
    let b = f.target();
    let field = a.field();
    let k = tuple.len();
    let start = a.source(tuple[0]);
    let x = TensorElement::basis(tuple.to_vec(), field);
    let mut lhs = TensorElement::zero();
    for s in 1..=k {
        for r in 0..=k - s {
            let t = k - r - s;
            let inner = apply_m(a, &x, r, s, start);
            if inner.is_zero() {
                continue;
            }
            let outer = apply_graded_op(
                &inner,
                0,
                r + 1 + t,
                (r + t) as i64,
                start,
                a.quiver(),
                SignConvention::Koszul,
                field,
                |ins, _| f.apply(ins),
            )
            .expect("arity fits");
            lhs.add_scaled(&outer, &field.sign((r + s * t) as i64));
        }
    }
    let rhs = compose_sum(f, b, &x, start, k, |ins| b.m(ins), |r| r as i64 - 2);
    lhs.sub(&rhs)
}

/// Checks the functor relations and unit conditions up to arity `kmax`.
pub fn check_functor(f: &AInftyFunctor, kmax: usize) -> CheckReport {
    let a = f.source();
    let b = f.target();
    let mut report = CheckReport::new("functor-relations", f.name(), kmax);
    for x in 0..a.object_count() {
        report.tuples_checked += 1;
        let image = f.apply(&[a.unit(x)]);
        let expected = vec![(b.unit(f.map_object(x)), b.field().one())];
        if image != expected {
            report.violations.push(Violation {
                check: "functor-units".into(),
                arity: 1,
                inputs: vec![a.quiver().describe(a.unit(x))],
                residual: vec![("f_1(1_x) != 1_{f(x)}".into(), "1".into())],
            });
        }
    }
    for k in 1..=kmax {
        for tuple in a.composable_tuples(k) {
            report.tuples_checked += 1;
            if k > 1 && tuple.iter().any(|&g| a.is_unit(g)) && !f.apply(&tuple).is_empty() {
                report.violations.push(Violation {
                    check: "functor-units".into(),
                    arity: k,
                    inputs: tuple.iter().map(|&g| a.quiver().describe(g)).collect(),
                    residual: vec![("f_k with a unit input".into(), "1".into())],
                });
            }
            let res = functor_residual(f, &tuple);
            report.record(a, k, &tuple, &res, b);
        }
    }
    report
}
