use super::{NerveElement, NerveError};
use crate::ainfty::AInftyFunctor;
use crate::exactlin::{apply_blockwise, SignConvention, TensorElement};
use crate::necklace::{injective_index, inert_into};

/// `N(f)_T(y)_g = Σ_{μ: S ↪ U} (-1)^{Σε(S_i) + φ(μ)} (f_{ℓ(S_1)} ⊗ … ⊗ f_{ℓ(S_n)})(y_{g∘μ})`.
pub fn functor_image(
    f: &AInftyFunctor,
    y: &NerveElement,
    conv: SignConvention,
) -> Result<NerveElement, NerveError> {
    y.check_shape(f.source())?;
    let a = f.source();
    let field = a.field();
    let idx = injective_index(&y.necklace);
    let mut out = NerveElement::zero(&y.necklace, f.map_object(y.from), f.map_object(y.to));
    for (gi, g) in idx.maps.iter().enumerate() {
        let mut acc = TensorElement::zero();
        for mu in inert_into(g.source()) {
            let pieces = mu.inert_pieces()?;
            let blocks: Vec<usize> = pieces.iter().map(|s| s.bead_count()).collect();
            let sign = pieces.iter().map(|s| s.epsilon()).sum::<i64>() + mu.phi()?;
            let h = g.compose(&mu)?;
            let x = &y.comps[idx.position(&h).expect("composite is injective")];
            let image = apply_blockwise(x, &blocks, |b| b as i64 - 1, a.quiver(), conv, field, |ins| f.apply(ins))?;
            acc.add_scaled(&image, &field.sign(sign));
        }
        out.comps[gi] = acc;
    }
    Ok(out)
}
