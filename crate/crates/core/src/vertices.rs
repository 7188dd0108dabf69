//! Relative projectivity and vertices.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functors::{induce, restrict};
use crate::groups::SubgroupDescriptor;
use crate::homspaces::{hom_space, is_summand};
use crate::matrices::Matrix;
use crate::modules::GroupModule;

/// Higman's criterion in trace form: `M` is `D`-projective iff the relative
/// trace `Tr_D^G(End_D(M)) = Σ_t t·φ·t^{-1}` contains a unit of `End_G(M)`.
/// The trace image is a subspace of a local ring, so it suffices to test the
/// traces of a basis for nilpotency.
pub fn relatively_projective(m: &GroupModule, sub: &SubgroupDescriptor) -> Result<bool> {
    if sub.ambient != m.group() {
        return Err(Error::NotSubgroup(format!("{sub} is not a subgroup of {}", m.group())));
    }
    if sub.is_whole() || m.dim() == 0 {
        return Ok(m.dim() > 0);
    }
    let res = restrict(m, sub)?;
    let end = hom_space(&res, &res)?;
    let g = m.group();
    let mats = m.all_element_matrices();
    let trans = sub.transversal();
    for phi in &end.basis {
        let mut tr = Matrix::zeros(m.field(), m.dim(), m.dim());
        for &t in &trans {
            let conj = mats[g.index_of(t)].mul(phi)?.mul(&mats[g.index_of(g.inv(t))])?;
            tr = tr.add(&conj)?;
        }
        if !tr.is_nilpotent()? {
            if tr.invert()?.is_none() {
                return Err(Error::NotLocal);
            }
            return Ok(true);
        }
    }
    Ok(false)
}

/// The same decision made literally: is `M` a summand of `Ind_D^G Res_D M`.
pub fn relatively_projective_by_induction(m: &GroupModule, sub: &SubgroupDescriptor) -> Result<bool> {
    let x = induce(&restrict(m, sub)?, sub)?;
    is_summand(m, &x)
}

/// A vertex of the indecomposable `M`, as the canonical representative of
/// its conjugacy class. Descends from `G` through maximal subgroups, testing
/// one subgroup per `G`-class at each step.
pub fn vertex(m: &GroupModule) -> Result<SubgroupDescriptor> {
    if m.dim() == 0 {
        return Err(Error::InvalidParameter("the zero module has no vertex".into()));
    }
    let mut current = m.group().whole();
    loop {
        let mut seen: Vec<SubgroupDescriptor> = Vec::new();
        let candidates: Vec<SubgroupDescriptor> = current
            .maximal_subgroups()
            .into_iter()
            .filter(|e| {
                let rep = e.canonical_representative();
                let fresh = !seen.contains(&rep);
                seen.push(rep);
                fresh
            })
            .collect();
        let verdicts: Vec<Result<bool>> = candidates.par_iter().map(|e| relatively_projective(m, e)).collect();
        let mut next = None;
        for (e, v) in candidates.iter().zip(verdicts) {
            if v? {
                next = Some(*e);
                break;
            }
        }
        match next {
            Some(e) => current = e,
            None => return Ok(current.canonical_representative()),
        }
    }
}
