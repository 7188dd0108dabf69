//! Restriction, induction and (co)syzygies.

use crate::error::{Error, Result};
use crate::groups::{Element, SubgroupDescriptor};
use crate::matrices::Matrix;
use crate::modules::{direct_sum_all, regular_module, GroupModule};

/// Restriction to `sub`; the result lives over `sub.abstract_group()`.
pub fn restrict(m: &GroupModule, sub: &SubgroupDescriptor) -> Result<GroupModule> {
    if sub.ambient != m.group() {
        return Err(Error::NotSubgroup(format!("{sub} is a subgroup of {}, module is over {}", sub.ambient, m.group())));
    }
    let gens: Vec<Matrix> = sub.generator_images().into_iter().map(|g| m.element_matrix(g)).collect();
    Ok(GroupModule::with_group(sub.abstract_group(), m.field(), m.dim(), gens))
}

/// The twist of a module over `sub.abstract_group()` by an element `g` of
/// the ambient group normalizing `sub`: `h` acts as `m(g h g^-1)`.
pub fn twist_by(m: &GroupModule, sub: &SubgroupDescriptor, g: Element) -> Result<GroupModule> {
    if m.group() != sub.abstract_group() {
        return Err(Error::AlgebraMismatch(format!("module over {} is not over {sub}", m.group())));
    }
    if sub.conjugate_by(g) != *sub {
        return Err(Error::InvalidParameter(format!("{} does not normalize {sub}", sub.ambient.format_element(g))));
    }
    let ambient = sub.ambient;
    let pullback = sub.pullback_table();
    let gens = m
        .group()
        .generators()
        .into_iter()
        .map(|h| m.element_matrix(pullback[&ambient.conjugate(g, sub.embed(h))]))
        .collect();
    Ok(GroupModule::with_group(m.group(), m.field(), m.dim(), gens))
}

/// `Ind_sub^G m` for a module over `sub.abstract_group()`. The basis is
/// coset-major: `t_i ⊗ e_k` sits at `i * dim + k`, with `t_i` the
/// transversal of [`SubgroupDescriptor::transversal`].
pub fn induce(m: &GroupModule, sub: &SubgroupDescriptor) -> Result<GroupModule> {
    if m.group() != sub.abstract_group() {
        return Err(Error::AlgebraMismatch(format!(
            "module over {} cannot be induced from {sub} (abstractly {})",
            m.group(),
            sub.abstract_group()
        )));
    }
    let g = sub.ambient;
    let trans = sub.transversal();
    let members: Vec<_> = sub.element_set().into_iter().collect();
    let mut coset = vec![0usize; g.order() as usize];
    for (j, &t) in trans.iter().enumerate() {
        for &h in &members {
            coset[g.index_of(g.mul(t, h))] = j;
        }
    }
    let pullback = sub.pullback_table();
    let local = m.all_element_matrices();
    let abstract_group = sub.abstract_group();
    let d = m.dim();
    let total = d * trans.len();
    let mut gens = Vec::new();
    for s in g.generators() {
        let mut big = Matrix::zeros(m.field(), total, total);
        for (i, &t) in trans.iter().enumerate() {
            let st = g.mul(s, t);
            let j = coset[g.index_of(st)];
            let h = g.mul(g.inv(trans[j]), st);
            let block = &local[abstract_group.index_of(pullback[&h])];
            for r in 0..d {
                for c in 0..d {
                    big.set(j * d + r, i * d + c, block.get(r, c));
                }
            }
        }
        gens.push(big);
    }
    Ok(GroupModule::with_group(g, m.field(), total, gens))
}

/// Standard basis vectors completing a basis of the radical, i.e. lifts of
/// a basis of the top `M / rad M`.
pub fn top_lifts(m: &GroupModule) -> Vec<Vec<u16>> {
    let mut current = m.radical();
    let mut rank = current.cols();
    let mut lifts = Vec::new();
    for k in 0..m.dim() {
        if rank == m.dim() {
            break;
        }
        let mut e = vec![0u16; m.dim()];
        e[k] = 1;
        let candidate = current.hstack(&Matrix::column(m.field(), &e)).expect("same rows");
        let r = candidate.rank();
        if r > rank {
            current = candidate;
            rank = r;
            lifts.push(e);
        }
    }
    lifts
}

/// Kernel of the minimal free cover `(kG)^t -> M`, `t = top_dim(M)`. Free
/// summands of `M` are not stripped first.
pub fn syzygy(m: &GroupModule) -> Result<GroupModule> {
    if m.dim() == 0 {
        return Err(Error::InvalidParameter("syzygy of the zero module".into()));
    }
    let g = m.group();
    let lifts = top_lifts(m);
    let mats = m.all_element_matrices();
    let mut columns = Vec::with_capacity(lifts.len() * g.order() as usize);
    for v in &lifts {
        let v = Matrix::column(m.field(), v);
        for h in g.elements() {
            columns.push(mats[g.index_of(h)].mul(&v)?.col_vec(0));
        }
    }
    let cover = Matrix::from_columns(m.field(), m.dim(), &columns);
    let free = direct_sum_all(&vec![regular_module(g, m.field())?; lifts.len()])?;
    free.submodule(&cover.kernel_matrix())
}

/// `Ω^{-1} M`, computed as the dual of `Ω` of the dual.
pub fn cosyzygy(m: &GroupModule) -> Result<GroupModule> {
    Ok(syzygy(&m.dual())?.dual())
}

/// `Ω^n M` for any integer `n` (`n = 0` returns `M`).
pub fn omega_power(m: &GroupModule, n: i32) -> Result<GroupModule> {
    let mut cur = m.clone();
    for _ in 0..n.unsigned_abs() {
        cur = if n > 0 { syzygy(&cur)? } else { cosyzygy(&cur)? };
    }
    Ok(cur)
}
