//! Finite-dimensional modules over `kG` for the groups of [`crate::groups`].
//!
//! A module stores one matrix per group generator (`x, y` or `g`). The arrow
//! view `α = 1 + y`, `β = 1 + yx` (resp. `γ = 1 + g`) is derived on demand;
//! in characteristic 2 the substitution is its own inverse:
//! `y = 1 + α`, `x = (1 + α)(1 + β)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{Element, Group};
use crate::matrices::Matrix;
use crate::scalars::{Field, Scalar};
use crate::strings::{BandWord, StringWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupModule {
    group: Group,
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

impl GroupModule {
    /// Builds a module from generator matrices and checks the group relations.
    pub fn new(group: Group, field: Field, gens: Vec<Matrix>) -> Result<Self> {
        group.validate()?;
        let names = group.generator_names();
        if gens.len() != names.len() {
            return Err(Error::Dimension(format!("{group} needs {} generator matrices", names.len())));
        }
        let dim = gens[0].rows();
        for (g, name) in gens.iter().zip(names) {
            field.ensure_same(&g.field())?;
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Dimension(format!("action of {name} is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
            }
        }
        let m = GroupModule { group, field, dim, gens };
        m.check_relations()?;
        Ok(m)
    }

    fn unchecked(group: Group, field: Field, dim: usize, gens: Vec<Matrix>) -> Self {
        GroupModule { group, field, dim, gens }
    }

    /// Builds a module from arrow matrices (`[α, β]` or `[γ]`).
    pub fn from_arrows(group: Group, field: Field, arrows: Vec<Matrix>) -> Result<Self> {
        group.validate()?;
        if arrows.len() != group.generator_names().len() {
            return Err(Error::Dimension(format!("{group} needs {} arrow matrices", group.generator_names().len())));
        }
        let dim = arrows[0].rows();
        for a in &arrows {
            field.ensure_same(&a.field())?;
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::Dimension("arrow matrices must be square of one size".into()));
            }
        }
        check_arrow_relations(&group, &arrows)?;
        let id = Matrix::identity(field, dim);
        let gens = match group {
            Group::Dihedral { .. } => {
                let y = id.add(&arrows[0])?;
                let x = y.mul(&id.add(&arrows[1])?)?;
                vec![x, y]
            }
            Group::Cyclic { .. } => vec![id.add(&arrows[0])?],
        };
        GroupModule::new(group, field, gens)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Generator matrices in the order of [`Group::generators`].
    pub fn generator_matrices(&self) -> &[Matrix] {
        &self.gens
    }

    /// Arrow matrices `[α, β]` (dihedral) or `[γ]` (cyclic).
    pub fn arrows(&self) -> Vec<Matrix> {
        let id = Matrix::identity(self.field, self.dim);
        match self.group {
            Group::Dihedral { .. } => {
                let (x, y) = (&self.gens[0], &self.gens[1]);
                let alpha = id.add(y).expect("shapes agree");
                let beta = id.add(&y.mul(x).expect("shapes agree")).expect("shapes agree");
                vec![alpha, beta]
            }
            Group::Cyclic { .. } => vec![id.add(&self.gens[0]).expect("shapes agree")],
        }
    }

    /// Verifies the defining relations of the group on the action matrices.
    pub fn check_relations(&self) -> Result<()> {
        let id = Matrix::identity(self.field, self.dim);
        let fail = |what: &str| Err(Error::Relation(format!("{what} fails for {}", self.group)));
        match self.group {
            Group::Dihedral { .. } => {
                let (x, y) = (&self.gens[0], &self.gens[1]);
                if y.mul(y)? != id {
                    return fail("y^2 = e");
                }
                if x.pow(self.group.rotation_order() as u64)? != id {
                    return fail("x^(2^(n-1)) = e");
                }
                let yx = y.mul(x)?;
                if yx.mul(&yx)? != id {
                    return fail("yxy = x^-1");
                }
            }
            Group::Cyclic { order } => {
                if self.gens[0].pow(order as u64)? != id {
                    return fail("g^order = e");
                }
            }
        }
        Ok(())
    }

    pub fn element_matrix(&self, g: Element) -> Matrix {
        match self.group {
            Group::Dihedral { .. } => {
                let rot = self.gens[0].pow(g.rot as u64).expect("square");
                if g.refl {
                    self.gens[1].mul(&rot).expect("square")
                } else {
                    rot
                }
            }
            Group::Cyclic { .. } => self.gens[0].pow(g.rot as u64).expect("square"),
        }
    }

    /// Matrices of all group elements, in the order of [`Group::elements`].
    pub fn all_element_matrices(&self) -> Vec<Matrix> {
        let n = self.group.rotation_order() as usize;
        let mut out = Vec::with_capacity(self.group.order() as usize);
        let mut p = Matrix::identity(self.field, self.dim);
        for _ in 0..n {
            let next = p.mul(&self.gens[0]).expect("square");
            out.push(p);
            p = next;
        }
        if self.group.is_dihedral() {
            let reflections: Vec<Matrix> = out.iter().map(|r| self.gens[1].mul(r).expect("square")).collect();
            out.extend(reflections);
        }
        out
    }

    /// Column basis of `rad M`, the span of the images of all arrows.
    pub fn radical(&self) -> Matrix {
        let arrows = self.arrows();
        let mut stacked = arrows[0].clone();
        for a in &arrows[1..] {
            stacked = stacked.hstack(a).expect("same rows");
        }
        stacked.column_space()
    }

    pub fn top_dim(&self) -> usize {
        self.dim - self.radical().cols()
    }

    pub fn direct_sum(&self, other: &GroupModule) -> Result<GroupModule> {
        self.ensure_compatible(other)?;
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.block_diag(b)).collect::<Result<Vec<_>>>()?;
        Ok(GroupModule::unchecked(self.group, self.field, self.dim + other.dim, gens))
    }

    pub fn ensure_compatible(&self, other: &GroupModule) -> Result<()> {
        if self.group != other.group {
            return Err(Error::AlgebraMismatch(format!("{} vs {}", self.group, other.group)));
        }
        self.field.ensure_same(&other.field)
    }

    /// Contragredient module: `g` acts by the transpose of `ρ(g^-1)`.
    pub fn dual(&self) -> GroupModule {
        let gens = self
            .group
            .generators()
            .into_iter()
            .map(|g| self.element_matrix(self.group.inv(g)).transpose())
            .collect();
        GroupModule::unchecked(self.group, self.field, self.dim, gens)
    }

    /// Exchanges the two arrows, i.e. twists by `y -> yx, x -> x^-1`.
    pub fn swap_arrows(&self) -> Result<GroupModule> {
        if !self.group.is_dihedral() {
            return Err(Error::AlgebraMismatch("arrow swap needs a dihedral group".into()));
        }
        let a = self.arrows();
        GroupModule::from_arrows(self.group, self.field, vec![a[1].clone(), a[0].clone()])
    }

    /// The conjugate module `M^g` with `h` acting as `ρ(g h g^-1)`.
    pub fn conjugate(&self, g: Element) -> GroupModule {
        let gens = self
            .group
            .generators()
            .into_iter()
            .map(|h| self.element_matrix(self.group.conjugate(g, h)))
            .collect();
        GroupModule::unchecked(self.group, self.field, self.dim, gens)
    }

    /// Extension of scalars from GF(2).
    pub fn lift(&self, field: Field) -> Result<GroupModule> {
        if field == self.field {
            return Ok(self.clone());
        }
        let gens = self.gens.iter().map(|g| g.lift(field)).collect::<Result<Vec<_>>>()?;
        Ok(GroupModule::unchecked(self.group, field, self.dim, gens))
    }

    /// The submodule spanned by the (independent) columns of `basis`, with
    /// the action written in that basis.
    pub fn submodule(&self, basis: &Matrix) -> Result<GroupModule> {
        if basis.rows() != self.dim {
            return Err(Error::Dimension("submodule basis has the wrong length".into()));
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let image = g.mul(basis)?;
            let action = basis
                .solve_many(&image)?
                .ok_or_else(|| Error::InvalidParameter("subspace is not invariant".into()))?;
            gens.push(action);
        }
        Ok(GroupModule::unchecked(self.group, self.field, basis.cols(), gens))
    }

    /// Same matrices viewed over a different (isomorphic) group descriptor.
    pub(crate) fn with_group(group: Group, field: Field, dim: usize, gens: Vec<Matrix>) -> GroupModule {
        GroupModule::unchecked(group, field, dim, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("module serializes")
    }

    pub fn from_json(text: &str) -> Result<GroupModule> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

fn check_arrow_relations(group: &Group, arrows: &[Matrix]) -> Result<()> {
    let dim = arrows[0].rows();
    let zero = Matrix::zeros(arrows[0].field(), dim, dim);
    match *group {
        Group::Dihedral { n } => {
            let (a, b) = (&arrows[0], &arrows[1]);
            if a.mul(a)? != zero {
                return Err(Error::Relation("alpha^2 = 0".into()));
            }
            if b.mul(b)? != zero {
                return Err(Error::Relation("beta^2 = 0".into()));
            }
            let k = 1u64 << (n - 2);
            if a.mul(b)?.pow(k)? != b.mul(a)?.pow(k)? {
                return Err(Error::Relation(format!("(alpha beta)^{k} = (beta alpha)^{k}")));
            }
        }
        Group::Cyclic { order } => {
            if arrows[0].pow(order as u64)? != zero {
                return Err(Error::Relation(format!("gamma^{order} = 0")));
            }
        }
    }
    Ok(())
}

/// The string module `M(C)` over `kD_{2^n}`, `n = C.algebra_n()`, with basis
/// `e_0, .., e_|C|`.
pub fn string_module(word: &StringWord, field: Field) -> Result<GroupModule> {
    let group = Group::dihedral(word.algebra_n())?;
    let dim = word.len() + 1;
    let mut arrows = [Matrix::zeros(field, dim, dim), Matrix::zeros(field, dim, dim)];
    for (idx, l) in word.letters().iter().enumerate() {
        let i = idx + 1;
        let m = &mut arrows[l.arrow as usize];
        if l.inverse {
            m.set(i - 1, i, 1);
        } else {
            m.set(i, i - 1, 1);
        }
    }
    GroupModule::from_arrows(group, field, arrows.to_vec())
}

/// The Jordan block with `λ` on the diagonal and 1 above it.
pub fn jordan_block(field: Field, m: usize, lambda: Scalar) -> Matrix {
    Matrix::from_fn(field, m, m, |i, j| {
        if i == j {
            lambda.bits()
        } else if j == i + 1 {
            1
        } else {
            0
        }
    })
}

/// The band module `M(C, m, λ)`: blocks `V_0 .. V_{|C|-1}` of size `m`
/// (block-major basis), identity blocks along the first `|C| - 1` letters and
/// `J_m(λ)` from `V_0` to `V_{|C|-1}` along the final inverse letter. Bands
/// ending in a direct letter are first rotated to end in an inverse one.
pub fn band_module(band: &BandWord, m: usize, lambda: Scalar, field: Field) -> Result<GroupModule> {
    field.ensure_same(&lambda.field())?;
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("band parameter must be nonzero".into()));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("band multiplicity must be positive".into()));
    }
    let word = band.inverse_terminated();
    let group = Group::dihedral(word.algebra_n())?;
    let len = word.len();
    let dim = m * len;
    let mut arrows = [Matrix::zeros(field, dim, dim), Matrix::zeros(field, dim, dim)];
    let jordan = jordan_block(field, m, lambda);
    for (idx, l) in word.letters().iter().enumerate() {
        let s = idx + 1;
        let arrow = &mut arrows[l.arrow as usize];
        if s < len {
            let (from, to) = if l.inverse { (s, s - 1) } else { (s - 1, s) };
            for k in 0..m {
                arrow.set(to * m + k, from * m + k, 1);
            }
        } else {
            let to = len - 1;
            for r in 0..m {
                for c in 0..m {
                    arrow.set(to * m + r, c, jordan.get(r, c));
                }
            }
        }
    }
    GroupModule::from_arrows(group, field, arrows.to_vec())
}

/// The uniserial module `M(γ^i)` over `k C_order`: dimension `i + 1`, `γ`
/// shifting `e_j` to `e_{j+1}`.
pub fn uniserial_module(order: u32, i: usize, field: Field) -> Result<GroupModule> {
    let group = Group::cyclic(order)?;
    if i >= order as usize {
        return Err(Error::InvalidParameter(format!("M(gamma^{i}) needs i < {order}")));
    }
    let gamma = Matrix::from_fn(field, i + 1, i + 1, |r, c| u16::from(r == c + 1));
    GroupModule::from_arrows(group, field, vec![gamma])
}

/// The left regular module, basis `e_h` in element order.
pub fn regular_module(group: Group, field: Field) -> Result<GroupModule> {
    group.validate()?;
    let els = group.elements();
    let gens = group
        .generators()
        .into_iter()
        .map(|g| {
            let mut m = Matrix::zeros(field, els.len(), els.len());
            for (col, &h) in els.iter().enumerate() {
                m.set(group.index_of(group.mul(g, h)), col, 1);
            }
            m
        })
        .collect();
    Ok(GroupModule::unchecked(group, field, els.len(), gens))
}

pub fn trivial_module(group: Group, field: Field) -> Result<GroupModule> {
    group.validate()?;
    let gens = group.generators().iter().map(|_| Matrix::identity(field, 1)).collect();
    Ok(GroupModule::unchecked(group, field, 1, gens))
}

pub fn direct_sum_all(parts: &[GroupModule]) -> Result<GroupModule> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::InvalidParameter("empty direct sum".into()))?;
    rest.iter().try_fold(first.clone(), |acc, p| acc.direct_sum(p))
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    algebra: Group,
    field_m: u32,
    dim: usize,
    action: BTreeMap<String, Matrix>,
}

impl Serialize for GroupModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let action = self
            .group
            .generator_names()
            .iter()
            .zip(&self.gens)
            .map(|(n, m)| (n.to_string(), m.clone()))
            .collect();
        ModuleJson { algebra: self.group, field_m: self.field.degree(), dim: self.dim, action }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ModuleJson::deserialize(d)?;
        let field = Field::new(j.field_m).map_err(D::Error::custom)?;
        let mut gens = Vec::new();
        for name in j.algebra.generator_names() {
            let m = j.action.get(*name).ok_or_else(|| D::Error::custom(format!("missing action of {name}")))?;
            gens.push(m.clone());
        }
        let module = GroupModule::new(j.algebra, field, gens).map_err(D::Error::custom)?;
        if module.dim != j.dim {
            return Err(D::Error::custom(format!("dim {} does not match matrices of size {}", j.dim, module.dim)));
        }
        Ok(module)
    }
}
