//! Hom spaces, the summand and isomorphism decisions, Fitting splits and a
//! seeded best-effort decomposition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::{BitMatrix, Matrix};
use crate::modules::GroupModule;
use crate::scalars::Field;

/// A basis of `Hom_G(M, N)`; each element is a `dim N x dim M` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves `f · P = Q · f` for every pair `(P, Q)`; unknown `f[i][k]` is
/// column `i * dm + k`.
fn intertwiner_kernel(field: Field, pairs: &[(&Matrix, &Matrix)], dm: usize, dn: usize) -> Vec<Vec<u16>> {
    let unknowns = dm * dn;
    let rows = pairs.len() * unknowns;
    if unknowns == 0 {
        return Vec::new();
    }
    let nonzero_cols = |p: &Matrix| -> Vec<Vec<(usize, u16)>> {
        (0..p.cols()).map(|j| (0..p.rows()).filter_map(|k| (p.get(k, j) != 0).then(|| (k, p.get(k, j)))).collect()).collect()
    };
    let nonzero_rows = |q: &Matrix| -> Vec<Vec<(usize, u16)>> {
        (0..q.rows()).map(|i| (0..q.cols()).filter_map(|k| (q.get(i, k) != 0).then(|| (k, q.get(i, k)))).collect()).collect()
    };
    if field.is_prime_field() {
        let mut sys = BitMatrix::zeros(rows, unknowns);
        for (pi, (p, q)) in pairs.iter().enumerate() {
            let (pc, qr) = (nonzero_cols(p), nonzero_rows(q));
            for i in 0..dn {
                for j in 0..dm {
                    let row = pi * unknowns + i * dm + j;
                    for &(k, _) in &pc[j] {
                        sys.flip(row, i * dm + k);
                    }
                    for &(k, _) in &qr[i] {
                        sys.flip(row, k * dm + j);
                    }
                }
            }
        }
        sys.into_echelon().kernel()
    } else {
        let mut sys = Matrix::zeros(field, rows, unknowns);
        for (pi, (p, q)) in pairs.iter().enumerate() {
            let (pc, qr) = (nonzero_cols(p), nonzero_rows(q));
            for i in 0..dn {
                for j in 0..dm {
                    let row = pi * unknowns + i * dm + j;
                    for &(k, v) in &pc[j] {
                        let col = i * dm + k;
                        sys.set(row, col, sys.get(row, col) ^ v);
                    }
                    for &(k, v) in &qr[i] {
                        let col = k * dm + j;
                        sys.set(row, col, sys.get(row, col) ^ v);
                    }
                }
            }
        }
        sys.kernel()
    }
}

pub fn hom_space(m: &GroupModule, n: &GroupModule) -> Result<HomSpace> {
    m.ensure_compatible(n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let pairs: Vec<(&Matrix, &Matrix)> = m.generator_matrices().iter().zip(n.generator_matrices()).collect();
    let basis = intertwiner_kernel(m.field(), &pairs, dm, dn)
        .into_iter()
        .map(|v| Matrix::from_fn(m.field(), dn, dm, |i, k| v[i * dm + k]))
        .collect();
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis })
}

/// Maps exhibiting `M` as a summand of `X`: `projection · inclusion = id_M`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummandWitness {
    /// `g ∘ f`, the invertible composite found in the trace span.
    pub composite: Matrix,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

/// Decides whether `M` (with local endomorphism ring) is a direct summand
/// of `X`. Every composite `g ∘ f` of basis maps `M -> X -> M` is tested for
/// nilpotency; a non-nilpotent composite is a unit of `End(M)`, and a
/// non-nilpotent non-unit means the ring is not local.
pub fn summand_witness(m: &GroupModule, x: &GroupModule) -> Result<Option<SummandWitness>> {
    m.ensure_compatible(x)?;
    if m.dim() == 0 {
        return Ok(None);
    }
    let into = hom_space(m, x)?;
    if into.dim() == 0 {
        return Ok(None);
    }
    let back = hom_space(x, m)?;
    for g in &back.basis {
        for f in &into.basis {
            let c = g.mul(f)?;
            if c.is_nilpotent()? {
                continue;
            }
            let inv = c.invert()?.ok_or(Error::NotLocal)?;
            return Ok(Some(SummandWitness { projection: inv.mul(g)?, inclusion: f.clone(), composite: c }));
        }
    }
    Ok(None)
}

pub fn is_summand(m: &GroupModule, x: &GroupModule) -> Result<bool> {
    Ok(summand_witness(m, x)?.is_some())
}

/// `M ≅ X` for `M` with local endomorphism ring.
pub fn is_isomorphic(m: &GroupModule, x: &GroupModule) -> Result<bool> {
    m.ensure_compatible(x)?;
    Ok(m.dim() == x.dim() && is_summand(m, x)?)
}

fn is_endomorphism(m: &GroupModule, f: &Matrix) -> Result<bool> {
    if f.rows() != m.dim() || f.cols() != m.dim() {
        return Ok(false);
    }
    for g in m.generator_matrices() {
        if f.mul(g)? != g.mul(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M = ker f^d ⊕ im f^d` (`d = dim M`), returned when both parts are nonzero.
pub fn fitting_split(m: &GroupModule, f: &Matrix) -> Result<Option<(GroupModule, GroupModule)>> {
    if !is_endomorphism(m, f)? {
        return Err(Error::InvalidParameter("not an endomorphism of the module".into()));
    }
    let fd = f.pow(m.dim() as u64)?;
    let kernel = fd.kernel_matrix();
    let image = fd.column_space();
    if kernel.cols() == 0 || image.cols() == 0 {
        return Ok(None);
    }
    Ok(Some((m.submodule(&kernel)?, m.submodule(&image)?)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeConfig {
    pub seed: u64,
    /// Degree of the field random endomorphisms are drawn over; modules over
    /// GF(2) are lifted to it.
    pub extension_m: u32,
    /// A piece is declared indecomposable after this many failed samples.
    pub max_failed_trials: usize,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig { seed: 0x5eed, extension_m: 4, max_failed_trials: 12 }
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: GroupModule,
    /// True when `End` is one-dimensional, which proves indecomposability.
    /// Otherwise the piece is only probably indecomposable.
    pub certified: bool,
}

/// Best-effort Krull–Schmidt decomposition, deterministic for a given seed.
pub fn decompose(x: &GroupModule, config: &DecomposeConfig) -> Result<Vec<Summand>> {
    let field = if x.field().is_prime_field() { Field::new(config.extension_m)? } else { x.field() };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pending = vec![x.lift(field)?];
    let mut done = Vec::new();
    while let Some(piece) = pending.pop() {
        if piece.dim() == 0 {
            continue;
        }
        let end = hom_space(&piece, &piece)?;
        if end.dim() == 1 {
            done.push(Summand { module: piece, certified: true });
            continue;
        }
        match split_once(&piece, &end, field, config.max_failed_trials, &mut rng)? {
            Some((a, b)) => {
                pending.push(b);
                pending.push(a);
            }
            None => done.push(Summand { module: piece, certified: false }),
        }
    }
    Ok(done)
}

fn split_once(
    piece: &GroupModule,
    end: &HomSpace,
    field: Field,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<(GroupModule, GroupModule)>> {
    let d = piece.dim();
    for _ in 0..trials {
        let mut f = Matrix::zeros(field, d, d);
        for b in &end.basis {
            let c = field.scalar(rng.gen_range(0..field.order()) as u16)?;
            f = f.add(&b.scale(c)?)?;
        }
        for c in field.elements() {
            let shifted = f.add(&Matrix::identity(field, d).scale(c)?)?;
            if shifted.invert()?.is_some() {
                continue;
            }
            if let Some(parts) = fitting_split(piece, &shifted)? {
                return Ok(Some(parts));
            }
        }
    }
    Ok(None)
}
