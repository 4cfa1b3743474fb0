//! The direct sum `g ⊕ h`, cochain blocks on `∧ⁱg ⊗ ∧ʲh`, and the hat
//! embedding of blocks into cochains on the sum.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::Zero;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::graded::{normalize_tuple, wedge_basis, GradedSpace, Parity, WedgeIndex};
use crate::linalg::{is_zero_vec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    G,
    H,
}

/// `g ⊕ h` with basis order `g₀, h₀, g₁, h₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSum {
    g: Arc<GradedSpace>,
    h: Arc<GradedSpace>,
    space: Arc<GradedSpace>,
    g_pos: Vec<usize>,
    h_pos: Vec<usize>,
    origin: Vec<(Side, usize)>,
}

impl DirectSum {
    pub fn new(g: Arc<GradedSpace>, h: Arc<GradedSpace>) -> Self {
        let g_labels: BTreeSet<&str> = g.labels().iter().map(String::as_str).collect();
        let h_labels: BTreeSet<&str> = h.labels().iter().map(String::as_str).collect();
        let label = |side: Side, l: &str| {
            let clash = match side {
                Side::G => h_labels.contains(l),
                Side::H => g_labels.contains(l),
            };
            match (clash, side) {
                (false, _) => l.to_string(),
                (true, Side::G) => format!("g.{l}"),
                (true, Side::H) => format!("h.{l}"),
            }
        };
        let (gp, gq) = g.dims();
        let (hp, hq) = h.dims();
        let mut origin = Vec::new();
        origin.extend((0..gp).map(|i| (Side::G, i)));
        origin.extend((0..hp).map(|i| (Side::H, i)));
        origin.extend((gp..gp + gq).map(|i| (Side::G, i)));
        origin.extend((hp..hp + hq).map(|i| (Side::H, i)));
        let name = |&(side, i): &(Side, usize)| match side {
            Side::G => label(side, g.label(i)),
            Side::H => label(side, h.label(i)),
        };
        let even: Vec<String> = origin[..gp + hp].iter().map(name).collect();
        let odd: Vec<String> = origin[gp + hp..].iter().map(name).collect();
        let space = Arc::new(GradedSpace::new(even, odd).expect("prefixed labels are distinct"));
        let mut g_pos = vec![0; g.dim()];
        let mut h_pos = vec![0; h.dim()];
        for (pos, &(side, i)) in origin.iter().enumerate() {
            match side {
                Side::G => g_pos[i] = pos,
                Side::H => h_pos[i] = pos,
            }
        }
        DirectSum {
            g,
            h,
            space,
            g_pos,
            h_pos,
            origin,
        }
    }

    pub fn g(&self) -> &Arc<GradedSpace> {
        &self.g
    }

    pub fn h(&self) -> &Arc<GradedSpace> {
        &self.h
    }

    pub fn side_space(&self, side: Side) -> &Arc<GradedSpace> {
        match side {
            Side::G => &self.g,
            Side::H => &self.h,
        }
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn g_pos(&self, i: usize) -> usize {
        self.g_pos[i]
    }

    pub fn h_pos(&self, i: usize) -> usize {
        self.h_pos[i]
    }

    pub fn pos(&self, side: Side, i: usize) -> usize {
        match side {
            Side::G => self.g_pos[i],
            Side::H => self.h_pos[i],
        }
    }

    pub fn origin(&self, pos: usize) -> (Side, usize) {
        self.origin[pos]
    }

    pub fn embed(&self, side: Side, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.space.dim()];
        for (i, x) in v.iter().enumerate() {
            out[self.pos(side, i)] = x.clone();
        }
        out
    }

    pub fn embed_g(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.embed(Side::G, v)
    }

    pub fn embed_h(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.embed(Side::H, v)
    }

    pub fn project(&self, side: Side, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.side_space(side).dim();
        (0..d).map(|i| v[self.pos(side, i)].clone()).collect()
    }

    pub fn project_g(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project(Side::G, v)
    }

    pub fn project_h(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.project(Side::H, v)
    }

    /// Sum positions of a block key, g part first.
    pub fn block_tuple(&self, gk: &WedgeIndex, hk: &WedgeIndex) -> Vec<usize> {
        gk.slots()
            .iter()
            .map(|&i| self.g_pos[i])
            .chain(hk.slots().iter().map(|&j| self.h_pos[j]))
            .collect()
    }
}

/// Shape of a block `Hom(∧ⁱg ⊗ ∧ʲh, target)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockShape {
    pub g_arity: usize,
    pub h_arity: usize,
    pub target: Side,
}

impl BlockShape {
    pub fn new(g_arity: usize, h_arity: usize, target: Side) -> Self {
        BlockShape {
            g_arity,
            h_arity,
            target,
        }
    }

    pub fn arity(&self) -> usize {
        self.g_arity + self.h_arity
    }

    /// Keys in lexicographic order of `(g key, h key)`.
    pub fn keys(&self, sum: &DirectSum) -> Vec<(WedgeIndex, WedgeIndex)> {
        let gs = wedge_basis(sum.g(), self.g_arity);
        let hs = wedge_basis(sum.h(), self.h_arity);
        gs.iter()
            .flat_map(|gk| hs.iter().map(move |hk| (gk.clone(), hk.clone())))
            .collect()
    }

    pub fn target_dim(&self, sum: &DirectSum) -> usize {
        sum.side_space(self.target).dim()
    }

    pub fn dim(&self, sum: &DirectSum) -> usize {
        self.keys(sum).len() * self.target_dim(sum)
    }
}

/// A map `∧ⁱg ⊗ ∧ʲh → g` or `→ h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    shape: BlockShape,
    target_dim: usize,
    coeffs: BTreeMap<(WedgeIndex, WedgeIndex), Vec<Scalar>>,
}

impl Block {
    pub fn zero(sum: &DirectSum, shape: BlockShape) -> Self {
        Block {
            shape,
            target_dim: shape.target_dim(sum),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(WedgeIndex, WedgeIndex), &Vec<Scalar>)> {
        self.coeffs.iter()
    }

    pub fn set(&mut self, gk: WedgeIndex, hk: WedgeIndex, value: Vec<Scalar>) -> Result<()> {
        if gk.arity() != self.shape.g_arity || hk.arity() != self.shape.h_arity {
            return Err(Error::ArityMismatch {
                expected: self.shape.arity(),
                got: gk.arity() + hk.arity(),
            });
        }
        if value.len() != self.target_dim {
            return Err(Error::DimensionMismatch {
                expected: self.target_dim,
                got: value.len(),
            });
        }
        if is_zero_vec(&value) {
            self.coeffs.remove(&(gk, hk));
        } else {
            self.coeffs.insert((gk, hk), value);
        }
        Ok(())
    }

    pub fn get(&self, gk: &WedgeIndex, hk: &WedgeIndex) -> Vec<Scalar> {
        self.coeffs
            .get(&(gk.clone(), hk.clone()))
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); self.target_dim])
    }

    /// A block with `j = 0` from a cochain on `g`, or with `i = 0` from a
    /// cochain on `h`.
    pub fn from_cochain(sum: &DirectSum, source: Side, c: &Cochain, target: Side) -> Result<Self> {
        if c.source() != sum.side_space(source) || c.target() != sum.side_space(target) {
            return Err(Error::SpaceMismatch);
        }
        let shape = match source {
            Side::G => BlockShape::new(c.arity(), 0, target),
            Side::H => BlockShape::new(0, c.arity(), target),
        };
        let mut b = Block::zero(sum, shape);
        let empty = WedgeIndex::from_sorted(Vec::new());
        for (key, v) in c.entries() {
            let (gk, hk) = match source {
                Side::G => (key.clone(), empty.clone()),
                Side::H => (empty.clone(), key.clone()),
            };
            b.coeffs.insert((gk, hk), v.clone());
        }
        Ok(b)
    }

    /// Inverse of [`Block::from_cochain`] for blocks with one side empty.
    pub fn to_cochain(&self, sum: &DirectSum) -> Result<Cochain> {
        let (source, arity) = match (self.shape.g_arity, self.shape.h_arity) {
            (i, 0) => (Side::G, i),
            (0, j) => (Side::H, j),
            _ => return Err(Error::ShapeMismatch("block has arguments from both sides".into())),
        };
        let mut c = Cochain::zero(
            sum.side_space(source).clone(),
            sum.side_space(self.shape.target).clone(),
            arity,
        );
        for ((gk, hk), v) in &self.coeffs {
            let key = if source == Side::G { gk } else { hk };
            c.set(key.clone(), v.clone())?;
        }
        Ok(c)
    }

    pub fn to_coords(&self, sum: &DirectSum) -> Vec<Scalar> {
        self.shape
            .keys(sum)
            .iter()
            .flat_map(|(gk, hk)| self.get(gk, hk))
            .collect()
    }

    pub fn from_coords(sum: &DirectSum, shape: BlockShape, coords: &[Scalar]) -> Result<Self> {
        let keys = shape.keys(sum);
        let d = shape.target_dim(sum);
        if coords.len() != keys.len() * d {
            return Err(Error::DimensionMismatch {
                expected: keys.len() * d,
                got: coords.len(),
            });
        }
        let mut b = Block::zero(sum, shape);
        for (k, (gk, hk)) in keys.into_iter().enumerate() {
            b.set(gk, hk, coords[k * d..(k + 1) * d].to_vec())?;
        }
        Ok(b)
    }

    /// Parity of each coordinate, in [`Block::to_coords`] order.
    pub fn coord_parities(sum: &DirectSum, shape: BlockShape) -> Vec<Parity> {
        let target = sum.side_space(shape.target);
        shape
            .keys(sum)
            .iter()
            .flat_map(|(gk, hk)| {
                let p = gk.parity(sum.g()) + hk.parity(sum.h());
                (0..target.dim()).map(move |t| p + target.parity(t))
            })
            .collect()
    }

    /// The cochain on `g ⊕ h` that agrees with the block on block-ordered
    /// tuples, is super-antisymmetric, and vanishes on tuples of any other
    /// content.
    pub fn hat_extend(&self, sum: &DirectSum) -> Cochain {
        let space = sum.space().clone();
        let mut c = Cochain::zero(space.clone(), space, self.shape.arity());
        for ((gk, hk), v) in &self.coeffs {
            let z = sum.block_tuple(gk, hk);
            let (w, sign) = normalize_tuple(sum.space(), &z).expect("distinct sides never collide");
            let embedded = sum.embed(self.shape.target, v);
            let value = if sign > 0 {
                embedded
            } else {
                embedded.into_iter().map(|x| -x).collect()
            };
            c.set(w, value).expect("normal key of the right arity");
        }
        c
    }

    /// Restriction of a cochain on `g ⊕ h` to this shape.
    pub fn project(sum: &DirectSum, f: &Cochain, shape: BlockShape) -> Result<Self> {
        if f.source() != sum.space() || f.target() != sum.space() {
            return Err(Error::SpaceMismatch);
        }
        if f.arity() != shape.arity() {
            return Err(Error::ArityMismatch {
                expected: shape.arity(),
                got: f.arity(),
            });
        }
        let mut b = Block::zero(sum, shape);
        for (gk, hk) in shape.keys(sum) {
            let z = sum.block_tuple(&gk, &hk);
            let v = sum.project(shape.target, &f.eval(&z)?);
            b.set(gk, hk, v)?;
        }
        Ok(b)
    }

    pub fn add(&self, other: &Block) -> Result<Block> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch("blocks of different shapes".into()));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let entry = out
                .coeffs
                .entry(k.clone())
                .or_insert_with(|| vec![Scalar::zero(); self.target_dim]);
            for (y, x) in entry.iter_mut().zip(v) {
                *y += x;
            }
            if is_zero_vec(entry) {
                out.coeffs.remove(k);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> Block {
        let mut out = self.clone();
        out.coeffs.retain(|_, _| !factor.is_zero());
        for v in out.coeffs.values_mut() {
            for x in v.iter_mut() {
                *x *= factor;
            }
        }
        out
    }
}

/// Whether `f` sends all-g tuples into g and every other tuple into h.
pub fn f_membership(sum: &DirectSum, f: &Cochain) -> bool {
    f_violation(sum, f).is_none()
}

/// First normal-form tuple at which `f` leaves its allowed target.
pub fn f_violation(sum: &DirectSum, f: &Cochain) -> Option<Vec<usize>> {
    if f.source() != sum.space() || f.target() != sum.space() {
        return Some(Vec::new());
    }
    for (key, v) in f.entries() {
        let all_g = key.slots().iter().all(|&p| sum.origin(p).0 == Side::G);
        let forbidden = if all_g { Side::H } else { Side::G };
        if v.iter()
            .enumerate()
            .any(|(p, x)| !x.is_zero() && sum.origin(p).0 == forbidden)
        {
            return Some(key.slots().to_vec());
        }
    }
    None
}
