//! Actions of Lie superalgebras by derivations, the Maurer–Cartan element
//! `π + ρ + μ` on `g ⊕ h`, and the cohomology of the resulting complex.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::cochain::{bracket_parts_at, circ, nr_bracket, Cochain};
use crate::error::{Error, Result};
use crate::graded::{GradedSpace, Parity, WedgeIndex};
use crate::linalg::{cohomology_dims, is_zero_vec, Matrix, Scalar};
use crate::superalgebra::{
    add_vec, axpy, basis_vector, semidirect_unchecked, signed, sub_vec, CheckReport, LinearMap, SuperAlgebra,
};
use crate::sum::{f_violation, Block, BlockShape, DirectSum, Side};

/// Bilinear table `ρ(gᵢ)(hⱼ)` of a degree-0 map `g → End(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMap {
    g: Arc<GradedSpace>,
    h: Arc<GradedSpace>,
    table: Vec<Vec<Vec<Scalar>>>,
}

impl ActionMap {
    pub fn zero(g: Arc<GradedSpace>, h: Arc<GradedSpace>) -> Self {
        let table = vec![vec![vec![Scalar::zero(); h.dim()]; h.dim()]; g.dim()];
        ActionMap { g, h, table }
    }

    /// `ρ(x)u = [x, u]`.
    pub fn adjoint(alg: &SuperAlgebra) -> Self {
        let s = alg.space().clone();
        let mut rho = ActionMap::zero(s.clone(), s.clone());
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                rho.table[i][j] = alg.bracket_basis(i, j);
            }
        }
        rho
    }

    pub fn g(&self) -> &Arc<GradedSpace> {
        &self.g
    }

    pub fn h(&self) -> &Arc<GradedSpace> {
        &self.h
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    /// Sets `ρ(gᵢ)(hⱼ)`; the value must have parity `|gᵢ| + |hⱼ|`.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        if i >= self.g.dim() || j >= self.h.dim() {
            return Err(Error::Validation(format!("action index out of range: ({i}, {j})")));
        }
        if value.len() != self.h.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.h.dim(),
                got: value.len(),
            });
        }
        let want = self.g.parity(i) + self.h.parity(j);
        if let Some(k) = (0..value.len()).find(|&k| !value[k].is_zero() && self.h.parity(k) != want) {
            return Err(Error::Validation(format!(
                "{}({}) has a component {} of the wrong parity",
                self.g.label(i),
                self.h.label(j),
                self.h.label(k)
            )));
        }
        self.table[i][j] = value;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(|v| is_zero_vec(v))
    }

    pub fn apply(&self, x: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.h.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, uj) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(xi * uj), &self.table[i][j]);
            }
        }
        out
    }

    /// `ρ(x)` applied to a basis vector of `g`, as a linear map on `h`.
    pub fn operator(&self, x: &[Scalar]) -> LinearMap {
        let d = self.h.dim();
        let images: Vec<_> = (0..d).map(|j| self.apply(x, &basis_vector(d, j))).collect();
        LinearMap::from_images(self.h.clone(), self.h.clone(), &images).expect("square")
    }

    pub fn to_block(&self, sum: &DirectSum) -> Block {
        let mut b = Block::zero(sum, BlockShape::new(1, 1, Side::H));
        for i in 0..self.g.dim() {
            for j in 0..self.h.dim() {
                let key = |k| WedgeIndex::from_sorted(vec![k]);
                b.set(key(i), key(j), self.table[i][j].clone()).expect("shape");
            }
        }
        b
    }

    pub fn from_block(sum: &DirectSum, block: &Block) -> Result<Self> {
        if block.shape() != BlockShape::new(1, 1, Side::H) {
            return Err(Error::ShapeMismatch("an action is a (1,1) block into h".into()));
        }
        let mut rho = ActionMap::zero(sum.g().clone(), sum.h().clone());
        for ((gk, hk), v) in block.entries() {
            rho.set(gk.slots()[0], hk.slots()[0], v.clone())?;
        }
        Ok(rho)
    }

    pub fn add(&self, other: &ActionMap) -> Result<ActionMap> {
        if self.g != other.g || self.h != other.h {
            return Err(Error::SpaceMismatch);
        }
        let mut out = self.clone();
        for (i, row) in other.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.table[i][j] = add_vec(&out.table[i][j], v);
            }
        }
        Ok(out)
    }
}

/// Checks that `ρ` has degree 0, acts by derivations of `h`, and is a
/// morphism `g → End(h)` for the super-commutator.
pub fn check_action(g: &SuperAlgebra, h: &SuperAlgebra, rho: &ActionMap) -> CheckReport {
    let mut report = CheckReport::new("action");
    if rho.g() != g.space() || rho.h() != h.space() {
        report.violations.push(crate::superalgebra::Violation {
            axiom: "action spaces match g and h".into(),
            at: Vec::new(),
            defect: Vec::new(),
        });
        return report;
    }
    let (gs, hs) = (g.space(), h.space());
    let (dg, dh) = (g.dim(), h.dim());
    for i in 0..dg {
        for j in 0..dh {
            let v = rho.get(i, j);
            let want = gs.parity(i) + hs.parity(j);
            let off: Vec<Scalar> = v
                .iter()
                .enumerate()
                .map(|(k, x)| if hs.parity(k) == want { Scalar::zero() } else { x.clone() })
                .collect();
            report.expect_zero("degree 0", vec![gs.label(i).into(), hs.label(j).into()], hs, &off);
        }
    }
    for i in 0..dg {
        let x = basis_vector(dg, i);
        for a in 0..dh {
            for b in 0..dh {
                let (ua, ub) = (basis_vector(dh, a), basis_vector(dh, b));
                let lhs = rho.apply(&x, &h.bracket_basis(a, b));
                let first = h.bracket_eval(rho.get(i, a), &ub).unwrap();
                let second = h.bracket_eval(&ua, rho.get(i, b)).unwrap();
                let second = signed((gs.parity(i) * hs.parity(a)).sign(), second);
                report.expect_zero(
                    "ρ(x)[u,v] = [ρ(x)u,v] + (-1)^{|x||u|}[u,ρ(x)v]",
                    vec![gs.label(i).into(), hs.label(a).into(), hs.label(b).into()],
                    hs,
                    &sub_vec(&lhs, &add_vec(&first, &second)),
                );
            }
        }
    }
    for i in 0..dg {
        for j in 0..dg {
            let (x, y) = (basis_vector(dg, i), basis_vector(dg, j));
            let xy = g.bracket_basis(i, j);
            let sign = (gs.parity(i) * gs.parity(j)).sign();
            for a in 0..dh {
                let u = basis_vector(dh, a);
                let lhs = rho.apply(&xy, &u);
                let first = rho.apply(&x, &rho.apply(&y, &u));
                let second = signed(sign, rho.apply(&y, &rho.apply(&x, &u)));
                report.expect_zero(
                    "ρ([x,y]) = ρ(x)ρ(y) - (-1)^{|x||y|}ρ(y)ρ(x)",
                    vec![gs.label(i).into(), gs.label(j).into(), hs.label(a).into()],
                    hs,
                    &sub_vec(&lhs, &sub_vec(&first, &second)),
                );
            }
        }
    }
    report
}

/// Two brackets and an action between them; possibly not yet verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSupActTriple {
    g: SuperAlgebra,
    h: SuperAlgebra,
    rho: ActionMap,
    sum: DirectSum,
}

impl LieSupActTriple {
    /// A verified triple.
    pub fn new(g: SuperAlgebra, h: SuperAlgebra, rho: ActionMap) -> Result<Self> {
        let t = LieSupActTriple::candidate(g, h, rho)?;
        for (name, alg) in [("g", &t.g), ("h", &t.h)] {
            let mut r = alg.check_super_skew();
            r.merge(alg.check_jacobi());
            if let Some(v) = r.violations.first() {
                return Err(Error::Validation(format!("{name}: {} fails at {:?}", v.axiom, v.at)));
            }
        }
        let r = check_action(&t.g, &t.h, &t.rho);
        if let Some(v) = r.violations.first() {
            return Err(Error::InvalidAction(format!("{} fails at {:?}", v.axiom, v.at)));
        }
        Ok(t)
    }

    /// Unverified data of the right shapes.
    pub fn candidate(g: SuperAlgebra, h: SuperAlgebra, rho: ActionMap) -> Result<Self> {
        if rho.g() != g.space() || rho.h() != h.space() {
            return Err(Error::SpaceMismatch);
        }
        let sum = DirectSum::new(g.space().clone(), h.space().clone());
        Ok(LieSupActTriple { g, h, rho, sum })
    }

    pub fn g(&self) -> &SuperAlgebra {
        &self.g
    }

    pub fn h(&self) -> &SuperAlgebra {
        &self.h
    }

    pub fn rho(&self) -> &ActionMap {
        &self.rho
    }

    pub fn sum(&self) -> &DirectSum {
        &self.sum
    }

    /// All axioms: both algebras and the action.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new("triple");
        for alg in [&self.g, &self.h] {
            report.merge(alg.check_super_skew());
            report.merge(alg.check_jacobi());
        }
        report.merge(check_action(&self.g, &self.h, &self.rho));
        report
    }

    pub fn semidirect(&self) -> SuperAlgebra {
        semidirect_unchecked(&self.g, &self.h, &self.rho).expect("shapes agree")
    }

    pub fn pi_hat(&self) -> Cochain {
        Block::from_cochain(&self.sum, Side::G, &self.g.to_cochain(), Side::G)
            .expect("g block")
            .hat_extend(&self.sum)
    }

    pub fn rho_hat(&self) -> Cochain {
        self.rho.to_block(&self.sum).hat_extend(&self.sum)
    }

    pub fn mu_hat(&self) -> Cochain {
        Block::from_cochain(&self.sum, Side::H, &self.h.to_cochain(), Side::H)
            .expect("h block")
            .hat_extend(&self.sum)
    }

    /// `Π = π̂ + ρ̂ + μ̂` on `g ⊕ h`.
    pub fn mc_element(&self) -> Cochain {
        self.pi_hat()
            .add(&self.rho_hat())
            .and_then(|c| c.add(&self.mu_hat()))
            .expect("same shape")
    }
}

/// The four blocks of `[Π, Π]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McResidual {
    /// `[π, π]` on `∧³g → g`.
    pub pi_pi: Block,
    /// `2ρ∘π + [ρ, ρ]` on `∧²g ⊗ h → h`.
    pub mixed: Block,
    /// `2[ρ, μ]` on `g ⊗ ∧²h → h`.
    pub rho_mu: Block,
    /// `[μ, μ]` on `∧³h → h`.
    pub mu_mu: Block,
}

impl McResidual {
    pub fn is_zero(&self) -> bool {
        self.blocks().iter().all(|(_, b)| b.is_zero())
    }

    pub fn blocks(&self) -> [(&'static str, &Block); 4] {
        [
            ("[pi,pi]", &self.pi_pi),
            ("2 rho.pi + [rho,rho]", &self.mixed),
            ("2[rho,mu]", &self.rho_mu),
            ("[mu,mu]", &self.mu_mu),
        ]
    }
}

/// Splits `[Π, Π]` into its four blocks and cross-checks each against the
/// component computed on its own.
pub fn mc_residual(t: &LieSupActTriple) -> Result<McResidual> {
    let sum = t.sum();
    let pi_mu = t.mc_element();
    let full = nr_bracket(&pi_mu, &pi_mu)?;
    if let Some(at) = f_violation(sum, &full) {
        return Err(Error::Invariant(format!("[Π,Π] leaves the subalgebra at {at:?}")));
    }
    let shapes = [
        BlockShape::new(3, 0, Side::G),
        BlockShape::new(2, 1, Side::H),
        BlockShape::new(1, 2, Side::H),
        BlockShape::new(0, 3, Side::H),
    ];
    let [pi_pi, mixed, rho_mu, mu_mu] = shapes.map(|s| Block::project(sum, &full, s));
    let res = McResidual {
        pi_pi: pi_pi?,
        mixed: mixed?,
        rho_mu: rho_mu?,
        mu_mu: mu_mu?,
    };

    let (pi, mu) = (t.g().to_cochain(), t.h().to_cochain());
    let (pi_hat, rho_hat, mu_hat) = (t.pi_hat(), t.rho_hat(), t.mu_hat());
    let two = Scalar::from_integer(2.into());
    let direct = [
        Block::from_cochain(sum, Side::G, &nr_bracket(&pi, &pi)?, Side::G)?,
        Block::project(
            sum,
            &circ(&rho_hat, &pi_hat)?.scale(&two).add(&nr_bracket(&rho_hat, &rho_hat)?)?,
            shapes[1],
        )?,
        Block::project(sum, &nr_bracket(&rho_hat, &mu_hat)?.scale(&two), shapes[2])?,
        Block::from_cochain(sum, Side::H, &nr_bracket(&mu, &mu)?, Side::H)?,
    ];
    for ((name, block), other) in res.blocks().into_iter().zip(&direct) {
        if block != other {
            return Err(Error::Invariant(format!("{name} block of [Π,Π] disagrees with its direct form")));
        }
    }
    // The blocks exhaust [Π,Π].
    let rebuilt = res
        .blocks()
        .iter()
        .map(|(_, b)| b.hat_extend(sum))
        .try_fold(Cochain::zero(sum.space().clone(), sum.space().clone(), 3), |acc, c| acc.add(&c))?;
    if rebuilt != full {
        return Err(Error::Invariant("[Π,Π] has support outside the four blocks".into()));
    }
    Ok(res)
}

/// Per-parity dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParityDims {
    pub even: usize,
    pub odd: usize,
}

impl ParityDims {
    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn get(&self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

/// Coordinates of a direct sum of blocks, block-major, each block in
/// `(key, target)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBasis {
    shapes: Vec<BlockShape>,
    offsets: Vec<usize>,
    parities: Vec<Parity>,
}

impl ComplexBasis {
    pub fn new(sum: &DirectSum, shapes: Vec<BlockShape>) -> Self {
        let mut offsets = Vec::new();
        let mut parities = Vec::new();
        for &s in &shapes {
            offsets.push(parities.len());
            parities.extend(Block::coord_parities(sum, s));
        }
        ComplexBasis {
            shapes,
            offsets,
            parities,
        }
    }

    /// `Cⁿ`: `Hom(∧ⁿg, g)` then `Hom(∧ⁱg ⊗ ∧ⁿ⁻ⁱh, h)` for `i = 0..n`.
    pub fn triple(sum: &DirectSum, n: usize) -> Self {
        let mut shapes = vec![BlockShape::new(n, 0, Side::G)];
        shapes.extend((0..n).map(|i| BlockShape::new(i, n - i, Side::H)));
        ComplexBasis::new(sum, shapes)
    }

    /// `Hom(∧ⁿg, h)`.
    pub fn crossed(sum: &DirectSum, n: usize) -> Self {
        ComplexBasis::new(sum, vec![BlockShape::new(n, 0, Side::H)])
    }

    pub fn shapes(&self) -> &[BlockShape] {
        &self.shapes
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn dims(&self) -> ParityDims {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        ParityDims {
            even: self.dim() - odd,
            odd,
        }
    }

    pub fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    pub fn split(&self, sum: &DirectSum, coords: &[Scalar]) -> Result<Vec<Block>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        self.shapes
            .iter()
            .enumerate()
            .map(|(b, &s)| {
                let end = self.offsets.get(b + 1).copied().unwrap_or(self.dim());
                Block::from_coords(sum, s, &coords[self.offsets[b]..end])
            })
            .collect()
    }

    pub fn assemble(&self, sum: &DirectSum, blocks: &[Block]) -> Result<Vec<Scalar>> {
        if blocks.len() != self.shapes.len() || blocks.iter().zip(&self.shapes).any(|(b, s)| b.shape() != *s) {
            return Err(Error::ShapeMismatch("blocks do not match the basis".into()));
        }
        Ok(blocks.iter().flat_map(|b| b.to_coords(sum)).collect())
    }

    /// The cochain on `g ⊕ h` with the given coordinates.
    pub fn hat(&self, sum: &DirectSum, coords: &[Scalar]) -> Result<Cochain> {
        let arity = self.shapes.first().map_or(0, |s| s.arity());
        let mut out = Cochain::zero(sum.space().clone(), sum.space().clone(), arity);
        for b in self.split(sum, coords)? {
            out = out.add(&b.hat_extend(sum))?;
        }
        Ok(out)
    }

    /// Coordinates of `f` read off at block-ordered tuples.
    pub fn project(&self, sum: &DirectSum, f: &Cochain) -> Result<Vec<Scalar>> {
        let blocks = self
            .shapes
            .iter()
            .map(|&s| Block::project(sum, f, s))
            .collect::<Result<Vec<_>>>()?;
        self.assemble(sum, &blocks)
    }
}

/// Matrix of `a ↦ [ω, a]` from `src` to `dst`, assembled column by column.
pub fn bracket_matrix(sum: &DirectSum, omega: &Cochain, src: &ComplexBasis, dst: &ComplexBasis) -> Matrix {
    let omega_parts = omega.parts();
    let rows: Vec<(BlockShape, Vec<usize>)> = dst
        .shapes
        .iter()
        .flat_map(|&s| s.keys(sum).into_iter().map(move |(gk, hk)| (s, sum.block_tuple(&gk, &hk))))
        .collect();
    let columns: Vec<Vec<Scalar>> = (0..src.dim())
        .into_par_iter()
        .map(|c| {
            let mut unit = vec![Scalar::zero(); src.dim()];
            unit[c] = Scalar::from_integer(1.into());
            let a = src.hat(sum, &unit).expect("unit coordinates");
            let a_parts = a.parts();
            let mut col = Vec::with_capacity(dst.dim());
            for (shape, z) in &rows {
                let v = bracket_parts_at(&omega_parts, &a_parts, z);
                let v = if v.is_empty() { vec![Scalar::zero(); sum.space().dim()] } else { v };
                col.extend(sum.project(shape.target, &v));
            }
            col
        })
        .collect();
    Matrix::from_columns(dst.dim(), &columns).expect("column lengths")
}

/// `∂ⁿ: Cⁿ → Cⁿ⁺¹`, `a ↦ [Π, a]`.
pub fn triple_coboundary_matrix(t: &LieSupActTriple, n: usize) -> Matrix {
    let sum = t.sum();
    bracket_matrix(
        sum,
        &t.mc_element(),
        &ComplexBasis::triple(sum, n),
        &ComplexBasis::triple(sum, n + 1),
    )
}

/// Per-parity `dim ker d_out − rank d_in` on a complex whose differential
/// is even.
pub fn parity_cohomology(
    d_in: Option<&Matrix>,
    d_out: &Matrix,
    prev: Option<&ComplexBasis>,
    here: &ComplexBasis,
    next: &ComplexBasis,
) -> Result<ParityDims> {
    let mut dims = ParityDims::default();
    for p in [Parity::Even, Parity::Odd] {
        let cols = here.indices_of(p);
        let rows = next.indices_of(p);
        let off = next.indices_of(p + Parity::Odd);
        if !d_out.select(&off, &cols).is_zero() {
            return Err(Error::Invariant("differential mixes parities".into()));
        }
        let out_p = d_out.select(&rows, &cols);
        let in_p = match (d_in, prev) {
            (Some(m), Some(b)) => m.select(&cols, &b.indices_of(p)),
            _ => Matrix::zeros(cols.len(), 0),
        };
        let h = cohomology_dims(&in_p, &out_p)?;
        match p {
            Parity::Even => dims.even = h,
            Parity::Odd => dims.odd = h,
        }
    }
    Ok(dims)
}

/// `Hⁿ` for `n = 1..=max_n`; the complex starts at `C¹`.
pub fn triple_cohomology_table(t: &LieSupActTriple, max_n: usize) -> Result<Vec<ParityDims>> {
    let sum = t.sum();
    let bases: Vec<ComplexBasis> = (1..=max_n + 1).map(|n| ComplexBasis::triple(sum, n)).collect();
    let omega = t.mc_element();
    let mats: Vec<Matrix> = (0..max_n)
        .map(|k| bracket_matrix(sum, &omega, &bases[k], &bases[k + 1]))
        .collect();
    (0..max_n)
        .map(|k| {
            let (d_in, prev) = if k == 0 { (None, None) } else { (Some(&mats[k - 1]), Some(&bases[k - 1])) };
            parity_cohomology(d_in, &mats[k], prev, &bases[k], &bases[k + 1])
        })
        .collect()
}

pub fn triple_cohomology(t: &LieSupActTriple, n: usize) -> Result<ParityDims> {
    if n == 0 {
        return Err(Error::Validation("the complex starts in degree 1".into()));
    }
    Ok(triple_cohomology_table(t, n)?[n - 1])
}

/// An element of `Cⁿ` as its blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCochain {
    pub degree: usize,
    pub blocks: Vec<Block>,
}

impl TripleCochain {
    pub fn from_coords(t: &LieSupActTriple, degree: usize, coords: &[Scalar]) -> Result<Self> {
        let blocks = ComplexBasis::triple(t.sum(), degree).split(t.sum(), coords)?;
        Ok(TripleCochain { degree, blocks })
    }

    pub fn to_coords(&self, t: &LieSupActTriple) -> Result<Vec<Scalar>> {
        ComplexBasis::triple(t.sum(), self.degree).assemble(t.sum(), &self.blocks)
    }

    /// `π₁ + ρ₁ + μ₁` as an element of `C²`.
    pub fn from_structure(t: &LieSupActTriple, pi: &SuperAlgebra, rho: &ActionMap, mu: &SuperAlgebra) -> Result<Self> {
        let sum = t.sum();
        if pi.space() != sum.g() || mu.space() != sum.h() || rho.g() != sum.g() || rho.h() != sum.h() {
            return Err(Error::SpaceMismatch);
        }
        Ok(TripleCochain {
            degree: 2,
            blocks: vec![
                Block::from_cochain(sum, Side::G, &pi.to_cochain(), Side::G)?,
                Block::from_cochain(sum, Side::H, &mu.to_cochain(), Side::H)?,
                rho.to_block(sum),
            ],
        })
    }

    /// Inverse of [`TripleCochain::from_structure`].
    pub fn to_structure(&self, t: &LieSupActTriple) -> Result<(SuperAlgebra, ActionMap, SuperAlgebra)> {
        if self.degree != 2 {
            return Err(Error::ShapeMismatch("structure maps live in degree 2".into()));
        }
        let sum = t.sum();
        let pi = SuperAlgebra::from_cochain(&self.blocks[0].to_cochain(sum)?)?;
        let mu = SuperAlgebra::from_cochain(&self.blocks[1].to_cochain(sum)?)?;
        let rho = ActionMap::from_block(sum, &self.blocks[2])?;
        Ok((pi, rho, mu))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Block::is_zero)
    }
}
