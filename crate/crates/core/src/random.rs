//! Seeded generators for small exact test data.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::cochain::Cochain;
use crate::graded::{wedge_basis, GradedSpace, Parity, Permutation};
use crate::linalg::Scalar;
use crate::superalgebra::{LinearMap, SuperAlgebra};
use crate::sum::{Block, BlockShape, DirectSum};
use crate::triple::{ActionMap, LieSupActTriple};

/// Deterministic across platforms for a given seed.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn parity(&mut self) -> Parity {
        Parity::from_bit(self.below(2))
    }

    /// An integer in `[-3, 3]`, zero about half the time.
    pub fn scalar(&mut self) -> Scalar {
        if self.coin(0.5) {
            Scalar::from_integer(0.into())
        } else {
            self.nonzero_scalar()
        }
    }

    /// A nonzero integer in `[-3, 3]`.
    pub fn nonzero_scalar(&mut self) -> Scalar {
        let v = *[-3i64, -2, -1, 1, 2, 3].choose(&mut self.rng).unwrap();
        Scalar::from_integer(v.into())
    }

    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut self.rng);
        Permutation::new(images).expect("shuffled identity")
    }

    pub fn parities(&mut self, n: usize) -> Vec<Parity> {
        (0..n).map(|_| self.parity()).collect()
    }

    pub fn space(&mut self, max_even: usize, max_odd: usize, prefix: &str) -> Arc<GradedSpace> {
        loop {
            let p = self.below(max_even + 1);
            let q = self.below(max_odd + 1);
            if p + q > 0 {
                return Arc::new(GradedSpace::with_dims(prefix, p, q));
            }
        }
    }

    /// A cochain `sourceⁿ → target`, restricted to one parity when given.
    pub fn cochain_between(
        &mut self,
        source: &Arc<GradedSpace>,
        target: &Arc<GradedSpace>,
        arity: usize,
        parity: Option<Parity>,
    ) -> Cochain {
        let n = wedge_basis(source, arity).len() * target.dim();
        let coords: Vec<Scalar> = (0..n).map(|_| self.scalar()).collect();
        let c = Cochain::from_coords(source.clone(), target.clone(), arity, &coords).expect("length");
        match parity {
            Some(p) => c.parity_part(p),
            None => c,
        }
    }

    pub fn cochain(&mut self, space: &Arc<GradedSpace>, arity: usize, parity: Option<Parity>) -> Cochain {
        self.cochain_between(space, space, arity, parity)
    }

    pub fn block(&mut self, sum: &DirectSum, shape: BlockShape, parity: Option<Parity>) -> Block {
        let coords: Vec<Scalar> = Block::coord_parities(sum, shape)
            .into_iter()
            .map(|p| match parity {
                Some(want) if want != p => Scalar::from_integer(0.into()),
                _ => self.scalar(),
            })
            .collect();
        Block::from_coords(sum, shape, &coords).expect("length")
    }

    pub fn even_map(&mut self, source: &Arc<GradedSpace>, target: &Arc<GradedSpace>) -> LinearMap {
        let mut m = LinearMap::zero(source.clone(), target.clone());
        for c in 0..source.dim() {
            for r in 0..target.dim() {
                if source.parity(c) == target.parity(r) {
                    let x = self.scalar();
                    m.set_entry(r, c, x);
                }
            }
        }
        m
    }

    /// A degree-0 skew bracket table with random entries; usually not Lie.
    pub fn bracket(&mut self, space: &Arc<GradedSpace>) -> SuperAlgebra {
        let mut alg = SuperAlgebra::new(space.clone());
        let d = space.dim();
        for i in 0..d {
            for j in i..d {
                let want = space.parity(i) + space.parity(j);
                if i == j && !space.parity(i).is_odd() {
                    continue;
                }
                let v: Vec<Scalar> = (0..d)
                    .map(|k| if space.parity(k) == want { self.scalar() } else { Scalar::from_integer(0.into()) })
                    .collect();
                alg.set_bracket(i, j, v).expect("degree 0 by construction");
            }
        }
        alg
    }

    pub fn action(&mut self, g: &Arc<GradedSpace>, h: &Arc<GradedSpace>) -> ActionMap {
        let mut rho = ActionMap::zero(g.clone(), h.clone());
        for i in 0..g.dim() {
            for j in 0..h.dim() {
                let want = g.parity(i) + h.parity(j);
                let v: Vec<Scalar> = (0..h.dim())
                    .map(|k| if h.parity(k) == want { self.scalar() } else { Scalar::from_integer(0.into()) })
                    .collect();
                rho.set(i, j, v).expect("degree 0 by construction");
            }
        }
        rho
    }

    fn small_algebra(&mut self) -> SuperAlgebra {
        match self.below(5) {
            0 => SuperAlgebra::gl(1, 0).unwrap(),
            1 => SuperAlgebra::gl(1, 1).unwrap(),
            2 => {
                let (p, q) = loop {
                    let (p, q) = (self.below(3), self.below(3));
                    if p + q > 0 {
                        break (p, q);
                    }
                };
                SuperAlgebra::abelian(p, q)
            }
            3 => catalog::odd_line("x", "y"),
            _ => catalog::solvable_adjoint().g().clone(),
        }
    }

    /// A valid triple drawn from a few parametrised families.
    pub fn valid_triple(&mut self) -> LieSupActTriple {
        let relabel = |alg: SuperAlgebra, prefix: &str| {
            let s = alg.space();
            let space = Arc::new(GradedSpace::new(
                s.even_basis().iter().map(|l| format!("{prefix}{l}")),
                s.odd_basis().iter().map(|l| format!("{prefix}{l}")),
            )
            .unwrap());
            let mut out = SuperAlgebra::new(space);
            for (&(i, j), v) in alg.entries() {
                out.set_bracket(i, j, v.clone()).unwrap();
            }
            out
        };
        match self.below(6) {
            0 => {
                // A line acting on an abelian algebra by any even matrix.
                let g = SuperAlgebra::gl(1, 0).unwrap();
                let h = relabel(SuperAlgebra::abelian(1 + self.below(2), self.below(3)), "h");
                let rho = self.action(g.space(), h.space());
                LieSupActTriple::new(g, h, rho).unwrap()
            }
            1 => {
                // A line acting on gl(1|1) by an even derivation.
                let g = SuperAlgebra::gl(1, 0).unwrap();
                let h = relabel(SuperAlgebra::gl(1, 1).unwrap(), "h");
                let (even, _) = h.derivation_space();
                let mut rho = ActionMap::zero(g.space().clone(), h.space().clone());
                let mut total = vec![vec![Scalar::from_integer(0.into()); h.dim()]; h.dim()];
                for d in &even {
                    let c = self.scalar();
                    for (j, col) in total.iter_mut().enumerate() {
                        for (k, x) in d.image(j).into_iter().enumerate() {
                            col[k] += &c * x;
                        }
                    }
                }
                for (j, col) in total.into_iter().enumerate() {
                    rho.set(0, j, col).unwrap();
                }
                LieSupActTriple::new(g, h, rho).unwrap()
            }
            2 => {
                let g = self.small_algebra();
                let h = relabel(self.small_algebra(), "h");
                let rho = ActionMap::zero(g.space().clone(), h.space().clone());
                LieSupActTriple::new(g, h, rho).unwrap()
            }
            3 => {
                // The odd line acting on (1|1) with ρ(y) odd and ρ(x) = 2ρ(y)².
                let g = catalog::odd_line("x", "y");
                let h = SuperAlgebra::abelian(1, 1);
                let (a, b) = (self.scalar(), self.scalar());
                let zero = Scalar::from_integer(0.into());
                let two_ab = Scalar::from_integer(2.into()) * &a * &b;
                let mut rho = ActionMap::zero(g.space().clone(), h.space().clone());
                rho.set(0, 0, vec![two_ab.clone(), zero.clone()]).unwrap();
                rho.set(0, 1, vec![zero.clone(), two_ab]).unwrap();
                rho.set(1, 0, vec![zero.clone(), b]).unwrap();
                rho.set(1, 1, vec![a, zero]).unwrap();
                LieSupActTriple::new(g, h, rho).unwrap()
            }
            4 => catalog::scalar_action(self.scalar().to_integer().try_into().unwrap()),
            _ => match self.below(4) {
                0 => catalog::gl11_adjoint(),
                1 => catalog::gl11_natural(),
                2 => catalog::odd_line_adjoint(),
                _ => catalog::solvable_adjoint(),
            },
        }
    }

    /// Adds a nonzero amount to one degree-0 entry of `π`, `ρ` or `μ`.
    /// Returns `None` when no entry can be changed.
    pub fn perturb(&mut self, t: &LieSupActTriple) -> Option<LieSupActTriple> {
        let (g, h, rho) = (t.g(), t.h(), t.rho());
        let bracket_slots = |alg: &SuperAlgebra| {
            let s = alg.space();
            let mut out = Vec::new();
            for i in 0..s.dim() {
                for j in i..s.dim() {
                    if i == j && !s.parity(i).is_odd() {
                        continue;
                    }
                    for k in 0..s.dim() {
                        if s.parity(k) == s.parity(i) + s.parity(j) {
                            out.push((0usize, i, j, k));
                        }
                    }
                }
            }
            out
        };
        let mut choices: Vec<(usize, usize, usize, usize)> = bracket_slots(g);
        choices.extend(bracket_slots(h).into_iter().map(|(_, i, j, k)| (2, i, j, k)));
        for i in 0..g.dim() {
            for j in 0..h.dim() {
                for k in 0..h.dim() {
                    if h.space().parity(k) == g.space().parity(i) + h.space().parity(j) {
                        choices.push((1, i, j, k));
                    }
                }
            }
        }
        if choices.is_empty() {
            return None;
        }
        let (which, i, j, k) = choices[self.below(choices.len())];
        let delta = self.nonzero_scalar();
        let (mut g, mut h, mut rho) = (g.clone(), h.clone(), rho.clone());
        match which {
            0 => {
                let mut v = g.bracket_basis(i, j);
                v[k] += delta;
                g.set_bracket(i, j, v).unwrap();
            }
            2 => {
                let mut v = h.bracket_basis(i, j);
                v[k] += delta;
                h.set_bracket(i, j, v).unwrap();
            }
            _ => {
                let mut v = rho.get(i, j).to_vec();
                v[k] += delta;
                rho.set(i, j, v).unwrap();
            }
        }
        Some(LieSupActTriple::candidate(g, h, rho).unwrap())
    }
}
