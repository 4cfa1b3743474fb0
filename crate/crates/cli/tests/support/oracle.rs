//! Brute-force cohomology on raw coefficient tables.
//!
//! Cochains are stored as plain maps from arbitrary index tuples to value
//! vectors on `V = g ⊕ h` (g first, then h). Products are evaluated by
//! summing over every reordering of the arguments, with signs computed pair
//! by pair. Nothing here goes through the library's normal forms, shuffles
//! or block layout; only the final rank computation is shared.

use std::collections::HashMap;

use supercochain::{ActionMap, LinearMap, Matrix, Scalar, SuperAlgebra};

pub type Table = HashMap<Vec<usize>, Vec<Scalar>>;

fn zero() -> Scalar {
    Scalar::from_integer(0.into())
}

fn one() -> Scalar {
    Scalar::from_integer(1.into())
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Every ordering of `0..n`.
fn orderings(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in orderings(n - 1) {
        for pos in 0..=rest.len() {
            let mut o = rest.clone();
            o.insert(pos, n - 1);
            out.push(o);
        }
    }
    out
}

/// All tuples of length `n` over `0..d`.
fn all_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Non-decreasing tuples of length `n` drawn from `range`.
fn sorted_tuples(range: std::ops::Range<usize>, n: usize) -> Vec<Vec<usize>> {
    all_tuples(range.end, n)
        .into_iter()
        .filter(|t| t.iter().all(|&i| i >= range.start) && t.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

pub struct Oracle {
    /// Parity bit of each basis vector of `V`.
    pub par: Vec<u8>,
    pub dg: usize,
    pub dh: usize,
    /// Orderings of `0..n`, cached by `n`.
    perms: Vec<Vec<Vec<usize>>>,
}

impl Oracle {
    pub fn new(g: &SuperAlgebra, h: &SuperAlgebra) -> Self {
        let mut par = Vec::new();
        for alg in [g, h] {
            for i in 0..alg.dim() {
                par.push(alg.space().parity(i).is_odd() as u8);
            }
        }
        Oracle {
            par,
            dg: g.dim(),
            dh: h.dim(),
            perms: (0..7).map(orderings).collect(),
        }
    }

    fn d(&self) -> usize {
        self.dg + self.dh
    }

    /// Sign relating `F(x_{o(0)}, …)` to `F(x_0, …)` for a sign-invariant
    /// `F`: each pair of arguments that changes order contributes
    /// `−(−1)^{|a||b|}`.
    fn reorder_sign(&self, xs: &[usize], order: &[usize]) -> i64 {
        let mut s = 1;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if order[i] > order[j] {
                    let both_odd = self.par[xs[order[i]]] & self.par[xs[order[j]]];
                    s *= if both_odd == 1 { 1 } else { -1 };
                }
            }
        }
        s
    }

    fn parity_of(&self, t: &[usize]) -> u8 {
        t.iter().map(|&i| self.par[i]).sum::<u8>() % 2
    }

    /// `(F ∘ G)(xs)` with `G` of parity `g_par`, averaged over all orderings.
    fn circ_at(&self, f: &Table, f_arity: usize, g: &Table, g_arity: usize, g_par: u8, xs: &[usize]) -> Vec<Scalar> {
        let a = f_arity - 1;
        let n = a + g_arity;
        assert_eq!(xs.len(), n);
        let mut out = vec![zero(); self.d()];
        for order in &self.perms[n] {
            let ys: Vec<usize> = order.iter().map(|&i| xs[i]).collect();
            let Some(gv) = g.get(&ys[a..]) else { continue };
            let mut sign = self.reorder_sign(xs, order);
            if g_par == 1 && self.parity_of(&ys[..a]) == 1 {
                sign = -sign;
            }
            for (k, c) in gv.iter().enumerate() {
                if *c == zero() {
                    continue;
                }
                let mut args = ys[..a].to_vec();
                args.push(k);
                if let Some(fv) = f.get(&args) {
                    let w = c * Scalar::from_integer(sign.into());
                    for (o, x) in out.iter_mut().zip(fv) {
                        *o += &w * x;
                    }
                }
            }
        }
        let norm = Scalar::from_integer((factorial(a) * factorial(g_arity)).into());
        out.into_iter().map(|x| x / &norm).collect()
    }

    /// `[F, G](xs)` for homogeneous `F`, `G`.
    fn bracket_at(&self, f: (&Table, usize, u8), g: (&Table, usize, u8), xs: &[usize]) -> Vec<Scalar> {
        let (ft, fa, fp) = f;
        let (gt, ga, gp) = g;
        let fg = self.circ_at(ft, fa, gt, ga, gp, xs);
        let gf = self.circ_at(gt, ga, ft, fa, fp, xs);
        let twist = ((fa - 1) * (ga - 1) + (fp * gp) as usize) % 2 == 1;
        fg.into_iter()
            .zip(gf)
            .map(|(a, b)| if twist { a + b } else { a - b })
            .collect()
    }

    fn insert(t: &mut Table, key: Vec<usize>, v: Vec<Scalar>) {
        if v.iter().any(|x| *x != zero()) {
            t.insert(key, v);
        }
    }

    /// `π + ρ + μ` as a raw table, optionally without `μ`.
    pub fn structure(&self, g: &SuperAlgebra, h: &SuperAlgebra, rho: &ActionMap, with_mu: bool) -> Table {
        let (dg, d) = (self.dg, self.d());
        let embed = |v: Vec<Scalar>, off: usize| {
            let mut out = vec![zero(); d];
            for (k, x) in v.into_iter().enumerate() {
                out[off + k] = x;
            }
            out
        };
        let mut t = Table::new();
        for a in 0..d {
            for b in 0..d {
                let v = match (a < dg, b < dg) {
                    (true, true) => embed(g.bracket_basis(a, b), 0),
                    (true, false) => embed(rho.get(a, b - dg).to_vec(), dg),
                    (false, true) => {
                        let s = if self.par[a] & self.par[b] == 1 { one() } else { -one() };
                        embed(rho.get(b, a - dg).iter().map(|x| x * &s).collect(), dg)
                    }
                    (false, false) if with_mu => embed(h.bracket_basis(a - dg, b - dg), dg),
                    _ => continue,
                };
                Self::insert(&mut t, vec![a, b], v);
            }
        }
        t
    }

    /// `π + ρ + [μ, D]` for the crossed-homomorphism complex.
    pub fn twisted(&self, g: &SuperAlgebra, h: &SuperAlgebra, rho: &ActionMap, d_map: &LinearMap) -> Table {
        let dg = self.dg;
        let mut mu = Table::new();
        for a in 0..self.dh {
            for b in 0..self.dh {
                let mut v = vec![zero(); self.d()];
                for (k, x) in h.bracket_basis(a, b).into_iter().enumerate() {
                    v[dg + k] = x;
                }
                Self::insert(&mut mu, vec![dg + a, dg + b], v);
            }
        }
        let mut dt = Table::new();
        for a in 0..dg {
            let mut v = vec![zero(); self.d()];
            for (k, x) in d_map.image(a).into_iter().enumerate() {
                v[dg + k] = x;
            }
            Self::insert(&mut dt, vec![a], v);
        }
        let mut out = self.structure(g, h, rho, false);
        for xs in all_tuples(self.d(), 2) {
            let v = self.bracket_at((&mu, 2, 0), (&dt, 1, 0), &xs);
            if v.iter().any(|x| *x != zero()) {
                let e = out.entry(xs).or_insert_with(|| vec![zero(); self.d()]);
                for (o, x) in e.iter_mut().zip(v) {
                    *o += x;
                }
            }
        }
        out.retain(|_, v| v.iter().any(|x| *x != zero()));
        out
    }

    /// The sign-invariant table generated by `e_t ↦ e_k`.
    fn generator(&self, t: &[usize], k: usize) -> Table {
        let mut table = Table::new();
        for order in &self.perms[t.len()] {
            let ys: Vec<usize> = order.iter().map(|&i| t[i]).collect();
            let s = Scalar::from_integer(self.reorder_sign(t, order).into());
            let e = table.entry(ys).or_insert_with(|| vec![zero(); self.d()]);
            e[k] += s;
        }
        table.retain(|_, v| v.iter().any(|x| *x != zero()));
        table
    }

    /// Spanning sets of `Cⁿ`, one per parity, for the triple complex
    /// (`all_g = false`) or for `Hom(∧ⁿg, h)` (`all_g = true`).
    pub fn spanning(&self, n: usize, crossed: bool) -> [Vec<Table>; 2] {
        let (dg, d) = (self.dg, self.d());
        let mut out = [Vec::new(), Vec::new()];
        let tuples = if crossed { sorted_tuples(0..dg, n) } else { sorted_tuples(0..d, n) };
        for t in tuples {
            let pure_g = t.iter().all(|&i| i < dg);
            let targets = if pure_g && !crossed { 0..dg } else { dg..d };
            for k in targets {
                let gen = self.generator(&t, k);
                if !gen.is_empty() {
                    out[((self.parity_of(&t) + self.par[k]) % 2) as usize].push(gen);
                }
            }
        }
        out
    }

    /// `[ω, T]` on the given argument tuples, flattened.
    fn image(&self, omega: &Table, t: &Table, n: usize, p: u8, points: &[Vec<usize>], crossed: bool) -> Vec<Scalar> {
        let mut col = Vec::new();
        for xs in points {
            let v = self.bracket_at((omega, 2, 0), (t, n, p), xs);
            if crossed {
                col.extend(v.into_iter().skip(self.dg));
            } else {
                col.extend(v);
            }
        }
        col
    }

    fn points(&self, n: usize, crossed: bool) -> Vec<Vec<usize>> {
        if crossed {
            sorted_tuples(0..self.dg, n)
        } else {
            sorted_tuples(0..self.d(), n)
        }
    }

    fn flatten(&self, t: &Table, points: &[Vec<usize>], crossed: bool) -> Vec<Scalar> {
        let mut col = Vec::new();
        for xs in points {
            match t.get(xs) {
                Some(v) if crossed => col.extend(v[self.dg..].iter().cloned()),
                Some(v) => col.extend(v.iter().cloned()),
                None => col.extend(std::iter::repeat(zero()).take(if crossed { self.dh } else { self.d() })),
            }
        }
        col
    }

    fn rank(rows: usize, cols: &[Vec<Scalar>]) -> usize {
        if cols.is_empty() || rows == 0 {
            return 0;
        }
        Matrix::from_columns(rows, cols).unwrap().rank()
    }

    /// `(even, odd)` dimensions of `Hⁿ` for `n = 1..=max_n`.
    pub fn cohomology(&self, omega: &Table, max_n: usize, crossed: bool) -> Vec<(usize, usize)> {
        let mut dims = Vec::new();
        let mut ranks = Vec::new();
        for n in 1..=max_n {
            let here = self.points(n, crossed);
            let next = self.points(n + 1, crossed);
            let width = if crossed { self.dh } else { self.d() };
            let span = self.spanning(n, crossed);
            let mut dim = [0, 0];
            let mut rank = [0, 0];
            for p in 0..2 {
                let cols: Vec<Vec<Scalar>> = span[p].iter().map(|t| self.flatten(t, &here, crossed)).collect();
                dim[p] = Self::rank(here.len() * width, &cols);
                let imgs: Vec<Vec<Scalar>> =
                    span[p].iter().map(|t| self.image(omega, t, n, p as u8, &next, crossed)).collect();
                rank[p] = Self::rank(next.len() * width, &imgs);
            }
            dims.push(dim);
            ranks.push(rank);
        }
        (0..max_n)
            .map(|k| {
                let prev = if k == 0 { [0, 0] } else { ranks[k - 1] };
                let h = |p: usize| dims[k][p] - ranks[k][p] - prev[p];
                (h(0), h(1))
            })
            .collect()
    }

    /// Checks `[ω, [ω, T]] = 0` on every spanning element of `Cⁿ`.
    pub fn squares_to_zero(&self, omega: &Table, n: usize, crossed: bool) -> bool {
        let span = self.spanning(n, crossed);
        let full = all_tuples(self.d(), n + 1);
        let outer = self.points(n + 2, crossed);
        for p in 0..2 {
            for t in &span[p] {
                let mut once = Table::new();
                for xs in &full {
                    if crossed && xs.iter().any(|&i| i >= self.dg) {
                        continue;
                    }
                    let mut v = self.bracket_at((omega, 2, 0), (t, n, p as u8), xs);
                    if crossed {
                        for x in v.iter_mut().take(self.dg) {
                            *x = zero();
                        }
                    }
                    Self::insert(&mut once, xs.clone(), v);
                }
                let twice = self.image(omega, &once, n + 1, p as u8, &outer, crossed);
                if twice.iter().any(|x| *x != zero()) {
                    return false;
                }
            }
        }
        true
    }
}
