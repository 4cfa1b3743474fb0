//! Command dispatch.

use std::sync::Arc;

use clap::ValueEnum;
use supercochain::crossed::{ch_cohomology_table, graph_failures};
use supercochain::deformation::triple_infinitesimal;
use supercochain::random::Sampler;
use supercochain::{
    ch_bracket, ch_bracket_closed_form, ch_mc_residual, check_action, check_crossed, circ, d_d_matrix, graph_check,
    mc_residual, nr_bracket, triple_cohomology_table, ActionMap, BlockShape, ChDeformation, CheckReport, Cochain,
    CrossedHom, Defect, Error, GradedSpace, LieSupActTriple, LinearMap, ParityDims, Scalar, Side, SuperAlgebra,
    TripleDeformation,
};

use crate::error::CliError;
use crate::problem::ProblemFile;
use crate::report::{
    CheckResult, Cohomology, CohomologyRow, DeformationResult, InfinitesimalResult, OrderResult, Report, SelfTest,
    Witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckAlgebra,
    CheckTriple,
    CheckCrossed,
    Cohomology,
    ChCohomology,
    Deform,
    ChDeform,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAlgebra => "check-algebra",
            Command::CheckTriple => "check-triple",
            Command::CheckCrossed => "check-crossed",
            Command::Cohomology => "cohomology",
            Command::ChCohomology => "ch-cohomology",
            Command::Deform => "deform",
            Command::ChDeform => "ch-deform",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ParityFilter {
    Even,
    Odd,
    #[default]
    Both,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub max_n: usize,
    pub parity: ParityFilter,
    /// Truncation order for deformations; the file's own order by default.
    pub order: Option<usize>,
    pub seed: Option<u64>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_n: 3,
            parity: ParityFilter::Both,
            order: None,
            seed: None,
        }
    }
}

const SELF_TEST_CASES: usize = 8;

pub fn run(command: Command, problem: &ProblemFile, file: &str, opts: &Options) -> Result<Report, CliError> {
    problem.sections_for(command.name())?;
    let mut report = Report::new(command.name(), file);
    match command {
        Command::CheckAlgebra => {
            for (name, alg) in [("g", &problem.g), ("h", &problem.h)] {
                if let Some(alg) = alg {
                    algebra_checks(&mut report, name, alg);
                }
            }
        }
        Command::CheckTriple => {
            let t = triple(problem)?;
            let axioms = triple_checks(&mut report, &t);
            let res = mc_residual(&t)?;
            let mut witnesses = Vec::new();
            for (name, block) in res.blocks() {
                block_witnesses(&t, name, block, &mut witnesses);
            }
            if axioms != res.is_zero() {
                return Err(Error::Invariant("triple axioms disagree with the Maurer-Cartan residual".into()).into());
            }
            report.push(CheckResult {
                name: "Maurer-Cartan residual [Π, Π]".into(),
                passed: res.is_zero(),
                witnesses,
            });
        }
        Command::Cohomology => {
            let t = triple(problem)?;
            if triple_checks(&mut report, &t) {
                let table = triple_cohomology_table(&t, max_n(opts)?)?;
                report.cohomology = Some(cohomology("triple", &table, opts.parity));
            }
        }
        Command::CheckCrossed => {
            crossed(&mut report, problem)?;
        }
        Command::ChCohomology => {
            if let Some(d) = crossed(&mut report, problem)? {
                let table = ch_cohomology_table(&d, max_n(opts)?)?;
                report.cohomology = Some(cohomology("crossed", &table, opts.parity));
            }
        }
        Command::Deform => deform(&mut report, problem, opts)?,
        Command::ChDeform => ch_deform(&mut report, problem, opts)?,
    }
    if let Some(seed) = opts.seed {
        report.self_test = Some(self_test(command, problem, seed)?);
    }
    Ok(report)
}

fn max_n(opts: &Options) -> Result<usize, CliError> {
    if opts.max_n == 0 {
        return Err(CliError::Validation {
            section: "--max-n".into(),
            message: "must be at least 1".into(),
        });
    }
    Ok(opts.max_n)
}

fn triple(problem: &ProblemFile) -> Result<LieSupActTriple, CliError> {
    let (g, h, rho) = (problem.g.clone().unwrap(), problem.h.clone().unwrap(), problem.action.clone().unwrap());
    Ok(LieSupActTriple::candidate(g, h, rho)?)
}

fn check_result(name: String, r: &CheckReport) -> CheckResult {
    CheckResult {
        name,
        passed: r.passed(),
        witnesses: r.violations.iter().map(Witness::from_violation).collect(),
    }
}

fn algebra_checks(report: &mut Report, name: &str, alg: &SuperAlgebra) -> bool {
    let skew = alg.check_super_skew();
    let jacobi = alg.check_jacobi();
    report.push(check_result(format!("{name} super-skew-symmetry"), &skew));
    report.push(check_result(format!("{name} Jacobi identity"), &jacobi));
    skew.passed() && jacobi.passed()
}

fn triple_checks(report: &mut Report, t: &LieSupActTriple) -> bool {
    let g = algebra_checks(report, "g", t.g());
    let h = algebra_checks(report, "h", t.h());
    let a = check_action(t.g(), t.h(), t.rho());
    report.push(check_result("action".into(), &a));
    g && h && a.passed()
}

fn labelled(space: &GradedSpace, v: &[Scalar]) -> Vec<(String, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| **x != Scalar::from_integer(0.into()))
        .map(|(i, x)| (space.label(i).to_string(), x.clone()))
        .collect()
}

fn block_witnesses(t: &LieSupActTriple, name: &str, block: &supercochain::Block, out: &mut Vec<Witness>) {
    let sum = t.sum();
    let target = sum.side_space(block.shape().target);
    for ((gk, hk), v) in block.entries() {
        let at = sum.block_tuple(gk, hk).iter().map(|&p| sum.space().label(p).to_string()).collect();
        out.push(Witness::new(name, at, &labelled(target, v)));
    }
}

fn cochain_witnesses(rule: &str, c: &Cochain) -> Vec<Witness> {
    c.entries()
        .map(|(k, v)| {
            let at = k.slots().iter().map(|&i| c.source().label(i).to_string()).collect();
            Witness::new(rule, at, &labelled(c.target(), v))
        })
        .collect()
}

fn defect_witnesses(rule: &str, d: &Defect, slots: &[&GradedSpace]) -> Vec<Witness> {
    d.labelled()
        .into_iter()
        .map(|(k, v)| {
            let at = k.iter().zip(slots).map(|(&i, s)| s.label(i).to_string()).collect();
            Witness::new(rule, at, &v)
        })
        .collect()
}

fn cohomology(complex: &str, table: &[ParityDims], filter: ParityFilter) -> Cohomology {
    let rows = table
        .iter()
        .enumerate()
        .map(|(k, d)| CohomologyRow {
            n: k + 1,
            even: (filter != ParityFilter::Odd).then_some(d.even),
            odd: (filter != ParityFilter::Even).then_some(d.odd),
        })
        .collect();
    Cohomology {
        complex: complex.into(),
        rows,
    }
}

/// Runs the triple and crossed-homomorphism checks; returns the verified
/// map when everything passes.
fn crossed(report: &mut Report, problem: &ProblemFile) -> Result<Option<CrossedHom>, CliError> {
    let t = triple(problem)?;
    if !triple_checks(report, &t) {
        return Ok(None);
    }
    let t = Arc::new(t);
    let d = CrossedHom::candidate(t.clone(), problem.crossed.clone().unwrap())?;
    let def = check_crossed(&d);
    let graph = graph_check(&d);
    let res = ch_mc_residual(&d)?;
    if def.passed() != graph || graph != res.is_zero() {
        return Err(Error::Invariant("crossed homomorphism checks disagree".into()).into());
    }
    let gs = t.g().space();
    let graph_witnesses = graph_failures(&d)
        .into_iter()
        .map(|(a, b)| {
            let at = vec![gs.label(a).to_string(), gs.label(b).to_string()];
            let defect = def.violations.iter().find(|v| v.at == at).map(|v| v.defect.clone()).unwrap_or_default();
            Witness::new("graph closure", at, &defect)
        })
        .collect();
    report.push(check_result("crossed homomorphism".into(), &def));
    report.push(CheckResult {
        name: "graph is a subalgebra of the semidirect product".into(),
        passed: graph,
        witnesses: graph_witnesses,
    });
    report.push(CheckResult {
        name: "Maurer-Cartan residual ∂D + ½⟦D, D⟧".into(),
        passed: res.is_zero(),
        witnesses: cochain_witnesses("residual", &res),
    });
    Ok(def.passed().then_some(d))
}

fn order(opts: &Options, file_order: usize) -> Result<usize, CliError> {
    match opts.order {
        Some(0) => Err(CliError::Validation {
            section: "--order".into(),
            message: "must be at least 1".into(),
        }),
        Some(n) => Ok(n),
        None => Ok(file_order),
    }
}

fn deform(report: &mut Report, problem: &ProblemFile, opts: &Options) -> Result<(), CliError> {
    let t = triple(problem)?;
    if !triple_checks(report, &t) {
        return Ok(());
    }
    let series = problem.deformation.as_ref().unwrap();
    let n = order(opts, series.pi.len())?;
    let (gs, hs) = (t.g().space().clone(), t.h().space().clone());
    let mut pi = vec![t.g().clone()];
    let mut rho = vec![t.rho().clone()];
    let mut mu = vec![t.h().clone()];
    for k in 0..n {
        pi.push(series.pi.get(k).cloned().unwrap_or_else(|| SuperAlgebra::new(gs.clone())));
        rho.push(series.rho.get(k).cloned().unwrap_or_else(|| ActionMap::zero(gs.clone(), hs.clone())));
        mu.push(series.mu.get(k).cloned().unwrap_or_else(|| SuperAlgebra::new(hs.clone())));
    }
    let def = TripleDeformation::new(t.clone(), pi, rho, mu)?;
    let mut orders = Vec::new();
    for k in 1..=n {
        let res = def.residual(k)?;
        let mut witnesses = Vec::new();
        for (name, d) in res.components() {
            let slots: [&GradedSpace; 3] = match name {
                "pi" => [&gs, &gs, &gs],
                "mu" => [&hs, &hs, &hs],
                "action" => [&gs, &gs, &hs],
                _ => [&gs, &hs, &hs],
            };
            witnesses.extend(defect_witnesses(name, d, &slots));
        }
        orders.push(OrderResult {
            order: k,
            passed: res.is_zero(),
            failing: res.failing().into_iter().map(String::from).collect(),
            witnesses,
        });
    }
    let infinitesimal = triple_infinitesimal(&def)?.map(|i| InfinitesimalResult {
        order: i.order,
        cocycle: i.cocycle,
    });
    finish_deformation(report, "triple", orders, infinitesimal);
    Ok(())
}

fn ch_deform(report: &mut Report, problem: &ProblemFile, opts: &Options) -> Result<(), CliError> {
    let Some(d) = crossed(report, problem)? else {
        return Ok(());
    };
    let series = problem.ch_deformation.as_ref().unwrap();
    let n = order(opts, series.len())?;
    let t = d.triple().clone();
    let (gs, hs) = (t.g().space().clone(), t.h().space().clone());
    let mut coeffs = vec![d.map().clone()];
    for k in 0..n {
        coeffs.push(series.get(k).cloned().unwrap_or_else(|| LinearMap::zero(gs.clone(), hs.clone())));
    }
    let def = ChDeformation::new(d.clone(), coeffs)?;
    let mut orders = Vec::new();
    for k in 1..=n {
        let res = def.residual(k)?;
        if res != def.residual_via_differential(k)? {
            return Err(Error::Invariant(format!("order {k} residual disagrees with its differential form")).into());
        }
        orders.push(OrderResult {
            order: k,
            passed: res.is_zero(),
            failing: if res.is_zero() { Vec::new() } else { vec!["crossed".into()] },
            witnesses: defect_witnesses("crossed", &res, &[&gs, &gs]),
        });
    }
    let mut infinitesimal = None;
    if let Some(k) = (1..=n).find(|&k| !def.coefficient(k).is_zero()) {
        let coords = CrossedHom::candidate(t.clone(), def.coefficient(k).clone())?.to_cochain().to_coords();
        let image = d_d_matrix(&d, 1)?.mul_vec(&coords)?;
        let cocycle = image.iter().all(|x| *x == Scalar::from_integer(0.into()));
        if cocycle != orders[k - 1].passed {
            return Err(Error::Invariant("infinitesimal disagrees with the order residual".into()).into());
        }
        infinitesimal = Some(InfinitesimalResult { order: k, cocycle });
    }
    finish_deformation(report, "crossed homomorphism", orders, infinitesimal);
    Ok(())
}

fn finish_deformation(
    report: &mut Report,
    kind: &str,
    orders: Vec<OrderResult>,
    infinitesimal: Option<InfinitesimalResult>,
) {
    report.push(CheckResult {
        name: format!("deformation equations up to order {}", orders.len()),
        passed: orders.iter().all(|o| o.passed),
        witnesses: Vec::new(),
    });
    report.deformation = Some(DeformationResult {
        kind: kind.into(),
        orders,
        infinitesimal,
    });
}

fn self_test(command: Command, problem: &ProblemFile, seed: u64) -> Result<SelfTest, CliError> {
    let mut s = Sampler::new(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    if command == Command::CheckAlgebra {
        for (name, alg) in [("g", &problem.g), ("h", &problem.h)] {
            let Some(alg) = alg else { continue };
            let space = alg.space();
            for case in 0..SELF_TEST_CASES {
                let arities: Vec<usize> = (0..3).map(|_| 1 + s.below(2)).collect();
                let f = s.cochain(space, arities[0], None);
                let g = s.cochain(space, arities[1], Some(supercochain::Parity::Even));
                let h = s.cochain(space, arities[2], Some(supercochain::Parity::Even));
                // With g, h even, the pre-Lie identity is symmetric in g and h up
                // to (−1)^{weight(g)·weight(h)}.
                let assoc = |a: &Cochain, b: &Cochain| -> supercochain::Result<Cochain> {
                    circ(&circ(&f, a)?, b)?.sub(&circ(&f, &circ(a, b)?)?)
                };
                let lhs = assoc(&g, &h)?;
                let rhs = assoc(&h, &g)?;
                let w = (arities[1] - 1) * (arities[2] - 1);
                let rhs = if w % 2 == 1 { rhs.neg() } else { rhs };
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("{name}: pre-Lie identity, case {case}"));
                }
            }
            let mu = alg.to_cochain();
            cases += 1;
            if circ(&mu, &mu)?.is_zero() != alg.check_jacobi().passed() {
                failures.push(format!("{name}: μ∘μ = 0 disagrees with the Jacobi check"));
            }
        }
    } else {
        let t = triple(problem)?;
        if t.check().passed() {
            let sum = t.sum();
            let pi = t.mc_element();
            let member = |s: &mut Sampler| {
                let arity = 1 + s.below(2);
                let j = s.below(arity + 1);
                let shape = if j == 0 {
                    BlockShape::new(arity, 0, Side::G)
                } else {
                    BlockShape::new(arity - j, j, Side::H)
                };
                let p = s.parity();
                (s.block(sum, shape, Some(p)).hat_extend(sum), arity - 1)
            };
            for case in 0..SELF_TEST_CASES {
                let (f, n) = member(&mut s);
                let (g, _) = member(&mut s);
                let d = |c: &Cochain| nr_bracket(&pi, c);
                let lhs = d(&nr_bracket(&f, &g)?)?;
                let second = nr_bracket(&f, &d(&g)?)?;
                let second = if n % 2 == 1 { second.neg() } else { second };
                let rhs = nr_bracket(&d(&f)?, &g)?.add(&second)?;
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("derivation law of [Π, ·], case {case}"));
                }
            }
            for case in 0..SELF_TEST_CASES {
                let (m, n) = (1 + s.below(2), 1 + s.below(2));
                let (p, q) = (s.parity(), s.parity());
                let f1 = s.cochain_between(t.g().space(), t.h().space(), m, Some(p));
                let f2 = s.cochain_between(t.g().space(), t.h().space(), n, Some(q));
                cases += 1;
                if ch_bracket(&t, &f1, &f2)? != ch_bracket_closed_form(&t, &f1, &f2)? {
                    failures.push(format!("closed form of ⟦·,·⟧, case {case}"));
                }
            }
        }
    }
    Ok(SelfTest { seed, cases, failures })
}
