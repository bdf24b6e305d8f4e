use std::fmt::Write as _;

use anyhow::{bail, Context as _, Result};
use permsym::irreps::{self, Irrep, VerifyMode};
use permsym::perm::{self, Permutation};
use permsym::physics::{self, CompositeParticle, ModelHamiltonian};
use permsym::projection::{self, ProductState, TensorSpace};
use permsym::young::{self, YoungDiagram};
use permsym::{Complex64, Limits};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::format::{complex_pair, fmt_float, Header, Report};
use crate::input::{self, HamiltonianSpec, ProductSpec};

/// Tolerance for every floating-point check the CLI reports.
pub const CHECK_TOL: f64 = 1e-10;
/// Largest `n` for which `verify` runs the great-orthogonality sums.
pub const VERIFY_ORTHOGONALITY_N: usize = 5;
/// Largest `n` for which `verify` decomposes a product state.
pub const VERIFY_PROJECTION_N: usize = 5;
/// Largest `n` for which `verify` builds dense density operators.
pub const VERIFY_DENSITY_N: usize = 4;

#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub seed: u64,
    pub limits: Limits,
}

impl Context {
    fn header(&self, command: &'static str) -> Header {
        Header::new(command, self.seed, self.limits)
    }
}

fn label(d: &YoungDiagram) -> String {
    d.to_string()
}

fn joined(items: &[usize], sep: &str) -> String {
    items
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
struct DiagramRow {
    partition: Vec<usize>,
    dimension: u64,
}

#[derive(Serialize)]
struct DiagramsBody {
    n: usize,
    count: usize,
    diagrams: Vec<DiagramRow>,
    sum_of_squared_dimensions: u64,
    group_order: u64,
}

pub fn diagrams(ctx: &Context, n: usize) -> Result<Report> {
    let parts = young::partitions_with_limit(n, ctx.limits.partition_n)?;
    let sum: u128 = parts.iter().map(|d| u128::from(d.dimension()).pow(2)).sum();
    let order = perm::factorial(n);
    let rows: Vec<DiagramRow> = parts
        .iter()
        .map(|d| DiagramRow {
            partition: d.rows().to_vec(),
            dimension: d.dimension(),
        })
        .collect();
    let table = rows
        .iter()
        .map(|r| vec![joined(&r.partition, ","), r.dimension.to_string()])
        .collect();
    let body = DiagramsBody {
        n,
        count: rows.len(),
        diagrams: rows,
        sum_of_squared_dimensions: u64::try_from(sum)?,
        group_order: u64::try_from(order)?,
    };
    Ok(Report::new(ctx.header("diagrams"), sum == order, &body)?
        .with_table(vec!["partition", "dimension"], table))
}

#[derive(Serialize)]
struct TableauRow {
    index: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct TableauxBody {
    diagram: Vec<usize>,
    dimension: u64,
    tableaux: Vec<TableauRow>,
}

pub fn tableaux(ctx: &Context, diagram: &YoungDiagram) -> Result<Report> {
    if diagram.n() > ctx.limits.partition_n {
        bail!(
            "diagram has {} boxes; cap is {}",
            diagram.n(),
            ctx.limits.partition_n
        );
    }
    let rows: Vec<TableauRow> = diagram
        .standard_tableaux()
        .iter()
        .enumerate()
        .map(|(i, t)| TableauRow {
            index: i + 1,
            rows: t.rows(),
        })
        .collect();
    let table = rows
        .iter()
        .map(|r| {
            let text: Vec<String> = r.rows.iter().map(|row| joined(row, " ")).collect();
            vec![r.index.to_string(), text.join("/")]
        })
        .collect();
    let body = TableauxBody {
        diagram: diagram.rows().to_vec(),
        dimension: diagram.dimension(),
        tableaux: rows,
    };
    Ok(Report::new(ctx.header("tableaux"), true, &body)?.with_table(vec!["index", "rows"], table))
}

#[derive(Serialize)]
struct IrrepBody {
    diagram: Vec<usize>,
    permutation: Vec<usize>,
    ordering: &'static str,
    dimension: usize,
    character: f64,
    matrix: Vec<Vec<f64>>,
}

pub fn irrep(ctx: &Context, diagram: &YoungDiagram, p: &Permutation) -> Result<Report> {
    if diagram.n() > ctx.limits.group_n {
        bail!(
            "diagram has {} boxes; group cap is {}",
            diagram.n(),
            ctx.limits.group_n
        );
    }
    let irrep = Irrep::new(diagram);
    let m = irrep.matrix(p)?;
    let matrix: Vec<Vec<f64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut table = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            table.push(vec![
                (i + 1).to_string(),
                (j + 1).to_string(),
                fmt_float(*v),
            ]);
        }
    }
    let body = IrrepBody {
        diagram: diagram.rows().to_vec(),
        permutation: p.one_line(),
        ordering: permsym::TABLEAU_ORDERING,
        dimension: irrep.dimension(),
        character: m.trace(),
        matrix,
    };
    Ok(Report::new(ctx.header("irrep"), true, &body)?
        .with_table(vec!["row", "column", "value"], table))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Serialize)]
struct Check {
    check: &'static str,
    subject: String,
    value: f64,
    tolerance: f64,
    passed: bool,
}

impl Check {
    fn below(check: &'static str, subject: String, value: f64) -> Self {
        Check {
            check,
            subject,
            value,
            tolerance: CHECK_TOL,
            passed: value < CHECK_TOL,
        }
    }
}

#[derive(Serialize)]
struct VerifyBody {
    n: usize,
    mode: &'static str,
    trials: Option<usize>,
    injected_fault: Option<usize>,
    source_orbitals: Vec<usize>,
    checks: Vec<Check>,
    skipped: Vec<String>,
}

pub fn verify(
    ctx: &Context,
    n: usize,
    mode: Mode,
    trials: usize,
    inject_fault: Option<usize>,
) -> Result<Report> {
    if n == 0 {
        bail!("n must be positive");
    }
    if n > ctx.limits.group_n {
        bail!("n = {n} exceeds the group cap {}", ctx.limits.group_n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let verify_mode = match mode {
        Mode::Exhaustive => VerifyMode::Exhaustive,
        Mode::Random => VerifyMode::Random { trials },
    };
    let build = |d: &YoungDiagram| match inject_fault {
        Some(k) => Irrep::new(d).with_negated_generator(k),
        None => Irrep::new(d),
    };
    let parts = young::partitions_with_limit(n, ctx.limits.partition_n)?;
    let irreps: Vec<Irrep> = parts.iter().map(build).collect();
    let mut checks = Vec::new();
    let mut skipped = Vec::new();

    let sum: u128 = parts.iter().map(|d| u128::from(d.dimension()).pow(2)).sum();
    checks.push(Check {
        check: "sum_of_squared_dimensions",
        subject: format!("S_{n}"),
        value: sum as f64 - perm::factorial(n) as f64,
        tolerance: 0.0,
        passed: sum == perm::factorial(n),
    });

    for irrep in &irreps {
        let rep = irreps::verify_representation(irrep, verify_mode, &mut rng)?;
        let subject = label(irrep.diagram());
        checks.push(Check::below(
            "homomorphism",
            subject.clone(),
            rep.max_homomorphism_error,
        ));
        checks.push(Check::below(
            "orthogonality",
            subject,
            rep.max_orthogonality_error,
        ));
    }

    if mode == Mode::Exhaustive && n <= VERIFY_ORTHOGONALITY_N {
        for a in &irreps {
            for b in &irreps {
                let e = irreps::great_orthogonality_error(a, b)?;
                let subject = format!("{}|{}", label(a.diagram()), label(b.diagram()));
                checks.push(Check::below("great_orthogonality", subject, e));
            }
        }
    } else {
        skipped.push("great_orthogonality".to_string());
    }

    // source: orbitals 1..=n, shuffled in random mode
    let source_orbitals = match mode {
        Mode::Exhaustive => (1..=n).collect(),
        Mode::Random => Permutation::random(n, &mut rng)?.one_line(),
    };
    let xi = if n <= VERIFY_PROJECTION_N {
        let space = TensorSpace::with_limits(n, n, ctx.limits)?;
        Some(ProductState::new(space, &source_orbitals)?)
    } else {
        None
    };
    if let Some(xi) = xi.as_ref() {
        let dec = projection::decompose_regular(xi)?;
        let subject = format!("S_{n}");
        checks.push(Check::below(
            "projection_orthonormality",
            subject.clone(),
            dec.orthonormality_error,
        ));
        checks.push(Check::below(
            "projection_completeness",
            subject,
            dec.completeness_error,
        ));
    } else {
        skipped.push("projection".to_string());
    }
    match xi.as_ref().filter(|_| n <= VERIFY_DENSITY_N) {
        Some(xi) => {
            for irrep in &irreps {
                for t in 0..irrep.dimension() {
                    let d = physics::density_operator_with(irrep, t, xi)?;
                    let rep = physics::check_density_invariance(&d)?;
                    let subject = format!("{} t={}", label(irrep.diagram()), t + 1);
                    checks.push(Check::below(
                        "density_invariance",
                        subject,
                        rep.max_deviation,
                    ));
                }
            }
        }
        None => skipped.push("density_invariance".to_string()),
    }

    let passed = checks.iter().all(|c| c.passed);
    let table = checks
        .iter()
        .map(|c| {
            vec![
                c.check.to_string(),
                c.subject.clone(),
                fmt_float(c.value),
                fmt_float(c.tolerance),
                c.passed.to_string(),
            ]
        })
        .collect();
    let body = VerifyBody {
        n,
        mode: match mode {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        },
        trials: (mode == Mode::Random).then_some(trials),
        injected_fault: inject_fault,
        source_orbitals,
        checks,
        skipped,
    };
    Ok(
        Report::new(ctx.header("verify"), passed, &body)?.with_table(
            vec!["check", "subject", "value", "tolerance", "passed"],
            table,
        ),
    )
}

/// Source product state, symmetry label, and tableau indices, merged from
/// an optional spec file and command-line overrides.
#[derive(Debug, Clone, Default)]
pub struct SourceArgs {
    pub spec: Option<ProductSpec>,
    pub m: Option<usize>,
    pub orbitals: Option<Vec<usize>>,
    pub diagram: Option<YoungDiagram>,
    pub r: Option<usize>,
    pub t: Option<usize>,
}

struct Source {
    xi: ProductState,
    diagram: YoungDiagram,
    r: usize,
    t: usize,
}

impl SourceArgs {
    fn resolve(self, limits: Limits) -> Result<Source> {
        let spec = self.spec.unwrap_or(ProductSpec {
            m: 0,
            orbitals: Vec::new(),
            diagram: None,
            r: None,
            t: None,
        });
        let orbitals = self.orbitals.unwrap_or(spec.orbitals);
        if orbitals.is_empty() {
            bail!("no source orbitals given");
        }
        let m = self.m.unwrap_or(spec.m);
        if m == 0 {
            bail!("one-particle dimension m not given");
        }
        let diagram = match (self.diagram, spec.diagram) {
            (Some(d), _) => d,
            (None, Some(rows)) => {
                YoungDiagram::new(rows).context("invalid diagram in spec file")?
            }
            (None, None) => bail!("no diagram given"),
        };
        if diagram.n() != orbitals.len() {
            bail!(
                "diagram [{diagram}] has {} boxes but {} orbitals were given",
                diagram.n(),
                orbitals.len()
            );
        }
        let r = input::tableau_index(self.r.or(spec.r).unwrap_or(1), &diagram, "r")?;
        let t = input::tableau_index(self.t.or(spec.t).unwrap_or(1), &diagram, "t")?;
        let xi = ProductSpec {
            m,
            orbitals,
            diagram: None,
            r: None,
            t: None,
        }
        .product_state(limits)?;
        Ok(Source { xi, diagram, r, t })
    }
}

#[derive(Serialize)]
struct StateJson {
    n: usize,
    m: usize,
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct ProjectBody {
    diagram: Vec<usize>,
    r: usize,
    t: usize,
    source: Vec<usize>,
    norm: f64,
    state: StateJson,
}

pub fn project(ctx: &Context, args: SourceArgs) -> Result<Report> {
    let src = args.resolve(ctx.limits)?;
    let state = projection::project(&src.diagram, src.r, src.t, &src.xi)?;
    let space = *src.xi.space();
    let amps = state.vector.amplitudes();
    let table = amps
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm_sqr() > 0.0)
        .map(|(i, a)| {
            let config: Vec<usize> = space.decode(i).iter().map(|o| o + 1).collect();
            vec![
                i.to_string(),
                joined(&config, " "),
                fmt_float(a.re),
                fmt_float(a.im),
            ]
        })
        .collect();
    let norm = state.vector.norm();
    let body = ProjectBody {
        diagram: src.diagram.rows().to_vec(),
        r: src.r + 1,
        t: src.t + 1,
        source: src.xi.orbitals_one_based(),
        norm,
        state: StateJson {
            n: space.n_particles(),
            m: space.one_particle_dim(),
            amplitudes: amps.iter().map(|&a| complex_pair(a)).collect(),
        },
    };
    let passed = (norm - 1.0).abs() < CHECK_TOL;
    Ok(Report::new(ctx.header("project"), passed, &body)?
        .with_table(vec!["index", "configuration", "re", "im"], table))
}

#[derive(Serialize)]
struct PermutationDeviation {
    permutation: Vec<usize>,
    deviation: f64,
}

#[derive(Serialize)]
struct Probability {
    configuration: Vec<usize>,
    probability: f64,
}

#[derive(Serialize)]
struct SingleProjector {
    r: usize,
    max_deviation: f64,
}

#[derive(Serialize)]
struct DensityBody {
    diagram: Vec<usize>,
    t: usize,
    source: Vec<usize>,
    trace: [f64; 2],
    hermiticity_error: f64,
    max_deviation: f64,
    max_diagonal_deviation: f64,
    tolerance: f64,
    per_permutation: Vec<PermutationDeviation>,
    diagonal: Vec<Probability>,
    single_vector_projectors: Vec<SingleProjector>,
}

pub fn density(ctx: &Context, args: SourceArgs) -> Result<Report> {
    let src = args.resolve(ctx.limits)?;
    let irrep = Irrep::new(&src.diagram);
    let d = physics::density_operator_with(&irrep, src.t, &src.xi)?;
    let rep = physics::check_density_invariance(&d)?;
    let space = d.space;
    let diagonal = d
        .diagonal()
        .into_iter()
        .enumerate()
        .filter(|(_, p)| *p != 0.0)
        .map(|(i, probability)| Probability {
            configuration: space.decode(i).iter().map(|o| o + 1).collect(),
            probability,
        })
        .collect();
    let mut single = Vec::new();
    for state in projection::project_all_rows(&irrep, src.t, &src.xi)? {
        let pure = physics::pure_state_projector(&state)?;
        single.push(SingleProjector {
            r: state.r + 1,
            max_deviation: physics::check_density_invariance(&pure)?.max_deviation,
        });
    }
    let per_permutation: Vec<PermutationDeviation> = rep
        .per_permutation
        .iter()
        .map(|(p, dev)| PermutationDeviation {
            permutation: p.one_line(),
            deviation: *dev,
        })
        .collect();
    let table = per_permutation
        .iter()
        .map(|pd| vec![joined(&pd.permutation, " "), fmt_float(pd.deviation)])
        .collect();
    let passed = rep.max_deviation < CHECK_TOL;
    let body = DensityBody {
        diagram: src.diagram.rows().to_vec(),
        t: src.t + 1,
        source: src.xi.orbitals_one_based(),
        trace: complex_pair(d.trace()),
        hermiticity_error: d.hermiticity_error(),
        max_deviation: rep.max_deviation,
        max_diagonal_deviation: rep.max_diagonal_deviation,
        tolerance: CHECK_TOL,
        per_permutation,
        diagonal,
        single_vector_projectors: single,
    };
    Ok(Report::new(ctx.header("density"), passed, &body)?
        .with_table(vec!["permutation", "deviation"], table))
}

#[derive(Serialize)]
struct EnergyRow {
    diagram: Vec<usize>,
    t: usize,
    e_closed_form: f64,
    e_trace: f64,
    discrepancy: f64,
    passed: bool,
}

#[derive(Serialize)]
struct EnergyBody {
    m: usize,
    orbitals: Vec<usize>,
    tolerance: f64,
    max_commutator_norm: f64,
    energies: Vec<EnergyRow>,
}

pub fn energy(
    ctx: &Context,
    spec: &HamiltonianSpec,
    diagram: Option<YoungDiagram>,
    t: Option<usize>,
) -> Result<Report> {
    let h: ModelHamiltonian = spec.hamiltonian()?;
    let n = spec.orbitals.len();
    let space = TensorSpace::with_limits(n, spec.m, ctx.limits)?;
    let xi = ProductState::new(space, &spec.orbitals)?;
    if !xi.has_distinct_orbitals() {
        bail!("orbitals must be pairwise distinct");
    }
    let diagram = match (diagram, &spec.diagram) {
        (Some(d), _) => Some(d),
        (None, Some(rows)) => {
            Some(YoungDiagram::new(rows.clone()).context("invalid diagram in spec file")?)
        }
        (None, None) => None,
    };
    let t = t.or(spec.t);
    if t.is_some() && diagram.is_none() {
        bail!("t given without a diagram");
    }
    let diagrams = match &diagram {
        Some(d) => {
            if d.n() != n {
                bail!(
                    "diagram [{d}] has {} boxes but {n} orbitals were given",
                    d.n()
                );
            }
            vec![d.clone()]
        }
        None => young::partitions_with_limit(n, ctx.limits.partition_n)?,
    };

    let full = physics::build_full_hamiltonian(&h, &space)?;
    let max_commutator_norm = physics::commutator_norms(&full, &space)?
        .into_iter()
        .map(|(_, v)| v)
        .fold(0.0, f64::max);

    let mut rows = Vec::new();
    for d in &diagrams {
        let irrep = Irrep::new(d);
        let ts: Vec<usize> = match t {
            Some(one_based) => vec![input::tableau_index(one_based, d, "t")?],
            None => (0..irrep.dimension()).collect(),
        };
        for t in ts {
            let e_closed_form = physics::energy_closed_form_with(&irrep, t, &spec.orbitals, &h)?;
            let e_trace = physics::energy_trace_with(&irrep, t, &xi, &h)?;
            let discrepancy = (e_closed_form - e_trace).abs();
            rows.push(EnergyRow {
                diagram: d.rows().to_vec(),
                t: t + 1,
                e_closed_form,
                e_trace,
                discrepancy,
                passed: discrepancy < CHECK_TOL,
            });
        }
    }
    let passed = rows.iter().all(|r| r.passed) && max_commutator_norm < CHECK_TOL;
    let table = rows
        .iter()
        .map(|r| {
            vec![
                joined(&r.diagram, ","),
                r.t.to_string(),
                fmt_float(r.e_closed_form),
                fmt_float(r.e_trace),
                fmt_float(r.discrepancy),
                r.passed.to_string(),
            ]
        })
        .collect();
    let body = EnergyBody {
        m: spec.m,
        orbitals: spec.orbitals.clone(),
        tolerance: CHECK_TOL,
        max_commutator_norm,
        energies: rows,
    };
    Ok(
        Report::new(ctx.header("energy"), passed, &body)?.with_table(
            vec![
                "diagram",
                "t",
                "e_closed_form",
                "e_trace",
                "discrepancy",
                "passed",
            ],
            table,
        ),
    )
}

#[derive(Serialize)]
struct GenealogyNode {
    id: usize,
    partition: Vec<usize>,
    in_degree: usize,
    out_degree: usize,
}

#[derive(Serialize)]
struct GenealogyBody {
    n_max: usize,
    nodes: Vec<GenealogyNode>,
    edges: Vec<[usize; 2]>,
}

pub fn genealogy(ctx: &Context, n_max: usize) -> Result<Report> {
    let g = young::genealogy_graph_with_limit(n_max, ctx.limits.genealogy_n)?;
    let mut dot = String::from("digraph genealogy {\n  rankdir=TB;\n");
    for (i, d) in g.nodes.iter().enumerate() {
        writeln!(dot, "  n{i} [label=\"{}\"];", label(d))?;
    }
    for &(a, b) in &g.edges {
        writeln!(dot, "  n{a} -> n{b};")?;
    }
    dot.push_str("}\n");
    let nodes: Vec<GenealogyNode> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(i, d)| GenealogyNode {
            id: i,
            partition: d.rows().to_vec(),
            in_degree: g.in_degree(i),
            out_degree: g.out_degree(i),
        })
        .collect();
    let table = g
        .edges
        .iter()
        .map(|&(a, b)| vec![label(&g.nodes[a]), label(&g.nodes[b])])
        .collect();
    let body = GenealogyBody {
        n_max,
        nodes,
        edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
    };
    Ok(Report::new(ctx.header("genealogy"), true, &body)?
        .with_table(vec!["parent", "child"], table)
        .with_graph(dot))
}

#[derive(Serialize)]
struct ProbeRow {
    configuration: Vec<usize>,
    density: f64,
    permuted_density: f64,
}

#[derive(Serialize)]
struct ProbeBody {
    c1: [f64; 2],
    c2: [f64; 2],
    source: Vec<usize>,
    m: usize,
    densities: Vec<ProbeRow>,
    max_pointwise_difference: f64,
    indistinguishable: bool,
}

pub fn probe(
    ctx: &Context,
    c1: Complex64,
    c2: Complex64,
    m: usize,
    orbitals: &[usize],
) -> Result<Report> {
    let space = TensorSpace::with_limits(2, m, ctx.limits)?;
    let xi = ProductState::new(space, orbitals)?;
    let rep = physics::superposition_probe(c1, c2, &xi)?;
    let densities: Vec<ProbeRow> = rep
        .density_diagonal
        .iter()
        .zip(&rep.permuted_density_diagonal)
        .enumerate()
        .filter(|(_, (a, b))| **a != 0.0 || **b != 0.0)
        .map(|(i, (&density, &permuted_density))| ProbeRow {
            configuration: space.decode(i).iter().map(|o| o + 1).collect(),
            density,
            permuted_density,
        })
        .collect();
    let table = densities
        .iter()
        .map(|r| {
            vec![
                joined(&r.configuration, " "),
                fmt_float(r.density),
                fmt_float(r.permuted_density),
            ]
        })
        .collect();
    let body = ProbeBody {
        c1: complex_pair(c1),
        c2: complex_pair(c2),
        source: orbitals.to_vec(),
        m,
        densities,
        max_pointwise_difference: rep.max_pointwise_difference,
        indistinguishable: rep.max_pointwise_difference < 1e-12,
    };
    Ok(Report::new(ctx.header("probe"), true, &body)?
        .with_table(vec!["configuration", "density", "permuted_density"], table))
}

#[derive(Serialize)]
struct ParafermiJson {
    rank: u32,
    max_occupancy: u32,
    reduces_to_fermi_dirac: bool,
}

#[derive(Serialize)]
struct CompositeBody {
    fermion_constituents: u64,
    twice_spin: Option<u64>,
    statistics: &'static str,
    exchange_sign: i32,
    spin_exchange_sign: Option<i32>,
    parafermi: Option<ParafermiJson>,
}

pub fn composite(
    ctx: &Context,
    fermions: u64,
    twice_spin: Option<i64>,
    parafermi_rank: Option<u32>,
) -> Result<Report> {
    let spin_sign = twice_spin.map(physics::spin_exchange_sign).transpose()?;
    let c = CompositeParticle {
        fermion_constituents: fermions,
        twice_spin: twice_spin.map(|s| s as u64),
    };
    let stats = physics::composite_statistics(&c)?;
    let parafermi = parafermi_rank
        .map(|p| {
            physics::parafermi_max_occupancy(p).map(|o| ParafermiJson {
                rank: p,
                max_occupancy: o.max_occupancy,
                reduces_to_fermi_dirac: o.reduces_to_fermi_dirac,
            })
        })
        .transpose()?;
    let body = CompositeBody {
        fermion_constituents: fermions,
        twice_spin: c.twice_spin,
        statistics: match stats {
            physics::Statistics::Boson => "boson",
            physics::Statistics::Fermion => "fermion",
        },
        exchange_sign: stats.exchange_sign().value(),
        spin_exchange_sign: spin_sign.map(|s| s.value()),
        parafermi,
    };
    let passed = spin_sign.is_none_or(|s| s == stats.exchange_sign());
    let table = vec![vec![
        body.fermion_constituents.to_string(),
        body.twice_spin.map_or(String::new(), |s| s.to_string()),
        body.statistics.to_string(),
        body.exchange_sign.to_string(),
    ]];
    Ok(
        Report::new(ctx.header("composite"), passed, &body)?.with_table(
            vec![
                "fermion_constituents",
                "twice_spin",
                "statistics",
                "exchange_sign",
            ],
            table,
        ),
    )
}
