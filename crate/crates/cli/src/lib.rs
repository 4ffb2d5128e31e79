//! Command-line front end over `scrollar-core`.

pub mod report;

use clap::{Args, Parser, Subcommand};

use scrollar_core::characters::{character, p_lambda, CharacterTable};
use scrollar_core::groups::{n_of, p_of_subgroup, permutation_character, registry, PermSubgroup};
use scrollar_core::localmodel::{
    build_model_with_bound, check_specht, gram_valuation, isotypic_lattice, monomial_gram_valuation,
    specht_family_report, E_BOUND_ENV, MAX_MODEL_E,
};
use scrollar_core::ramify::{addendum_table, compare_with_reference, format_t_power, resolvent_geometry, BranchData};
use scrollar_core::scrollar::{
    dual_scrollars, hook_scrollars, maroni_bound_partition, maroni_bound_subgroup, resolvent_summary,
    schreyer_interval, splitting_partition, volume, AffineBound, ScrollarMultiset, ScrollarProfile,
};
use scrollar_core::tableaux::{dimension, enumerate_partitions, factorial, standard_tableaux, Partition};
use scrollar_core::{Error, Result};

pub use report::{Cell, Format, Report, Table};

#[derive(Debug, Parser)]
#[command(name = "scrolls", version, about = "Scrollar invariants, resolvents and S_d characters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "md")]
    pub format: Format,
    /// Accept profiles whose largest invariant exceeds the Maroni bound.
    #[arg(long, global = true)]
    pub skip_maroni_validation: bool,
    /// Allow the expensive local-model computations at e = 5.
    #[arg(long, global = true)]
    pub slow_tests: bool,
    /// Largest local-model size built.
    #[arg(long, global = true, env = E_BOUND_ENV)]
    pub e_bound: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Partitions of d with dimension and p(λ).
    Partitions {
        #[arg(long)]
        d: usize,
    },
    /// One character value χ_λ(e).
    Char {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        class: Partition,
    },
    /// The character table of S_d.
    Chartable {
        #[arg(long)]
        d: usize,
    },
    /// Invariants of a registry subgroup.
    Group {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        subgroup: String,
    },
    #[command(subcommand)]
    Scrollar(ScrollarCommand),
    #[command(subcommand)]
    Ramify(RamifyCommand),
    /// Shorthand for `ramify addendum`.
    Addendum(SubgroupArgs),
    #[command(subcommand)]
    Localmodel(LocalCommand),
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub g: u64,
    /// Scrollar invariants e_1, …, e_{d−1}.
    #[arg(long, value_delimiter = ',')]
    pub e: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct SubgroupArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub subgroup: String,
}

#[derive(Debug, Subcommand)]
pub enum ScrollarCommand {
    /// Invariants of the hook (d−i, 1^i).
    Hooks {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        i: usize,
    },
    /// p(λ)(g + d − 1).
    Volume {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lambda: Partition,
    },
    /// Invariants of the conjugate partition from those of λ.
    Dual {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_delimiter = ',')]
        values: Vec<u64>,
    },
    /// Invariant-level summary of a resolvent.
    Resolvent {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        subgroup: String,
    },
    /// Maroni-type bounds as affine functions of g.
    Bounds {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        schreyer: Option<usize>,
        /// Evaluate every bound at this genus.
        #[arg(long)]
        g: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RamifyCommand {
    /// Smoothness, irreducibility and genus of a resolvent from branch data.
    Analyze {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        subgroup: String,
        /// Patterns such as `2,1,1*6;3,1`.
        #[arg(long)]
        branch: String,
        #[arg(long)]
        galois: Option<String>,
    },
    /// Local table over every ramification pattern, with discrepancies
    /// against the printed reference where one exists.
    Addendum(SubgroupArgs),
}

#[derive(Debug, Subcommand)]
pub enum LocalCommand {
    /// Discriminant valuations of isotypic lattices.
    Disc {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Higher Specht element for a pair of standard tableaux.
    Specht {
        #[arg(long)]
        shape: Partition,
        /// 1-based index of S among the standard tableaux of the shape.
        #[arg(long = "S")]
        s: usize,
        /// 1-based index of T.
        #[arg(long = "T")]
        t: usize,
        /// Run the lattice membership tests.
        #[arg(long)]
        check: bool,
    },
    /// Trace of a monomial α_1^{l_1}⋯α_e^{l_e}.
    Trace {
        #[arg(long)]
        e: usize,
        #[arg(long, value_delimiter = ',')]
        monomial: Vec<usize>,
    },
}

/// Validated configuration for one invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub enforce_maroni: bool,
    pub slow_tests: bool,
    pub e_bound: usize,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        RunConfig {
            command: c.command,
            format: c.format,
            enforce_maroni: !c.skip_maroni_validation,
            slow_tests: c.slow_tests,
            e_bound: c.e_bound.unwrap_or(MAX_MODEL_E),
        }
    }
}

/// Exit status and captured output.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

pub fn run(config: RunConfig) -> Outcome {
    match build_report(&config) {
        Ok(r) => Outcome { code: EXIT_OK, stdout: r.render(config.format), stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_consistency() { EXIT_CONSISTENCY } else { EXIT_VALIDATION },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses arguments the way the binary does and runs them.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.into()),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn profile(p: &ProfileArgs, cfg: &RunConfig) -> Result<ScrollarProfile> {
    ScrollarProfile::new(p.d, p.g, p.e.clone(), cfg.enforce_maroni)
}

fn size_check(lambda: &Partition, d: usize) -> Result<()> {
    if lambda.size() != d {
        return Err(Error::SizeMismatch(format!("{lambda} is not a partition of {d}")));
    }
    Ok(())
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn warnings_table(p: &ScrollarProfile) -> Option<Table> {
    if p.warnings.is_empty() {
        return None;
    }
    let mut t = Table::new("warnings", &["warning"]);
    for w in &p.warnings {
        t.push(vec![w.as_str().into()]);
    }
    Some(t)
}

fn with_warnings(r: Report, p: &ScrollarProfile) -> Report {
    match warnings_table(p) {
        Some(t) => r.with(t),
        None => r,
    }
}

fn multiset_table(m: &ScrollarMultiset) -> Table {
    Table::fields(
        "invariants",
        vec![
            ("partition", m.label.as_str().into()),
            ("values", joined(&m.values).into()),
            ("count", m.len().into()),
            ("sum", m.sum().into()),
        ],
    )
}

fn build_report(cfg: &RunConfig) -> Result<Report> {
    match &cfg.command {
        Command::Partitions { d } => {
            let mut t = Table::new("partitions", &["partition", "dimension", "p", "conjugate", "hook"]);
            for l in enumerate_partitions(*d)? {
                t.push(vec![
                    l.to_string().into(),
                    dimension(&l).into(),
                    p_lambda(&l).into(),
                    l.conjugate().to_string().into(),
                    l.is_hook().into(),
                ]);
            }
            Ok(Report::new("partitions").with(t))
        }
        Command::Char { d, lambda, class } => {
            size_check(lambda, *d)?;
            size_check(class, *d)?;
            let t = Table::fields(
                "character",
                vec![
                    ("lambda", lambda.to_string().into()),
                    ("class", class.to_string().into()),
                    ("value", character(lambda, class)?.into()),
                    ("dimension", dimension(lambda).into()),
                    ("p", p_lambda(lambda).into()),
                ],
            );
            Ok(Report::new("char").with(t))
        }
        Command::Chartable { d } => {
            let table = CharacterTable::get(*d)?;
            let mut cols: Vec<String> = vec!["lambda".into()];
            cols.extend(table.partitions.iter().map(|e| e.to_string()));
            let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
            let mut t = Table::new("characters", &col_refs);
            for (l, row) in table.partitions.iter().zip(&table.values) {
                let mut r: Vec<Cell> = vec![l.to_string().into()];
                r.extend(row.iter().map(|&v| Cell::from(v)));
                t.push(r);
            }
            let mut sizes = Table::new("classes", &["class", "size", "centralizer"]);
            for (e, &n) in table.partitions.iter().zip(&table.class_sizes) {
                sizes.push(vec![e.to_string().into(), n.into(), e.centralizer_size().into()]);
            }
            Ok(Report::new("chartable").with(t).with(sizes))
        }
        Command::Group { d, subgroup } => group_report(&registry(subgroup, *d)?),
        Command::Scrollar(c) => scrollar_report(c, cfg),
        Command::Ramify(RamifyCommand::Addendum(a)) | Command::Addendum(a) => addendum_report(a),
        Command::Ramify(RamifyCommand::Analyze { profile: pa, subgroup, branch, galois }) => {
            let p = profile(pa, cfg)?;
            let h = registry(subgroup, p.d)?;
            let branch: BranchData = branch.parse()?;
            let g = galois.as_ref().map(|n| registry(n, p.d)).transpose()?;
            let geo = resolvent_geometry(&h, &branch, g.as_ref(), &p)?;
            let summary = Table::fields(
                "resolvent",
                vec![
                    ("subgroup", geo.subgroup.as_str().into()),
                    ("index", geo.index.into()),
                    ("smooth", geo.smooth.into()),
                    ("irreducible", geo.irreducible.map_or(Cell::text("unknown"), Cell::Bool)),
                    ("arithmetic_genus", geo.arithmetic_genus.into()),
                    ("normalization_euler", geo.normalization_euler.into()),
                    ("riemann_hurwitz_consistent", geo.riemann_hurwitz_consistent.into()),
                ],
            );
            let mut comps = Table::new("components", &["degree", "euler", "genus"]);
            for c in &geo.components {
                comps.push(vec![c.degree.into(), c.euler.into(), c.genus.map_or(Cell::text("n/a"), Cell::from)]);
            }
            let mut local = Table::new(
                "points",
                &["point", "e", "disc_order", "disc_maximal", "e_prime", "maximal", "non_maximal"],
            );
            for (label, a) in &geo.local {
                let bad: Vec<String> =
                    a.maximal_flags.iter().filter(|(_, b)| !b).map(|(l, _)| format!("({l})")).collect();
                local.push(vec![
                    label.as_str().into(),
                    a.e.to_string().into(),
                    a.order_disc_exponent.into(),
                    a.maximal_disc_exponent.into(),
                    a.local_pattern.to_string().into(),
                    a.is_maximal().into(),
                    bad.join(" ").into(),
                ]);
            }
            Ok(with_warnings(Report::new("ramify analyze").with(summary).with(comps).with(local), &p))
        }
        Command::Localmodel(c) => local_report(c, cfg),
    }
}

fn group_report(h: &PermSubgroup) -> Result<Report> {
    let d = h.degree();
    let summary = Table::fields(
        "subgroup",
        vec![
            ("name", h.name().into()),
            ("degree", d.into()),
            ("order", h.order().into()),
            ("index", h.index().into()),
            ("transitive", h.is_transitive().into()),
            ("p", Cell::rational(&p_of_subgroup(h)?)),
        ],
    );
    let chi = permutation_character(h);
    let mut classes = Table::new("permutation_character", &["class", "fixed_cosets", "n"]);
    for e in enumerate_partitions(d)? {
        classes.push(vec![e.to_string().into(), chi.value(&e).into(), n_of(h, &e).into()]);
    }
    let mut dec = Table::new("decomposition", &["lambda", "multiplicity"]);
    for (l, m) in chi.decompose()? {
        if m != 0 {
            dec.push(vec![l.to_string().into(), m.into()]);
        }
    }
    Ok(Report::new("group").with(summary).with(classes).with(dec))
}

fn bound_row(t: &mut Table, label: String, lo: Option<&AffineBound>, hi: &AffineBound, g: Option<u64>) {
    let at = |b: &AffineBound| g.map_or(Cell::text(""), |g| Cell::rational(&b.eval(g)));
    t.push(vec![
        label.into(),
        lo.map_or(Cell::text(""), |b| b.to_string().into()),
        hi.to_string().into(),
        lo.map_or(Cell::text(""), at),
        at(hi),
    ]);
}

fn scrollar_report(c: &ScrollarCommand, cfg: &RunConfig) -> Result<Report> {
    match c {
        ScrollarCommand::Hooks { profile: pa, i } => {
            let p = profile(pa, cfg)?;
            Ok(with_warnings(Report::new("scrollar hooks").with(multiset_table(&hook_scrollars(&p, *i)?)), &p))
        }
        ScrollarCommand::Volume { profile: pa, lambda } => {
            let p = profile(pa, cfg)?;
            let t = Table::fields(
                "volume",
                vec![
                    ("lambda", lambda.to_string().into()),
                    ("p", p_lambda(lambda).into()),
                    ("volume", volume(lambda, &p)?.into()),
                ],
            );
            Ok(with_warnings(Report::new("scrollar volume").with(t), &p))
        }
        ScrollarCommand::Dual { profile: pa, lambda, values } => {
            let p = profile(pa, cfg)?;
            let m = ScrollarMultiset::new(lambda.to_string(), values.clone());
            Ok(with_warnings(Report::new("scrollar dual").with(multiset_table(&dual_scrollars(&m, lambda, &p)?)), &p))
        }
        ScrollarCommand::Resolvent { profile: pa, subgroup } => {
            let p = profile(pa, cfg)?;
            let h = registry(subgroup, p.d)?;
            let s = resolvent_summary(&h, &p)?;
            let summary = Table::fields(
                "resolvent",
                vec![
                    ("subgroup", s.subgroup.as_str().into()),
                    ("index", s.index.into()),
                    ("invariant_count", s.invariant_count.into()),
                    ("total_volume", s.total_volume.into()),
                    ("arithmetic_genus", s.arithmetic_genus.into()),
                    ("maroni_bound", Cell::rational(&s.maroni_bound)),
                    ("full_multiset", s.full_multiset.as_ref().map_or(Cell::text(""), |m| joined(&m.values).into())),
                ],
            );
            let mut mults = Table::new("constituents", &["lambda", "multiplicity", "dimension", "p", "volume"]);
            for (l, m) in &s.multiplicities {
                mults.push(vec![
                    l.to_string().into(),
                    (*m).into(),
                    dimension(l).into(),
                    p_lambda(l).into(),
                    volume(l, &p)?.into(),
                ]);
            }
            Ok(with_warnings(Report::new("scrollar resolvent").with(summary).with(mults), &p))
        }
        ScrollarCommand::Bounds { d, subgroup, lambda, schreyer, g } => {
            let mut t = Table::new("bounds", &["target", "lower", "upper", "lower_at_g", "upper_at_g"]);
            let everything = subgroup.is_none() && lambda.is_none() && schreyer.is_none();
            if let Some(name) = subgroup {
                let h = registry(name, *d)?;
                bound_row(&mut t, format!("subgroup {}", h.name()), None, &maroni_bound_subgroup(&h)?, *g);
            }
            if let Some(l) = lambda {
                size_check(l, *d)?;
                bound_row(&mut t, format!("partition {l}"), None, &maroni_bound_partition(l), *g);
            }
            let range: Vec<usize> = match schreyer {
                Some(i) => vec![*i],
                None if everything => (1..=d.saturating_sub(3)).collect(),
                None => Vec::new(),
            };
            for i in range {
                let (lo, hi) = schreyer_interval(i, *d)?;
                let l = splitting_partition(i, *d)?;
                bound_row(&mut t, format!("syzygy {i} ({l})"), Some(&lo), &hi, *g);
            }
            Ok(Report::new("scrollar bounds").with(t))
        }
    }
}

fn addendum_report(a: &SubgroupArgs) -> Result<Report> {
    let h = registry(&a.subgroup, a.d)?;
    let table = addendum_table(&h)?;
    let mut t = Table::new("addendum", &["e", "disc_curve", "disc_order", "disc_maximal", "e_prime"]);
    for r in &table.rows {
        t.push(vec![
            r.e.pretty().into(),
            format_t_power(r.disc_curve).into(),
            format_t_power(r.disc_order).into(),
            format_t_power(r.disc_maximal).into(),
            r.e_prime.pretty().into(),
        ]);
    }
    let mut report = Report::new("ramify addendum").with(t);
    if let Some(diffs) = compare_with_reference(&table) {
        let mut dt = Table::new("discrepancies", &["e", "column", "printed", "computed", "analysis"]);
        for x in diffs {
            dt.push(vec![x.e.pretty().into(), x.column.into(), x.printed.into(), x.computed.into(), x.analysis.into()]);
        }
        report = report.with(dt);
    }
    Ok(report)
}

fn local_report(c: &LocalCommand, cfg: &RunConfig) -> Result<Report> {
    match c {
        LocalCommand::Disc { e, lambda } => {
            let m = build_model_with_bound(*e, cfg.e_bound)?;
            if *e >= 5 && lambda.is_none() && !cfg.slow_tests {
                return Err(Error::Resource("all isotypic lattices at e >= 5 need --slow-tests".into()));
            }
            let lambdas = match lambda {
                Some(l) => {
                    size_check(l, *e)?;
                    vec![l.clone()]
                }
                None => enumerate_partitions(*e)?,
            };
            let mut t = Table::new("discriminants", &["lambda", "rank", "valuation", "expected"]);
            for l in &lambdas {
                let lat = isotypic_lattice(&m, l)?;
                let v = gram_valuation(&m, &lat)?;
                let expected = p_lambda(l) * dimension(l) as u64 * (*e as u64 - 1);
                if v != expected as i64 {
                    return Err(Error::Consistency(format!("valuation {v} of ({l}) differs from {expected}")));
                }
                t.push(vec![l.to_string().into(), lat.rank().into(), v.into(), expected.into()]);
            }
            if lambda.is_none() {
                let full = monomial_gram_valuation(&m)?;
                let expected = (*e as u128 - 1) * factorial(*e) / 2;
                t.push(vec!["full".into(), m.order().into(), full.into(), expected.into()]);
            }
            Ok(Report::new("localmodel disc").with(t))
        }
        LocalCommand::Specht { shape, s, t, check } => {
            let tabs = standard_tableaux(shape);
            let pick = |i: usize| {
                tabs.get(i.wrapping_sub(1))
                    .ok_or_else(|| Error::OutOfRange(format!("tableau index {i} outside 1..={}", tabs.len())))
            };
            let (ts, ss) = (pick(*t)?, pick(*s)?);
            let poly = scrollar_core::localmodel::higher_specht(ts, ss)?;
            let mut fields = vec![
                ("shape", shape.to_string().into()),
                ("T", format!("{:?}", ts.rows()).into()),
                ("S", format!("{:?}", ss.rows()).into()),
                ("polynomial", poly.to_string().into()),
            ];
            let mut report = Report::new("localmodel specht");
            if *check {
                let m = build_model_with_bound(shape.size(), cfg.e_bound)?;
                let c = check_specht(&m, ts, ss)?;
                let opt = |x: Option<i64>| x.map_or(Cell::text("none"), Cell::from);
                fields.extend([
                    ("charge", c.charge.into()),
                    ("max_subscript", c.max_subscript.into()),
                    ("nonzero", c.nonzero.into()),
                    ("in_zero_lattice", c.in_zero_lattice.into()),
                    ("isotypic_pure", c.isotypic_pure.into()),
                    ("in_infinity_lattice", c.in_infinity_lattice.into()),
                    ("min_t_exponent", opt(c.min_t_exponent)),
                    ("min_t_inverse_exponent", opt(c.min_t_inverse_exponent)),
                    ("passed", c.passed().into()),
                ]);
                if shape.size() < 5 || cfg.slow_tests {
                    let f = specht_family_report(&m)?;
                    report = report.with(Table::fields(
                        "family",
                        vec![
                            ("family_size", f.family_size.into()),
                            ("rank", f.rank.into()),
                            ("all_checks_pass", f.all_checks_pass.into()),
                            ("family_valuation", f.family_valuation.into()),
                            ("full_valuation", f.full_valuation.into()),
                            ("saturation_equals_full", f.saturation_equals_full.into()),
                        ],
                    ));
                }
            }
            let mut tables = vec![Table::fields("specht", fields)];
            tables.extend(report.tables);
            report.tables = tables;
            Ok(report)
        }
        LocalCommand::Trace { e, monomial } => {
            let m = build_model_with_bound(*e, cfg.e_bound)?;
            if monomial.len() != *e {
                return Err(Error::SizeMismatch(format!("{} exponents for e = {e}", monomial.len())));
            }
            let tr = m.trace(&m.monomial(monomial))?;
            let mut t = Table::new("trace", &["t_power", "coefficient"]);
            for (k, c) in tr.terms() {
                t.push(vec![k.into(), Cell::rational(c)]);
            }
            Ok(Report::new("localmodel trace").with(Table::fields("input", vec![("e", (*e).into()), ("monomial", joined(monomial).into())])).with(t))
        }
    }
}
