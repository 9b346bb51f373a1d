//! Command-line front end for `teamlogic`: argument parsing, team and
//! strategy files, and the benchmark report.

pub mod bench;
pub mod dump;
mod error;
pub mod teams;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use teamlogic::dimension::{dim_lower_bound_by_maximal_teams, generator_for, succinctness_certificate};
use teamlogic::game::{density, min_separating_width, solve, Game, Position, SolveOptions, TeamSet, WidthResult};
use teamlogic::semantics::{is_local, joint_domain};
use teamlogic::translate::{parity_exp, parity_poly, relax, translate, Parity, TranslationMode};
use teamlogic::{
    denotation, eval, parse, AtomKind, BinOp, Domain, Formula, LitBase, Literal, Signature, Team,
    MAX_DENOTATION_PROPS,
};

pub use error::CliError;
use teams::{read_team_file, TeamFile};

/// Seed used by sampling commands unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 0x7EA4;

#[derive(Debug, Parser)]
#[command(name = "teamlogic", version, about = "Propositional team logic workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula on every team of a team file (SAT/UNSAT per team).
    Eval { formula: String, teams: PathBuf },
    /// Compare the denotations of two formulas.
    Equiv {
        f: String,
        g: String,
        /// Fresh propositions added to the joint domain (default: one per strict split, within capacity).
        #[arg(long)]
        extra: Option<usize>,
    },
    /// Translate a dependency atom into a formula without atoms.
    Translate {
        atom: String,
        #[arg(long, default_value = "EXP_LAX")]
        mode: String,
        /// Print length and width after the formula.
        #[arg(long)]
        stats: bool,
        /// Compare the translation with the atom on every team.
        #[arg(long)]
        check: bool,
    },
    /// Print a parity formula over p1..pn.
    Parity {
        n: usize,
        #[arg(long, value_enum, default_value_t = ParityForm::Poly)]
        form: ParityForm,
        #[arg(long)]
        stats: bool,
    },
    /// Least width of a formula true on every team of A and on no team of B.
    Minwidth {
        a: PathBuf,
        b: PathBuf,
        /// `lax`, `strict`, `existential`, or a list such as `(v),/\,\/`.
        #[arg(long, default_value = "lax")]
        sig: String,
        #[arg(long, default_value_t = 6)]
        max_width: usize,
    },
    /// Decide the formula-size game with resource k on sides A and B.
    Game {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "lax")]
        sig: String,
        /// Write the winning strategy or certificate as JSON.
        #[arg(long)]
        dump_strategy: Option<PathBuf>,
        #[arg(long, default_value_t = SolveOptions::default().node_limit)]
        node_limit: u64,
    },
    /// Check a strategy or certificate written by `game --dump-strategy`.
    Replay { dump: PathBuf },
    /// Largest number of one-removed neighbours in B of a team of A.
    Density { a: PathBuf, b: PathBuf },
    /// Upper-dimension bounds of a formula.
    Dim {
        formula: String,
        /// Comma-separated domain (default: the formula's propositions).
        #[arg(long)]
        domain: Option<String>,
        /// Translate an atom in this mode first.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Length lower bound from the maximal teams of dep or excl of arity n.
    Certificate {
        #[arg(value_enum)]
        atom: CertAtom,
        n: usize,
    },
    /// Check random local formulas with strict splits against their relaxation.
    SampleRelax {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        max_props: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Measure translation lengths against their bounds and write a JSON report.
    Bench {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
        /// Skip the exhaustive denotation comparison.
        #[arg(long)]
        no_check: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityForm {
    Poly,
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertAtom {
    Dep,
    Excl,
}

/// Result of a command that completed: maps to exit status 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
}

impl Verdict {
    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::True => 0,
            Verdict::False => 1,
        }
    }
}

pub fn parse_signature(text: &str) -> Result<Signature, CliError> {
    Ok(match text {
        "lax" => Signature::lax_existential(),
        "strict" => Signature::strict_existential(),
        "existential" => Signature::existential(),
        other => Signature::parse(other)?,
    })
}

pub fn parse_mode(text: &str) -> Result<TranslationMode, CliError> {
    let norm = text.trim().to_ascii_uppercase().replace('-', "_");
    TranslationMode::ALL
        .into_iter()
        .find(|m| m.name() == norm)
        .ok_or_else(|| {
            let names: Vec<_> = TranslationMode::ALL.iter().map(|m| m.name()).collect();
            CliError::Usage(format!("unknown mode `{text}` (expected one of {})", names.join(", ")))
        })
}

fn parse_formula(text: &str) -> Result<Formula, CliError> {
    Ok(parse(text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn team_text(t: &Team) -> String {
    format!("{{{}}}", t.bitstrings().join(","))
}

/// Two team files over one domain, as a game.
fn load_sides(a: &Path, b: &Path, sig: Signature) -> Result<(Game, TeamSet, TeamSet), CliError> {
    let fa = read_team_file(a)?;
    let fb = read_team_file(b)?;
    if fa.domain != fb.domain {
        return Err(CliError::Usage(format!(
            "team files use different domains: {} and {}",
            fa.domain, fb.domain
        )));
    }
    let game = Game::new(fa.domain.clone(), sig)?;
    let sa = game.team_set(&fa.teams)?;
    let sb = game.team_set(&fb.teams)?;
    Ok((game, sa, sb))
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Verdict, CliError> {
    match cli.command {
        Command::Eval { formula, teams } => cmd_eval(&formula, &teams, out),
        Command::Equiv { f, g, extra } => cmd_equiv(&f, &g, extra, out),
        Command::Translate {
            atom,
            mode,
            stats,
            check,
        } => cmd_translate(&atom, parse_mode(&mode)?, stats, check, out),
        Command::Parity { n, form, stats } => cmd_parity(n, form, stats, out),
        Command::Minwidth { a, b, sig, max_width } => cmd_minwidth(&a, &b, parse_signature(&sig)?, max_width, out),
        Command::Game {
            a,
            b,
            k,
            sig,
            dump_strategy,
            node_limit,
        } => cmd_game(&a, &b, k, parse_signature(&sig)?, dump_strategy.as_deref(), node_limit, out),
        Command::Replay { dump } => cmd_replay(&dump, out),
        Command::Density { a, b } => cmd_density(&a, &b, out),
        Command::Dim {
            formula,
            domain,
            mode,
            json,
        } => {
            let mode = mode.as_deref().map(parse_mode).transpose()?;
            cmd_dim(&formula, domain.as_deref(), mode, json, out)
        }
        Command::Certificate { atom, n } => cmd_certificate(atom, n, out),
        Command::SampleRelax {
            count,
            seed,
            max_props,
            depth,
        } => cmd_sample_relax(count, seed, max_props, depth, out),
        Command::Bench {
            out: path,
            max_arity,
            no_check,
        } => cmd_bench(path.as_deref(), max_arity, !no_check, out),
    }
}

pub fn cmd_eval(formula: &str, teams: &Path, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let f = parse_formula(formula)?;
    let TeamFile { teams, .. } = read_team_file(teams)?;
    let mut all = true;
    for t in &teams {
        let sat = eval(&f, t)?;
        all &= sat;
        writeln!(out, "{}", if sat { "SAT" } else { "UNSAT" })?;
    }
    Ok(Verdict::from_bool(all))
}

pub fn cmd_equiv(f: &str, g: &str, extra: Option<usize>, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let (f, g) = (parse_formula(f)?, parse_formula(g)?);
    let d = joint_domain(&[&f, &g], extra)?;
    let (df, dg) = (denotation(&f, &d)?, denotation(&g, &d)?);
    let diff = (0..df.family().universe()).find(|&t| df.contains_mask(t) != dg.contains_mask(t));
    match diff {
        None => {
            writeln!(out, "EQUIVALENT over {d}")?;
            Ok(Verdict::True)
        }
        Some(t) => {
            let team = Team::new(d.clone(), t)?;
            let side = if df.contains_mask(t) { "first" } else { "second" };
            writeln!(out, "DIFFERENT over {d}: team {} satisfies only the {side} formula", team_text(&team))?;
            Ok(Verdict::False)
        }
    }
}

fn print_stats(f: &Formula, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "length {}", f.length())?;
    writeln!(out, "width {}", f.width())?;
    Ok(())
}

pub fn cmd_translate(
    atom: &str,
    mode: TranslationMode,
    stats: bool,
    check: bool,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let Formula::Atom(atom) = parse_formula(atom)? else {
        return Err(CliError::Usage(format!("`{atom}` is not a dependency atom")));
    };
    let f = translate(&atom, mode)?;
    writeln!(out, "{f}")?;
    if stats {
        print_stats(&f, out)?;
    }
    if check {
        let af = Formula::Atom(atom);
        let d = joint_domain(&[&af], Some(0))?;
        let want = denotation(&af, &d)?;
        let want = if mode.is_negated() { want.complement() } else { want };
        let ok = denotation(&f, &d)?.family() == want.family();
        let target = if mode.is_negated() { "the negated atom" } else { "the atom" };
        writeln!(out, "{} {target} over {d}", if ok { "agrees with" } else { "DIFFERS from" })?;
        return Ok(Verdict::from_bool(ok));
    }
    Ok(Verdict::True)
}

pub fn parity_domain(n: usize) -> Result<Domain, CliError> {
    Ok(Domain::new((1..=n).map(|i| format!("p{i}")))?)
}

pub fn cmd_parity(n: usize, form: ParityForm, stats: bool, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let d = parity_domain(n)?;
    let f = match form {
        ParityForm::Poly => parity_poly(&d)?,
        ParityForm::Even => parity_exp(&d, Parity::Even)?,
        ParityForm::Odd => parity_exp(&d, Parity::Odd)?,
    };
    writeln!(out, "{f}")?;
    if stats {
        print_stats(&f, out)?;
    }
    Ok(Verdict::True)
}

pub fn cmd_minwidth(
    a: &Path,
    b: &Path,
    sig: Signature,
    max_width: usize,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let (game, sa, sb) = load_sides(a, b, sig)?;
    match min_separating_width(&game, &sa, &sb, max_width)? {
        WidthResult::Exact { width, witness } => {
            writeln!(out, "width {width}")?;
            writeln!(out, "witness {witness}")?;
            Ok(Verdict::True)
        }
        WidthResult::AtLeast(w) => {
            writeln!(out, "width >= {w} (no separating formula up to width {max_width})")?;
            Ok(Verdict::False)
        }
        WidthResult::Unattainable => {
            writeln!(out, "unattainable: no formula over the signature separates the sides")?;
            Ok(Verdict::False)
        }
    }
}

pub fn cmd_game(
    a: &Path,
    b: &Path,
    k: usize,
    sig: Signature,
    dump_path: Option<&Path>,
    node_limit: u64,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let (game, sa, sb) = load_sides(a, b, sig)?;
    let pos = Position::new(k, sa, sb);
    let options = SolveOptions {
        node_limit,
        ..SolveOptions::default()
    };
    let report = solve(&game, &pos, options)?;
    match &report.solution {
        teamlogic::game::Solution::S(tree) => {
            let f = teamlogic::game::strategy_to_formula(tree)?;
            writeln!(out, "S wins")?;
            writeln!(out, "formula {f}")?;
            writeln!(out, "width {}", f.width())?;
        }
        teamlogic::game::Solution::D(cert) => {
            writeln!(out, "D wins")?;
            match cert {
                teamlogic::game::DCertificate::SharedTeam(t) => {
                    writeln!(out, "shared team {}", team_text(&Team::new(game.domain().clone(), *t)?))?
                }
                teamlogic::game::DCertificate::Density { density } => {
                    writeln!(out, "density {density} exceeds resource {k}")?
                }
                teamlogic::game::DCertificate::ExhaustedSearch { nodes } => {
                    writeln!(out, "exhausted search over {nodes} positions")?
                }
            }
        }
    }
    if let Some(path) = dump_path {
        let dump = dump::game_dump(&game, &pos, &report);
        let text = serde_json::to_string_pretty(&dump).expect("dump serialises");
        write_file(path, &(text + "\n"))?;
    }
    Ok(Verdict::from_bool(report.s_wins))
}

pub fn cmd_replay(path: &Path, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let dump: dump::GameDump = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_owned(),
        source,
    })?;
    let r = dump::replay(&dump)?;
    let status = if r.confirmed { "confirmed" } else { "REJECTED" };
    writeln!(out, "{} wins: {status} ({})", r.winner, r.detail)?;
    Ok(Verdict::from_bool(r.confirmed))
}

pub fn cmd_density(a: &Path, b: &Path, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let (_, sa, sb) = load_sides(a, b, Signature::lax_existential())?;
    writeln!(out, "{}", density(&sa, &sb))?;
    Ok(Verdict::True)
}

#[derive(serde::Serialize)]
#[serde(rename_all = "camelCase")]
struct DimReport {
    domain: Vec<String>,
    generator_pairs: usize,
    dim: usize,
    occ_bor: usize,
    upper_bound: Option<u128>,
    within_bound: bool,
    maximal_teams: Option<usize>,
}

pub fn cmd_dim(
    formula: &str,
    domain: Option<&str>,
    mode: Option<TranslationMode>,
    json: bool,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    let f = match (parse_formula(formula)?, mode) {
        (Formula::Atom(a), Some(mode)) => translate(&a, mode)?,
        (_, Some(_)) => return Err(CliError::Usage("--mode needs a dependency atom".into())),
        (f, None) => f,
    };
    let d = match domain {
        Some(list) => Domain::new(list.split(',').map(str::trim).filter(|p| !p.is_empty()))?,
        None => joint_domain(&[&f], Some(0))?,
    };
    let g = generator_for(&f, &d)?;
    let occ = f.occ_bor();
    let bound = 1u128.checked_shl(occ as u32);
    let within = bound.is_none_or(|b| g.dim() as u128 <= b);
    let maximal = if d.len() <= MAX_DENOTATION_PROPS {
        Some(dim_lower_bound_by_maximal_teams(&f, &d)?)
    } else {
        None
    };
    let report = DimReport {
        domain: d.props().to_vec(),
        generator_pairs: g.len(),
        dim: g.dim(),
        occ_bor: occ,
        upper_bound: bound,
        within_bound: within,
        maximal_teams: maximal,
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serialises"))?;
    } else {
        writeln!(out, "domain {d}")?;
        writeln!(out, "generator pairs {}", report.generator_pairs)?;
        writeln!(out, "dimension {}", report.dim)?;
        match bound {
            Some(b) => writeln!(out, "upper bound 2^{occ} = {b}")?,
            None => writeln!(out, "upper bound 2^{occ}")?,
        }
        if let Some(m) = maximal {
            writeln!(out, "maximal teams {m}")?;
        }
    }
    Ok(Verdict::from_bool(within))
}

pub fn cmd_certificate(atom: CertAtom, n: usize, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let kind = match atom {
        CertAtom::Dep => AtomKind::Dependence,
        CertAtom::Excl => AtomKind::Exclusion,
    };
    let c = succinctness_certificate(kind, n)?;
    let row = bench::CertificateRow {
        atom: kind.keyword().into(),
        arity: c.arity,
        max_teams: c.max_teams,
        enumerated: c.enumerated,
        implied_min_length: c.implied_min_length,
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&row).expect("certificate serialises"))?;
    Ok(Verdict::True)
}

/// A random formula over `props` built from literals, `∧`, `⊽`, `∨` and `∨̇`.
pub fn random_formula(rng: &mut ChaCha8Rng, depth: usize, props: &[String]) -> Formula {
    if depth == 0 || rng.gen_bool(0.35) {
        let mut bases = vec![LitBase::Top, LitBase::Bot];
        for p in props {
            bases.push(LitBase::Pos(p.clone()));
            bases.push(LitBase::Neg(p.clone()));
        }
        let base = bases[rng.gen_range(0..bases.len())].clone();
        return Formula::Lit(Literal::new(base, rng.gen_bool(0.4)));
    }
    let ops = [BinOp::And, BinOp::BoolOr, BinOp::Or, BinOp::StrictOr, BinOp::StrictOr];
    let op = ops[rng.gen_range(0..ops.len())];
    Formula::bin(op, random_formula(rng, depth - 1, props), random_formula(rng, depth - 1, props))
}

pub fn cmd_sample_relax(
    count: usize,
    seed: u64,
    max_props: usize,
    depth: usize,
    out: &mut dyn Write,
) -> Result<Verdict, CliError> {
    if max_props == 0 || max_props > MAX_DENOTATION_PROPS {
        return Err(CliError::Usage(format!("--max-props must be in 1..={MAX_DENOTATION_PROPS}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (1..=max_props).map(|i| format!("p{i}")).collect();
    let (mut local, mut sampled, mut agree) = (0, 0, 0);
    let budget = count.saturating_mul(1000).max(1000);
    while local < count && sampled < budget {
        sampled += 1;
        let n = rng.gen_range(1..=max_props);
        let f = random_formula(&mut rng, depth, &names[..n]);
        if f.occ_strict() == 0 {
            continue;
        }
        let base = joint_domain(&[&f], Some(0))?;
        let extra = MAX_DENOTATION_PROPS - base.len();
        if !is_local(&f, extra)? {
            continue;
        }
        local += 1;
        let d = base.with_fresh(extra);
        if denotation(&f, &d)?.family() == denotation(&relax(&f), &d)?.family() {
            agree += 1;
        } else {
            writeln!(out, "differs from its relaxation: {f}")?;
        }
    }
    writeln!(out, "seed {seed}: {agree}/{local} local formulas agree with their relaxation ({sampled} sampled)")?;
    Ok(Verdict::from_bool(local == count && agree == local))
}

pub fn cmd_bench(path: Option<&Path>, max_arity: usize, check: bool, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let report = bench::run_bench(max_arity, check)?;
    for r in &report.rows {
        writeln!(
            out,
            "{:<12} {:<8} {:<12} {:<4} n={} {:<17} len={:<7} width={:<5} eq={:<5} bound={}",
            r.property,
            r.target,
            r.connectives,
            r.result,
            r.atom_arity,
            r.mode,
            r.formula_length,
            r.formula_width,
            match r.equivalent {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "-",
            },
            if r.bound_holds { "holds" } else { "FAILS" },
        )?;
    }
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(&report).expect("report serialises");
        write_file(path, &(text + "\n"))?;
    }
    Ok(Verdict::from_bool(report.all_hold()))
}
