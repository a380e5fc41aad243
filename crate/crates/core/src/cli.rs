//! Command-line front end. [`run`] does all the work and returns the rendered
//! output with an exit code so it can be driven directly from tests.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::curve::{self, MonomialCurve};
use crate::dyck;
use crate::error::Error;
use crate::factorization::{self, GroundSet};
use crate::lattice::{self, SimplexSpec};
use crate::noether;
use crate::semigroup::{self, NumericalSemigroup};
use crate::severi::{self, CuspType};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFICATION_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "cuspidal", version, about = "Invariants of numerical semigroups and unicuspidal rational curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroup queries
    #[command(subcommand)]
    Sg(SgCommand),
    /// Betti elements of a ground set, or the fiber analysis of one element
    Betti {
        #[arg(long, value_delimiter = ',', required = true)]
        ground: Vec<u64>,
        #[arg(long, conflicts_with = "element")]
        bound: Option<u64>,
        #[arg(long)]
        element: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Codimension counts for cusp types
    #[command(subcommand)]
    Severi(SeveriCommand),
    /// Lattice points of the supersymmetric simplex
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Monomial curves
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Kunz sets, Max Noether sweeps and covering counts
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum SgCommand {
    Info {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Number of gaps above a member
    Rho {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long)]
        element: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Dyck diagram; with a profile, Betti columns are annotated
    Dyck {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<u64>>,
        #[command(flatten)]
        out: Output,
    },
    Enumerate {
        #[arg(long)]
        genus: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct CuspArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    profile: Vec<u64>,
}

impl CuspArgs {
    fn cusp(&self) -> Result<CuspType, Error> {
        CuspType::new(NumericalSemigroup::from_generators(&self.gens)?, self.profile.clone())
    }
}

#[derive(Subcommand, Debug)]
enum SeveriCommand {
    Codim {
        #[command(flatten)]
        cusp: CuspArgs,
        /// Degree of the map, recorded against d >= max(n, 2g - 2)
        #[arg(long)]
        degree: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    VerifyHyperelliptic {
        #[arg(long, default_value_t = 12)]
        max_genus: u64,
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        #[command(flatten)]
        out: Output,
    },
    VerifySupersymmetric {
        /// A single triple a1,a2,a3
        #[arg(long, value_delimiter = ',', num_args = 1, required_unless_present = "max_product")]
        a: Option<Vec<u64>>,
        /// Sweep every coprime triple with a1 a2 a3 at most this
        #[arg(long, conflicts_with = "a")]
        max_product: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    CompareNodal {
        #[arg(long, value_delimiter = ',', required_unless_present = "a")]
        gens: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',', requires = "gens")]
        profile: Option<Vec<u64>>,
        /// Supersymmetric triple instead of generators and profile
        #[arg(long, value_delimiter = ',', conflicts_with = "gens")]
        a: Option<Vec<u64>>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    Simplex {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    exponents: Vec<u64>,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    Info(CurveArgs),
    Canonical(CurveArgs),
    Gonality(CurveArgs),
    /// Degree of the sheaf generated by 1 and t^mu
    Sheaf {
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u64>,
        #[arg(long)]
        mu: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Minimal scroll partition of the canonical model, or of --set if given
    Scroll {
        #[arg(long, value_delimiter = ',', required_unless_present = "set")]
        exponents: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',', conflicts_with = "exponents")]
        set: Option<Vec<u64>>,
        #[command(flatten)]
        out: Output,
    },
    Consistency(CurveArgs),
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    MaxNoether {
        #[arg(long, value_delimiter = ',', conflicts_with = "max_genus")]
        gens: Option<Vec<u64>>,
        #[arg(long, required_unless_present = "gens")]
        max_genus: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    Kunz {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        #[command(flatten)]
        out: Output,
    },
    Covering {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        out: Output,
    },
}

struct Rendered {
    text: String,
    json: serde_json::Value,
    verified: bool,
}

impl Rendered {
    fn new<T: Serialize>(text: String, value: &T) -> Self {
        Rendered {
            text,
            json: serde_json::to_value(value).expect("reports serialize"),
            verified: true,
        }
    }

    fn verified(mut self, ok: bool) -> Self {
        self.verified = ok;
        self
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = output_mode(&cli.command);
    match dispatch(cli.command) {
        Ok(r) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&r.json).unwrap();
                s.push('\n');
                s
            } else {
                r.text
            };
            let (code, stderr) = if r.verified {
                (EXIT_OK, String::new())
            } else {
                (EXIT_VERIFICATION_FAILED, "verification failed\n".to_string())
            };
            Outcome { code, stdout, stderr }
        }
        Err(e) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn output_mode(cmd: &Command) -> bool {
    match cmd {
        Command::Sg(c) => match c {
            SgCommand::Info { out, .. }
            | SgCommand::Rho { out, .. }
            | SgCommand::Dyck { out, .. }
            | SgCommand::Enumerate { out, .. } => out.json,
        },
        Command::Betti { out, .. } => out.json,
        Command::Severi(c) => match c {
            SeveriCommand::Codim { out, .. }
            | SeveriCommand::VerifyHyperelliptic { out, .. }
            | SeveriCommand::VerifySupersymmetric { out, .. }
            | SeveriCommand::CompareNodal { out, .. } => out.json,
        },
        Command::Lattice(LatticeCommand::Simplex { out, .. }) => out.json,
        Command::Curve(c) => match c {
            CurveCommand::Info(a)
            | CurveCommand::Canonical(a)
            | CurveCommand::Gonality(a)
            | CurveCommand::Consistency(a) => a.out.json,
            CurveCommand::Sheaf { out, .. } | CurveCommand::Scroll { out, .. } => out.json,
        },
        Command::Verify(c) => match c {
            VerifyCommand::MaxNoether { out, .. }
            | VerifyCommand::Kunz { out, .. }
            | VerifyCommand::Covering { out, .. } => out.json,
        },
    }
}

fn list(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn triple(a: &[u64]) -> Result<[u64; 3], Error> {
    <[u64; 3]>::try_from(a)
        .map_err(|_| Error::Validation(format!("expected three factors, got {}", a.len())))
}

fn semigroup_text(sg: &NumericalSemigroup) -> String {
    format!(
        "semigroup {sg}\ngaps {{{}}}\ngenus {}\nconductor {}\nfrobenius {}\nsymmetric {}\nhyperelliptic {}\n",
        list(sg.gaps()),
        sg.genus(),
        sg.conductor(),
        sg.frobenius(),
        sg.is_symmetric(),
        sg.is_hyperelliptic()
    )
}

fn dispatch(cmd: Command) -> Result<Rendered, Error> {
    match cmd {
        Command::Sg(c) => sg_command(c),
        Command::Betti { ground, bound, element, .. } => {
            let ground = GroundSet::new(ground)?;
            if let Some(s) = element {
                let a = factorization::analyze(&ground, s);
                let mut text = format!("element {s}: {} factorizations, {} classes\n", a.factorizations.len(), a.class_count());
                for (k, class) in a.classes.iter().enumerate() {
                    let members: Vec<String> = class
                        .iter()
                        .map(|&i| format!("({})", list(&a.factorizations[i].exponents)))
                        .collect();
                    writeln!(text, "class {}: {}", k + 1, members.join(" ")).unwrap();
                }
                Ok(Rendered::new(text, &a))
            } else {
                let bound = bound.unwrap_or(100);
                let betti = factorization::betti_elements(&ground, bound);
                #[derive(Serialize)]
                struct BettiRecord<'a> {
                    ground: &'a [u64],
                    bound: u64,
                    betti: &'a [u64],
                }
                let text = format!("betti elements below {bound}: {{{}}}\n", list(&betti));
                Ok(Rendered::new(text, &BettiRecord { ground: ground.elements(), bound, betti: &betti }))
            }
        }
        Command::Severi(c) => severi_command(c),
        Command::Lattice(LatticeCommand::Simplex { a, .. }) => {
            let [a1, a2, a3] = triple(&a)?;
            let record = lattice::simplex_record(&SimplexSpec::new(a1, a2, a3)?);
            let text = format!(
                "simplex a = ({a1},{a2},{a3})\nbound {}\nlattice points {}\nvolume {}\n",
                record.bound, record.count, record.volume
            );
            Ok(Rendered::new(text, &record))
        }
        Command::Curve(c) => curve_command(c),
        Command::Verify(c) => verify_command(c),
    }
}

fn sg_command(cmd: SgCommand) -> Result<Rendered, Error> {
    match cmd {
        SgCommand::Info { gens, .. } => {
            let sg = NumericalSemigroup::from_generators(&gens)?;
            Ok(Rendered::new(semigroup_text(&sg), &sg))
        }
        SgCommand::Rho { gens, element, .. } => {
            let sg = NumericalSemigroup::from_generators(&gens)?;
            let rho = sg.rho(element)?;
            #[derive(Serialize)]
            struct RhoRecord {
                element: u64,
                rho: u64,
            }
            Ok(Rendered::new(format!("rho({element}) = {rho}\n"), &RhoRecord { element, rho }))
        }
        SgCommand::Dyck { gens, profile, .. } => {
            let sg = NumericalSemigroup::from_generators(&gens)?;
            let report = match profile {
                Some(p) => Some(severi::codimension(&CuspType::new(sg.clone(), p)?)),
                None => None,
            };
            let path = sg.dyck_path();
            let mut text = format!("path {path}\n");
            text.push_str(&dyck::render(&sg, report.as_ref()));
            #[derive(Serialize)]
            struct DyckRecord {
                path: String,
                columns: Vec<semigroup::DyckColumn>,
            }
            Ok(Rendered::new(text, &DyckRecord { path: path.to_string(), columns: path.columns }))
        }
        SgCommand::Enumerate { genus, .. } => {
            let all = semigroup::enumerate_genus(genus)?;
            let mut text = format!("{} semigroups of genus {genus}\n", all.len());
            for sg in &all {
                writeln!(text, "{sg}").unwrap();
            }
            Ok(Rendered::new(text, &all))
        }
    }
}

fn severi_command(cmd: SeveriCommand) -> Result<Rendered, Error> {
    match cmd {
        SeveriCommand::Codim { cusp, degree, .. } => {
            let cusp = cusp.cusp()?;
            let report = match degree {
                Some(d) => severi::codimension_with_degree(&cusp, d),
                None => severi::codimension(&cusp),
            };
            let mut text = format!(
                "semigroup {}\nprofile ({})\nr* ({})\nground ({})\n",
                cusp.semigroup(),
                list(&report.profile),
                list(&report.rstar),
                list(&report.ground)
            );
            writeln!(text, "ramification sum = {}", report.ram_sum).unwrap();
            for b in &report.betti_b {
                let rows: Vec<String> = b
                    .matrix
                    .iter()
                    .map(|r| format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                writeln!(
                    text,
                    "betti {}: classes {}, M = [{}], phi {}, rho {}",
                    b.element,
                    b.class_count,
                    rows.join(" "),
                    b.phi,
                    b.rho
                )
                .unwrap();
            }
            writeln!(text, "sum phi*rho = {}", report.weighted_betti_sum()).unwrap();
            for s in &report.r_bullet {
                writeln!(text, "r_bullet {} (index {}, {:?}): rho {}", s.element, s.index, s.trigger, s.rho).unwrap();
            }
            writeln!(text, "sum rho(r_bullet) = {}", report.bullet_sum()).unwrap();
            if let Some(h) = &report.degree_hypothesis {
                writeln!(
                    text,
                    "degree {} {} required minimum {}",
                    h.degree,
                    if h.satisfied { "meets" } else { "is below" },
                    h.required
                )
                .unwrap();
            }
            writeln!(text, "codimension = {}", report.codimension).unwrap();
            Ok(Rendered::new(text, &report))
        }
        SeveriCommand::VerifyHyperelliptic { max_genus, max_n, .. } => {
            let cells = severi::verify_hyperelliptic(max_genus, max_n);
            let mut text = String::new();
            for c in &cells {
                writeln!(
                    text,
                    "g={} n={}: codimension {} expected {} {}",
                    c.genus,
                    c.n,
                    c.codimension,
                    c.expected,
                    if c.pass { "ok" } else { "MISMATCH" }
                )
                .unwrap();
            }
            let ok = cells.iter().all(|c| c.pass);
            Ok(Rendered::new(text, &cells).verified(ok))
        }
        SeveriCommand::VerifySupersymmetric { a, max_product, .. } => {
            let triples = match (a, max_product) {
                (Some(a), _) => vec![triple(&a)?],
                (None, Some(m)) => severi::coprime_triples(m),
                (None, None) => unreachable!("clap requires one of --a, --max-product"),
            };
            let checks = triples
                .into_iter()
                .map(severi::verify_supersymmetric)
                .collect::<Result<Vec<_>, _>>()?;
            let mut text = String::new();
            for c in &checks {
                writeln!(
                    text,
                    "a=({}) rho={}: codimension {} closed form {} {}",
                    list(&c.a),
                    c.rho,
                    c.codimension,
                    c.closed_form,
                    if c.pass { "ok" } else { "MISMATCH" }
                )
                .unwrap();
            }
            let ok = checks.iter().all(|c| c.pass);
            Ok(Rendered::new(text, &checks).verified(ok))
        }
        SeveriCommand::CompareNodal { gens, profile, a, .. } => {
            let cusp = match (gens, a) {
                (_, Some(a)) => CuspType::supersymmetric(triple(&a)?)?,
                (Some(gens), None) => {
                    let sg = NumericalSemigroup::from_generators(&gens)?;
                    let profile = profile.ok_or_else(|| Error::Validation("--profile is required with --gens".into()))?;
                    CuspType::new(sg, profile)?
                }
                (None, None) => unreachable!("clap requires one of --gens, --a"),
            };
            let c = severi::compare_nodal(&cusp);
            let text = format!(
                "codimension {} genus {} below_nodal {}\n(n-1)g = {} at_bound {} exceeds_bound {}\n",
                c.codimension,
                c.genus,
                c.below_nodal,
                c.hyperelliptic_bound,
                c.at_hyperelliptic_bound,
                c.exceeds_hyperelliptic_bound
            );
            Ok(Rendered::new(text, &c))
        }
    }
}

fn curve_command(cmd: CurveCommand) -> Result<Rendered, Error> {
    match cmd {
        CurveCommand::Info(args) => {
            let c = MonomialCurve::new(args.exponents)?;
            let (p1, p2) = c.singularity_semigroups()?;
            let record = c.record()?;
            let text = format!(
                "curve ({})\nS_P1 {p1} (genus {})\nS_P2 {p2} (genus {})\narithmetic genus {}\nunicuspidal {}\n",
                list(c.exponents()),
                p1.genus(),
                p2.genus(),
                record.genus,
                p2.genus() == 0
            );
            Ok(Rendered::new(text, &record))
        }
        CurveCommand::Canonical(args) => {
            let c = MonomialCurve::new(args.exponents)?;
            let model = c.canonical_model()?;
            let g = model.len();
            let text = format!("canonical model ({}) in P^{}\n", list(&model), g - 1);
            Ok(Rendered::new(text, &model))
        }
        CurveCommand::Gonality(args) => {
            let c = MonomialCurve::new(args.exponents)?;
            let gon = c.gonality()?;
            let text = format!("gonality {} realized at mu={}\n", gon.d, list(&gon.mu));
            Ok(Rendered::new(text, &gon))
        }
        CurveCommand::Sheaf { exponents, mu, .. } => {
            let c = MonomialCurve::new(exponents)?;
            if !c.is_unicuspidal()? {
                return Err(Error::Multicuspidal);
            }
            let (sg, _) = c.singularity_semigroups()?;
            let outside: Vec<u64> = curve::shifted_outside(&sg, mu).collect();
            let degree = curve::sheaf_degree(&sg, mu)?;
            #[derive(Serialize)]
            struct SheafRecord {
                mu: u64,
                outside: Vec<u64>,
                degree: u64,
            }
            let text = format!("mu={mu}: (S+mu)\\S = {{{}}}, degree {degree}\n", list(&outside));
            Ok(Rendered::new(text, &SheafRecord { mu, outside, degree }))
        }
        CurveCommand::Scroll { exponents, set, .. } => {
            let set = match (exponents, set) {
                (_, Some(set)) => set,
                (Some(e), None) => MonomialCurve::new(e)?.canonical_model()?,
                (None, None) => unreachable!("clap requires one of --exponents, --set"),
            };
            if set.is_empty() {
                return Err(Error::Validation("empty exponent set".into()));
            }
            let s = curve::scroll_partition(&set);
            let parts: Vec<String> = s.parts.iter().map(|p| format!("{{{}}}", list(&p.elements()))).collect();
            let text = format!("{}-fold scroll, mu={}: {}\n", s.fold, s.mu, parts.join(" "));
            Ok(Rendered::new(text, &s))
        }
        CurveCommand::Consistency(args) => {
            let c = MonomialCurve::new(args.exponents)?;
            let r = curve::gonality_scroll_consistency(&c)?;
            let text = format!(
                "gonality {} (mu={}), canonical model on a {}-fold scroll (mu={}): {}\n",
                r.gonality.d,
                list(&r.gonality.mu),
                r.scroll_fold,
                r.scroll_mu,
                if r.consistent { "consistent" } else { "INCONSISTENT" }
            );
            let ok = r.consistent;
            Ok(Rendered::new(text, &r).verified(ok))
        }
    }
}

fn verify_command(cmd: VerifyCommand) -> Result<Rendered, Error> {
    match cmd {
        VerifyCommand::MaxNoether { gens, max_genus, .. } => {
            let semigroups = match (gens, max_genus) {
                (Some(g), _) => vec![NumericalSemigroup::from_generators(&g)?],
                (None, Some(m)) => semigroup::enumerate_up_to_genus(m)?,
                (None, None) => unreachable!("clap requires one of --gens, --max-genus"),
            };
            let reports: Vec<_> = semigroups.iter().map(noether::max_noether_check).collect();
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
            let mut text = format!("{} semigroups checked, {} failed\n", reports.len(), failed.len());
            for r in &failed {
                let unsplit: Vec<u64> = r.failures().collect();
                writeln!(
                    text,
                    "FAIL gens ({}) c={}: no split for {{{}}}",
                    list(&r.semigroup.generators),
                    r.semigroup.conductor,
                    list(&unsplit)
                )
                .unwrap();
            }
            if reports.len() == 1 {
                for e in &reports[0].entries {
                    match e.witness {
                        Some((a, b)) => writeln!(text, "{} = {a} + {b}", e.n).unwrap(),
                        None => writeln!(text, "{} = (none)", e.n).unwrap(),
                    }
                }
            }
            let ok = failed.is_empty();
            Ok(Rendered::new(text, &reports).verified(ok))
        }
        VerifyCommand::Kunz { gens, .. } => {
            let sg = NumericalSemigroup::from_generators(&gens)?;
            let k = noether::kunz_set(&sg);
            let text = format!(
                "K below c={}: {{{}}}; every integer >= {} is in K\n",
                sg.conductor(),
                list(&k.k_below_c),
                sg.conductor()
            );
            Ok(Rendered::new(text, &k))
        }
        VerifyCommand::Covering { genus, m, k, .. } => {
            let counts = noether::covering_counts(genus, m, k)?;
            let bound = noether::covering_bound(genus);
            #[derive(Serialize)]
            struct CoveringRecord {
                counts: noether::CoveringCounts,
                bound: u64,
            }
            let text = format!(
                "n_v = {}, n_e = {}, heuristic solvable {}\nconjectured covering gonality bound {bound}\n",
                counts.variables, counts.equations, counts.heuristic_solvable
            );
            Ok(Rendered::new(text, &CoveringRecord { counts, bound }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run(std::iter::once("cuspidal").chain(args.split_whitespace()))
    }

    #[test]
    fn unknown_subcommand() {
        let out = cli("frobnicate");
        assert_eq!(out.code, EXIT_USAGE);
        assert!(!out.stderr.is_empty());
    }

    #[test]
    fn help_is_success() {
        assert_eq!(cli("--help").code, EXIT_OK);
    }

    #[test]
    fn validation_exit() {
        let out = cli("sg info --gens 4,6");
        assert_eq!(out.code, EXIT_INVALID);
        assert!(out.stderr.contains("not cofinite"));
    }
}
