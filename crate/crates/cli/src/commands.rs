use std::cmp::Ordering;

use braidlab_core::circular::{rot, semiconjugacy_experiment, CircularCocycle, QuotientElement};
use braidlab_core::cones::{ball, boundedness_probe, fdtc, floor, tau_interval, Surface};
use braidlab_core::laws::{
    convergence_experiment, rigidity_experiment, uncountability_witnesses, verify_cone_axioms,
    verify_dd_suite, verify_dehornoy_ball, verify_garside_identities, verify_lemma_identities,
    verify_quasimorphism,
};
use braidlab_core::realisation::{big_fraction, build_embedding, realisation_experiment, Realisation};
use braidlab_core::sl2::{braid_to_matrix, matrix_to_braid, psl2_rot, sl2_rot, SL2Matrix};
use braidlab_core::{BraidError, BraidWord, Cone};

use crate::args::{BraidArg, Command, ConeBraid, Experiment, MatrixArgs, Verify};
use crate::output::Block;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(BraidError),
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(BraidError::ResourceGuard(_) | BraidError::BlowUp { .. } | BraidError::Coverage(_)) => 3,
            CliError::Core(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

type Out = Result<Vec<Block>, CliError>;

fn env_limit(var: &str, default: usize) -> Result<usize, CliError> {
    match std::env::var(var) {
        Err(_) => Ok(default),
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{var} must be a non-negative integer, got {v:?}"))),
    }
}

fn guard_ball(len: usize) -> Result<usize, CliError> {
    let max = env_limit("BRAIDLAB_MAX_BALL", 6)?;
    if len > max {
        return Err(BraidError::ResourceGuard(format!("ball radius {len} exceeds BRAIDLAB_MAX_BALL={max}")).into());
    }
    Ok(len)
}

fn strands(given: Option<usize>, inferred: Option<usize>) -> Result<usize, CliError> {
    match (given, inferred) {
        (Some(a), Some(b)) if a != b => Err(CliError::Usage(format!("--n {a} disagrees with the cone on {b} strands"))),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(CliError::Usage("--n is required when no cone fixes the strand count".into())),
    }
}

fn parse_braid(n: usize, text: &str) -> Result<BraidWord, CliError> {
    let max = env_limit("BRAIDLAB_MAX_WORD", 100_000)?;
    let letters = text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).count();
    if letters > max {
        return Err(BraidError::ResourceGuard(format!("braid of {letters} letters exceeds BRAIDLAB_MAX_WORD={max}")).into());
    }
    Ok(BraidWord::parse(n, text)?)
}

fn parse_cone(spec: &str) -> Result<Cone, CliError> {
    Ok(spec.parse::<Cone>()?)
}

fn cone_and_braid(a: &ConeBraid) -> Result<(Cone, BraidWord), CliError> {
    let p = parse_cone(&a.cone)?;
    let n = strands(a.braid.n, Some(p.strands()))?;
    Ok((p, parse_braid(n, &a.braid.braid)?))
}

fn plain_braid(a: &BraidArg) -> Result<BraidWord, CliError> {
    parse_braid(strands(a.n, None)?, &a.braid)
}

fn check_k(k: i64) -> Result<i64, CliError> {
    if k < 1 {
        return Err(CliError::Usage(format!("--k must be at least 1, got {k}")));
    }
    Ok(k)
}

fn default_len(n: usize) -> usize {
    match n {
        3 => 6,
        4 => 5,
        _ => 4,
    }
}

fn reports(rs: Vec<braidlab_core::report::LawReport>) -> Vec<Block> {
    rs.iter().map(Block::from_report).collect()
}

pub fn run(cmd: &Command) -> Out {
    match cmd {
        Command::Nf(a) => {
            let b = plain_braid(a)?;
            let nf = b.normal_form();
            let factors: Vec<String> = nf
                .factors()
                .iter()
                .map(|p| {
                    let w: Vec<String> = p.reduced_word().iter().map(|i| i.to_string()).collect();
                    format!("({})", w.join(" "))
                })
                .collect();
            Ok(vec![Block::new()
                .with("braid", b.to_text())
                .with("n", b.strands())
                .with("delta_power", nf.delta_power())
                .with("factors", factors.concat())
                .with("canonical_length", nf.canonical_length())
                .with("word", nf.to_word().to_text())])
        }
        Command::Sign(a) => {
            let (p, b) = cone_and_braid(a)?;
            Ok(vec![Block::new().with("cone", p.name()).with("braid", b.to_text()).with("sign", p.sign(&b)?)])
        }
        Command::Cmp { cone, n, braid } => {
            if braid.len() != 2 {
                return Err(CliError::Usage(format!("cmp takes --braid exactly twice, got {}", braid.len())));
            }
            let p = parse_cone(cone)?;
            let n = strands(*n, Some(p.strands()))?;
            let (a, b) = (parse_braid(n, &braid[0])?, parse_braid(n, &braid[1])?);
            let rel = match p.compare(&a, &b)? {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Ok(vec![Block::new().with("cone", p.name()).with("a", a.to_text()).with("b", b.to_text()).with("relation", rel)])
        }
        Command::Floor(a) => {
            let (p, b) = cone_and_braid(a)?;
            Ok(vec![Block::new().with("cone", p.name()).with("braid", b.to_text()).with("floor", floor(&p, &b)?)])
        }
        Command::Tau { args, precision } => {
            let (p, b) = cone_and_braid(args)?;
            let k = check_k(precision.k)?;
            let t = tau_interval(&p, &b, k)?;
            Ok(vec![Block::new()
                .with("cone", p.name())
                .with("braid", b.to_text())
                .with("k", k)
                .with("interval", t)
                .with("lo", braidlab_core::cones::fraction(&t.lo))
                .with("hi", braidlab_core::cones::fraction(&t.hi))])
        }
        Command::Fdtc { braid, precision, surface } => {
            let b = plain_braid(braid)?;
            let s: Surface = surface.parse()?;
            let k = check_k(precision.k)?;
            Ok(vec![Block::new().with("braid", b.to_text()).with("surface", surface).with("k", k).with("interval", fdtc(&b, s, k)?)])
        }
        Command::Rot { args, precision } => {
            let (p, b) = cone_and_braid(args)?;
            let k = check_k(precision.k)?;
            let f = CircularCocycle::from_cone(&p)?;
            let r = rot(&f, &QuotientElement::from_braid(&b), k)?;
            Ok(vec![Block::new().with("cocycle", f.name()).with("braid", b.to_text()).with("k", k).with("interval", r)])
        }
        Command::Sl2Word { matrix } => {
            let m: SL2Matrix = matrix.parse()?;
            let w = matrix_to_braid(&m)?;
            let back = braid_to_matrix(&w)?;
            Ok(vec![Block::new().with("matrix", m).with("word", w.to_text()).with("image", back)])
        }
        Command::Sl2Rot(a) => matrix_rot(a, false),
        Command::Psl2Rot(a) => matrix_rot(a, true),
        Command::Probe { args, k } => {
            let (p, b) = cone_and_braid(args)?;
            let r = boundedness_probe(&p, &b, check_k(*k)?)?;
            let floors: Vec<String> = r.floors.iter().map(|f| f.to_string()).collect();
            Ok(vec![Block::new()
                .with("cone", r.cone)
                .with("braid", b.to_text())
                .with("max_k", k)
                .with("verdict", r.verdict)
                .with("floors", floors.join(" "))])
        }
        Command::Verify(v) => verify(v),
        Command::Experiment(e) => experiment(e),
    }
}

fn matrix_rot(a: &MatrixArgs, projective: bool) -> Out {
    let m: SL2Matrix = a.matrix.parse()?;
    let p = parse_cone(&a.cone)?;
    let k = check_k(a.precision.k)?;
    let r = if projective { psl2_rot(&m, &p, k)? } else { sl2_rot(&m, &p, k)? };
    Ok(vec![Block::new().with("matrix", m).with("cone", p.name()).with("k", k).with("interval", r)])
}

fn verify(v: &Verify) -> Out {
    match v {
        Verify::Identities { n, k_max } => {
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (3..=6).collect(),
            };
            let mut out = Vec::new();
            for n in ns {
                out.push(verify_garside_identities(n)?);
                out.push(verify_lemma_identities(n, *k_max)?);
            }
            Ok(reports(out))
        }
        Verify::Dd { n, len, semigroup_len } => {
            let len = guard_ball(len.unwrap_or(default_len(*n)))?;
            Ok(reports(vec![verify_dd_suite(&Cone::dd(*n)?, len, *semigroup_len)?]))
        }
        Verify::Cones { n, len, cone } => {
            let len = guard_ball(len.unwrap_or(default_len(*n)))?;
            let mut out = vec![verify_dehornoy_ball(*n, len)?];
            if let Some(spec) = cone {
                let p = parse_cone(spec)?;
                let inner = guard_ball(len.min(4))?;
                out.push(verify_cone_axioms(&p, ball(p.strands(), inner)?)?.with("L", inner));
            }
            Ok(reports(out))
        }
        Verify::Quasimorphism { n, pairs, precision, seed } => {
            Ok(reports(vec![verify_quasimorphism(*n, *pairs, check_k(precision.k)?, *seed)?]))
        }
    }
}

fn experiment(e: &Experiment) -> Out {
    match e {
        Experiment::Rigidity { n, samples, precision, seed } => {
            Ok(reports(vec![rigidity_experiment(*n, *samples, check_k(precision.k)?, *seed)?]))
        }
        Experiment::Convergence { n, i_max, len } => {
            Ok(reports(vec![convergence_experiment(*n, *i_max, guard_ball(*len)?)?]))
        }
        Experiment::Uncountable { n, count, seed } => Ok(reports(vec![uncountability_witnesses(*n, *count, *seed)?.0])),
        Experiment::Semiconjugacy { n, samples, precision, seed } => {
            Ok(reports(vec![semiconjugacy_experiment(*n, *samples, check_k(precision.k)?, *seed)?]))
        }
        Experiment::Realisation { cone, len, m, precision, table } => {
            let p = parse_cone(cone)?;
            let len = guard_ball(*len)?;
            if *m == 0 {
                return Err(CliError::Usage("--m must be at least 1".into()));
            }
            let mut out = reports(vec![realisation_experiment(&p, len, *m, check_k(precision.k)?)?]);
            if *table {
                let rho = Realisation::new(&build_embedding(&p, len)?)?;
                for i in 1..p.strands() {
                    let map = rho.generator(i as i8);
                    let mut b = Block::new().with("table", format!("sigma{i}")).with("breakpoints", map.len());
                    b.rows = map.breakpoints().map(|(x, y)| vec![big_fraction(x), big_fraction(y)]).collect();
                    out.push(b);
                }
            }
            Ok(out)
        }
    }
}
