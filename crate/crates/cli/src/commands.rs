use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use polymatch::coherent::{
    chirotope_evidence, diagonal_field, expected_count, isomorphism_classes, nonsingular_masks, omm,
    tropically_nonsingular_minors, WeightMatrix,
};
use polymatch::core::{
    check_3term_gp, check_full_gp, is_chirotope, is_matroid, subset_label, GpWitness, GroundConfig, Sign, SignMap,
    SignedVector,
};
use polymatch::hyperfields::{
    builtin, h_chirotope, pushforward, strong_matroid_check, weak_matroid_check, HElem, HMatrix, HWitness, Hyperfield,
    Morphism,
};
use polymatch::oriented::{
    check_duality, check_duality_all_orderings, chirotope, circuit_from_chirotope, cocircuit_from_chirotope,
    cocircuits, dual_pair, is_covector, psi, psi_pointed, signed_circuits, SignMatrix,
};
use polymatch::triangulation::{
    extract_matching_field, is_linkage, pointed_completion, pointed_extension, validate_triangulation, MatchingField,
    TreeSet, Violation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::document::{
    Document, HMatrixPayload, Kind, MatchingFieldPayload, SignMapPayload, SignMatrixPayload, TreeSetPayload,
};
use crate::{render, CliError, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "polymatch",
    version,
    about = "Oriented matroids from matching fields and triangulations"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Seed for every randomized sweep.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the matching field comes from.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// A treeset or matching_field document.
    pub input: Option<PathBuf>,
    /// The diagonal (d, n) field instead of a file.
    #[arg(long, num_args = 2, value_names = ["D", "N"])]
    pub diagonal: Option<Vec<usize>>,
    /// Use the pointed field on R̃ ∪ E with the matrix (I | A).
    #[arg(long)]
    pub pointed: bool,
}

/// Which sign matrices to use.
#[derive(Debug, Clone, Args)]
pub struct Matrices {
    /// A sign_matrix document.
    #[arg(long)]
    pub signs: Option<PathBuf>,
    /// Every sign matrix on the support (entries off the support `+`).
    #[arg(long, conflicts_with = "signs")]
    pub all: bool,
    /// This many random sign matrices drawn with `--seed`.
    #[arg(long, conflicts_with_all = ["signs", "all"])]
    pub samples: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a treeset lists the maximal cells of a triangulation.
    Validate { file: PathBuf },
    /// The sign map of a field and sign matrix, with its chirotope status.
    Chirotope {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        matrices: Matrices,
    },
    /// Signed circuits from linkage pd-graphs against the chirotope.
    Circuits {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        signs: PathBuf,
        /// A (d+1)-subset such as `1,2,3`; all of them if omitted.
        #[arg(long)]
        tau: Option<String>,
    },
    /// Signed cocircuits from Chow pd-graphs against the chirotope.
    Cocircuits {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        signs: PathBuf,
        /// An (n−d+1)-subset such as `1,2,4`; all of them if omitted.
        #[arg(long)]
        rho: Option<String>,
    },
    /// `ψ_A(S, F)` and whether it is a covector of the chirotope.
    Covector {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        signs: PathBuf,
        /// Row signs, e.g. `0-+`.
        #[arg(long = "row-signs")]
        row_signs: String,
        /// Edges `r:c`, comma separated.
        #[arg(long)]
        edges: String,
    },
    /// The product identity between the pointed chirotope and its dual.
    Dual {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        matrices: Matrices,
    },
    /// Weak and strong matroid checks of `χ((M_σ), A)` over a hyperfield.
    Hyperfield {
        #[command(flatten)]
        source: Source,
        /// An hmatrix document; its hyperfield is used.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Built-in hyperfield for a random matrix drawn with `--seed`.
        #[arg(long)]
        hyperfield: Option<String>,
        /// Push the map to the canonical inflation before checking.
        #[arg(long)]
        inflate: bool,
    },
    /// The set of sign maps a field induces, its size and classes.
    Omm {
        #[command(flatten)]
        source: Source,
        /// Also partition the maps into isomorphism classes.
        #[arg(long)]
        classes: bool,
    },
    /// Column sets of tropically non-singular maximal minors (min convention).
    TropicalMinors { file: PathBuf },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Chirotope { .. } => "chirotope",
            Command::Circuits { .. } => "circuits",
            Command::Cocircuits { .. } => "cocircuits",
            Command::Covector { .. } => "covector",
            Command::Dual { .. } => "dual",
            Command::Hyperfield { .. } => "hyperfield",
            Command::Omm { .. } => "omm",
            Command::TropicalMinors { .. } => "tropical-minors",
        }
    }
}

pub fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Document::parse(&text)
}

fn parse_subset(text: &str, n: usize) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let e: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("bad subset {text:?}")))?;
        if e == 0 || e > n {
            return Err(CliError::Input(format!("element {e} outside 1..={n}")));
        }
        out.push(e - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn label(s: &[usize], n: usize) -> String {
    subset_label(s, n)
}

enum Loaded {
    Trees(TreeSet),
    Field(MatchingField),
}

impl Source {
    fn load(&self) -> Result<Loaded, CliError> {
        match (&self.input, &self.diagonal) {
            (Some(_), Some(_)) => Err(CliError::Input("give a file or --diagonal, not both".into())),
            (None, None) => Err(CliError::Input("no input: give a file or --diagonal D N".into())),
            (None, Some(dn)) => Ok(Loaded::Field(diagonal_field(dn[0], dn[1])?)),
            (Some(path), None) => {
                let doc = read_document(path)?;
                match doc.kind {
                    Kind::Treeset => Ok(Loaded::Trees(
                        doc.payload::<TreeSetPayload>(Kind::Treeset)?.to_treeset()?,
                    )),
                    Kind::MatchingField => Ok(Loaded::Field(
                        doc.payload::<MatchingFieldPayload>(Kind::MatchingField)?.to_field()?,
                    )),
                    k => Err(CliError::Input(format!(
                        "expected a treeset or matching_field, got {k:?}"
                    ))),
                }
            }
        }
    }

    fn trees(&self) -> Result<TreeSet, CliError> {
        match self.load()? {
            Loaded::Trees(ts) => Ok(ts),
            Loaded::Field(_) => Err(CliError::Input("this command needs a treeset".into())),
        }
    }

    /// The field the sign matrix acts on (pointed when asked).
    fn field(&self) -> Result<MatchingField, CliError> {
        match (self.load()?, self.pointed) {
            (Loaded::Trees(ts), false) => Ok(extract_matching_field(&ts)?),
            (Loaded::Trees(ts), true) => Ok(extract_matching_field(&pointed_extension(&ts))?),
            (Loaded::Field(mf), false) => Ok(mf),
            (Loaded::Field(_), true) => Err(CliError::Input("--pointed needs a treeset".into())),
        }
    }

    fn matrix(&self, a: SignMatrix) -> SignMatrix {
        if self.pointed {
            a.pointed()
        } else {
            a
        }
    }
}

fn read_signs(path: &Path) -> Result<SignMatrix, CliError> {
    read_document(path)?
        .payload::<SignMatrixPayload>(Kind::SignMatrix)?
        .to_matrix()
}

const SWEEP_LIMIT: usize = 16;

/// The base matrices (before pointing) selected by `m`, on a `d × n` field
/// with the given free entries.
fn base_matrices(
    m: &Matrices,
    d: usize,
    n: usize,
    free: &[(usize, usize)],
    seed: u64,
) -> Result<Vec<SignMatrix>, CliError> {
    if let Some(path) = &m.signs {
        return Ok(vec![read_signs(path)?]);
    }
    if m.all {
        if free.len() > SWEEP_LIMIT {
            return Err(CliError::Input(format!(
                "{} free entries, --all allows {SWEEP_LIMIT}",
                free.len()
            )));
        }
        return Ok((0u32..1 << free.len())
            .map(|bits| {
                let mut a = SignMatrix::filled(d, n, Sign::Plus);
                for (i, &(r, c)) in free.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        a.set(r, c, Sign::Minus);
                    }
                }
                a
            })
            .collect());
    }
    if let Some(k) = m.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return Ok((0..k)
            .map(|_| SignMatrix::from_fn(d, n, |_, _| if rng.gen() { Sign::Plus } else { Sign::Minus }))
            .collect());
    }
    Err(CliError::Input("give --signs, --all or --samples".into()))
}

fn signs_text(v: &[Sign]) -> Vec<String> {
    v.iter().map(|s| s.symbol().to_string()).collect()
}

fn gp_witness(w: &GpWitness, n: usize) -> Value {
    match w {
        GpWitness::ThreeTerm { quad, rest, terms } => json!({
            "relation": "three-term",
            "quad": quad.iter().map(|e| e + 1).collect::<Vec<_>>(),
            "rest": label(rest, n),
            "terms": signs_text(terms),
        }),
        GpWitness::Full { x, y, terms } => json!({
            "relation": "full",
            "x": label(x, n),
            "y": label(y, n),
            "terms": signs_text(terms),
        }),
    }
}

/// `is_chirotope` (witness from the 3-term relations first), then every
/// (d+1)-term relation.
fn chirotope_status(chi: &SignMap) -> (bool, Option<Value>) {
    if chi.is_zero() {
        return (false, Some(json!({ "relation": "zero map" })));
    }
    if !is_chirotope(chi) {
        let w = check_3term_gp(chi)
            .witness
            .map_or(json!({ "relation": "support not a matroid" }), |w| {
                gp_witness(&w, chi.n())
            });
        return (false, Some(w));
    }
    match check_full_gp(chi).witness {
        Some(w) => (false, Some(gp_witness(&w, chi.n()))),
        None => (true, None),
    }
}

fn report(command: &str, ok: bool, mut body: Value) -> Output {
    let obj = body.as_object_mut().expect("report bodies are objects");
    obj.insert("command".into(), json!(command));
    obj.insert("status".into(), json!(if ok { "pass" } else { "fail" }));
    Output {
        doc: Document {
            format_version: crate::document::FORMAT_VERSION.into(),
            kind: Kind::Report,
            payload: body,
        },
        ok,
    }
}

fn violation(v: &Violation) -> Value {
    match v {
        Violation::NotSpanningTree { tree } => json!({ "condition": 1, "tree": tree + 1 }),
        Violation::MissingNeighbour { tree, edge } => {
            json!({ "condition": 2, "tree": tree + 1, "edge": [edge.0 + 1, edge.1 + 1] })
        }
        Violation::MatchingConflict { trees, rows, cols } => json!({
            "condition": 3,
            "trees": [trees.0 + 1, trees.1 + 1],
            "rows": rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
            "cols": cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
        }),
        Violation::WrongCount { expected, found } => {
            json!({ "condition": "count", "expected": expected, "found": found })
        }
    }
}

fn validate(file: &Path) -> Result<Output, CliError> {
    let ts = read_document(file)?
        .payload::<TreeSetPayload>(Kind::Treeset)?
        .to_treeset()?;
    let r = validate_triangulation(&ts);
    let GroundConfig { d, n } = ts.config();
    Ok(report(
        "validate",
        r.holds,
        json!({
            "d": d,
            "n": n,
            "trees": ts.len(),
            "expected_trees": ts.expected_count(),
            "violation": r.violation.as_ref().map(violation),
        }),
    ))
}

fn chirotope_cmd(source: &Source, matrices: &Matrices, seed: u64) -> Result<Output, CliError> {
    let mf = source.field()?;
    let GroundConfig { d, n } = mf.config();
    let base_n = if source.pointed { n - d } else { n };
    let free: Vec<(usize, usize)> = if source.pointed {
        mf.support()
            .into_iter()
            .filter(|e| e.1 >= d)
            .map(|(r, c)| (r, c - d))
            .collect()
    } else {
        mf.support().into_iter().collect()
    };
    let list = base_matrices(matrices, d, base_n, &free, seed)?;
    if let [a] = &list[..] {
        let chi = chirotope(&mf, &source.matrix(a.clone()))?;
        let (ok, witness) = chirotope_status(&chi);
        let mut payload = SignMapPayload::from_map(&chi);
        payload.chirotope = Some(ok);
        payload.witness = witness;
        return Ok(Output {
            doc: Document::new(Kind::SignMap, &payload),
            ok,
        });
    }
    let mut failures = 0;
    let mut first = None;
    for a in &list {
        let chi = chirotope(&mf, &source.matrix(a.clone()))?;
        let (ok, witness) = chirotope_status(&chi);
        if !ok {
            failures += 1;
            first.get_or_insert_with(|| json!({ "signs": SignMatrixPayload::from_matrix(a).rows, "witness": witness }));
        }
    }
    Ok(report(
        "chirotope",
        failures == 0,
        json!({ "matrices": list.len(), "failures": failures, "first_failure": first }),
    ))
}

fn same_up_to_sign(a: &SignedVector, b: &SignedVector) -> bool {
    a == b || *a == b.negated()
}

fn circuits_cmd(source: &Source, signs: &Path, tau: Option<&str>) -> Result<Output, CliError> {
    let mf = source.field()?;
    let GroundConfig { d, n } = mf.config();
    let a = source.matrix(read_signs(signs)?);
    let chi = chirotope(&mf, &a)?;
    let taus: Vec<Vec<usize>> = match tau {
        Some(t) => vec![parse_subset(t, n)?],
        None => polymatch::core::subset::combinations(n, d + 1).collect(),
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for t in &taus {
        let [c, _] = signed_circuits(&mf, &a, t)?;
        let from_chi = circuit_from_chirotope(&chi, t)?;
        let agrees = same_up_to_sign(&c, &from_chi);
        ok &= agrees;
        rows.push(json!({ "tau": label(t, n), "circuit": c.to_string(), "from_chirotope": from_chi.to_string(), "agrees": agrees }));
    }
    Ok(report("circuits", ok, json!({ "circuits": rows })))
}

fn cocircuits_cmd(source: &Source, signs: &Path, rho: Option<&str>) -> Result<Output, CliError> {
    let base = source.trees()?;
    let ts = if source.pointed {
        pointed_completion(&base)
    } else {
        base
    };
    let GroundConfig { d, n } = ts.config();
    let a = source.matrix(read_signs(signs)?);
    let chi = chirotope(&extract_matching_field(&ts)?, &a)?;
    let rhos: Vec<Vec<usize>> = match rho {
        Some(r) => vec![parse_subset(r, n)?],
        None => polymatch::core::subset::combinations(n, n - d + 1).collect(),
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for r in &rhos {
        let [c, _] = cocircuits(&ts, &a, r)?;
        let y: Vec<usize> = (0..n).filter(|e| !r.contains(e)).collect();
        let from_chi = cocircuit_from_chirotope(&chi, &y)?;
        let agrees = same_up_to_sign(&c, &from_chi);
        ok &= agrees;
        rows.push(json!({ "rho": label(r, n), "cocircuit": c.to_string(), "from_chirotope": from_chi.to_string(), "agrees": agrees }));
    }
    Ok(report("cocircuits", ok, json!({ "cocircuits": rows })))
}

fn parse_edges(text: &str, d: usize, n: usize) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .map(|part| {
            let (r, c) = part
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("bad edge {part:?}, expected r:c")))?;
            let r: usize = r
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad row in {part:?}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad column in {part:?}")))?;
            if r == 0 || r > d || c == 0 || c > n {
                return Err(CliError::Input(format!("edge {part} outside 1..={d} × 1..={n}")));
            }
            Ok((r - 1, c - 1))
        })
        .collect()
}

fn covector_cmd(source: &Source, signs: &Path, row_signs: &str, edges: &str) -> Result<Output, CliError> {
    let ts = source.trees()?;
    let a = read_signs(signs)?;
    let s: Vec<Sign> = row_signs
        .chars()
        .filter(|c| !matches!(c, ',' | ' '))
        .map(|c| Sign::parse(c).ok_or_else(|| CliError::Input(format!("bad sign {c:?}"))))
        .collect::<Result<_, _>>()?;
    let GroundConfig { d, n } = ts.config();
    let (x, chi) = if source.pointed {
        let f = parse_edges(edges, d, n + d)?;
        let x = psi_pointed(&ts, &s, &f, &a)?;
        (
            x,
            chirotope(&extract_matching_field(&pointed_extension(&ts))?, &a.pointed())?,
        )
    } else {
        let f = parse_edges(edges, d, n)?;
        (psi(&ts, &s, &f, &a)?, chirotope(&extract_matching_field(&ts)?, &a)?)
    };
    let ok = is_covector(&x, &chi)?;
    Ok(report(
        "covector",
        ok,
        json!({ "vector": x.to_string(), "covector": ok }),
    ))
}

fn dual_cmd(source: &Source, matrices: &Matrices, seed: u64) -> Result<Output, CliError> {
    let ts = source.trees()?;
    let GroundConfig { d, n } = ts.config();
    let free: Vec<(usize, usize)> = (0..d).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    let list = base_matrices(matrices, d, n, &free, seed)?;
    let exhaustive = d + n <= 9;
    let mut checked = 0;
    for a in &list {
        let (chi, dual) = dual_pair(&ts, a)?;
        let r = if exhaustive {
            check_duality_all_orderings(&chi, &dual)?
        } else {
            check_duality(&chi, &dual)?
        };
        checked += r.checked;
        if let Some(order) = r.witness {
            return Ok(report(
                "dual",
                false,
                json!({
                    "signs": SignMatrixPayload::from_matrix(a).rows,
                    "ordering": order.iter().map(|e| e + 1).collect::<Vec<_>>(),
                }),
            ));
        }
    }
    Ok(report(
        "dual",
        true,
        json!({ "matrices": list.len(), "orderings_checked": checked, "all_orderings": exhaustive }),
    ))
}

fn random_unit(h: &Hyperfield, rng: &mut ChaCha8Rng) -> HElem {
    match h.elements() {
        Some(all) => all[rng.gen_range(1..all.len())],
        None if h.one() == HElem::real(0) => HElem::real(rng.gen_range(-4..=4)),
        None => HElem::phase(rng.gen_range(0..24), 12),
    }
}

fn h_witness(w: &HWitness, h: &Hyperfield, n: usize) -> Value {
    let labels = |ts: &[HElem]| ts.iter().map(|t| h.label(t)).collect::<Vec<_>>();
    match w {
        HWitness::ZeroMap => json!({ "relation": "zero map" }),
        HWitness::SupportNotMatroid => json!({ "relation": "support not a matroid" }),
        HWitness::ThreeTerm { quad, rest, terms } => json!({
            "relation": "three-term",
            "quad": quad.iter().map(|e| e + 1).collect::<Vec<_>>(),
            "rest": label(rest, n),
            "terms": labels(terms),
        }),
        HWitness::Full { x, y, terms } => json!({
            "relation": "full",
            "x": label(x, n),
            "y": label(y, n),
            "terms": labels(terms),
        }),
    }
}

fn hyperfield_cmd(
    source: &Source,
    matrix: Option<&Path>,
    name: Option<&str>,
    inflate: bool,
    seed: u64,
) -> Result<Output, CliError> {
    let mf = source.field()?;
    let GroundConfig { d, n } = mf.config();
    let (h, m) = match (matrix, name) {
        (Some(path), None) => read_document(path)?
            .payload::<HMatrixPayload>(Kind::Hmatrix)?
            .to_matrix()?,
        (None, Some(name)) => {
            let h = builtin(name)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = HMatrix::from_fn(d, n, |_, _| random_unit(&h, &mut rng));
            (h, m)
        }
        _ => return Err(CliError::Input("give exactly one of --matrix and --hyperfield".into())),
    };
    let chi = h_chirotope(&mf, &m, &h)?;
    let (chi, h) = if inflate {
        let iota = Morphism::inflation(&h);
        (pushforward(&chi, &iota)?, iota.target().clone())
    } else {
        (chi, h)
    };
    let weak = weak_matroid_check(&chi, &h)?;
    let strong = strong_matroid_check(&chi, &h)?;
    Ok(report(
        "hyperfield",
        weak.holds,
        json!({
            "hyperfield": h.name(),
            "map": chi.display(&h),
            "weak": weak.holds,
            "strong": strong.holds,
            "weak_witness": weak.witness.as_ref().map(|w| h_witness(w, &h, n)),
            "strong_witness": strong.witness.as_ref().map(|w| h_witness(w, &h, n)),
        }),
    ))
}

fn omm_cmd(source: &Source, classes: bool) -> Result<Output, CliError> {
    let mf = source.field()?;
    let linkage = is_linkage(&mf).holds;
    let set = omm(&mf)?;
    let evidence = chirotope_evidence(&set);
    let class_count = if classes {
        Some(isomorphism_classes(set.maps())?.len())
    } else {
        None
    };
    Ok(report(
        "omm",
        true,
        json!({
            "count": set.len(),
            "linkage": linkage,
            "expected": if linkage { Some(expected_count(set.config())) } else { None },
            "chirotopes": evidence.chirotopes,
            "classes": class_count,
        }),
    ))
}

fn tropical_minors_cmd(file: &Path) -> Result<Output, CliError> {
    let (h, m) = read_document(file)?
        .payload::<HMatrixPayload>(Kind::Hmatrix)?
        .to_matrix()?;
    if h.name() != "tropical" {
        return Err(CliError::Input(format!("expected a tropical matrix, got {}", h.name())));
    }
    let rows: Vec<Vec<Rational64>> = (0..m.d())
        .map(|r| {
            (0..m.n())
                .map(|c| match m.get(r, c) {
                    HElem::Real(q) => Ok(q),
                    _ => Err(CliError::Input("entries must be finite".into())),
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let w = WeightMatrix::new(rows)?;
    let minors = tropically_nonsingular_minors(&w);
    let matroid = !minors.is_empty() && is_matroid(&nonsingular_masks(&w))?;
    Ok(report(
        "tropical-minors",
        true,
        json!({
            "nonsingular": minors.iter().map(|s| label(s, m.n())).collect::<Vec<_>>(),
            "matroid": matroid,
        }),
    ))
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Chirotope { source, matrices } => chirotope_cmd(source, matrices, seed),
        Command::Circuits { source, signs, tau } => circuits_cmd(source, signs, tau.as_deref()),
        Command::Cocircuits { source, signs, rho } => cocircuits_cmd(source, signs, rho.as_deref()),
        Command::Covector {
            source,
            signs,
            row_signs,
            edges,
        } => covector_cmd(source, signs, row_signs, edges),
        Command::Dual { source, matrices } => dual_cmd(source, matrices, seed),
        Command::Hyperfield {
            source,
            matrix,
            hyperfield,
            inflate,
        } => hyperfield_cmd(source, matrix.as_deref(), hyperfield.as_deref(), *inflate, seed),
        Command::Omm { source, classes } => omm_cmd(source, *classes),
        Command::TropicalMinors { file } => tropical_minors_cmd(file),
    }
}

/// Runs the command and renders its output; returns the text and exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    match execute(cli) {
        Ok(out) => (render::render(&out.doc, cli.format), out.exit_code()),
        Err(e) => {
            let code = e.exit_code();
            let out = report(cli.command.name(), false, json!({ "error": e.to_string() }));
            (render::render(&out.doc, cli.format), code)
        }
    }
}
