//! Command-line front end for the `weylkit` library: evaluate generator
//! words, act on roots and coweights, run centralizer / stabilizer /
//! normalizer analyses, inspect the fixture catalog, and emit the
//! reproduction report.
//!
//! Every subcommand renders either JSON (`--format json`, the default) or a
//! human-oriented markdown view (`--format md`). All arithmetic is exact;
//! the only nondeterminism knob is the BFS budget, overridable through the
//! `WEYLKIT_SEARCH_CAP` environment variable.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use weylkit::{
    action_table, affine_extension, as_translation, assemble_normalizer, catalog,
    default_search_cap, enumerate_finite_roots, evaluate_word, geb_system, orthogonal_subsystem,
    parse_aut_spec, parse_coweight_expr, parse_root_expr, parse_word,
    property_cases, quasi_translation_analysis, run_suite, stabilizer_search, suite_names,
    with_property_cases, word_string, CartanData, ElementOrder, Error, GroupElement, Result,
    RootVec, StabilizerHit, Subsystem, TypeLabel, DEFAULT_KMAX, DEFAULT_MAX_LEN, DEFAULT_ROOT_CAP,
};

#[derive(Parser)]
#[command(
    name = "weylkit",
    version,
    about = "Exact computations in extended affine Weyl groups",
    arg_required_else_help = true
)]
struct Cli {
    /// Builtin Cartan type label (`D5~`, `A3~`, `A1~`, `D4`, ...).
    #[arg(long = "type", global = true, default_value = "D5~", value_name = "LABEL")]
    type_label: String,

    /// JSON file `{"size": n, "matrix": [[..]], "marks": [..]}` overriding
    /// `--type`.
    #[arg(long, global = true, value_name = "PATH")]
    cartan_file: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Word-length bound for stabilizer/normalizer searches.
    #[arg(long, global = true, value_name = "N")]
    maxlen: Option<usize>,

    /// Power bound when probing for quasi-translations.
    #[arg(long, global = true, value_name = "N")]
    kmax: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Show the Cartan data and enumerate the finite real roots.
    Roots,

    /// Evaluate a generator word and dump the resulting element.
    ///
    /// Words are whitespace-separated tokens: `s0`..`sN`, named
    /// automorphisms (`sigma1`, `sigma12`, `pi`, ...), or explicit image
    /// lists `aut:[5,4,3,2,0,1]`. The empty word is the identity.
    Eval {
        /// The word, e.g. "s1 s3 s2".
        #[arg(default_value = "")]
        word: String,
        /// Apply the element to a root expression (`a0`, `a0123`, `d`,
        /// `[0,1,2,2,1,1]`, sums like `a2 + d`) or a coweight expression
        /// (`h1 - h2`, `1/2*h1`, `hd`).
        #[arg(long, value_name = "EXPR")]
        act_on: Option<String>,
    },

    /// Probe the powers of a word for lattice translations and report its
    /// action on named subsystems.
    Analyze {
        /// The word to analyze.
        word: String,
        /// Comma-separated subsystem names: `geb` (= gamma,eta,beta),
        /// any subset of `gamma,eta,beta`, or `none`.
        #[arg(long, default_value = "geb", value_name = "NAMES")]
        subsystems: String,
    },

    /// Compute the orthogonal (centralizer-supporting) subsystem of seed
    /// roots.
    Centralizer {
        /// Root expressions whose common orthogonal system is wanted.
        #[arg(long, required = true, num_args = 1.., value_name = "EXPR")]
        seeds: Vec<String>,
    },

    /// Bounded exhaustive search for elements stabilizing a root list
    /// setwise (one shortest witness per induced permutation).
    Stabilize {
        /// Root expressions forming the target list.
        #[arg(long, required = true, num_args = 1.., value_name = "EXPR")]
        targets: Vec<String>,
        /// Extra generators: `none`, `cyc4` (the order-4 rotation), or
        /// comma-separated automorphism names.
        #[arg(long, default_value = "none", value_name = "SPEC")]
        auts: String,
    },

    /// Assemble and verify the normalizer of a subsystem's reflection group
    /// as commuting generator blocks.
    Normalizer {
        /// `gamma`, `eta`, or `beta` (the builtin configuration), or
        /// comma-separated root expressions for a finite simple system,
        /// which is affinized before assembly.
        #[arg(long, value_name = "NAME|EXPRS")]
        subsystem: String,
        /// Extra generators: `none`, `cyc4`, or comma-separated names.
        #[arg(long, default_value = "cyc4", value_name = "SPEC")]
        auts: String,
    },

    /// List or show the named elements of the builtin fixture catalog.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },

    /// Run a verification suite and print the report. Exits nonzero iff
    /// some check fails (documented discrepancies do not fail the run).
    Reproduce {
        /// Suite name: all, geb, order2, order4, directions, examples.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Append seeded randomized property checks, one batch per seed.
        #[arg(long, num_args = 0.., value_delimiter = ',', value_name = "SEED")]
        seeds: Vec<u64>,
        /// Random cases per seed and property.
        #[arg(long, default_value_t = 1000, value_name = "N")]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List every catalog entry with its summary.
    List,
    /// Show one entry: word, matrix, order, translation status.
    Show {
        /// Entry name as printed by `fixtures list`.
        name: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output { text, ok }) => {
            // `println!` would panic on a closed pipe (e.g. `weylkit roots | head`).
            use std::io::Write as _;
            let _ = writeln!(std::io::stdout(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

struct Output {
    text: String,
    /// Drives the exit code; only `reproduce` ever reports failure here.
    ok: bool,
}

impl Output {
    fn new(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let data = load_data(cli)?;
    match &cli.command {
        Command::Roots => cmd_roots(cli, &data),
        Command::Eval { word, act_on } => cmd_eval(cli, &data, word, act_on.as_deref()),
        Command::Analyze { word, subsystems } => cmd_analyze(cli, &data, word, subsystems),
        Command::Centralizer { seeds } => cmd_centralizer(cli, &data, seeds),
        Command::Stabilize { targets, auts } => cmd_stabilize(cli, &data, targets, auts),
        Command::Normalizer { subsystem, auts } => cmd_normalizer(cli, &data, subsystem, auts),
        Command::Fixtures { action } => cmd_fixtures(cli, action),
        Command::Reproduce { suite, seeds, cases } => cmd_reproduce(cli, suite, seeds, *cases),
    }
}

fn load_data(cli: &Cli) -> Result<Arc<CartanData>> {
    if let Some(path) = &cli.cartan_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ParseError(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Arc::new(CartanData::from_json(&text)?));
    }
    let label: TypeLabel = cli.type_label.parse()?;
    Ok(Arc::new(CartanData::load_builtin(label)?))
}

/// True when the ambient is the builtin system carrying the fixture
/// subsystems; the named-configuration commands require it.
fn require_builtin_d5(cli: &Cli, data: &CartanData) -> Result<()> {
    let is_d5 = cli.cartan_file.is_none()
        && data.label().map(|l| l.to_string()).as_deref() == Some("D5~");
    if is_d5 {
        Ok(())
    } else {
        Err(Error::InvalidSubsystem(
            "named subsystems (gamma/eta/beta) live in the builtin D5~ system; \
             pass explicit root expressions for other ambients"
                .into(),
        ))
    }
}

fn render<T: Serialize>(cli: &Cli, value: &T, md: impl FnOnce() -> String) -> Result<Output> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(value)
            .map_err(|e| Error::ParseError(format!("serialization failed: {e}")))?,
        Format::Md => md(),
    };
    Ok(Output::new(text))
}

/// A root as coordinates plus its compressed `a…` name when one exists.
#[derive(Serialize)]
struct RootView {
    coords: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    compressed: Option<String>,
}

impl RootView {
    fn of(r: &RootVec) -> Self {
        Self { coords: r.coords().to_vec(), compressed: r.compressed() }
    }
}

fn root_display(r: &RootVec) -> String {
    r.compressed().unwrap_or_else(|| r.to_string())
}

// ---------------------------------------------------------------------------
// roots

#[derive(Serialize)]
struct RootsDump {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    size: usize,
    affine: bool,
    matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marks: Option<Vec<i64>>,
    finite_root_count: usize,
    finite_roots: Vec<RootView>,
}

fn cmd_roots(cli: &Cli, data: &Arc<CartanData>) -> Result<Output> {
    let roots = enumerate_finite_roots(data, DEFAULT_ROOT_CAP)?;
    let dump = RootsDump {
        label: data.label().map(|l| l.to_string()),
        size: data.size(),
        affine: data.is_affine(),
        matrix: data.matrix().to_rows(),
        marks: data.marks().map(<[i64]>::to_vec),
        finite_root_count: roots.len(),
        finite_roots: roots.iter().map(RootView::of).collect(),
    };
    render(cli, &dump, || {
        let mut out = String::new();
        let label = dump.label.clone().unwrap_or_else(|| "custom".into());
        let _ = writeln!(out, "# Root system {label} (size {})", dump.size);
        let _ = writeln!(out);
        for row in &dump.matrix {
            let _ = writeln!(out, "    {row:>3?}");
        }
        if let Some(marks) = &dump.marks {
            let _ = writeln!(out, "\nmarks (null root δ): {marks:?}");
        }
        let _ = writeln!(out, "\n{} finite real roots:", dump.finite_root_count);
        for r in &roots {
            let _ = writeln!(out, "  {}", root_display(r));
        }
        out
    })
}

// ---------------------------------------------------------------------------
// eval

#[derive(Serialize)]
struct EvalDump {
    word: Vec<String>,
    matrix: Vec<Vec<i64>>,
    order: ElementOrder,
    /// Translation vector when the element is a lattice translation.
    translation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<serde_json::Value>,
}

const ORDER_CAP: u32 = 1024;

fn cmd_eval(cli: &Cli, data: &Arc<CartanData>, word: &str, act_on: Option<&str>) -> Result<Output> {
    let tokens = parse_word(word, data)?;
    let g = evaluate_word(&tokens, data)?;
    let translation = as_translation(&g).map(|mu| mu.to_string());
    let image = act_on.map(|expr| apply_to_expr(&g, expr, data)).transpose()?;
    let dump = EvalDump {
        word: tokens.iter().map(|t| t.name()).collect(),
        matrix: g.matrix().to_rows(),
        order: g.order(ORDER_CAP),
        translation,
        image: image.clone().map(|i| i.json),
    };
    render(cli, &dump, || {
        let mut out = String::new();
        let shown = if dump.word.is_empty() { "(identity)".into() } else { dump.word.join(" ") };
        let _ = writeln!(out, "word: {shown}");
        let _ = writeln!(out, "matrix:");
        for row in &dump.matrix {
            let _ = writeln!(out, "    {row:>3?}");
        }
        match dump.order {
            ElementOrder::Finite(k) => {
                let _ = writeln!(out, "order: {k}");
            }
            ElementOrder::ExceedsCap(cap) => {
                let _ = writeln!(out, "order: exceeds cap {cap} (infinite for translations)");
            }
        }
        match &dump.translation {
            Some(mu) => {
                let _ = writeln!(out, "translation by {mu}");
            }
            None => {
                let _ = writeln!(out, "not a lattice translation");
            }
        }
        if let Some(i) = &image {
            let _ = writeln!(out, "image: {}", i.text);
        }
        out
    })
}

struct Image {
    json: serde_json::Value,
    text: String,
}

impl Clone for Image {
    fn clone(&self) -> Self {
        Self { json: self.json.clone(), text: self.text.clone() }
    }
}

/// Applies `g` to a root expression, or — when that does not parse — to a
/// coweight expression via the contragredient action.
fn apply_to_expr(g: &GroupElement, expr: &str, data: &Arc<CartanData>) -> Result<Image> {
    match parse_root_expr(expr, data) {
        Ok(root) => {
            let image = g.act(&root);
            let view = RootView::of(&image);
            Ok(Image {
                json: serde_json::to_value(&view)
                    .map_err(|e| Error::ParseError(e.to_string()))?,
                text: root_display(&image),
            })
        }
        Err(root_err) => match parse_coweight_expr(expr, data) {
            Ok(cw) => {
                let image = g.act_coweight(&cw)?;
                Ok(Image {
                    json: serde_json::to_value(&image)
                        .map_err(|e| Error::ParseError(e.to_string()))?,
                    text: image.to_string(),
                })
            }
            Err(_) => Err(root_err),
        },
    }
}

// ---------------------------------------------------------------------------
// analyze

fn cmd_analyze(cli: &Cli, data: &Arc<CartanData>, word: &str, subsystems: &str) -> Result<Output> {
    let names = parse_subsystem_names(subsystems)?;
    if names.is_empty() {
        let tokens = parse_word(word, data)?;
        let g = evaluate_word(&tokens, data)?;
        let report =
            quasi_translation_analysis(&g, &[], cli.kmax.unwrap_or(DEFAULT_KMAX));
        return render(cli, &report, || analyze_md(&report, &[]));
    }
    require_builtin_d5(cli, data)?;
    let geb = geb_system()?;
    let tokens = parse_word(word, &geb.ambient)?;
    let g = evaluate_word(&tokens, &geb.ambient)?;
    let subs: Vec<&Subsystem> = names
        .iter()
        .map(|n| match *n {
            "gamma" => &geb.gamma,
            "eta" => &geb.eta,
            _ => &geb.beta,
        })
        .collect();
    let report = quasi_translation_analysis(&g, &subs, cli.kmax.unwrap_or(DEFAULT_KMAX));
    let table = action_table(
        &[(word_string_of(&g), g.clone())],
        &subs,
        &geb.ambient,
    );
    render(cli, &report, || {
        let mut out = analyze_md(&report, &subs);
        let _ = writeln!(out, "\naction on the subsystem simple roots:\n");
        out.push_str(&table.to_markdown());
        out
    })
}

fn parse_subsystem_names(spec: &str) -> Result<Vec<&'static str>> {
    let mut names = Vec::new();
    if spec == "none" || spec.is_empty() {
        return Ok(names);
    }
    for part in spec.split(',') {
        match part.trim() {
            "geb" => {
                for n in ["gamma", "eta", "beta"] {
                    if !names.contains(&n) {
                        names.push(n);
                    }
                }
            }
            "gamma" => names.push("gamma"),
            "eta" => names.push("eta"),
            "beta" => names.push("beta"),
            other => {
                return Err(Error::InvalidSubsystem(format!(
                    "unknown subsystem {other:?}: expected geb, gamma, eta, beta, or none"
                )))
            }
        }
    }
    Ok(names)
}

fn word_string_of(g: &GroupElement) -> String {
    match g.word() {
        Some(w) if !w.is_empty() => word_string(w),
        Some(_) => "1".into(),
        None => "(matrix)".into(),
    }
}

fn analyze_md(
    report: &weylkit::QuasiTranslationReport,
    subs: &[&Subsystem],
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "word: {}", report.word);
    match report.translation_power {
        Some(k) => {
            let _ = writeln!(out, "least translation power: {k}");
        }
        None => {
            let _ = writeln!(out, "no power within the bound is a lattice translation");
        }
    }
    if let Some(v) = &report.vector {
        let _ = writeln!(out, "translation vector of that power: {v}");
    }
    for action in &report.subsystem_actions {
        match &action.map {
            Some(m) if m.is_identity() => {
                let _ = writeln!(out, "{}: acts trivially", action.subsystem);
            }
            Some(m) => {
                let _ = writeln!(
                    out,
                    "{}: permutation {} with δ-shifts {:?}",
                    action.subsystem,
                    m.cycles(),
                    m.shifts
                );
            }
            None => {
                let _ = writeln!(out, "{}: moves the simple system", action.subsystem);
            }
        }
    }
    let _ = subs;
    out
}

// ---------------------------------------------------------------------------
// centralizer

fn cmd_centralizer(cli: &Cli, data: &Arc<CartanData>, seeds: &[String]) -> Result<Output> {
    let seed_roots: Vec<RootVec> =
        seeds.iter().map(|s| parse_root_expr(s, data)).collect::<Result<_>>()?;
    let components = orthogonal_subsystem(&seed_roots, data)?;
    render(cli, &components, || {
        let mut out = String::new();
        let shown: Vec<String> = seed_roots.iter().map(root_display).collect();
        let _ = writeln!(out, "orthogonal subsystem of {{{}}}:", shown.join(", "));
        if components.is_empty() {
            let _ = writeln!(out, "  (empty)");
        }
        for c in &components {
            let roots: Vec<String> = c.roots.iter().map(root_display).collect();
            let _ = writeln!(out, "  {} ({}): {}", c.name, c.label, roots.join(", "));
        }
        out
    })
}

// ---------------------------------------------------------------------------
// stabilize

#[derive(Serialize)]
struct StabilizeDump {
    targets: Vec<RootView>,
    max_len: usize,
    hits: Vec<HitView>,
}

#[derive(Serialize)]
struct HitView {
    word: String,
    length: usize,
    perm: Vec<usize>,
}

fn hit_view(h: &StabilizerHit) -> HitView {
    HitView {
        word: word_string_of(&h.element),
        length: h.element.word_len().unwrap_or(0),
        perm: h.perm.clone(),
    }
}

fn cmd_stabilize(
    cli: &Cli,
    data: &Arc<CartanData>,
    targets: &[String],
    auts: &str,
) -> Result<Output> {
    let target_roots: Vec<RootVec> =
        targets.iter().map(|s| parse_root_expr(s, data)).collect::<Result<_>>()?;
    let aut_elems = parse_aut_spec(auts, data)?;
    let max_len = cli.maxlen.unwrap_or(DEFAULT_MAX_LEN);
    let hits = stabilizer_search(&target_roots, &aut_elems, max_len, data, default_search_cap())?;
    let dump = StabilizeDump {
        targets: target_roots.iter().map(RootView::of).collect(),
        max_len,
        hits: hits.iter().map(hit_view).collect(),
    };
    render(cli, &dump, || {
        let mut out = String::new();
        let shown: Vec<String> = target_roots.iter().map(root_display).collect();
        let _ = writeln!(
            out,
            "{} setwise stabilizers of {{{}}} up to length {} (one shortest witness per \
             permutation):\n",
            dump.hits.len(),
            shown.join(", "),
            max_len
        );
        let _ = writeln!(out, "| word | length | permutation |");
        let _ = writeln!(out, "| --- | --- | --- |");
        for h in &dump.hits {
            let _ = writeln!(out, "| {} | {} | {:?} |", h.word, h.length, h.perm);
        }
        out
    })
}

// ---------------------------------------------------------------------------
// normalizer

fn cmd_normalizer(
    cli: &Cli,
    data: &Arc<CartanData>,
    subsystem: &str,
    auts: &str,
) -> Result<Output> {
    let (sub, ambient) = match subsystem {
        "gamma" | "eta" | "beta" => {
            require_builtin_d5(cli, data)?;
            let geb = geb_system()?;
            let sub = match subsystem {
                "gamma" => geb.gamma.clone(),
                "eta" => geb.eta.clone(),
                _ => geb.beta.clone(),
            };
            (sub, geb.ambient)
        }
        exprs => {
            let roots: Vec<RootVec> =
                exprs.split(',').map(|s| parse_root_expr(s.trim(), data)).collect::<Result<_>>()?;
            let sub = match Subsystem::new_finite("custom", roots.clone(), data) {
                Ok(finite) => affine_extension(&finite, data)?,
                Err(Error::InvalidSubsystem(msg)) if msg.contains("use new_affine") => {
                    // The listed roots already close into an affine diagram;
                    // accept them if some node plays the affine role for the rest.
                    (0..roots.len())
                        .find_map(|i| Subsystem::new_affine("custom", roots.clone(), i, data).ok())
                        .ok_or_else(|| {
                            Error::InvalidSubsystem(
                                "the listed roots form an affine diagram, but no node is \
                                 k\u{b7}\u{3b4} minus the highest root of the remaining ones"
                                    .into(),
                            )
                        })?
                }
                Err(e) => return Err(e),
            };
            (sub, Arc::clone(data))
        }
    };
    let aut_elems = parse_aut_spec(auts, &ambient)?;
    let max_len = cli.maxlen.unwrap_or(DEFAULT_MAX_LEN);
    let pres = assemble_normalizer(&sub, &aut_elems, max_len, &ambient, default_search_cap())?;
    render(cli, &pres, || {
        let mut out = String::new();
        let _ = writeln!(out, "# Normalizer of the {} reflection group\n", pres.subsystem);
        for line in &pres.verification {
            let _ = writeln!(out, "- {line}");
        }
        let _ = writeln!(out, "\n## Commuting blocks\n");
        let mut table_rows: Vec<(String, GroupElement)> = Vec::new();
        for block in &pres.blocks {
            let names: Vec<String> = block.generators.iter().map(|(n, _)| n.clone()).collect();
            let _ = writeln!(out, "- `{}`: {}", block.label, names.join(", "));
            table_rows.extend(block.generators.iter().cloned());
        }
        if !pres.component_mixers.is_empty() {
            let _ = writeln!(out, "\n## Component-exchanging normalizer elements\n");
            for h in &pres.component_mixers {
                let _ = writeln!(out, "- {}", word_string_of(&h.element));
            }
        }
        let mut columns: Vec<&Subsystem> = vec![&sub];
        columns.extend(pres.centralizer_components.iter());
        let table = action_table(&table_rows, &columns, &ambient);
        let _ = writeln!(out, "\n## Action table\n");
        out.push_str(&table.to_markdown());
        out
    })
}

// ---------------------------------------------------------------------------
// fixtures

fn cmd_fixtures(cli: &Cli, action: &FixturesAction) -> Result<Output> {
    let entries = catalog()?;
    match action {
        FixturesAction::List => {
            #[derive(Serialize)]
            struct Row {
                name: String,
                summary: String,
            }
            let rows: Vec<Row> = entries
                .iter()
                .map(|e| Row { name: e.name.clone(), summary: e.summary.clone() })
                .collect();
            render(cli, &rows, || {
                let mut out = String::new();
                let _ = writeln!(out, "| name | summary |");
                let _ = writeln!(out, "| --- | --- |");
                for e in &entries {
                    let _ = writeln!(out, "| {} | {} |", e.name, e.summary);
                }
                out
            })
        }
        FixturesAction::Show { name } => {
            let entry = entries
                .into_iter()
                .find(|e| &e.name == name)
                .ok_or_else(|| Error::ParseError(format!("no fixture named {name:?}")))?;
            #[derive(Serialize)]
            struct EntryDump {
                name: String,
                summary: String,
                word: String,
                matrix: Vec<Vec<i64>>,
                order: ElementOrder,
                translation: Option<String>,
            }
            let dump = EntryDump {
                name: entry.name.clone(),
                summary: entry.summary.clone(),
                word: word_string_of(&entry.element),
                matrix: entry.element.matrix().to_rows(),
                order: entry.element.order(ORDER_CAP),
                translation: as_translation(&entry.element).map(|mu| mu.to_string()),
            };
            render(cli, &dump, || {
                let mut out = String::new();
                let _ = writeln!(out, "name: {}", dump.name);
                let _ = writeln!(out, "summary: {}", dump.summary);
                let _ = writeln!(out, "word: {}", dump.word);
                let _ = writeln!(out, "matrix:");
                for row in &dump.matrix {
                    let _ = writeln!(out, "    {row:>3?}");
                }
                match dump.order {
                    ElementOrder::Finite(k) => {
                        let _ = writeln!(out, "order: {k}");
                    }
                    ElementOrder::ExceedsCap(cap) => {
                        let _ = writeln!(out, "order: exceeds cap {cap}");
                    }
                }
                match &dump.translation {
                    Some(mu) => {
                        let _ = writeln!(out, "translation by {mu}");
                    }
                    None => {
                        let _ = writeln!(out, "not a lattice translation");
                    }
                }
                out
            })
        }
    }
}

// ---------------------------------------------------------------------------
// reproduce

fn cmd_reproduce(cli: &Cli, suite: &str, seeds: &[u64], cases: usize) -> Result<Output> {
    if !suite_names().contains(&suite) {
        return Err(Error::ParseError(format!(
            "unknown suite {suite:?}: expected one of {}",
            suite_names().join(", ")
        )));
    }
    let mut report = run_suite(suite)?;
    if !seeds.is_empty() {
        report = with_property_cases(report, property_cases(seeds, cases)?);
    }
    let ok = report.exit_ok();
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report)
            .map_err(|e| Error::ParseError(format!("serialization failed: {e}")))?,
        Format::Md => report.to_markdown(),
    };
    Ok(Output { text, ok })
}
