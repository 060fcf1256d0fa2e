//! Command-line front end: construct spread codes, analyze orbit codes
//! against the closed-form predictors, compute Plücker orbits, and decide
//! ball/Schubert membership.
//!
//! Exit codes: 0 success, 2 usage/parameter error, 3 mathematical
//! precondition failure, 4 search exhaustion.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitcodes::{
    ball_center0_violation, ball_membership, ball_membership_via_center, build_spread_code,
    companion_matrix, design_starting_point, enumerate_orbit, extend_to_basis, grassmannian,
    min_distance_pairwise, pluecker_embed, pluecker_orbit, predict_params, schubert_membership,
    spread_starting_point, vector_orbit_partition, Error, ExtField, Flag, MultiIndex, OrbitCode,
    PolyFq, Prediction, Subspace,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "orbitcodes",
    version,
    about = "Cyclic orbit codes on finite Grassmannians: spreads, predictors, Plücker orbits, ball and Schubert membership"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the spread code of the subfield starting point (requires k | n
    /// and a primitive polynomial)
    Spread(SpreadArgs),
    /// Enumerate the orbit of an explicit starting point and compare the
    /// brute-force parameters with the closed-form predictor
    Analyze(AnalyzeArgs),
    /// Plücker coordinates of a starting point and its full Plücker orbit
    Pluecker(PlueckerArgs),
    /// Ball membership (and the Schubert special case) around a center
    Ball(BallArgs),
    /// Search for a starting point with a prescribed minimum distance
    Design(DesignArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FieldArgs {
    /// Prime base field size
    #[arg(long)]
    q: u64,
    /// Ambient dimension / polynomial degree
    #[arg(long)]
    n: usize,
    /// Defining polynomial, "x^6+x+1" or "1,1,0,0,0,0,1"
    #[arg(long)]
    poly: String,
    /// Cap on the field size for discrete-log tables
    #[arg(long, default_value_t = orbitcodes::DEFAULT_LOG_CAP)]
    log_cap: u64,
}

impl FieldArgs {
    fn polynomial(&self) -> Result<PolyFq, Error> {
        let poly = PolyFq::parse(self.q, &self.poly)?;
        if poly.degree() != Some(self.n) {
            return Err(Error::InvalidParameter(format!(
                "polynomial has degree {:?}, expected n = {}",
                poly.degree(),
                self.n
            )));
        }
        Ok(poly)
    }

    fn field(&self) -> Result<ExtField, Error> {
        ExtField::with_log_cap(self.polynomial()?, self.log_cap)
    }
}

#[derive(Args)]
struct SpreadArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Subspace dimension (must divide n)
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Starting-point rows as comma-separated digit strings, e.g. 1000,0011,1011
    #[arg(long)]
    rows: String,
    /// Expected subspace dimension; rejected if the rows have another rank
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PlueckerArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Starting-point rows as comma-separated digit strings
    #[arg(long)]
    rows: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BallArgs {
    /// Prime base field size
    #[arg(long)]
    q: u64,
    /// Ambient dimension
    #[arg(long)]
    n: usize,
    /// Ball center rows; defaults to the standard rs[I_k | 0]
    #[arg(long)]
    center: Option<String>,
    /// Candidate subspace rows (omit with --count)
    #[arg(long)]
    rows: Option<String>,
    /// Ball radius parameter: the ball holds subspaces at distance <= 2t
    #[arg(long)]
    t: usize,
    /// Count the whole ball by sweeping G_q(k, n) (requires --k)
    #[arg(long)]
    count: bool,
    /// Subspace dimension, needed for --count or a default center
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct DesignArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Subspace dimension of the starting point
    #[arg(long)]
    k: usize,
    /// Prescribed minimum distance (even, at most 2k)
    #[arg(long)]
    target: usize,
    /// Search node budget
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spread(args) => cmd_spread(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Pluecker(args) => cmd_pluecker(args),
        Command::Ball(args) => cmd_ball(args),
        Command::Design(args) => cmd_design(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NonPrimeModulus(_)
        | Error::InvalidPolynomial(_)
        | Error::FieldMismatch(_)
        | Error::DimensionMismatch(_)
        | Error::ZeroSubspace
        | Error::DuplicateExponents
        | Error::RadiusOutOfRange { .. }
        | Error::MalformedFlag(_)
        | Error::NonDivisorDimension { .. }
        | Error::RankDeficient { .. }
        | Error::InvalidParameter(_)
        | Error::Parse(_)
        | Error::TooLarge(_) => 2,
        Error::ReduciblePolynomial
        | Error::NotPrimitive
        | Error::PrimitiveGenerator
        | Error::SingularMatrix
        | Error::NotCompanionShape(_)
        | Error::ZeroElement
        | Error::LogTableCapExceeded { .. }
        | Error::SingleCodeword
        | Error::OrderSearchExceeded(_) => 3,
        Error::DesignNotFound { .. } => 4,
        Error::Internal(_) => 1,
    }
}

fn rows_value(s: &Subspace) -> Value {
    Value::from(s.row_strings())
}

fn option_value<T: Into<Value>>(v: Option<T>) -> Value {
    v.map(Into::into).unwrap_or(Value::Null)
}

fn prediction_value(p: &Prediction) -> Value {
    let counts: Value = p
        .multiset
        .counts()
        .iter()
        .map(|(a, m)| (a.to_string(), Value::from(*m)))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    json!({
        "cardinality": p.cardinality,
        "min_distance": option_value(p.min_distance),
        "d": p.d,
        "effective_d": p.effective_d,
        "degenerate": p.degenerate,
        "published_degenerate_cardinality": option_value(p.published_degenerate_cardinality),
        "difference_multiset": { "modulus": p.multiset.modulus(), "counts": counts },
    })
}

fn parse_subspace(q: u64, n: usize, rows: &str) -> Result<Subspace, Error> {
    let s = Subspace::parse(q, rows)?;
    if s.ambient_dim() != n {
        return Err(Error::InvalidParameter(format!(
            "rows have ambient dimension {}, expected n = {n}",
            s.ambient_dim()
        )));
    }
    Ok(s)
}

fn emit(format: Format, output: Option<&PathBuf>, report: &Value, text: &str) -> Result<(), Error> {
    let rendered = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).unwrap();
            s.push('\n');
            s
        }
        Format::Text => text.to_string(),
    };
    match output {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn orbit_summary_text(code: &OrbitCode, out: &mut String) {
    out.push_str(&format!("cardinality:       {}\n", code.cardinality()));
    out.push_str(&format!("period:            {}\n", code.period()));
    out.push_str(&format!("generator order:   {}\n", code.generator_order()));
    out.push_str(&format!(
        "min distance:      {}\n",
        code.min_distance()
            .map_or("n/a".to_string(), |d| d.to_string())
    ));
}

fn cmd_spread(args: SpreadArgs) -> Result<u8, Error> {
    let field = args.field.field()?;
    let n = field.n();
    let k = args.k;
    if k == 0 || n % k != 0 {
        return Err(Error::NonDivisorDimension { k, n });
    }
    if !field.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let start = spread_starting_point(&field, k)?;
    let code = build_spread_code(&field, k)?;
    let formula_cardinality = (field.size() - 1) / (field.q().pow(k as u32) - 1);
    let formula_distance = 2 * k;
    let prediction = predict_params(&start, field.modulus())?;
    let agreement = code.cardinality() == formula_cardinality
        && code.min_distance() == Some(formula_distance)
        && prediction.cardinality == code.cardinality()
        && prediction.min_distance == code.min_distance();
    let report = json!({
        "command": "spread",
        "q": field.q(),
        "n": n,
        "k": k,
        "polynomial": field.modulus().to_string(),
        "polynomial_order": field.order_of_poly(),
        "primitive": true,
        "starting_point": rows_value(&start),
        "codewords": code.codewords().iter().map(rows_value).collect::<Vec<_>>(),
        "cardinality": code.cardinality(),
        "cardinality_formula": formula_cardinality,
        "min_distance": option_value(code.min_distance()),
        "min_distance_formula": formula_distance,
        "prediction": prediction_value(&prediction),
        "agreement": agreement,
    });
    let mut text = String::new();
    text.push_str(&format!(
        "spread code in G_{}({},{}) from {}\n",
        field.q(),
        k,
        n,
        field.modulus()
    ));
    text.push_str("starting point:\n");
    for row in start.row_strings() {
        text.push_str(&format!("  {row}\n"));
    }
    orbit_summary_text(&code, &mut text);
    text.push_str(&format!(
        "formula:           cardinality {formula_cardinality}, distance {formula_distance}\n"
    ));
    text.push_str(&format!("agreement:         {agreement}\n"));
    text.push_str("codewords:\n");
    for cw in code.codewords() {
        text.push_str(&format!("  {}\n", cw.row_strings().join(",")));
    }
    emit(args.format, args.output.as_ref(), &report, &text)?;
    Ok(0)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8, Error> {
    let field_args = &args.field;
    let poly = field_args.polynomial()?;
    let start = parse_subspace(field_args.q, field_args.n, &args.rows)?;
    if let Some(k) = args.k {
        if start.dim() != k {
            return Err(Error::RankDeficient {
                expected: k,
                actual: start.dim(),
            });
        }
    }
    let generator = companion_matrix(&poly)?;
    let code = enumerate_orbit(&start, &generator)?;
    let prediction = predict_params(&start, &poly)?;
    let pairwise = if code.cardinality() >= 2 {
        Some(min_distance_pairwise(&code)?)
    } else {
        None
    };
    let agreement = prediction.cardinality == code.cardinality()
        && prediction.min_distance == code.min_distance()
        && pairwise == code.min_distance();
    let primitive = poly.is_primitive()?;
    let orbit_partition = if primitive {
        Value::Null
    } else {
        let partition = vector_orbit_partition(&generator)?;
        json!({
            "orbit_count": partition.orbit_count(),
            "orbit_length": partition.orbit_length(),
        })
    };
    let report = json!({
        "command": "analyze",
        "q": field_args.q,
        "n": field_args.n,
        "k": start.dim(),
        "polynomial": poly.to_string(),
        "polynomial_order": poly.order()?,
        "primitive": primitive,
        "starting_point": rows_value(&start),
        "period": code.period(),
        "cardinality": code.cardinality(),
        "min_distance": option_value(code.min_distance()),
        "min_distance_pairwise": option_value(pairwise),
        "prediction": prediction_value(&prediction),
        "vector_orbits": orbit_partition,
        "agreement": agreement,
        "codewords": code.codewords().iter().map(rows_value).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    text.push_str(&format!(
        "orbit code in G_{}({},{}) under companion({})\n",
        field_args.q,
        start.dim(),
        field_args.n,
        poly
    ));
    text.push_str("starting point:\n");
    for row in start.row_strings() {
        text.push_str(&format!("  {row}\n"));
    }
    orbit_summary_text(&code, &mut text);
    text.push_str(&format!(
        "pairwise distance: {}\n",
        pairwise.map_or("n/a".to_string(), |d| d.to_string())
    ));
    text.push_str(&format!(
        "predictor:         cardinality {}, distance {}, d {}, effective d {}, degenerate {}\n",
        prediction.cardinality,
        prediction
            .min_distance
            .map_or("n/a".to_string(), |d| d.to_string()),
        prediction.d,
        prediction.effective_d,
        prediction.degenerate
    ));
    if let Some(published) = prediction.published_degenerate_cardinality {
        text.push_str(&format!(
            "                   (published degenerate-branch formula would give cardinality {published})\n"
        ));
    }
    let multiset = &prediction.multiset;
    text.push_str(&format!(
        "difference multiset (mod {}): {}\n",
        multiset.modulus(),
        if multiset.is_empty() {
            "empty".to_string()
        } else {
            multiset
                .counts()
                .iter()
                .map(|(a, m)| format!("{a}:{m}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    ));
    text.push_str(&format!("agreement:         {agreement}\n"));
    emit(args.format, args.output.as_ref(), &report, &text)?;
    Ok(0)
}

fn cmd_pluecker(args: PlueckerArgs) -> Result<u8, Error> {
    let field = args.field.field()?;
    let start = parse_subspace(field.q(), field.n(), &args.rows)?;
    let embedded = pluecker_embed(&start);
    let orbit = pluecker_orbit(&start, &field)?;
    let generator = companion_matrix(field.modulus())?;
    let code = enumerate_orbit(&start, &generator)?;
    let square_commutes = orbit.len() as u64 == code.cardinality()
        && orbit
            .iter()
            .zip(code.codewords())
            .all(|(point, word)| *point == pluecker_embed(word));
    let report = json!({
        "command": "pluecker",
        "q": field.q(),
        "n": field.n(),
        "k": start.dim(),
        "polynomial": field.modulus().to_string(),
        "starting_point": rows_value(&start),
        "index_legend": embedded.index_legend(),
        "embedding": embedded.to_string(),
        "orbit": orbit.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "orbit_length": orbit.len(),
        "matrix_orbit_cardinality": code.cardinality(),
        "square_commutes": square_commutes,
    });
    let mut text = String::new();
    text.push_str(&format!(
        "Plücker data in G_{}({},{}) for {}\n",
        field.q(),
        start.dim(),
        field.n(),
        field.modulus()
    ));
    text.push_str(&format!("indices:   {}\n", embedded.index_legend()));
    text.push_str(&format!("embedding: [{embedded}]\n"));
    text.push_str(&format!("orbit ({} points):\n", orbit.len()));
    for p in &orbit {
        text.push_str(&format!("  [{p}]\n"));
    }
    text.push_str(&format!("square commutes:   {square_commutes}\n"));
    emit(args.format, args.output.as_ref(), &report, &text)?;
    Ok(0)
}

fn standard_center(q: u64, k: usize, n: usize) -> Result<Subspace, Error> {
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|r| {
            let mut row = vec![0u64; n];
            row[r] = 1;
            row
        })
        .collect();
    Subspace::from_vectors(q, &rows)
}

fn cmd_ball(args: BallArgs) -> Result<u8, Error> {
    let center = match (&args.center, args.k) {
        (Some(rows), _) => parse_subspace(args.q, args.n, rows)?,
        (None, Some(k)) => standard_center(args.q, k, args.n)?,
        (None, None) => {
            return Err(Error::InvalidParameter(
                "--center or --k is required to fix the ball center".into(),
            ))
        }
    };
    let k = center.dim();
    if args.t > k {
        return Err(Error::RadiusOutOfRange { t: args.t, k });
    }
    if args.count {
        return ball_count(&args, &center);
    }
    let Some(rows) = &args.rows else {
        return Err(Error::InvalidParameter(
            "--rows is required unless --count is set".into(),
        ));
    };
    let candidate = parse_subspace(args.q, args.n, rows)?;
    let member_direct = ball_membership(&candidate, &center, args.t)?;
    let member_translated = ball_membership_via_center(&candidate, &center, args.t)?;
    let flag = Flag::through(&center)?;
    let index = MultiIndex::ball_bound(args.t, k, args.n)?;
    let member_schubert = schubert_membership(&candidate, &flag, &index)?;
    let distance = center.distance(&candidate)?;
    let intersection = center.intersection_dim(&candidate)?;
    let agreement = member_direct == member_translated
        && member_direct == member_schubert
        && member_direct == (distance <= 2 * args.t);
    // witness: the intersection dimension when inside, the violated
    // vanishing index (in translated coordinates) when outside
    let translated = candidate.apply(&extend_to_basis(&center)?.inverse()?)?;
    let violation = ball_center0_violation(&translated, args.t)?;
    let report = json!({
        "command": "ball",
        "q": args.q,
        "n": args.n,
        "k": k,
        "t": args.t,
        "center": rows_value(&center),
        "candidate": rows_value(&candidate),
        "member": member_direct,
        "member_via_center": member_translated,
        "member_schubert": member_schubert,
        "distance": distance,
        "intersection_dim": intersection,
        "violated_index": option_value(violation.as_ref().map(|mi| mi.to_string())),
        "schubert_index": index.to_string(),
        "agreement": agreement,
    });
    let mut text = String::new();
    text.push_str(&format!(
        "ball query in G_{}({},{}), radius 2t = {}\n",
        args.q,
        k,
        args.n,
        2 * args.t
    ));
    text.push_str(&format!("center:     {}\n", center.row_strings().join(",")));
    text.push_str(&format!(
        "candidate:  {}\n",
        candidate.row_strings().join(",")
    ));
    text.push_str(&format!("member (intersection method): {member_direct}\n"));
    text.push_str(&format!(
        "member (translated vanishing): {member_translated}\n"
    ));
    text.push_str(&format!(
        "member (Schubert, index {index}): {member_schubert}\n"
    ));
    text.push_str(&format!(
        "witness:    distance {distance}, intersection dim {intersection}"
    ));
    if let Some(mi) = &violation {
        text.push_str(&format!(", violated index {mi}"));
    }
    text.push('\n');
    text.push_str(&format!("agreement:  {agreement}\n"));
    emit(args.format, args.output.as_ref(), &report, &text)?;
    Ok(0)
}

fn ball_count(args: &BallArgs, center: &Subspace) -> Result<u8, Error> {
    let k = center.dim();
    let points = grassmannian(args.q, k, args.n)?;
    let mut count_direct = 0u64;
    let mut count_translated = 0u64;
    for v in &points {
        if ball_membership(v, center, args.t)? {
            count_direct += 1;
        }
        if ball_membership_via_center(v, center, args.t)? {
            count_translated += 1;
        }
    }
    let agreement = count_direct == count_translated;
    let report = json!({
        "command": "ball",
        "q": args.q,
        "n": args.n,
        "k": k,
        "t": args.t,
        "center": rows_value(center),
        "grassmannian_size": points.len(),
        "ball_size": count_direct,
        "ball_size_via_center": count_translated,
        "agreement": agreement,
    });
    let mut text = String::new();
    text.push_str(&format!(
        "ball count in G_{}({},{}), radius 2t = {}\n",
        args.q,
        k,
        args.n,
        2 * args.t
    ));
    text.push_str(&format!(
        "center:          {}\n",
        center.row_strings().join(",")
    ));
    text.push_str(&format!("grassmannian:    {} points\n", points.len()));
    text.push_str(&format!("ball size:       {count_direct}\n"));
    text.push_str(&format!("via translation: {count_translated}\n"));
    text.push_str(&format!("agreement:       {agreement}\n"));
    emit(args.format, args.output.as_ref(), &report, &text)?;
    Ok(0)
}

fn cmd_design(args: DesignArgs) -> Result<u8, Error> {
    let poly = args.field.polynomial()?;
    match design_starting_point(&poly, args.k, args.target, args.budget) {
        Ok(result) => {
            let prediction = predict_params(&result.subspace, &poly)?;
            let report = json!({
                "command": "design",
                "q": args.field.q,
                "n": args.field.n,
                "k": args.k,
                "polynomial": poly.to_string(),
                "target_distance": args.target,
                "found": true,
                "starting_point": rows_value(&result.subspace),
                "cardinality": result.code.cardinality(),
                "min_distance": option_value(result.code.min_distance()),
                "prediction": prediction_value(&prediction),
                "nodes_explored": result.nodes_explored,
                "budget": args.budget,
            });
            let mut text = String::new();
            text.push_str(&format!(
                "designed starting point in G_{}({},{}) for target distance {}\n",
                args.field.q, args.k, args.field.n, args.target
            ));
            for row in result.subspace.row_strings() {
                text.push_str(&format!("  {row}\n"));
            }
            orbit_summary_text(&result.code, &mut text);
            text.push_str(&format!(
                "nodes explored:    {} (budget {})\n",
                result.nodes_explored, args.budget
            ));
            emit(args.format, args.output.as_ref(), &report, &text)?;
            Ok(0)
        }
        Err(Error::DesignNotFound { nodes }) => {
            let report = json!({
                "command": "design",
                "q": args.field.q,
                "n": args.field.n,
                "k": args.k,
                "polynomial": poly.to_string(),
                "target_distance": args.target,
                "found": false,
                "nodes_explored": nodes,
                "budget": args.budget,
            });
            let text = format!(
                "no starting point found for target distance {} ({} nodes explored, budget {})\n",
                args.target, nodes, args.budget
            );
            emit(args.format, args.output.as_ref(), &report, &text)?;
            Ok(4)
        }
        Err(err) => Err(err),
    }
}
