use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Value};

use lettercount::alphabet::BUILTIN_NAMES;
use lettercount::cipher::{
    encrypt, hill_climb_solve, Cryptogram, Glyphs, LanguageModel, SolverConfig, SubstitutionKey,
};
use lettercount::corpus::{
    normalize_labeled, tokenize_words_labeled, LetterSequence, WordSequence,
};
use lettercount::freq::{
    compare_tables, count_digrams, count_letters, merge, positional_stats, rank_indices,
    rank_order, stability_curve, stability_curve_random, DigramTable, FrequencyTable,
    TableDistance,
};
use lettercount::markov::{
    entropy_estimates, fit_transitions, generate_letters, generate_vc, independence_test,
    to_vc_sequence, Order,
};
use lettercount::rng::SplitMix64;
use lettercount::stylometry::{
    alberti_test, block_profiles, compass_of_variation, lipogram_scan, orator_threshold,
    poetry_threshold, two_sample_proportion_test, vc_profile, VCProfile,
};
use lettercount::zipf::{fit_power_law, word_rank_frequency};
use lettercount::Alphabet;

use crate::config::{Command, Format, Inputs, MarkovCommand, RunConfig, StyleCommand};
use crate::CliError;

/// One result in every output format.
struct Report {
    default: Format,
    csv: String,
    json: Value,
    text: String,
}

impl Report {
    fn table(csv: String, json: Value, text: String) -> Self {
        Self {
            default: Format::Csv,
            csv,
            json,
            text,
        }
    }

    fn document(csv: String, json: Value, text: String) -> Self {
        Self {
            default: Format::Json,
            csv,
            json,
            text,
        }
    }

    fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(self.default) {
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("values are finite or null");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

struct Context {
    alphabet: Arc<Alphabet>,
}

impl Context {
    fn new(spec: &str) -> Result<Self, CliError> {
        let alphabet = if BUILTIN_NAMES.contains(&spec) {
            Arc::new(Alphabet::builtin(spec)?)
        } else {
            Arc::new(Alphabet::from_spec(&read(Path::new(spec))?)?)
        };
        Ok(Self { alphabet })
    }

    fn letters(&self, path: &Path) -> Result<LetterSequence, CliError> {
        Ok(normalize_labeled(
            &read(path)?,
            &self.alphabet,
            &path.display().to_string(),
        ))
    }

    fn nonempty_letters(&self, path: &Path) -> Result<LetterSequence, CliError> {
        let seq = self.letters(path)?;
        if seq.is_empty() {
            return Err(CliError::Invalid(format!(
                "{}: no letters of `{}`",
                path.display(),
                self.alphabet.name()
            )));
        }
        Ok(seq)
    }

    fn words(&self, path: &Path) -> Result<WordSequence, CliError> {
        Ok(tokenize_words_labeled(
            &read(path)?,
            &self.alphabet,
            &path.display().to_string(),
        ))
    }

    fn all_words(&self, files: &[PathBuf]) -> Result<Vec<String>, CliError> {
        let mut out = Vec::new();
        for f in files {
            out.extend(self.words(f)?.words());
        }
        Ok(out)
    }

    /// Letter and digram tables over several files; pairs never span two files.
    fn tables(&self, files: &[PathBuf]) -> Result<(FrequencyTable, DigramTable), CliError> {
        let mut letters = FrequencyTable::empty(self.alphabet.clone());
        let mut pairs = DigramTable::empty(self.alphabet.clone());
        for f in files {
            let seq = self.letters(f)?;
            letters = merge(&letters, &count_letters(&seq))?;
            pairs = pairs.merge(&count_digrams(&seq))?;
        }
        Ok((letters, pairs))
    }

    fn profile(&self, files: &[PathBuf]) -> Result<VCProfile, CliError> {
        let mut p = VCProfile::default();
        for f in files {
            let q = vc_profile(&self.letters(f)?);
            p.vowel_count += q.vowel_count;
            p.consonant_count += q.consonant_count;
        }
        Ok(p)
    }

    fn model(&self, prefix: &Path, smoothing: f64) -> Result<LanguageModel, CliError> {
        let (uni, di) = model_paths(prefix);
        Ok(LanguageModel::from_csv(
            self.alphabet.clone(),
            &read(&uni)?,
            &read(&di)?,
            smoothing,
        )?)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// `<prefix>.unigram.csv` and `<prefix>.digram.csv`
pub fn model_paths(prefix: &Path) -> (PathBuf, PathBuf) {
    let with = |suffix: &str| {
        let mut s = prefix.as_os_str().to_os_string();
        s.push(suffix);
        PathBuf::from(s)
    };
    (with(".unigram.csv"), with(".digram.csv"))
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

fn opt6(x: Option<f64>) -> String {
    x.map(f6).unwrap_or_default()
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// Runs one command, writing the report to `out` and warnings to `diag`.
pub fn run(config: &RunConfig, out: &mut dyn Write, diag: &mut dyn Write) -> Result<(), CliError> {
    let cx = Context::new(&config.alphabet)?;
    let report = match &config.command {
        Command::Count(Inputs { files }) => count(&cx, files)?,
        Command::Digrams(Inputs { files }) => digrams(&cx, files)?,
        Command::Compare { first, second } => {
            let d = compare_tables(
                &count_letters(&cx.letters(first)?),
                &count_letters(&cx.letters(second)?),
            )?;
            distance_report(&d)
        }
        Command::Stability {
            file,
            sizes,
            random,
            seed,
        } => stability(&cx, file, sizes, *random, *seed)?,
        Command::Positions(Inputs { files }) => positions(&cx, files)?,
        Command::Style(cmd) => style(&cx, cmd)?,
        Command::Lipogram {
            file,
            reference,
            alpha,
        } => lipogram(&cx, file, reference, *alpha)?,
        Command::Entropy(Inputs { files }) => {
            let (letters, pairs) = cx.tables(files)?;
            let e = entropy_estimates(&letters, &pairs)?;
            Report::document(
                format!("h0,h1,h2\n{},{},{}\n", f6(e.h0), f6(e.h1), f6(e.h2)),
                json!({"h0": e.h0, "h1": e.h1, "h2": e.h2}),
                format!(
                    "h0 {:.4} bits/letter\nh1 {:.4} bits/letter\nh2 {:.4} bits/letter\n",
                    e.h0, e.h1, e.h2
                ),
            )
        }
        Command::Generate {
            model,
            from,
            order,
            vc,
            length,
            seed,
        } => generate(
            &cx,
            model.as_deref(),
            from.as_deref(),
            *order,
            *vc,
            *length,
            *seed,
        )?,
        Command::Zipf {
            inputs,
            min_count,
            top,
        } => zipf(&cx, &inputs.files, *min_count, *top)?,
        Command::Solve {
            file,
            model,
            restarts,
            max_stale,
            seed,
            symbols,
            min_length,
            smoothing,
        } => {
            let model = cx.model(model, *smoothing)?;
            let glyphs: Option<Glyphs> = symbols
                .as_ref()
                .map(|s| s.chars().collect::<Vec<_>>().into());
            let c = Cryptogram::parse(&read(file)?, cx.alphabet.clone(), glyphs)?;
            let cfg = SolverConfig {
                restarts: *restarts,
                max_stale: *max_stale,
                seed: *seed,
                length_threshold: *min_length,
            };
            let r = hill_climb_solve(&c, &model, &cfg)?;
            if let Some(w) = r.length_warning {
                writeln!(
                    diag,
                    "warning: {} has {} symbols, fewer than {}; the key may be unreliable",
                    file.display(),
                    w.length,
                    w.threshold
                )
                .map_err(CliError::Output)?;
            }
            let warned = r.length_warning.is_some();
            Report::document(
                format!(
                    "key,score,seed_score,length_warning,plaintext\n{},{},{},{},{}\n",
                    r.best_key,
                    r.best_score,
                    r.seed_score,
                    warned,
                    r.plaintext.render()
                ),
                r.to_json(),
                format!(
                    "key        {}\nletters    {}\nscore      {:.3} (rank-matched start {:.3})\nplaintext  {}\n",
                    r.best_key,
                    cx.alphabet.letters().iter().collect::<String>(),
                    r.best_score,
                    r.seed_score,
                    r.plaintext.render()
                ),
            )
        }
        Command::Markov(MarkovCommand::Test { file, continuity }) => {
            let seq = cx.letters(file)?;
            let r = independence_test(&fit_transitions(&to_vc_sequence(&seq))?, *continuity)?;
            Report::document(
                format!(
                    "chi_square,df,p_value,p_vc,p_cv,p_vv,p_cc\n{},{},{},{},{},{},{}\n",
                    r.chi_square,
                    r.df,
                    r.p_value,
                    f6(r.p_vc),
                    f6(r.p_cv),
                    f6(r.p_vv),
                    f6(r.p_cc)
                ),
                r.to_json(),
                format!(
                    "chi-square {:.3} on {} df, p = {:e}\nP(V|V) {:.4}  P(C|V) {:.4}\nP(V|C) {:.4}  P(C|C) {:.4}\n",
                    r.chi_square, r.df, r.p_value, r.p_vv, r.p_vc, r.p_cv, r.p_cc
                ),
            )
        }
        Command::TrainModel {
            inputs,
            out: prefix,
        } => {
            let (letters, pairs) = cx.tables(&inputs.files)?;
            if letters.total() == 0 {
                return Err(CliError::Invalid("training corpus has no letters".into()));
            }
            let model = LanguageModel::new(letters, pairs, lettercount::cipher::DEFAULT_SMOOTHING)?;
            let (uni, di) = model_paths(prefix);
            write_file(&uni, &model.unigram_csv())?;
            write_file(&di, &model.digram_csv())?;
            let (u, d) = (uni.display().to_string(), di.display().to_string());
            Report::document(
                format!(
                    "unigram,digram,letters\n{u},{d},{}\n",
                    model.unigram().total()
                ),
                json!({"unigram": u, "digram": d, "letters": model.unigram().total()}),
                format!(
                    "wrote {u} and {d} from {} letters\n",
                    model.unigram().total()
                ),
            )
        }
        Command::Encrypt { file, key, seed } => {
            let key = match key {
                Some(k) => SubstitutionKey::parse(cx.alphabet.clone(), k, None)?,
                None => SubstitutionKey::random(cx.alphabet.clone(), &mut SplitMix64::new(*seed)),
            };
            let c = encrypt(&cx.letters(file)?, &key)?;
            Report {
                default: Format::Text,
                csv: format!("key,cryptogram\n{key},{c}\n"),
                json: json!({"key": key.to_string(), "cryptogram": c.render()}),
                text: format!("{c}\n"),
            }
        }
    };
    out.write_all(report.render(config.format).as_bytes())
        .map_err(CliError::Output)
}

fn count(cx: &Context, files: &[PathBuf]) -> Result<Report, CliError> {
    let (table, _) = cx.tables(files)?;
    let mut rank = vec![0usize; table.counts().len()];
    for (r, &i) in rank_indices(&table).iter().enumerate() {
        rank[usize::from(i)] = r + 1;
    }
    let props = table.proportions();
    let letters = cx.alphabet.letters();
    let mut csv = String::from("letter,count,proportion,rank\n");
    for (i, &c) in table.counts().iter().enumerate() {
        let _ = writeln!(csv, "{},{},{},{}", letters[i], c, f6(props[i]), rank[i]);
    }
    let mut text = String::new();
    for (r, &i) in rank_indices(&table).iter().enumerate() {
        let i = usize::from(i);
        let _ = writeln!(
            text,
            "{:>3}  {}  {:>9}  {:.4}",
            r + 1,
            letters[i],
            table.counts()[i],
            props[i]
        );
    }
    let _ = writeln!(text, "total {}", table.total());
    let mut json = table.to_json();
    json["rank_order"] = json!(rank_order(&table).iter().collect::<String>());
    Ok(Report::table(csv, json, text))
}

fn digrams(cx: &Context, files: &[PathBuf]) -> Result<Report, CliError> {
    let (_, pairs) = cx.tables(files)?;
    let letters = cx.alphabet.letters();
    let n = letters.len();
    let mut cells: Vec<(usize, u64)> = pairs
        .counts()
        .iter()
        .copied()
        .enumerate()
        .filter(|c| c.1 > 0)
        .collect();
    cells.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut text = String::new();
    for (k, c) in cells {
        let _ = writeln!(text, "{}{}  {c}", letters[k / n], letters[k % n]);
    }
    Ok(Report::table(pairs.to_csv(), pairs.to_json(), text))
}

fn distance_report(d: &TableDistance) -> Report {
    Report::document(
        format!(
            "total_variation,chi_square,rank_correlation\n{},{},{}\n",
            f6(d.total_variation),
            d.chi_square,
            f6(d.rank_correlation)
        ),
        json!({
            "total_variation": round6(d.total_variation),
            "chi_square": d.chi_square,
            "rank_correlation": round6(d.rank_correlation),
        }),
        format!(
            "total variation  {:.6}\nchi-square       {:.3}\nrank correlation {:.6}\n",
            d.total_variation, d.chi_square, d.rank_correlation
        ),
    )
}

fn stability(
    cx: &Context,
    file: &Path,
    sizes: &[usize],
    random: bool,
    seed: u64,
) -> Result<Report, CliError> {
    let seq = cx.nonempty_letters(file)?;
    let sizes = if sizes.is_empty() {
        let mut s: Vec<usize> = [90, 900, 9_000, 90_000]
            .into_iter()
            .filter(|&n| n < seq.len())
            .collect();
        s.push(seq.len());
        s
    } else {
        sizes.to_vec()
    };
    let curve = if random {
        stability_curve_random(&seq, &sizes, seed)?
    } else {
        stability_curve(&seq, &sizes)?
    };
    let mut csv = String::from("size,total_variation,chi_square,rank_correlation\n");
    let mut text = format!(
        "{:>8}  {:>8}  {:>10}  {:>8}\n",
        "size", "tv", "chi2", "spearman"
    );
    let mut rows = Vec::new();
    for p in &curve {
        let d = &p.distance;
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            p.size,
            f6(d.total_variation),
            d.chi_square,
            f6(d.rank_correlation)
        );
        let _ = writeln!(
            text,
            "{:>8}  {:>8.4}  {:>10.3}  {:>8.4}",
            p.size, d.total_variation, d.chi_square, d.rank_correlation
        );
        rows.push(json!({
            "size": p.size,
            "total_variation": round6(d.total_variation),
            "chi_square": d.chi_square,
            "rank_correlation": round6(d.rank_correlation),
        }));
    }
    Ok(Report::table(
        csv,
        json!({"length": seq.len(), "points": rows}),
        text,
    ))
}

fn positions(cx: &Context, files: &[PathBuf]) -> Result<Report, CliError> {
    let words = WordSequence::from_words(cx.alphabet.clone(), &cx.all_words(files)?, "inputs")?;
    let s = positional_stats(&words);
    let letters = cx.alphabet.letters();
    let mut csv = String::from("letter,initial,second,penultimate,final,doubles\n");
    let mut text = format!(
        "{:<6} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
        "letter", "initial", "second", "penult", "final", "double"
    );
    for (i, l) in letters.iter().enumerate() {
        let row = [
            s.initial.counts()[i],
            s.second.counts()[i],
            s.penultimate.counts()[i],
            s.final_.counts()[i],
            s.doubles[i],
        ];
        let _ = writeln!(
            csv,
            "{l},{},{},{},{},{}",
            row[0], row[1], row[2], row[3], row[4]
        );
        let _ = writeln!(
            text,
            "{l:<6} {:>8} {:>8} {:>8} {:>8} {:>8}",
            row[0], row[1], row[2], row[3], row[4]
        );
    }
    Ok(Report::table(csv, s.to_json(), text))
}

fn style(cx: &Context, cmd: &StyleCommand) -> Result<Report, CliError> {
    Ok(match cmd {
        StyleCommand::Vc(Inputs { files }) => {
            let mut csv = String::from("file,vowels,consonants,vowel_share,vowels_per_100\n");
            let mut text = String::new();
            let mut rows = Vec::new();
            for f in files {
                let p = vc_profile(&cx.letters(f)?);
                let name = f.display().to_string();
                let _ = writeln!(
                    csv,
                    "{name},{},{},{},{}",
                    p.vowel_count,
                    p.consonant_count,
                    opt6(p.vowel_share()),
                    opt6(p.vowels_per_100())
                );
                let _ = writeln!(
                    text,
                    "{name}: {} vowels, {} consonants, share {}, {} vowels per 100 consonants",
                    p.vowel_count,
                    p.consonant_count,
                    p.vowel_share().map_or("n/a".into(), |x| format!("{x:.4}")),
                    p.vowels_per_100()
                        .map_or("n/a".into(), |x| format!("{x:.1}"))
                );
                let mut j = p.to_json();
                j["file"] = json!(name);
                rows.push(j);
            }
            Report::table(csv, Value::Array(rows), text)
        }
        StyleCommand::Alberti(Inputs { files }) => {
            let p = cx.profile(files)?;
            let v = alberti_test(&p)?;
            let share = *v.vowel_share.numer() as f64 / *v.vowel_share.denom() as f64;
            Report::document(
                format!(
                    "vowels,consonants,vowel_share,poetry_threshold,orator_threshold,above_poetry_threshold,above_orator_threshold,label\n{},{},{},{},{},{},{},{}\n",
                    p.vowel_count,
                    p.consonant_count,
                    f6(share),
                    poetry_threshold(),
                    orator_threshold(),
                    v.above_poetry_threshold,
                    v.above_orator_threshold,
                    v.label
                ),
                v.to_json(),
                format!(
                    "vowel share {} = {}\nabove {}: {}\nabove {}: {}\nlabel: {}\n",
                    v.vowel_share,
                    f6(share),
                    poetry_threshold(),
                    v.above_poetry_threshold,
                    orator_threshold(),
                    v.above_orator_threshold,
                    v.label
                ),
            )
        }
        StyleCommand::Compare { first, second } => {
            let a = vc_profile(&cx.letters(first)?);
            let b = vc_profile(&cx.letters(second)?);
            let t = two_sample_proportion_test(&a, &b)?;
            Report::document(
                format!(
                    "share_first,share_second,z,p_value\n{},{},{},{}\n",
                    opt6(a.vowel_share()),
                    opt6(b.vowel_share()),
                    t.z,
                    t.p_value
                ),
                json!({
                    "first": a.to_json(),
                    "second": b.to_json(),
                    "z": t.z,
                    "p_value": t.p_value,
                }),
                format!(
                    "vowel shares {} vs {}\nz = {:.4}, two-sided p = {:.4e}\n",
                    opt6(a.vowel_share()),
                    opt6(b.vowel_share()),
                    t.z,
                    t.p_value
                ),
            )
        }
        StyleCommand::Compass { inputs, block } => {
            let profiles = if inputs.files.len() == 1 {
                block_profiles(&cx.letters(&inputs.files[0])?, *block)?
            } else {
                inputs
                    .files
                    .iter()
                    .map(|f| Ok(vc_profile(&cx.letters(f)?)))
                    .collect::<Result<Vec<_>, CliError>>()?
            };
            let s = compass_of_variation(&profiles)?;
            Report::document(
                format!(
                    "minimum,median,maximum,samples\n{},{},{},{}\n",
                    f6(s.minimum),
                    f6(s.median),
                    f6(s.maximum),
                    s.sample_count
                ),
                json!({
                    "minimum": round6(s.minimum),
                    "median": round6(s.median),
                    "maximum": round6(s.maximum),
                    "sample_count": s.sample_count,
                }),
                format!(
                    "vowels per 100 consonants over {} samples: {:.1} to {:.1}, median {:.1}\n",
                    s.sample_count, s.minimum, s.maximum, s.median
                ),
            )
        }
    })
}

fn lipogram(cx: &Context, file: &Path, reference: &Path, alpha: f64) -> Result<Report, CliError> {
    let observed = count_letters(&cx.letters(file)?);
    let reference = count_letters(&cx.letters(reference)?);
    let flags = lipogram_scan(&observed, &reference, alpha)?;
    let mut csv = String::from("letter,observed,expected,p_value\n");
    let mut text = String::new();
    for f in &flags {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            f.letter,
            f.observed,
            f6(f.expected),
            f.p_value
        );
        let _ = writeln!(
            text,
            "{}: {} observed, {:.1} expected, p = {:.3e}",
            f.letter, f.observed, f.expected, f.p_value
        );
    }
    if flags.is_empty() {
        text.push_str("no letters flagged\n");
    }
    Ok(Report::table(
        csv,
        Value::Array(flags.iter().map(|f| f.to_json()).collect()),
        text,
    ))
}

fn generate(
    cx: &Context,
    model: Option<&Path>,
    from: Option<&Path>,
    order: u8,
    vc: bool,
    length: usize,
    seed: u64,
) -> Result<Report, CliError> {
    let sequence = if vc {
        let source = from.expect("clap requires --from with --vc");
        let t = fit_transitions(&to_vc_sequence(&cx.letters(source)?))?;
        generate_vc(&t, length, seed)?.render()
    } else {
        let model = match (model, from) {
            (Some(prefix), _) => cx.model(prefix, lettercount::cipher::DEFAULT_SMOOTHING)?,
            (None, Some(source)) => {
                LanguageModel::train(&cx.letters(source)?, lettercount::cipher::DEFAULT_SMOOTHING)?
            }
            (None, None) => {
                return Err(CliError::Invalid("generate needs --model or --from".into()))
            }
        };
        let order = if order == 0 { Order::Zero } else { Order::One };
        generate_letters(&model, order, length, seed)?.render()
    };
    Ok(Report {
        default: Format::Text,
        csv: format!("sequence\n{sequence}\n"),
        json: json!({"seed": seed, "length": length, "sequence": sequence}),
        text: format!("{sequence}\n"),
    })
}

fn zipf(cx: &Context, files: &[PathBuf], min_count: u64, top: usize) -> Result<Report, CliError> {
    let words = WordSequence::from_words(cx.alphabet.clone(), &cx.all_words(files)?, "inputs")?;
    let rf = word_rank_frequency(&words)?;
    let fit = fit_power_law(&rf, min_count);
    let mut text = match &fit {
        Ok(f) => format!(
            "exponent {:.4}, intercept {:.4}, r^2 {:.4} over {} words with count >= {min_count}\n",
            f.exponent, f.intercept, f.r_squared, f.points_used
        ),
        Err(e) => format!("no fit: {e}\n"),
    };
    for e in rf.entries().iter().take(top) {
        let _ = writeln!(text, "{:>5}  {:<16} {}", e.rank, e.word, e.count);
    }
    // the fit is the JSON document, so a failed fit is an error there
    Ok(Report::table(rf.to_csv(), fit?.to_json(), text))
}
