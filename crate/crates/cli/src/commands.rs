use std::fs;
use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use surgroup::distinguish::distinguish_report;
use surgroup::fox::alexander_polynomial;
use surgroup::homcount::{hom_spectrum_parallel, spectra_csv, HomSpectrum};
use surgroup::knot::{validate_peripheral, KnotJson};
use surgroup::presentation::{Presentation, PresentationJson};
use surgroup::snf::abelianization;
use surgroup::surgery::{
    dehn_surgery_group, double_complement_group, half_complement_group, FamilyRecord, SurgerySlope,
};
use surgroup::target::{
    build_suite, escalation_suite_specs, parse_suite, standard_suite, standard_suite_specs, FiniteTarget,
    TargetSpec,
};
use surgroup::tietze::tietze_simplify;

use crate::cache::{Cache, CacheKey};
use crate::slopes::{coprime_slopes, parse_p_values};
use crate::source::{KnotSource, LoadedKnot};
use crate::{CliError, SlopeArgs, SourceArgs, SuiteArgs, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, EXIT_UNRESOLVED};

pub const SCHEMA_VERSION: u32 = 1;

fn load_knot(src: &SourceArgs) -> Result<LoadedKnot, CliError> {
    KnotSource::from_flags(src.braid.clone(), src.builtin.clone(), src.monodromy.clone())?.load()
}

fn suite_specs(name: &str) -> Result<Vec<TargetSpec>, CliError> {
    match name {
        "standard" => Ok(standard_suite_specs()),
        "extended" => {
            let mut s = standard_suite_specs();
            s.extend(escalation_suite_specs());
            Ok(s)
        }
        path => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read suite {path}: {e}")))?;
            Ok(parse_suite(&text)?)
        }
    }
}

struct Suite {
    specs: Vec<TargetSpec>,
    targets: Vec<FiniteTarget>,
}

fn load_suite(args: &SuiteArgs) -> Result<Suite, CliError> {
    let specs = suite_specs(&args.suite)?;
    let targets = build_suite(&specs, args.cap)?;
    Ok(Suite { specs, targets })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    write(path, &text)
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

/// Timestamps and cache statistics, kept out of the primary outputs.
fn write_meta(out: &Path, command: &str, started: u64, clock: Instant, cache: Option<&Cache>) -> Result<(), CliError> {
    let mut meta = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "started_unix": started,
        "finished_unix": unix_now(),
        "elapsed_ms": clock.elapsed().as_millis() as u64,
        "workers": rayon::current_num_threads(),
    });
    if let Some(c) = cache {
        meta["cache_hits"] = c.hits().into();
        meta["cache_misses"] = c.misses().into();
    }
    write_json(&out.join("meta.json"), &meta)
}

fn cached_spectrum(
    cache: &Cache,
    construction: &str,
    knot: &KnotJson,
    s: SurgerySlope,
    group: &Presentation,
    suite: &Suite,
    budget: usize,
) -> HomSpectrum {
    let key = CacheKey {
        schema_version: crate::cache::CACHE_SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION"),
        construction,
        knot,
        p: s.p(),
        q: s.q(),
        suite: &suite.specs,
        budget,
    };
    cache.spectrum(&key, || hom_spectrum_parallel(&tietze_simplify(group, budget), &suite.targets))
}

pub fn knot(src: &SourceArgs, suite: &SuiteArgs, out: Option<&Path>) -> Result<u8, CliError> {
    let k = load_knot(src)?;
    let kp = &k.knot;
    let simplified = tietze_simplify(&kp.group, suite.budget);
    let report = validate_peripheral(kp, &standard_suite());
    let ab = abelianization(&kp.group);
    let alexander = alexander_polynomial(&kp.group)?;

    println!("source: {}", k.origin);
    println!("presentation: {}", kp.group);
    println!("meridian: {}", kp.group.display_word(&kp.meridian));
    println!("longitude: {}", kp.group.display_word(&kp.longitude));
    println!("simplified: {simplified}");
    println!("peripheral checks:");
    print!("{report}");
    println!("abelianization: {ab}");
    println!("alexander: {alexander}");

    if let Some(dir) = out {
        write_json(
            &dir.join("knot.json"),
            &json!({
                "schema_version": SCHEMA_VERSION,
                "source": k.origin,
                "knot": kp.to_json(),
                "simplified": simplified.to_json(),
                "peripheral": report.checks.iter().map(|c| json!({
                    "name": c.name, "passed": c.passed, "detail": c.detail,
                })).collect::<Vec<_>>(),
                "abelianization": ab.to_string(),
                "alexander": alexander.to_string(),
            }),
        )?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_INPUT })
}

#[derive(Serialize)]
struct Manifest<'a> {
    schema_version: u32,
    source: &'a str,
    knot: KnotJson,
    q: i64,
    p_requested: Vec<i64>,
    p_skipped: Vec<i64>,
    suite: Vec<String>,
    escalated: bool,
    budget: usize,
    members: Vec<FamilyRecord>,
}

pub fn family(
    src: &SourceArgs,
    slopes: &SlopeArgs,
    suite: &SuiteArgs,
    escalate: bool,
    out: &Path,
    cache: &Cache,
) -> Result<u8, CliError> {
    let started = unix_now();
    let clock = Instant::now();
    let p_values = parse_p_values(&slopes.p)?;
    let members = coprime_slopes(slopes.q, &p_values)?;
    let k = load_knot(src)?;
    let mut targets = load_suite(suite)?;
    let knot_json = k.knot.to_json();

    let groups = members
        .iter()
        .map(|&s| Ok((s, double_complement_group(&k.knot, s)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let spectra_over = |targets: &Suite| -> Result<_, CliError> {
        let spectra: Vec<HomSpectrum> = groups
            .par_iter()
            .map(|(s, g)| cached_spectrum(cache, "double", &knot_json, *s, g, targets, suite.budget))
            .collect();
        let rows: Vec<(String, HomSpectrum)> =
            members.iter().zip(spectra).map(|(s, sp)| (format!("p={}", s.p()), sp)).collect();
        let report = distinguish_report(&rows)?;
        Ok((rows, report))
    };
    let (mut rows, mut report) = spectra_over(&targets)?;
    let mut escalated = false;
    if escalate && !report.all_distinguished() && suite.suite == "standard" {
        eprintln!(
            "{} pair(s) unresolved over the standard suite; escalating to the extended suite",
            report.unresolved
        );
        targets = load_suite(&SuiteArgs { suite: "extended".into(), ..suite.clone() })?;
        (rows, report) = spectra_over(&targets)?;
        escalated = true;
    }

    let manifest = Manifest {
        schema_version: SCHEMA_VERSION,
        source: &k.origin,
        knot: knot_json.clone(),
        q: slopes.q,
        p_skipped: p_values.iter().copied().filter(|p| !members.iter().any(|s| s.p() == *p)).collect(),
        p_requested: p_values,
        suite: targets.specs.iter().map(|t| t.name.clone()).collect(),
        escalated,
        budget: suite.budget,
        members: groups.iter().map(|(s, g)| FamilyRecord::new(&k.knot, *s, g)).collect(),
    };
    write_json(&out.join("manifest.json"), &manifest)?;
    write(&out.join("spectra.csv"), &spectra_csv(&rows)?)?;
    write(&out.join("report.txt"), &report.to_string())?;
    write_json(&out.join("report.json"), &json!({ "schema_version": SCHEMA_VERSION, "q": slopes.q, "report": report }))?;
    write_meta(out, "family", started, clock, Some(cache))?;

    print!("{report}");
    Ok(if report.all_distinguished() { EXIT_OK } else { EXIT_UNRESOLVED })
}

pub fn verify(src: &SourceArgs, slopes: &SlopeArgs, suite: &SuiteArgs, cache: &Cache) -> Result<u8, CliError> {
    let p_values = parse_p_values(&slopes.p)?;
    let members = coprime_slopes(slopes.q, &p_values)?;
    let k = load_knot(src)?;
    let targets = load_suite(suite)?;
    let knot_json = k.knot.to_json();
    let mut failed = 0;

    let peripheral = validate_peripheral(&k.knot, &standard_suite());
    for c in &peripheral.checks {
        println!("{} peripheral {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    if !peripheral.passed() {
        failed += 1;
    }

    for &s in &members {
        let d = dehn_surgery_group(&k.knot, s)?;
        let h = half_complement_group(&k.knot, s)?;
        let (ad, ah) = (abelianization(&d), abelianization(&h));
        let sd = cached_spectrum(cache, "surgery", &knot_json, s, &d, &targets, suite.budget);
        let sh = cached_spectrum(cache, "half", &knot_json, s, &h, &targets, suite.budget);
        let mismatch = sd.counts.iter().zip(&sh.counts).find(|(a, b)| a.1 != b.1);
        let line = if ad != ah {
            Some(format!("abelianizations differ: surgery {ad}, half {ah}"))
        } else if !ad.is_cyclic_of_order(s.q() as u64) {
            Some(format!("abelianization {ad} is not Z/{}", s.q()))
        } else {
            mismatch.map(|((t, a), (_, b))| format!("spectra differ at {t}: surgery {a}, half {b}"))
        };
        match line {
            None => println!(
                "PASS {s}: abelianization {ad} = {ah}, spectra equal over {} targets",
                targets.targets.len()
            ),
            Some(why) => {
                failed += 1;
                println!("FAIL {s}: {why}");
            }
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn slope_tag(s: SurgerySlope) -> String {
    format!("p{}_q{}", s.p(), s.q()).replace('-', "m")
}

pub fn export(
    src: &SourceArgs,
    q: Option<i64>,
    p: Option<&str>,
    kind: &str,
    presentation: Option<&Path>,
    out: &Path,
) -> Result<u8, CliError> {
    let started = unix_now();
    let clock = Instant::now();
    let mut files: Vec<(String, Presentation)> = Vec::new();
    if let Some(path) = presentation {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let json: PresentationJson = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("presentation file {}: {e}", path.display())))?;
        let stem = path.file_stem().map_or("presentation".into(), |s| s.to_string_lossy().into_owned());
        files.push((format!("{stem}.g"), Presentation::from_json(&json)?));
    } else {
        let k = load_knot(src)?;
        match (q, p) {
            (None, None) => files.push((format!("{}_knot.g", k.label), k.knot.group.clone())),
            (Some(q), Some(p)) => {
                let build = match kind {
                    "surgery" => dehn_surgery_group,
                    "half" => half_complement_group,
                    "double" => double_complement_group,
                    other => return Err(CliError::Input(format!("unknown kind `{other}`"))),
                };
                for s in coprime_slopes(q, &parse_p_values(p)?)? {
                    files.push((format!("{}_{kind}_{}.g", k.label, slope_tag(s)), build(&k.knot, s)?));
                }
            }
            _ => return Err(CliError::Input("--q and --p go together".into())),
        }
    }
    for (name, g) in &files {
        let path = out.join(name);
        write(&path, &format!("{}\n", g.to_gap()))?;
        println!("wrote {}", path.display());
    }
    write_meta(out, "export", started, clock, None)?;
    Ok(EXIT_OK)
}
