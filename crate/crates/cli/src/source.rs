use std::path::{Path, PathBuf};

use serde::Deserialize;

use surgroup::braid::parse_braid;
use surgroup::fibered::{mapping_torus_presentation, FiberedJson, FiberedKnotData};
use surgroup::knot::{wirtinger_from_braid, BuiltinKnot, KnotPresentation};
use surgroup::presentation::{word_from_json, WordJson};

use crate::CliError;

#[derive(Clone, Debug)]
pub enum KnotSource {
    Braid(String),
    Builtin(String),
    Monodromy(PathBuf),
}

pub struct LoadedKnot {
    /// Short name used in file names.
    pub label: String,
    /// Human-readable origin, e.g. `braid "1 1 1"`.
    pub origin: String,
    pub knot: KnotPresentation,
}

/// Monodromy file: the fibered-knot wire form plus an optional longitude
/// override over `a1, b1, ..., m`.
#[derive(Deserialize)]
struct MonodromyFile {
    #[serde(flatten)]
    fibered: FiberedJson,
    #[serde(default)]
    longitude: Option<WordJson>,
}

impl KnotSource {
    pub fn from_flags(
        braid: Option<String>,
        builtin: Option<String>,
        monodromy: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        match (braid, builtin, monodromy) {
            (Some(b), None, None) => Ok(KnotSource::Braid(b)),
            (None, Some(b), None) => Ok(KnotSource::Builtin(b)),
            (None, None, Some(m)) => Ok(KnotSource::Monodromy(m)),
            (None, None, None) => Err(CliError::Input("give one of --braid, --builtin, --monodromy".into())),
            _ => Err(CliError::Input("--braid, --builtin and --monodromy are exclusive".into())),
        }
    }

    pub fn load(&self) -> Result<LoadedKnot, CliError> {
        match self {
            KnotSource::Braid(text) => {
                let b = parse_braid(text)?;
                Ok(LoadedKnot {
                    label: "braid".into(),
                    origin: format!("braid \"{text}\""),
                    knot: wirtinger_from_braid(&b)?,
                })
            }
            KnotSource::Builtin(name) => {
                let k = BuiltinKnot::parse(name)?;
                Ok(LoadedKnot { label: k.name().into(), origin: format!("builtin {}", k.name()), knot: k.knot() })
            }
            KnotSource::Monodromy(path) => load_monodromy(path),
        }
    }
}

fn load_monodromy(path: &Path) -> Result<LoadedKnot, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: MonodromyFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("monodromy file {}: {e}", path.display())))?;
    let data = FiberedKnotData::from_json(&file.fibered)?;
    let mut knot = mapping_torus_presentation(&data)?;
    if let Some(l) = &file.longitude {
        knot.longitude = word_from_json(&knot.group, l)?;
    }
    let label = path.file_stem().map_or("monodromy".into(), |s| s.to_string_lossy().into_owned());
    Ok(LoadedKnot { label, origin: format!("monodromy {}", path.display()), knot })
}
