//! Job configuration: parsing, defaults and schema checks.

use std::path::PathBuf;

use num_traits::Signed;
use serde::Deserialize;

use crate::geomcore::{Rational, RationalPair};
use crate::okounkov::{Flag, FlagKind};
use crate::series::{
    complete_series, subseries_vt, vanishing_subseries, veronese_series, ModelKind, ModelVariety, MonomialSeries,
};

use super::CliError;

pub const DEFAULT_M_MAX: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Deserialize)]
enum KindTag {
    Pn,
    P1xP1,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    kind: KindTag,
    n: Option<usize>,
    d: Option<u32>,
    a: Option<u32>,
    b: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum RawSeries {
    Complete,
    Vanishing(bool),
    Vt(RationalPair),
    Veronese { m: u32 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    path: Option<PathBuf>,
    #[serde(default)]
    format: Format,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    model: RawModel,
    point: Option<Vec<u32>>,
    series: Option<RawSeries>,
    flag: Option<Flag>,
    flags: Option<Vec<Flag>>,
    m_max: Option<u32>,
    t_grid: Option<Vec<RationalPair>>,
    degrees: Option<Vec<u32>>,
    output: Option<RawOutput>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSpec {
    Complete,
    Vanishing,
    Vt(Rational),
    Veronese(u32),
}

/// A validated job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub model: ModelVariety,
    pub series: SeriesSpec,
    pub flags: Vec<Flag>,
    pub m_max: u32,
    /// Sorted, nonnegative; `None` means a default grid chosen per command.
    pub t_grid: Option<Vec<Rational>>,
    /// Degrees for approximant tables; `None` means `1..=m_max`.
    pub degrees: Option<Vec<u32>>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl JobConfig {
    pub fn build_series(&self) -> MonomialSeries {
        let complete = complete_series(&self.model);
        match &self.series {
            SeriesSpec::Complete => complete,
            SeriesSpec::Vanishing => vanishing_subseries(&self.model),
            SeriesSpec::Vt(t) => subseries_vt(&complete, t).expect("t checked nonnegative"),
            SeriesSpec::Veronese(m) => veronese_series(&complete, *m).expect("m checked positive"),
        }
    }

    /// The first configured flag of the given kind, or the one with the identity ordering.
    pub fn flag(&self, kind: FlagKind) -> Flag {
        self.flags
            .iter()
            .find(|f| f.kind == kind)
            .cloned()
            .unwrap_or_else(|| Flag::standard(kind, self.model.dim()))
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.degrees.clone().unwrap_or_else(|| (1..=self.m_max).collect())
    }

    pub fn set_m_max(&mut self, m_max: u32) -> Result<(), CliError> {
        if m_max < 2 {
            return Err(CliError::schema(Some("--m-max"), 0, "m_max", format!("must be at least 2, got {m_max}")));
        }
        self.m_max = m_max;
        Ok(())
    }
}

fn line_of(text: &str, key: &str) -> usize {
    let needle = format!("\"{key}\"");
    text.find(&needle).map_or(0, |at| text[..at].matches('\n').count() + 1)
}

/// Parses and checks a configuration, applying defaults.
pub fn validate(text: &str, file: Option<&str>) -> Result<JobConfig, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::schema(file, inner.line(), &path, strip_position(&inner.to_string()))
    })?;
    let fail = |key: &str, path: &str, msg: String| CliError::schema(file, line_of(text, key), path, msg);

    let kind = match raw.model.kind {
        KindTag::Pn => {
            if raw.model.a.is_some() || raw.model.b.is_some() {
                return Err(fail("model", "model", "Pn takes fields n and d".into()));
            }
            let n = raw.model.n.ok_or_else(|| fail("model", "model.n", "missing field".into()))?;
            let d = raw.model.d.ok_or_else(|| fail("model", "model.d", "missing field".into()))?;
            ModelKind::Pn { n, d }
        }
        KindTag::P1xP1 => {
            if raw.model.n.is_some() || raw.model.d.is_some() {
                return Err(fail("model", "model", "P1xP1 takes fields a and b".into()));
            }
            let a = raw.model.a.ok_or_else(|| fail("model", "model.a", "missing field".into()))?;
            let b = raw.model.b.ok_or_else(|| fail("model", "model.b", "missing field".into()))?;
            ModelKind::P1xP1 { a, b }
        }
    };
    let model = match &raw.point {
        Some(p) => ModelVariety::at_point(kind, p).map_err(|e| fail("point", "point", e.to_string()))?,
        None => ModelVariety::new(kind).map_err(|e| fail("model", "model", e.to_string()))?,
    };

    let series = match raw.series {
        None | Some(RawSeries::Complete) | Some(RawSeries::Vanishing(false)) => SeriesSpec::Complete,
        Some(RawSeries::Vanishing(true)) => SeriesSpec::Vanishing,
        Some(RawSeries::Vt(pair)) => {
            let t = pair.to_rational().map_err(|e| fail("vt", "series.vt", e.to_string()))?;
            if t.is_negative() {
                return Err(fail("vt", "series.vt", format!("must be nonnegative, got {t}")));
            }
            SeriesSpec::Vt(t)
        }
        Some(RawSeries::Veronese { m }) => {
            if m == 0 {
                return Err(fail("veronese", "series.veronese.m", "must be at least 1".into()));
            }
            SeriesSpec::Veronese(m)
        }
    };

    let mut flags: Vec<Flag> = raw.flag.into_iter().collect();
    let listed = raw.flags.unwrap_or_default();
    for (i, f) in listed.iter().enumerate() {
        f.check(model.dim()).map_err(|e| fail("flags", &format!("flags[{i}].order"), e.to_string()))?;
    }
    if let Some(f) = flags.first() {
        f.check(model.dim()).map_err(|e| fail("flag", "flag.order", e.to_string()))?;
    }
    flags.extend(listed);

    let m_max = raw.m_max.unwrap_or(DEFAULT_M_MAX);
    if m_max < 2 {
        return Err(fail("m_max", "m_max", format!("must be at least 2, got {m_max}")));
    }

    let t_grid = match raw.t_grid {
        None => None,
        Some(pairs) => {
            let mut out: Vec<Rational> = Vec::with_capacity(pairs.len());
            for (i, p) in pairs.into_iter().enumerate() {
                let path = format!("t_grid[{i}]");
                let t = p.to_rational().map_err(|e| fail("t_grid", &path, e.to_string()))?;
                if t.is_negative() {
                    return Err(fail("t_grid", &path, format!("must be nonnegative, got {t}")));
                }
                if out.last().is_some_and(|prev| prev > &t) {
                    return Err(fail("t_grid", &path, "entries must be sorted".into()));
                }
                out.push(t);
            }
            Some(out)
        }
    };

    if let Some(ds) = &raw.degrees {
        if let Some(i) = ds.iter().position(|&m| m == 0) {
            return Err(fail("degrees", &format!("degrees[{i}]"), "must be at least 1".into()));
        }
    }

    let (out, format) = match raw.output {
        Some(o) => (o.path, o.format),
        None => (None, Format::Json),
    };
    Ok(JobConfig { model, series, flags, m_max, t_grid, degrees: raw.degrees, out, format })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geomcore::{int, rat};

    #[test]
    fn minimal_config_gets_defaults() {
        let cfg = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}}"#, None).unwrap();
        assert_eq!(cfg.m_max, DEFAULT_M_MAX);
        assert_eq!(cfg.series, SeriesSpec::Complete);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.flag(FlagKind::Coordinate), Flag::coordinate(vec![0, 1]));
        assert_eq!(cfg.degrees(), (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn full_config() {
        let text = r#"{
            "model": {"kind": "P1xP1", "a": 1, "b": 1},
            "point": [0, 1, 1, 0],
            "series": {"vt": [1, 2]},
            "flag": {"kind": "infinitesimal", "order": [1, 0]},
            "m_max": 6,
            "t_grid": [[0, 1], [1, 2], [2, 1]],
            "output": {"format": "csv"}
        }"#;
        let cfg = validate(text, None).unwrap();
        assert_eq!(cfg.model.point_pattern(), vec![0, 1, 1, 0]);
        assert_eq!(cfg.series, SeriesSpec::Vt(rat(1, 2)));
        assert_eq!(cfg.flag(FlagKind::Infinitesimal).order, vec![1, 0]);
        assert_eq!(cfg.t_grid, Some(vec![int(0), rat(1, 2), int(2)]));
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn rejections_carry_paths_and_lines() {
        let err = validate("{\n  \"model\": {\"kind\": \"P3xP1\", \"n\": 2}\n}", Some("job.json")).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("model.kind"), "{msg}");
        assert!(msg.starts_with("job.json:2:"), "{msg}");
        assert_eq!(err.exit_code(), 2);

        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "t_grid": [[1, 2], [-1, 2]]}"#, None).unwrap_err();
        assert!(err.to_string().contains("t_grid[1]"));
        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "t_grid": [[1, 1], [1, 2]]}"#, None).unwrap_err();
        assert!(err.to_string().contains("sorted"));
        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "m_max": 1}"#, None).unwrap_err();
        assert!(err.to_string().contains("m_max"));
        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "point": [1, 1, 0]}"#, None).unwrap_err();
        assert!(err.to_string().contains("torus-fixed"));
        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "colour": 3}"#, None).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = validate(r#"{"model": {"kind": "Pn", "n": 2, "d": 1}, "flag": {"kind": "coordinate", "order": [0, 0]}}"#, None)
            .unwrap_err();
        assert!(err.to_string().contains("flag.order"));
    }
}
