//! Rendering of verification reports as JSON, CSV or text.

use poincare_maxwell::differential::ResidualRecord;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::{Format, SuiteConfig};
use crate::numfmt::g17;
use crate::suites::{Suite, SuiteOutput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Non-flagged records that passed.
    pub passed: usize,
    /// Non-flagged records that failed; any makes the run fail.
    pub failed: usize,
    /// Flagged records, whatever their outcome.
    pub flagged: usize,
}

impl Summary {
    pub fn of(records: &[(Suite, ResidualRecord)]) -> Self {
        let mut s = Summary { passed: 0, failed: 0, flagged: 0 };
        for (_, r) in records {
            match (r.flagged, r.passed) {
                (true, _) => s.flagged += 1,
                (false, true) => s.passed += 1,
                (false, false) => s.failed += 1,
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report<'a> {
    pub suite: Suite,
    pub config: &'a SuiteConfig,
    pub output: SuiteOutput,
    pub summary: Summary,
}

impl<'a> Report<'a> {
    pub fn new(suite: Suite, config: &'a SuiteConfig, output: SuiteOutput) -> Self {
        let summary = Summary::of(&output.records);
        Report { suite, config, output, summary }
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text()),
        }
    }

    fn json(&self) -> anyhow::Result<String> {
        let records: Vec<Value> = self.output.records.iter().map(|(_, r)| record_json(r)).collect();
        let mut root = Map::new();
        root.insert("suite".into(), self.suite.name().into());
        root.insert("config".into(), serde_json::to_value(self.config)?);
        root.insert("records".into(), Value::Array(records));
        root.insert("summary".into(), serde_json::to_value(self.summary)?);
        let mut s = serde_json::to_string_pretty(&Value::Object(root))?;
        s.push('\n');
        Ok(s)
    }

    fn csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "name", "indices", "point", "residual", "scale", "tolerance", "passed", "flagged"])?;
        for (suite, r) in &self.output.records {
            w.write_record([
                suite.name().to_string(),
                r.name.clone(),
                pairs_text(&r.indices, ";"),
                pairs_text(&r.point, ";"),
                g17(r.residual),
                g17(r.scale),
                g17(r.tolerance),
                r.passed.to_string(),
                r.flagged.to_string(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for (suite, r) in &self.output.records {
            let status = match (r.flagged, r.passed) {
                (false, true) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "FLAGGED PASS",
                (true, false) => "FLAGGED FAIL",
            };
            out.push_str(&format!(
                "{status:<12} {}/{} [{}] @ [{}] residual={} scale={} tol={}\n",
                suite.name(),
                r.name,
                pairs_text(&r.indices, " "),
                pairs_text(&r.point, " "),
                g17(r.residual),
                g17(r.scale),
                g17(r.tolerance),
            ));
        }
        for note in &self.output.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        let s = self.summary;
        out.push_str(&format!(
            "summary: suite={} passed={} failed={} flagged={}\n",
            self.suite.name(),
            s.passed,
            s.failed,
            s.flagged
        ));
        out
    }
}

fn pairs_text(pairs: &[(String, f64)], sep: &str) -> String {
    pairs.iter().map(|(k, v)| format!("{k}={}", g17(*v))).collect::<Vec<_>>().join(sep)
}

fn pairs_json(pairs: &[(String, f64)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect())
}

fn record_json(r: &ResidualRecord) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), r.name.clone().into());
    m.insert("indices".into(), pairs_json(&r.indices));
    m.insert("point".into(), pairs_json(&r.point));
    m.insert("residual".into(), Value::from(r.residual));
    m.insert("scale".into(), Value::from(r.scale));
    m.insert("tolerance".into(), Value::from(r.tolerance));
    m.insert("passed".into(), r.passed.into());
    m.insert("flagged".into(), r.flagged.into());
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn output() -> SuiteOutput {
        let ok = ResidualRecord::new("a", 0.0, 1.0, 1e-12).with_index("l", 1.0).with_point("theta", 0.5);
        let bad = ResidualRecord::new("b", 1.0, 1.0, 1e-12);
        let flagged = ResidualRecord::new("c", 1.0, 1.0, 1e-12).flagged();
        SuiteOutput {
            records: vec![(Suite::Radial, ok), (Suite::Radial, bad), (Suite::Radial, flagged)],
            notes: vec!["hello".into()],
        }
    }

    #[test]
    fn summary_and_exit_code() {
        let cfg = SuiteConfig::default();
        let r = Report::new(Suite::Radial, &cfg, output());
        assert_eq!(r.summary, Summary { passed: 1, failed: 1, flagged: 1 });
        assert_eq!(r.summary.exit_code(), 1);
    }

    #[test]
    fn json_schema() {
        let cfg = SuiteConfig::default();
        let r = Report::new(Suite::Radial, &cfg, output());
        let v: Value = serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["suite", "config", "records", "summary"]);
        let rec = &v["records"][0];
        let keys: Vec<_> = rec.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["name", "indices", "point", "residual", "scale", "tolerance", "passed", "flagged"]);
        assert_eq!(rec["indices"]["l"], 1.0);
        assert_eq!(v["summary"]["failed"], 1);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let cfg = SuiteConfig::default();
        let text = Report::new(Suite::Radial, &cfg, output()).render(Format::Csv).unwrap();
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.headers().unwrap().len(), 9);
        assert_eq!(rd.records().count(), 3);
    }

    #[test]
    fn text_lists_notes_and_summary() {
        let cfg = SuiteConfig::default();
        let text = Report::new(Suite::Radial, &cfg, output()).render(Format::Text).unwrap();
        assert!(text.contains("FLAGGED FAIL"));
        assert!(text.contains("note: hello"));
        assert!(text.ends_with("summary: suite=radial passed=1 failed=1 flagged=1\n"));
    }
}
