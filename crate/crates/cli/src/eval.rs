//! Point evaluation (`eval`) and grid tabulation (`table`). A table row is
//! computed by the same [`evaluate`] call that `eval` uses, so the two
//! agree exactly.

use num_complex::Complex64 as C64;
use poincare_maxwell::assembly::PoincareWaveFunction;
use poincare_maxwell::harmonics::{associated_m, generalized_m, z_sum, zonal_z, HarmonicIndex};
use poincare_maxwell::kinematics::ComplexEulerAngles;
use poincare_maxwell::lorentz_sector::{RadialFunctions, RadialSolution};
use poincare_maxwell::photon::{polarization_vectors, Helicity, PhotonPlaneWave, WaveVector};
use poincare_maxwell::HalfInt;
use serde_json::{Map, Value};

use crate::config::{usage, Format, Variant};
use crate::numfmt::{complex, g17};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Function {
    Z,
    M,
    Associated,
    Zonal,
    Polarization,
    Planewave,
    Radial,
    Assemble,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Z => "z",
            Function::M => "m",
            Function::Associated => "associated",
            Function::Zonal => "zonal",
            Function::Polarization => "polarization",
            Function::Planewave => "planewave",
            Function::Radial => "radial",
            Function::Assemble => "assemble",
        }
    }
}

pub const ANGLE_NAMES: [&str; 6] = ["phi", "epsilon", "theta", "tau", "chi", "vareps"];

/// Fully parsed inputs of one evaluation. Fields a function does not use
/// are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalRequest {
    pub function: Function,
    pub l: Option<HalfInt>,
    pub m: Option<HalfInt>,
    pub n: Option<HalfInt>,
    /// `[φ, ε, θ, τ, χ, vareps]`.
    pub angles: [f64; 6],
    pub dotted: bool,
    pub k: Option<[f64; 3]>,
    pub helicity: Option<Helicity>,
    pub x: [f64; 3],
    pub t: f64,
    pub r: C64,
    pub constant: C64,
    pub constant_dot: C64,
    pub variant: Variant,
    pub c: f64,
}

impl EvalRequest {
    pub fn new(function: Function) -> Self {
        EvalRequest {
            function,
            l: None,
            m: None,
            n: None,
            angles: [0.0; 6],
            dotted: false,
            k: None,
            helicity: None,
            x: [0.0; 3],
            t: 0.0,
            r: C64::new(1.0, 0.0),
            constant: C64::new(0.0, 0.0),
            constant_dot: C64::new(0.0, 0.0),
            variant: Variant::Corrected,
            c: 1.0,
        }
    }

    fn need<T: Copy>(&self, v: Option<T>, flag: &str) -> anyhow::Result<T> {
        v.ok_or_else(|| usage(format!("`{}` needs --{flag}", self.function.name())))
    }

    fn index(&self, n_default: Option<HalfInt>) -> anyhow::Result<HarmonicIndex> {
        let l = self.need(self.l, "l")?;
        let m = self.need(self.m, "m")?;
        let n = match n_default {
            Some(n) => n,
            None => self.need(self.n, "n")?,
        };
        let idx = HarmonicIndex::new(l, m, n).map_err(|e| usage(e.to_string()))?;
        Ok(if self.dotted { idx.dotted() } else { idx })
    }

    fn euler(&self) -> anyhow::Result<ComplexEulerAngles> {
        let [a, b, c, d, e, f] = self.angles;
        ComplexEulerAngles::new(a, b, c, d, e, f).map_err(|e| usage(e.to_string()))
    }

    fn radial(&self) -> anyhow::Result<RadialSolution> {
        let l = self.need(self.l, "l")?;
        let l = l.as_int().filter(|v| *v >= 1).ok_or_else(|| usage("radial functions need an integer l >= 1"))?;
        RadialSolution::new(l as u32, self.constant, self.constant_dot, self.variant.into())
            .map_err(|e| usage(e.to_string()))
    }

    fn wave_vector(&self) -> anyhow::Result<WaveVector> {
        let k = self.need(self.k, "k")?;
        WaveVector::propagating(k).map_err(|e| usage(e.to_string()))
    }
}

/// Named complex outputs in a fixed order, plus the inputs that produced
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub function: Function,
    pub inputs: Vec<(String, String)>,
    pub values: Vec<(String, C64)>,
}

fn core_err(e: poincare_maxwell::Error) -> anyhow::Error {
    usage(e.to_string())
}

pub fn evaluate(req: &EvalRequest) -> anyhow::Result<Evaluation> {
    let mut inputs: Vec<(String, String)> = Vec::new();
    let mut put = |k: &str, v: String| inputs.push((k.to_string(), v));
    let angle_inputs = |put: &mut dyn FnMut(&str, String), names: &[usize]| {
        for &i in names {
            put(ANGLE_NAMES[i], g17(req.angles[i]));
        }
    };
    let values: Vec<(String, C64)> = match req.function {
        Function::Z => {
            let idx = req.index(None)?;
            put_index(&mut put, &idx);
            angle_inputs(&mut put, &[2, 3]);
            vec![("value".into(), z_sum(idx, req.angles[2], req.angles[3]).map_err(core_err)?)]
        }
        Function::Zonal => {
            let l = req.need(req.l, "l")?;
            put("l", l.to_string());
            angle_inputs(&mut put, &[2, 3]);
            let z = zonal_z(l, req.angles[2], req.angles[3]).map_err(core_err)?;
            vec![("value".into(), if req.dotted { z.conj() } else { z })]
        }
        Function::M => {
            let idx = req.index(None)?;
            put_index(&mut put, &idx);
            angle_inputs(&mut put, &[0, 1, 2, 3, 4, 5]);
            vec![("value".into(), generalized_m(idx, &req.euler()?))]
        }
        Function::Associated => {
            let idx = req.index(Some(HalfInt::ZERO))?;
            put("l", idx.l().to_string());
            put("m", idx.m().to_string());
            put("dotted", req.dotted.to_string());
            angle_inputs(&mut put, &[0, 1, 2, 3, 4, 5]);
            let v = associated_m(idx.l(), idx.m(), &req.euler()?).map_err(core_err)?;
            vec![("value".into(), if req.dotted { v.conj() } else { v })]
        }
        Function::Polarization => {
            let k = req.wave_vector()?;
            put("k", vec3_text(&k.components()));
            let p = polarization_vectors(&k).map_err(core_err)?;
            let hs = match req.helicity {
                Some(h) => vec![h],
                None => Helicity::ALL.to_vec(),
            };
            hs.into_iter()
                .flat_map(|h| {
                    let eps = p.get(h);
                    (0..3).map(move |i| (format!("eps_{}_{}", helicity_word(h), i + 1), eps[i]))
                })
                .collect()
        }
        Function::Planewave => {
            let k = req.wave_vector()?;
            let h = req.need(req.helicity, "helicity")?;
            put("k", vec3_text(&k.components()));
            put("helicity", h.sign().to_string());
            put("x", vec3_text(&req.x));
            put("t", g17(req.t));
            put("c", g17(req.c));
            let w = PhotonPlaneWave::new(k, h, req.c).map_err(core_err)?;
            let shown = w.value(&req.x, req.t);
            let field = w.physical_field().value(&req.x, req.t);
            let mut v: Vec<(String, C64)> = shown.iter().enumerate().map(|(i, z)| (format!("psi_{}", i + 1), *z)).collect();
            v.extend(field.iter().enumerate().map(|(i, z)| (format!("field_{}", i + 1), *z)));
            v
        }
        Function::Radial => {
            let f = req.radial()?;
            put("l", f.l().to_string());
            put("variant", variant_name(req.variant).into());
            put("C", complex(req.constant));
            put("Cdot", complex(req.constant_dot));
            put("r", complex(req.r));
            if req.r == C64::new(0.0, 0.0) || !req.r.is_finite() {
                return Err(usage("radial functions need r != 0"));
            }
            let mut v = Vec::new();
            for q in [1, 0, -1] {
                v.push((format!("f_{q}"), f.f(q, req.r)));
            }
            for q in [1, 0, -1] {
                v.push((format!("f_dot_{q}"), f.f_dot(q, req.r.conj())));
            }
            v
        }
        Function::Assemble => {
            let k = req.wave_vector()?;
            let h = req.need(req.helicity, "helicity")?;
            let f = req.radial()?;
            put("k", vec3_text(&k.components()));
            put("helicity", h.sign().to_string());
            put("dotted", req.dotted.to_string());
            put("x", vec3_text(&req.x));
            put("t", g17(req.t));
            put("c", g17(req.c));
            put("l", f.l().to_string());
            put("variant", variant_name(req.variant).into());
            put("C", complex(req.constant));
            put("Cdot", complex(req.constant_dot));
            put("r", complex(req.r));
            angle_inputs(&mut put, &[0, 1, 2, 3, 4, 5]);
            let w = PoincareWaveFunction::new(k, h, f, req.dotted, req.c).map_err(core_err)?;
            let v = w.evaluate(&req.x, req.t, req.r, &req.euler()?).map_err(core_err)?;
            v.iter().enumerate().map(|(i, z)| (format!("psi_{}", i + 1), *z)).collect()
        }
    };
    Ok(Evaluation { function: req.function, inputs, values })
}

fn put_index(put: &mut dyn FnMut(&str, String), idx: &HarmonicIndex) {
    put("l", idx.l().to_string());
    put("m", idx.m().to_string());
    put("n", idx.n().to_string());
    put("dotted", idx.is_dotted().to_string());
}

fn helicity_word(h: Helicity) -> &'static str {
    match h {
        Helicity::Plus => "plus",
        Helicity::Zero => "zero",
        Helicity::Minus => "minus",
    }
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::AsPrinted => "paper",
        Variant::Corrected => "corrected",
    }
}

fn vec3_text(v: &[f64; 3]) -> String {
    v.iter().map(|x| g17(*x)).collect::<Vec<_>>().join(",")
}

fn complex_json(z: C64) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), Value::from(z.re));
    m.insert("im".into(), Value::from(z.im));
    Value::Object(m)
}

impl Evaluation {
    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Text => self.values.iter().map(|(k, v)| format!("{k} = {}\n", complex(*v))).collect(),
            Format::Json => {
                let mut root = Map::new();
                root.insert("function".into(), self.function.name().into());
                let inputs = self.inputs.iter().map(|(k, v)| (k.clone(), Value::from(v.clone()))).collect();
                root.insert("inputs".into(), Value::Object(inputs));
                let values = self.values.iter().map(|(k, v)| (k.clone(), complex_json(*v))).collect();
                root.insert("values".into(), Value::Object(values));
                serde_json::to_string_pretty(&Value::Object(root))? + "\n"
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["name", "value_re", "value_im"])?;
                for (k, v) in &self.values {
                    w.write_record([k.clone(), g17(v.re), g17(v.im)])?;
                }
                String::from_utf8(w.into_inner()?)?
            }
        })
    }
}

/// Ranges for `table`: index lists and one list of values per coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRequest {
    pub base: EvalRequest,
    pub l: Vec<HalfInt>,
    /// `None` means every admissible value for each `l`.
    pub m: Option<Vec<HalfInt>>,
    pub n: Option<Vec<HalfInt>>,
    pub angles: [Vec<f64>; 6],
    pub r: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub function: Function,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

fn cartesian(lists: &[&[f64]]) -> Vec<Vec<f64>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect()
    })
}

pub fn tabulate(req: &TableRequest) -> anyhow::Result<Table> {
    let f = req.base.function;
    let (index_names, angle_slots): (&[&str], &[usize]) = match f {
        Function::Z => (&["l", "m", "n"], &[2, 3]),
        Function::Zonal => (&["l"], &[2, 3]),
        Function::M => (&["l", "m", "n"], &[0, 1, 2, 3, 4, 5]),
        Function::Associated => (&["l", "m"], &[0, 1, 2, 3, 4, 5]),
        Function::Radial => (&["l"], &[]),
        other => return Err(usage(format!("`table` does not support `{}`", other.name()))),
    };
    let coord_lists: Vec<&[f64]> = if f == Function::Radial {
        vec![&req.r]
    } else {
        angle_slots.iter().map(|&i| req.angles[i].as_slice()).collect()
    };
    if coord_lists.iter().any(|l| l.is_empty()) || req.l.is_empty() {
        return Err(usage("empty range"));
    }
    let coords = cartesian(&coord_lists);

    let mut columns: Vec<String> = index_names.iter().map(|s| s.to_string()).collect();
    if f == Function::Radial {
        columns.push("r".into());
    } else {
        columns.extend(angle_slots.iter().map(|&i| ANGLE_NAMES[i].to_string()));
    }
    let mut value_names: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for &l in &req.l {
        let all: Vec<HalfInt> = l.symmetric_range().collect();
        let ms = if index_names.contains(&"m") { req.m.clone().unwrap_or_else(|| all.clone()) } else { vec![HalfInt::ZERO] };
        let ns = if index_names.contains(&"n") { req.n.clone().unwrap_or_else(|| all.clone()) } else { vec![HalfInt::ZERO] };
        for &m in &ms {
            for &n in &ns {
                let admissible = m.abs() <= l && n.abs() <= l && (l - m).is_integer() && (l - n).is_integer();
                if !admissible {
                    continue;
                }
                for point in &coords {
                    let mut e = req.base.clone();
                    e.l = Some(l);
                    e.m = Some(m);
                    e.n = Some(n);
                    if f == Function::Radial {
                        e.r = C64::new(point[0], 0.0);
                    } else {
                        for (slot, v) in angle_slots.iter().zip(point) {
                            e.angles[*slot] = *v;
                        }
                    }
                    let out = evaluate(&e)?;
                    if value_names.is_none() {
                        value_names = Some(out.values.iter().map(|(k, _)| k.clone()).collect());
                    }
                    let mut row: Vec<f64> = [l, m, n][..index_names.len()].iter().map(|h| h.to_f64()).collect();
                    row.extend(point);
                    row.extend(out.values.iter().flat_map(|(_, z)| [z.re, z.im]));
                    rows.push(row);
                }
            }
        }
    }
    let Some(value_names) = value_names else {
        return Err(usage("empty range: no admissible (l, m, n) combination"));
    };
    for name in value_names {
        columns.push(format!("{name}_re"));
        columns.push(format!("{name}_im"));
    }
    Ok(Table { function: f, columns, rows })
}

impl Table {
    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        Ok(match format {
            Format::Csv | Format::Text => {
                let delim = if format == Format::Csv { b',' } else { b'\t' };
                let mut w = csv::WriterBuilder::new().delimiter(delim).from_writer(Vec::new());
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(|v| g17(*v)))?;
                }
                String::from_utf8(w.into_inner()?)?
            }
            Format::Json => {
                let mut root = Map::new();
                root.insert("function".into(), self.function.name().into());
                root.insert("columns".into(), self.columns.clone().into());
                let rows = self.rows.iter().map(|r| Value::from(r.clone())).collect();
                root.insert("rows".into(), Value::Array(rows));
                serde_json::to_string_pretty(&Value::Object(root))? + "\n"
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_grid;

    fn z_req(l: i32, m: i32, n: i32) -> EvalRequest {
        let mut r = EvalRequest::new(Function::Z);
        r.l = Some(HalfInt::from_int(l));
        r.m = Some(HalfInt::from_int(m));
        r.n = Some(HalfInt::from_int(n));
        r
    }

    #[test]
    fn identity_value() {
        let out = evaluate(&z_req(1, 0, 0)).unwrap();
        assert_eq!(out.values, vec![("value".to_string(), C64::new(1.0, 0.0))]);
        assert_eq!(out.render(Format::Text).unwrap(), "value = 1+0i\n");
    }

    #[test]
    fn longitudinal_polarization_along_z() {
        let mut r = EvalRequest::new(Function::Polarization);
        r.k = Some([0.0, 0.0, 1.0]);
        r.helicity = Some(Helicity::Zero);
        let v: Vec<C64> = evaluate(&r).unwrap().values.into_iter().map(|(_, z)| z).collect();
        assert_eq!(v, [0.0, 0.0, 1.0].map(|x| C64::new(x, 0.0)));
    }

    #[test]
    fn as_printed_radial_at_one() {
        let mut r = EvalRequest::new(Function::Radial);
        r.l = Some(HalfInt::from_int(1));
        r.variant = Variant::AsPrinted;
        let out = evaluate(&r).unwrap();
        let f0 = out.values.iter().find(|(k, _)| k == "f_0").unwrap().1;
        assert_eq!(f0, C64::new(2.0, 0.0));
    }

    #[test]
    fn missing_arguments_are_usage_errors() {
        let err = evaluate(&EvalRequest::new(Function::Z)).unwrap_err();
        assert!(err.downcast_ref::<crate::config::UsageError>().is_some());
    }

    #[test]
    fn table_matches_eval() {
        let mut angles: [Vec<f64>; 6] = Default::default();
        for a in angles.iter_mut() {
            *a = vec![0.0];
        }
        angles[2] = parse_grid("0:pi:9").unwrap();
        let req = TableRequest {
            base: EvalRequest::new(Function::Z),
            l: vec![HalfInt::from_int(1)],
            m: Some(vec![HalfInt::from_int(1)]),
            n: Some(vec![HalfInt::from_int(0)]),
            angles,
            r: vec![],
        };
        let t = tabulate(&req).unwrap();
        assert_eq!(t.rows.len(), 9);
        assert_eq!(t.columns, ["l", "m", "n", "theta", "tau", "value_re", "value_im"]);
        assert_eq!(&t.rows[0][5..], &[0.0, 0.0]);
        for row in &t.rows {
            let mut e = z_req(1, 1, 0);
            e.angles[2] = row[3];
            let v = evaluate(&e).unwrap().values[0].1;
            assert_eq!([v.re, v.im], [row[5], row[6]]);
        }
    }
}
