//! JSON envelopes and CSV tables.
//!
//! Floating-point values are written with 17 significant digits
//! (`{:.16e}`), which is valid JSON number syntax and round-trips every `f64`.

use std::fmt::Write as _;

use fracrot::{Mat3, Vec3};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// A scalar or list value in an envelope.
#[derive(Debug, Clone)]
pub enum Field {
    Num(f64),
    Nums(Vec<f64>),
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

fn raw_number(x: f64) -> Option<Box<RawValue>> {
    if x.is_finite() {
        RawValue::from_string(fmt17(x)).ok()
    } else {
        None
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Num(x) => raw_number(*x).serialize(s),
            Field::Nums(xs) => xs.iter().map(|&x| raw_number(x)).collect::<Vec<_>>().serialize(s),
            Field::Int(i) => i.serialize(s),
            Field::Ints(is) => is.serialize(s),
            Field::Text(t) => t.serialize(s),
        }
    }
}

/// Key/value pairs serialized as a JSON object in insertion order.
#[derive(Debug, Clone, Default)]
pub struct Ordered(pub Vec<(&'static str, Field)>);

impl Serialize for Ordered {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Result payload of a command.
#[derive(Debug, Clone)]
pub enum Payload {
    Matrix(Mat3),
    Vector(Vec3),
    Table(Table),
}

impl Serialize for Payload {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Payload::Matrix(m) => Field::Nums(m.to_row_major().to_vec()).serialize(s),
            Payload::Vector(v) => Field::Nums(v.to_array().to_vec()).serialize(s),
            Payload::Table(t) => {
                let rows: Vec<Ordered> = t
                    .rows
                    .iter()
                    .map(|row| Ordered(t.header.iter().copied().zip(row.iter().cloned()).collect()))
                    .collect();
                rows.serialize(s)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(f: &Field) -> String {
    match f {
        Field::Num(x) => fmt17(*x),
        Field::Nums(xs) => xs.iter().map(|&x| fmt17(x)).collect::<Vec<_>>().join(";"),
        Field::Int(i) => i.to_string(),
        Field::Ints(is) => is.iter().map(i64::to_string).collect::<Vec<_>>().join(";"),
        Field::Text(t) => t.clone(),
    }
}

pub const MATRIX_HEADER: [&str; 9] = ["r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33"];

impl Payload {
    /// CSV form: tables as-is, matrices and vectors as a one-row table.
    pub fn to_csv(&self) -> String {
        match self {
            Payload::Table(t) => t.to_csv(),
            Payload::Matrix(m) => Table {
                header: MATRIX_HEADER.to_vec(),
                rows: vec![m.to_row_major().iter().map(|&x| Field::Num(x)).collect()],
            }
            .to_csv(),
            Payload::Vector(v) => {
                Table { header: vec!["x", "y", "z"], rows: vec![v.to_array().iter().map(|&x| Field::Num(x)).collect()] }
                    .to_csv()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

/// One object per invocation, keys in fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Ordered,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<Field>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
}

impl Envelope {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("envelope serializes");
        let _ = writeln!(s);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_have_seventeen_significant_digits() {
        assert_eq!(fmt17(std::f64::consts::FRAC_PI_2), "1.5707963267948966e0");
        assert_eq!(fmt17(0.0), "0.0000000000000000e0");
        assert_eq!(fmt17(-0.1), "-1.0000000000000001e-1");
        for x in [std::f64::consts::E, -1e-300, 123456.789, 1.0 / 3.0] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn envelope_key_order_is_fixed() {
        let env = Envelope {
            command: "matrix",
            inputs: Ordered(vec![("angle", 0.5.into()), ("method", "closed".into())]),
            result: Some(Payload::Vector(Vec3::new(1.0, 2.0, 3.0))),
            method: Some("closed".into()),
            error_estimate: Some(Field::Num(1e-12)),
            error: None,
        };
        let json = env.to_json();
        assert_eq!(
            json,
            "{\"command\":\"matrix\",\"inputs\":{\"angle\":5.0000000000000000e-1,\"method\":\"closed\"},\
             \"result\":[1.0000000000000000e0,2.0000000000000000e0,3.0000000000000000e0],\
             \"method\":\"closed\",\"error_estimate\":9.9999999999999998e-13}\n"
        );
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["result"][1].as_f64(), Some(2.0));
    }

    #[test]
    fn csv_uses_header_and_lf() {
        let t = Table {
            header: vec!["level", "nodes", "frobenius_error"],
            rows: vec![vec![Field::Int(3), Field::Int(41), Field::Num(0.25)]],
        };
        assert_eq!(t.to_csv(), "level,nodes,frobenius_error\n3,41,2.5000000000000000e-1\n");
    }
}
