//! Key/value records rendered as aligned text or as one JSON object.

use std::collections::BTreeMap;

use serde_json::{Map, Value};
use wzeta::ComplexValue;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Int(i64),
    Real(f64),
    Complex(ComplexValue),
    Text(String),
    Bool(bool),
    Map(BTreeMap<String, String>),
}

/// Round-trip decimal: 17 significant digits.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_real(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Real(v) => real(*v),
            Field::Complex(v) => format!("{},{}", real(v.re), real(v.im)),
            Field::Text(v) => v.clone(),
            Field::Bool(v) => v.to_string(),
            Field::Map(m) => m
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Int(v) => Value::from(*v),
            Field::Real(v) => json_real(*v),
            Field::Complex(v) => Value::Array(vec![json_real(v.re), json_real(v.im)]),
            Field::Text(v) => Value::from(v.as_str()),
            Field::Bool(v) => Value::from(*v),
            Field::Map(m) => Value::Object(
                m.iter()
                    .map(|(k, v)| (k.clone(), Value::from(v.as_str())))
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn push(&mut self, key: &'static str, value: Field) -> &mut Self {
        self.0.push((key, value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn to_text(&self) -> String {
        let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.0
            .iter()
            .map(|(k, v)| format!("{k:<width$}  {}\n", v.text()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self
            .0
            .iter()
            .map(|(k, v)| (k.to_string(), v.json()))
            .collect();
        format!("{}\n", Value::Object(map))
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}
