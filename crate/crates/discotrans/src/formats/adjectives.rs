//! Line-oriented adjective value tables.
//!
//! Each line is `adjective | property | value`, where the value is a
//! number, `rgb(r, g, b)` with channels in 0..=255, `vertex(Name)` naming
//! a vertex of the property's domain, or a coordinate list `(x, y, z)`.

use discotrans_core::concepts::{AdjectiveValue, AdjectiveValueTable, Point, PropertySchema};
use discotrans_core::Language;

use super::content_lines;
use crate::error::{Error, Result};

fn numbers(list: &str) -> Option<Vec<f64>> {
    list.split(',').map(|x| x.trim().parse::<f64>().ok()).collect()
}

fn parse_value(value: &str, property: &str, schema: &PropertySchema) -> std::result::Result<Point, String> {
    let inner = |prefix: &str| {
        value
            .strip_prefix(prefix)
            .and_then(|r| r.strip_suffix(')'))
            .map(str::trim)
    };
    let coords = if let Some(list) = inner("rgb(") {
        let c = numbers(list)
            .filter(|c| c.len() == 3)
            .ok_or("rgb() takes three numbers")?;
        if c.iter().any(|x| !(0.0..=255.0).contains(x)) {
            return Err("rgb channels must lie in 0..=255".into());
        }
        c.into_iter().map(|x| x / 255.0).collect()
    } else if let Some(vertex) = inner("vertex(") {
        let domain = &schema
            .get(property)
            .ok_or_else(|| format!("unknown property `{property}`"))?
            .domain;
        return domain
            .vertex(vertex)
            .cloned()
            .ok_or_else(|| format!("`{property}` has no vertex `{vertex}`"));
    } else if let Some(list) = inner("(") {
        numbers(list).ok_or("bad coordinate list")?
    } else {
        vec![value.parse::<f64>().map_err(|_| format!("bad value `{value}`"))?]
    };
    Point::new(coords).map_err(|e| e.to_string())
}

/// Parses an adjective table for `language`, validated against `schema`.
pub fn parse_adjectives(
    source: &str,
    name: &str,
    language: Language,
    schema: &PropertySchema,
) -> Result<AdjectiveValueTable> {
    let mut rows = Vec::new();
    for (lineno, line) in content_lines(source) {
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [adjective, property, value] = fields[..] else {
            return Err(Error::line(name, lineno, "expected `adjective | property | value`"));
        };
        let point = parse_value(value, property, schema).map_err(|m| Error::line(name, lineno, m))?;
        rows.push(AdjectiveValue {
            adjective: adjective.to_string(),
            property: property.to_string(),
            point,
        });
    }
    AdjectiveValueTable::new(language, rows, schema).map_err(|e| Error::format(name, e.to_string()))
}
