//! Reading endofunctions from text.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::extremal::{construct, FamilySpec};
use crate::{Endofunction, Error, Result};

/// JSON carrier for a function: `{"n": 3, "map": [1, 2, 0]}`, optionally
/// with vertex labels, or with a generator instead of the map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

/// A parsed function plus the labels to print it with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInput {
    pub function: Endofunction,
    pub labels: Option<Vec<String>>,
}

impl ParsedInput {
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn document(&self) -> FunctionDocument {
        FunctionDocument {
            n: self.function.len(),
            map: Some(self.function.images().to_vec()),
            labels: self.labels.clone(),
            generator: None,
        }
    }
}

/// Named inputs for the worked examples.
pub const PRESETS: &[(&str, &str)] = &[
    ("family-ex1", "powmod:2,9"),
    ("family-ex4", "1 2 3 0 5 4"),
    ("family-ex5", "1 2 3 0 0 0 2 2"),
    ("family-ex7", "1 2 3 0 0 4 1 1 2 2"),
    ("family-ex9", "0 0 0 1 1 2"),
    ("family-fig6", "family:W:2,3+Z:2+Z:4"),
];

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Accepts a JSON document, a list of integers separated by whitespace or
/// commas (optionally bracketed), `powmod:a,n` for `x ↦ x^a mod n`,
/// `family:SPEC` (see [`FamilySpec`]) or one of the [`PRESETS`].
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let trimmed = text.trim();
    if let Some((_, expansion)) = PRESETS.iter().find(|(name, _)| *name == trimmed) {
        return parse_input(expansion);
    }
    if trimmed.starts_with('{') {
        return parse_document(text);
    }
    if trimmed.starts_with("powmod:") || trimmed.starts_with("family:") {
        return Ok(ParsedInput {
            function: generate(trimmed)?,
            labels: None,
        });
    }
    Ok(ParsedInput {
        function: parse_integers(text)?,
        labels: None,
    })
}

fn parse_document(text: &str) -> Result<ParsedInput> {
    let doc: FunctionDocument =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let function = match (&doc.map, &doc.generator) {
        (Some(map), None) => Endofunction::new(map.clone())?,
        (None, Some(generator)) => generate(generator)?,
        (Some(map), Some(generator)) => {
            let f = Endofunction::new(map.clone())?;
            if f != generate(generator)? {
                return Err(parse_error(1, 1, "map and generator disagree"));
            }
            f
        }
        (None, None) => return Err(parse_error(1, 1, "document needs a map or a generator")),
    };
    if function.len() != doc.n {
        return Err(parse_error(
            1,
            1,
            format!("n is {} but the map has {} entries", doc.n, function.len()),
        ));
    }
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.n {
            return Err(parse_error(
                1,
                1,
                format!("expected {} labels, got {}", doc.n, labels.len()),
            ));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_error(1, 1, "labels must be unique"));
        }
    }
    Ok(ParsedInput {
        function,
        labels: doc.labels,
    })
}

fn generate(spec: &str) -> Result<Endofunction> {
    let spec = spec.trim();
    if let Some(params) = spec.strip_prefix("powmod:") {
        let nums: Vec<u64> = params
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_error(1, 8, format!("cannot read powmod parameters {params:?}")))?;
        let &[a, n] = nums.as_slice() else {
            return Err(parse_error(1, 8, "powmod needs exactly two parameters a,n"));
        };
        if n == 0 {
            return Err(parse_error(1, 8, "powmod modulus must be positive"));
        }
        let (a, modulus) = (BigUint::from(a), BigUint::from(n));
        return Endofunction::from_fn(n as usize, |x| {
            let y = BigUint::from(x).modpow(&a, &modulus);
            y.try_into().expect("residue fits in usize")
        });
    }
    if let Some(family) = spec.strip_prefix("family:") {
        let family: FamilySpec = family.parse()?;
        return construct(&family);
    }
    Err(parse_error(1, 1, format!("unknown generator {spec:?}")))
}

fn parse_integers(text: &str) -> Result<Endofunction> {
    let mut images = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let mut column = 0;
        for token in line.split_inclusive(|c: char| c.is_whitespace() || c == ',') {
            let start = column + 1;
            column += token.chars().count();
            let word = token
                .trim_end_matches(|c: char| c.is_whitespace() || c == ',')
                .trim_matches(|c| c == '[' || c == ']');
            if word.is_empty() {
                continue;
            }
            let value = word.parse().map_err(|_| {
                parse_error(
                    line_no + 1,
                    start,
                    format!("expected an integer, found {word:?}"),
                )
            })?;
            images.push(value);
        }
    }
    if images.is_empty()
        && !text
            .trim()
            .trim_matches(|c| c == '[' || c == ']')
            .is_empty()
    {
        return Err(parse_error(1, 1, "no integers found"));
    }
    Endofunction::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(text: &str) -> Vec<usize> {
        parse_input(text).unwrap().function.images().to_vec()
    }

    #[test]
    fn accepted_forms() {
        let sq = vec![0, 1, 4, 0, 7, 7, 0, 4, 1];
        assert_eq!(images("powmod:2,9"), sq);
        assert_eq!(images("0 1 4 0 7 7 0 4 1"), sq);
        assert_eq!(images("[0,1,4,0,7,7,0,4,1]\n"), sq);
        assert_eq!(images("0, 1, 4,\n0 7 7\n0 4 1"), sq);
        assert_eq!(images("family-ex1"), sq);
        assert_eq!(images("family:W:2,3"), vec![1, 0, 0, 0, 0]);
        assert_eq!(images(r#"{"n": 9, "map": [0,1,4,0,7,7,0,4,1]}"#), sq);
        assert_eq!(images(r#"{"n": 9, "generator": "powmod:2,9"}"#), sq);
        assert_eq!(images(""), Vec::<usize>::new());
    }

    #[test]
    fn labels_are_kept() {
        let p = parse_input(r#"{"n": 2, "map": [1, 0], "labels": ["a", "b"]}"#).unwrap();
        assert_eq!(p.label(1), "b");
        assert!(parse_input(r#"{"n": 2, "map": [1, 0], "labels": ["a", "a"]}"#).is_err());
        assert!(parse_input(r#"{"n": 2, "map": [1, 0], "labels": ["a"]}"#).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_input("0 1\n2 x 0"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                message: "expected an integer, found \"x\"".into()
            })
        );
        assert!(matches!(
            parse_input("{\"n\": 2,\n \"map\": [1, }"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_input("0 5"),
            Err(Error::OutOfRange {
                index: 1,
                value: 5,
                n: 2
            })
        ));
        assert!(parse_input(r#"{"n": 3, "map": [0, 0]}"#).is_err());
        assert!(parse_input("powmod:2").is_err());
        assert!(parse_input("family:Q:3").is_err());
    }
}
