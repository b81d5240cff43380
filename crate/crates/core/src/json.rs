//! JSON interchange.
//!
//! A tableau is `{"kind": "dc"|"sdc"|"te"|"to", "n": N, "rows": [col|null, ...]}`
//! with `rows[i - 1]` the column of the point in row `i`. A labeled extended
//! configuration adds `"free_labels": {"j:i": 0|1}`. Point sets are lists of
//! `"j:i"` strings and label functions are objects `{"j": "b"|"r"|"br"|"bg"}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bijections::{LabelFunction, Word};
use crate::error::{Error, Result};
use crate::grid::{validate, Cell, EvenExtended, Kind, LabeledEven, LabeledOdd, OddExtended, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub kind: Kind,
    pub n: usize,
    pub rows: Vec<Option<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_labels: Option<BTreeMap<Cell, u8>>,
}

impl TableauDoc {
    pub fn new(kind: Kind, t: &Tableau) -> Self {
        TableauDoc {
            kind,
            n: t.width(),
            rows: t.rows(),
            free_labels: None,
        }
    }

    pub fn with_labels(mut self, labels: &BTreeMap<Cell, bool>) -> Self {
        self.free_labels = Some(labels.iter().map(|(&p, &b)| (p, b as u8)).collect());
        self
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau documents always serialize")
    }

    /// The tableau, validated against the declared kind and size.
    pub fn tableau(&self) -> Result<Tableau> {
        let (w, h) = self.kind.shape(self.n);
        if self.rows.len() != h {
            return Err(Error::Parse(format!("expected {h} rows for {} of size {}, got {}", self.kind.tag(), self.n, self.rows.len())));
        }
        let t = Tableau::from_rows(w, &self.rows)?;
        validate(&t, self.kind, self.n).map_err(Error::Invalid)?;
        Ok(t)
    }

    fn expect_kind(&self, kind: Kind) -> Result<Tableau> {
        if self.kind != kind {
            return Err(Error::Parse(format!("expected kind {}, got {}", kind.tag(), self.kind.tag())));
        }
        self.tableau()
    }

    pub fn even(&self) -> Result<EvenExtended> {
        EvenExtended::new(self.expect_kind(Kind::EvenExtended)?)
    }

    pub fn odd(&self) -> Result<OddExtended> {
        OddExtended::new(self.expect_kind(Kind::OddExtended)?)
    }

    fn labels(&self) -> Result<BTreeMap<Cell, bool>> {
        let raw = self
            .free_labels
            .as_ref()
            .ok_or_else(|| Error::Parse("missing free_labels".into()))?;
        raw.iter()
            .map(|(&p, &b)| match b {
                0 | 1 => Ok((p, b == 1)),
                _ => Err(Error::Parse(format!("label of {p} must be 0 or 1, got {b}"))),
            })
            .collect()
    }

    pub fn labeled_even(&self) -> Result<LabeledEven> {
        LabeledEven::new(self.even()?, self.labels()?)
    }

    pub fn labeled_odd(&self) -> Result<LabeledOdd> {
        LabeledOdd::new(self.odd()?, self.labels()?)
    }
}

pub fn parse_cells(s: &str) -> Result<Vec<Cell>> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_label_function(s: &str) -> Result<LabelFunction> {
    let raw: BTreeMap<String, String> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    raw.into_iter()
        .map(|(j, w)| {
            let j: usize = j.parse().map_err(|_| Error::Parse(format!("bad column {j:?}")))?;
            Ok((j, w.parse::<Word>()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = r#"{"kind":"to","n":1,"rows":[1,null,1]}"#;
        let doc = TableauDoc::parse(s).unwrap();
        assert_eq!(doc.to_json(), s);
        assert_eq!(doc.odd().unwrap().empty_row(), 2);
    }

    #[test]
    fn labels_and_sets() {
        let s = r#"{"kind":"te","n":2,"rows":[1,2,2,1],"free_labels":{"2:3":0,"1:4":1}}"#;
        let l = TableauDoc::parse(s).unwrap().labeled_even().unwrap();
        assert_eq!(l.label(Cell::new(2, 3)), Some(false));
        assert_eq!(parse_cells(r#"["2:6","3:10"]"#).unwrap(), vec![Cell::new(2, 6), Cell::new(3, 10)]);
        let l = parse_label_function(r#"{"2":"bg","3":"b","4":"r"}"#).unwrap();
        assert_eq!(l[&2], Word::BG);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TableauDoc::parse(r#"{"kind":"te","n":2,"rows":[2,1,1,2]}"#).unwrap().tableau().is_err());
        assert!(TableauDoc::parse(r#"{"kind":"te","n":2,"rows":[1,1,2]}"#).unwrap().tableau().is_err());
        assert!(TableauDoc::parse(r#"{"kind":"dc","n":1,"rows":[1,1]}"#).unwrap().even().is_err());
        assert!(parse_label_function(r#"{"2":"x"}"#).is_err());
    }
}
