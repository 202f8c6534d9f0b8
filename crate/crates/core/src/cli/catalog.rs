//! Named knots and resolution of knot arguments.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub matrix: SeifertMatrix,
    pub note: &'static str,
}

const NAMED: [(&str, i64, &str); 3] = [
    ("trefoil", -1, "trefoil 3_1, twist:-1"),
    ("figure8", 1, "figure-eight knot, twist:1"),
    ("stevedore", 2, "stevedore knot 6_1, twist:2"),
];

/// The fixed named entries; `twist:K` is available for every integer `K`.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = vec![CatalogEntry {
        name: "unknot".into(),
        matrix: SeifertMatrix::unknot(),
        note: "empty Seifert matrix",
    }];
    out.extend(NAMED.iter().map(|&(name, k, note)| CatalogEntry {
        name: name.into(),
        matrix: SeifertMatrix::twist(k),
        note,
    }));
    out
}

pub fn lookup(name: &str) -> Option<SeifertMatrix> {
    if let Some(k) = name.strip_prefix("twist:") {
        return k.trim().parse::<i64>().ok().map(SeifertMatrix::twist);
    }
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.matrix)
}

/// A catalog name, or else a path to a Seifert matrix file.
pub fn resolve(arg: &str) -> Result<SeifertMatrix> {
    if let Some(s) = lookup(arg) {
        return Ok(s);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::InvalidArgument(format!(
            "{arg:?} is neither a catalog knot nor a readable file"
        )));
    }
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {arg}: {e}")))?;
    text.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::IntPoly;

    #[test]
    fn round_trip() {
        for e in entries() {
            let back: SeifertMatrix = e.matrix.to_text().parse().unwrap();
            assert_eq!(back, e.matrix, "{}", e.name);
        }
        for k in -5..=5 {
            let s = lookup(&format!("twist:{k}")).unwrap();
            assert_eq!(s.to_text().parse::<SeifertMatrix>().unwrap(), s);
            assert_eq!(
                s.alexander().into_poly(),
                IntPoly::from_i64s(&[-k, 2 * k + 1, -k])
            );
        }
    }

    #[test]
    fn names() {
        assert_eq!(lookup("stevedore"), Some(SeifertMatrix::twist(2)));
        assert_eq!(lookup("trefoil"), Some(SeifertMatrix::twist(-1)));
        assert!(lookup("twist:x").is_none());
        assert!(resolve("/nonexistent/knot.txt").is_err());
    }
}
