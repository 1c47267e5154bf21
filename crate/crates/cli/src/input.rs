use std::path::Path;

use omrev::{catalog, GroundOrder, InstanceFile, OrientedMatroid};

use crate::error::CliError;

/// Ground sets above this size print a warning: every command enumerates `2^n` reorientations.
pub const WARN_ELEMENTS: usize = 16;

/// Resolves a catalog name, falling back to a JSON instance file path.
pub fn load_instance(spec: &str) -> Result<OrientedMatroid, CliError> {
    if let Some(entry) = catalog::find(spec) {
        return Ok(entry.build()?);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Input(format!("`{spec}` is neither a catalog instance nor a file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    let m = InstanceFile::parse(&text)?.build()?;
    if m.n() > WARN_ELEMENTS {
        eprintln!("warning: {} has {} elements; enumerating 2^{} reorientations", m.name(), m.n(), m.n());
    }
    Ok(m)
}

/// Parses `p0,p1,...` (smallest element first) into a ground order.
pub fn parse_order(text: &str, n: usize) -> Result<GroundOrder, CliError> {
    let perm = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Input(format!("bad --order `{text}`: {e}")))?;
    if perm.len() != n {
        return Err(CliError::Input(format!("--order lists {} elements, the instance has {n}", perm.len())));
    }
    Ok(GroundOrder::from_permutation(perm)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_catalog_names_and_files() {
        assert_eq!(load_instance("u24").unwrap().n(), 4);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tri.json");
        std::fs::write(&path, r#"{"name":"t","source":{"matrix":[[1,0,1],[0,1,1]]}}"#).unwrap();
        assert_eq!(load_instance(path.to_str().unwrap()).unwrap().name(), "t");
        assert!(matches!(load_instance("/no/such/file.json"), Err(CliError::Input(_))));
        std::fs::write(&path, "not json").unwrap();
        assert!(matches!(load_instance(path.to_str().unwrap()), Err(CliError::Input(_))));
    }

    #[test]
    fn order_parsing() {
        assert_eq!(parse_order("2,0,1", 3).unwrap().as_slice(), &[2, 0, 1]);
        assert!(parse_order("0,1", 3).is_err());
        assert!(parse_order("0,0,1", 3).is_err());
        assert!(parse_order("a,b,c", 3).is_err());
    }
}
