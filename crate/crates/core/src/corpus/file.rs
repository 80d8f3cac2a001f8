//! The group file format: `{"degree": n, "generators": [[...], ...], "name": ...}`
//! with 1-based images.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Group, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupFile {
    pub fn from_group(g: &Group) -> GroupFile {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().iter().map(Permutation::one_based_images).collect(),
            name: g.name().map(str::to_string),
        }
    }

    pub fn into_group(self, origin: &str) -> Result<Group> {
        if self.degree == 0 {
            return Err(Error::Parse { location: format!("{origin}: field degree"), message: "degree must be positive".into() });
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, images) in self.generators.iter().enumerate() {
            let location = format!("{origin}: field generators[{i}]");
            if images.len() != self.degree {
                return Err(Error::Parse {
                    location,
                    message: format!("has {} images, expected degree {}", images.len(), self.degree),
                });
            }
            let p = Permutation::from_one_based(images).map_err(|e| Error::Parse { location, message: e.to_string() })?;
            gens.push(p);
        }
        let g = if gens.is_empty() { Group::trivial(self.degree) } else { Group::new(self.degree, gens)? };
        Ok(match self.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

/// Parses a group from JSON text; `origin` labels error locations.
pub fn parse_group(text: &str, origin: &str) -> Result<Group> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("{origin}: line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    file.into_group(origin)
}

pub fn load_group(path: &Path) -> Result<Group> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group(&text, &path.display().to_string())
}

pub fn save_group(g: &Group, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&GroupFile::from_group(g)).expect("group file serializes");
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse_group(r#"{"degree": 3, "generators": [[2,3,1]]}"#, "t").unwrap().order(), 3);
        assert_eq!(parse_group(r#"{"degree": 4, "generators": [[2,1,4,3],[3,4,1,2]]}"#, "t").unwrap().order(), 4);
        let err = parse_group(r#"{"degree": 3, "generators": [[1,1,3]]}"#, "t").unwrap_err();
        assert!(matches!(&err, Error::Parse { location, .. } if location.contains("generators[0]")), "{err}");
        let err = parse_group("{\"degree\": 3,\n \"generators\": [[1,2]]}", "t").unwrap_err();
        assert!(err.to_string().contains("generators[0]"));
        let err = parse_group("{\"degree\": 3,\n \"generators\": [[1,2,]]}", "t").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
