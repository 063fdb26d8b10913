//! Plain-text group files.
//!
//! ```text
//! degree 3
//! gen (1 2)
//! gen (1 2 3)
//! sub E
//! gen (1 2)
//! sub A3
//! gen (1 2 3)
//! decomp ram E=E D=G I=A3 c=(1 2)
//! ```
//!
//! `gen` lines before the first `sub` generate `G`; the name `G` always
//! denotes the whole group and a `sub` block without `gen` lines is trivial.
//! `#` starts a comment.

use std::collections::BTreeMap;
use std::path::Path;

use super::decomp::DecompositionData;
use super::group::{PermGroup, SubgroupHandle};
use super::perm::Perm;
use super::GroupError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompSpec {
    pub name: String,
    pub g_e: String,
    pub d: String,
    pub i: String,
    pub c: Perm,
}

#[derive(Clone, Debug)]
pub struct GroupFile {
    pub group: PermGroup,
    pub subgroups: BTreeMap<String, SubgroupHandle>,
    pub decomps: BTreeMap<String, DecompSpec>,
}

impl GroupFile {
    pub fn read(path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut degree: Option<usize> = None;
        let mut group_gens = Vec::new();
        let mut subs: Vec<(String, Vec<Perm>)> = Vec::new();
        let mut decomp_lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| GroupError::Parse(format!("line {}: {msg}", lineno + 1));
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "degree" => {
                    let n = rest.parse::<usize>().map_err(|_| err(format!("bad degree {rest:?}")))?;
                    degree = Some(n);
                }
                "gen" => {
                    let n = degree.ok_or_else(|| err("`gen` before `degree`".into()))?;
                    let p = Perm::parse(n, rest)?;
                    match subs.last_mut() {
                        Some((_, gens)) => gens.push(p),
                        None => group_gens.push(p),
                    }
                }
                "sub" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) || rest == "G" {
                        return Err(err(format!("bad subgroup name {rest:?}")));
                    }
                    if subs.iter().any(|(n, _)| n == rest) {
                        return Err(err(format!("duplicate subgroup {rest:?}")));
                    }
                    subs.push((rest.to_string(), Vec::new()));
                }
                "decomp" => decomp_lines.push((lineno + 1, rest.to_string())),
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let n = degree.ok_or_else(|| GroupError::Parse("missing `degree` line".into()))?;
        let group = PermGroup::from_generators(n, &group_gens)?;
        let mut subgroups = BTreeMap::new();
        subgroups.insert("G".to_string(), group.whole());
        for (name, gens) in subs {
            let h = group.subgroup(&gens)?;
            subgroups.insert(name, h);
        }
        let mut decomps = BTreeMap::new();
        for (lineno, line) in decomp_lines {
            let spec = parse_decomp(n, &line)
                .map_err(|e| GroupError::Parse(format!("line {lineno}: {e}")))?;
            for name in [&spec.g_e, &spec.d, &spec.i] {
                if !subgroups.contains_key(name) {
                    return Err(GroupError::UnknownName(name.clone()));
                }
            }
            decomps.insert(spec.name.clone(), spec);
        }
        Ok(GroupFile { group, subgroups, decomps })
    }

    pub fn subgroup(&self, name: &str) -> Result<&SubgroupHandle, GroupError> {
        self.subgroups.get(name).ok_or_else(|| GroupError::UnknownName(name.to_string()))
    }

    /// Resolves a named decomposition to `(G_E, data)`.
    pub fn decomposition(
        &self,
        name: &str,
    ) -> Result<(SubgroupHandle, DecompositionData), GroupError> {
        let spec = self.decomps.get(name).ok_or_else(|| GroupError::UnknownName(name.to_string()))?;
        let c = self.group.index_of(&spec.c).ok_or_else(|| {
            GroupError::InvalidDecomposition(format!("c = {} is not in the group", spec.c))
        })?;
        let dec =
            DecompositionData::new(self.subgroup(&spec.d)?.clone(), self.subgroup(&spec.i)?.clone(), c)?;
        Ok((self.subgroup(&spec.g_e)?.clone(), dec))
    }
}

fn parse_decomp(n: usize, line: &str) -> Result<DecompSpec, GroupError> {
    let (name, rest) = line
        .split_once(char::is_whitespace)
        .ok_or_else(|| GroupError::Parse("decomp needs a name and E=, D=, I=, c= fields".into()))?;
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let (key, tail) = rest
            .split_once('=')
            .ok_or_else(|| GroupError::Parse(format!("expected key=value in {line:?}")))?;
        let key = key.trim();
        let tail = tail.trim_start();
        let end = if key == "c" {
            // the permutation runs up to the next `key=` or the end
            tail.find(|ch: char| ch.is_ascii_alphabetic()).unwrap_or(tail.len())
        } else {
            tail.find(char::is_whitespace).unwrap_or(tail.len())
        };
        fields.insert(key, tail[..end].trim());
        rest = tail[end..].trim_start();
    }
    let get = |k: &str| {
        fields
            .get(k)
            .map(|s| s.to_string())
            .ok_or_else(|| GroupError::Parse(format!("decomp {name} is missing {k}=")))
    };
    Ok(DecompSpec {
        name: name.to_string(),
        g_e: get("E")?,
        d: get("D")?,
        i: get("I")?,
        c: Perm::parse(n, &get("c")?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "\
degree 3
gen (1 2)
gen (1 2 3)   # a 3-cycle
sub E
gen (1 2)
sub A3
gen (1 2 3)
sub triv
decomp ram E=E D=G I=A3 c=(1 2)
decomp inert E=E D=A3 I=triv c=(1 2 3)
";

    #[test]
    fn parses_fixture() {
        let f = GroupFile::parse(S3).unwrap();
        assert_eq!(f.group.order(), 6);
        assert_eq!(f.subgroup("A3").unwrap().order(), 3);
        assert_eq!(f.subgroup("triv").unwrap().order(), 1);
        let (g_e, dec) = f.decomposition("ram").unwrap();
        assert_eq!(g_e.order(), 2);
        assert_eq!(dec.residue_order(), 2);
        let (_, dec) = f.decomposition("inert").unwrap();
        assert_eq!(dec.residue_order(), 3);
    }

    #[test]
    fn reports_errors() {
        assert!(GroupFile::parse("gen (1 2)").is_err());
        assert!(GroupFile::parse("degree 3\nfoo").is_err());
        let bad = "degree 3\ngen (1 2)\ndecomp x E=Q D=G I=G c=()";
        assert_eq!(GroupFile::parse(bad).unwrap_err(), GroupError::UnknownName("Q".into()));
        let f = GroupFile::parse(S3).unwrap();
        assert!(f.decomposition("nope").is_err());
        let bad = S3.replace("decomp ram E=E D=G I=A3 c=(1 2)", "decomp ram E=E D=G I=E c=(1 2)");
        let f = GroupFile::parse(&bad).unwrap();
        assert!(matches!(f.decomposition("ram"), Err(GroupError::InvalidDecomposition(_))));
    }
}
