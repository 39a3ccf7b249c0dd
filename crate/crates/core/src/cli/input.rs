//! JSON input documents describing a `(G, H, theta)` triple.
//!
//! ```json
//! {
//!   "group": {"kind": "catalog", "name": "symmetric", "params": [3]},
//!   "subgroup": {"named": "point-stabilizer"},
//!   "theta": {"kind": "identity"}
//! }
//! ```

use std::fmt;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, GroupError};
use crate::group::{
    automorphism_from_spec, catalog_group_with_guard, group_from_cayley, group_from_permutations,
    Automorphism, CatalogEntry, CatalogParam, CatalogSpec, FiniteGroup, Subgroup, ThetaSpec,
};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Parse(String),
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error("{location}: {source}")]
    Validation {
        location: String,
        #[source]
        source: Error,
    },
    #[error("{location}: unknown name `{name}`")]
    UnknownName { location: String, name: String },
}

/// A validated triple together with display labels.
#[derive(Debug, Clone)]
pub struct ParsedInput {
    pub group: FiniteGroup,
    pub group_label: String,
    pub catalog: Option<CatalogEntry>,
    pub subgroup: Subgroup,
    pub subgroup_label: String,
    pub theta: Automorphism,
    pub theta_label: String,
}

/// JSON path of the value being read, for diagnostics.
#[derive(Clone)]
struct Loc(String);

impl Loc {
    fn root() -> Self {
        Loc("$".into())
    }

    fn key(&self, k: &str) -> Loc {
        Loc(format!("{}.{k}", self.0))
    }

    fn idx(&self, i: usize) -> Loc {
        Loc(format!("{}[{i}]", self.0))
    }

    fn schema(&self, message: impl Into<String>) -> InputError {
        InputError::Schema {
            location: self.0.clone(),
            message: message.into(),
        }
    }

    fn invalid(&self, e: impl Into<Error>) -> InputError {
        InputError::Validation {
            location: self.0.clone(),
            source: e.into(),
        }
    }
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn field<'a>(v: &'a Value, loc: &Loc, key: &str) -> Result<&'a Value, InputError> {
    v.get(key)
        .ok_or_else(|| loc.schema(format!("missing field `{key}`")))
}

fn as_object<'a>(
    v: &'a Value,
    loc: &Loc,
) -> Result<&'a serde_json::Map<String, Value>, InputError> {
    v.as_object()
        .ok_or_else(|| loc.schema("expected an object"))
}

fn as_array<'a>(v: &'a Value, loc: &Loc) -> Result<&'a Vec<Value>, InputError> {
    v.as_array().ok_or_else(|| loc.schema("expected an array"))
}

fn as_str<'a>(v: &'a Value, loc: &Loc) -> Result<&'a str, InputError> {
    v.as_str().ok_or_else(|| loc.schema("expected a string"))
}

fn as_usize(v: &Value, loc: &Loc) -> Result<usize, InputError> {
    v.as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| loc.schema("expected a non-negative integer"))
}

fn usize_list(v: &Value, loc: &Loc) -> Result<Vec<usize>, InputError> {
    as_array(v, loc)?
        .iter()
        .enumerate()
        .map(|(i, x)| as_usize(x, &loc.idx(i)))
        .collect()
}

fn check_keys(v: &Value, loc: &Loc, allowed: &[&str]) -> Result<(), InputError> {
    for k in as_object(v, loc)?.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(loc.schema(format!("unexpected field `{k}`")));
        }
    }
    Ok(())
}

/// An element given as an index or, for permutation groups, as an image
/// array.
fn element(group: &FiniteGroup, v: &Value, loc: &Loc) -> Result<usize, InputError> {
    if v.is_array() {
        let perm = usize_list(v, loc)?;
        if group.degree().is_none() {
            return Err(loc.schema("permutation given for a group without a permutation action"));
        }
        group
            .index_of_permutation(&perm)
            .ok_or_else(|| loc.schema(format!("permutation {perm:?} is not in the group")))
    } else {
        let i = as_usize(v, loc)?;
        group.check_index(i).map_err(|e| loc.invalid(e))?;
        Ok(i)
    }
}

fn catalog_param(v: &Value, loc: &Loc) -> Result<CatalogParam, InputError> {
    match v {
        Value::Number(_) => Ok(CatalogParam::Int(as_usize(v, loc)?)),
        Value::String(s) => s
            .parse()
            .map(CatalogParam::Spec)
            .map_err(|e: GroupError| loc.invalid(e)),
        Value::Object(_) => Ok(CatalogParam::Spec(catalog_spec(v, loc)?)),
        _ => Err(loc.schema("expected an integer, a catalog string or a catalog object")),
    }
}

fn catalog_spec(v: &Value, loc: &Loc) -> Result<CatalogSpec, InputError> {
    check_keys(v, loc, &["kind", "name", "params"])?;
    let name = as_str(field(v, loc, "name")?, &loc.key("name"))?;
    let unknown = |e: GroupError| match e {
        GroupError::UnknownCatalogName(name) => InputError::UnknownName {
            location: loc.key("name").0,
            name,
        },
        other => loc.invalid(other),
    };
    match v.get("params") {
        None if name.contains('(') => name.parse().map_err(unknown),
        None => CatalogSpec::from_parts(name, &[]).map_err(unknown),
        Some(p) => {
            let ploc = loc.key("params");
            let params = as_array(p, &ploc)?
                .iter()
                .enumerate()
                .map(|(i, x)| catalog_param(x, &ploc.idx(i)))
                .collect::<Result<Vec<_>, _>>()?;
            CatalogSpec::from_parts(name, &params).map_err(unknown)
        }
    }
}

type GroupParts = (FiniteGroup, String, Option<CatalogEntry>);

fn parse_group(v: &Value, loc: &Loc, max_order: usize) -> Result<GroupParts, InputError> {
    let kind = as_str(field(v, loc, "kind")?, &loc.key("kind"))?;
    match kind {
        "permutation" => {
            check_keys(v, loc, &["kind", "degree", "generators"])?;
            let degree = as_usize(field(v, loc, "degree")?, &loc.key("degree"))?;
            let gloc = loc.key("generators");
            let gens = as_array(field(v, loc, "generators")?, &gloc)?
                .iter()
                .enumerate()
                .map(|(i, x)| usize_list(x, &gloc.idx(i)))
                .collect::<Result<Vec<_>, _>>()?;
            let g = group_from_permutations(degree, &gens, max_order).map_err(|e| match e {
                GroupError::NotAPermutation { index, .. } => gloc.idx(index).invalid(e),
                _ => gloc.invalid(e),
            })?;
            let label = format!("permutation(degree={degree}, order={})", g.order());
            Ok((g, label, None))
        }
        "cayley" => {
            check_keys(v, loc, &["kind", "table"])?;
            let tloc = loc.key("table");
            let rows = as_array(field(v, loc, "table")?, &tloc)?
                .iter()
                .enumerate()
                .map(|(i, x)| usize_list(x, &tloc.idx(i)))
                .collect::<Result<Vec<_>, _>>()?;
            if rows.len() > max_order {
                return Err(tloc.invalid(GroupError::OrderGuardExceeded(max_order)));
            }
            let g = group_from_cayley(&rows).map_err(|e| tloc.invalid(e))?;
            let label = format!("cayley(order={})", g.order());
            Ok((g, label, None))
        }
        "catalog" => {
            let spec = catalog_spec(v, loc)?;
            let entry = catalog_group_with_guard(&spec, max_order).map_err(|e| loc.invalid(e))?;
            Ok((entry.group.clone(), spec.to_string(), Some(entry)))
        }
        other => Err(loc.key("kind").schema(format!(
            "unknown group kind `{other}` (expected permutation, cayley or catalog)"
        ))),
    }
}

fn parse_subgroup(
    group: &FiniteGroup,
    catalog: Option<&CatalogEntry>,
    v: &Value,
    loc: &Loc,
) -> Result<(Subgroup, String), InputError> {
    check_keys(v, loc, &["generators", "named"])?;
    match (v.get("generators"), v.get("named")) {
        (Some(gens), None) => {
            let gloc = loc.key("generators");
            let idx = as_array(gens, &gloc)?
                .iter()
                .enumerate()
                .map(|(i, x)| element(group, x, &gloc.idx(i)))
                .collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::from_generators(group, &idx).map_err(|e| gloc.invalid(e))?;
            let label = if idx.is_empty() {
                "trivial".to_string()
            } else {
                let names: Vec<String> = idx.iter().map(|&a| group.element_label(a)).collect();
                format!("<{}>", names.join(", "))
            };
            Ok((h, label))
        }
        (None, Some(name)) => {
            let nloc = loc.key("named");
            let name = as_str(name, &nloc)?;
            let h = match name {
                "trivial" => Subgroup::trivial(group),
                "full" => Subgroup::full(group),
                _ => catalog
                    .and_then(|c| c.subgroup(name))
                    .cloned()
                    .ok_or_else(|| InputError::UnknownName {
                        location: nloc.0.clone(),
                        name: name.to_string(),
                    })?,
            };
            Ok((h, name.to_string()))
        }
        _ => Err(loc.schema("expected exactly one of `generators` or `named`")),
    }
}

fn parse_theta(
    group: &FiniteGroup,
    v: &Value,
    loc: &Loc,
) -> Result<(Automorphism, String), InputError> {
    let kind = as_str(field(v, loc, "kind")?, &loc.key("kind"))?;
    let spec = match kind {
        "identity" => {
            check_keys(v, loc, &["kind"])?;
            ThetaSpec::Identity
        }
        "inversion" => {
            check_keys(v, loc, &["kind"])?;
            ThetaSpec::Inversion
        }
        "conjugation" => {
            check_keys(v, loc, &["kind", "by"])?;
            ThetaSpec::Conjugation(element(group, field(v, loc, "by")?, &loc.key("by"))?)
        }
        "generator_images" => {
            check_keys(v, loc, &["kind", "images"])?;
            let iloc = loc.key("images");
            let images = as_array(field(v, loc, "images")?, &iloc)?
                .iter()
                .enumerate()
                .map(|(i, x)| element(group, x, &iloc.idx(i)))
                .collect::<Result<Vec<_>, _>>()?;
            ThetaSpec::GeneratorImages(images)
        }
        other => {
            return Err(loc.key("kind").schema(format!(
                "unknown theta kind `{other}` (expected identity, inversion, conjugation or generator_images)"
            )))
        }
    };
    let label = match &spec {
        ThetaSpec::Conjugation(a) => format!("conjugation({})", group.element_label(*a)),
        ThetaSpec::GeneratorImages(images) => {
            let names: Vec<String> = images.iter().map(|&a| group.element_label(a)).collect();
            format!("generator_images({})", names.join(", "))
        }
        other => other.to_string(),
    };
    let theta = automorphism_from_spec(group, &spec).map_err(|e| loc.invalid(e))?;
    Ok((theta, label))
}

/// Parses and validates a document.
pub fn parse_input_str(text: &str, max_order: usize) -> Result<ParsedInput, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::Parse(e.to_string()))?;
    let root = Loc::root();
    check_keys(&doc, &root, &["group", "subgroup", "theta"])?;
    let gloc = root.key("group");
    let (group, group_label, catalog) =
        parse_group(field(&doc, &root, "group")?, &gloc, max_order)?;
    let (subgroup, subgroup_label) = parse_subgroup(
        &group,
        catalog.as_ref(),
        field(&doc, &root, "subgroup")?,
        &root.key("subgroup"),
    )?;
    let (theta, theta_label) =
        parse_theta(&group, field(&doc, &root, "theta")?, &root.key("theta"))?;
    Ok(ParsedInput {
        group,
        group_label,
        catalog,
        subgroup,
        subgroup_label,
        theta,
        theta_label,
    })
}

pub fn parse_input(path: &Path, max_order: usize) -> Result<ParsedInput, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_input_str(&text, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    fn parse(s: &str) -> Result<ParsedInput, InputError> {
        parse_input_str(s, DEFAULT_MAX_ORDER)
    }

    #[test]
    fn catalog_named_subgroup() {
        let p = parse(
            r#"{"group": {"kind": "catalog", "name": "symmetric", "params": [3]},
                "subgroup": {"named": "point-stabilizer"},
                "theta": {"kind": "identity"}}"#,
        )
        .unwrap();
        assert_eq!(p.group.order(), 6);
        assert_eq!(p.subgroup.order(), 2);
        assert!(p.theta.is_identity());
        assert_eq!(p.group_label, "symmetric(3)");
    }

    #[test]
    fn catalog_string_and_empty_generators() {
        let p = parse(
            r#"{"group": {"kind": "catalog", "name": "cyclic(4)"},
                "subgroup": {"generators": []},
                "theta": {"kind": "inversion"}}"#,
        )
        .unwrap();
        assert_eq!((p.group.order(), p.subgroup.order()), (4, 1));
        assert!(!p.theta.is_identity());
    }

    #[test]
    fn nested_product_params() {
        let p = parse(
            r#"{"group": {"kind": "catalog", "name": "direct_product",
                          "params": ["cyclic(2)", {"name": "symmetric", "params": [3]}]},
                "subgroup": {"named": "left"},
                "theta": {"kind": "identity"}}"#,
        )
        .unwrap();
        assert_eq!((p.group.order(), p.subgroup.order()), (12, 2));
    }

    #[test]
    fn permutation_group_with_perm_elements() {
        let p = parse(
            r#"{"group": {"kind": "permutation", "degree": 3, "generators": [[1,0,2],[1,2,0]]},
                "subgroup": {"generators": [[1,0,2]]},
                "theta": {"kind": "conjugation", "by": [0,2,1]}}"#,
        )
        .unwrap();
        assert_eq!((p.group.order(), p.subgroup.order()), (6, 2));
        assert_eq!(p.theta_label, "conjugation((1 2))");
    }

    #[test]
    fn non_involutive_conjugation() {
        let e = parse(
            r#"{"group": {"kind": "catalog", "name": "symmetric(3)"},
                "subgroup": {"generators": []},
                "theta": {"kind": "conjugation", "by": [1,2,0]}}"#,
        )
        .unwrap_err();
        match e {
            InputError::Validation { location, source } => {
                assert_eq!(location, "$.theta");
                assert!(matches!(
                    source,
                    Error::Group(GroupError::NotAnInvolution(_))
                ));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn corrupted_cayley_table() {
        let e = parse(
            r#"{"group": {"kind": "cayley", "table": [[0,1,2],[1,2,0],[2,0,0]]},
                "subgroup": {"generators": []},
                "theta": {"kind": "identity"}}"#,
        )
        .unwrap_err();
        assert!(
            matches!(&e, InputError::Validation { location, .. } if location == "$.group.table"),
            "{e}"
        );
    }

    #[test]
    fn diagnostics_carry_locations() {
        let cases = [
            (
                r#"{"group": {"kind": "catalog", "name": "x"}, "subgroup": {"generators": []}, "theta": {"kind": "identity"}}"#,
                "$.group.name",
            ),
            (
                r#"{"group": {"kind": "catalog", "name": "cyclic(3)"}, "subgroup": {"generators": [7]}, "theta": {"kind": "identity"}}"#,
                "$.subgroup.generators[0]",
            ),
            (
                r#"{"group": {"kind": "catalog", "name": "cyclic(3)"}, "subgroup": {"named": "nope"}, "theta": {"kind": "identity"}}"#,
                "$.subgroup.named",
            ),
            (
                r#"{"group": {"kind": "catalog", "name": "cyclic(3)"}, "subgroup": {}, "theta": {"kind": "identity"}}"#,
                "$.subgroup",
            ),
            (
                r#"{"group": {"kind": "catalog", "name": "cyclic(3)"}, "subgroup": {"generators": []}, "theta": {"kind": "twist"}}"#,
                "$.theta.kind",
            ),
            (
                r#"{"group": {"kind": "permutation", "degree": 3, "generators": [[0,0,1]]}, "subgroup": {"generators": []}, "theta": {"kind": "identity"}}"#,
                "$.group.generators[0]",
            ),
            (
                r#"{"group": {"kind": "catalog", "name": "symmetric(3)"}, "subgroup": {"generators": []}, "theta": {"kind": "inversion"}}"#,
                "$.theta",
            ),
        ];
        for (doc, want) in cases {
            let e = parse(doc).unwrap_err();
            assert!(e.to_string().starts_with(want), "{want}: {e}");
        }
        assert!(matches!(parse("{"), Err(InputError::Parse(_))));
    }

    #[test]
    fn order_guard() {
        let e = parse_input_str(
            r#"{"group": {"kind": "catalog", "name": "symmetric(5)"}, "subgroup": {"generators": []}, "theta": {"kind": "identity"}}"#,
            100,
        )
        .unwrap_err();
        assert!(e.to_string().contains("100"), "{e}");
    }
}
