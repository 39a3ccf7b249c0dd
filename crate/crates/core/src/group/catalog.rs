//! Built-in groups with standard subgroups and involutions.
//!
//! Every catalog group is realized as a permutation group; products act on
//! the disjoint union of the factors' point sets.

use std::fmt;
use std::str::FromStr;

use super::automorphism::ThetaSpec;
use super::finite::{group_from_permutations, FiniteGroup, DEFAULT_MAX_ORDER};
use super::subgroup::Subgroup;
use crate::error::GroupError;

pub const MAX_SYMMETRIC_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CatalogSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Box<CatalogSpec>, Box<CatalogSpec>),
}

impl CatalogSpec {
    pub fn product(a: CatalogSpec, b: CatalogSpec) -> Self {
        CatalogSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Builds a spec from a family name and its parameters.
    pub fn from_parts(name: &str, params: &[CatalogParam]) -> Result<Self, GroupError> {
        let int_param = || match params {
            [CatalogParam::Int(n)] => Ok(*n),
            _ => Err(GroupError::UnsupportedParameter(format!(
                "{name} takes exactly one integer parameter"
            ))),
        };
        match name {
            "cyclic" => Ok(CatalogSpec::Cyclic(int_param()?)),
            "dihedral" => Ok(CatalogSpec::Dihedral(int_param()?)),
            "symmetric" => Ok(CatalogSpec::Symmetric(int_param()?)),
            "alternating" => Ok(CatalogSpec::Alternating(int_param()?)),
            "quaternion8" => {
                if params.is_empty() {
                    Ok(CatalogSpec::Quaternion8)
                } else {
                    Err(GroupError::UnsupportedParameter(
                        "quaternion8 takes no parameters".into(),
                    ))
                }
            }
            "direct_product" | "direct-product" => match params {
                [CatalogParam::Spec(a), CatalogParam::Spec(b)] => {
                    Ok(CatalogSpec::product(a.clone(), b.clone()))
                }
                _ => Err(GroupError::UnsupportedParameter(
                    "direct_product takes two catalog groups".into(),
                )),
            },
            other => Err(GroupError::UnknownCatalogName(other.to_string())),
        }
    }
}

/// Parameter of a catalog family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogParam {
    Int(usize),
    Spec(CatalogSpec),
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            CatalogSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            CatalogSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            CatalogSpec::Alternating(n) => write!(f, "alternating({n})"),
            CatalogSpec::Quaternion8 => write!(f, "quaternion8"),
            CatalogSpec::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = GroupError;

    /// Parses `name`, `name(n)` or `direct_product(spec, spec)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = SpecParser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(GroupError::UnknownCatalogName(s.to_string()));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn spec(&mut self) -> Result<CatalogSpec, GroupError> {
        let name = self
            .take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
            .to_string();
        if name.is_empty() {
            return Err(GroupError::UnknownCatalogName(self.src.to_string()));
        }
        let mut params = Vec::new();
        if self.eat('(') {
            loop {
                self.skip_ws();
                let digits = self.take_while(|c| c.is_ascii_digit()).to_string();
                if !digits.is_empty() {
                    let n = digits.parse().map_err(|_| {
                        GroupError::UnsupportedParameter(format!("bad integer {digits}"))
                    })?;
                    params.push(CatalogParam::Int(n));
                } else {
                    params.push(CatalogParam::Spec(self.spec()?));
                }
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(GroupError::UnknownCatalogName(self.src.to_string()));
                }
            }
        }
        CatalogSpec::from_parts(&name, &params)
    }
}

/// A catalog group with its named subgroups and involutions.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: CatalogSpec,
    pub group: FiniteGroup,
    pub subgroups: Vec<(String, Subgroup)>,
    pub thetas: Vec<(String, ThetaSpec)>,
}

impl CatalogEntry {
    pub fn subgroup(&self, name: &str) -> Option<&Subgroup> {
        self.subgroups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
    }

    pub fn theta(&self, name: &str) -> Option<&ThetaSpec> {
        self.thetas.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }
}

type Perm = Vec<usize>;

enum ThetaModel {
    Identity,
    Inversion,
    /// Image permutation for each generator.
    Images(Vec<Perm>),
}

/// Permutation-level description before closure.
struct PermModel {
    degree: usize,
    gens: Vec<Perm>,
    subgroups: Vec<(String, Vec<Perm>)>,
    thetas: Vec<(String, ThetaModel)>,
    abelian: bool,
}

fn cycle(degree: usize, points: &[usize]) -> Perm {
    let mut p: Perm = (0..degree).collect();
    for (i, &a) in points.iter().enumerate() {
        p[a] = points[(i + 1) % points.len()];
    }
    p
}

fn shift(p: &[usize], offset: usize, degree: usize) -> Perm {
    let mut out: Perm = (0..degree).collect();
    for (i, &x) in p.iter().enumerate() {
        out[i + offset] = x + offset;
    }
    out
}

fn merge(a: &[usize], b: &[usize]) -> Perm {
    // a acts on the first block, b on the second
    let mut out = a.to_vec();
    out.extend(b.iter().map(|&x| x + a.len()));
    out
}

fn unsupported(spec: &CatalogSpec, why: &str) -> GroupError {
    GroupError::UnsupportedParameter(format!("{spec}: {why}"))
}

fn model(spec: &CatalogSpec) -> Result<PermModel, GroupError> {
    let basic_thetas = |abelian: bool| {
        let mut t = vec![("identity".to_string(), ThetaModel::Identity)];
        if abelian {
            t.push(("inversion".to_string(), ThetaModel::Inversion));
        }
        t
    };
    Ok(match spec {
        CatalogSpec::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(unsupported(spec, "order must be positive"));
            }
            let gens = if n >= 2 {
                vec![cycle(n, &(0..n).collect::<Vec<_>>())]
            } else {
                vec![]
            };
            PermModel {
                degree: n,
                gens,
                subgroups: vec![],
                thetas: basic_thetas(true),
                abelian: true,
            }
        }
        CatalogSpec::Dihedral(n) => {
            let n = *n;
            if n < 3 {
                return Err(unsupported(spec, "dihedral(n) needs n >= 3"));
            }
            let r = cycle(n, &(0..n).collect::<Vec<_>>());
            let s: Perm = (0..n).map(|i| (n - i) % n).collect();
            PermModel {
                degree: n,
                gens: vec![r.clone(), s.clone()],
                subgroups: vec![
                    ("rotations".into(), vec![r]),
                    ("reflection".into(), vec![s]),
                ],
                thetas: basic_thetas(false),
                abelian: false,
            }
        }
        CatalogSpec::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(unsupported(spec, "symmetric(n) needs 1 <= n <= 6"));
            }
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle(n, &[0, 1]));
            }
            if n >= 3 {
                gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
            }
            let mut subgroups = Vec::new();
            if n >= 2 {
                let mut stab = Vec::new();
                if n >= 3 {
                    stab.push(cycle(n, &[0, 1]));
                }
                if n >= 4 {
                    stab.push(cycle(n, &(0..n - 1).collect::<Vec<_>>()));
                }
                subgroups.push(("point-stabilizer".into(), stab));
                let alt = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
                subgroups.push(("alternating".into(), alt));
            }
            PermModel {
                degree: n,
                gens,
                subgroups,
                thetas: basic_thetas(n <= 2),
                abelian: n <= 2,
            }
        }
        CatalogSpec::Alternating(n) => {
            let n = *n;
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(unsupported(spec, "alternating(n) needs 1 <= n <= 6"));
            }
            let gens = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
            let mut subgroups = Vec::new();
            if n >= 3 {
                let stab = (2..n - 1).map(|k| cycle(n, &[0, 1, k])).collect();
                subgroups.push(("point-stabilizer".into(), stab));
            }
            PermModel {
                degree: n,
                gens,
                subgroups,
                thetas: basic_thetas(n <= 3),
                abelian: n <= 3,
            }
        }
        CatalogSpec::Quaternion8 => quaternion_model(),
        CatalogSpec::DirectProduct(a, b) => {
            let ma = model(a)?;
            let mb = model(b)?;
            let degree = ma.degree + mb.degree;
            let left: Vec<Perm> = ma.gens.iter().map(|g| shift(g, 0, degree)).collect();
            let right: Vec<Perm> = mb
                .gens
                .iter()
                .map(|g| shift(g, ma.degree, degree))
                .collect();
            let gens: Vec<Perm> = left.iter().chain(&right).cloned().collect();
            let mut subgroups = vec![
                ("left".to_string(), left.clone()),
                ("right".to_string(), right.clone()),
            ];
            let abelian = ma.abelian && mb.abelian;
            let mut thetas = basic_thetas(abelian);
            if a == b {
                let diag = ma.gens.iter().map(|g| merge(g, g)).collect();
                subgroups.push(("diagonal".into(), diag));
                let images = right.iter().chain(&left).cloned().collect();
                thetas.push(("swap".into(), ThetaModel::Images(images)));
            }
            PermModel {
                degree,
                gens,
                subgroups,
                thetas,
                abelian,
            }
        }
    })
}

/// Left-regular action of Q8 on itself. Point `4*s + u` is the element
/// `(-1)^s * unit[u]` with units `1, i, j, k`.
fn quaternion_model() -> PermModel {
    // unit product table: (sign, unit) for unit[a] * unit[b]
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = |x: usize, y: usize| {
        let (sx, ux) = (x / 4, x % 4);
        let (sy, uy) = (y / 4, y % 4);
        let (s, u) = PROD[ux][uy];
        4 * ((sx + sy + s) % 2) + u
    };
    let left = |q: usize| -> Perm { (0..8).map(|x| mul(q, x)).collect() };
    let (minus_one, i, j) = (4, 1, 2);
    PermModel {
        degree: 8,
        gens: vec![left(i), left(j)],
        subgroups: vec![
            ("center".into(), vec![left(minus_one)]),
            ("i".into(), vec![left(i)]),
        ],
        thetas: vec![
            ("identity".into(), ThetaModel::Identity),
            ("swap_ij".into(), ThetaModel::Images(vec![left(j), left(i)])),
        ],
        abelian: false,
    }
}

pub fn catalog_group(spec: &CatalogSpec) -> Result<CatalogEntry, GroupError> {
    catalog_group_with_guard(spec, DEFAULT_MAX_ORDER)
}

pub fn catalog_group_with_guard(
    spec: &CatalogSpec,
    max_order: usize,
) -> Result<CatalogEntry, GroupError> {
    let m = model(spec)?;
    let group = group_from_permutations(m.degree, &m.gens, max_order)?;
    let index = |p: &Perm| {
        group
            .index_of_permutation(p)
            .expect("catalog permutation lies in the group")
    };
    let subgroups = m
        .subgroups
        .iter()
        .map(|(name, gens)| {
            let idx: Vec<usize> = gens.iter().map(index).collect();
            Subgroup::from_generators(&group, &idx).map(|s| (name.clone(), s))
        })
        .collect::<Result<_, _>>()?;
    let thetas = m
        .thetas
        .iter()
        .map(|(name, t)| {
            let spec = match t {
                ThetaModel::Identity => ThetaSpec::Identity,
                ThetaModel::Inversion => ThetaSpec::Inversion,
                ThetaModel::Images(images) => {
                    ThetaSpec::GeneratorImages(images.iter().map(index).collect())
                }
            };
            (name.clone(), spec)
        })
        .collect();
    Ok(CatalogEntry {
        spec: spec.clone(),
        group,
        subgroups,
        thetas,
    })
}

/// Family descriptions for `catalog list`.
pub fn catalog_families() -> Vec<(&'static str, &'static str)> {
    vec![
        ("cyclic(n)", "cyclic group of order n, n >= 1"),
        ("dihedral(n)", "dihedral group of order 2n, n >= 3"),
        ("symmetric(1..6)", "symmetric group on n points"),
        ("alternating(1..6)", "alternating group on n points"),
        ("quaternion8", "quaternion group of order 8"),
        (
            "direct_product(A,B)",
            "direct product of two catalog groups",
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::automorphism::automorphism_from_spec;

    #[test]
    fn parse_and_display() {
        let s: CatalogSpec = "direct_product(cyclic(2), symmetric(3))".parse().unwrap();
        assert_eq!(
            s,
            CatalogSpec::product(CatalogSpec::Cyclic(2), CatalogSpec::Symmetric(3))
        );
        assert_eq!(s.to_string(), "direct_product(cyclic(2),symmetric(3))");
        assert_eq!(
            "quaternion8".parse::<CatalogSpec>().unwrap(),
            CatalogSpec::Quaternion8
        );
        assert!(matches!(
            "x".parse::<CatalogSpec>(),
            Err(GroupError::UnknownCatalogName(_))
        ));
        assert!(matches!(
            "cyclic".parse::<CatalogSpec>(),
            Err(GroupError::UnsupportedParameter(_))
        ));
    }

    #[test]
    fn symmetric3() {
        let e = catalog_group(&CatalogSpec::Symmetric(3)).unwrap();
        assert_eq!(e.group.order(), 6);
        assert_eq!(e.subgroup("point-stabilizer").unwrap().order(), 2);
        assert_eq!(e.subgroup("alternating").unwrap().order(), 3);
    }

    #[test]
    fn quaternion8() {
        let e = catalog_group(&CatalogSpec::Quaternion8).unwrap();
        assert_eq!(e.group.order(), 8);
        assert_eq!(e.group.exponent(), 4);
        assert_eq!(e.subgroup("center").unwrap().order(), 2);
        let t = automorphism_from_spec(&e.group, e.theta("swap_ij").unwrap()).unwrap();
        assert!(!t.is_identity());
    }

    #[test]
    fn trivial_cyclic() {
        let e = catalog_group(&CatalogSpec::Cyclic(1)).unwrap();
        assert_eq!(e.group.order(), 1);
    }

    #[test]
    fn orders() {
        let cases = [
            (CatalogSpec::Dihedral(5), 10),
            (CatalogSpec::Symmetric(5), 120),
            (CatalogSpec::Alternating(4), 12),
            (CatalogSpec::Alternating(5), 60),
            (CatalogSpec::Alternating(2), 1),
            (
                CatalogSpec::product(CatalogSpec::Symmetric(3), CatalogSpec::Symmetric(3)),
                36,
            ),
        ];
        for (spec, order) in cases {
            assert_eq!(catalog_group(&spec).unwrap().group.order(), order, "{spec}");
        }
    }

    #[test]
    fn product_swap_and_diagonal() {
        let spec = CatalogSpec::product(CatalogSpec::Symmetric(3), CatalogSpec::Symmetric(3));
        let e = catalog_group(&spec).unwrap();
        assert_eq!(e.subgroup("diagonal").unwrap().order(), 6);
        let swap = automorphism_from_spec(&e.group, e.theta("swap").unwrap()).unwrap();
        assert!(e.subgroup("diagonal").unwrap().is_theta_stable(&swap));
        assert!(!e.subgroup("left").unwrap().is_theta_stable(&swap));
    }

    #[test]
    fn unsupported_parameters() {
        for s in ["symmetric(7)", "dihedral(2)", "cyclic(0)", "alternating(0)"] {
            let spec: Result<CatalogSpec, _> = s.parse();
            let err = spec
                .and_then(|s| catalog_group(&s).map(|_| ()))
                .unwrap_err();
            assert!(matches!(err, GroupError::UnsupportedParameter(_)), "{s}");
        }
    }

    #[test]
    fn named_subgroups_divide_order() {
        for s in [
            "symmetric(4)",
            "dihedral(6)",
            "alternating(5)",
            "quaternion8",
        ] {
            let e = catalog_group(&s.parse().unwrap()).unwrap();
            for (name, h) in &e.subgroups {
                assert_eq!(e.group.order() % h.order(), 0, "{s} {name}");
            }
        }
    }
}
