//! Irreducible characters as residues modulo a prime `p` with
//! `p = 1 (mod exponent)`.
//!
//! The table is computed from the class matrices: the normalized central
//! characters `omega_pi(C_i) = |C_i| chi_pi(g_i) / chi_pi(1)` are exactly
//! the common right eigenvectors of all class matrices with identity
//! coordinate 1. Common eigenspaces are found by splitting the whole space
//! successively by the eigenspaces of each class matrix; eigenvalues are
//! found by scanning all of GF(p), which is small by construction.
//!
//! Only integers that are provably small (degrees, fixed-space dimensions,
//! indicators) are lifted out of GF(p), always via the symmetric
//! representative and with a range check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CharTableError;
use crate::field::{is_prime, isqrt, Matrix, PrimeField};
use crate::group::{Automorphism, ClassData, FiniteGroup, GroupId, Subgroup};

/// Smallest prime `p = 1 (mod exponent)` with `p > 2 floor(sqrt(order)) + 1`.
pub fn select_prime(order: usize, exponent: usize) -> Result<u64, CharTableError> {
    let e = exponent as u64;
    let bound = 2 * isqrt(order as u64) + 1;
    let mut p = e + 1;
    while p <= bound || !is_prime(p) {
        p += e;
        if p >= 1 << 31 {
            return Err(CharTableError::PrimeSearchOverflow);
        }
    }
    Ok(p)
}

/// Structure constants `a[i][j][l] = #{(x, y) in C_i x C_j : x y = z}` for
/// a fixed `z` in `C_l`.
pub fn class_structure_constants(
    group: &FiniteGroup,
    classes: &ClassData,
) -> Result<Vec<Vec<Vec<u64>>>, CharTableError> {
    let k = classes.class_count();
    let count = |i: usize, z: usize| {
        let mut col = vec![0u64; k];
        for &x in classes.class(i) {
            col[classes.class_of(group.mul(group.inv(x), z))] += 1;
        }
        col
    };
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (i, ai) in a.iter_mut().enumerate() {
        for l in 0..k {
            let col = count(i, classes.representative(l));
            if let Some(&other) = classes.class(l).last() {
                if other != classes.representative(l) && count(i, other) != col {
                    return Err(CharTableError::ClassMatrixInconsistent {
                        class: i,
                        target: l,
                    });
                }
            }
            for (j, &c) in col.iter().enumerate() {
                ai[j][l] = c;
            }
        }
    }
    Ok(a)
}

/// Class matrix `M_i` with entry `(j, l) = a[i][j][l]`.
pub fn class_matrix(
    group: &FiniteGroup,
    classes: &ClassData,
    i: usize,
) -> Result<Vec<Vec<u64>>, CharTableError> {
    Ok(class_structure_constants(group, classes)?.swap_remove(i))
}

/// How common eigenspaces are refined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinementOptions {
    /// After this many class matrices, switch to random GF(p)-combinations
    /// of all class matrices. `None` uses every class matrix in turn.
    pub class_matrix_cap: Option<usize>,
    pub random_rounds: usize,
    pub seed: u64,
}

impl Default for RefinementOptions {
    fn default() -> Self {
        Self {
            class_matrix_cap: None,
            random_rounds: 8,
            seed: 0x5eed,
        }
    }
}

/// A subspace of GF(p)^k held as a basis in reduced row echelon form.
#[derive(Debug, Clone)]
struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn spanned_by(f: &PrimeField, vectors: Vec<Vec<u64>>, k: usize) -> Self {
        let mut basis = Matrix::from_rows(vectors, k);
        let pivots = basis.rref(f);
        Self { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.pivots.len()
    }
}

/// Splits `w` into the eigenspaces of `m` restricted to it.
fn split(f: &PrimeField, m: &Matrix, w: &Subspace) -> Result<Vec<Subspace>, CharTableError> {
    let d = w.dim();
    let k = m.cols();
    let images: Vec<Vec<u64>> = (0..d).map(|s| m.apply(f, w.basis.row(s))).collect();
    // restricted[r][s] = coordinate r of m * b_s
    let mut restricted = Matrix::zeros(d, d);
    for (s, img) in images.iter().enumerate() {
        for (r, &pc) in w.pivots.iter().enumerate() {
            restricted.set(r, s, img[pc]);
        }
        // invariance of w under m
        let mut back = vec![0u64; k];
        for r in 0..d {
            let c = restricted.get(r, s);
            for (x, &b) in back.iter_mut().zip(w.basis.row(r)) {
                *x = f.add(*x, f.mul(c, b));
            }
        }
        if &back != img {
            return Err(CharTableError::EigenspaceNotSplit(d));
        }
    }
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..f.modulus() {
        if found == d {
            break;
        }
        let mut shifted = restricted.clone();
        for r in 0..d {
            shifted.set(r, r, f.sub(shifted.get(r, r), lambda));
        }
        let ns = shifted.null_space(f);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vectors = ns
            .into_iter()
            .map(|c| {
                let mut v = vec![0u64; k];
                for (r, &cr) in c.iter().enumerate() {
                    for (x, &b) in v.iter_mut().zip(w.basis.row(r)) {
                        *x = f.add(*x, f.mul(cr, b));
                    }
                }
                v
            })
            .collect();
        parts.push(Subspace::spanned_by(f, vectors, k));
    }
    if found != d {
        // not diagonalizable over GF(p): impossible for a split semisimple algebra
        return Err(CharTableError::EigenspaceNotSplit(d));
    }
    Ok(parts)
}

fn refine(
    f: &PrimeField,
    spaces: Vec<Subspace>,
    m: &Matrix,
) -> Result<Vec<Subspace>, CharTableError> {
    let mut out = Vec::with_capacity(spaces.len());
    for w in spaces {
        if w.dim() == 1 {
            out.push(w);
        } else {
            out.extend(split(f, m, &w)?);
        }
    }
    Ok(out)
}

/// Exact irreducible characters of a finite group, as residues mod `p`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: GroupId,
    order: usize,
    exponent: usize,
    field: PrimeField,
    classes: ClassData,
    degrees: Vec<usize>,
    values: Vec<Vec<u64>>,
}

impl CharacterTable {
    #[inline]
    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    /// Number of irreducible characters (= number of classes).
    pub fn irrep_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, irrep: usize) -> usize {
        self.degrees[irrep]
    }

    /// `chi_pi` on class `c`, mod p.
    #[inline]
    pub fn value(&self, irrep: usize, class: usize) -> u64 {
        self.values[irrep][class]
    }

    pub fn row(&self, irrep: usize) -> &[u64] {
        &self.values[irrep]
    }

    fn check_group(&self, id: GroupId) -> Result<(), CharTableError> {
        if id == self.group {
            Ok(())
        } else {
            Err(CharTableError::MismatchedParents)
        }
    }

    /// `|S|^-1 sum_{s in S} values[c(s)]` lifted with a range check.
    fn averaged_lift(&self, irrep: usize, class_counts: &[u64], total: usize) -> i64 {
        let f = &self.field;
        let sum = class_counts
            .iter()
            .zip(&self.values[irrep])
            .fold(0, |acc, (&n, &v)| f.add(acc, f.mul(f.reduce(n), v)));
        f.lift_symmetric(f.mul(sum, f.inv(f.reduce(total as u64))))
    }

    fn subgroup_class_counts(&self, subgroup: &Subgroup) -> Vec<u64> {
        let mut counts = vec![0u64; self.classes.class_count()];
        for &s in subgroup.elements() {
            counts[self.classes.class_of(s)] += 1;
        }
        counts
    }

    /// `dim pi^S = |S|^-1 sum_{s in S} chi_pi(s)`.
    pub fn invariant_dim(
        &self,
        irrep: usize,
        subgroup: &Subgroup,
    ) -> Result<usize, CharTableError> {
        self.check_group(subgroup.group_id())?;
        let counts = self.subgroup_class_counts(subgroup);
        self.invariant_dim_from_counts(irrep, &counts, subgroup.order())
    }

    fn invariant_dim_from_counts(
        &self,
        irrep: usize,
        counts: &[u64],
        order: usize,
    ) -> Result<usize, CharTableError> {
        let v = self.averaged_lift(irrep, counts, order);
        let hi = self.degrees[irrep] as i64;
        if !(0..=hi).contains(&v) {
            return Err(CharTableError::LiftOutOfRange {
                what: "invariant dimension",
                value: v,
                lo: 0,
                hi,
            });
        }
        Ok(v as usize)
    }

    /// `dim pi^S` for every irrep.
    pub fn invariant_dims(&self, subgroup: &Subgroup) -> Result<Vec<usize>, CharTableError> {
        self.check_group(subgroup.group_id())?;
        let counts = self.subgroup_class_counts(subgroup);
        (0..self.irrep_count())
            .map(|pi| self.invariant_dim_from_counts(pi, &counts, subgroup.order()))
            .collect()
    }

    /// Twisted Frobenius-Schur indicators `|G|^-1 sum_g chi(g theta(g))` for
    /// every irrep.
    pub fn twisted_indicators(
        &self,
        group: &FiniteGroup,
        theta: &Automorphism,
    ) -> Result<Vec<i8>, CharTableError> {
        self.check_group(group.id())?;
        self.check_group(theta.group_id())?;
        let mut counts = vec![0u64; self.classes.class_count()];
        for g in group.elements() {
            counts[self.classes.class_of(group.mul(g, theta.apply(g)))] += 1;
        }
        (0..self.irrep_count())
            .map(|pi| match self.averaged_lift(pi, &counts, self.order) {
                v @ -1..=1 => Ok(v as i8),
                v => Err(CharTableError::IndicatorOutOfRange(v)),
            })
            .collect()
    }

    pub fn twisted_indicator(
        &self,
        group: &FiniteGroup,
        irrep: usize,
        theta: &Automorphism,
    ) -> Result<i8, CharTableError> {
        Ok(self.twisted_indicators(group, theta)?[irrep])
    }

    /// For each irrep `pi`, the index of the irrep whose character is
    /// `g -> chi_pi(theta(g^-1))`, i.e. `pi^* o theta`.
    pub fn dual_twist_partner(
        &self,
        group: &FiniteGroup,
        theta: &Automorphism,
    ) -> Result<Vec<usize>, CharTableError> {
        self.check_group(group.id())?;
        self.check_group(theta.group_id())?;
        let k = self.classes.class_count();
        let target: Vec<usize> = (0..k)
            .map(|c| {
                self.classes
                    .class_of(theta.sigma(group, self.classes.representative(c)))
            })
            .collect();
        let partners = (0..self.irrep_count())
            .map(|pi| {
                let twisted: Vec<u64> = target.iter().map(|&t| self.values[pi][t]).collect();
                self.values
                    .iter()
                    .position(|row| *row == twisted)
                    .ok_or(CharTableError::PartnerRowNotFound(pi))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(pi) = (0..partners.len()).find(|&pi| partners[partners[pi]] != pi) {
            return Err(CharTableError::PartnerRowNotFound(pi));
        }
        Ok(partners)
    }

    /// Multiplicity one: `dim pi^H <= 1` for every irrep.
    pub fn is_gelfand(&self, subgroup: &Subgroup) -> Result<bool, CharTableError> {
        Ok(self.invariant_dims(subgroup)?.iter().all(|&m| m <= 1))
    }

    /// Irreps with nonzero `H`-fixed vectors.
    pub fn distinguished_irreps(&self, subgroup: &Subgroup) -> Result<Vec<usize>, CharTableError> {
        Ok(self
            .invariant_dims(subgroup)?
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, _)| i)
            .collect())
    }

    /// Checks degree sum, orthogonality, degree column and row distinctness.
    /// Returns a description of every violation found.
    pub fn validate(&self) -> Vec<String> {
        let f = &self.field;
        let k = self.classes.class_count();
        let n = self.order as u64;
        let mut violations = Vec::new();
        if self.values.len() != k {
            violations.push(format!("{} characters for {k} classes", self.values.len()));
            return violations;
        }
        let deg_sq: usize = self.degrees.iter().map(|d| d * d).sum();
        if deg_sq != self.order {
            violations.push(format!("sum of squared degrees {deg_sq} != {}", self.order));
        }
        let root = isqrt(n) as usize;
        for (pi, &d) in self.degrees.iter().enumerate() {
            if d == 0 || d > root {
                violations.push(format!("degree {d} of irrep {pi} out of range"));
            }
            if self.values[pi][0] != f.reduce(d as u64) {
                violations.push(format!("value at identity of irrep {pi} != degree"));
            }
        }
        if self.values[0].iter().any(|&v| v != 1) {
            violations.push("row 0 is not the trivial character".into());
        }
        for pi in 0..k {
            for tau in 0..k {
                let s = (0..k).fold(0, |acc, c| {
                    let term = f.mul(
                        f.reduce(self.classes.size(c) as u64),
                        f.mul(
                            self.values[pi][c],
                            self.values[tau][self.classes.inverse_class(c)],
                        ),
                    );
                    f.add(acc, term)
                });
                let expected = if pi == tau { f.reduce(n) } else { 0 };
                if s != expected {
                    violations.push(format!("row orthogonality fails for ({pi}, {tau})"));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let s = (0..k).fold(0, |acc, pi| {
                    f.add(
                        acc,
                        f.mul(
                            self.values[pi][c],
                            self.values[pi][self.classes.inverse_class(d)],
                        ),
                    )
                });
                let expected = if c == d {
                    f.reduce(n / self.classes.size(c) as u64)
                } else {
                    0
                };
                if s != expected {
                    violations.push(format!("column orthogonality fails for ({c}, {d})"));
                }
            }
        }
        for pi in 0..k {
            for tau in pi + 1..k {
                if self.values[pi] == self.values[tau] {
                    violations.push(format!("rows {pi} and {tau} coincide"));
                }
            }
        }
        violations
    }
}

/// Computes the character table with default refinement options.
pub fn character_table(
    group: &FiniteGroup,
    classes: &ClassData,
) -> Result<CharacterTable, CharTableError> {
    character_table_with(group, classes, RefinementOptions::default())
}

pub fn character_table_with(
    group: &FiniteGroup,
    classes: &ClassData,
    options: RefinementOptions,
) -> Result<CharacterTable, CharTableError> {
    let order = group.order();
    let exponent = group.exponent();
    let p = select_prime(order, exponent)?;
    let f = PrimeField::new(p);
    let k = classes.class_count();

    let constants = class_structure_constants(group, classes)?;
    let matrices: Vec<Matrix> = constants
        .iter()
        .map(|m| {
            Matrix::from_rows(
                m.iter()
                    .map(|row| row.iter().map(|&x| f.reduce(x)).collect())
                    .collect(),
                k,
            )
        })
        .collect();

    let identity = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![Subspace::spanned_by(&f, identity, k)];
    let mut order_by_size: Vec<usize> = (1..k).collect();
    order_by_size.sort_by_key(|&i| (classes.size(i), i));
    let cap = options.class_matrix_cap.unwrap_or(usize::MAX);

    let all_split = |s: &[Subspace]| s.iter().all(|w| w.dim() == 1);
    for &i in order_by_size.iter().take(cap) {
        if all_split(&spaces) {
            break;
        }
        spaces = refine(&f, spaces, &matrices[i])?;
    }
    if !all_split(&spaces) && options.class_matrix_cap.is_some() {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for _ in 0..options.random_rounds {
            if all_split(&spaces) {
                break;
            }
            let mut combo = Matrix::zeros(k, k);
            for m in &matrices {
                let r = rng.gen_range(0..p);
                for a in 0..k {
                    for b in 0..k {
                        combo.set(a, b, f.add(combo.get(a, b), f.mul(r, m.get(a, b))));
                    }
                }
            }
            spaces = refine(&f, spaces, &combo)?;
        }
    }
    if let Some(w) = spaces.iter().find(|w| w.dim() > 1) {
        return Err(CharTableError::EigenspaceNotSplit(w.dim()));
    }

    let root = isqrt(order as u64);
    let n_mod = f.reduce(order as u64);
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::with_capacity(k);
    for w in &spaces {
        let v = w.basis.row(0);
        if v[0] == 0 {
            return Err(CharTableError::UnnormalizableEigenvector);
        }
        let s = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, s)).collect();
        // |G| / d^2 = sum_i omega_i omega_{i*} / |C_i|
        let norm = (0..k).fold(0, |acc, i| {
            let t = f.mul(
                f.mul(omega[i], omega[classes.inverse_class(i)]),
                f.inv(f.reduce(classes.size(i) as u64)),
            );
            f.add(acc, t)
        });
        let d_sq = f.mul(n_mod, f.inv(norm));
        let roots: Vec<u64> = (1..=root).filter(|&d| f.mul(d, d) == d_sq).collect();
        let d = match roots.as_slice() {
            [d] => *d,
            [] => return Err(CharTableError::DegreeLiftFailed(d_sq)),
            _ => return Err(CharTableError::DegreeLiftAmbiguous),
        };
        let values = (0..k)
            .map(|i| f.mul(f.mul(d, omega[i]), f.inv(f.reduce(classes.size(i) as u64))))
            .collect();
        rows.push((d as usize, values));
    }
    // trivial character first, then by degree and residues
    rows.sort_by(|a, b| {
        let nontrivial = |r: &(usize, Vec<u64>)| !r.1.iter().all(|&v| v == 1);
        (nontrivial(a), a.0, &a.1).cmp(&(nontrivial(b), b.0, &b.1))
    });
    let (degrees, values) = rows.into_iter().unzip();

    let table = CharacterTable {
        group: group.id(),
        order,
        exponent,
        field: f,
        classes: classes.clone(),
        degrees,
        values,
    };
    if let Some(v) = table.validate().into_iter().next() {
        return Err(CharTableError::TableInvariantViolated(v));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        automorphism_from_spec, catalog_group, conjugacy_classes, CatalogEntry, ThetaSpec,
    };

    fn entry(s: &str) -> CatalogEntry {
        catalog_group(&s.parse().unwrap()).unwrap()
    }

    fn table(e: &CatalogEntry) -> CharacterTable {
        character_table(&e.group, &conjugacy_classes(&e.group)).unwrap()
    }

    #[test]
    fn prime_selection() {
        assert_eq!(select_prime(6, 6).unwrap(), 7);
        assert_eq!(select_prime(8, 4).unwrap(), 13);
        assert_eq!(select_prime(1, 1).unwrap(), 5);
        assert_eq!(select_prime(720, 60).unwrap(), 61);
    }

    #[test]
    fn class_matrix_examples() {
        let e = entry("symmetric(3)");
        let cl = conjugacy_classes(&e.group);
        let m0 = class_matrix(&e.group, &cl, 0).unwrap();
        for (j, row) in m0.iter().enumerate() {
            for (l, &x) in row.iter().enumerate() {
                assert_eq!(x, u64::from(j == l));
            }
        }
        let t = cl.class_of(e.group.index_of_permutation(&[1, 0, 2]).unwrap());
        let mt = class_matrix(&e.group, &cl, t).unwrap();
        assert_eq!(mt[t][0], 3);

        // C3: the class {g} shifts classes
        let e = entry("cyclic(3)");
        let cl = conjugacy_classes(&e.group);
        for i in 0..3 {
            let m = class_matrix(&e.group, &cl, i).unwrap();
            let g = cl.representative(i);
            for j in 0..3 {
                for l in 0..3 {
                    let prod = cl.class_of(e.group.mul(g, cl.representative(j)));
                    assert_eq!(m[j][l], u64::from(prod == l));
                }
            }
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(table(&entry("cyclic(3)")).degrees(), &[1, 1, 1]);
        assert_eq!(table(&entry("symmetric(3)")).degrees(), &[1, 1, 2]);
        assert_eq!(table(&entry("quaternion8")).degrees(), &[1, 1, 1, 1, 2]);
        assert_eq!(table(&entry("symmetric(4)")).degrees(), &[1, 1, 2, 3, 3]);
        assert_eq!(table(&entry("alternating(5)")).degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(table(&entry("cyclic(1)")).degrees(), &[1]);
        assert_eq!(
            table(&entry("symmetric(5)")).degrees(),
            &[1, 1, 4, 4, 5, 5, 6]
        );
        assert_eq!(
            table(&entry("symmetric(6)")).degrees(),
            &[1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]
        );
    }

    #[test]
    fn cyclic3_values_are_cube_roots() {
        let e = entry("cyclic(3)");
        let t = table(&e);
        let f = t.field();
        for pi in 0..3 {
            for c in 0..3 {
                assert_eq!(f.pow(t.value(pi, c), 3), 1);
            }
        }
    }

    #[test]
    fn s3_invariant_dims() {
        let e = entry("symmetric(3)");
        let t = table(&e);
        let h = e.subgroup("point-stabilizer").unwrap();
        // trivial, sign, standard
        assert_eq!(t.invariant_dims(h).unwrap(), vec![1, 0, 1]);
        assert!(t.is_gelfand(h).unwrap());
        assert_eq!(t.distinguished_irreps(h).unwrap(), vec![0, 2]);
        let full = Subgroup::full(&e.group);
        assert_eq!(t.distinguished_irreps(&full).unwrap(), vec![0]);
        let triv = Subgroup::trivial(&e.group);
        assert_eq!(t.distinguished_irreps(&triv).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn q8_indicators_and_gelfand() {
        let e = entry("quaternion8");
        let t = table(&e);
        let id = Automorphism::identity(&e.group);
        assert_eq!(
            t.twisted_indicators(&e.group, &id).unwrap(),
            vec![1, 1, 1, 1, -1]
        );
        assert!(!t.is_gelfand(&Subgroup::trivial(&e.group)).unwrap());
    }

    #[test]
    fn cyclic3_partners() {
        let e = entry("cyclic(3)");
        let t = table(&e);
        let id = Automorphism::identity(&e.group);
        assert_eq!(t.twisted_indicators(&e.group, &id).unwrap(), vec![1, 0, 0]);
        assert_eq!(t.dual_twist_partner(&e.group, &id).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn real_and_inverted_partners() {
        let e = entry("symmetric(3)");
        let t = table(&e);
        let id = Automorphism::identity(&e.group);
        assert_eq!(t.dual_twist_partner(&e.group, &id).unwrap(), vec![0, 1, 2]);

        let e = entry("cyclic(4)");
        let t = table(&e);
        let inv = automorphism_from_spec(&e.group, &ThetaSpec::Inversion).unwrap();
        assert_eq!(
            t.dual_twist_partner(&e.group, &inv).unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(t.twisted_indicators(&e.group, &inv).unwrap(), vec![1; 4]);
    }

    #[test]
    fn capped_refinement_uses_random_combinations() {
        let e = entry("symmetric(4)");
        let cl = conjugacy_classes(&e.group);
        let opts = RefinementOptions {
            class_matrix_cap: Some(0),
            ..RefinementOptions::default()
        };
        let t = character_table_with(&e.group, &cl, opts).unwrap();
        assert_eq!(t.degrees(), table(&e).degrees());
    }

    #[test]
    fn mismatched_subgroup() {
        let a = entry("cyclic(3)");
        let b = entry("cyclic(3)");
        let t = table(&a);
        assert_eq!(
            t.invariant_dim(0, &Subgroup::trivial(&b.group))
                .unwrap_err(),
            CharTableError::MismatchedParents
        );
    }
}
