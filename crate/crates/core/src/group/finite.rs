use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GroupError;
use crate::field::lcm;

/// Default bound on the order of groups built by closure.
pub const DEFAULT_MAX_ORDER: usize = 5040;

/// Tables up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 256;
const ASSOC_SPOT_CHECKS: usize = 100_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Identity tag shared by a group and every subgroup or automorphism built
/// from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId(u64);

impl GroupId {
    fn fresh() -> Self {
        GroupId(NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone)]
struct PermutationData {
    degree: usize,
    images: Vec<Vec<u32>>,
    lookup: HashMap<Vec<u32>, usize>,
}

/// A finite group given by its complete multiplication table over the
/// elements `0..n`, with the identity pinned at index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    id: GroupId,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    perms: Option<PermutationData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .field("degree", &self.perms.as_ref().map(|p| p.degree))
            .finish()
    }
}

impl FiniteGroup {
    #[inline]
    pub fn id(&self) -> GroupId {
        self.id
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g a g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Stored generators, in the order they were supplied (or chosen).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn check_index(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.commutation_witness().is_none()
    }

    /// A pair of generators that do not commute, if any.
    pub fn commutation_witness(&self) -> Option<(usize, usize)> {
        for (i, &a) in self.generators.iter().enumerate() {
            for &b in &self.generators[i + 1..] {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.generators
            .iter()
            .all(|&g| self.mul(a, g) == self.mul(g, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .fold(1u64, |acc, a| lcm(acc, self.element_order(a) as u64)) as usize
    }

    /// Degree of the permutation representation, when the group was built
    /// from permutations.
    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p.degree)
    }

    pub fn permutation(&self, a: usize) -> Option<Vec<usize>> {
        self.perms
            .as_ref()
            .map(|p| p.images[a].iter().map(|&x| x as usize).collect())
    }

    pub fn index_of_permutation(&self, perm: &[usize]) -> Option<usize> {
        let p = self.perms.as_ref()?;
        let key: Vec<u32> = perm.iter().map(|&x| x as u32).collect();
        p.lookup.get(&key).copied()
    }

    /// Human-readable element label: cycle notation for permutation groups,
    /// `#index` otherwise.
    pub fn element_label(&self, a: usize) -> String {
        match self.permutation(a) {
            Some(p) => cycle_notation(&p),
            None => format!("#{a}"),
        }
    }
}

/// Disjoint-cycle notation, `()` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Builds a validated group from a full Cayley table. The identity is
/// relabelled to index 0 by swapping it with whatever element held that
/// index.
pub fn group_from_cayley(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::MalformedTable("empty table".into()));
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::MalformedTable(format!(
                "row {r} has length {}, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(GroupError::MalformedTable(format!(
                "row {r} contains entry {bad} outside 0..{n}"
            )));
        }
    }

    let e = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(GroupError::NoIdentity)?;

    // Latin square: each row and column a permutation.
    for a in 0..n {
        let mut seen_row = vec![usize::MAX; n];
        let mut seen_col = vec![usize::MAX; n];
        for b in 0..n {
            let x = table[a][b];
            if seen_row[x] != usize::MAX {
                return Err(GroupError::NotAGroup {
                    axiom: "row uniqueness",
                    witness: (a, seen_row[x], b),
                });
            }
            seen_row[x] = b;
            let y = table[b][a];
            if seen_col[y] != usize::MAX {
                return Err(GroupError::NotAGroup {
                    axiom: "column uniqueness",
                    witness: (seen_col[y], b, a),
                });
            }
            seen_col[y] = b;
        }
    }

    let relabel = |x: usize| {
        if x == 0 {
            e
        } else if x == e {
            0
        } else {
            x
        }
    };
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
        }
    }

    let mut inv = vec![0u32; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| mul[a * n + b] == 0)
            .ok_or(GroupError::NonInvertibleElement(a))?;
        if mul[b * n + a] != 0 {
            return Err(GroupError::NonInvertibleElement(a));
        }
        inv[a] = b as u32;
    }

    let mut group = FiniteGroup {
        id: GroupId::fresh(),
        order: n,
        mul,
        inv,
        generators: Vec::new(),
        perms: None,
    };

    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = group.mul(a, b);
                for c in 0..n {
                    if group.mul(ab, c) != group.mul(a, group.mul(b, c)) {
                        return Err(GroupError::NotAGroup {
                            axiom: "associativity",
                            witness: (a, b, c),
                        });
                    }
                }
            }
        }
    } else {
        spot_check_associativity(&group)?;
    }

    group.generators = greedy_generators(&group);
    Ok(group)
}

fn spot_check_associativity(group: &FiniteGroup) -> Result<(), GroupError> {
    let n = group.order;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b_2017);
    for _ in 0..ASSOC_SPOT_CHECKS {
        let (a, b, c) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        if group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c)) {
            return Err(GroupError::NotAGroup {
                axiom: "associativity",
                witness: (a, b, c),
            });
        }
    }
    Ok(())
}

/// Closure of `gens` inside `group`, as a membership table plus the list
/// of members in discovery order.
pub(crate) fn closure(group: &FiniteGroup, gens: &[usize]) -> (Vec<bool>, Vec<usize>) {
    let mut member = vec![false; group.order()];
    let mut found = vec![0];
    member[0] = true;
    let mut i = 0;
    while i < found.len() {
        let x = found[i];
        for &g in gens {
            let y = group.mul(x, g);
            if !member[y] {
                member[y] = true;
                found.push(y);
            }
        }
        i += 1;
    }
    (member, found)
}

/// Generating set chosen by scanning elements in index order and keeping
/// each one not already generated.
pub(crate) fn greedy_generators_of(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut member = vec![false; group.order()];
    member[0] = true;
    for &x in elements {
        if !member[x] {
            gens.push(x);
            member = closure(group, &gens).0;
        }
    }
    gens
}

fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let all: Vec<usize> = group.elements().collect();
    greedy_generators_of(group, &all)
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    // (a * b)(i) = a(b(i)): b acts first.
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Closure of a set of permutations of `0..degree`. Element 0 is the
/// identity; the product `a * b` is the composition that applies `b` first.
pub fn group_from_permutations(
    degree: usize,
    generators: &[Vec<usize>],
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    for (index, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree
            && g.iter()
                .all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
        if !ok {
            return Err(GroupError::NotAPermutation { index, degree });
        }
    }
    let gens: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|&x| x as u32).collect())
        .collect();

    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut images = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0usize)]);
    // parent[b] = (a, j) with b = a * gens[j]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mut row = Vec::with_capacity(gens.len());
        for (j, g) in gens.iter().enumerate() {
            let y = compose(&images[x], g);
            let idx = match lookup.get(&y) {
                Some(&idx) => idx,
                None => {
                    let idx = images.len();
                    if idx >= max_order {
                        return Err(GroupError::OrderGuardExceeded(max_order));
                    }
                    lookup.insert(y.clone(), idx);
                    images.push(y);
                    parent.push(Some((x, j)));
                    queue.push_back(idx);
                    idx
                }
            };
            row.push(idx);
        }
        right.push(row);
    }

    let n = images.len();
    let mut mul = vec![0u32; n * n];
    // BFS order guarantees parents precede children.
    for a in 0..n {
        mul[a * n] = a as u32;
        for b in 1..n {
            let (pb, j) = parent[b].expect("non-identity element has a parent");
            let ab_parent = mul[a * n + pb] as usize;
            mul[a * n + b] = right[ab_parent][j] as u32;
        }
    }
    let mut inv = vec![0u32; n];
    let mut inverse_perm = vec![0u32; degree];
    for a in 0..n {
        for (i, &x) in images[a].iter().enumerate() {
            inverse_perm[x as usize] = i as u32;
        }
        inv[a] = lookup[&inverse_perm] as u32;
    }

    let group = FiniteGroup {
        id: GroupId::fresh(),
        order: n,
        mul,
        inv,
        generators: gens.iter().map(|g| lookup[g]).collect(),
        perms: Some(PermutationData {
            degree,
            images,
            lookup,
        }),
    };
    spot_check_associativity(&group)?;
    Ok(group)
}
