use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, GroupDefect, Result};
use crate::perm::Permutation;
use crate::rng::Lcg;

/// Default cap on closure size for [`FiniteGroup::from_permutations`].
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

/// Order up to which table validation checks associativity exhaustively.
/// Larger tables are sampled (`10·n²` random triples, fixed seed).
pub const EXHAUSTIVE_ASSOC_CAP: usize = 200;

const ASSOC_SAMPLE_SEED: u64 = 0xA550_C1A7;

/// A finite group given by its full multiplication table.
///
/// Elements are the dense indices `0..order`, the identity is always index
/// `0`, and `table[a][b]` holds the product with `a` on the left. Inverses
/// are tabulated during validation. Instances are immutable once built, so
/// sharing them across threads (the pipeline wraps them in `Arc`) is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

pub(crate) struct TableDefect {
    pub defect: GroupDefect,
    pub detail: String,
    pub witness: Vec<usize>,
}

impl TableDefect {
    fn new(defect: GroupDefect, detail: String, witness: Vec<usize>) -> Self {
        TableDefect {
            defect,
            detail,
            witness,
        }
    }
}

impl From<TableDefect> for Error {
    fn from(d: TableDefect) -> Error {
        Error::NotAGroup {
            defect: d.defect,
            detail: d.detail,
        }
    }
}

/// Checks the four table axioms in order: Latin square, identity at index 0,
/// associativity, two-sided inverses. Returns the inverse table and the
/// number of elementary checks performed, or the first defect found.
pub(crate) fn validate_group_table(
    order: usize,
    table: &[usize],
) -> std::result::Result<(Vec<usize>, u64), TableDefect> {
    assert!(order >= 1, "a group has at least the identity");
    assert_eq!(table.len(), order * order, "table shape");
    let n = order;
    let at = |a: usize, b: usize| table[a * n + b];
    let mut checks: u64 = 0;

    // Rows and columns must each be permutations of 0..n. Out-of-range
    // entries count as the same defect: such a row is not a permutation.
    for a in 0..n {
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            checks += 1;
            let v = at(a, b);
            if v >= n {
                return Err(TableDefect::new(
                    GroupDefect::NonLatinSquare,
                    format!("entry ({a}, {b}) is {v}, out of range for order {n}"),
                    vec![a, b, v],
                ));
            }
            if seen[v] != usize::MAX {
                return Err(TableDefect::new(
                    GroupDefect::NonLatinSquare,
                    format!("row {a} repeats {v} at columns {} and {b}", seen[v]),
                    vec![a, seen[v], b],
                ));
            }
            seen[v] = b;
        }
    }
    for b in 0..n {
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            checks += 1;
            let v = at(a, b);
            if seen[v] != usize::MAX {
                return Err(TableDefect::new(
                    GroupDefect::NonLatinSquare,
                    format!("column {b} repeats {v} at rows {} and {a}", seen[v]),
                    vec![seen[v], a, b],
                ));
            }
            seen[v] = a;
        }
    }

    // Identity must sit at index 0; a two-sided identity elsewhere is still
    // rejected so that serialized tables stay canonical.
    for x in 0..n {
        checks += 2;
        if at(0, x) != x || at(x, 0) != x {
            let found = (0..n).find(|&e| (0..n).all(|y| at(e, y) == y && at(y, e) == y));
            let detail = match found {
                Some(e) => format!("identity element is index {e}, expected index 0"),
                None => "no element acts as a two-sided identity".to_string(),
            };
            return Err(TableDefect::new(
                GroupDefect::NoIdentity,
                detail,
                vec![x],
            ));
        }
    }

    // Associativity: exhaustive for small orders, sampled beyond.
    let assoc = |a: usize, b: usize, c: usize| -> std::result::Result<(), TableDefect> {
        let left = at(at(a, b), c);
        let right = at(a, at(b, c));
        if left != right {
            return Err(TableDefect::new(
                GroupDefect::NonAssociative,
                format!("at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"),
                vec![a, b, c],
            ));
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_ASSOC_CAP {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    checks += 1;
                    assoc(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = Lcg::new(ASSOC_SAMPLE_SEED);
        let samples = 10 * (n as u64) * (n as u64);
        for _ in 0..samples {
            checks += 1;
            assoc(rng.pick(n), rng.pick(n), rng.pick(n))?;
        }
    }

    // Each row contains the identity exactly once (Latin), so a right
    // inverse exists; verify it also works from the left.
    let mut inverses = vec![0; n];
    for (a, inv) in inverses.iter_mut().enumerate() {
        checks += 1;
        let x = (0..n).find(|&x| at(a, x) == 0).expect("latin row");
        if at(x, a) != 0 {
            return Err(TableDefect::new(
                GroupDefect::MissingInverse,
                format!("{a}*{x} = 0 but {x}*{a} = {}", at(x, a)),
                vec![a, x],
            ));
        }
        *inv = x;
    }

    Ok((inverses, checks))
}

impl FiniteGroup {
    /// Builds a group from a raw table, validating all axioms eagerly.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("empty table".to_string()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        if let Some(ref ls) = labels {
            if ls.len() != n {
                return Err(Error::Parse(format!(
                    "{} labels for {n} elements",
                    ls.len()
                )));
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let (inverses, _) = validate_group_table(n, &table)?;
        Ok(FiniteGroup {
            name: format!("table(order {n})"),
            order: n,
            table,
            inverses,
            labels,
        })
    }

    /// Closes a generating set of permutations and realizes the result as a
    /// table. Discovery is breadth-first from the identity, right-multiplying
    /// by the generators in input order, so element indices are
    /// deterministic. Elements are labelled by cycle notation.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutations_capped(degree, gens, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        gens: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ParamOutOfRange("degree must be at least 1".into()));
        }
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|g| {
                if g.len() != degree {
                    return Err(Error::NotAPermutation(format!(
                        "generator has {} images, expected degree {degree}",
                        g.len()
                    )));
                }
                Permutation::from_images(g.clone())
            })
            .collect::<Result<_>>()?;

        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index_of: HashMap<Permutation, usize> = HashMap::new();
        index_of.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = elements[i].compose(g);
                if !index_of.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index_of.insert(next.clone(), elements.len());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }

        let n = elements.len();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = elements[a].compose(&elements[b]);
                table[a * n + b] = index_of[&prod];
            }
        }
        let labels: Vec<String> = elements.iter().map(|p| p.cycle_notation()).collect();
        let (inverses, _) = validate_group_table(n, &table).map_err(Error::from)?;
        Ok(FiniteGroup {
            name: format!("generated(degree {degree}, {} gens)", gens.len()),
            order: n,
            table,
            inverses,
            labels: Some(labels),
        })
    }

    /// Parses and constructs a builtin family member, e.g. `cyclic:6`,
    /// `dihedral:4`, `symmetric:3`, `quaternion`, `klein4`.
    pub fn builtin(spec: &str) -> Result<Self> {
        Builtin::parse(spec)?.construct()
    }

    pub(crate) fn from_raw_parts(
        name: String,
        order: usize,
        table: Vec<usize>,
        inverses: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        FiniteGroup {
            name,
            order,
            table,
            inverses,
            labels,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element; always index 0.
    pub fn identity(&self) -> usize {
        0
    }

    /// Product with `a` on the left. Panics if an index is out of range.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.order && b < self.order, "element index out of range");
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        assert!(a < self.order, "element index out of range");
        self.inverses[a]
    }

    pub fn table_row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub(crate) fn raw_table(&self) -> &[usize] {
        &self.table
    }

    /// The left-translation permutation `h ↦ a·h`.
    pub fn cayley_rho(&self, a: usize) -> Permutation {
        Permutation::from_images(self.table_row(a).to_vec()).expect("latin row")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human label for an element; falls back to the index.
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(ls) => ls[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

/// The builtin families. Parameter meanings: `Cyclic(n)` has order `n`,
/// `Dihedral(n)` is the symmetries of the regular n-gon (order `2n`),
/// `Symmetric(n)` is all permutations of `n` points (n ≤ 6).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion,
    Klein4,
}

impl Builtin {
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, param) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        let need = |p: Option<&str>| -> Result<usize> {
            let p = p.ok_or_else(|| {
                Error::Parse(format!("builtin `{name}` needs a parameter, e.g. `{name}:4`"))
            })?;
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad builtin parameter `{p}`")))
        };
        let bare = |b: Builtin| -> Result<Builtin> {
            match param {
                Some(p) => Err(Error::Parse(format!(
                    "builtin `{name}` takes no parameter, got `{p}`"
                ))),
                None => Ok(b),
            }
        };
        match name {
            "cyclic" => Ok(Builtin::Cyclic(need(param)?)),
            "dihedral" => Ok(Builtin::Dihedral(need(param)?)),
            "symmetric" => Ok(Builtin::Symmetric(need(param)?)),
            "quaternion" => bare(Builtin::Quaternion),
            "klein4" => bare(Builtin::Klein4),
            other => Err(Error::UnknownBuiltin(other.to_string())),
        }
    }

    pub fn construct(&self) -> Result<FiniteGroup> {
        match *self {
            Builtin::Cyclic(n) => cyclic(n),
            Builtin::Dihedral(n) => dihedral(n),
            Builtin::Symmetric(n) => symmetric(n),
            Builtin::Quaternion => quaternion(),
            Builtin::Klein4 => klein4(),
        }
    }
}

fn finish(name: String, n: usize, table: Vec<usize>, labels: Vec<String>) -> Result<FiniteGroup> {
    let (inverses, _) = validate_group_table(n, &table).map_err(Error::from)?;
    Ok(FiniteGroup {
        name,
        order: n,
        table,
        inverses,
        labels: Some(labels),
    })
}

/// Z_n: element i is the rotation a^i, product is addition mod n.
fn cyclic(n: usize) -> Result<FiniteGroup> {
    if !(1..=4096).contains(&n) {
        return Err(Error::ParamOutOfRange(format!(
            "cyclic parameter {n} outside 1..=4096"
        )));
    }
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        })
        .collect();
    finish(format!("cyclic({n})"), n, table, labels)
}

/// Dihedral group of the n-gon, order 2n. Indices 0..n are the rotations
/// r^i, indices n..2n are the reflections s·r^i; relations r^n = s² = e and
/// r·s = s·r⁻¹.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    if !(1..=2048).contains(&n) {
        return Err(Error::ParamOutOfRange(format!(
            "dihedral parameter {n} outside 1..=2048"
        )));
    }
    let order = 2 * n;
    let mut table = vec![0; order * order];
    let idx = |flip: usize, rot: usize| flip * n + rot;
    for i in 0..n {
        for j in 0..n {
            table[idx(0, i) * order + idx(0, j)] = idx(0, (i + j) % n);
            table[idx(0, i) * order + idx(1, j)] = idx(1, (n + j - i) % n);
            table[idx(1, i) * order + idx(0, j)] = idx(1, (i + j) % n);
            table[idx(1, i) * order + idx(1, j)] = idx(0, (n + j - i) % n);
        }
    }
    let mut labels = Vec::with_capacity(order);
    for i in 0..n {
        labels.push(match i {
            0 => "e".to_string(),
            1 => "r".to_string(),
            k => format!("r^{k}"),
        });
    }
    for i in 0..n {
        labels.push(match i {
            0 => "s".to_string(),
            1 => "sr".to_string(),
            k => format!("sr^{k}"),
        });
    }
    finish(format!("dihedral({n})"), order, table, labels)
}

/// S_n with elements in lexicographic order of their image arrays, so the
/// identity lands at index 0. Labels are cycle notation.
fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::ParamOutOfRange(format!(
            "symmetric parameter {n} outside 1..=6"
        )));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut perms);

    let order = perms.len();
    let index_of: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut table = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            let prod: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
            table[a * order + b] = index_of[prod.as_slice()];
        }
    }
    let labels = perms
        .iter()
        .map(|p| {
            Permutation::from_images(p.clone())
                .expect("generated permutation")
                .cycle_notation()
        })
        .collect();
    finish(format!("symmetric({n})"), order, table, labels)
}

/// Q8 in the order [1, -1, i, -i, j, -j, k, -k]; index = 2·axis + sign.
fn quaternion() -> Result<FiniteGroup> {
    // Axis product table for {1, i, j, k}: result axis and extra sign.
    fn axis_mul(a: usize, b: usize) -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    }
    let n = 8;
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let (ax, sx) = (a / 2, a % 2);
            let (bx, sy) = (b / 2, b % 2);
            let (cx, extra) = axis_mul(ax, bx);
            table[a * n + b] = cx * 2 + (sx ^ sy ^ extra);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    finish("quaternion".to_string(), n, table, labels)
}

/// V4 = {e, a, b, ab}; the product is xor on indices.
fn klein4() -> Result<FiniteGroup> {
    let n = 4;
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = a ^ b;
        }
    }
    let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    finish("klein4".to_string(), n, table, labels)
}
