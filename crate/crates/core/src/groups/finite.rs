use std::fmt;

use crate::error::{Error, Result};

/// Finite group given by its multiplication table. Element `i * j` is
/// `table[i][j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupAxiom("empty multiplication table".into()));
        }
        if labels.len() != n {
            return Err(Error::GroupAxiom(format!(
                "{} labels for a table of order {n}",
                labels.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::GroupAxiom(format!("entry {bad} in row {i} is out of range")));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::GroupAxiom(format!("duplicate label '{l}'")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::GroupAxiom(format!(
                            "({0}{1}){2} != {0}({1}{2})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::GroupAxiom("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::GroupAxiom(format!("'{}' has no inverse", labels[a])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// Table with default labels `0, 1, ...` (the identity keeps its index).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::new(labels, table)
    }

    fn trusted(labels: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a))
            .expect("builtin group has an identity");
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).expect("inverse"))
            .collect();
        FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Cyclic group of order `n` with labels `1, g, g^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::trusted(labels, table)
    }

    /// Klein four group `{1, g, h, gh}`.
    pub fn klein_four() -> Self {
        let labels = ["1", "g", "h", "gh"].map(String::from).to_vec();
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::trusted(labels, table)
    }

    /// Symmetric group on `n` letters; elements in lexicographic order of their
    /// one-line notation, product `(a b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::Domain(format!("Sym:{n} is outside the supported range 1..=5")));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |q: &Vec<usize>| perms.iter().position(|p| p == q).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&(0..n).map(|i| a[b[i]]).collect()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
            .collect();
        Ok(Self::trusted(labels, table))
    }

    /// `Z2`, `Z2xZ2`, `Zn:k`, `Sym:n`.
    pub fn builtin(name: &str) -> Result<Self> {
        let parse_n = |s: &str| {
            s.parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Parse(format!("bad group order in '{name}'")))
        };
        match name {
            "Z2" => Ok(Self::cyclic(2)),
            "Z2xZ2" => Ok(Self::klein_four()),
            _ => {
                if let Some(n) = name.strip_prefix("Zn:") {
                    Ok(Self::cyclic(parse_n(n)?))
                } else if let Some(n) = name.strip_prefix("Sym:") {
                    Self::symmetric(parse_n(n)?)
                } else {
                    Err(Error::Parse(format!("unknown builtin group '{name}'")))
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a b a^-1`
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Schema(format!("unknown group element '{label}'")))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `map` (indexed by elements of `self`) is a homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&x| x < target.order())
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}, {:?})", self.order(), self.labels)
    }
}
