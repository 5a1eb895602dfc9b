use std::collections::HashMap;

use super::OrderError;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    generators: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self, OrderError> {
        let n = table.len();
        let bad = |msg: String| Err(OrderError::InvalidGroup(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not an n×n array of indices below n".into());
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        else {
            return bad("no two-sided identity".into());
        };
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return bad(format!("element {a} has no inverse"));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= n) {
            return bad("generator index out of range".into());
        }
        Ok(Self {
            table,
            identity,
            generators,
        })
    }

    /// Group generated by permutations of `0..degree`; element 0 is the
    /// identity and elements are numbered in breadth-first order. Returns the
    /// group and the permutation of each element.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>), OrderError> {
        let degree = gens.first().map_or(0, Vec::len);
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id];
        let mut pos: HashMap<Vec<usize>, usize> = HashMap::new();
        pos.insert(elems[0].clone(), 0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                if g.len() != degree {
                    return Err(OrderError::InvalidGroup("permutations of different degrees".into()));
                }
                let y = compose(g, &x);
                if !pos.contains_key(&y) {
                    pos.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[a][b] = pos[&compose(&elems[a], &elems[b])];
            }
        }
        let generators = gens.iter().map(|g| pos[g]).collect();
        Ok((Self::new(table, generators)?, elems))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let generators = if n > 1 { vec![1] } else { vec![] };
        Self::new(table, generators).expect("cyclic table is a group")
    }

    /// Symmetric group on `degree` points, generated by a transposition and
    /// an `n`-cycle.
    pub fn symmetric(degree: usize) -> (Self, Vec<Vec<usize>>) {
        if degree <= 1 {
            return Self::from_permutations(&[vec![0; degree].iter().enumerate().map(|(i, _)| i).collect()])
                .expect("trivial permutation group");
        }
        let mut swap: Vec<usize> = (0..degree).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::from_permutations(&[swap, cycle]).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated group")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}
